#include "foldlie/hitchin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "foldlie/liealg.hpp"
#include "foldlie/unfolding.hpp"

namespace foldlie {

namespace {

void require_genus(int g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2, got " + std::to_string(g));
}

int sum_dims(const std::vector<int>& degrees, int g) {
  int s = 0;
  for (int d : degrees) s += riemann_roch_dim(d, g);
  return s;
}

// Minimal generators among the restricted invariants, by degree.
std::vector<int> surviving_from_restriction(const FoldingDatum& fd) {
  const RestrictedInvariants ri = restricted_invariants(fd);
  std::vector<int> order(ri.polys.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ri.degrees[a] < ri.degrees[b]; });
  const std::vector<int> unit(ri.ring.size(), 1);
  std::vector<MultiPoly> chosen;
  std::vector<int> out;
  for (int k : order) {
    const MultiPoly& p = ri.polys[k];
    if (p.is_zero() || in_generated_subalgebra(p, chosen, unit)) continue;
    chosen.push_back(p);
    out.push_back(ri.degrees[k]);
  }
  return out;
}

}  // namespace

int riemann_roch_dim(int d, int g) {
  require_genus(g);
  if (d < 2) throw std::invalid_argument("riemann_roch_dim: degree must be at least 2");
  return (2 * d - 1) * (g - 1);
}

int HitchinBase::total() const { return std::accumulate(summand_dims.begin(), summand_dims.end(), 0); }

HitchinBase dim_base(DynkinType t, int g) {
  require_genus(g);
  if (!t.admissible()) throw std::invalid_argument("dim_base: inadmissible type " + t.str());
  HitchinBase b;
  b.group_type = t;
  b.genus = g;
  b.degrees = t.degrees();
  std::sort(b.degrees.begin(), b.degrees.end());
  for (int d : b.degrees) b.summand_dims.push_back(riemann_roch_dim(d, g));
  return b;
}

int fiber_dim(DynkinType t, int g) { return dim_base(t, g).total(); }

int transversal_branch_count(DynkinType t, int g) {
  require_genus(g);
  return t.root_count() * (2 * g - 2);
}

BaseMatch folded_base_match(const FoldingDatum& fd, int g) {
  require_genus(g);
  fd.validate();
  BaseMatch m;
  m.genus = g;
  m.homogeneous = fd.homogeneous.type;
  m.folded = fold_coinvariants(fd).type;
  m.homogeneous_degrees = m.homogeneous.degrees();
  std::sort(m.homogeneous_degrees.begin(), m.homogeneous_degrees.end());
  if (fd.aut.order == 1) {
    m.surviving_degrees = m.homogeneous_degrees;
  } else if (m.homogeneous.series == 'E') {
    m.table_derived = true;
    m.surviving_degrees = m.folded.degrees();
    std::sort(m.surviving_degrees.begin(), m.surviving_degrees.end());
    std::vector<int> rest = m.homogeneous_degrees;
    for (int d : m.surviving_degrees) {
      auto it = std::find(rest.begin(), rest.end(), d);
      if (it == rest.end()) throw std::logic_error("folded_base_match: table degrees are not a sub-multiset");
      rest.erase(it);
    }
  } else {
    m.surviving_degrees = surviving_from_restriction(fd);
  }
  m.homogeneous_total = sum_dims(m.homogeneous_degrees, g);
  m.invariant_total = sum_dims(m.surviving_degrees, g);
  m.folded_total = fiber_dim(m.folded, g);
  return m;
}

IsogenyDims isogeny_dimensions(const FoldingDatum& fd, int g) {
  require_genus(g);
  fd.validate();
  IsogenyDims d;
  d.genus = g;
  d.aut_order = fd.aut.order;
  d.folded = fold_coinvariants(fd).type;
  d.dim_B = fiber_dim(d.folded, g);
  const DynkinType h = fd.homogeneous.type;
  if (d.aut_order > 1) {
    const bool supported = (h == DynkinType{'A', 3} && d.aut_order == 2) || (h == DynkinType{'D', 4} && d.aut_order == 3);
    if (!supported)
      throw std::invalid_argument("isogeny_dimensions: no fixed-locus genus for " + h.str() + "/" +
                                  std::to_string(d.aut_order));
    d.genus_fixed_locus = fixed_locus_genus(threefold_family(d.folded), g);
  }
  d.dim_J2Z = d.dim_B + (d.aut_order - 1) * d.genus_fixed_locus;
  d.b3 = 2 * d.dim_J2Z;
  return d;
}

std::vector<long> poincare_polynomial(const WeylGroup& w) {
  std::vector<long> p;
  for (const auto& e : w.elements) {
    const std::size_t len = e.word.size();
    if (p.size() <= len) p.resize(len + 1, 0);
    ++p[len];
  }
  return p;
}

std::vector<int> degrees_from_poincare(const std::vector<long>& p, int rank) {
  // q = p (1 - t)^rank = prod (1 - t^{d_i})
  std::vector<long> q = p;
  for (int k = 0; k < rank; ++k) {
    std::vector<long> next(q.size() + 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      next[i] += q[i];
      next[i + 1] -= q[i];
    }
    q = next;
  }
  std::vector<int> degrees;
  while (true) {
    while (!q.empty() && q.back() == 0) q.pop_back();
    std::size_t k = 1;
    while (k < q.size() && q[k] == 0) ++k;
    if (k >= q.size()) break;
    if (q[k] > 0) throw std::invalid_argument("degrees_from_poincare: not a product of cyclotomic factors");
    // divide by (1 - t^k)
    std::vector<long> r(q.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = q[i] + (i >= k ? r[i - k] : 0);
    for (std::size_t i = q.size() - k; i < q.size(); ++i)
      if (r[i] != 0) throw std::invalid_argument("degrees_from_poincare: inexact division");
    r.resize(q.size() - k);
    q = r;
    degrees.push_back(static_cast<int>(k));
  }
  if (q != std::vector<long>{1} || static_cast<int>(degrees.size()) != rank)
    throw std::invalid_argument("degrees_from_poincare: rank mismatch");
  return degrees;
}

}  // namespace foldlie
