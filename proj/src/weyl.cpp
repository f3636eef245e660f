#include "foldlie/weyl.hpp"

#include <cstdlib>
#include <deque>
#include <set>
#include <stdexcept>

#include "foldlie/sampling.hpp"

namespace foldlie {

namespace {

constexpr std::size_t kDefaultLimit = 10000;
constexpr std::size_t kHardLimit = 60000;

std::string vec_str(const RatVector& v) {
  std::string s = "(";
  for (int i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v(i).str();
  return s + ")";
}

bool is_regular(const RootSystem& rs, const RatVector& t) {
  for (const auto& r : rs.positive_roots())
    if (rs.inner(r, t).is_zero()) return false;
  return true;
}

}  // namespace

int WeylGroup::index_of(const RatMatrix& m) const {
  auto it = lookup_.find(m);
  return it == lookup_.end() ? -1 : it->second;
}

int WeylGroup::multiply(int i, int j) const {
  return index_of(RatMatrix(matrix(i) * matrix(j)));
}

int WeylGroup::inverse(int i) const {
  const auto& w = elements.at(i);
  RatMatrix m = identity(dim());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it) m = RatMatrix(m * generators[*it]);
  return index_of(m);
}

std::vector<int> WeylGroup::reflections() const {
  std::vector<int> out;
  for (const auto& r : root.positive_roots()) out.push_back(index_of(reflection_matrix(root, r)));
  return out;
}

void WeylGroup::index_elements() {
  lookup_.clear();
  for (std::size_t i = 0; i < elements.size(); ++i) lookup_.emplace(elements[i].matrix, static_cast<int>(i));
}

RatMatrix reflection_matrix(const RootSystem& rs, const RatVector& root) {
  const Rat rr = rs.inner(root, root);
  if (rr.is_zero()) throw std::invalid_argument("reflection_matrix: null vector");
  RatMatrix row = (root.transpose() * rs.gram) * (Rat(2) / rr);
  return RatMatrix(identity(rs.ambient_dim) - root * row);
}

bool large_enumeration_enabled() {
  const char* v = std::getenv("FOLDLIE_ENABLE_E6");
  return v != nullptr && std::string(v) == "1";
}

WeylGroup generate_weyl(const RootSystem& r) {
  const long expected = r.type.weyl_order();
  const std::size_t limit = large_enumeration_enabled() ? kHardLimit : kDefaultLimit;
  if (expected > static_cast<long>(limit))
    throw std::length_error("generate_weyl: " + r.type.str() + " has order " + std::to_string(expected) +
                            (large_enumeration_enabled() ? " beyond the enumeration limit"
                                                         : "; set FOLDLIE_ENABLE_E6=1 to enumerate"));
  WeylGroup g;
  g.root = r;
  const int n = r.ambient_dim;
  std::vector<RatVector> alpha;
  std::vector<RatMatrix> coeff;
  for (const auto& a : r.simple_roots) {
    g.generators.push_back(reflection_matrix(r, a));
    alpha.push_back(a);
    coeff.push_back(RatMatrix((a.transpose() * r.gram) * (Rat(2) / r.inner(a, a))));
  }
  std::unordered_map<RatMatrix, int, MatrixHash, MatrixEqual> seen;
  g.elements.push_back({identity(n), {}});
  seen.emplace(g.elements[0].matrix, 0);
  std::deque<int> queue{0};
  while (!queue.empty()) {
    const int cur = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < g.generators.size(); ++k) {
      // s_k w = w - a_k (c_k w)
      const RatMatrix& w = g.elements[cur].matrix;
      RatMatrix next = w - alpha[k] * RatMatrix(coeff[k] * w);
      if (seen.count(next)) continue;
      std::vector<int> word{static_cast<int>(k)};
      word.insert(word.end(), g.elements[cur].word.begin(), g.elements[cur].word.end());
      const int idx = static_cast<int>(g.elements.size());
      seen.emplace(next, idx);
      g.elements.push_back({std::move(next), std::move(word)});
      queue.push_back(idx);
      if (g.elements.size() > limit) throw std::length_error("generate_weyl: enumeration limit exceeded");
    }
  }
  g.index_elements();
  return g;
}

RatMatrix FoldedWeyl::restrict(const RatMatrix& w) const {
  return RatMatrix(left_inverse * RatMatrix(w * basis));
}

int FoldedWeyl::embed(int folded_index) const {
  for (std::size_t k = 0; k < restriction.size(); ++k)
    if (restriction[k] == folded_index) return fixed_in_ambient[k];
  return -1;
}

FoldedWeyl commutant_fixed_subgroup(const WeylGroup& wh, const RatMatrix& a, const RootSystem& folded) {
  if (a.rows() != wh.dim() || a.cols() != wh.dim()) throw std::invalid_argument("commutant_fixed_subgroup: size mismatch");
  const auto a_inv = inverse(a);
  if (!a_inv) throw std::invalid_argument("commutant_fixed_subgroup: singular automorphism");
  for (const auto& s : wh.generators)
    if (wh.index_of(RatMatrix(a * s * *a_inv)) < 0)
      throw std::invalid_argument("commutant_fixed_subgroup: automorphism does not normalize the group");

  FoldedWeyl fw;
  fw.basis = folded.simple_matrix();
  const auto gram_inv = inverse(RatMatrix(fw.basis.transpose() * fw.basis));
  if (!gram_inv) throw std::invalid_argument("commutant_fixed_subgroup: folded simple roots are dependent");
  fw.left_inverse = RatMatrix(*gram_inv * fw.basis.transpose());
  for (const auto& b : folded.simple_roots)
    if (RatVector(a * b) != b) throw std::invalid_argument("commutant_fixed_subgroup: folded roots not fixed");

  fw.fixed.root = wh.root;
  fw.fixed.generators = wh.generators;
  for (std::size_t i = 0; i < wh.order(); ++i) {
    const RatMatrix& w = wh.elements[i].matrix;
    if (RatMatrix(a * w) == RatMatrix(w * a)) {
      fw.fixed.elements.push_back(wh.elements[i]);
      fw.fixed_in_ambient.push_back(static_cast<int>(i));
    }
  }
  fw.fixed.index_elements();

  fw.folded = generate_weyl(intrinsic(folded));
  std::set<int> hit;
  bool ok = true;
  for (const auto& e : fw.fixed.elements) {
    // w must preserve the fixed subspace for the restriction to make sense
    RatMatrix wb = e.matrix * fw.basis;
    RatMatrix r = fw.restrict(e.matrix);
    if (RatMatrix(fw.basis * r) != wb) ok = false;
    const int idx = fw.folded.index_of(r);
    fw.restriction.push_back(idx);
    if (idx < 0) ok = false;
    else hit.insert(idx);
  }
  ok = ok && hit.size() == fw.fixed.order() && hit.size() == fw.folded.order();
  fw.isomorphism_verified = ok;
  return fw;
}

FoldedWeyl commutant_fixed_subgroup(const WeylGroup& wh, const FoldingDatum& fd) {
  fd.validate();
  return commutant_fixed_subgroup(wh, fd.aut.matrix(), fold_invariants(fd));
}

WeylElement folded_reflection(const WeylGroup& wh, const std::vector<int>& orbit) {
  const RootSystem& rs = wh.root;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (std::size_t j = i + 1; j < orbit.size(); ++j)
      if (!rs.inner(rs.simple_roots.at(orbit[i]), rs.simple_roots.at(orbit[j])).is_zero())
        throw std::invalid_argument("folded_reflection: orbit roots are not orthogonal");
  RatMatrix m = identity(wh.dim());
  for (int i : orbit) m = RatMatrix(m * wh.generators.at(i));
  const int idx = wh.index_of(m);
  if (idx < 0) throw std::logic_error("folded_reflection: product not in the group");
  return wh.elements[idx];
}

MembershipResult orbit_regular_membership(const WeylGroup& wh, const FoldedWeyl& fw, const RatMatrix& a,
                                          const RatVector& t, int w) {
  if (RatVector(a * t) != t) throw std::invalid_argument("orbit_regular_membership: t is not fixed by the automorphism");
  const RatVector wt = wh.matrix(w) * t;
  if (RatVector(a * wt) != wt) throw std::invalid_argument("orbit_regular_membership: w t is not fixed by the automorphism");
  MembershipResult res;
  auto o1 = weyl_orbit(fw.fixed, t);
  auto o2 = weyl_orbit(fw.fixed, wt);
  std::set<RatVector, VectorLess> s1(o1.begin(), o1.end()), s2(o2.begin(), o2.end());
  res.orbits_equal = s1 == s2;
  res.regular = is_regular(wh.root, t);
  if (res.regular) {
    const RatMatrix& m = wh.matrix(w);
    const bool commutes = RatMatrix(a * m) == RatMatrix(m * a);
    res.restricted = fw.restrict(m);
    res.certified = commutes && fw.folded.index_of(res.restricted) >= 0;
  }
  return res;
}

RatVector sl_diag_to_coroot(const std::vector<Rat>& diag) {
  Rat total(0);
  for (const auto& x : diag) total += x;
  if (!total.is_zero()) throw std::invalid_argument("sl_diag_to_coroot: trace is not zero");
  const int n = static_cast<int>(diag.size()) - 1;
  RatVector c(n);
  Rat acc(0);
  for (int k = 0; k < n; ++k) {
    acc += diag[k];
    c(k) = acc;
  }
  return c;
}

std::vector<RatVector> weyl_orbit(const WeylGroup& g, const RatVector& v) {
  std::set<RatVector, VectorLess> seen;
  std::vector<RatVector> out;
  for (const auto& e : g.elements) {
    RatVector x = e.matrix * v;
    if (seen.insert(x).second) out.push_back(std::move(x));
  }
  return out;
}

RatVector to_dominant(const WeylGroup& g, const RatVector& v) {
  RatVector x = v;
  const RootSystem& rs = g.root;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rs.simple_roots.size(); ++i) {
      if (rs.inner(rs.simple_roots[i], x).sign() < 0) {
        x = g.generators[i] * x;
        moved = true;
      }
    }
  }
  return x;
}

Report quotient_invariants_iso_check(const FoldingDatum& fd, int sample_count, unsigned long seed) {
  Report rep;
  rep.check = "quotient_invariants_iso:" + fd.homogeneous.type.str() + "/" + std::to_string(fd.aut.order);
  WeylGroup wh = generate_weyl(fd.homogeneous);
  FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
  rep.expect(fw.isomorphism_verified, "commutant_fixed_subgroup", fd.homogeneous.type.str(), "isomorphism", "mismatch");
  const RatMatrix a = fd.aut.matrix();
  const RootSystem& rs = fd.homogeneous;
  Rng rng(seed);
  auto random_fixed = [&]() { return RatVector(fw.basis * random_vector(rng, static_cast<int>(fw.basis.cols()))); };

  for (int s = 0; s < sample_count; ++s) {
    // Injectivity: t' in W_h t iff t' in W t, for t, t' in the fixed subspace.
    const RatVector t = random_fixed();
    // The dominant representative is a complete invariant of a W_h-orbit.
    const RatVector dom = to_dominant(wh, t);
    auto small_orbit = weyl_orbit(fw.fixed, t);
    std::set<RatVector, VectorLess> small(small_orbit.begin(), small_orbit.end());
    std::vector<RatVector> candidates{
        RatVector(fw.fixed.matrix(random_index(rng, fw.fixed.order())) * t),
        random_fixed(),
    };
    std::vector<RatVector> fixed_in_big;
    for (const auto& x : weyl_orbit(wh, t))
      if (RatVector(a * x) == x) fixed_in_big.push_back(x);
    candidates.push_back(fixed_in_big[random_index(rng, fixed_in_big.size())]);
    for (const auto& c : candidates) {
      const bool big = to_dominant(wh, c) == dom;
      const bool sm = small.count(c) > 0;
      rep.expect(big == sm, "injectivity", vec_str(t) + " vs " + vec_str(c), big ? "same W-orbit" : "distinct W-orbits",
                 sm ? "same W-orbit" : "distinct W-orbits");
    }

    // Surjectivity: a W_h-orbit stable under a meets the fixed subspace.
    const RatVector th = wh.matrix(random_index(rng, wh.order())) * random_fixed();
    const RatVector thd = to_dominant(wh, th);
    rep.expect(to_dominant(wh, RatVector(a * th)) == thd, "orbit_stable", vec_str(th));
    bool meets = false;
    for (const auto& x : weyl_orbit(wh, th))
      if (RatVector(a * x) == x) {
        meets = true;
        break;
      }
    rep.expect(meets, "surjectivity", vec_str(th), "orbit meets fixed subspace", "no fixed point");

    // A generic vector whose orbit happens to be a-stable must also meet it.
    const RatVector g = random_vector(rng, rs.ambient_dim);
    const RatVector gd = to_dominant(wh, g);
    if (to_dominant(wh, RatVector(a * g)) == gd) {
      // the dominant chamber is a-stable, so its representative is fixed
      rep.expect(RatVector(a * gd) == gd, "surjectivity_generic", vec_str(g), "fixed dominant point", vec_str(gd));
    }
  }
  return rep;
}

}  // namespace foldlie
