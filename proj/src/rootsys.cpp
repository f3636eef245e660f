#include "foldlie/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace foldlie {

namespace {

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

void link(RatMatrix& g, int i, int j, const Rat& v) {
  g(i, j) = v;
  g(j, i) = v;
}

}  // namespace

DynkinType DynkinType::parse(const std::string& s) {
  if (s.size() < 2 || !std::isalpha(static_cast<unsigned char>(s[0]))) throw std::invalid_argument("bad Dynkin type '" + s + "'");
  DynkinType t;
  t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  try {
    std::size_t used = 0;
    t.rank = std::stoi(s.substr(1), &used);
    if (used != s.size() - 1) throw std::invalid_argument(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad Dynkin type '" + s + "'");
  }
  if (!t.admissible()) throw std::invalid_argument("inadmissible Dynkin type '" + s + "'");
  return t;
}

bool DynkinType::admissible() const {
  switch (series) {
    case 'A': return rank >= 1;
    case 'B':
    case 'C': return rank >= 2;
    case 'D': return rank >= 4;
    case 'E': return rank >= 6 && rank <= 8;
    case 'F': return rank == 4;
    case 'G': return rank == 2;
    default: return false;
  }
}

int DynkinType::root_count() const {
  switch (series) {
    case 'A': return rank * (rank + 1);
    case 'B':
    case 'C': return 2 * rank * rank;
    case 'D': return 2 * rank * (rank - 1);
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
  }
  return 0;
}

long DynkinType::weyl_order() const {
  switch (series) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C': return (1L << rank) * factorial(rank);
    case 'D': return (1L << (rank - 1)) * factorial(rank);
    case 'E': return rank == 6 ? 51840L : rank == 7 ? 2903040L : 696729600L;
    case 'F': return 1152;
    case 'G': return 12;
  }
  return 0;
}

std::vector<int> DynkinType::degrees() const {
  std::vector<int> d;
  switch (series) {
    case 'A':
      for (int k = 2; k <= rank + 1; ++k) d.push_back(k);
      break;
    case 'B':
    case 'C':
      for (int k = 1; k <= rank; ++k) d.push_back(2 * k);
      break;
    case 'D':
      for (int k = 1; k < rank; ++k) d.push_back(2 * k);
      d.push_back(rank);
      std::sort(d.begin(), d.end());
      break;
    case 'E':
      if (rank == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F': d = {2, 6, 8, 12}; break;
    case 'G': d = {2, 6}; break;
  }
  return d;
}

std::vector<DynkinType> types_of_rank(int rank) {
  std::vector<DynkinType> out;
  for (char s : std::string("ABCDEFG")) {
    DynkinType t{s, rank};
    if (t.admissible()) out.push_back(t);
  }
  return out;
}

RatMatrix gram_matrix(DynkinType t) {
  if (!t.admissible()) throw std::invalid_argument("inadmissible Dynkin type " + t.str());
  const int n = t.rank;
  RatMatrix g = zeros(n, n);
  for (int i = 0; i < n; ++i) g(i, i) = 2;
  switch (t.series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(g, i, i + 1, -1);
      g(n - 1, n - 1) = 1;
      break;
    case 'C':
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 2, n - 1, -2);
      g(n - 1, n - 1) = 4;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(g, i, i + 1, -1);
      link(g, n - 3, n - 1, -1);
      break;
    case 'E':
      link(g, 0, 2, -1);
      link(g, 1, 3, -1);
      link(g, 2, 3, -1);
      for (int i = 3; i + 1 < n; ++i) link(g, i, i + 1, -1);
      break;
    case 'F':
      link(g, 0, 1, -1);
      link(g, 1, 2, -1);
      link(g, 2, 3, Rat(-1, 2));
      g(2, 2) = 1;
      g(3, 3) = 1;
      break;
    case 'G':
      link(g, 0, 1, -3);
      g(1, 1) = 6;
      break;
  }
  return g;
}

RatMatrix cartan_from_gram(const RatMatrix& g) {
  const int n = static_cast<int>(g.rows());
  RatMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Rat(2) * g(i, j) / g(j, j);
  return a;
}

RatMatrix cartan_matrix(DynkinType t) { return cartan_from_gram(gram_matrix(t)); }

bool VectorLess::operator()(const RatVector& a, const RatVector& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (int i = 0; i < a.size(); ++i)
    if (a(i) != b(i)) return a(i) < b(i);
  return false;
}

Rat RootSystem::inner(const RatVector& a, const RatVector& b) const { return (a.transpose() * gram * b)(0, 0); }

RatMatrix RootSystem::simple_gram() const {
  RatMatrix s = simple_matrix();
  return RatMatrix(s.transpose() * gram * s);
}

RatMatrix RootSystem::cartan() const { return cartan_from_gram(simple_gram()); }

RatVector RootSystem::simple_coordinates(const RatVector& v) const {
  auto x = solve(simple_matrix(), v);
  if (!x) throw std::invalid_argument("vector outside the span of the simple roots");
  return *x;
}

bool RootSystem::is_root(const RatVector& v) const {
  return std::any_of(all_roots.begin(), all_roots.end(), [&](const RatVector& r) { return r == v; });
}

bool RootSystem::is_positive(const RatVector& root) const {
  RatVector c = simple_coordinates(root);
  for (int i = 0; i < c.size(); ++i)
    if (c(i).sign() < 0) return false;
  return true;
}

std::vector<RatVector> RootSystem::positive_roots() const {
  std::vector<RatVector> out;
  for (const auto& r : all_roots)
    if (is_positive(r)) out.push_back(r);
  return out;
}

RatMatrix RootSystem::simple_matrix() const { return hstack(simple_roots); }

std::vector<RatVector> generate_roots(const RatMatrix& gram, const std::vector<RatVector>& simple) {
  std::set<RatVector, VectorLess> seen(simple.begin(), simple.end());
  std::vector<RatVector> frontier(simple.begin(), simple.end());
  std::vector<Rat> norms;
  for (const auto& a : simple) norms.push_back((a.transpose() * gram * a)(0, 0));
  while (!frontier.empty()) {
    std::vector<RatVector> next;
    for (const auto& v : frontier) {
      for (std::size_t i = 0; i < simple.size(); ++i) {
        const Rat c = Rat(2) * (simple[i].transpose() * gram * v)(0, 0) / norms[i];
        if (c.is_zero()) continue;
        RatVector w = v - simple[i] * c;
        if (seen.insert(w).second) next.push_back(w);
      }
    }
    frontier = std::move(next);
  }
  std::vector<RatVector> roots(seen.begin(), seen.end());
  RatMatrix s = hstack(simple);
  std::vector<std::pair<std::pair<int, RatVector>, RatVector>> keyed;
  for (const auto& r : roots) {
    RatVector c = *solve(s, r);
    Rat h(0);
    for (int i = 0; i < c.size(); ++i) h += c(i);
    const int height = static_cast<int>(h.to_double());
    // positives first by height, then negatives by depth
    const int key = height > 0 ? height : 1000 - height;
    keyed.push_back({{key, c}, r});
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.first != b.first.first) return a.first.first < b.first.first;
    return VectorLess{}(b.first.second, a.first.second);
  });
  std::vector<RatVector> out;
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

RootSystem build_root_system(DynkinType t) {
  RootSystem rs;
  rs.type = t;
  rs.gram = gram_matrix(t);
  rs.ambient_dim = t.rank;
  for (int i = 0; i < t.rank; ++i) {
    RatVector e = RatVector::Constant(t.rank, Rat(0));
    e(i) = 1;
    rs.simple_roots.push_back(e);
  }
  rs.all_roots = generate_roots(rs.gram, rs.simple_roots);
  if (static_cast<int>(rs.all_roots.size()) != t.root_count())
    throw std::logic_error("root count mismatch for " + t.str());
  return rs;
}

std::optional<std::pair<DynkinType, std::vector<int>>> identify_cartan(const RatMatrix& cartan) {
  const int n = static_cast<int>(cartan.rows());
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  const auto candidates = types_of_rank(n);
  for (const auto& t : candidates)
    if (cartan_matrix(t) == cartan) return std::make_pair(t, id);
  for (const auto& t : candidates) {
    const RatMatrix ref = cartan_matrix(t);
    std::vector<int> p = id;
    do {
      bool match = true;
      for (int k = 0; k < n && match; ++k)
        for (int l = 0; l < n && match; ++l) match = ref(k, l) == cartan(p[k], p[l]);
      if (match) return std::make_pair(t, p);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return std::nullopt;
}

RootSystem root_system_from_simple(const RatMatrix& gram, const std::vector<RatVector>& simple) {
  RootSystem rs;
  rs.gram = gram;
  rs.ambient_dim = static_cast<int>(gram.rows());
  rs.simple_roots = simple;
  auto id = identify_cartan(rs.cartan());
  if (!id) throw std::logic_error("simple system does not match any Dynkin type");
  rs.type = id->first;
  std::vector<RatVector> relabelled;
  for (int k : id->second) relabelled.push_back(simple[k]);
  rs.simple_roots = relabelled;
  rs.all_roots = generate_roots(gram, rs.simple_roots);
  if (static_cast<int>(rs.all_roots.size()) != rs.type.root_count())
    throw std::logic_error("root count mismatch for " + rs.type.str());
  return rs;
}

GraphAut GraphAut::identity(int rank) {
  GraphAut a;
  a.perm.resize(rank);
  std::iota(a.perm.begin(), a.perm.end(), 0);
  a.order = 1;
  return a;
}

GraphAut GraphAut::standard(DynkinType t, int order) {
  GraphAut a = identity(t.rank);
  a.order = order;
  if (order == 1) return a;
  const int n = t.rank;
  if (t.series == 'A' && order == 2 && n >= 2) {
    for (int i = 0; i < n; ++i) a.perm[i] = n - 1 - i;
  } else if (t.series == 'D' && order == 2) {
    std::swap(a.perm[n - 2], a.perm[n - 1]);
  } else if (t.series == 'D' && n == 4 && order == 3) {
    a.perm = {2, 1, 3, 0};
  } else if (t.series == 'E' && n == 6 && order == 2) {
    a.perm = {5, 1, 4, 3, 2, 0};
  } else {
    throw std::invalid_argument("no diagram automorphism of order " + std::to_string(order) + " on " + t.str());
  }
  return a;
}

RatMatrix GraphAut::matrix() const {
  const int n = static_cast<int>(perm.size());
  RatMatrix p = zeros(n, n);
  for (int i = 0; i < n; ++i) p(perm[i], i) = 1;
  return p;
}

bool GraphAut::preserves_cartan(const RatMatrix& cartan) const {
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan(perm[i], perm[j]) != cartan(i, j)) return false;
  return true;
}

int GraphAut::computed_order() const {
  std::vector<int> p = perm;
  for (int k = 1; k <= static_cast<int>(perm.size()) + 1; ++k) {
    bool id = true;
    for (std::size_t i = 0; i < p.size(); ++i) id = id && p[i] == static_cast<int>(i);
    if (id) return k;
    for (auto& x : p) x = perm[x];
  }
  return -1;
}

bool GraphAut::is_dynkin_graph_aut(const RootSystem& rs) const {
  const RatMatrix p = matrix();
  for (const auto& r : rs.all_roots) {
    const Rat v = rs.inner(RatVector(p * r), r);
    if (!v.is_zero() && v != rs.inner(r, r)) return false;
  }
  return true;
}

FoldingDatum FoldingDatum::make(DynkinType t, int order) {
  FoldingDatum fd{build_root_system(t), GraphAut::standard(t, order)};
  return fd;
}

std::vector<std::vector<int>> FoldingDatum::simple_orbits() const {
  const int n = static_cast<int>(aut.perm.size());
  std::vector<bool> done(n, false);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < n; ++i) {
    if (done[i]) continue;
    std::vector<int> orbit;
    for (int j = i; !done[j]; j = aut.apply(j)) {
      done[j] = true;
      orbit.push_back(j);
    }
    out.push_back(orbit);
  }
  return out;
}

void FoldingDatum::validate() const {
  if (static_cast<int>(aut.perm.size()) != homogeneous.rank()) throw std::invalid_argument("automorphism rank mismatch");
  if (!aut.preserves_cartan(homogeneous.cartan())) throw std::invalid_argument("automorphism does not preserve the Cartan matrix");
  if (aut.computed_order() != aut.order) throw std::invalid_argument("automorphism order mismatch");
  if (aut.order == 1) return;
  const DynkinType t = homogeneous.type;
  const bool allowed = (t.series == 'A' && t.rank % 2 == 1) || t.series == 'D' || (t.series == 'E' && t.rank == 6);
  if (!aut.is_dynkin_graph_aut(homogeneous))
    throw std::invalid_argument("not a Dynkin graph automorphism: (a(r), r) outside {0, (r, r)}");
  if (!allowed) throw std::invalid_argument("folding not defined for " + t.str());
}

std::vector<RatVector> aut_orbit(const FoldingDatum& fd, const RatVector& v) {
  const RatMatrix p = fd.aut.matrix();
  std::vector<RatVector> orbit{v};
  for (RatVector w = p * v; w != v; w = p * w) orbit.push_back(w);
  return orbit;
}

RatVector orbit_sum(const FoldingDatum& fd, const RatVector& v) {
  RatVector s = RatVector::Constant(v.size(), Rat(0));
  for (const auto& w : aut_orbit(fd, v)) s += w;
  return s;
}

RatVector orbit_average(const FoldingDatum& fd, const RatVector& v) {
  auto orbit = aut_orbit(fd, v);
  RatVector s = RatVector::Constant(v.size(), Rat(0));
  for (const auto& w : orbit) s += w;
  return s / Rat(static_cast<long>(orbit.size()));
}

namespace {

RootSystem fold_with(const FoldingDatum& fd, RatVector (*f)(const FoldingDatum&, const RatVector&)) {
  fd.validate();
  std::vector<RatVector> simple;
  for (const auto& orbit : fd.simple_orbits()) simple.push_back(f(fd, fd.homogeneous.simple_roots[orbit.front()]));
  RootSystem rs = root_system_from_simple(fd.homogeneous.gram, simple);
  std::set<RatVector, VectorLess> projected;
  for (const auto& r : fd.homogeneous.all_roots) projected.insert(f(fd, r));
  std::set<RatVector, VectorLess> generated(rs.all_roots.begin(), rs.all_roots.end());
  if (projected != generated) throw std::logic_error("folded roots are not closed under the folded Weyl group");
  return rs;
}

}  // namespace

RootSystem fold_coinvariants(const FoldingDatum& fd) { return fold_with(fd, orbit_average); }

RootSystem fold_invariants(const FoldingDatum& fd) { return fold_with(fd, orbit_sum); }

RootSystem dualize_root_system(const RootSystem& r) {
  std::vector<RatVector> simple;
  for (const auto& a : r.simple_roots) simple.push_back(a * (Rat(2) / r.inner(a, a)));
  RootSystem d = root_system_from_simple(r.gram, simple);
  std::set<RatVector, VectorLess> coroots;
  for (const auto& a : r.all_roots) coroots.insert(a * (Rat(2) / r.inner(a, a)));
  std::set<RatVector, VectorLess> generated(d.all_roots.begin(), d.all_roots.end());
  if (coroots != generated) throw std::logic_error("coroots do not form the dual root system");
  return d;
}

RootSystem intrinsic(const RootSystem& r) {
  RootSystem out;
  out.type = r.type;
  out.ambient_dim = r.rank();
  out.gram = r.simple_gram();
  for (int i = 0; i < r.rank(); ++i) {
    RatVector e = RatVector::Constant(r.rank(), Rat(0));
    e(i) = 1;
    out.simple_roots.push_back(e);
  }
  for (const auto& a : r.all_roots) out.all_roots.push_back(r.simple_coordinates(a));
  return out;
}

bool isomorphic(const RootSystem& a, const RootSystem& b) {
  if (a.rank() != b.rank()) return false;
  auto ia = identify_cartan(a.cartan());
  auto ib = identify_cartan(b.cartan());
  if (!ia || !ib) return false;
  if (ia->first == ib->first) return true;
  // B2 and C2 differ only by labelling
  auto rank2_bc = [](DynkinType t) { return t.rank == 2 && (t.series == 'B' || t.series == 'C'); };
  return rank2_bc(ia->first) && rank2_bc(ib->first);
}

DualityReport check_folding_duality(const FoldingDatum& fd) {
  DualityReport rep;
  const RootSystem co = fold_coinvariants(fd);
  const RootSystem inv = fold_invariants(fd);
  const RootSystem dual = dualize_root_system(co);
  rep.dual_of_coinvariants = dual.type;
  rep.invariants = inv.type;
  std::set<RatVector, VectorLess> targets(inv.all_roots.begin(), inv.all_roots.end());
  std::set<RatVector, VectorLess> images;
  for (const auto& a : co.all_roots) {
    RatVector c = a * (Rat(2) / co.inner(a, a));
    if (!targets.count(c)) rep.messages.push_back("coroot of a folded root is not an orbit sum");
    images.insert(c);
  }
  rep.bijection_size = static_cast<int>(images.size());
  if (images.size() != co.all_roots.size() || images != targets) rep.messages.push_back("coroot map is not a bijection");
  std::set<RatVector, VectorLess> simple_images;
  for (const auto& a : co.simple_roots) simple_images.insert(a * (Rat(2) / co.inner(a, a)));
  std::set<RatVector, VectorLess> inv_simple(inv.simple_roots.begin(), inv.simple_roots.end());
  if (simple_images != inv_simple) rep.messages.push_back("simple coroots do not map to simple orbit sums");
  if (!isomorphic(dual, inv) || dual.cartan() != inv.cartan())
    rep.messages.push_back("Cartan integers differ between the dual folded system and the invariants");
  rep.ok = rep.messages.empty();
  return rep;
}

std::pair<Lattice, Lattice> folded_lattices(const FoldingDatum& fd) {
  fd.validate();
  Lattice character;
  Lattice cocharacter;
  const RatMatrix ginv = *inverse(fd.homogeneous.gram);
  for (const auto& orbit : fd.simple_orbits()) {
    character.basis.push_back(orbit_average(fd, fd.homogeneous.simple_roots[orbit.front()]));
    RatVector s = RatVector::Constant(fd.homogeneous.ambient_dim, Rat(0));
    for (int i : orbit) s += ginv.col(i);
    cocharacter.basis.push_back(s);
  }
  character.rank = rank(hstack(character.basis));
  cocharacter.rank = rank(hstack(cocharacter.basis));
  if (character.rank != static_cast<int>(character.basis.size()) || cocharacter.rank != static_cast<int>(cocharacter.basis.size()))
    throw std::logic_error("lattice basis is not independent");
  return {character, cocharacter};
}

}  // namespace foldlie
