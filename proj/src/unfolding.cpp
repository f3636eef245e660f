#include "foldlie/unfolding.hpp"

#include <algorithm>
#include <stdexcept>

#include "foldlie/cameral.hpp"

namespace foldlie {

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

int coxeter_number(const DynkinType& t) {
  auto d = t.degrees();
  return *std::max_element(d.begin(), d.end());
}

std::vector<Exponent> monomials_of_degree(const std::array<int, 3>& w, int d) {
  std::vector<Exponent> out;
  if (d < 0) return out;
  for (int a = d / w[0]; a >= 0; --a)
    for (int b = (d - a * w[0]) / w[1]; b >= 0; --b) {
      const int rest = d - a * w[0] - b * w[1];
      if (rest % w[2] == 0) out.push_back({a, b, rest / w[2]});
    }
  return out;
}

// Columns spanning the degree-d part of the Jacobian ideal, in the monomial basis mons.
std::vector<RatVector> ideal_part(const QuasiHomogSing& s, const std::vector<Exponent>& mons, int d) {
  std::vector<RatVector> cols;
  for (int i = 0; i < 3; ++i) {
    const MultiPoly partial = s.poly.derivative(i);
    if (partial.is_zero()) continue;
    for (const auto& m : monomials_of_degree(s.weights, d - (s.degree - s.weights[i]))) {
      MultiPoly p = MultiPoly::monomial(s.ring, m) * partial;
      RatVector v(static_cast<int>(mons.size()));
      for (std::size_t k = 0; k < mons.size(); ++k) v(static_cast<int>(k)) = p.coeff(mons[k]);
      cols.push_back(v);
    }
  }
  return cols;
}

int column_rank(const std::vector<RatVector>& cols) { return cols.empty() ? 0 : rank(hstack(cols)); }

DynkinType homogeneous_of(const DynkinType& t, int* order) {
  *order = 1;
  switch (t.series) {
    case 'A':
    case 'D':
    case 'E':
      return t;
    case 'C':
      *order = 2;
      return {'A', 2 * t.rank - 1};
    case 'B':
      *order = 2;
      return {'D', t.rank + 1};
    case 'F':
      *order = 2;
      return {'E', 6};
    case 'G':
      *order = 3;
      return {'D', 4};
  }
  throw std::invalid_argument("unknown series");
}

// Splits a tower-reduced image h = c * m with m a monomial in x, y, z.
std::optional<std::pair<Exponent, MultiPoly>> split_xyz(const MultiPoly& h) {
  std::optional<Exponent> xyz;
  MultiPoly c(h.ring());
  for (const auto& [e, coef] : h.terms()) {
    Exponent head(e.begin(), e.begin() + 3);
    if (xyz && *xyz != head) return std::nullopt;
    xyz = head;
    Exponent tail = e;
    tail[0] = tail[1] = tail[2] = 0;
    c += MultiPoly::monomial(h.ring(), tail, coef);
  }
  if (!xyz) return std::nullopt;
  return std::make_pair(*xyz, c);
}

MultiPoly root_of_unity_inverse(const AlgTower& tower, const MultiPoly& c) {
  const MultiPoly one(c.ring(), Rat(1));
  MultiPoly power = c;
  for (int e = 1; e <= 12; ++e) {
    if (power == one) {
      MultiPoly inv = one;
      for (int k = 1; k < e; ++k) inv = tower.reduce(inv * c);
      return inv;
    }
    power = tower.reduce(power * c);
  }
  throw std::logic_error("semiuniversal_family: coefficient is not a root of unity: " + c.str());
}

}  // namespace

bool QuasiHomogSing::valid() const {
  std::vector<int> w(weights.begin(), weights.end());
  if (!poly.is_weighted_homogeneous(w, degree)) return false;
  const int h = coxeter_number(type);
  return (weights[0] + weights[1] + weights[2]) * h == degree * (h + 1);
}

QuasiHomogSing singularity(const DynkinType& t) {
  if (!t.simply_laced() || !t.admissible()) throw std::invalid_argument("singularity: type " + t.str() + " is not ADE");
  QuasiHomogSing s;
  s.type = t;
  s.name = t.str();
  s.ring = PolyRing(kXYZ);
  const MultiPoly x = s.ring.var("x"), y = s.ring.var("y"), z = s.ring.var("z");
  const int n = t.rank;
  if (t.series == 'A') {
    s.poly = pow(x, n + 1) - y * z;
    if (n % 2) {
      s.weights = {1, (n + 1) / 2, (n + 1) / 2};
      s.degree = n + 1;
    } else {
      s.weights = {2, n + 1, n + 1};
      s.degree = 2 * n + 2;
    }
  } else if (t.series == 'D' && n == 4) {
    s.poly = pow(x, 3) + pow(y, 3) + z * z;
    s.weights = {2, 2, 3};
    s.degree = 6;
  } else if (t.series == 'D') {
    s.poly = pow(x, n - 1) + x * y * y + z * z;
    s.weights = {2, n - 2, n - 1};
    s.degree = 2 * (n - 1);
  } else if (n == 6) {
    s.poly = pow(x, 4) + pow(y, 3) + z * z;
    s.weights = {3, 4, 6};
    s.degree = 12;
  } else if (n == 7) {
    s.poly = pow(x, 3) * y + pow(y, 3) + z * z;
    s.weights = {4, 6, 9};
    s.degree = 18;
  } else {
    s.poly = pow(x, 5) + pow(y, 3) + z * z;
    s.weights = {6, 10, 15};
    s.degree = 30;
  }
  if (!s.valid()) throw std::logic_error("singularity: weight data inconsistent for " + t.str());
  return s;
}

std::vector<MultiPoly> jacobian_basis(const QuasiHomogSing& s) {
  const int socle = 3 * s.degree - 2 * (s.weights[0] + s.weights[1] + s.weights[2]);
  std::vector<MultiPoly> basis;
  for (int d = socle; d >= 0; --d) {
    const auto mons = monomials_of_degree(s.weights, d);
    if (mons.empty()) continue;
    std::vector<RatVector> cols = ideal_part(s, mons, d);
    int r = column_rank(cols);
    for (std::size_t k = 0; k < mons.size(); ++k) {
      RatVector unit = RatVector::Zero(static_cast<int>(mons.size()));
      unit(static_cast<int>(k)) = Rat(1);
      cols.push_back(unit);
      const int r2 = column_rank(cols);
      if (r2 > r) {
        basis.push_back(MultiPoly::monomial(s.ring, mons[k]));
        r = r2;
      } else {
        cols.pop_back();
      }
    }
  }
  if (static_cast<int>(basis.size()) != s.type.rank)
    throw std::logic_error("jacobian_basis: dimension " + std::to_string(basis.size()) + " differs from the rank");
  return basis;
}

bool in_jacobian_ideal(const QuasiHomogSing& s, const MultiPoly& p) {
  std::map<int, std::vector<std::pair<Exponent, Rat>>> parts;
  for (const auto& [e, c] : p.terms()) {
    if (e.size() > 3) throw std::invalid_argument("in_jacobian_ideal: polynomial outside C[x,y,z]");
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * s.weights[i];
    parts[d].emplace_back(e, c);
  }
  for (const auto& [d, terms] : parts) {
    const auto mons = monomials_of_degree(s.weights, d);
    RatVector target = RatVector::Zero(static_cast<int>(mons.size()));
    for (const auto& [e, c] : terms) {
      Exponent full = e;
      full.resize(3, 0);
      for (std::size_t k = 0; k < mons.size(); ++k)
        if (mons[k] == full) target(static_cast<int>(k)) = c;
    }
    auto cols = ideal_part(s, mons, d);
    const int r = column_rank(cols);
    cols.push_back(target);
    if (column_rank(cols) != r) return false;
  }
  return true;
}

WeightTable weight_convention(const DynkinType& t) {
  WeightTable w;
  int order = 1;
  w.homogeneous = homogeneous_of(t, &order);
  w.coprime = singularity(w.homogeneous).weights;
  w.factor = (w.homogeneous.series == 'A' && w.homogeneous.rank % 2 == 0) ? 1 : 2;
  for (int i = 0; i < 3; ++i) w.lie[i] = w.factor * w.coprime[i];
  return w;
}

GroupAction trivial_action() {
  GroupAction a;
  a.name = "trivial";
  PolyRing ring(kXYZ);
  a.images = ring.vars();
  return a;
}

GroupAction standard_action(const DynkinType& t, int order) {
  if (order == 1) return trivial_action();
  GroupAction a;
  a.order = order;
  if (order == 3 && t == DynkinType{'D', 4}) {
    a.name = "(mu x, mu^2 y, z)";
    a.tower = AlgTower::cube_root_of_unity("mu");
    PolyRing ring({"x", "y", "z", "mu"});
    const MultiPoly mu = ring.var("mu");
    a.images = {mu * ring.var("x"), a.tower.reduce(mu * mu) * ring.var("y"), ring.var("z")};
    return a;
  }
  if (order != 2) throw std::invalid_argument("standard_action: unsupported order " + std::to_string(order));
  PolyRing ring(kXYZ);
  const MultiPoly x = ring.var("x"), y = ring.var("y"), z = ring.var("z");
  if (t.series == 'A' && t.rank % 2 == 1) {
    a.name = "(-x, z, y)";
    a.images = {-x, z, y};
  } else if (t == DynkinType{'D', 4}) {
    a.name = "(y, x, -z)";
    a.images = {y, x, -z};
  } else if (t.series == 'D') {
    a.name = "(x, -y, -z)";
    a.images = {x, -y, -z};
  } else if (t == DynkinType{'E', 6}) {
    a.name = "(-x, y, -z)";
    a.images = {-x, y, -z};
  } else {
    throw std::invalid_argument("standard_action: no involution implemented for " + t.str());
  }
  return a;
}

std::vector<int> DeformationFamily::ring_weights() const {
  std::vector<int> w(sing.weights.begin(), sing.weights.end());
  w.insert(w.end(), base_weights.begin(), base_weights.end());
  w.resize(ring.size(), 0);
  return w;
}

MultiPoly DeformationFamily::act(const MultiPoly& p) const {
  std::map<std::string, MultiPoly> m;
  for (int i = 0; i < 3; ++i) m[kXYZ[i]] = coordinate_images[i];
  for (std::size_t j = 0; j < b_names.size(); ++j) m[b_names[j]] = b_images[j];
  return action.tower.reduce(p.embed(ring).substitute(m));
}

DeformationFamily semiuniversal_family(const QuasiHomogSing& s, const GroupAction& action) {
  DeformationFamily fam;
  fam.sing = s;
  fam.action = action;
  fam.basis = jacobian_basis(s);
  for (const auto& g : fam.basis) {
    const int w = s.degree - g.weighted_degree({s.weights[0], s.weights[1], s.weights[2]});
    std::string name = "b" + std::to_string(w);
    while (std::find(fam.b_names.begin(), fam.b_names.end(), name) != fam.b_names.end()) name += "t";
    fam.b_names.push_back(name);
    fam.base_weights.push_back(w);
  }
  std::vector<std::string> names = kXYZ;
  names.insert(names.end(), fam.b_names.begin(), fam.b_names.end());
  for (const auto& g : action.tower.generators()) names.push_back(g.name);
  fam.ring = PolyRing(names);
  const AlgTower& tower = action.tower;

  fam.poly = s.poly.embed(fam.ring);
  for (std::size_t j = 0; j < fam.basis.size(); ++j) fam.poly += fam.ring.var(fam.b_names[j]) * fam.basis[j].embed(fam.ring);

  std::map<std::string, MultiPoly> on_xyz;
  for (int i = 0; i < 3; ++i) {
    fam.coordinate_images.push_back(action.images.at(i).embed(fam.ring));
    on_xyz[kXYZ[i]] = fam.coordinate_images[i];
  }
  const MultiPoly f = s.poly.embed(fam.ring);
  if (tower.reduce(f.substitute(on_xyz)) != f)
    throw std::invalid_argument("semiuniversal_family: action " + action.name + " does not preserve f");
  {
    std::vector<MultiPoly> cur = fam.ring.vars();
    cur.resize(3);
    for (int k = 0; k < action.order; ++k) {
      std::vector<MultiPoly> next;
      for (int i = 0; i < 3; ++i) next.push_back(tower.reduce(fam.coordinate_images[i].substitute(
                                      {{"x", cur[0]}, {"y", cur[1]}, {"z", cur[2]}})));
      cur = next;
    }
    for (int i = 0; i < 3; ++i)
      if (cur[i] != fam.ring.var(i)) throw std::invalid_argument("semiuniversal_family: action order mismatch");
  }

  // g_j o a = c_j g_{p(j)} forces b_j -> b_{p(j)} / c_j
  const int r = static_cast<int>(fam.basis.size());
  std::vector<int> perm(r, -1);
  std::vector<MultiPoly> coef(r);
  for (int j = 0; j < r; ++j) {
    MultiPoly h = tower.reduce(fam.basis[j].embed(fam.ring).substitute(on_xyz));
    auto split = split_xyz(h);
    if (!split) throw std::logic_error("semiuniversal_family: action does not map basis monomials to monomials");
    for (int k = 0; k < r; ++k) {
      auto head = split_xyz(fam.basis[k].embed(fam.ring));
      if (head && head->first == split->first) perm[j] = k;
    }
    if (perm[j] < 0) throw std::logic_error("semiuniversal_family: action does not permute the Jacobian basis");
    coef[j] = split->second;
  }
  for (int j = 0; j < r; ++j)
    fam.b_images.push_back(tower.reduce(root_of_unity_inverse(tower, coef[j]) * fam.ring.var(fam.b_names[perm[j]])));
  if (fam.act(fam.poly) != fam.poly) throw std::logic_error("semiuniversal_family: extended action moves the family");

  const MultiPoly one(fam.ring, Rat(1));
  for (int j = 0; j < r; ++j) {
    const std::string& bj = fam.b_names[j];
    if (perm[j] == j && coef[j] == one) {
      fam.invariant_names.push_back(bj);
      fam.invariant_weights.push_back(fam.base_weights[j]);
    } else if (perm[j] != j && perm[perm[j]] == j && coef[j] == one && coef[perm[j]] == one) {
      if (j < perm[j]) {
        fam.invariant_names.push_back(bj);
        fam.invariant_weights.push_back(fam.base_weights[j]);
      } else {
        fam.restriction[bj] = fam.ring.var(fam.b_names[perm[j]]);
      }
    } else {
      fam.restriction[bj] = MultiPoly(fam.ring);
    }
  }
  fam.invariant_poly = fam.poly.substitute(fam.restriction);
  return fam;
}

ThreefoldFamily threefold_family(const DynkinType& folded) {
  ThreefoldFamily tf;
  tf.folded = folded;
  tf.name = folded.str();
  int order = 1;
  const DynkinType homog = homogeneous_of(folded, &order);
  tf.deformation = semiuniversal_family(singularity(homog), standard_action(homog, order));
  tf.weights = weight_convention(folded);
  tf.coordinate_twists = tf.weights.lie;
  for (int w : tf.deformation.invariant_weights) tf.base_twists.push_back(tf.weights.factor * w);
  return tf;
}

FixedLocus fixed_locus(const ThreefoldFamily& tf) {
  const DeformationFamily& fam = tf.deformation;
  std::vector<std::string> names = fam.ring.names();
  names.push_back("alpha");
  PolyRing ring(names);
  const MultiPoly alpha = ring.var("alpha"), zero(ring);
  FixedLocus fl;
  std::vector<std::vector<MultiPoly>> transverse;
  int slot = -1;
  if (tf.folded == DynkinType{'C', 2}) {
    fl.point = {zero, alpha, alpha};
    transverse = {{ring.var("x"), zero, zero}, {zero, ring.var("y"), -ring.var("y")}};
    slot = 1;
  } else if (tf.folded == DynkinType{'G', 2}) {
    fl.point = {zero, zero, alpha};
    transverse = {{ring.var("x"), zero, zero}, {zero, ring.var("y"), zero}};
    slot = 2;
  } else {
    throw std::invalid_argument("fixed_locus: implemented for C2 and G2, got " + tf.name);
  }
  auto act_on = [&](const std::vector<MultiPoly>& p) {
    std::map<std::string, MultiPoly> m{{"x", p[0]}, {"y", p[1]}, {"z", p[2]}};
    std::vector<MultiPoly> out;
    for (int i = 0; i < 3; ++i) out.push_back(fam.action.tower.reduce(fam.coordinate_images[i].embed(ring).substitute(m)));
    return out;
  };
  fl.point_is_fixed = act_on(fl.point) == fl.point;
  fl.transverse_directions_moved = true;
  for (const auto& d : transverse)
    if (act_on(d) == d) fl.transverse_directions_moved = false;
  fl.equation = fam.invariant_poly.embed(ring).substitute({{"x", fl.point[0]}, {"y", fl.point[1]}, {"z", fl.point[2]}});
  if (fl.equation.degree_in("alpha") != 2) throw std::logic_error("fixed_locus: expected a double cover");
  fl.m = tf.coordinate_twists[slot] / 2;
  return fl;
}

int fixed_locus_genus(const ThreefoldFamily& tf, int g) {
  if (g < 2) throw std::invalid_argument("fixed_locus_genus: genus must be at least 2");
  const FixedLocus fl = fixed_locus(tf);
  if (!fl.point_is_fixed) throw std::logic_error("fixed_locus_genus: substitution is not fixed by the action");
  // alpha^2 = s with s a section of K^{2m}: simple branching at deg K^{2m} points
  const int branch = 2 * fl.m * (2 * g - 2);
  return riemann_hurwitz_genus(2, g, std::vector<std::vector<int>>(branch, std::vector<int>{2}));
}

ExceptionalDivisor exceptional_divisor(int order) {
  if (order != 2 && order != 3) throw std::invalid_argument("exceptional_divisor: order must be 2 or 3");
  ExceptionalDivisor ed;
  // transversal slice C^2 / (Z/k): invariants n1 = u^k, n2 = v^k, n3 = uv with n3^k = n1 n2
  PolyRing r3({"n1", "n2", "n3"});
  const MultiPoly rel = pow(r3.var("n3"), order) - r3.var("n1") * r3.var("n2");
  MultiPoly cone = rel.homogeneous_part({1, 1, 1}, 2);
  RatMatrix q = zeros(3, 3);
  for (const auto& [e, c] : cone.terms()) {
    std::vector<int> idx;
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < e[i]; ++k) idx.push_back(i);
    if (idx[0] == idx[1]) {
      q(idx[0], idx[0]) += c;
    } else {
      q(idx[0], idx[1]) += c / Rat(2);
      q(idx[1], idx[0]) += c / Rat(2);
    }
  }
  ed.tangent_cone_rank = rank(q);
  // rank 3: smooth conic; rank 2: a pair of lines
  ed.components = ed.tangent_cone_rank == 2 ? 2 : 1;
  if (order == 3) {
    ThreefoldFamily tf = threefold_family(DynkinType{'G', 2});
    const DeformationFamily& fam = tf.deformation;
    const MultiPoly x = fam.ring.var("x"), y = fam.ring.var("y"), z = fam.ring.var("z");
    const MultiPoly n1 = pow(x, 3), n2 = pow(y, 3), n3 = x * y, n4 = z;
    const MultiPoly b2 = fam.ring.var("b2"), b6 = fam.ring.var("b6");
    ed.residuals.push_back(n1 + n2 + n4 * n4 + b2 * n3 + b6 - fam.invariant_poly);
    ed.residuals.push_back(pow(n3, 3) - n1 * n2);
    for (const auto& nu : {n1, n2, n3, n4}) ed.residuals.push_back(fam.act(nu) - nu);
  }
  return ed;
}

int exceptional_divisor_components(int order) { return exceptional_divisor(order).components; }

}  // namespace foldlie
