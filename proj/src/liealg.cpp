#include "foldlie/liealg.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "foldlie/sampling.hpp"
#include "foldlie/weyl.hpp"

namespace foldlie {

void MatrixLieAlgebra::finalize() {
  const int d = dimension();
  if (d == 0) {
    flat_ = zeros(n * n, 0);
    pivots_.clear();
    pivot_inverse_ = zeros(0, 0);
    return;
  }
  std::vector<RatVector> cols;
  for (const auto& b : basis) cols.push_back(flatten(b));
  flat_ = hstack(cols);
  RowEchelon ech = rref(RatMatrix(flat_.transpose()));
  if (static_cast<int>(ech.pivots.size()) != d) throw std::invalid_argument("MatrixLieAlgebra: dependent basis");
  pivots_ = ech.pivots;
  RatMatrix s(d, d);
  for (int i = 0; i < d; ++i) s.row(i) = flat_.row(pivots_[i]);
  pivot_inverse_ = *inverse(s);
}

std::optional<RatVector> MatrixLieAlgebra::try_coordinates(const RatMatrix& x) const {
  if (x.rows() != n || x.cols() != n) return std::nullopt;
  const RatVector flat = flatten(x);
  const int d = dimension();
  RatVector rhs(d);
  for (int i = 0; i < d; ++i) rhs(i) = flat(pivots_[i]);
  RatVector c = pivot_inverse_ * rhs;
  if (RatVector(flat_ * c) != flat) return std::nullopt;
  return c;
}

RatVector MatrixLieAlgebra::coordinates(const RatMatrix& x) const {
  auto c = try_coordinates(x);
  if (!c) throw std::invalid_argument("element is not in " + name);
  return *c;
}

RatMatrix MatrixLieAlgebra::element(const RatVector& coords) const {
  return unflatten(RatVector(flat_ * coords), n);
}

RatMatrix MatrixLieAlgebra::ad(const RatMatrix& x) const {
  const int d = dimension();
  RatMatrix m(d, d);
  for (int j = 0; j < d; ++j) m.col(j) = coordinates(bracket(x, basis[j]));
  return m;
}

bool MatrixLieAlgebra::closed_under_bracket() const {
  for (int i = 0; i < dimension(); ++i)
    for (int j = i + 1; j < dimension(); ++j)
      if (!contains(bracket(basis[i], basis[j]))) return false;
  return true;
}

RatMatrix LieAut::apply(const MatrixLieAlgebra& alg, const RatMatrix& x) const {
  return alg.element(RatVector(matrix * alg.coordinates(x)));
}

RatMatrix antidiagonal_transpose(const RatMatrix& a) {
  const int n = static_cast<int>(a.rows());
  RatMatrix t(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t(i, j) = a(n - 1 - j, n - 1 - i);
  return t;
}

RatMatrix clift(const RatMatrix& a) {
  if (a.rows() != 4 || a.cols() != 4) throw std::invalid_argument("clift: expects a 4 x 4 matrix");
  const RatMatrix left = diag({Rat(1), Rat(1), Rat(-1), Rat(-1)});
  const RatMatrix right = diag({Rat(-1), Rat(-1), Rat(1), Rat(1)});
  return RatMatrix(left * antidiagonal_transpose(a) * right);
}

MatrixLieAlgebra fixed_subalgebra(const ChevalleyData& cd, const LieAut& aut) {
  const MatrixLieAlgebra& alg = cd.algebra;
  const int d = alg.dimension();
  const int r = static_cast<int>(alg.cartan_indices.size());
  const RatMatrix shifted = aut.matrix - identity(d);
  // the lift preserves the Cartan block, so its kernel splits
  MatrixLieAlgebra sub;
  sub.name = alg.name + "^C";
  sub.n = alg.n;
  for (const auto& v : nullspace(RatMatrix(shifted.topLeftCorner(r, r)))) {
    RatVector full = RatVector::Constant(d, Rat(0));
    full.head(r) = v;
    sub.cartan_indices.push_back(sub.dimension());
    sub.basis.push_back(alg.element(full));
  }
  for (const auto& v : nullspace(RatMatrix(shifted.bottomRightCorner(d - r, d - r)))) {
    RatVector full = RatVector::Constant(d, Rat(0));
    full.tail(d - r) = v;
    sub.basis.push_back(alg.element(full));
  }
  if (!is_zero(RatMatrix(shifted.topRightCorner(r, d - r))) || !is_zero(RatMatrix(shifted.bottomLeftCorner(d - r, r))))
    throw std::logic_error("fixed_subalgebra: automorphism mixes the Cartan with root spaces");
  sub.finalize();
  return sub;
}

RatMatrix averaging_projection(const ChevalleyData& cd, const LieAut& aut, const RatMatrix& xi) {
  const MatrixLieAlgebra& alg = cd.algebra;
  RatVector x = alg.coordinates(xi);
  RatVector sum = x;
  RatVector cur = x;
  for (int k = 1; k < aut.order; ++k) {
    cur = aut.matrix * cur;
    sum += cur;
  }
  return alg.element(RatVector(sum / Rat(aut.order)));
}

RatMatrix trace_form(const MatrixLieAlgebra& alg) {
  const int d = alg.dimension();
  RatMatrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g(i, j) = trace(RatMatrix(alg.basis[i] * alg.basis[j]));
  return g;
}

RootDecomposition root_decomposition(const ChevalleyData& cd, const MatrixLieAlgebra& sub) {
  RootDecomposition out;
  std::vector<RatMatrix> torus;
  for (int i : sub.cartan_indices) torus.push_back(sub.basis[i]);
  const int k = static_cast<int>(torus.size());
  const int d = sub.dimension();
  std::vector<RatMatrix> ads;
  for (const auto& t : torus) ads.push_back(sub.ad(t));

  // candidate weights: the eigenvalues of the torus on the ambient root vectors
  std::set<RatVector, VectorLess> weights;
  for (const auto& e : cd.root_vectors) {
    RatVector w(k);
    for (int j = 0; j < k; ++j) {
      RatMatrix br = bracket(torus[j], e);
      Rat lambda(0);
      bool found = false;
      for (int a = 0; a < e.rows() && !found; ++a)
        for (int b = 0; b < e.cols() && !found; ++b)
          if (!e(a, b).is_zero()) {
            lambda = br(a, b) / e(a, b);
            found = true;
          }
      w(j) = lambda;
    }
    weights.insert(w);
  }
  auto eigenspace_dim = [&](const RatVector& w) {
    RatMatrix stacked(d * k, d);
    for (int j = 0; j < k; ++j) stacked.block(j * d, 0, d, d) = ads[j] - w(j) * identity(d);
    return static_cast<int>(nullspace(stacked).size());
  };
  const RatVector zero = RatVector::Constant(k, Rat(0));
  out.cartan_dim = eigenspace_dim(zero);
  int total = out.cartan_dim;
  for (const auto& w : weights) {
    if (w == zero) continue;
    const int dim = eigenspace_dim(w);
    if (dim == 0) continue;
    out.roots.push_back(w);
    out.root_space_dims.push_back(dim);
    total += dim;
  }
  out.spans = total == d;
  if (out.roots.empty() || k == 0) return out;

  // dual of the trace form on the torus
  RatMatrix g(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) g(a, b) = trace(RatMatrix(torus[a] * torus[b]));
  auto ginv = inverse(g);
  if (!ginv) return out;
  auto positive = [](const RatVector& v) {
    for (int i = 0; i < v.size(); ++i)
      if (!v(i).is_zero()) return v(i).sign() > 0;
    return false;
  };
  std::set<RatVector, VectorLess> pos;
  for (const auto& w : out.roots)
    if (positive(w)) pos.insert(w);
  std::vector<RatVector> simple;
  for (const auto& w : pos) {
    bool decomposable = false;
    for (const auto& a : pos)
      if (a != w && pos.count(RatVector(w - a))) decomposable = true;
    if (!decomposable) simple.push_back(w);
  }
  std::stable_sort(simple.begin(), simple.end(), [&](const RatVector& a, const RatVector& b) {
    return (a.transpose() * *ginv * a).value() < (b.transpose() * *ginv * b).value();
  });
  try {
    RootSystem rs = root_system_from_simple(*ginv, simple);
    std::set<RatVector, VectorLess> a(rs.all_roots.begin(), rs.all_roots.end()), b(out.roots.begin(), out.roots.end());
    if (a == b) out.type = rs.type;
  } catch (const std::exception&) {
  }
  return out;
}

std::vector<int> quotient_degrees(Family f, int n) {
  std::vector<int> d;
  switch (f) {
    case Family::SL:
      for (int k = 2; k <= n; ++k) d.push_back(k);
      break;
    case Family::SP:
      for (int k = 2; k <= n; k += 2) d.push_back(k);
      break;
    case Family::SO:
      if (n % 2) {
        for (int k = 2; k < n; k += 2) d.push_back(k);
      } else {
        for (int k = 2; k <= n - 2; k += 2) d.push_back(k);
        d.push_back(n / 2);
      }
      break;
  }
  return d;
}

std::vector<Rat> adjoint_quotient(const MatrixLieAlgebra& alg, const RatMatrix& m) {
  if (!alg.family) throw std::invalid_argument("adjoint_quotient: algebra has no classical family");
  if (!alg.contains(m)) throw std::invalid_argument("adjoint_quotient: matrix is not in " + alg.name);
  return adjoint_quotient<Rat>(*alg.family, m);
}

RatMatrix nilpotent_exp(const RatMatrix& nil) {
  const int n = static_cast<int>(nil.rows());
  RatMatrix sum = identity(n);
  RatMatrix term = identity(n);
  for (int k = 1; k <= n; ++k) {
    term = RatMatrix(term * nil) / Rat(k);
    if (is_zero(term)) return sum;
    sum += term;
  }
  throw std::invalid_argument("nilpotent_exp: matrix is not nilpotent");
}

RunningIdentity sl4_sp4_identity() {
  RunningIdentity id;
  id.ring = PolyRing({"u", "v"});
  const MultiPoly u = id.ring.var("u"), v = id.ring.var("v");
  auto d = [](const std::vector<MultiPoly>& entries) {
    PolyMatrix m = PolyMatrix::Constant(4, 4, MultiPoly(Rat(0)));
    for (int i = 0; i < 4; ++i) m(i, i) = entries[i];
    return m;
  };
  // u (a1 + a3) + (u + v) a2 with a_j = E_jj - E_{j+1,j+1}
  const PolyMatrix th = d({u, (u + v) - u, u - (u + v), -u});
  // b1 = diag(-1,-1,1,1) / 2, b2 = diag(0,1,0,-1)
  const PolyMatrix t = d({-u, -u + (u + v), u, u - (u + v)});
  id.homogeneous = adjoint_quotient<MultiPoly>(Family::SL, th);
  id.folded = adjoint_quotient<MultiPoly>(Family::SP, t);
  return id;
}

namespace {

struct FoldPair {
  Family family;
  int n;
  // explicit matrix model of the folded algebra when there is one
  std::optional<Family> folded_family;
  int folded_n = 0;
};

FoldPair fold_pair(const FoldingDatum& fd) {
  const DynkinType t = fd.homogeneous.type;
  if (t.series == 'A' && t.rank % 2 == 1 && fd.aut.order == 2) return {Family::SL, t.rank + 1, Family::SP, t.rank + 1};
  if (t.series == 'D' && fd.aut.order == 2) return {Family::SO, 2 * t.rank, std::nullopt, 0};
  if (t.series == 'D' && t.rank == 4 && fd.aut.order == 3) return {Family::SO, 8, std::nullopt, 0};
  throw std::invalid_argument("base_iso_check: no matrix model for " + t.str() + "/" + std::to_string(fd.aut.order));
}

PolyMatrix poly_diagonal_combination(const std::vector<RatMatrix>& mats, const std::vector<MultiPoly>& coeffs) {
  const int n = static_cast<int>(mats[0].rows());
  PolyMatrix m = PolyMatrix::Constant(n, n, MultiPoly(Rat(0)));
  for (std::size_t j = 0; j < mats.size(); ++j)
    for (int i = 0; i < n; ++i)
      if (!mats[j](i, i).is_zero()) m(i, i) += coeffs[j] * mats[j](i, i);
  return m;
}

std::string point_str(const std::vector<Rat>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? ", " : "") + p[i].str();
  return s + ")";
}

}  // namespace

RatMatrix sl_to_sp_conjugator(int n) {
  RatMatrix q = zeros(n, n);
  const int m = n / 2;
  for (int i = 0; i < m; ++i) q(i, m - 1 - i) = Rat(1);
  for (int i = m; i < n; ++i) q(i, i) = Rat(1);
  return q;
}

Report base_iso_check(const FoldingDatum& fd, int sample_count, unsigned long seed) {
  fd.validate();
  const FoldPair pair = fold_pair(fd);
  Report rep;
  rep.check = "base_iso:" + fd.homogeneous.type.str() + "/" + std::to_string(fd.aut.order);
  const ChevalleyData cd = build_chevalley(pair.family, pair.n);
  const LieAut lift = lift_graph_aut(cd, fd.aut);
  const auto orbits = fd.simple_orbits();
  const int r = static_cast<int>(orbits.size());
  const int rh = fd.homogeneous.rank();

  // basis of the fixed Cartan: orbit averages of simple coroots
  std::vector<RatMatrix> avg;
  RatMatrix avg_coords = zeros(rh, r);
  for (int j = 0; j < r; ++j) {
    RatMatrix m = zeros(pair.n, pair.n);
    for (int i : orbits[j]) {
      m += cd.coroots[i];
      avg_coords(i, j) = Rat(1, static_cast<long>(orbits[j].size()));
    }
    m /= Rat(static_cast<long>(orbits[j].size()));
    avg.push_back(m);
    rep.expect(lift.apply(cd.algebra, m) == m, "fixed_cartan", "orbit " + std::to_string(j));
  }

  std::vector<std::string> names;
  for (int j = 0; j < r; ++j) names.push_back("c" + std::to_string(j + 1));
  const PolyRing ring(names);
  const auto cs = ring.vars();
  const std::vector<int> unit_weights(r, 1);
  const PolyMatrix tpoly = poly_diagonal_combination(avg, cs);
  const std::vector<MultiPoly> restricted = adjoint_quotient<MultiPoly>(pair.family, tpoly);
  const std::vector<int> hdeg = quotient_degrees(pair.family, pair.n);

  // anti-invariant generators must vanish on the fixed Cartan
  {
    std::vector<std::string> xn;
    for (int i = 0; i < rh; ++i) xn.push_back("x" + std::to_string(i + 1));
    const PolyRing full(xn);
    const auto xs = full.vars();
    std::vector<MultiPoly> permuted(rh);
    for (int i = 0; i < rh; ++i) permuted[fd.aut.apply(i)] = xs[i];
    const auto f_full = adjoint_quotient<MultiPoly>(pair.family, poly_diagonal_combination(cd.coroots, xs));
    const auto f_twisted = adjoint_quotient<MultiPoly>(pair.family, poly_diagonal_combination(cd.coroots, permuted));
    for (std::size_t k = 0; k < f_full.size(); ++k) {
      if (f_twisted[k] == -f_full[k] && !f_full[k].is_zero())
        rep.expect(restricted[k].is_zero(), "anti_invariant_vanishes", "degree " + std::to_string(hdeg[k]), "0",
                   restricted[k].str());
    }
  }

  // folded invariants from the folded Weyl group acting on the fixed Cartan
  const WeylGroup wh = generate_weyl(fd.homogeneous);
  const FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
  rep.expect(fw.isomorphism_verified, "commutant_fixed_subgroup", fd.homogeneous.type.str());
  const RatMatrix avg_left = *inverse(RatMatrix(avg_coords.transpose() * avg_coords)) * avg_coords.transpose();
  std::vector<RatMatrix> action;
  for (const auto& e : fw.fixed.elements) action.push_back(RatMatrix(avg_left * e.matrix * avg_coords));
  const std::vector<int> fdeg = fold_invariants(fd).type.degrees();
  std::vector<MultiPoly> folded_gens;
  for (int attempt = 0; attempt < 8; ++attempt) {
    folded_gens.clear();
    RatVector ell(r);
    for (int j = 0; j < r; ++j) ell(j) = Rat((j + 2) * (j + 3 + attempt) + attempt);
    for (int deg : fdeg) {
      MultiPoly p(ring, Rat(0));
      for (const auto& w : action) {
        RatVector row = w.transpose() * ell;
        MultiPoly lin(ring, Rat(0));
        for (int j = 0; j < r; ++j) lin += cs[j] * row(j);
        p += pow(lin, deg);
      }
      folded_gens.push_back(p / Rat(static_cast<long>(action.size())));
    }
    // independence: nonzero Jacobian at a point
    // the Jacobian vanishes on mirrors, so try a few scattered points
    bool independent = false;
    for (int shift = 0; shift < 4 && !independent; ++shift) {
      RatMatrix jac(r, r);
      std::vector<Rat> pt;
      for (int j = 0; j < r; ++j) pt.push_back(Rat(2 * j * j + 5 * j + 3 + shift, 7 - j + 3 * shift));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) jac(a, b) = folded_gens[a].derivative(b).eval(pt);
      independent = !determinant(jac).is_zero();
    }
    if (independent) break;
    if (attempt == 7) rep.expect(false, "folded_generators", "Jacobian", "nonzero", "0");
  }

  std::vector<MultiPoly> surviving;
  for (const auto& f : restricted)
    if (!f.is_zero()) surviving.push_back(f);
  for (std::size_t k = 0; k < restricted.size(); ++k)
    rep.expect(in_generated_subalgebra(restricted[k], folded_gens, unit_weights), "restricted_in_folded",
               "degree " + std::to_string(hdeg[k]), "member", "not generated");
  for (std::size_t k = 0; k < folded_gens.size(); ++k)
    rep.expect(in_generated_subalgebra(folded_gens[k], surviving, unit_weights), "folded_in_restricted",
               "degree " + std::to_string(fdeg[k]), "member", "not generated");

  // explicit folded algebra
  std::optional<ChevalleyData> folded_cd;
  RatMatrix q, q_inv;
  std::vector<MultiPoly> folded_exact;
  if (pair.folded_family) {
    folded_cd = build_chevalley(*pair.folded_family, pair.folded_n);
    q = sl_to_sp_conjugator(pair.n);
    q_inv = q.transpose();
    const MatrixLieAlgebra fixed = fixed_subalgebra(cd, lift);
    rep.expect(fixed.dimension() == folded_cd->algebra.dimension(), "fixed_subalgebra_dimension", cd.algebra.name,
               std::to_string(folded_cd->algebra.dimension()), std::to_string(fixed.dimension()));
    bool inside = true;
    for (const auto& b : fixed.basis) inside = inside && folded_cd->algebra.contains(RatMatrix(q * b * q_inv));
    rep.expect(inside, "fixed_subalgebra_conjugate", cd.algebra.name, "inside " + folded_cd->algebra.name);
    PolyMatrix qt = matmul(matmul(PolyMatrix(q.cast<MultiPoly>()), tpoly), PolyMatrix(q_inv.cast<MultiPoly>()));
    folded_exact = adjoint_quotient<MultiPoly>(*pair.folded_family, qt);
    const auto gdeg = quotient_degrees(*pair.folded_family, pair.folded_n);
    for (std::size_t j = 0; j < gdeg.size(); ++j) {
      const auto it = std::find(hdeg.begin(), hdeg.end(), gdeg[j]);
      const std::size_t k = static_cast<std::size_t>(it - hdeg.begin());
      rep.expect(it != hdeg.end() && restricted[k] == folded_exact[j], "restricted_equals_folded",
                 "degree " + std::to_string(gdeg[j]), folded_exact[j].str(), it == hdeg.end() ? "missing" : restricted[k].str());
    }
  }

  if (fd.homogeneous.type == DynkinType{'A', 3}) {
    const RunningIdentity id = sl4_sp4_identity();
    const MultiPoly u = id.ring.var("u"), v = id.ring.var("v");
    rep.expect(id.homogeneous[1].is_zero(), "sigma3_vanishes", "u(a1+a3)+(u+v)a2", "0", id.homogeneous[1].str());
    rep.expect(id.homogeneous[0] == id.folded[0] && id.homogeneous[0] == -(u * u) - v * v, "sigma2_identity", "(u,v)",
               "-u^2-v^2", id.homogeneous[0].str());
    rep.expect(id.homogeneous[2] == id.folded[1] && id.homogeneous[2] == u * u * v * v, "sigma4_identity", "(u,v)",
               "u^2 v^2", id.homogeneous[2].str());
  }

  const RunningIdentity id = sl4_sp4_identity();
  Rng rng(seed);
  for (int s = 0; s < sample_count; ++s) {
    const std::vector<Rat> pt = random_point(rng, r);
    RatMatrix t = zeros(pair.n, pair.n);
    for (int j = 0; j < r; ++j) t += avg[j] * pt[j];
    const auto numeric = adjoint_quotient(cd.algebra, t);
    for (std::size_t k = 0; k < numeric.size(); ++k)
      rep.expect(numeric[k] == restricted[k].eval(pt), "symbolic_vs_numeric", point_str(pt), numeric[k].str(),
                 restricted[k].eval(pt).str());
    // invariance under a random element of the folded group
    const RatMatrix& w = action[random_index(rng, action.size())];
    RatVector moved = w * Eigen::Map<const RatVector>(pt.data(), r);
    std::vector<Rat> mp(moved.data(), moved.data() + r);
    for (std::size_t k = 0; k < restricted.size(); ++k)
      rep.expect(restricted[k].eval(mp) == restricted[k].eval(pt), "folded_weyl_invariance", point_str(pt));

    if (folded_cd) {
      // the diagram of adjoint quotients on a random element of the folded algebra
      RatVector coords = random_vector(rng, folded_cd->algebra.dimension());
      const RatMatrix x = folded_cd->algebra.element(coords);
      const RatMatrix y = q_inv * x * q;
      rep.expect(cd.algebra.contains(y) && lift.apply(cd.algebra, y) == y, "embedding_fixed", "sample " + std::to_string(s));
      const auto fh = adjoint_quotient(cd.algebra, y);
      const auto ff = adjoint_quotient(folded_cd->algebra, x);
      const auto gdeg = quotient_degrees(*pair.folded_family, pair.folded_n);
      for (std::size_t k = 0; k < fh.size(); ++k) {
        const auto it = std::find(gdeg.begin(), gdeg.end(), hdeg[k]);
        if (it == gdeg.end())
          rep.expect(fh[k].is_zero(), "odd_invariant_on_folded", "sample " + std::to_string(s), "0", fh[k].str());
        else
          rep.expect(fh[k] == ff[static_cast<std::size_t>(it - gdeg.begin())], "quotient_diagram",
                     "sample " + std::to_string(s), ff[static_cast<std::size_t>(it - gdeg.begin())].str(), fh[k].str());
      }
    }
    if (fd.homogeneous.type == DynkinType{'A', 3}) {
      const std::vector<Rat> uv = random_point(rng, 2);
      const Rat s2 = -(uv[0] * uv[0]) - uv[1] * uv[1];
      const Rat s4 = uv[0] * uv[0] * uv[1] * uv[1];
      rep.expect(id.homogeneous[0].eval(uv) == s2 && id.folded[0].eval(uv) == s2 && id.homogeneous[2].eval(uv) == s4 &&
                     id.folded[1].eval(uv) == s4 && id.homogeneous[1].eval(uv).is_zero(),
                 "identity_point", point_str(uv));
    }
  }
  return rep;
}

RestrictedInvariants restricted_invariants(const FoldingDatum& fd) {
  fd.validate();
  const FoldPair pair = fold_pair(fd);
  const ChevalleyData cd = build_chevalley(pair.family, pair.n);
  const auto orbits = fd.simple_orbits();
  std::vector<RatMatrix> avg;
  for (const auto& orbit : orbits) {
    RatMatrix m = zeros(pair.n, pair.n);
    for (int i : orbit) m += cd.coroots[i];
    avg.push_back(RatMatrix(m / Rat(static_cast<long>(orbit.size()))));
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < orbits.size(); ++j) names.push_back("c" + std::to_string(j + 1));
  RestrictedInvariants ri{PolyRing(names), quotient_degrees(pair.family, pair.n), {}};
  ri.polys = adjoint_quotient<MultiPoly>(pair.family, poly_diagonal_combination(avg, ri.ring.vars()));
  for (auto& p : ri.polys) p = p.embed(ri.ring);
  return ri;
}

}  // namespace foldlie
