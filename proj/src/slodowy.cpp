#include "foldlie/slodowy.hpp"

#include <map>
#include <stdexcept>

#include "foldlie/charpoly.hpp"
#include "foldlie/sampling.hpp"

namespace foldlie {

namespace {

RatMatrix E(int n, int i, int j) {
  RatMatrix m = zeros(n, n);
  m(i, j) = Rat(1);
  return m;
}

RatMatrix inverse_or_throw(const RatMatrix& m) {
  auto inv = inverse(m);
  if (!inv) throw std::invalid_argument("singular conjugator");
  return *inv;
}

std::string point_str(const std::vector<Rat>& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? "," : "") + p[k].str();
  return s + ")";
}

std::string polys_str(const std::vector<MultiPoly>& ps) {
  std::string s;
  for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? "; " : "") + ps[k].str();
  return s;
}

// Eigenvalue of ad_h on d, if d is an eigenvector.
std::optional<Rat> ad_eigenvalue(const RatMatrix& h, const RatMatrix& d) {
  RatMatrix b = bracket(h, d);
  std::optional<Rat> mu;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) {
      if (d(i, j).is_zero()) {
        if (!b(i, j).is_zero()) return std::nullopt;
        continue;
      }
      Rat q = b(i, j) / d(i, j);
      if (mu && *mu != q) return std::nullopt;
      mu = q;
    }
  return mu;
}

// ker ad_y split into ad_h eigenspaces, highest weight last.
void fill_directions(SlodowySlice& sl, const std::string& prefix) {
  const MatrixLieAlgebra& alg = sl.algebra;
  const int d = alg.dimension();
  const RatMatrix ady = alg.ad(sl.triple.y), adh = alg.ad(sl.triple.h);
  for (int mu = 0; mu >= -4 * alg.n; mu -= 1) {
    RatMatrix stacked(2 * d, d);
    stacked.topRows(d) = ady;
    stacked.bottomRows(d) = RatMatrix(adh - Rat(mu) * identity(d));
    for (const auto& v : nullspace(stacked)) {
      sl.directions.push_back(alg.element(v));
      sl.cstar_weights.push_back(2 - mu);
      sl.param_names.push_back(prefix + std::to_string(sl.directions.size()));
    }
  }
}

const SlodowySlice& cached_sp4() {
  static const SlodowySlice s = sp4_slice();
  return s;
}

const SlodowySlice& cached_sl4() {
  static const SlodowySlice s = sl4_appendix_slice();
  return s;
}

MultiPoly coefficient_in(const MultiPoly& p, int var, int k) {
  MultiPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    const int ek = var < static_cast<int>(e.size()) ? e[var] : 0;
    if (ek != k) continue;
    Exponent f = e;
    if (var < static_cast<int>(f.size())) f[var] = 0;
    out += MultiPoly::monomial(p.ring(), f, c);
  }
  return out;
}

}  // namespace

bool Sl2Triple::valid() const {
  if (bracket(h, x) != RatMatrix(x * Rat(2))) return false;
  if (bracket(h, y) != RatMatrix(y * Rat(-2))) return false;
  if (bracket(x, y) != h) return false;
  RatMatrix p = x;
  for (int k = 1; k < x.rows(); ++k) p = RatMatrix(p * x);
  return is_zero(p);
}

RatMatrix SliceSymmetry::apply(const RatMatrix& a) const {
  if (kind == Kind::AntiTranspose) return phi_a(a);
  return conjugator * a * inverse_or_throw(conjugator);
}

RatMatrix SlodowySlice::point(const std::vector<Rat>& params) const {
  if (static_cast<int>(params.size()) != dimension())
    throw std::invalid_argument("slice: expected " + std::to_string(dimension()) + " parameters");
  RatMatrix m = triple.x;
  for (int k = 0; k < dimension(); ++k) m += directions[k] * params[k];
  return m;
}

PolyMatrix SlodowySlice::symbolic_point(const PolyRing& r) const {
  const int n = static_cast<int>(triple.x.rows());
  PolyMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      MultiPoly e(r, triple.x(i, j));
      for (int k = 0; k < dimension(); ++k)
        if (!directions[k](i, j).is_zero()) e += r.var(param_names[k]) * directions[k](i, j);
      m(i, j) = e;
    }
  return m;
}

std::optional<std::vector<Rat>> SlodowySlice::parameters(const RatMatrix& m) const {
  std::vector<RatVector> cols;
  for (const auto& d : directions) cols.push_back(flatten(d));
  auto sol = solve(hstack(cols), flatten(RatMatrix(m - triple.x)));
  if (!sol) return std::nullopt;
  return std::vector<Rat>(sol->data(), sol->data() + sol->size());
}

int centralizer_dimension(const MatrixLieAlgebra& alg, const RatMatrix& x) {
  return static_cast<int>(nullspace(alg.ad(x)).size());
}

RatMatrix phi_a(const RatMatrix& a) { return RatMatrix(-antidiagonal_transpose(a)); }

SlodowySlice sp4_slice() {
  SlodowySlice sl;
  sl.name = "sp4";
  sl.algebra = build_algebra(Family::SP, 4);
  sl.triple.x = RatMatrix(E(4, 0, 2) + E(4, 1, 3));
  sl.triple.y = sl.triple.x.transpose();
  sl.triple.h = diag({1, 1, -1, -1});
  sl.param_names = {"v1m", "v2m", "v1p", "v2p"};
  sl.directions = {
      RatMatrix(E(4, 0, 1) - E(4, 1, 0) + E(4, 2, 3) - E(4, 3, 2)),
      RatMatrix(E(4, 2, 0) - E(4, 3, 1)),
      RatMatrix(E(4, 2, 1) + E(4, 3, 0)),
      RatMatrix(E(4, 2, 0) + E(4, 3, 1)),
  };
  sl.cstar_weights = {2, 4, 4, 4};
  SliceSymmetry m;
  m.kind = SliceSymmetry::Kind::Inner;
  RatMatrix q = from_rows({{0, 1}, {1, 0}});
  m.conjugator = zeros(4, 4);
  m.conjugator.topLeftCorner(2, 2) = q;
  m.conjugator.bottomRightCorner(2, 2) = q;
  m.signs = {-1, -1, 1, 1};
  sl.caction = m;
  return sl;
}

SlodowySlice sl4_appendix_slice() {
  SlodowySlice sl;
  sl.name = "sl4";
  sl.algebra = build_algebra(Family::SL, 4);
  sl.triple.x = from_rows({{0, 1, 1, 0}, {0, 0, 0, -1}, {0, 0, 0, -1}, {0, 0, 0, 0}});
  sl.triple.y = sl.triple.x.transpose();
  sl.triple.h = diag({2, 0, 0, -2});
  sl.param_names = {"u1m", "u2m", "u3m", "u1p", "u2p"};
  sl.directions = {
      from_rows({{1, 0, 0, 0}, {0, -1, 2, 0}, {0, 2, -1, 0}, {0, 0, 0, 1}}),
      RatMatrix(E(4, 2, 0) - E(4, 1, 0) + E(4, 3, 1) - E(4, 3, 2)),
      E(4, 3, 0),
      RatMatrix(E(4, 1, 0) - E(4, 3, 2)),
      RatMatrix(E(4, 2, 0) - E(4, 3, 1)),
  };
  sl.cstar_weights = {2, 4, 6, 4, 4};
  SliceSymmetry s;
  s.kind = SliceSymmetry::Kind::AntiTranspose;
  s.signs = {-1, -1, -1, 1, 1};
  sl.caction = s;
  return sl;
}

SlodowySlice build_subregular_slice(const MatrixLieAlgebra& alg) {
  if (!alg.family) throw std::invalid_argument("build_subregular_slice: algebra has no classical family");
  if (*alg.family == Family::SP && alg.n == 4) return sp4_slice();
  if (*alg.family == Family::SL && alg.n == 4) return sl4_appendix_slice();
  if (*alg.family != Family::SL || alg.n < 3)
    throw std::invalid_argument("build_subregular_slice: no subregular triple implemented for " + alg.name);
  // Jordan type (n-1, 1)
  const int n = alg.n, k = n - 1;
  SlodowySlice sl;
  sl.name = alg.name;
  sl.algebra = alg;
  sl.triple.x = zeros(n, n);
  sl.triple.y = zeros(n, n);
  for (int i = 0; i + 1 < k; ++i) {
    sl.triple.x(i, i + 1) = Rat(1);
    sl.triple.y(i + 1, i) = Rat((i + 1) * (k - i - 1));
  }
  sl.triple.h = bracket(sl.triple.x, sl.triple.y);
  fill_directions(sl, "s");
  return sl;
}

Report check_slice(const SlodowySlice& sl) {
  Report rep;
  rep.check = "slice " + sl.name;
  const MatrixLieAlgebra& alg = sl.algebra;
  const Sl2Triple& t = sl.triple;
  rep.expect(t.valid(), "sl2_triple", sl.name);
  rep.expect(alg.contains(t.x) && alg.contains(t.y) && alg.contains(t.h), "triple_in_algebra", sl.name);
  const int rk = static_cast<int>(alg.cartan_indices.size());
  const int cx = centralizer_dimension(alg, t.x);
  rep.expect(cx == rk + 2, "subregular", sl.name, std::to_string(rk + 2), std::to_string(cx));
  const int ky = centralizer_dimension(alg, t.y);
  rep.expect(ky == sl.dimension(), "slice_dimension", sl.name, std::to_string(ky), std::to_string(sl.dimension()));
  rep.expect(sl.dimension() == rk + 2, "dim_rank_plus_two", sl.name);
  std::vector<RatVector> cols;
  for (int k = 0; k < sl.dimension(); ++k) {
    const RatMatrix& d = sl.directions[k];
    rep.expect(alg.contains(d), "direction_in_algebra", sl.param_names[k]);
    rep.expect(is_zero(bracket(t.y, d)), "direction_in_ker_ad_y", sl.param_names[k]);
    auto mu = ad_eigenvalue(t.h, d);
    rep.expect(mu.has_value() && *mu == Rat(2 - sl.cstar_weights[k]), "cstar_weight", sl.param_names[k],
               std::to_string(sl.cstar_weights[k]), mu ? (Rat(2) - *mu).str() : "not an eigenvector");
    cols.push_back(flatten(d));
  }
  rep.expect(rank(hstack(cols)) == sl.dimension(), "directions_independent", sl.name);
  if (sl.caction) {
    const SliceSymmetry& s = *sl.caction;
    rep.expect(s.apply(t.x) == t.x && s.apply(t.y) == t.y, "symmetry_fixes_xy", sl.name);
    for (int k = 0; k < sl.dimension(); ++k)
      rep.expect(s.apply(sl.directions[k]) == RatMatrix(sl.directions[k] * Rat(s.signs[k])), "symmetry_signs",
                 sl.param_names[k]);
    bool hom = true;
    for (int i = 0; i < alg.dimension() && hom; ++i) {
      if (!alg.contains(s.apply(alg.basis[i]))) hom = false;
      for (int j = i + 1; j < alg.dimension() && hom; ++j)
        hom = s.apply(bracket(alg.basis[i], alg.basis[j])) == bracket(s.apply(alg.basis[i]), s.apply(alg.basis[j]));
    }
    rep.expect(hom, "symmetry_is_automorphism", sl.name);
  }
  return rep;
}

std::vector<Rat> slice_quotient(const SlodowySlice& sl, const std::vector<Rat>& params) {
  return adjoint_quotient(sl.algebra, sl.point(params));
}

std::vector<MultiPoly> slice_quotient_symbolic(const SlodowySlice& sl) {
  return adjoint_quotient<MultiPoly>(*sl.algebra.family, sl.symbolic_point(sl.ring()));
}

std::vector<Rat> cstar_action(const SlodowySlice& sl, const Rat& lambda, const std::vector<Rat>& params) {
  if (lambda.is_zero()) throw std::invalid_argument("cstar_action: lambda must be nonzero");
  if (static_cast<int>(params.size()) != sl.dimension()) throw std::invalid_argument("cstar_action: dimension mismatch");
  std::vector<Rat> out;
  for (int k = 0; k < sl.dimension(); ++k) out.push_back(params[k] * pow(lambda, sl.cstar_weights[k]));
  return out;
}

std::vector<Rat> c_action_on_slice(const SlodowySlice& sl, const std::vector<Rat>& params) {
  if (!sl.caction) throw std::invalid_argument("c_action_on_slice: slice " + sl.name + " has no symmetry");
  auto p = sl.parameters(sl.caction->apply(sl.point(params)));
  if (!p) throw std::logic_error("c_action_on_slice: image leaves the slice");
  return *p;
}

RatMatrix CxyGroup::apply(std::size_t k, const RatMatrix& a) const {
  const RatMatrix& g = representatives.at(k);
  RatMatrix b = twisted.at(k) ? phi_a(a) : a;
  return g * b * inverse_or_throw(g);
}

CxyGroup sp4_cxy() {
  CxyGroup c;
  c.description = "block-diag(K, K), K K^T = 1; components det K = 1 and det K = -1";
  std::vector<RatMatrix> ks = {identity(2), from_rows({{Rat(3, 5), Rat(-4, 5)}, {Rat(4, 5), Rat(3, 5)}}),
                               from_rows({{0, 1}, {1, 0}}), from_rows({{Rat(3, 5), Rat(4, 5)}, {Rat(4, 5), Rat(-3, 5)}}),
                               from_rows({{Rat(-5, 13), Rat(12, 13)}, {Rat(-12, 13), Rat(-5, 13)}})};
  for (const auto& k : ks) {
    RatMatrix g = zeros(4, 4);
    g.topLeftCorner(2, 2) = k;
    g.bottomRightCorner(2, 2) = k;
    c.representatives.push_back(g);
    c.twisted.push_back(false);
  }
  return c;
}

RatMatrix appendix_m(const Rat& m) {
  if (m.is_zero()) throw std::invalid_argument("appendix_m: m must be nonzero");
  const Rat m3 = Rat(1) / (m * m * m);
  RatMatrix g = zeros(4, 4);
  g(0, 0) = g(3, 3) = m;
  g(1, 1) = g(2, 2) = (m + m3) / Rat(2);
  g(1, 2) = g(2, 1) = (m - m3) / Rat(2);
  return g;
}

CxyGroup sl4_cxy() {
  CxyGroup c;
  c.description = "Ad_{M_m} and Ad_{M_m} o phi_a, m nonzero";
  for (bool tw : {false, true})
    for (const Rat& m : {Rat(1), Rat(2), Rat(-1, 2), Rat(3), Rat(-1)}) {
      c.representatives.push_back(appendix_m(m));
      c.twisted.push_back(tw);
    }
  return c;
}

std::optional<RatMatrix> outer_witness(const MatrixLieAlgebra& alg, const SliceSymmetry& sym) {
  Rng rng(7);
  for (int attempt = 0; attempt < 20; ++attempt) {
    RatMatrix a = alg.element(random_vector(rng, alg.dimension()));
    if (adjoint_quotient(alg, a) != adjoint_quotient(alg, sym.apply(a))) return a;
  }
  return std::nullopt;
}

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var) {
  const int m = f.degree_in(var), n = g.degree_in(var);
  if (m + n == 0) return MultiPoly(f.ring(), Rat(1));
  const int size = m + n;
  PolyMatrix s = PolyMatrix::Constant(size, size, MultiPoly(f.ring()));
  for (int row = 0; row < n; ++row)
    for (int k = 0; k <= m; ++k) s(row, row + k) = coefficient_in(f, var, m - k);
  for (int row = 0; row < m; ++row)
    for (int k = 0; k <= n; ++k) s(n + row, row + k) = coefficient_in(g, var, n - k);
  return exterior_traces(s)[size];
}

FiberBound fixed_locus_fiber_bound(const SlodowySlice& sl) {
  if (!sl.caction) throw std::invalid_argument("fixed_locus_fiber_bound: slice has no symmetry");
  const auto& signs = sl.caction->signs;
  std::vector<std::string> free;
  std::vector<int> free_weights;
  for (int k = 0; k < sl.dimension(); ++k)
    if (signs[k] == 1) {
      free.push_back(sl.param_names[k]);
      free_weights.push_back(sl.cstar_weights[k]);
    }
  const auto quot = slice_quotient_symbolic(sl);
  if (free.size() != 2 || quot.size() != 2)
    throw std::invalid_argument("fixed_locus_fiber_bound: implemented for two fixed parameters and two invariants");
  std::vector<std::string> names = free;
  names.push_back("B1");
  names.push_back("B2");
  PolyRing ring(names);
  std::vector<MultiPoly> images;
  for (int k = 0; k < sl.dimension(); ++k) images.push_back(signs[k] == 1 ? ring.var(sl.param_names[k]) : MultiPoly(ring));
  std::vector<MultiPoly> eqs;
  for (int j = 0; j < 2; ++j) eqs.push_back(quot[j].compose(images) - ring.var(j == 0 ? "B1" : "B2"));
  FiberBound fb;
  fb.finite = true;
  fb.bound = 1;
  for (int keep = 0; keep < 2; ++keep) {
    MultiPoly el = resultant(eqs[0], eqs[1], 1 - keep);
    const int deg = el.degree_in(keep);
    MultiPoly lead = coefficient_in(el, keep, deg);
    if (el.is_zero() || !lead.is_constant() || deg == 0) fb.finite = false;
    fb.bound *= deg;
  }
  const auto degs = quotient_degrees(*sl.algebra.family, sl.algebra.n);
  Rat num(1), den(1);
  for (int d : degs) num *= Rat(2 * d);
  for (int w : free_weights) den *= Rat(w);
  fb.weighted_count = num / den;
  return fb;
}

AppendixPhi appendix_phi() {
  AppendixPhi p;
  p.ring = PolyRing({"v1m", "v2m", "v1p", "v2p", "r", "i"});
  p.tower = AlgTower::appendix();
  const MultiPoly v1m = p.ring.var("v1m"), v2m = p.ring.var("v2m"), v1p = p.ring.var("v1p"), v2p = p.ring.var("v2p");
  const MultiPoly r = p.ring.var("r"), i = p.ring.var("i");
  const MultiPoly u1m = r * v1m;
  const MultiPoly u2m = Rat(3, 2) * i * v2m;
  const MultiPoly u1p = Rat(1, 2) * v1m * v1m + Rat(3, 2) * (v1p - v2p);
  const MultiPoly u2p = Rat(1, 2) * v1m * v1m - Rat(3, 2) * (v1p + v2p);
  // b3 = 0 on the fixed base
  const MultiPoly u3m = p.tower.reduce(Rat(-4) * u1m * u1m * u1m + Rat(2) * u1m * (u1p + u2p));
  p.image = {u1m, u2m, u3m, u1p, u2p};
  return p;
}

std::vector<MultiPoly> xi_tilde(const std::vector<MultiPoly>& b) {
  return {b.at(0) * Rat(1, 2), Rat(9) * (b.at(1) - b.at(0) * b.at(0) * Rat(1, 4))};
}

std::vector<MultiPoly> xi_tilde_h(const std::vector<MultiPoly>& b) { return {b.at(0) * Rat(-1, 6), -b.at(2)}; }

PhiSquare appendix_square() {
  const AppendixPhi phi = appendix_phi();
  const SlodowySlice& sh = cached_sl4();
  const SlodowySlice& s = cached_sp4();
  PhiSquare sq;
  PolyMatrix m = sh.symbolic_point(sh.ring());
  for (int a = 0; a < m.rows(); ++a)
    for (int b = 0; b < m.cols(); ++b) m(a, b) = m(a, b).compose(phi.image);
  auto bh = adjoint_quotient<MultiPoly>(Family::SL, m);
  std::vector<MultiPoly> bhr;
  for (int k = 0; k < 3; ++k) bhr.push_back(phi.tower.reduce(bh[k]));
  for (const auto& q : xi_tilde_h(bhr)) sq.via_sh.push_back(phi.tower.reduce(q));
  auto bs = slice_quotient_symbolic(s);
  for (auto& q : bs) q = q.embed(phi.ring);
  sq.via_s = xi_tilde(bs);
  sq.rational = true;
  for (int k = 0; k < 2; ++k) {
    sq.residual.push_back(sq.via_sh[k] - sq.via_s[k]);
    sq.rational = sq.rational && phi.tower.in_base_field(sq.via_sh[k]);
  }
  return sq;
}

std::pair<std::vector<Rat>, std::vector<Rat>> appendix_square_at(const std::vector<Rat>& v) {
  if (v.size() != 4) throw std::invalid_argument("appendix_square_at: expected 4 parameters");
  const AppendixPhi phi = appendix_phi();
  const SlodowySlice& sh = cached_sl4();
  const SlodowySlice& s = cached_sp4();
  // substitute first, then take invariants over Q(r, i)
  std::map<std::string, MultiPoly> at;
  for (int k = 0; k < 4; ++k) at[phi.ring.names()[k]] = MultiPoly(phi.ring, v[k]);
  std::vector<MultiPoly> u;
  for (const auto& q : phi.image) u.push_back(phi.tower.reduce(q.substitute(at)));
  const int n = 4;
  PolyMatrix m(n, n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      MultiPoly e(phi.ring, sh.triple.x(a, b));
      for (int k = 0; k < sh.dimension(); ++k) e += u[k] * sh.directions[k](a, b);
      m(a, b) = e;
    }
  auto bh = adjoint_quotient<MultiPoly>(Family::SL, m);
  for (auto& q : bh) q = phi.tower.reduce(q);
  std::vector<Rat> left;
  for (const auto& q : xi_tilde_h(bh)) {
    MultiPoly red = phi.tower.reduce(q);
    if (!red.is_constant()) throw std::logic_error("appendix_square_at: value outside Q: " + red.str());
    left.push_back(red.constant_term());
  }
  auto b = slice_quotient(s, v);
  std::vector<Rat> right = {b[0] / Rat(2), Rat(9) * (b[1] - b[0] * b[0] / Rat(4))};
  return {left, right};
}

Report verify_appendix(int samples, unsigned long seed) {
  Report rep;
  rep.check = "appendix";
  const AppendixPhi phi = appendix_phi();
  const SlodowySlice& sh = cached_sl4();
  const SlodowySlice& s = cached_sp4();
  rep.merge(check_slice(s));
  rep.merge(check_slice(sh));

  PhiSquare sq = appendix_square();
  rep.expect(sq.rational, "square_rational", "Phi", "coefficients in Q", polys_str(sq.via_sh));
  for (int k = 0; k < 2; ++k)
    rep.expect(sq.residual[k].is_zero(), "square_commutes", "component " + std::to_string(k), "0", sq.residual[k].str());

  // image lies over the fixed base: b3 = 0
  {
    PolyMatrix m = sh.symbolic_point(sh.ring());
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) m(a, b) = m(a, b).compose(phi.image);
    auto bh = adjoint_quotient<MultiPoly>(Family::SL, m);
    MultiPoly b3 = phi.tower.reduce(bh[1]);
    rep.expect(b3.is_zero(), "image_over_fixed_base", "b3", "0", b3.str());
  }

  // inverse map composes to the identity
  {
    const PolyRing& R = phi.ring;
    const MultiPoly r = R.var("r"), i = R.var("i");
    const auto& u = phi.image;
    std::vector<MultiPoly> inv = {Rat(3, 2) * r * u[0], Rat(-2, 3) * i * u[1], (u[3] - u[4]) * Rat(1, 3),
                                  (Rat(3, 2) * u[0] * u[0] - u[3] - u[4]) * Rat(1, 3)};
    for (int k = 0; k < 4; ++k) {
      MultiPoly back = phi.tower.reduce(inv[k]);
      rep.expect(back == R.var(k), "phi_invertible", R.names()[k], R.names()[k], back.str());
    }
  }

  // C-equivariance: odd parameters flip on both sides
  {
    std::map<std::string, MultiPoly> flip = {{"v1m", -phi.ring.var("v1m")}, {"v2m", -phi.ring.var("v2m")}};
    for (int k = 0; k < 5; ++k) {
      MultiPoly lhs = phi.image[k].substitute(flip);
      MultiPoly rhs = phi.image[k] * Rat(sh.caction->signs[k]);
      rep.expect(lhs == rhs, "phi_c_equivariant", sh.param_names[k], rhs.str(), lhs.str());
    }
  }
  // C*-equivariance at a few lambdas
  for (const Rat& lam : {Rat(2), Rat(-3), Rat(1, 2)}) {
    std::map<std::string, MultiPoly> scale;
    for (int k = 0; k < 4; ++k)
      scale[s.param_names[k]] = phi.ring.var(s.param_names[k]) * pow(lam, s.cstar_weights[k]);
    for (int k = 0; k < 5; ++k) {
      MultiPoly lhs = phi.image[k].substitute(scale);
      MultiPoly rhs = phi.image[k] * pow(lam, sh.cstar_weights[k]);
      rep.expect(lhs == rhs, "phi_cstar_equivariant", sh.param_names[k] + " lambda=" + lam.str(), rhs.str(), lhs.str());
    }
  }

  Rng rng(seed);
  for (int t = 0; t < samples; ++t) {
    auto v = random_point(rng, 4);
    auto [left, right] = appendix_square_at(v);
    rep.expect(left == right, "square_at_point", point_str(v), point_str(right), point_str(left));
  }
  return rep;
}

std::vector<MultiPoly> unfolding_coordinates_symbolic(const PolyRing& ring) {
  const SlodowySlice& sh = cached_sl4();
  PolyMatrix m = sh.symbolic_point(ring);
  auto b = adjoint_quotient<MultiPoly>(Family::SL, m);
  const MultiPoly u1m = ring.var("u1m"), u2m = ring.var("u2m"), u1p = ring.var("u1p"), u2p = ring.var("u2p");
  return {Rat(3) * u1m, u1p - u2p + Rat(2) * u2m, u1p - u2p - Rat(2) * u2m, b[0], b[1], b[2]};
}

std::vector<Rat> unfolding_coordinates(const std::vector<Rat>& u) {
  const SlodowySlice& sh = cached_sl4();
  auto b = slice_quotient(sh, u);
  const Rat &u1m = u[0], &u2m = u[1], &u1p = u[3], &u2p = u[4];
  return {Rat(3) * u1m, u1p - u2p + Rat(2) * u2m, u1p - u2p - Rat(2) * u2m, b[0], b[1], b[2]};
}

}  // namespace foldlie
