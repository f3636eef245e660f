#include <stdexcept>

#include "foldlie/liealg.hpp"

namespace foldlie {

namespace {

RatMatrix E(int n, int i, int j) {
  RatMatrix m = zeros(n, n);
  m(i, j) = Rat(1);
  return m;
}

// Scalar c with a == c b, assuming b != 0.
std::optional<Rat> ratio(const RatMatrix& a, const RatMatrix& b) {
  std::optional<Rat> c;
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      if (b(i, j).is_zero()) {
        if (!a(i, j).is_zero()) return std::nullopt;
        continue;
      }
      Rat q = a(i, j) / b(i, j);
      if (c && *c != q) return std::nullopt;
      c = q;
    }
  return c;
}

DynkinType type_for(Family f, int n) {
  switch (f) {
    case Family::SL:
      if (n < 2) break;
      return {'A', n - 1};
    case Family::SP:
      if (n < 4 || n % 2) break;
      return {'C', n / 2};
    case Family::SO:
      if (n % 2 && n >= 5) return {'B', (n - 1) / 2};
      if (n % 2 == 0 && n >= 8) return {'D', n / 2};
      break;
  }
  throw std::invalid_argument("build_algebra: unsupported parameters " + family_name(f) + std::to_string(n));
}

std::vector<RatMatrix> simple_generators(Family f, int n) {
  std::vector<RatMatrix> e;
  auto p = [n](int i) { return n - 1 - i; };
  switch (f) {
    case Family::SL:
      for (int i = 0; i + 1 < n; ++i) e.push_back(2 * (i + 1) > n ? RatMatrix(-E(n, i, i + 1)) : E(n, i, i + 1));
      break;
    case Family::SP: {
      const int m = n / 2;
      for (int i = 0; i + 1 < m; ++i) e.push_back(E(n, i, i + 1) - E(n, m + i + 1, m + i));
      e.push_back(E(n, m - 1, n - 1));
      break;
    }
    case Family::SO: {
      const int m = n / 2;
      if (n % 2) {
        for (int i = 0; i < m; ++i) e.push_back(E(n, i, i + 1) - E(n, p(i + 1), p(i)));
      } else {
        for (int i = 0; i + 1 < m; ++i) e.push_back(E(n, i, i + 1) - E(n, p(i + 1), p(i)));
        e.push_back(E(n, m - 2, m) - E(n, m - 1, m + 1));
      }
      break;
    }
  }
  return e;
}

std::optional<RatMatrix> form_for(Family f, int n) {
  if (f == Family::SL) return std::nullopt;
  RatMatrix b = zeros(n, n);
  if (f == Family::SP) {
    const int m = n / 2;
    for (int i = 0; i < m; ++i) {
      b(i, m + i) = Rat(1);
      b(m + i, i) = Rat(-1);
    }
  } else {
    for (int i = 0; i < n; ++i) b(i, n - 1 - i) = Rat(1);
  }
  return b;
}

}  // namespace

Family parse_family(const std::string& s) {
  if (s == "sl") return Family::SL;
  if (s == "sp") return Family::SP;
  if (s == "so") return Family::SO;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_name(Family f) {
  switch (f) {
    case Family::SL: return "sl";
    case Family::SP: return "sp";
    case Family::SO: return "so";
  }
  return "?";
}

int classical_dimension(Family f, int n) {
  switch (f) {
    case Family::SL: return n * n - 1;
    case Family::SP: return n * (n + 1) / 2;
    case Family::SO: return n * (n - 1) / 2;
  }
  return 0;
}

int ChevalleyData::root_index(const RatVector& root) const {
  for (std::size_t k = 0; k < roots.all_roots.size(); ++k)
    if (roots.all_roots[k] == root) return static_cast<int>(k);
  throw std::invalid_argument("ChevalleyData: not a root");
}

Rat ChevalleyData::structure_constant(int a, int b) const {
  const RatVector sum = roots.all_roots.at(a) + roots.all_roots.at(b);
  if (!roots.is_root(sum)) return Rat(0);
  const RatMatrix br = bracket(root_vectors[a], root_vectors[b]);
  auto c = ratio(br, e(sum));
  if (!c) throw std::logic_error("structure_constant: bracket leaves the root space");
  return *c;
}

ChevalleyData build_chevalley(Family f, int n) {
  ChevalleyData cd;
  const DynkinType type = type_for(f, n);
  cd.roots = build_root_system(type);
  const int r = type.rank;
  const auto& all = cd.roots.all_roots;
  const RatMatrix cartan = cd.roots.cartan();

  std::vector<RatMatrix> e = simple_generators(f, n), fs;
  for (int i = 0; i < r; ++i) {
    RatMatrix h = bracket(e[i], e[i].transpose());
    auto lambda = ratio(bracket(h, e[i]), e[i]);
    if (!lambda || lambda->is_zero()) throw std::logic_error("build_chevalley: degenerate generator");
    fs.push_back(RatMatrix(e[i].transpose() * (Rat(2) / *lambda)));
    cd.coroots.push_back(bracket(e[i], fs[i]));
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      auto c = ratio(bracket(cd.coroots[j], e[i]), e[i]);
      if (!c || *c != cartan(i, j)) throw std::logic_error("build_chevalley: generators do not match the Cartan matrix");
    }

  cd.root_vectors.assign(all.size(), RatMatrix());
  const int half = static_cast<int>(all.size()) / 2;
  auto negative_index = [&](int k) { return cd.root_index(RatVector(-all[k])); };
  for (int k = 0; k < half; ++k) {
    const RatVector& beta = all[k];
    int simple = -1;
    for (int i = 0; i < r; ++i)
      if (beta == RatVector(RatVector::Unit(r, i))) simple = i;
    if (simple >= 0) {
      cd.root_vectors[k] = e[simple];
      cd.root_vectors[negative_index(k)] = fs[simple];
      continue;
    }
    bool done = false;
    for (int i = 0; i < r && !done; ++i) {
      RatVector gamma = beta - RatVector(RatVector::Unit(r, i));
      if (!cd.roots.is_root(gamma)) continue;
      int p = 0;
      while (cd.roots.is_root(RatVector(gamma - (p + 1) * RatVector(RatVector::Unit(r, i))))) ++p;
      const int g = cd.root_index(gamma);
      const int gn = negative_index(g);
      RatMatrix eb = bracket(e[i], cd.root_vectors[g]) / Rat(p + 1);
      RatMatrix fb = bracket(fs[i], cd.root_vectors[gn]) * Rat(-1, p + 1);
      auto two = ratio(bracket(bracket(eb, fb), eb), eb);
      if (!two || *two != Rat(2)) throw std::logic_error("build_chevalley: normalization failed for " + to_string(RatMatrix(beta.transpose())));
      cd.root_vectors[k] = eb;
      cd.root_vectors[negative_index(k)] = fb;
      done = true;
    }
    if (!done) throw std::logic_error("build_chevalley: no decomposition for a positive root");
  }

  MatrixLieAlgebra& alg = cd.algebra;
  alg.family = f;
  alg.n = n;
  alg.name = family_name(f) + std::to_string(n);
  alg.defining_form = form_for(f, n);
  alg.basis = cd.coroots;
  for (int i = 0; i < r; ++i) alg.cartan_indices.push_back(i);
  alg.basis.insert(alg.basis.end(), cd.root_vectors.begin(), cd.root_vectors.end());
  if (alg.dimension() != classical_dimension(f, n)) throw std::logic_error("build_chevalley: dimension mismatch");
  alg.finalize();
  return cd;
}

MatrixLieAlgebra build_algebra(Family f, int n) { return build_chevalley(f, n).algebra; }

LieAut lift_graph_aut(const ChevalleyData& cd, const GraphAut& a) {
  const int r = cd.roots.rank();
  if (static_cast<int>(a.perm.size()) != r) throw std::invalid_argument("lift_graph_aut: rank mismatch");
  if (!cd.roots.type.simply_laced()) throw std::invalid_argument("lift_graph_aut: algebra is not simply laced");
  if (!a.preserves_cartan(cd.roots.cartan())) throw std::invalid_argument("lift_graph_aut: not a diagram automorphism");
  const RatMatrix p = a.matrix();
  const auto& all = cd.roots.all_roots;
  std::vector<RatMatrix> image(all.size());
  // L e_b = [L e_i, L e_g] along the recursion used for the basis
  const int half = static_cast<int>(all.size()) / 2;
  std::vector<bool> have(all.size(), false);
  for (int i = 0; i < r; ++i) {
    const int k = cd.root_index(RatVector(RatVector::Unit(r, i)));
    const int kn = cd.root_index(RatVector(-RatVector::Unit(r, i)));
    image[k] = cd.root_vectors[cd.root_index(RatVector(RatVector::Unit(r, a.apply(i))))];
    image[kn] = cd.root_vectors[cd.root_index(RatVector(-RatVector::Unit(r, a.apply(i))))];
    have[k] = have[kn] = true;
  }
  for (int k = 0; k < half; ++k) {
    if (have[k]) continue;
    const RatVector& beta = all[k];
    for (int i = 0; i < r; ++i) {
      RatVector gamma = beta - RatVector(RatVector::Unit(r, i));
      if (!cd.roots.is_root(gamma)) continue;
      const int g = cd.root_index(gamma);
      const int gn = cd.root_index(RatVector(-gamma));
      const int si = cd.root_index(RatVector(RatVector::Unit(r, i)));
      const int sn = cd.root_index(RatVector(-RatVector::Unit(r, i)));
      // simply laced: p = 0
      image[k] = bracket(image[si], image[g]);
      image[cd.root_index(RatVector(-beta))] = RatMatrix(-bracket(image[sn], image[gn]));
      have[k] = have[cd.root_index(RatVector(-beta))] = true;
      break;
    }
  }
  const MatrixLieAlgebra& alg = cd.algebra;
  const int d = alg.dimension();
  LieAut aut;
  aut.matrix = zeros(d, d);
  for (int i = 0; i < r; ++i) aut.matrix.col(i) = alg.coordinates(cd.coroots[a.apply(i)]);
  for (std::size_t k = 0; k < all.size(); ++k) {
    const RatVector target = p * all[k];
    const RatVector coords = alg.coordinates(image[k]);
    // each image must be a multiple of the root vector of a(b)
    for (int j = 0; j < d; ++j)
      if (!coords(j).is_zero() && j != r + cd.root_index(target))
        throw std::logic_error("lift_graph_aut: image leaves the root space of a(b)");
    aut.matrix.col(r + static_cast<int>(k)) = coords;
  }
  RatMatrix power = aut.matrix;
  aut.order = 1;
  while (power != identity(d)) {
    power = RatMatrix(power * aut.matrix);
    if (++aut.order > 12) throw std::logic_error("lift_graph_aut: order too large");
  }
  return aut;
}

bool preserves_bracket(const MatrixLieAlgebra& alg, const LieAut& aut) {
  const int d = alg.dimension();
  std::vector<RatMatrix> images;
  for (int i = 0; i < d; ++i) images.push_back(aut.apply(alg, alg.basis[i]));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (aut.apply(alg, bracket(alg.basis[i], alg.basis[j])) != bracket(images[i], images[j])) return false;
  return true;
}

}  // namespace foldlie
