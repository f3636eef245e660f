#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldlie/charpoly.hpp"
#include "foldlie/linalg.hpp"
#include "foldlie/poly.hpp"
#include "foldlie/report.hpp"
#include "foldlie/rootsys.hpp"

namespace foldlie {

enum class Family { SL, SP, SO };

Family parse_family(const std::string& s);
std::string family_name(Family f);

/// A Lie algebra given as the span of explicit n x n matrices.
class MatrixLieAlgebra {
 public:
  std::string name;
  std::optional<Family> family;
  int n = 0;
  /// Form B with X^T B + B X = 0, when there is one.
  std::optional<RatMatrix> defining_form;
  std::vector<RatMatrix> basis;
  std::vector<int> cartan_indices;

  int dimension() const { return static_cast<int>(basis.size()); }
  /// Sets up coordinate extraction; throws if the basis is dependent.
  void finalize();
  std::optional<RatVector> try_coordinates(const RatMatrix& x) const;
  /// Throws std::invalid_argument if x is not in the span.
  RatVector coordinates(const RatMatrix& x) const;
  bool contains(const RatMatrix& x) const { return try_coordinates(x).has_value(); }
  RatMatrix element(const RatVector& coords) const;
  /// Matrix of ad x in this basis.
  RatMatrix ad(const RatMatrix& x) const;
  /// Every bracket of basis elements lies in the span.
  bool closed_under_bracket() const;

 private:
  std::vector<int> pivots_;
  RatMatrix pivot_inverse_;
  RatMatrix flat_;
};

/// Classical dimension for the matrix size n.
int classical_dimension(Family f, int n);

struct ChevalleyData {
  MatrixLieAlgebra algebra;
  /// Roots in simple-root coordinates, Bourbaki labelling.
  RootSystem roots;
  /// root_vectors[k] spans the root space of roots.all_roots[k].
  std::vector<RatMatrix> root_vectors;
  /// h_i = [e_i, f_i] with a_i(h_i) = 2.
  std::vector<RatMatrix> coroots;

  int root_index(const RatVector& root) const;
  const RatMatrix& e(const RatVector& root) const { return root_vectors.at(root_index(root)); }
  /// c with [e_a, e_b] = c e_{a+b}; zero when a + b is not a root.
  Rat structure_constant(int a, int b) const;
};

/// Chevalley basis by the inductive rule e_b = [e_i, e_g] / (p + 1), with
/// negative root vectors built from the f_i by the same rule up to sign.
ChevalleyData build_chevalley(Family f, int n);
MatrixLieAlgebra build_algebra(Family f, int n);

struct LieAut {
  /// Action on coordinates of the algebra basis.
  RatMatrix matrix;
  int order = 1;

  RatMatrix apply(const MatrixLieAlgebra& alg, const RatMatrix& x) const;
};

/// Extends e_i -> e_{a(i)}, f_i -> f_{a(i)} through the inductive construction.
LieAut lift_graph_aut(const ChevalleyData& cd, const GraphAut& a);
bool preserves_bracket(const MatrixLieAlgebra& alg, const LieAut& aut);

/// A -> diag(1,1,-1,-1) A^{~T} diag(-1,-1,1,1), with ~T the anti-diagonal transpose.
RatMatrix clift(const RatMatrix& a);
RatMatrix antidiagonal_transpose(const RatMatrix& a);

/// Kernel of aut - 1, as a matrix subalgebra of the same n x n matrices.
MatrixLieAlgebra fixed_subalgebra(const ChevalleyData& cd, const LieAut& aut);

/// (1/|a|) sum_k a^k(xi).
RatMatrix averaging_projection(const ChevalleyData& cd, const LieAut& aut, const RatMatrix& xi);

struct RootDecomposition {
  int cartan_dim = 0;
  std::vector<int> root_space_dims;
  /// Roots as functionals on the torus basis.
  std::vector<RatVector> roots;
  std::optional<DynkinType> type;
  bool spans = false;
};

/// Decomposition of sub under the part of the diagonal Cartan of cd that lies in sub.
RootDecomposition root_decomposition(const ChevalleyData& cd, const MatrixLieAlgebra& sub);

/// Gram matrix of tr(XY) on the basis.
RatMatrix trace_form(const MatrixLieAlgebra& alg);

/// Degrees of the fundamental invariants returned by adjoint_quotient.
std::vector<int> quotient_degrees(Family f, int n);

/// Fundamental invariants: exterior traces 2..n (sl), even ones (sp, odd so),
/// even ones up to 2m-2 plus the normalized Pfaffian of B X (so_{2m}).
template <class T>
std::vector<T> adjoint_quotient(Family f, const MatrixX<T>& m) {
  const int n = static_cast<int>(m.rows());
  auto e = exterior_traces(m);
  std::vector<T> out;
  switch (f) {
    case Family::SL:
      for (int k = 2; k <= n; ++k) out.push_back(e[k]);
      break;
    case Family::SP:
      for (int k = 2; k <= n; k += 2) out.push_back(e[k]);
      break;
    case Family::SO:
      if (n % 2) {
        for (int k = 2; k < n; k += 2) out.push_back(e[k]);
      } else {
        for (int k = 2; k <= n - 2; k += 2) out.push_back(e[k]);
        // anti-diagonal form: (B X)_{ij} = X_{n-1-i, j}; sign fixed so Pf = x_1 ... x_m on the Cartan
        MatrixX<T> bx(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) bx(i, j) = m(n - 1 - i, j);
        const int pairs = n / 2;
        const bool negate = pairs % 2 == 1;
        T pf = pfaffian(bx);
        out.push_back(negate ? T(-pf) : pf);
      }
      break;
  }
  return out;
}

/// Checks membership first.
std::vector<Rat> adjoint_quotient(const MatrixLieAlgebra& alg, const RatMatrix& m);

/// Invariant-ring comparison between a homogeneous algebra restricted to the
/// fixed Cartan and its folded partner. Supported: A_{2m-1}/2, D_n/2, D4/3.
Report base_iso_check(const FoldingDatum& fd, int sample_count, unsigned long seed);

/// Fundamental invariants of the homogeneous algebra restricted to the fixed
/// Cartan, in coordinates c_j along the orbit averages of the simple coroots.
struct RestrictedInvariants {
  PolyRing ring;
  std::vector<int> degrees;
  std::vector<MultiPoly> polys;
};
RestrictedInvariants restricted_invariants(const FoldingDatum& fd);

/// The two sides of the sl4/sp4 identity in the variables (u, v):
/// sl4 invariants at u(a1 + a3) + (u + v) a2 and sp4 invariants at 2u b1 + (u + v) b2.
struct RunningIdentity {
  PolyRing ring;
  std::vector<MultiPoly> homogeneous;
  std::vector<MultiPoly> folded;
};
RunningIdentity sl4_sp4_identity();

/// Permutation reversing the first half of the coordinates; conjugates the
/// fixed subalgebra of sl_{2m} onto sp_{2m}.
RatMatrix sl_to_sp_conjugator(int n);

/// exp(N) for nilpotent N, as a finite sum.
RatMatrix nilpotent_exp(const RatMatrix& nil);

}  // namespace foldlie
