#pragma once

#include <optional>
#include <string>
#include <vector>

#include "foldlie/liealg.hpp"
#include "foldlie/poly.hpp"
#include "foldlie/report.hpp"
#include "foldlie/tower.hpp"

namespace foldlie {

struct Sl2Triple {
  RatMatrix x, y, h;

  /// [h,x] = 2x, [h,y] = -2y, [x,y] = h and x nilpotent.
  bool valid() const;
};

/// Symmetry of a slice, either Ad_M or A -> -A^{~T}.
struct SliceSymmetry {
  enum class Kind { Inner, AntiTranspose };
  Kind kind = Kind::Inner;
  RatMatrix conjugator;
  /// Expected action on parameters: p_k -> signs[k] p_k.
  std::vector<int> signs;

  RatMatrix apply(const RatMatrix& a) const;
};

/// x + ker ad_y with an explicit basis of directions.
struct SlodowySlice {
  std::string name;
  MatrixLieAlgebra algebra;
  Sl2Triple triple;
  std::vector<RatMatrix> directions;
  std::vector<std::string> param_names;
  /// Weight of each direction under lambda^2 Ad_{exp(-t h)}.
  std::vector<int> cstar_weights;
  std::optional<SliceSymmetry> caction;

  int dimension() const { return static_cast<int>(directions.size()); }
  RatMatrix point(const std::vector<Rat>& params) const;
  /// Entries in the ring of the parameter names.
  PolyMatrix symbolic_point(const PolyRing& ring) const;
  PolyRing ring() const { return PolyRing(param_names); }
  /// Parameters of a matrix on the slice; nullopt if it is off the slice.
  std::optional<std::vector<Rat>> parameters(const RatMatrix& m) const;
};

/// dim ker ad_x inside alg.
int centralizer_dimension(const MatrixLieAlgebra& alg, const RatMatrix& x);

/// sp4: x with the two identity blocks; sl4: the (x_h, y_h, h_h) triple with
/// the u-parametrization; sl_n otherwise: Jordan type (n-1, 1).
/// Throws std::invalid_argument when no construction applies.
SlodowySlice build_subregular_slice(const MatrixLieAlgebra& alg);
SlodowySlice sp4_slice();
SlodowySlice sl4_appendix_slice();

/// Structural checks: triple, subregularity, directions spanning ker ad_y,
/// ad_h eigenvectors with the recorded weights, symmetry compatibility.
Report check_slice(const SlodowySlice& sl);

/// Adjoint quotient of the ambient algebra along the slice.
std::vector<Rat> slice_quotient(const SlodowySlice& sl, const std::vector<Rat>& params);
std::vector<MultiPoly> slice_quotient_symbolic(const SlodowySlice& sl);

std::vector<Rat> cstar_action(const SlodowySlice& sl, const Rat& lambda, const std::vector<Rat>& params);
/// Applies the symmetry as a matrix map and reads the parameters back.
std::vector<Rat> c_action_on_slice(const SlodowySlice& sl, const std::vector<Rat>& params);

/// Component representatives of the centralizer of (x, y).
struct CxyGroup {
  std::string description;
  std::vector<RatMatrix> representatives;
  /// Whether each representative is composed with A -> -A^{~T}.
  std::vector<bool> twisted;

  RatMatrix apply(std::size_t k, const RatMatrix& a) const;
};

/// block-diag(K, K) with K K^T = 1, sampled by rational rotations and reflections.
CxyGroup sp4_cxy();
/// Ad_{M_m} and Ad_{M_m} o phi_a for a few rational m.
CxyGroup sl4_cxy();
RatMatrix appendix_m(const Rat& m);
/// A -> -A^{~T}.
RatMatrix phi_a(const RatMatrix& a);

/// An element on which the map changes the adjoint quotient; such a map
/// cannot be inner. nullopt if none is found among the test elements.
std::optional<RatMatrix> outer_witness(const MatrixLieAlgebra& alg, const SliceSymmetry& sym);

struct FiberBound {
  bool finite = false;
  /// Product of the eliminant degrees.
  int bound = 0;
  /// prod(weighted degrees of the map) / prod(weights), the generic count when finite.
  Rat weighted_count;
};

/// Restriction of the slice quotient to the fixed locus of the symmetry.
/// Finite when every eliminant has a constant leading coefficient.
FiberBound fixed_locus_fiber_bound(const SlodowySlice& sl);

/// Resultant in variable var by the Sylvester determinant.
MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, int var);

/// The isomorphism S -> chi_h^{-1}((t_h/W_h)^C) in the variables
/// v1m, v2m, v1p, v2p over Q(r, i) with r^2 = 2/3, i^2 = -1.
struct AppendixPhi {
  PolyRing ring;
  AlgTower tower;
  /// S_h parameters (u1m, u2m, u3m, u1p, u2p) as polynomials.
  std::vector<MultiPoly> image;
};
AppendixPhi appendix_phi();

/// (1/2 b2, 9 (b4 - b2^2 / 4)).
std::vector<MultiPoly> xi_tilde(const std::vector<MultiPoly>& b);
/// (-b2 / 6, -b4) from (b2, b3, b4).
std::vector<MultiPoly> xi_tilde_h(const std::vector<MultiPoly>& b);

struct PhiSquare {
  /// xi~_h o chi_h o Phi, reduced in the tower.
  std::vector<MultiPoly> via_sh;
  /// xi~ o chi.
  std::vector<MultiPoly> via_s;
  /// via_sh - via_s.
  std::vector<MultiPoly> residual;
  bool rational = false;
};
PhiSquare appendix_square();

/// Both composites at a rational point.
std::pair<std::vector<Rat>, std::vector<Rat>> appendix_square_at(const std::vector<Rat>& v);

/// Symbolic square, point checks, and the C- and C*-equivariance of Phi.
Report verify_appendix(int samples, unsigned long seed);

/// (x, y, z, b2, b3, b4) from the S_h parameters (u1m, u2m, u3m, u1p, u2p).
std::vector<Rat> unfolding_coordinates(const std::vector<Rat>& u);
std::vector<MultiPoly> unfolding_coordinates_symbolic(const PolyRing& ring);

}  // namespace foldlie
