#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "foldlie/poly.hpp"
#include "foldlie/rootsys.hpp"
#include "foldlie/tower.hpp"

namespace foldlie {

/// Isolated ADE surface singularity f(x, y, z) = 0 with coprime weights.
struct QuasiHomogSing {
  std::string name;
  DynkinType type;
  PolyRing ring;
  MultiPoly poly;
  std::array<int, 3> weights{};
  int degree = 0;

  /// f is quasi-homogeneous and (w_x + w_y + w_z) h = deg(f) (h + 1).
  bool valid() const;
};

/// A_n: x^{n+1} - yz; D4: x^3 + y^3 + z^2; D_n (n >= 5): x^{n-1} + x y^2 + z^2;
/// E6: x^4 + y^3 + z^2; E7: x^3 y + y^3 + z^2; E8: x^5 + y^3 + z^2.
QuasiHomogSing singularity(const DynkinType& t);

/// Quasi-homogeneous monomials spanning C[x,y,z] / (f_x, f_y, f_z), highest
/// degree first. Computed degree by degree with exact linear algebra.
std::vector<MultiPoly> jacobian_basis(const QuasiHomogSing& s);
/// p lies in the Jacobian ideal; p must be a polynomial in x, y, z.
bool in_jacobian_ideal(const QuasiHomogSing& s, const MultiPoly& p);

struct WeightTable {
  DynkinType homogeneous;
  std::array<int, 3> coprime{};
  /// Weights compatible with the slice action: doubled except for A_{2k}.
  std::array<int, 3> lie{};
  int factor = 1;
};
/// Accepts a simply laced type or a folded one (C_n, B_n, F4, G2).
WeightTable weight_convention(const DynkinType& t);

/// Linear action on (x, y, z), possibly over a root of unity.
struct GroupAction {
  std::string name;
  int order = 1;
  AlgTower tower;
  /// Images of x, y, z in PolyRing(x, y, z, tower generators).
  std::vector<MultiPoly> images;
};

GroupAction trivial_action();
/// A_{2k-1}: (-x, z, y); D4 order 3: (mu x, mu^2 y, z); D4 order 2: (y, x, -z);
/// D_n: (x, -y, -z); E6: (-x, y, -z).
GroupAction standard_action(const DynkinType& t, int order);

struct DeformationFamily {
  QuasiHomogSing sing;
  std::vector<MultiPoly> basis;
  std::vector<std::string> b_names;
  /// deg(f) - deg(g_j) in the coprime weights.
  std::vector<int> base_weights;
  /// x, y, z, the b_j, then the tower generators.
  PolyRing ring;
  MultiPoly poly;
  GroupAction action;
  /// Images of x, y, z and of each b_j under the extended action.
  std::vector<MultiPoly> coordinate_images;
  std::vector<MultiPoly> b_images;
  /// Coordinates on the fixed base and the family over it.
  std::vector<std::string> invariant_names;
  std::vector<int> invariant_weights;
  std::map<std::string, MultiPoly> restriction;
  MultiPoly invariant_poly;

  /// Weights of x, y, z, b_j (coprime), tower generators weight 0.
  std::vector<int> ring_weights() const;
  /// Applies the extended action to a polynomial of ring, reducing in the tower.
  MultiPoly act(const MultiPoly& p) const;
};

/// f + sum b_j g_j with the action extended so the family is preserved.
/// Throws std::invalid_argument if the action does not preserve f.
DeformationFamily semiuniversal_family(const QuasiHomogSing& s, const GroupAction& action);

/// X_b inside tot(L^{w_x} + L^{w_y} + L^{w_z}) with L^2 = K.
struct ThreefoldFamily {
  std::string name;
  DynkinType folded;
  DeformationFamily deformation;
  WeightTable weights;
  /// Powers of L carrying alpha_1, alpha_2, alpha_3.
  std::array<int, 3> coordinate_twists{};
  /// Powers of L carrying the invariant base coordinates.
  std::vector<int> base_twists;
};

/// C_n from A_{2n-1}/2, B_n from D_{n+1}/2, F4 from E6/2, G2 from D4/3;
/// simply laced types with the trivial action.
ThreefoldFamily threefold_family(const DynkinType& folded);

struct FixedLocus {
  /// Substitution for (x, y, z) in terms of alpha.
  std::vector<MultiPoly> point;
  /// Restricted equation in alpha and the base.
  MultiPoly equation;
  /// alpha is a section of K^m; the branch section lives in K^{2m}.
  int m = 0;
  bool point_is_fixed = false;
  bool transverse_directions_moved = false;
};

/// Hand-coded elimination for C2 and G2.
FixedLocus fixed_locus(const ThreefoldFamily& tf);
/// Riemann-Hurwitz for the double cover alpha^2 = s, s in H^0(K^{2m}).
int fixed_locus_genus(const ThreefoldFamily& tf, int g);

struct ExceptionalDivisor {
  int components = 0;
  /// Rank of the quadratic tangent cone of the transversal A_{k-1} relation.
  int tangent_cone_rank = 0;
  /// For order 3: the proper-transform relations after nu-substitution.
  std::vector<MultiPoly> residuals;
};
ExceptionalDivisor exceptional_divisor(int order);
int exceptional_divisor_components(int order);

}  // namespace foldlie
