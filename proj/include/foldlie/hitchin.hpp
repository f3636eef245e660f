#pragma once

#include <vector>

#include "foldlie/rootsys.hpp"
#include "foldlie/weyl.hpp"

namespace foldlie {

/// h^0(K^d) = (2d - 1)(g - 1) for d >= 2, g >= 2.
int riemann_roch_dim(int d, int g);

struct HitchinBase {
  DynkinType group_type;
  int genus = 2;
  std::vector<int> degrees;
  std::vector<int> summand_dims;
  int total() const;
};

/// Throws std::invalid_argument for g < 2.
HitchinBase dim_base(DynkinType t, int g);
int fiber_dim(DynkinType t, int g);

/// Zeros of the discriminant, a section of K^{|R|}: simple branch points of a
/// cameral curve transversal to the discriminant.
int transversal_branch_count(DynkinType t, int g);

struct BaseMatch {
  DynkinType homogeneous;
  DynkinType folded;
  int genus = 2;
  std::vector<int> homogeneous_degrees;
  /// Degrees whose restricted generator is not generated by lower ones.
  std::vector<int> surviving_degrees;
  int homogeneous_total = 0;
  int invariant_total = 0;
  int folded_total = 0;
  /// Surviving degrees taken from the stored tables (no matrix model).
  bool table_derived = false;
  bool ok() const { return invariant_total == folded_total; }
};

BaseMatch folded_base_match(const FoldingDatum& fd, int g);

struct IsogenyDims {
  DynkinType folded;
  int genus = 2;
  int dim_B = 0;
  int genus_fixed_locus = 0;
  int aut_order = 1;
  int dim_J2Z = 0;
  /// h^3(Z) = 2 dim_B + 2 (|a| - 1) g(X^C)
  int b3 = 0;
};

/// Supported: A3 with order 2, D4 with order 3, and any trivial automorphism.
IsogenyDims isogeny_dimensions(const FoldingDatum& fd, int g);

/// Number of group elements of each length.
std::vector<long> poincare_polynomial(const WeylGroup& w);
/// Degrees d_i with P(t) = prod (1 - t^{d_i}) / (1 - t).
std::vector<int> degrees_from_poincare(const std::vector<long>& p, int rank);

}  // namespace foldlie
