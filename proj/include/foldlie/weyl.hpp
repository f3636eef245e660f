#pragma once

#include <unordered_map>
#include <vector>

#include "foldlie/linalg.hpp"
#include "foldlie/report.hpp"
#include "foldlie/rootsys.hpp"

namespace foldlie {

struct WeylElement {
  RatMatrix matrix;
  /// Generator indices; matrix = s_{word[0]} s_{word[1]} ...
  std::vector<int> word;
};

/// Fully enumerated Weyl group acting on the ambient space of its root system.
class WeylGroup {
 public:
  RootSystem root;
  std::vector<RatMatrix> generators;
  /// elements[0] is the identity.
  std::vector<WeylElement> elements;

  std::size_t order() const { return elements.size(); }
  int dim() const { return root.ambient_dim; }
  /// Index of the element with this matrix, or -1.
  int index_of(const RatMatrix& m) const;
  int multiply(int i, int j) const;
  int inverse(int i) const;
  const RatMatrix& matrix(int i) const { return elements.at(i).matrix; }
  /// Indices of the reflections s_b, one per positive root b in root order.
  std::vector<int> reflections() const;
  /// Builds the element table and lookup index from a list of matrices.
  void index_elements();

 private:
  std::unordered_map<RatMatrix, int, MatrixHash, MatrixEqual> lookup_;
};

/// s_r(v) = v - 2 (r, v) / (r, r) r, in ambient coordinates.
RatMatrix reflection_matrix(const RootSystem& rs, const RatVector& root);

/// True when FOLDLIE_ENABLE_E6=1 is set.
bool large_enumeration_enabled();

/// Breadth-first closure over the simple reflections.
/// Groups above 10000 elements need FOLDLIE_ENABLE_E6=1; above 60000 are always rejected.
WeylGroup generate_weyl(const RootSystem& r);

struct FoldedWeyl {
  /// The centralizer of a inside W_h, with words in the generators of W_h.
  WeylGroup fixed;
  /// fixed element k sits at index fixed_in_ambient[k] of W_h.
  std::vector<int> fixed_in_ambient;
  /// Weyl group of the folded system in coordinates of its simple roots.
  WeylGroup folded;
  /// fixed element k restricts to folded element restriction[k].
  std::vector<int> restriction;
  /// Folded simple roots (orbit sums) as columns in the ambient space.
  RatMatrix basis;
  RatMatrix left_inverse;
  bool isomorphism_verified = false;

  RatMatrix restrict(const RatMatrix& w) const;
  /// Inverse of the restriction: folded index to W_h index.
  int embed(int folded_index) const;
};

/// Elements of wh commuting with a, restricted to the a-fixed subspace and
/// matched bijectively with the Weyl group of `folded`.
FoldedWeyl commutant_fixed_subgroup(const WeylGroup& wh, const RatMatrix& a, const RootSystem& folded);
FoldedWeyl commutant_fixed_subgroup(const WeylGroup& wh, const FoldingDatum& fd);

/// Product of the reflections in a set of pairwise orthogonal simple roots.
WeylElement folded_reflection(const WeylGroup& wh, const std::vector<int>& orbit);

struct MembershipResult {
  bool orbits_equal = false;
  bool regular = false;
  /// For regular t: w commutes with a and restricts into the folded group.
  bool certified = false;
  RatMatrix restricted;
};

/// Compares the W-orbits of t and w t for t in the fixed subspace.
MembershipResult orbit_regular_membership(const WeylGroup& wh, const FoldedWeyl& fw, const RatMatrix& a,
                                          const RatVector& t, int w);

/// Coroot coordinates of diag(x_1, ..., x_n) in sl_n: c_k = x_1 + ... + x_k.
RatVector sl_diag_to_coroot(const std::vector<Rat>& diag);

/// Sampled check that t/W -> (t_h/W_h)^C is injective and surjective.
Report quotient_invariants_iso_check(const FoldingDatum& fd, int sample_count, unsigned long seed);

/// Orbit of v under every element of the group.
std::vector<RatVector> weyl_orbit(const WeylGroup& g, const RatVector& v);

/// Moves v into the closed fundamental chamber (v, a_i) >= 0 by simple reflections.
RatVector to_dominant(const WeylGroup& g, const RatVector& v);

}  // namespace foldlie
