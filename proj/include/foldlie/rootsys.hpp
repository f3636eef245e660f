#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "foldlie/linalg.hpp"

namespace foldlie {

struct DynkinType {
  char series = 'A';
  int rank = 1;

  /// Parses "A5", "C3", "G2", ...; throws on inadmissible input.
  static DynkinType parse(const std::string& s);
  bool admissible() const;
  bool simply_laced() const { return series == 'A' || series == 'D' || series == 'E'; }
  std::string str() const { return std::string(1, series) + std::to_string(rank); }
  int root_count() const;
  long weyl_order() const;
  /// Degrees of the fundamental invariants (exponents + 1).
  std::vector<int> degrees() const;
  bool operator==(const DynkinType&) const = default;
};

/// Every admissible type of the given rank, in series order.
std::vector<DynkinType> types_of_rank(int rank);

/// Gram matrix of the simple roots in Bourbaki labelling.
RatMatrix gram_matrix(DynkinType t);
/// Cartan integers 2 (a_i, a_j) / (a_j, a_j).
RatMatrix cartan_from_gram(const RatMatrix& simple_gram);
RatMatrix cartan_matrix(DynkinType t);

struct VectorLess {
  bool operator()(const RatVector& a, const RatVector& b) const;
};

/// Roots live in an ambient rational space carrying the inner product `gram`.
struct RootSystem {
  int ambient_dim = 0;
  RatMatrix gram;
  std::vector<RatVector> simple_roots;
  std::vector<RatVector> all_roots;
  DynkinType type;

  int rank() const { return static_cast<int>(simple_roots.size()); }
  Rat inner(const RatVector& a, const RatVector& b) const;
  RatMatrix simple_gram() const;
  RatMatrix cartan() const;
  /// Expansion of a vector in the span of the simple roots.
  RatVector simple_coordinates(const RatVector& v) const;
  bool is_root(const RatVector& v) const;
  bool is_positive(const RatVector& root) const;
  std::vector<RatVector> positive_roots() const;
  /// Simple roots as the columns of an ambient_dim x rank matrix.
  RatMatrix simple_matrix() const;
};

RootSystem build_root_system(DynkinType t);

/// Closure of the simple roots under their own reflections.
std::vector<RatVector> generate_roots(const RatMatrix& gram, const std::vector<RatVector>& simple);

/// Type and relabelling `perm` with cartan_matrix(type)(k,l) == cartan(perm[k], perm[l]).
/// The identity labelling is tried against every type before any permutation.
std::optional<std::pair<DynkinType, std::vector<int>>> identify_cartan(const RatMatrix& cartan);

/// Builds a root system from simple roots, identifying and relabelling its type.
RootSystem root_system_from_simple(const RatMatrix& gram, const std::vector<RatVector>& simple);

struct GraphAut {
  std::vector<int> perm;
  int order = 1;

  static GraphAut identity(int rank);
  /// Standard diagram automorphism of the given order for A, D, E6 (and the A_{2k} flip).
  static GraphAut standard(DynkinType t, int order);
  /// Linear map on simple-root coordinates sending a_i to a_{perm[i]}.
  RatMatrix matrix() const;
  int apply(int i) const { return perm.at(i); }
  bool preserves_cartan(const RatMatrix& cartan) const;
  int computed_order() const;
  /// (a(r), r) is 0 or (r, r) for every root r.
  bool is_dynkin_graph_aut(const RootSystem& rs) const;
};

struct FoldingDatum {
  RootSystem homogeneous;
  GraphAut aut;

  static FoldingDatum make(DynkinType t, int order);
  /// Orbits of simple-root indices, ordered by smallest member; each orbit lists i, a(i), a^2(i), ...
  std::vector<std::vector<int>> simple_orbits() const;
  /// Throws std::invalid_argument unless the datum is valid.
  void validate() const;
};

/// Root system R_{h,C}: orbit averages of the roots of the homogeneous system.
RootSystem fold_coinvariants(const FoldingDatum& fd);
/// Root system R_h^C: orbit sums of the roots.
RootSystem fold_invariants(const FoldingDatum& fd);
/// Coroots 2 r / (r, r) in the same ambient space.
RootSystem dualize_root_system(const RootSystem& r);
/// Orbit of a vector under the automorphism, as i, a(i), ... without repeats.
std::vector<RatVector> aut_orbit(const FoldingDatum& fd, const RatVector& v);
RatVector orbit_sum(const FoldingDatum& fd, const RatVector& v);
RatVector orbit_average(const FoldingDatum& fd, const RatVector& v);

/// Same root system re-expressed in coordinates of its own simple roots.
RootSystem intrinsic(const RootSystem& r);

struct DualityReport {
  bool ok = false;
  int bijection_size = 0;
  DynkinType dual_of_coinvariants;
  DynkinType invariants;
  std::vector<std::string> messages;
};

DualityReport check_folding_duality(const FoldingDatum& fd);

/// True when a and b have equal Cartan matrices after some relabelling.
bool isomorphic(const RootSystem& a, const RootSystem& b);

struct Lattice {
  int rank = 0;
  std::vector<RatVector> basis;
};

/// (character, cocharacter) lattices of the adjoint folded group, inside the homogeneous ambient space.
std::pair<Lattice, Lattice> folded_lattices(const FoldingDatum& fd);

}  // namespace foldlie
