#pragma once

#include <memory>
#include <string>
#include <vector>

#include "foldlie/report.hpp"
#include "foldlie/rootsys.hpp"
#include "foldlie/sampling.hpp"
#include "foldlie/weyl.hpp"

namespace foldlie {

/// Genus of a connected cover of the given degree over a genus-g curve;
/// each entry of cycle_types lists the cycle lengths over one branch point.
int riemann_hurwitz_genus(int degree, int base_genus, const std::vector<std::vector<int>>& cycle_types);

/// An enumerated Weyl group with its Cayley table.
struct TargetGroup {
  WeylGroup group;
  std::vector<std::vector<int>> table;
  std::vector<int> inverses;
  std::vector<int> reflections;

  static std::shared_ptr<const TargetGroup> make(WeylGroup g);
  int order() const { return static_cast<int>(table.size()); }
  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const { return inverses[a]; }
  bool is_reflection(int a) const;
};

/// Monodromy of a Galois W-cover of a genus-g curve branched over finitely many points.
struct CoverMonodromy {
  int base_genus = 0;
  /// a_1, b_1, a_2, b_2, ...
  std::vector<int> handle_images;
  std::vector<int> branch_images;
  std::shared_ptr<const TargetGroup> target;
};

/// prod [a_i, b_i] * prod c_k as an element index.
int relation_residual(const CoverMonodromy& cm);
/// Throws std::invalid_argument, naming the residual, when the surface relation fails.
void validate_monodromy(const CoverMonodromy& cm);
/// Every branch image is a reflection.
bool is_transversal(const CoverMonodromy& cm);
/// Subgroup generated by the handle and branch images.
std::vector<int> monodromy_group(const CoverMonodromy& cm);

/// Random transversal data: handle images uniform, branch images reflections,
/// the last one forced by the relation; resampled until the monodromy is onto.
CoverMonodromy random_transversal_monodromy(std::shared_ptr<const TargetGroup> target, int base_genus, int branch_count,
                                            Rng& rng, bool surjective = true);

struct CoverGeometry {
  int component_count = 0;
  std::vector<int> component_genera;
  std::vector<int> component_degrees;
  long euler_characteristic = 0;
  /// 1 - chi / 2; the genus when the cover is connected.
  long total_genus = 0;
  /// Cycle lengths of each branch image acting on the fiber.
  std::vector<std::vector<int>> ramification;
};

/// Fiber W with left translation; components are the orbits of the monodromy group.
CoverGeometry cover_geometry(const CoverMonodromy& cm);

/// W inside W_h as the commutant of a graph automorphism.
struct FoldingContext {
  FoldingDatum datum;
  std::shared_ptr<const TargetGroup> homogeneous;
  std::shared_ptr<const TargetGroup> folded;
  FoldedWeyl fw;
  /// folded index to W_h index
  std::vector<int> embedding;
  int index() const { return homogeneous->order() / folded->order(); }
};

FoldingContext make_folding_context(DynkinType t, int order);

/// Same images viewed in W_h; fiber W_h with left translation.
/// Throws std::invalid_argument if cm does not live in the folded Weyl group.
CoverMonodromy induce_cover(const CoverMonodromy& cm, const FoldingContext& ctx);

/// Component count and Euler characteristic scale by [W_h:W], each coset block
/// i(W) x_j is isomorphic to the original fiber, and each branch image is the
/// product of commuting reflections over an automorphism orbit of roots.
Report check_induced_cover(const CoverMonodromy& original, const CoverMonodromy& induced, const FoldingContext& ctx);

struct FiberSections {
  /// Stabilizer generator in the folded group, -1 for a generic fiber.
  int stabilizer = -1;
  int rank_homogeneous = 0;
  int rank_folded = 0;
  /// Rank of the images of a basis under f -> f_1.
  int restriction_rank = 0;
  bool restrictions_equivariant = false;
  bool ok() const {
    return rank_homogeneous == rank_folded && restriction_rank == rank_folded && restrictions_equivariant;
  }
};

/// W_h-equivariant maps W_h / S -> L against W-equivariant maps W / S -> L, with
/// S generated by the given folded element (or trivial). L sits in the W_h ambient space.
FiberSections fiber_sections(const FoldingContext& ctx, int stabilizer, const Lattice& lattice);

/// fiber_sections over the generic fiber and every distinct branch image of cm.
Report pushforward_sections_check(const CoverMonodromy& cm, const FoldingContext& ctx, const Lattice& lattice,
                                  std::vector<FiberSections>* details = nullptr);

struct FiberRank {
  int rank = 0;
  int generic_rank = 0;
  std::vector<int> branch_ranks;
  int h0 = 0;
};

/// Rank of H^1 of the sheaf of W-equivariant L-valued functions on the fibers,
/// from its Euler characteristic. Throws std::domain_error when H^0 does not vanish.
FiberRank hitchin_fiber_rank(const CoverMonodromy& cm, const Lattice& lattice);

/// Lattice spanned by the standard basis of the ambient space.
Lattice full_lattice(int dim);

}  // namespace foldlie
