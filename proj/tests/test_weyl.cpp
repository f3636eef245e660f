#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "foldlie/weyl.hpp"

using namespace foldlie;

namespace {

DynkinType T(const char* s) { return DynkinType::parse(s); }

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Classical orders, written out directly.
long classical_weyl_order(char series, int n) {
  switch (series) {
    case 'A': return factorial(n + 1);
    case 'B':
    case 'C': return (1L << n) * factorial(n);
    case 'D': return (1L << (n - 1)) * factorial(n);
    case 'G': return 12;
    case 'F': return 1152;
    default: return 51840;
  }
}

RatMatrix word_matrix(const WeylGroup& g, const std::vector<int>& word) {
  RatMatrix m = identity(g.dim());
  for (int k : word) m = RatMatrix(m * g.generators[k]);
  return m;
}

}  // namespace

TEST(WeylGroup, OrdersMatchClassicalFormulas) {
  for (const char* s : {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "C4", "D4", "D5", "G2", "F4"}) {
    SCOPED_TRACE(s);
    WeylGroup g = generate_weyl(build_root_system(T(s)));
    EXPECT_EQ(static_cast<long>(g.order()), classical_weyl_order(g.root.type.series, g.root.type.rank));
  }
}

TEST(WeylGroup, Examples) {
  EXPECT_EQ(generate_weyl(build_root_system(T("A3"))).order(), 24u);
  EXPECT_EQ(generate_weyl(build_root_system(T("C2"))).order(), 8u);
  EXPECT_EQ(generate_weyl(build_root_system(T("A1"))).order(), 2u);
}

TEST(WeylGroup, LargeGroupsAreGated) {
  if (large_enumeration_enabled()) GTEST_SKIP() << "large enumeration enabled";
  EXPECT_THROW(generate_weyl(build_root_system(T("E6"))), std::length_error);
  EXPECT_THROW(generate_weyl(build_root_system(T("A7"))), std::length_error);
}

TEST(WeylGroup, WordsReproduceMatricesAndPreserveRoots) {
  for (const char* s : {"A3", "B3", "G2"}) {
    WeylGroup g = generate_weyl(build_root_system(T(s)));
    std::set<RatVector, VectorLess> roots(g.root.all_roots.begin(), g.root.all_roots.end());
    for (std::size_t i = 0; i < g.order(); ++i) {
      const auto& e = g.elements[i];
      EXPECT_EQ(word_matrix(g, e.word), e.matrix);
      for (const auto& r : g.root.all_roots) EXPECT_TRUE(roots.count(RatVector(e.matrix * r)));
      // isometry of the ambient form
      EXPECT_EQ(RatMatrix(e.matrix.transpose() * g.root.gram * e.matrix), g.root.gram);
      EXPECT_EQ(g.multiply(static_cast<int>(i), g.inverse(static_cast<int>(i))), 0);
    }
    auto refl = g.reflections();
    EXPECT_EQ(refl.size(), g.root.positive_roots().size());
    EXPECT_EQ(std::set<int>(refl.begin(), refl.end()).size(), refl.size());
  }
}

TEST(FixedSubgroup, OrdersAndIsomorphism) {
  struct Row {
    const char* type;
    int order;
    std::size_t expected;
  };
  for (const Row& row : std::vector<Row>{{"A3", 2, 8}, {"A5", 2, 48}, {"D4", 2, 48}, {"D4", 3, 12}, {"D5", 2, 384}, {"A3", 1, 24}}) {
    SCOPED_TRACE(std::string(row.type) + "/" + std::to_string(row.order));
    FoldingDatum fd = FoldingDatum::make(T(row.type), row.order);
    WeylGroup wh = generate_weyl(fd.homogeneous);
    FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
    EXPECT_EQ(fw.fixed.order(), row.expected);
    EXPECT_EQ(fw.folded.order(), row.expected);
    EXPECT_TRUE(fw.isomorphism_verified);
    // restriction is a homomorphism
    for (int i = 0; i < 6 && i < static_cast<int>(fw.fixed.order()); ++i)
      for (int j = 0; j < static_cast<int>(fw.fixed.order()); j += 3) {
        RatMatrix prod = fw.fixed.matrix(i) * fw.fixed.matrix(j);
        EXPECT_EQ(fw.restrict(prod), RatMatrix(fw.folded.matrix(fw.restriction[i]) * fw.folded.matrix(fw.restriction[j])));
      }
  }
}

TEST(FixedSubgroup, RejectsNonNormalizingMap) {
  WeylGroup wh = generate_weyl(build_root_system(T("A3")));
  RatMatrix bad = identity(3);
  bad(0, 1) = Rat(1);
  EXPECT_THROW(commutant_fixed_subgroup(wh, bad, fold_invariants(FoldingDatum::make(T("A3"), 2))), std::invalid_argument);
}

TEST(FoldedReflection, OrbitProductsGenerateFoldedGroup) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"D4", 3}, {"A5", 2}}) {
    FoldingDatum fd = FoldingDatum::make(T(s), k);
    WeylGroup wh = generate_weyl(fd.homogeneous);
    FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
    std::set<int> simple_images;
    for (const auto& orbit : fd.simple_orbits()) {
      WeylElement e = folded_reflection(wh, orbit);
      RatMatrix r = fw.restrict(e.matrix);
      const int idx = fw.folded.index_of(r);
      ASSERT_GE(idx, 0);
      // a reflection of the folded system: order 2 with a 1-dimensional (-1)-eigenspace
      EXPECT_EQ(RatMatrix(r * r), identity(static_cast<int>(r.rows())));
      EXPECT_EQ(nullspace(RatMatrix(r + identity(static_cast<int>(r.rows())))).size(), 1u);
      simple_images.insert(idx);
    }
    EXPECT_EQ(simple_images.size(), fd.simple_orbits().size());
  }
  WeylGroup a3 = generate_weyl(build_root_system(T("A3")));
  EXPECT_THROW(folded_reflection(a3, {0, 1}), std::invalid_argument);
}

TEST(Membership, RegularPointCertifies) {
  FoldingDatum fd = FoldingDatum::make(T("A3"), 2);
  WeylGroup wh = generate_weyl(fd.homogeneous);
  FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
  RatMatrix a = fd.aut.matrix();
  // sp4 element diag(1, 2, -1, -2) sits in sl4 as diag(2, 1, -1, -2)
  RatVector t = sl_diag_to_coroot({Rat(2), Rat(1), Rat(-1), Rat(-2)});
  EXPECT_EQ(t, vec({Rat(2), Rat(3), Rat(2)}));
  int tried = 0;
  for (std::size_t w = 0; w < wh.order(); ++w) {
    RatVector wt = wh.matrix(static_cast<int>(w)) * t;
    if (RatVector(a * wt) != wt) continue;
    ++tried;
    MembershipResult m = orbit_regular_membership(wh, fw, a, t, static_cast<int>(w));
    EXPECT_TRUE(m.regular);
    EXPECT_TRUE(m.orbits_equal);
    EXPECT_TRUE(m.certified);
  }
  EXPECT_EQ(tried, 8);
}

TEST(Membership, NonRegularPointNeedNotCommute) {
  FoldingDatum fd = FoldingDatum::make(T("A3"), 2);
  WeylGroup wh = generate_weyl(fd.homogeneous);
  FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
  RatMatrix a = fd.aut.matrix();
  RatVector t = sl_diag_to_coroot({Rat(-1), Rat(1), Rat(-1), Rat(1)});
  EXPECT_EQ(t, vec({Rat(-1), Rat(0), Rat(-1)}));
  bool saw_noncommuting = false;
  for (std::size_t w = 0; w < wh.order(); ++w) {
    const RatMatrix& m = wh.matrix(static_cast<int>(w));
    RatVector wt = m * t;
    if (RatVector(a * wt) != wt) continue;
    MembershipResult r = orbit_regular_membership(wh, fw, a, t, static_cast<int>(w));
    EXPECT_FALSE(r.regular);
    EXPECT_TRUE(r.orbits_equal);
    if (RatMatrix(a * m) != RatMatrix(m * a)) saw_noncommuting = true;
  }
  EXPECT_TRUE(saw_noncommuting);
  EXPECT_THROW(orbit_regular_membership(wh, fw, a, vec({Rat(1), Rat(0), Rat(0)}), 0), std::invalid_argument);
}

TEST(Quotient, InvariantsIsomorphismSampled) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"D4", 2}, {"D4", 3}, {"A5", 2}}) {
    SCOPED_TRACE(s);
    Report rep = quotient_invariants_iso_check(FoldingDatum::make(T(s), k), 30, 42);
    EXPECT_TRUE(rep.ok()) << (rep.failures.empty() ? "" : rep.failures[0].operation + " " + rep.failures[0].input);
    EXPECT_GE(rep.cases_run, 30 * 5);
  }
}

TEST(WeylVector, FoldedPositiveCorootsSumToHomogeneous) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A5", 2}, {"D4", 3}, {"D5", 2}, {"E6", 2}}) {
    FoldingDatum fd = FoldingDatum::make(T(s), k);
    RootSystem inv = fold_invariants(fd);
    RatVector rho = RatVector::Constant(fd.homogeneous.ambient_dim, Rat(0));
    RatVector rho_h = rho;
    for (const auto& r : inv.positive_roots()) rho += r;
    for (const auto& r : fd.homogeneous.positive_roots()) rho_h += r;
    EXPECT_EQ(rho, rho_h);
  }
}

TEST(FoldedReflection, SwapsDiagonalEntriesOfCartan) {
  FoldingDatum fd = FoldingDatum::make(T("A3"), 2);
  WeylGroup wh = generate_weyl(fd.homogeneous);
  WeylElement s13 = folded_reflection(wh, {0, 2});
  EXPECT_EQ(s13.matrix, RatMatrix(wh.generators[0] * wh.generators[2]));
  EXPECT_EQ(RatMatrix(fd.aut.matrix() * s13.matrix), RatMatrix(s13.matrix * fd.aut.matrix()));
  const Rat u(3), v(-5, 2);
  // sp4 diag(u, v, -u, -v) is sl4 diag(v, u, -u, -v)
  RatVector t = sl_diag_to_coroot({v, u, -u, -v});
  RatVector swapped = sl_diag_to_coroot({u, v, -v, -u});
  EXPECT_EQ(RatVector(s13.matrix * t), swapped);
  EXPECT_EQ(folded_reflection(wh, {1}).matrix, wh.generators[1]);

  FoldingDatum d4 = FoldingDatum::make(T("D4"), 3);
  WeylGroup w4 = generate_weyl(d4.homogeneous);
  for (const auto& orbit : d4.simple_orbits())
    if (orbit.size() == 3) {
      RatMatrix m = folded_reflection(w4, orbit).matrix;
      EXPECT_NE(m, identity(4));
      EXPECT_EQ(RatMatrix(m * m), identity(4));
    }
}

TEST(Membership, ZeroIsTrivial) {
  FoldingDatum fd = FoldingDatum::make(T("A3"), 2);
  WeylGroup wh = generate_weyl(fd.homogeneous);
  FoldedWeyl fw = commutant_fixed_subgroup(wh, fd);
  RatVector zero = RatVector::Constant(3, Rat(0));
  for (std::size_t w = 0; w < wh.order(); ++w)
    EXPECT_TRUE(orbit_regular_membership(wh, fw, fd.aut.matrix(), zero, static_cast<int>(w)).orbits_equal);
}

TEST(Quotient, TrivialAutomorphismDegenerates) {
  Report rep = quotient_invariants_iso_check(FoldingDatum::make(T("A3"), 1), 10, 7);
  EXPECT_TRUE(rep.ok());
}

TEST(FoldedDiagram, HasNoGraphAutomorphisms) {
  // Checked per type: no non-identity relabelling preserves the folded Cartan matrix.
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A5", 2}, {"A7", 2}, {"D4", 2}, {"D4", 3}, {"D5", 2}, {"E6", 2}}) {
    SCOPED_TRACE(s);
    RatMatrix c = fold_invariants(FoldingDatum::make(T(s), k)).cartan();
    std::vector<int> perm(c.rows());
    std::iota(perm.begin(), perm.end(), 0);
    int preserving = 0;
    do {
      if (GraphAut{perm, 1}.preserves_cartan(c)) ++preserving;
    } while (std::next_permutation(perm.begin(), perm.end()));
    EXPECT_EQ(preserving, 1);
  }
}

TEST(FixedSubgroup, LargeCasesWhenEnabled) {
  if (!large_enumeration_enabled()) GTEST_SKIP() << "set FOLDLIE_ENABLE_E6=1";
  for (auto [s, expected] : std::vector<std::pair<const char*, std::size_t>>{{"A7", 384}, {"E6", 1152}}) {
    FoldingDatum fd = FoldingDatum::make(T(s), 2);
    FoldedWeyl fw = commutant_fixed_subgroup(generate_weyl(fd.homogeneous), fd);
    EXPECT_EQ(fw.fixed.order(), expected);
    EXPECT_TRUE(fw.isomorphism_verified);
  }
}
