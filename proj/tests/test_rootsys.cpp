#include <gtest/gtest.h>

#include <set>

#include "foldlie/rootsys.hpp"

using namespace foldlie;

namespace {

// Classical root counts, written out independently of the library tables.
int classical_root_count(char series, int n) {
  switch (series) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'G': return 12;
    case 'F': return 48;
    default: return n == 6 ? 72 : n == 7 ? 126 : 240;
  }
}

DynkinType T(const char* s) { return DynkinType::parse(s); }

struct FoldRow {
  const char* homogeneous;
  int order;
  const char* coinvariants;
  const char* invariants;
};

}  // namespace

TEST(DynkinType, ParseAndAdmissibility) {
  EXPECT_EQ(T("A5").rank, 5);
  EXPECT_EQ(T("c3").series, 'C');
  EXPECT_THROW(T("E9"), std::invalid_argument);
  EXPECT_THROW(T("G3"), std::invalid_argument);
  EXPECT_THROW(T("D3"), std::invalid_argument);
  EXPECT_THROW(T("Q2"), std::invalid_argument);
  EXPECT_THROW(T("A"), std::invalid_argument);
  EXPECT_THROW(T("A2x"), std::invalid_argument);
}

TEST(BuildRootSystem, Examples) {
  RootSystem a3 = build_root_system(T("A3"));
  EXPECT_EQ(a3.all_roots.size(), 12u);
  EXPECT_EQ(a3.rank(), 3);
  RootSystem g2 = build_root_system(T("G2"));
  EXPECT_EQ(g2.all_roots.size(), 12u);
  Rat lmin = g2.inner(g2.all_roots[0], g2.all_roots[0]), lmax = lmin;
  for (const auto& r : g2.all_roots) {
    lmin = std::min(lmin, g2.inner(r, r));
    lmax = std::max(lmax, g2.inner(r, r));
  }
  EXPECT_EQ(lmax / lmin, Rat(3));
  RootSystem a1 = build_root_system(T("A1"));
  ASSERT_EQ(a1.all_roots.size(), 2u);
  EXPECT_EQ(a1.all_roots[0], RatVector(-a1.all_roots[1]));
}

TEST(BuildRootSystem, InvariantsForEveryType) {
  for (const char* s : {"A1", "A2", "A3", "A5", "A7", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"}) {
    SCOPED_TRACE(s);
    RootSystem rs = build_root_system(T(s));
    EXPECT_EQ(static_cast<int>(rs.all_roots.size()), classical_root_count(rs.type.series, rs.type.rank));
    EXPECT_EQ(rs.cartan(), cartan_matrix(rs.type));
    for (const auto& r : rs.all_roots) EXPECT_TRUE(rs.is_root(RatVector(-r)));
    for (const auto& a : rs.simple_roots) EXPECT_TRUE(rs.is_root(a));
    if (rs.type.simply_laced())
      for (const auto& r : rs.all_roots) EXPECT_EQ(rs.inner(r, r), Rat(2));
    EXPECT_EQ(2 * rs.positive_roots().size(), rs.all_roots.size());
  }
}

TEST(GraphAut, DynkinConditionRejectsEvenA) {
  RootSystem a4 = build_root_system(T("A4"));
  GraphAut flip = GraphAut::standard(T("A4"), 2);
  EXPECT_TRUE(flip.preserves_cartan(a4.cartan()));
  EXPECT_FALSE(flip.is_dynkin_graph_aut(a4));
  FoldingDatum fd{a4, flip};
  EXPECT_THROW(fold_coinvariants(fd), std::invalid_argument);
  EXPECT_THROW(fold_invariants(fd), std::invalid_argument);
}

TEST(GraphAut, OrdersAndValidity) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A5", 2}, {"A7", 2}, {"D4", 2}, {"D4", 3}, {"D5", 2}, {"E6", 2}}) {
    FoldingDatum fd = FoldingDatum::make(T(s), k);
    EXPECT_EQ(fd.aut.computed_order(), k);
    EXPECT_NO_THROW(fd.validate());
  }
  EXPECT_THROW(GraphAut::standard(T("B3"), 2), std::invalid_argument);
  EXPECT_THROW(GraphAut::standard(T("E7"), 2), std::invalid_argument);
}

TEST(Folding, TableRows) {
  const std::vector<FoldRow> rows = {
      {"A3", 2, "C2", "B2"}, {"A5", 2, "C3", "B3"}, {"A7", 2, "C4", "B4"}, {"D4", 2, "B3", "C3"},
      {"D5", 2, "B4", "C4"}, {"D4", 3, "G2", "G2"}, {"E6", 2, "F4", "F4"},
  };
  for (const auto& row : rows) {
    SCOPED_TRACE(std::string(row.homogeneous) + "/" + std::to_string(row.order));
    FoldingDatum fd = FoldingDatum::make(T(row.homogeneous), row.order);
    RootSystem co = fold_coinvariants(fd);
    RootSystem inv = fold_invariants(fd);
    EXPECT_EQ(co.type, T(row.coinvariants));
    EXPECT_EQ(inv.type, T(row.invariants));
    EXPECT_EQ(static_cast<int>(co.all_roots.size()), classical_root_count(co.type.series, co.type.rank));
    EXPECT_EQ(static_cast<int>(inv.all_roots.size()), classical_root_count(inv.type.series, inv.type.rank));
    EXPECT_TRUE(isomorphic(inv, dualize_root_system(co)));
    EXPECT_EQ(co.cartan(), cartan_matrix(co.type));
  }
}

TEST(Folding, TrivialAutomorphismIsIdentity) {
  for (const char* s : {"A3", "D4", "E6"}) {
    FoldingDatum fd = FoldingDatum::make(T(s), 1);
    EXPECT_EQ(fold_coinvariants(fd).type, T(s));
    EXPECT_EQ(fold_invariants(fd).type, T(s));
    EXPECT_TRUE(check_folding_duality(fd).ok);
  }
}

TEST(Folding, OrbitSumFixesInvariantRoots) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A5", 2}, {"D4", 3}, {"E6", 2}}) {
    FoldingDatum fd = FoldingDatum::make(T(s), k);
    RatMatrix p = fd.aut.matrix();
    for (const auto& r : fd.homogeneous.all_roots) {
      if (RatVector(p * r) == r) {
        EXPECT_EQ(orbit_sum(fd, r), r);
      }
    }
  }
}

TEST(Dualize, Examples) {
  EXPECT_EQ(dualize_root_system(build_root_system(T("C3"))).type, T("B3"));
  EXPECT_EQ(dualize_root_system(build_root_system(T("A3"))).type, T("A3"));
  EXPECT_EQ(dualize_root_system(build_root_system(T("G2"))).type, T("G2"));
  for (const char* s : {"B3", "C4", "F4", "G2", "D5"}) {
    RootSystem r = build_root_system(T(s));
    RootSystem dd = dualize_root_system(dualize_root_system(r));
    EXPECT_TRUE(isomorphic(dd, r));
    std::set<RatVector, VectorLess> a(r.all_roots.begin(), r.all_roots.end()), b(dd.all_roots.begin(), dd.all_roots.end());
    EXPECT_EQ(a, b);
  }
}

TEST(Duality, CoinvariantCorootsAreOrbitSums) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A5", 2}, {"D4", 3}, {"D5", 2}, {"E6", 2}}) {
    SCOPED_TRACE(s);
    FoldingDatum fd = FoldingDatum::make(T(s), k);
    DualityReport rep = check_folding_duality(fd);
    EXPECT_TRUE(rep.ok);
    EXPECT_EQ(rep.bijection_size, static_cast<int>(fold_coinvariants(fd).all_roots.size()));
  }
  DualityReport a5 = check_folding_duality(FoldingDatum::make(T("A5"), 2));
  EXPECT_EQ(a5.dual_of_coinvariants, T("B3"));
  EXPECT_EQ(a5.invariants, T("B3"));
}

TEST(Lattices, RanksMatchInvariantSublattice) {
  for (auto [s, k] : std::vector<std::pair<const char*, int>>{{"A3", 2}, {"A3", 1}, {"D4", 3}, {"A5", 2}, {"E6", 2}}) {
    FoldingDatum fd = FoldingDatum::make(T(s), k);
    auto [character, cocharacter] = folded_lattices(fd);
    // rank of the fixed sublattice of a permutation action is the nullity of (P - 1)
    const int expected = static_cast<int>(nullspace(RatMatrix(fd.aut.matrix() - identity(fd.homogeneous.rank()))).size());
    EXPECT_EQ(character.rank, expected);
    EXPECT_EQ(cocharacter.rank, expected);
    EXPECT_EQ(character.rank, fold_coinvariants(fd).rank());
    RatMatrix p = fd.aut.matrix();
    for (const auto& v : cocharacter.basis) EXPECT_EQ(RatVector(p * v), v);
    for (const auto& v : character.basis) EXPECT_EQ(RatVector(p * v), v);
  }
  auto [c1, c2] = folded_lattices(FoldingDatum::make(T("A3"), 2));
  EXPECT_EQ(c1.rank, 2);
  EXPECT_EQ(c2.rank, 2);
  auto [d1, d2] = folded_lattices(FoldingDatum::make(T("D4"), 3));
  EXPECT_EQ(d1.rank, 2);
  EXPECT_EQ(d2.rank, 2);
}

TEST(Lattices, CocharactersPairIntegrallyWithRoots) {
  FoldingDatum fd = FoldingDatum::make(T("A5"), 2);
  auto [character, cocharacter] = folded_lattices(fd);
  for (const auto& v : cocharacter.basis)
    for (const auto& r : fd.homogeneous.all_roots) EXPECT_TRUE(fd.homogeneous.inner(v, r).is_integer());
}
