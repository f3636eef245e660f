#include <gtest/gtest.h>

#include <random>

#include "foldlie/charpoly.hpp"
#include "foldlie/linalg.hpp"
#include "foldlie/poly.hpp"
#include "foldlie/tower.hpp"
#include "oracles.hpp"

using namespace foldlie;

TEST(Rat, CanonicalForm) {
  Rat a(6, -4);
  EXPECT_EQ(a.num(), -3);
  EXPECT_EQ(a.den(), 2);
  EXPECT_EQ(Rat::parse("-3/2"), a);
  EXPECT_EQ(Rat(1, 3) + Rat(1, 6), Rat(1, 2));
  EXPECT_THROW(Rat(1, 0), std::domain_error);
  EXPECT_THROW(Rat(0).inverse(), std::domain_error);
  EXPECT_EQ(pow(Rat(2, 3), -2), Rat(9, 4));
}

TEST(Nullspace, ZeroMatrixGivesStandardBasis) {
  auto basis = nullspace(zeros(2, 2));
  ASSERT_EQ(basis.size(), 2u);
  EXPECT_EQ(rank(hstack(basis)), 2);
}

TEST(Nullspace, IdentityIsInjective) { EXPECT_TRUE(nullspace(identity(3)).empty()); }

TEST(Nullspace, RankNullityOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int rows = 1 + static_cast<int>(rng() % 5);
    const int cols = 1 + static_cast<int>(rng() % 6);
    const int r = static_cast<int>(rng() % (std::min(rows, cols) + 1));
    RatMatrix m = r == 0 ? zeros(rows, cols) : oracle::random_rank_matrix(rng, rows, cols, r);
    auto basis = nullspace(m);
    ASSERT_EQ(static_cast<int>(basis.size()) + rank(m), cols);
    for (const auto& v : basis) ASSERT_TRUE(is_zero(RatMatrix(m * v)));
    if (!basis.empty()) ASSERT_EQ(rank(hstack(basis)), static_cast<int>(basis.size()));
  }
}

TEST(Linalg, InverseAndDeterminantAgreeWithLeibniz) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    RatMatrix m = oracle::random_matrix(rng, 4, 4);
    EXPECT_EQ(determinant(m), oracle::leibniz_det(m));
    auto inv = inverse(m);
    if (determinant(m).is_zero()) {
      EXPECT_FALSE(inv.has_value());
    } else {
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(RatMatrix(m * *inv), identity(4));
    }
  }
  EXPECT_FALSE(inverse(zeros(2, 2)).has_value());
}

TEST(CharPoly, DiagonalExample) {
  RatMatrix d = diag({1, 2, -1, -2});
  auto c = char_poly_coeffs(d);
  EXPECT_EQ(c[4], Rat(1));
  EXPECT_EQ(c[3], Rat(0));
  EXPECT_EQ(c[2], Rat(-5));
  EXPECT_EQ(c[1], Rat(0));
  EXPECT_EQ(c[0], Rat(4));
  PolyRing ring({"x"});
  MultiPoly x = ring.var("x");
  EXPECT_EQ(char_poly(d), pow(x, 4) - Rat(5) * pow(x, 2) + MultiPoly(Rat(4)));
}

TEST(CharPoly, ZeroAndNilpotent) {
  PolyRing ring({"x"});
  EXPECT_EQ(char_poly(zeros(2, 2)), pow(ring.var("x"), 2));
  RatMatrix x = unit(4, 1, 3) + unit(4, 2, 4);
  EXPECT_EQ(char_poly(x), pow(ring.var("x"), 4));
  EXPECT_THROW(char_poly(zeros(2, 3)), std::invalid_argument);
}

TEST(CharPoly, ConjugationInvariance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 4);
    RatMatrix m = oracle::random_matrix(rng, n, n);
    RatMatrix p = oracle::random_matrix(rng, n, n);
    auto pinv = inverse(p);
    if (!pinv) continue;
    EXPECT_EQ(char_poly(RatMatrix(p * m * *pinv)), char_poly(m));
  }
}

TEST(ExteriorTrace, Examples) {
  EXPECT_EQ(exterior_trace(diag({1, 2, -1, -2}), 2), Rat(-5));
  EXPECT_EQ(exterior_trace(diag({1, 2, -1, -2}), 2), oracle::elementary_symmetric({1, 2, -1, -2}, 2));
  EXPECT_EQ(exterior_trace(identity(4), 4), Rat(1));
  EXPECT_THROW(exterior_trace(identity(3), 4), std::out_of_range);
  EXPECT_THROW(exterior_trace(identity(3), 0), std::out_of_range);
}

TEST(ExteriorTrace, MatchesPrincipalMinorsOracle) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    RatMatrix m = oracle::random_matrix(rng, n, n);
    for (int k = 1; k <= n; ++k) ASSERT_EQ(exterior_trace(m, k), oracle::principal_minor_sum(m, k));
  }
}

TEST(CharPoly, SymbolicMatchesPointwise) {
  PolyRing ring({"a", "b", "c"});
  auto a = ring.var("a"), b = ring.var("b"), c = ring.var("c");
  PolyMatrix m(3, 3);
  m << a, b, MultiPoly(Rat(1)), c, a * b, MultiPoly(Rat(0)), MultiPoly(Rat(2)), c, b;
  auto coeffs = char_poly_coeffs(m);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Rat> pt{oracle::random_rat(rng), oracle::random_rat(rng), oracle::random_rat(rng)};
    auto expect = char_poly_coeffs(eval(m, pt));
    for (int k = 0; k <= 3; ++k) ASSERT_EQ(coeffs[k].eval(pt), expect[k]);
  }
}

TEST(Pfaffian, SquaresToDeterminant) {
  std::mt19937_64 rng(23);
  for (int n : {2, 4, 6}) {
    RatMatrix r = oracle::random_matrix(rng, n, n);
    RatMatrix s = r - RatMatrix(r.transpose());
    Rat pf = pfaffian(s);
    EXPECT_EQ(pf * pf, oracle::leibniz_det(s));
  }
  RatMatrix j = from_rows({{0, 1}, {-1, 0}});
  EXPECT_EQ(pfaffian(j), Rat(1));
}

TEST(PolyEval, Examples) {
  EXPECT_EQ(poly_eval(MultiPoly(Rat(7)), {{"x", Rat(3)}}), Rat(7));
  PolyRing ring({"x", "y", "z"});
  auto x = ring.var("x"), y = ring.var("y"), z = ring.var("z");
  MultiPoly f = pow(x, 4) - y * z;
  EXPECT_EQ(poly_eval(f, {{"x", 1}, {"y", 1}, {"z", 1}}), Rat(0));
  EXPECT_THROW(poly_eval(f, {{"x", 1}, {"y", 1}}), std::invalid_argument);
  PolyRing four({"l1", "l2", "l3", "l4"});
  EXPECT_EQ(poly_eval(elementary_symmetric(four, 2), {{"l1", 1}, {"l2", 2}, {"l3", -1}, {"l4", -2}}), Rat(-5));
}

TEST(MultiPoly, RingDiscipline) {
  PolyRing r1({"b2", "b4"});
  PolyRing r2({"b4", "b2"});
  EXPECT_THROW(r1.var("b2") + r2.var("b2"), std::invalid_argument);
  EXPECT_EQ(r1.var("b2") + MultiPoly(Rat(3)) - MultiPoly(Rat(3)), r1.var("b2"));
  EXPECT_EQ(r1.var("b2").embed(r2), r2.var("b2"));
  EXPECT_THROW(PolyRing({"x", "x"}), std::invalid_argument);
}

TEST(MultiPoly, ComposeDerivativeAndWeights) {
  PolyRing ring({"x", "y"});
  auto x = ring.var("x"), y = ring.var("y");
  MultiPoly f = pow(x, 3) + Rat(2) * x * y;
  EXPECT_EQ(f.derivative("x"), Rat(3) * pow(x, 2) + Rat(2) * y);
  EXPECT_EQ(f.compose({y, x}), pow(y, 3) + Rat(2) * x * y);
  EXPECT_TRUE((pow(x, 2) + y).is_weighted_homogeneous({1, 2}, 2));
  EXPECT_EQ(f.weighted_degree({2, 3}), 6);
  EXPECT_EQ(f.substitute({{"y", MultiPoly(Rat(0))}}), pow(x, 3));
}

TEST(MultiPoly, SubalgebraMembership) {
  PolyRing ring({"u", "v"});
  auto u = ring.var("u"), v = ring.var("v");
  MultiPoly p2 = pow(u, 2) + pow(v, 2);
  MultiPoly p4 = pow(u, 2) * pow(v, 2);
  EXPECT_TRUE(in_generated_subalgebra(pow(p2, 2) - Rat(3) * p4, {p2, p4}, {1, 1}));
  EXPECT_FALSE(in_generated_subalgebra(p4, {p2}, {1, 1}));
}

TEST(Tower, AppendixConstants) {
  AlgTower t = AlgTower::appendix();
  PolyRing ring({"i", "r", "v"});
  auto i = ring.var("i"), r = ring.var("r"), v = ring.var("v");
  EXPECT_EQ(t.reduce(pow(i, 2)), MultiPoly(Rat(-1)));
  EXPECT_EQ(t.reduce(pow(r, 3) * v), Rat(2, 3) * r * v);
  EXPECT_TRUE(t.in_base_field(pow(i * r, 2)));
  EXPECT_FALSE(t.in_base_field(i * r));
}

TEST(Tower, CubeRootOfUnity) {
  AlgTower t = AlgTower::cube_root_of_unity();
  PolyRing ring({"mu"});
  auto mu = ring.var("mu");
  EXPECT_EQ(t.reduce(pow(mu, 3)), MultiPoly(ring, Rat(1)));
  EXPECT_EQ(t.reduce(MultiPoly(Rat(1)) + mu + pow(mu, 2)), MultiPoly(ring));
}
