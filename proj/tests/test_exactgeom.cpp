#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"
#include "trinity/exactgeom.hpp"
#include "trinity/lp.hpp"

using namespace trinity;

namespace {

long pick(std::mt19937_64& rng, long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1)); }

RatVec rv(std::initializer_list<long> xs) {
  RatVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<RatVec> to_rat_points(const std::vector<std::vector<long>>& pts) {
  std::vector<RatVec> out;
  for (auto& p : pts) out.push_back(to_rat(p));
  return out;
}

}  // namespace

TEST(Determinant, MatchesCofactorExpansionOnRandomMatrices) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    oracle::IntMat m(n, std::vector<long>(n));
    for (auto& row : m)
      for (auto& x : row) x = pick(rng, -3, 3);
    Rational d = det_exact(RatMat::from_ints(m));
    ASSERT_EQ(d, Rational(oracle::laplace_det(m))) << "trial " << trial;
  }
}

TEST(Determinant, RationalEntries) {
  RatMat a = RatMat::from_rows({{Rational(1, 2), Rational(1, 3)}, {Rational(1, 4), Rational(1, 5)}});
  EXPECT_EQ(det_exact(a), Rational(1, 10) - Rational(1, 12));
}

TEST(Determinant, NonSquareIsADimensionError) {
  try {
    det_exact(RatMat::from_ints({{1, 2, 3}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Dimension);
  }
}

TEST(LinearAlgebra, RankPlusNullityAndKernel) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
    std::vector<RatVec> rows(r, RatVec(c));
    for (auto& row : rows)
      for (auto& x : row) x = pick(rng, -2, 2);
    auto ker = nullspace(rows, c);
    ASSERT_EQ(rank(rows) + ker.size(), c);
    for (auto& k : ker)
      for (auto& row : rows) ASSERT_EQ(dot(row, k), 0);
  }
}

// Bounded LPs (one row forces sum x = K) against enumeration of basic solutions.
TEST(Lp, OptimumMatchesBasisEnumeration) {
  std::mt19937_64 rng(99);
  int feasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = 1 + trial % 3, n = m + 1 + trial % 3;
    std::vector<RatVec> rows(m, RatVec(n));
    RatVec b(m);
    for (std::size_t i = 0; i + 1 < m; ++i) {
      for (auto& x : rows[i]) x = pick(rng, -2, 3);
      b[i] = pick(rng, 0, 4);
    }
    for (auto& x : rows[m - 1]) x = 1;
    b[m - 1] = pick(rng, 1, 4);
    RatVec c(n);
    for (auto& x : c) x = pick(rng, -3, 3);

    std::optional<Rational> best;
    std::vector<int> cols(m);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
      if (pos == m) {
        std::vector<std::vector<Rational>> sq(m, std::vector<Rational>(m));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = 0; j < m; ++j) sq[i][j] = rows[i][cols[j]];
        auto x = oracle::solve_square(sq, std::vector<Rational>(b.begin(), b.end()));
        if (!x) return;
        Rational val = 0;
        for (std::size_t j = 0; j < m; ++j) {
          if ((*x)[j] < 0) return;
          val += (*x)[j] * c[cols[j]];
        }
        if (!best || val > *best) best = val;
        return;
      }
      for (std::size_t j = start; j < n; ++j) {
        cols[pos] = static_cast<int>(j);
        rec(pos + 1, j + 1);
      }
    };
    rec(0, 0);
    LpResult r = solve_lp(RatMat::from_rows(rows), b, c);
    if (!best) {
      // the constraint matrix may be rank deficient; only claim infeasibility is consistent
      if (rank(rows) == m) {
        EXPECT_EQ(r.status, LpResult::Status::Infeasible) << "trial " << trial;
      }
      continue;
    }
    ++feasible;
    ASSERT_EQ(r.status, LpResult::Status::Optimal) << "trial " << trial;
    EXPECT_EQ(r.value, *best) << "trial " << trial;
    for (auto& x : r.solution) EXPECT_GE(x, 0);
  }
  EXPECT_GT(feasible, 100);
}

TEST(Lp, DetectsUnbounded) {
  LpResult r = solve_lp(RatMat::from_ints({{1, -1}}), rv({0}), rv({1, 0}));
  EXPECT_EQ(r.status, LpResult::Status::Unbounded);
}

TEST(Volume, SimplexMatchesMinorGcdOracle) {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t ambient = 1 + trial % 5;
    const std::size_t d = 1 + rng() % ambient;
    std::vector<std::vector<long>> verts(d + 1, std::vector<long>(ambient));
    for (auto& v : verts)
      for (auto& x : v) x = pick(rng, -2, 2);
    Integer got = simplex_normalized_volume(to_rat_points(verts));
    ASSERT_EQ(got, oracle::simplex_volume(verts)) << "trial " << trial;
  }
}

TEST(Volume, UnimodularInHigherDimensionAndDilation) {
  // edge of the unit cube diagonal direction: primitive, so volume 1
  EXPECT_EQ(simplex_normalized_volume({rv({0, 0, 0}), rv({1, 1, 1})}), 1);
  EXPECT_EQ(simplex_normalized_volume({rv({0, 0, 0}), rv({2, 2, 2})}), 2);
  EXPECT_EQ(simplex_normalized_volume({rv({1, 0, 0, -1}), rv({0, 1, 0, -1}), rv({0, 0, 1, -1})}), 1);
  EXPECT_EQ(simplex_normalized_volume({rv({0, 0}), rv({3, 0}), rv({0, 3})}), 9);
  EXPECT_EQ(simplex_normalized_volume({rv({0, 0}), rv({1, 1}), rv({2, 2})}), 0);
}

TEST(Hull, PrunesInteriorPointsAndKeepsExtremes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t dim = 1 + trial % 3, np = 2 + rng() % 6;
    std::vector<std::vector<long>> pts(np, std::vector<long>(dim));
    for (auto& p : pts)
      for (auto& x : p) x = pick(rng, 0, 3);
    VPolytope poly = VPolytope::from_points(to_rat_points(pts));
    for (auto& p : pts) ASSERT_TRUE(contains_point(poly, to_rat(p)));
    // no listed vertex is in the hull of the others
    for (std::size_t i = 0; i < poly.vertices().size(); ++i) {
      std::vector<RatVec> rest;
      for (std::size_t j = 0; j < poly.vertices().size(); ++j)
        if (j != i) rest.push_back(poly.vertices()[j]);
      if (!rest.empty()) {
        ASSERT_FALSE(in_hull(rest, poly.vertices()[i]));
      }
    }
  }
}

TEST(LatticePoints, MatchesCaratheodoryOracle) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t dim = 2 + trial % 2, np = 2 + rng() % 4;
    std::vector<std::vector<long>> pts(np, std::vector<long>(dim));
    for (auto& p : pts)
      for (auto& x : p) x = pick(rng, -1, 3);
    LatticeSet got = lattice_points(VPolytope::from_points(to_rat_points(pts)));
    auto want = oracle::lattice_points(pts);
    ASSERT_EQ(got.points(), std::vector<IntVec>(want.begin(), want.end())) << "trial " << trial;
  }
}

TEST(LatticePoints, RationalVertices) {
  VPolytope p = VPolytope::from_points({{Rational(1, 2), Rational(0)}, {Rational(5, 2), Rational(0)}});
  EXPECT_EQ(lattice_points(p).points(), (std::vector<IntVec>{{1, 0}, {2, 0}}));
}

TEST(LatticeSet, TranslateNegateCanonical) {
  LatticeSet s(2, {{3, 1}, {2, 2}});
  EXPECT_EQ(s.negated().points(), (std::vector<IntVec>{{-3, -1}, {-2, -2}}));
  EXPECT_EQ(s.canonical().points(), (std::vector<IntVec>{{0, 1}, {1, 0}}));
  EXPECT_EQ(s.translated({1, -1}).canonical(), s.canonical());
}

TEST(CommonFace, SharedEdgeVersusCrossing) {
  std::vector<RatVec> a{rv({0, 0}), rv({1, 0}), rv({0, 1})}, b{rv({1, 0}), rv({0, 1}), rv({1, 1})},
      c{rv({0, 0}), rv({1, 0}), rv({1, 1})};
  EXPECT_TRUE(intersect_in_common_face(a, b));
  EXPECT_FALSE(intersect_in_common_face(a, c));
  EXPECT_THROW(intersect_in_common_face(a, {rv({0, 0, 0})}), Error);
}

TEST(Errors, DimensionMismatch) {
  try {
    VPolytope::from_points({rv({0, 0}), rv({1})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Dimension);
  }
}
