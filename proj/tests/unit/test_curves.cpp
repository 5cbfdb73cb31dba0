#include "ergm/curves.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ergm/errors.hpp"
#include "oracles.hpp"

using namespace ergm;

TEST(TuranPoints, Landmarks) {
  EXPECT_EQ(turan_edge(0), 0.0);
  EXPECT_EQ(turan_triangle(0), 0.0);
  EXPECT_EQ(turan_triangle(1), 0.0);
  EXPECT_DOUBLE_EQ(turan_edge(2), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(turan_triangle(2), 2.0 / 9.0);
  for (std::int64_t k = 1; k < 50; ++k) {
    const TuranPoint v = turan_point(k);
    EXPECT_LT(v.e, turan_edge(k + 1));
    EXPECT_LT(v.t, turan_triangle(k + 1));
    EXPECT_NEAR(v.t, v.e * (2.0 * v.e - 1.0), 1e-15);
  }
}

TEST(SegmentOf, LowerIndexOwnsEndpoints) {
  EXPECT_EQ(segment_of(0.0), 1);
  EXPECT_EQ(segment_of(0.3), 1);
  EXPECT_EQ(segment_of(0.5), 1);
  EXPECT_EQ(segment_of(0.5000001), 2);
  EXPECT_EQ(segment_of(2.0 / 3.0), 2);
  for (std::int64_t k = 1; k < 2000; ++k) {
    EXPECT_EQ(segment_of(turan_edge(k)), k);
    EXPECT_EQ(segment_of(std::nextafter(turan_edge(k), 1.0)), k + 1);
  }
  EXPECT_THROW(segment_of(1.0), DomainError);
  EXPECT_THROW(segment_of(-0.1), DomainError);
}

TEST(Razborov, Examples) {
  EXPECT_EQ(razborov(1, 0.3), 0.0);
  EXPECT_NEAR(razborov(2, 2.0 / 3.0), 2.0 / 9.0, 1e-15);
  // Oracle: minimum triangle density over complete 3-partite graphons.
  EXPECT_NEAR(razborov(2, 0.575), oracle::min_triangle_three_parts(0.575), 1e-9);
  EXPECT_NEAR(razborov(2, 0.575), 0.10790, 5e-5);
  EXPECT_THROW(razborov(2, 0.4), DomainError);
  EXPECT_THROW(razborov(2, 0.7), DomainError);
  EXPECT_THROW(razborov(0, 0.0), DomainError);
}

TEST(Razborov, ThreePartOracleAcrossSegmentTwo) {
  for (double e = 0.51; e < 0.666; e += 0.02)
    EXPECT_NEAR(razborov(2, e), oracle::min_triangle_three_parts(e), 1e-9) << e;
}

TEST(Razborov, EndpointIdentities) {
  for (std::int64_t k = 1; k <= 200; ++k) {
    EXPECT_NEAR(razborov(k, turan_edge(k - 1)), turan_triangle(k - 1), 1e-14) << k;
    EXPECT_NEAR(razborov(k, turan_edge(k)), turan_triangle(k), 1e-14) << k;
  }
}

TEST(Razborov, NondecreasingOnSegment) {
  for (std::int64_t k = 1; k <= 10; ++k) {
    double prev = -1.0;
    const double lo = turan_edge(k - 1), hi = turan_edge(k);
    for (int i = 0; i <= 500; ++i) {
      const double e = lo + (hi - lo) * i / 500.0;
      const double r = razborov(k, std::min(e, hi));
      EXPECT_GE(r, prev - 1e-15);
      EXPECT_GE(r, turan_triangle(k - 1) - 1e-15);
      EXPECT_LE(r, turan_triangle(k) + 1e-15);
      prev = r;
    }
  }
}

TEST(LowerBoundary, Examples) {
  EXPECT_EQ(lower_boundary(0.25, 1.0), 0.0);
  EXPECT_NEAR(lower_boundary(2.0 / 3.0, 2.0), 4.0 / 81.0, 1e-15);
  const double r = oracle::min_triangle_three_parts(0.575);
  EXPECT_NEAR(lower_boundary(0.575, 2.0), r * r, 1e-10);
  EXPECT_NEAR(lower_boundary(0.575, 2.0), 0.011643, 5e-6);
  EXPECT_EQ(lower_boundary(1.0, 3.0), 1.0);
  EXPECT_THROW(lower_boundary(1.5, 1.0), DomainError);
  EXPECT_THROW(lower_boundary(-0.5, 1.0), DomainError);
}

TEST(LowerBoundary, GoodmanDomination) {
  for (double gamma : {0.5, 1.0, 2.0, 5.0}) {
    for (int i = 500; i <= 1000; ++i) {
      const double e = i / 1000.0;
      const double r = lower_boundary(e, gamma);
      const double l = goodman(e, gamma);
      EXPECT_GE(r, l - 1e-15) << "e=" << e << " gamma=" << gamma;
    }
    for (std::int64_t k = 1; k <= 50; ++k) {
      const double e = turan_edge(k);
      EXPECT_NEAR(lower_boundary(e, gamma), goodman(e, gamma), 1e-12);
    }
    // Strictly above between Turan points.
    for (std::int64_t k = 2; k <= 8; ++k) {
      const double mid = 0.5 * (turan_edge(k - 1) + turan_edge(k));
      EXPECT_GT(lower_boundary(mid, gamma), goodman(mid, gamma) + 1e-12);
    }
  }
}

TEST(LowerBoundary, ContinuousAtTuranPoints) {
  for (double gamma : {0.5, 1.0, 2.0, 5.0})
    for (std::int64_t k = 1; k <= 8; ++k) {
      const double e = turan_edge(k);
      const auto jump = [&](double d) { return std::abs(lower_boundary(e - d, gamma) - lower_boundary(e + d, gamma)); };
      // Right of e_1 the curve grows like (3d/2)^gamma, so for gamma = 1/2
      // the gap at d = 1e-6 is ~1.2e-3; a smaller d is needed there.
      const double d = (k == 1 && gamma < 2.0 / 3.0) ? 1e-10 : 1e-6;
      EXPECT_LT(jump(d), 1e-4) << "k=" << k << " gamma=" << gamma;
      EXPECT_LT(jump(1e-9), jump(1e-6));
      EXPECT_LT(jump(1e-12), jump(1e-9));
    }
}

TEST(LowerBoundary, BelowKruskalKatona) {
  for (double gamma : {0.5, 1.0, 2.0, 5.0})
    for (int i = 0; i <= 1000; ++i) {
      const double e = i / 1000.0;
      EXPECT_GE(kruskal_katona(e, 3, gamma), lower_boundary(e, gamma));
    }
}

TEST(LowerBoundary, SegmentsConcaveForGammaAtMostOne) {
  for (double gamma : {0.3, 0.7, 1.0})
    for (std::int64_t k = 2; k <= 6; ++k) {
      const double lo = turan_edge(k - 1), hi = turan_edge(k);
      const double h = (hi - lo) * 1e-3;
      const auto f = [&](double e) { return std::pow(razborov(k, e), gamma); };
      for (int i = 1; i < 100; ++i) {
        const double e = lo + (hi - lo) * i / 100.0;
        if (e - h <= lo || e + h >= hi) continue;
        EXPECT_LE(oracle::second_difference(f, e, h), 1e-9) << "k=" << k << " e=" << e;
      }
    }
}

TEST(Goodman, Examples) {
  EXPECT_EQ(goodman(0.5, 0.7), 0.0);
  EXPECT_NEAR(goodman(2.0 / 3.0, 3.0), 8.0 / 729.0, 1e-16);
  EXPECT_EQ(goodman(1.0, 5.0), 1.0);
  EXPECT_EQ(goodman(0.2, 0.5), 0.0);
}

TEST(KruskalKatona, Examples) {
  EXPECT_EQ(kruskal_katona(1.0, 3, 1.0), 1.0);
  EXPECT_NEAR(kruskal_katona(0.25, 3, 1.0), 0.125, 1e-16);
  EXPECT_NEAR(kruskal_katona(0.5, 4, 0.5), 0.5, 1e-16);
  EXPECT_THROW(kruskal_katona(0.5, 1, 1.0), DomainError);
}

TEST(CliqueLowerBound, MatchesRazborovForTriangles) {
  EXPECT_NEAR(clique_lower_bound(3, 2, 0.575), razborov(2, 0.575), 1e-13);
  for (std::int64_t t = 2; t <= 12; ++t) {
    const double lo = turan_edge(t - 1), hi = turan_edge(t);
    for (int i = 0; i <= 20; ++i) {
      const double e = lo + (hi - lo) * i / 20.0;
      EXPECT_NEAR(clique_lower_bound(3, t, e), razborov(t, e), 1e-13);
    }
  }
}

TEST(CliqueLowerBound, FourCliqueEndpoints) {
  // K_4 density of the 4-class Turan graphon: 4!/4^4 (block-sum value).
  EXPECT_NEAR(clique_lower_bound(4, 3, 0.75), 24.0 / 256.0, 1e-15);
  EXPECT_NEAR(clique_lower_bound(4, 3, 2.0 / 3.0), 0.0, 1e-15);
  // Edges: s = 2 reduces to the identity.
  EXPECT_NEAR(clique_lower_bound(2, 3, 0.7), 0.7, 1e-15);
  EXPECT_THROW(clique_lower_bound(4, 2, 0.6), DomainError);
  EXPECT_THROW(clique_lower_bound(4, 3, 0.6), DomainError);
  EXPECT_THROW(clique_lower_bound(1, 3, 0.7), DomainError);
}

TEST(Inflection, ClosedFormAndSecondDifferenceSignChange) {
  ASSERT_TRUE(inflection_point(2, 2.0).has_value());
  EXPECT_DOUBLE_EQ(*inflection_point(2, 2.0), 21.0 / 32.0);
  const auto f = [](double e) { return std::pow(razborov(2, e), 2.0); };
  // Convex to the left of the inflection point, concave to the right.
  EXPECT_GT(oracle::second_difference(f, 21.0 / 32.0 - 1e-3, 1e-5), 0.0);
  EXPECT_LT(oracle::second_difference(f, 21.0 / 32.0 + 1e-3, 1e-5), 0.0);
  EXPECT_FALSE(inflection_point(2, 1.0).has_value());
  EXPECT_FALSE(inflection_point(5, 1.4).has_value());
  EXPECT_FALSE(inflection_point(5, 1.5).has_value());
  EXPECT_TRUE(inflection_point(5, 1.51).has_value());
  EXPECT_THROW(inflection_point(1, 2.0), DomainError);
  for (std::int64_t k = 2; k <= 10; ++k) {
    const auto i = inflection_point(k, 3.0 + k);
    ASSERT_TRUE(i.has_value());
    EXPECT_GT(*i, turan_edge(k - 1));
    EXPECT_LT(*i, turan_edge(k));
  }
}
