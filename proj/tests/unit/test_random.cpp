#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hilbert/directions.hpp"
#include "hilbert/random.hpp"

using namespace hilbert;

TEST(Rng, SameSeedSameStream) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, SubstreamsDiffer) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(substreamSeed(7, i));
  EXPECT_EQ(seen.size(), 1000u);
}

TEST(Rng, UniformMoments) {
  Rng r(1);
  double s = 0.0, s2 = 0.0;
  const int N = 200000;
  for (int i = 0; i < N; ++i) {
    const double u = r.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    s += u;
    s2 += u * u;
  }
  EXPECT_NEAR(s / N, 0.5, 5e-3);
  EXPECT_NEAR(s2 / N, 1.0 / 3.0, 5e-3);
}

TEST(Rng, DirectionsAreUnitAndCentered) {
  Rng r(3);
  Vec mean = Vec::Zero(3);
  for (int i = 0; i < 20000; ++i) {
    const Vec u = r.direction(3);
    ASSERT_NEAR(u.norm(), 1.0, 1e-12);
    mean += u;
  }
  EXPECT_LT((mean / 20000.0).norm(), 0.03);
}

TEST(Halton, RadicalInverseBase2) {
  EXPECT_DOUBLE_EQ(radicalInverse(1, 2), 0.5);
  EXPECT_DOUBLE_EQ(radicalInverse(2, 2), 0.25);
  EXPECT_DOUBLE_EQ(radicalInverse(3, 2), 0.75);
  EXPECT_NEAR(radicalInverse(1, 3), 1.0 / 3.0, 1e-15);
}

TEST(Directions, CircleIsOrderedAndSymmetric) {
  const DirectionSet d = circleDirections(64);
  ASSERT_EQ(d.size(), 64u);
  EXPECT_TRUE(d.cyclic);
  EXPECT_TRUE(d.symmetric());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double th = std::atan2(d.dirs[i][1], d.dirs[i][0]);
    EXPECT_NEAR(std::remainder(th - 2.0 * M_PI * i / 64.0, 2.0 * M_PI), 0.0, 1e-12);
  }
}

TEST(Directions, IcosphereLevelsAreNested) {
  const DirectionSet a = icosphere(42), b = icosphere(100);
  ASSERT_EQ(a.size(), 42u);
  ASSERT_EQ(b.size(), 162u);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_LT((a.dirs[i] - b.dirs[i]).norm(), 1e-15);
  EXPECT_EQ(b.triangles.size(), 320u);
  EXPECT_TRUE(b.symmetric());
}

TEST(Directions, LowDiscrepancyPrefixNested) {
  const DirectionSet a = lowDiscrepancyDirections(3, 50), b = lowDiscrepancyDirections(3, 200);
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a.dirs[i], b.dirs[i]);
}

TEST(Directions, AngularSpacingCoversSphere) {
  const DirectionSet d = icosphere(642);
  const double gap = angularSpacing(d);
  Rng r(5);
  for (int i = 0; i < 2000; ++i) {
    const Vec u = r.direction(3);
    double best = 0.0;
    for (const auto& v : d.dirs) best = std::max(best, u.dot(v));
    EXPECT_LE(std::acos(std::min(1.0, best)), gap);
  }
}
