#include <gtest/gtest.h>

#include "hilbert/convergence.hpp"
#include "hilbert/suite.hpp"
#include "oracles.hpp"

using namespace hilbert;

TEST(NormRatio, IdenticalBodiesGiveOne) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const NormRatioField f = normRatioField(disk, disk, ConvexBody::ball(2, 0.5));
  EXPECT_NEAR(f.infRatio, 1.0, 1e-12);
  EXPECT_NEAR(f.supRatio, 1.0, 1e-12);
  EXPECT_TRUE(f.nested);
}

TEST(NormRatio, ConcentricDisksMatchClosedForm) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0), A = ConvexBody::ball(2, 0.5);
  double prev = 1.0;
  for (int k : {2, 4, 10, 20}) {
    const double a = 1.0 + 1.0 / k;
    const NormRatioField f = normRatioField(ConvexBody::ball(2, a), disk, A);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.points.size(); ++i)
      for (std::size_t j = 0; j < f.directions.size(); ++j) {
        const double m = oracle::diskFinsler(f.points[i], f.directions[j], a) /
                         oracle::diskFinsler(f.points[i], f.directions[j], 1.0);
        EXPECT_NEAR(f.ratio(i, j), m, 1e-10);
        worst = std::max(worst, 1.0 - m);
      }
    EXPECT_NEAR(f.supDeficit, worst, 1e-10);
    EXPECT_GT(f.supDeficit, 0.0);
    EXPECT_LT(f.supDeficit, prev);
    EXPECT_LE(f.supRatio, 1.0 + 1e-10);
    prev = f.supDeficit;
  }
}

TEST(NormRatio, NestingViolationDetected) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0), small = ConvexBody::ball(2, 0.8);
  EXPECT_THROW(normRatioField(small, disk, ConvexBody::ball(2, 0.5)), InvalidArgument);
  EXPECT_FALSE(normRatioField(small, disk, ConvexBody::ball(2, 0.5), {}, true).nested);
}

TEST(DensityConvergence, ConcentricDisks) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0), A = ConvexBody::ball(2, 0.5);
  const std::vector<int> ks{2, 4, 8, 16};
  const ConvergenceReport r = densityConvergence(concentricDisks(ks), {"2", "4", "8", "16"}, disk, A, {16, 32});
  EXPECT_TRUE(r.ratioMonotone);
  EXPECT_TRUE(r.deficitMonotone);
  EXPECT_TRUE(r.deviationMonotone);
  for (const auto& s : r.steps) EXPECT_TRUE(s.densitySandwich) << s.label;
  // k = 16: deviation below 3 (1 - inf M).
  EXPECT_LT(r.finalDeviation, 3.0 * r.steps.back().field.supDeficit);
  // Density of the disk of radius a at p: a^{-2}... closed form via scaling.
  const auto& last = r.steps.back();
  const auto pts = gridPoints(A, 16);
  const double a = 1.0 + 1.0 / 16;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double rr = pts[i].norm();
    const double ref = oracle::kleinDensity(rr / a, 2) / (a * a) / oracle::kleinDensity(rr, 2);
    EXPECT_NEAR(last.densityRatio[i], ref, 1e-4);
  }
}

TEST(DensityConvergence, ConstantSequence) {
  const ConvexBody sq = suiteBody("square").body;
  const ConvergenceReport r = densityConvergence({sq, sq}, {}, sq, sq.scaled(0.5), {8, 16});
  EXPECT_LT(r.finalDeviation, 1e-9);
}
