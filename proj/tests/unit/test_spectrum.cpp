#include <gtest/gtest.h>

#include "hilbert/spectrum.hpp"
#include "hilbert/suite.hpp"
#include "oracles.hpp"

using namespace hilbert;

namespace {
double tentOracle(double R) {
  return oracle::radialRayleigh([&](double r) { return oracle::tent(r, R); },
                                [&](double r) { return oracle::tentSlope(r, R); }, R);
}
}  // namespace

TEST(TrialFunction, ProfilesMatchClosedForms) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const TrialFunction t = TrialFunction::tent(disk, Vec::Zero(2), 4.0);
  const TrialFunction e = TrialFunction::exponential(disk, Vec::Zero(2), 0.5, 4.0);
  for (double r : {0.0, 1.0, 3.9, 4.0, 5.0}) {
    EXPECT_DOUBLE_EQ(t.phi(r), oracle::tent(r, 4.0));
    EXPECT_NEAR(e.phi(r), oracle::expTent(r, 0.5, 4.0), 1e-15);
    EXPECT_NEAR(e.phiDerivative(r), oracle::expTentSlope(r, 0.5, 4.0), 1e-15);
  }
  EXPECT_NEAR(t.value(std::tanh(2.0) * Vec::Unit(2, 0)), 0.5, 1e-12);
  EXPECT_THROW(TrialFunction::tent(disk, Vec::Zero(2), -1.0), InvalidArgument);
}

TEST(TrialFunction, GradientMatchesFiniteDifferences) {
  for (const char* id : {"disk", "triangle", "cylinder"}) {
    const SuiteBody s = suiteBody(id);
    EXPECT_LT(gradientCheck(TrialFunction::tent(s.body, s.center, 3.0), 1000, 1), 1e-5) << id;
    EXPECT_LT(gradientCheck(TrialFunction::exponential(s.body, s.center, 0.5, 3.0), 1000, 2), 1e-5) << id;
  }
}

TEST(Rayleigh, ScalingInvariance) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const TrialFunction f = TrialFunction::tent(disk, Vec::Zero(2), 2.0);
  QuotientOptions o;
  o.samples = 4000;
  const QuotientEstimate a = rayleighQuotient(f, o), b = rayleighQuotient(f.scaled(7.0), o);
  EXPECT_NEAR(b.quotient.value / a.quotient.value, 1.0, 3.0 * a.quotient.stdError / a.quotient.value + 1e-12);
  const QuotientEstimate c = sobolevQuotient(f, o), d = sobolevQuotient(f.scaled(7.0), o);
  EXPECT_NEAR(d.quotient.value / c.quotient.value, 1.0, 3.0 * c.quotient.stdError / c.quotient.value + 1e-12);
}

TEST(Rayleigh, DiskTentMatchesRadialOracle) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  for (double R : {2.0, 6.0}) {
    const QuotientEstimate q = rayleighQuotient(TrialFunction::tent(disk, Vec::Zero(2), R));
    const double ref = tentOracle(R);
    EXPECT_LT(std::abs(q.quotient.value - ref), 3.0 * q.quotient.stdError + 1e-3 * ref) << R;
    EXPECT_GT(q.quotient.value, 0.25);
  }
}

TEST(Sobolev, DiskTentWindow) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const QuotientEstimate q = sobolevQuotient(TrialFunction::tent(disk, Vec::Zero(2), 6.0));
  const double ref = oracle::radialSobolev([](double r) { return oracle::tent(r, 6.0); },
                                           [](double r) { return oracle::tentSlope(r, 6.0); }, 6.0);
  EXPECT_LT(std::abs(q.quotient.value - ref), 3.0 * q.quotient.stdError + 1e-3 * ref);
  EXPECT_GE(q.quotient.value, 1.0);
  EXPECT_LE(q.quotient.value, 1.6);
}

TEST(Sobolev, CylinderPositive) {
  const SuiteBody s = suiteBody("cylinder");
  QuotientOptions o;
  o.samples = 4000;
  EXPECT_GT(sobolevQuotient(TrialFunction::tent(s.body, s.center, 4.0), o).quotient.value, 0.01);
}

TEST(Minimize, PicksTheBestTent) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  TrialFamily fam;
  fam.profile = Profile::Tent;
  fam.center = Vec::Zero(2);
  fam.radii = {1.0, 3.0};
  QuotientOptions o;
  o.samples = 4000;
  const MinimizeResult r = minimizeRayleigh(disk, fam, 4, o);
  EXPECT_EQ(r.evaluations, 4);
  EXPECT_GE(r.best.R, 1.0);
  for (const auto& t : r.trials) EXPECT_GE(t.estimate.quotient.value, r.best.estimate.quotient.value);
}

TEST(Cheeger, DiskBallsMatchCoth) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  for (double R : {1.0, 2.0}) {
    const CheegerEstimate c = cheegerQuotient(disk, Vec::Zero(2), R, 0.1);
    EXPECT_NEAR(c.quotient.value / oracle::cheegerDisk(R), 1.0, 0.05) << R;
    EXPECT_NEAR(c.volume.value / oracle::hyperbolicDiskArea(R), 1.0, 0.01);
    EXPECT_NEAR(c.boundary.value / oracle::hyperbolicCircleLength(R), 1.0, 0.02);
  }
}

TEST(Cylinder, Fact1VerticalRadius) {
  EXPECT_LT(fact1Check(Vec::Zero(2), 0.0), 1e-12);
  EXPECT_LT(fact1Check(Vec::Zero(2), 0.5), 1e-9);
  Vec q = Vec::Zero(2);
  q[0] = 0.9;
  EXPECT_LT(fact1Check(q, 0.5), 1e-9);
  EXPECT_DOUBLE_EQ(cylinderAlpha(0.5), 0.75);
}

TEST(Cylinder, Fact2FlatCap) {
  const Fact2Result a = fact2Check(1.0, 1.0, {0.0, 0.1, 0.2});
  EXPECT_LT(a.maxDefect, 1e-9);
  const Fact2Result b = fact2Check(1.0, 3.0, {0.0, 0.1});
  EXPECT_NEAR(b.expected, 1.5, 1e-15);
  EXPECT_LT(b.maxDefect, 1e-9);
  EXPECT_NEAR(b.heights[0], b.heights[1], 1e-8);
  EXPECT_THROW(fact2Check(1.0, 1.0, {0.3}), InvalidArgument);
}

TEST(Cylinder, SandwichSmallRun) {
  Vec q = Vec::Zero(2);
  const CylinderReport r = cylinderSandwich({-0.9, 0.0, 0.9}, {q}, 20000, 7);
  EXPECT_TRUE(r.pass());
  ASSERT_EQ(r.samples.size(), 3u);
  const auto& lo = r.samples[0];
  const auto& hi = r.samples[2];
  EXPECT_LT(std::abs(lo.ratio - hi.ratio), 3.0 * std::hypot(lo.ratioStdError, hi.ratioStdError) + 1e-9);
  for (const auto& s : r.samples) {
    EXPECT_GE(s.ratio, 2.0 / 3.0);
    EXPECT_LE(s.ratio, 8.0);
  }
}
