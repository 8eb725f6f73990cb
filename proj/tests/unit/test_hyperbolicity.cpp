#include <gtest/gtest.h>

#include "hilbert/hilbert_metric.hpp"
#include "hilbert/hyperbolicity.hpp"
#include "hilbert/suite.hpp"
#include "oracles.hpp"

using namespace hilbert;

namespace {
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST(Gromov, Trivial) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const Vec x = v2(0.3, 0.1), w = v2(-0.2, 0.4);
  EXPECT_NEAR(gromovProduct(disk, x, x, w), hilbertDistance(disk, x, w), 1e-12);
  EXPECT_NEAR(gromovProduct(disk, x, v2(0.5, 0), x), 0.0, 1e-12);
}

TEST(Gromov, KleinClosedForm) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const Vec x = v2(0.5, 0), y = v2(-0.5, 0), w = v2(0, 0.5);
  const double ref =
      0.5 * (oracle::kleinDistance(x, w) + oracle::kleinDistance(y, w) - oracle::kleinDistance(x, y));
  EXPECT_NEAR(gromovProduct(disk, x, y, w), ref, 1e-10);
}

TEST(FourPoint, CollinearIsZero) {
  const ConvexBody tri = suiteBody("triangle").body;
  const Vec a = v2(-0.3, -0.1), b = v2(0.5, 0.2);
  const std::array<Vec, 4> q{a, a + 0.2 * (b - a), a + 0.7 * (b - a), b};
  EXPECT_LT(fourPointDefect(tri, q), 1e-9);
}

TEST(DeltaProbe, MonotoneInBudget) {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  const auto a = deltaProbe(disk, Vec::Zero(2), {3.0}, 200, 42);
  const auto b = deltaProbe(disk, Vec::Zero(2), {3.0}, 400, 42);
  EXPECT_GE(b[0].maxDefect, a[0].maxDefect);
  EXPECT_GE(a[0].maxDefect, 0.0);
}

TEST(DeltaProbe, AffineInvariant) {
  const SuiteBody s = suiteBody("square");
  Mat T(2, 2);
  T << 2, 1, 0, 1;
  const ConvexBody img = s.body.affineImage(T, Vec::Zero(2));
  const auto a = deltaProbe(s.body, s.center, {2.0}, 300, 1);
  // Same quadruples mapped: compare the defect of the witness.
  std::array<Vec, 4> w;
  for (int i = 0; i < 4; ++i) w[i] = T * a[0].witness[i];
  EXPECT_NEAR(fourPointDefect(img, w), a[0].maxDefect, 1e-8);
}

TEST(DeltaProbe, DiskPlateausCylinderGrows) {
  const auto disk = deltaProbe(ConvexBody::ball(2, 1.0), Vec::Zero(2), {2.0, 6.0}, 2000, 42);
  EXPECT_LE(disk[1].maxDefect, disk[0].maxDefect + 1.0);
  const SuiteBody cyl = suiteBody("cylinder");
  const auto c = deltaProbe(cyl.body, cyl.center, {2.0, 6.0}, 10000, 42);
  EXPECT_GE(c[1].maxDefect, c[0].maxDefect + 0.5);
}
