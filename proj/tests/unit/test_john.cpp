#include <gtest/gtest.h>

#include "hilbert/hilbert_metric.hpp"
#include "hilbert/john.hpp"
#include "hilbert/suite.hpp"

using namespace hilbert;

namespace {
Vec v2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}
}  // namespace

TEST(John, SquareIsInscribedDisk) {
  const ConvexBody sq = suiteBody("square").body;
  const Ellipsoid E = johnEllipsoid(sq);
  EXPECT_LT(E.center.norm(), 1e-8);
  EXPECT_LT((E.shape - Mat::Identity(2, 2)).norm(), 1e-7);
  const SandwichReport r = sandwichCheck(sq, E);
  EXPECT_TRUE(r.contained);
  EXPECT_TRUE(r.symmetricBody);
  EXPECT_NEAR(r.coverFactor, std::sqrt(2.0), 1e-4);
}

TEST(John, TriangleFactorTwo) {
  const ConvexBody tri = suiteBody("triangle").body;
  const SandwichReport r = sandwichCheck(tri, johnEllipsoid(tri));
  EXPECT_TRUE(r.contained);
  EXPECT_FALSE(r.symmetricBody);
  EXPECT_NEAR(r.coverFactor, 2.0, 1e-3);
  EXPECT_TRUE(r.withinBound);
}

TEST(John, EllipsoidIsItsOwn) {
  Mat S(2, 2);
  S << 4, 1, 1, 2;
  const ConvexBody e = ConvexBody::ellipsoid(v2(1, 2), S);
  const Ellipsoid E = johnEllipsoid(e);
  EXPECT_LT((E.shape - S).norm(), 1e-12);
  EXPECT_NEAR(sandwichCheck(e, E).coverFactor, 1.0, 1e-9);
}

TEST(John, AffineEquivariance) {
  const ConvexBody poly = suiteBody("polygon").body;
  Mat T(2, 2);
  T << 2, 0.5, 0, 0.7;
  const Vec s = v2(-1, 3);
  const Ellipsoid a = johnEllipsoid(poly), b = johnEllipsoid(poly.affineImage(T, s));
  EXPECT_NEAR(b.volume() / a.volume(), std::abs(T.determinant()), 1e-6);
  EXPECT_LT((b.center - (T * a.center + s)).norm(), 1e-6);
}

TEST(John, SuiteSandwichBounds) {
  for (const SuiteBody& s : regressionSuite()) {
    const SandwichReport r = sandwichCheck(s.body, johnEllipsoid(s.body), 4000);
    EXPECT_TRUE(r.contained) << s.id;
    EXPECT_TRUE(r.withinBound) << s.id << " factor " << r.coverFactor;
  }
}

TEST(John, RadialJohnInsideSamples) {
  const DirectionSet d = circleDirections(256);
  std::vector<double> radius(d.size());
  for (std::size_t k = 0; k < d.size(); ++k) radius[k] = 1.0 / d.dirs[k].cwiseAbs().maxCoeff();  // square
  const Ellipsoid E = radialJohnEllipsoid(Vec::Zero(2), d, radius);
  EXPECT_LT((E.shape - Mat::Identity(2, 2)).norm(), 1e-6);
}

TEST(JohnMetric, SquareCenterIsEuclidean) {
  // The tangent ball at the center of the square is the square itself.
  const JohnMetric g = johnMetricAt(suiteBody("square").body, v2(0, 0));
  EXPECT_LT((g.inner - Mat::Identity(2, 2)).norm(), 1e-4);
  // E in TB in sqrt(n) E for symmetric tangent balls: F^2/g in [1/n, 1].
  EXPECT_LE(g.highRatio, 1.0 + 1e-6);
  EXPECT_GE(g.lowRatio, 0.5 - 1e-6);
}

TEST(JohnMetric, SandwichAtSuitePoints) {
  for (const char* id : {"disk", "triangle", "needle"}) {
    const SuiteBody s = suiteBody(id);
    for (const Vec& p : s.basePoints) {
      const JohnMetric g = johnMetricAt(s.body, p);
      EXPECT_LE(g.highRatio, 1.0 + 1e-6) << id;
      EXPECT_GE(g.lowRatio, 1.0 / 2.0 - 1e-6) << id;
    }
  }
}
