#include "hilbert/suite.hpp"

#include <cmath>

#include "hilbert/hyperbolicity.hpp"
#include "hilbert/random.hpp"
#include "hilbert/spectrum.hpp"

namespace hilbert {

namespace {

ConvexBody randomPolytope(int n, int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Vec> pts;
  for (int i = 0; i < count; ++i) pts.push_back(rng.uniform(0.6, 1.0) * rng.direction(n));
  return ConvexBody::vPolytope(pts);
}

Vec vec2(double x, double y) {
  Vec v(2);
  v << x, y;
  return v;
}

ConvexBody namedBody(const std::string& id) {
  if (id == "disk") return ConvexBody::ball(2, 1.0);
  if (id == "square") return ConvexBody::box(Vec::Constant(2, -1.0), Vec::Constant(2, 1.0));
  if (id == "triangle") {
    const double h = std::sqrt(3.0) / 2.0;
    return ConvexBody::vPolytope({vec2(1.0, 0.0), vec2(-0.5, h), vec2(-0.5, -h)});
  }
  if (id == "needle") return ConvexBody::box(vec2(-1.0, -0.05), vec2(1.0, 0.05));
  if (id == "polygon") return randomPolytope(2, 9, 20240601);
  if (id == "polytope3") return randomPolytope(3, 16, 20240602);
  if (id == "cylinder") return cylinderBody();
  if (id == "smoothed_cylinder") return ConvexBody::minkowskiBall(cylinderBody(), 0.25);
  throw InvalidArgument("unknown suite body '" + id + "'", "body");
}

}  // namespace

std::vector<std::string> suiteNames() {
  return {"disk", "square", "triangle", "needle", "polygon", "polytope3", "cylinder", "smoothed_cylinder"};
}

SuiteBody suiteBody(const std::string& id) {
  SuiteBody s{id, namedBody(id), {}, {}};
  const int n = s.body.dim();
  s.center = (id == "polygon" || id == "polytope3") ? s.body.interiorPoint() : Vec(Vec::Zero(n));
  const Vec diag = Vec::Ones(n).normalized();
  const Vec e1 = Vec::Unit(n, 0), e2 = Vec::Unit(n, 1);
  const Vec skew = (e1 - 0.5 * Vec::Unit(n, n - 1)).normalized();
  s.basePoints = {s.center, pointAtDistance(s.body, s.center, e2, 1.0), pointAtDistance(s.body, s.center, diag, 2.5),
                  pointAtDistance(s.body, s.center, e1, 5.0), pointAtDistance(s.body, s.center, skew, 5.0)};
  return s;
}

std::vector<SuiteBody> regressionSuite() {
  std::vector<SuiteBody> out;
  for (const auto& id : suiteNames()) out.push_back(suiteBody(id));
  return out;
}

}  // namespace hilbert
