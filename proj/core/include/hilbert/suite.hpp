#pragma once

#include <string>
#include <vector>

#include "hilbert/convex_body.hpp"

namespace hilbert {

struct SuiteBody {
  std::string id;
  ConvexBody body;
  Vec center;
  /// At least five points: the center, points at distance 1 and 2.5, and
  /// two points at Hilbert distance 5 from the center.
  std::vector<Vec> basePoints;
};

/// Names of the regression bodies: disk, square, triangle, needle, polygon,
/// polytope3, cylinder, smoothed_cylinder.
std::vector<std::string> suiteNames();
SuiteBody suiteBody(const std::string& id);
std::vector<SuiteBody> regressionSuite();

}  // namespace hilbert
