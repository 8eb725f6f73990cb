#pragma once

#include <string>
#include <vector>

#include "hilbert/convex_body.hpp"

namespace hilbert {

struct GridSpec {
  int points = 0;      // 0: 64 (plane), 256 otherwise
  int directions = 0;  // 0: 64 (plane), 256 otherwise
};

/// Deterministic Halton points of a body (rejection from its bounding box).
std::vector<Vec> gridPoints(const ConvexBody& region, int count);
/// Unit directions of the grid: equally spaced in the plane, low-discrepancy
/// otherwise.
std::vector<Vec> gridDirections(int n, int count);

/// Ratios M(p, v) = F_member(p, v) / F_limit(p, v) on a grid of A x S^{n-1}.
struct NormRatioField {
  std::vector<Vec> points;
  std::vector<Vec> directions;
  Mat ratio;  // points x directions
  double supDeficit = 0.0;  // max (1 - M)
  double infRatio = 0.0;
  double supRatio = 0.0;
  /// limit inside member, A inside limit (membership probes).
  bool nested = false;
};

/// Throws InvalidArgument on a nesting violation unless `reportOnly`.
NormRatioField normRatioField(const ConvexBody& member, const ConvexBody& limit, const ConvexBody& region,
                              const GridSpec& grid = {}, bool reportOnly = false);

struct ConvergenceStep {
  std::string label;
  NormRatioField field;
  std::vector<double> densityRatio;  // h_member / h_limit per grid point
  double densityDeviation = 0.0;     // max |h_member / h_limit - 1|
  /// h ratio in ((inf M)^n - tol, 1 + tol] at every grid point.
  bool densitySandwich = false;
};

struct ConvergenceReport {
  std::vector<ConvergenceStep> steps;
  /// Per (p, v), M nondecreasing along the sequence (within 1e-10).
  bool ratioMonotone = false;
  /// supDeficit nonincreasing along the sequence.
  bool deficitMonotone = false;
  bool deviationMonotone = false;
  double finalDeviation = 0.0;
};

/// Norm ratios and Hilbert densities of each sequence member against the
/// limit, on a common grid.
ConvergenceReport densityConvergence(const std::vector<ConvexBody>& sequence, const std::vector<std::string>& labels,
                                     const ConvexBody& limit, const ConvexBody& region, const GridSpec& grid = {},
                                     int densityResolution = 0, bool reportOnly = false);

/// Disks of radius 1 + 1/k around the origin.
std::vector<ConvexBody> concentricDisks(const std::vector<int>& ks);
/// minkowski_ball(base, 1/k).
std::vector<ConvexBody> smoothedSequence(const ConvexBody& base, const std::vector<int>& ks);

}  // namespace hilbert
