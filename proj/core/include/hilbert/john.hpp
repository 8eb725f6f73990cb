#pragma once

#include <vector>

#include "hilbert/convex_body.hpp"
#include "hilbert/directions.hpp"
#include "hilbert/hull.hpp"

namespace hilbert {

/// {x : (x - center)^T shape (x - center) < 1}.
struct Ellipsoid {
  Vec center;
  Mat shape;

  /// The ellipsoid {B u + d : |u| < 1} for symmetric positive-definite B.
  static Ellipsoid fromMap(const Mat& B, const Vec& d);
  /// Symmetric B with E = {B u + center : |u| < 1}.
  Mat map() const;
  double volume() const;
  bool contains(const Vec& x) const;
  ConvexBody toBody() const;
};

/// Maximum-volume ellipsoid inside {A x < b} by a log-barrier Newton method
/// on log det B subject to |B a_i| + a_i.d <= b_i, run to a log-det gap of
/// 1e-10. `start` must be strictly feasible; with `pinCenter` the center is
/// held at `start`.
Ellipsoid maxVolumeEllipsoid(const Halfspaces& h, const Vec& start, bool pinCenter = false);

/// John ellipsoid of the star-shaped set {center + t v : 0 <= t < radius(v)}
/// sampled on `dirs`: of the polygon through the samples (plane), of the
/// intersection of the planes of the sample triangles (space), or of the
/// segment (line). The result lies inside the sampled set.
Ellipsoid radialJohnEllipsoid(const Vec& center, const DirectionSet& dirs, const std::vector<double>& radius,
                              bool pinCenter = false);

/// John ellipsoid of a body. Balls and ellipsoids are their own; polytopes
/// are solved exactly; other bodies go through the inscribed polytope spanned
/// by `facetBudget` chord endpoints from the interior point (n <= 3), so the
/// result is inside the body by construction. Containment is re-verified on
/// 10^3 boundary probes (ConvergenceError on failure).
Ellipsoid johnEllipsoid(const ConvexBody& body, int facetBudget = 256);

struct SandwichReport {
  bool contained = false;
  /// max over boundary directions of the body's radial extent in the frame
  /// where E is the unit ball.
  double coverFactor = 0.0;
  bool symmetricBody = false;
  /// sqrt(n) for symmetric bodies, n otherwise.
  double bound = 0.0;
  bool withinBound = false;
  /// Non-symmetric body exceeding sqrt(n) (reported, not a failure).
  bool exceedsSymmetricFactor = false;
  Vec witness;
};

/// E inside the body (all probes) and body inside coverFactor * E.
SandwichReport sandwichCheck(const ConvexBody& body, const Ellipsoid& E, int directions = 10000);

/// Riemannian inner product at p from the John ellipsoid (center pinned at 0)
/// of the tangent unit ball. `lowRatio`/`highRatio` are the sampled extremes
/// of F(p,v)^2 / g(v,v).
struct JohnMetric {
  Vec point;
  Mat inner;
  double lowRatio = 0.0;
  double highRatio = 0.0;
};

JohnMetric johnMetricAt(const ConvexBody& body, const Vec& p, int facetBudget = 256);

}  // namespace hilbert
