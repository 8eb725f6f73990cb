#pragma once

#include "hilbert/convex_body.hpp"

namespace hilbert {

/// Relative collinearity tolerance for cross-ratio inputs.
inline constexpr double kCollinearTolerance = 1e-9;

/// [a, p, q, b] = (|q - a| |p - b|) / (|p - a| |q - b|) for collinear points.
double crossRatio(const Vec& a, const Vec& p, const Vec& q, const Vec& b);

/// Hilbert distance: half the log of the cross-ratio of p, q with the two
/// boundary points of their chord.
double hilbertDistance(const ConvexBody& body, const Vec& p, const Vec& q);

/// F(p, u) = (1/2)(1/t+ + 1/(-t-)) for the chord through p along u.
double finslerNorm(const ConvexBody& body, const Vec& p, const Vec& u);

/// Linear map L with F(p, L y) close to |y| (quadratic fit of F^2 by
/// polarization, refined once). Directions sampled through L resolve
/// strongly anisotropic tangent balls near the boundary.
Mat finslerFrame(const ConvexBody& body, const Vec& p);

/// sup over unit-Finsler vectors of l(v): the maximum of l(v)/F(p, v) over
/// `directions` low-discrepancy samples in the Finsler frame, followed by a
/// golden-section refinement around the best sample. A lower bound of the
/// true dual norm.
double dualNorm(const ConvexBody& body, const Vec& p, const Vec& l, int directions);

/// |d(p,q) + d(q,r) - d(p,r)| for q on the segment [p, r].
double geodesicAdditivityCheck(const ConvexBody& body, const Vec& p, const Vec& q, const Vec& r);

/// Gradient in x of d(c, x) (zero at x = c).
Vec distanceGradient(const ConvexBody& body, const Vec& c, const Vec& x);

/// Throws NotInteriorError if an exit at parameter t along v lies within the
/// body's boundary floor.
void requireResolved(const ConvexBody& body, const Chord& chord, const Vec& v);

}  // namespace hilbert
