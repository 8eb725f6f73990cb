#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "hilbert/convex_body.hpp"
#include "hilbert/directions.hpp"

namespace hilbert {

/// Tangent unit ball {u : F(p, u) < 1}, sampled radially. Directions are
/// taken uniformly in the Finsler frame L (so that strongly anisotropic
/// balls near the boundary are resolved); `dirs[k]` is the unit direction
/// in ambient coordinates and `radius[k] = 1 / F(p, dirs[k])`.
struct TangentUnitBall {
  Vec basePoint;
  Mat frame;
  DirectionSet frameDirs;
  std::vector<double> frameRadius;
  std::vector<Vec> dirs;
  std::vector<double> radius;
  int resolution = 0;

  Vec boundaryPoint(std::size_t k) const { return radius[k] * dirs[k]; }
};

struct MCEstimate {
  double value = 0.0;
  double stdError = 0.0;
  long long samples = 0;
  std::uint64_t seed = 0;
};

struct DensityValue {
  Vec point;
  double h = 0.0;
  double tubVolume = 0.0;
  double stdError = 0.0;
};

/// Default radial resolution: 256 (plane), 642 (space), 2048 otherwise.
int defaultResolution(int n);

/// Resolution must be >= 16 (n = 2) or >= 128 (n = 3).
TangentUnitBall tangentUnitBall(const ConvexBody& body, const Vec& p, int resolution);

/// Euclidean volume of the tangent unit ball. Deterministic for samples = 0:
/// exact length (line), inscribed polygon (plane) or inscribed polyhedron
/// (space) in the Finsler frame, Richardson-extrapolated against the next
/// coarser nested direction set; stderr is the size of that correction.
/// With samples > 0 and n >= 3 it is a stratified Monte-Carlo estimate over
/// the frame bounding box with membership F < 1.
MCEstimate tubVolume(const ConvexBody& body, const Vec& p, int resolution, long long samples = 0,
                     std::uint64_t seed = 0);

/// h = omega_n / vol(TB(p)).
DensityValue hilbertDensity(const ConvexBody& body, const Vec& p, int resolution = 0, long long samples = 0,
                            std::uint64_t seed = 0);

/// Largest sampled Finsler norm of a unit vector at p (1 / smallest radius).
double maxFinslerNorm(const TangentUnitBall& ball);

enum class Weight { Lebesgue, HilbertDensity };

/// Sampling region. Box: uniform over the body's bounding box, non-members
/// rejected. Polar: x = c + t u with u uniform on the sphere and the Hilbert
/// distance rho = d(c, x) uniform in [rhoMin, rhoMax]; the Jacobian is exact
/// (closed-form radius of metric spheres along a chord), so metric balls and
/// shells are sampled without rejection.
struct Proposal {
  enum class Kind { Box, Polar } kind = Kind::Box;
  Vec center;
  double rhoMin = 0.0;
  double rhoMax = 0.0;

  static Proposal box() { return {}; }
  static Proposal polar(const Vec& center, double rhoMax, double rhoMin = 0.0) {
    return {Kind::Polar, center, rhoMin, rhoMax};
  }
};

struct IntegrationOptions {
  Weight weight = Weight::HilbertDensity;
  long long samples = 20000;
  std::uint64_t seed = 1;
  int densityResolution = 0;  // 0: defaultResolution(n)
  /// Integrands are refused where the sampled Finsler norm exceeds this.
  double maxFinsler = 1e6;
};

/// Vector-valued integrand: writes `count` values at x; `distance` is d(c, x)
/// for polar proposals (NaN for box proposals).
using Integrand = std::function<void(const Vec& x, double distance, double* out)>;

struct MultiEstimate {
  std::vector<MCEstimate> values;
  /// Covariance of the component estimates.
  Mat covariance;
  long long samples = 0;
  long long accepted = 0;
};

/// Stratified Monte-Carlo estimate of the integrals of all components over
/// the proposal region against Lebesgue or Hilbert measure. Strata have fixed
/// substream seeds, are evaluated in parallel and combined in order with
/// compensated sums, so results do not depend on the thread count.
MultiEstimate integrateMany(const ConvexBody& body, const Proposal& proposal, int count, const Integrand& f,
                            const IntegrationOptions& options);

/// Scalar convenience over the box proposal.
MCEstimate integrate(const ConvexBody& body, const std::function<double(const Vec&)>& f, Weight weight,
                     long long samples, std::uint64_t seed);

/// Ratio a/b of two components with a delta-method standard error.
MCEstimate ratioEstimate(const MultiEstimate& est, int numerator, int denominator);

/// Euclidean radius along a ray at Hilbert distance rho from its origin,
/// given the exits a = -t- and b = t+ of the chord (in ray-parameter units).
double metricRadius(double a, double b, double rho);
/// d/drho of metricRadius.
double metricRadiusDerivative(double a, double b, double rho);

}  // namespace hilbert
