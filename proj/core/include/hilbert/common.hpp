#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

namespace hilbert {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: dimension mismatch, zero direction, singular map, bad
/// JSON field. `field()` names the offending field when one is known.
class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what, std::string field = {})
      : Error(field.empty() ? what : field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// A point that must be interior is outside the body or closer to its
/// boundary than the body's certification floor.
class NotInteriorError : public Error {
 public:
  using Error::Error;
};

/// An iterative procedure hit its cap without meeting its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// An integration support reaches too close to the boundary, or a sample
/// budget cannot resolve the requested quantity.
class SupportError : public Error {
 public:
  using Error::Error;
};

/// Thresholds taken from the bounded-local-geometry proof and the cylinder
/// counterexample. All of them are proved bounds, so a measured violation
/// indicates an implementation bug.
namespace bounds {

inline double e4() { return std::exp(4.0); }

/// Lower bound on the Euclidean gap between the body boundary and the
/// John-normalized unit metric ball: 1/(2e^4+1).
inline double boundaryGap() { return 1.0 / (2.0 * e4() + 1.0); }

/// Upper bound on the Finsler/Euclid ratio in the normalized frame: 2e^4+1.
inline double lipschitzUpper() { return 2.0 * e4() + 1.0; }

/// Upper bound on the nearer chord exit from the ball center: 3 sqrt(n).
inline double centerExit(int n) { return 3.0 * std::sqrt(static_cast<double>(n)); }

/// Upper bound on the nearer chord exit from any point of the normalized
/// ball: 5 sqrt(n) + 3 (2e^4+1) n.
inline double chordExit(int n) {
  return 5.0 * std::sqrt(static_cast<double>(n)) + 3.0 * lipschitzUpper() * n;
}

/// Lower bound on the Finsler/Euclid ratio: 1 / (2 chordExit(n)).
inline double lipschitzLower(int n) { return 1.0 / (2.0 * chordExit(n)); }

/// Cylinder tangent-ball sandwich constants.
inline constexpr double kCylinderLower = 2.0 / 3.0;
inline constexpr double kCylinderUpper = 8.0;

/// Spectral lower bound for the cylinder derived from the sandwich:
/// C1 / (4 C2) = 1/48.
inline constexpr double kCylinderSpectral = kCylinderLower / (4.0 * kCylinderUpper);

/// Bottom of the spectrum of the curvature -1 hyperbolic plane.
inline constexpr double kHyperbolicPlaneSpectrum = 0.25;

}  // namespace bounds

/// Volume of the Euclidean unit ball in R^n.
inline double unitBallVolume(int n) {
  const double h = 0.5 * n;
  return std::pow(std::numbers::pi, h) / std::tgamma(h + 1.0);
}

/// Surface area of the unit sphere S^{n-1}.
inline double unitSphereArea(int n) { return n * unitBallVolume(n); }

inline void requireDim(const Vec& x, int n, const char* what) {
  if (x.size() != n) {
    throw InvalidArgument("dimension mismatch: expected " + std::to_string(n) + ", got " +
                              std::to_string(x.size()),
                          what);
  }
}

const char* libraryVersion();

}  // namespace hilbert
