#pragma once

// Independent reference values used by the unit and acceptance tests. Nothing
// here calls into the library: closed forms of the Klein model and 1-D
// quadrature of radial integrals against the hyperbolic area element.

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <utility>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <Eigen/Dense>

namespace oracle {

using Vec = Eigen::VectorXd;

inline double quad(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 15, 1e-13);
}

/// Hyperbolic distance in the Klein model of the unit ball.
inline double kleinDistance(const Vec& p, const Vec& q) {
  const double num = 1.0 - p.dot(q);
  const double den = std::sqrt((1.0 - p.squaredNorm()) * (1.0 - q.squaredNorm()));
  const double c = std::max(1.0, num / den);
  return std::acosh(c);
}

inline double kleinDistanceFromCenter(double r) { return std::atanh(r); }

/// Hilbert (Busemann) density of the unit ball in R^n at radius r.
inline double kleinDensity(double r, int n) { return std::pow(1.0 - r * r, -(n + 1) / 2.0); }

/// Exits t- < 0 < t+ of the line p + t v from the disk of radius a.
inline std::pair<double, double> diskExits(const Vec& p, const Vec& v, double a) {
  const double A = v.squaredNorm(), B = 2.0 * p.dot(v), C = p.squaredNorm() - a * a;
  const double disc = std::sqrt(B * B - 4.0 * A * C);
  return {(-B - disc) / (2.0 * A), (-B + disc) / (2.0 * A)};
}

/// Finsler norm of the Hilbert metric of the disk of radius a.
inline double diskFinsler(const Vec& p, const Vec& v, double a) {
  const auto [tm, tp] = diskExits(p, v, a);
  return 0.5 * (1.0 / tp - 1.0 / tm);
}

/// Ratio of int phi'^2 sinh and int phi^2 sinh on [0, R].
inline double radialRayleigh(const std::function<double(double)>& phi, const std::function<double(double)>& dphi,
                             double R) {
  const double num = quad([&](double r) { return dphi(r) * dphi(r) * std::sinh(r); }, 0.0, R);
  const double den = quad([&](double r) { return phi(r) * phi(r) * std::sinh(r); }, 0.0, R);
  return num / den;
}

inline double radialSobolev(const std::function<double(double)>& phi, const std::function<double(double)>& dphi,
                            double R) {
  const double num = quad([&](double r) { return std::abs(dphi(r)) * std::sinh(r); }, 0.0, R);
  const double den = quad([&](double r) { return std::abs(phi(r)) * std::sinh(r); }, 0.0, R);
  return num / den;
}

inline double tent(double r, double R) { return r < R ? 1.0 - r / R : 0.0; }
inline double tentSlope(double r, double R) { return r < R ? -1.0 / R : 0.0; }
inline double expTent(double r, double s, double R) { return std::exp(-s * r) * tent(r, R); }
inline double expTentSlope(double r, double s, double R) {
  return r < R ? -std::exp(-s * r) * (s * (1.0 - r / R) + 1.0 / R) : 0.0;
}

/// Minimum of the radial Rayleigh quotient of e^{-s rho}(1 - rho/R) over s.
inline double minExpTentRayleigh(double R) {
  double lo = 0.0, hi = 2.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  auto q = [&](double s) {
    return radialRayleigh([&](double r) { return expTent(r, s, R); }, [&](double r) { return expTentSlope(r, s, R); },
                          R);
  };
  for (int i = 0; i < 80; ++i) {
    const double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
    if (q(a) < q(b))
      hi = b;
    else
      lo = a;
  }
  return q(0.5 * (lo + hi));
}

/// Hyperbolic-plane area of a metric disk and its boundary length.
inline double hyperbolicDiskArea(double R) { return 2.0 * std::numbers::pi * (std::cosh(R) - 1.0); }
inline double hyperbolicCircleLength(double R) { return 2.0 * std::numbers::pi * std::sinh(R); }
inline double cheegerDisk(double R) { return 1.0 / std::tanh(0.5 * R); }

/// Euclidean area of the Klein tangent unit ball at radius r in the disk.
inline double kleinTangentArea(double r) { return std::numbers::pi * std::pow(1.0 - r * r, 1.5); }

/// Euclidean radius of the Klein metric disk of radius rho around the center.
inline double kleinBallRadius(double rho) { return std::tanh(rho); }

/// Exits of p + t v from the box [lo, hi] by slab clipping.
inline std::pair<double, double> boxExits(const Vec& lo, const Vec& hi, const Vec& p, const Vec& v) {
  double tm = -1e300, tp = 1e300;
  for (int i = 0; i < p.size(); ++i) {
    if (v[i] == 0.0) continue;
    const double a = (lo[i] - p[i]) / v[i], b = (hi[i] - p[i]) / v[i];
    tm = std::max(tm, std::min(a, b));
    tp = std::min(tp, std::max(a, b));
  }
  return {tm, tp};
}

/// Hilbert distance in the box via the explicit cross ratio.
inline double boxDistance(const Vec& lo, const Vec& hi, const Vec& p, const Vec& q) {
  if ((q - p).norm() == 0.0) return 0.0;
  const Vec v = q - p;
  const auto [tm, tp] = boxExits(lo, hi, p, v);
  // a = p + tm v, b = p + tp v; q at t = 1.
  return 0.5 * std::log(((tp - 0.0) * (1.0 - tm)) / ((tp - 1.0) * (0.0 - tm)));
}

}  // namespace oracle
