#pragma once

#include <algorithm>
#include <cmath>
#include <utility>

#include "hilbert/common.hpp"

namespace hilbert::detail {

// Golden-section search for a maximum of f on [lo, hi]. Returns (x, f(x)).
template <class F>
std::pair<double, double> goldenMax(F&& f, double lo, double hi, int iterations = 60) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = f(d);
    }
  }
  return fc >= fd ? std::make_pair(c, fc) : std::make_pair(d, fd);
}

// Local maximization of f over unit vectors near y: golden section along
// great circles toward each vector of an orthonormal tangent basis, with the
// arc halved after each round. Returns the best (value, direction).
template <class F>
std::pair<double, Vec> sphereRefineMax(F&& f, Vec y, double fy, double arc, int rounds, int iterations) {
  const auto n = y.size();
  if (n < 2) return {fy, y};
  for (int round = 0; round < rounds; ++round) {
    Mat basis = Mat::Identity(n, n);
    basis.col(0) = y;
    Eigen::HouseholderQR<Mat> qr(basis);
    const Mat Q = qr.householderQ();
    for (Eigen::Index k = 1; k < n; ++k) {
      const Vec t = Q.col(k);
      const Vec base = y;
      auto along = [&](double phi) { return f(Vec(std::cos(phi) * base + std::sin(phi) * t)); };
      const auto [phi, val] = goldenMax(along, -arc, arc, iterations);
      if (val > fy) {
        fy = val;
        y = (std::cos(phi) * base + std::sin(phi) * t).normalized();
      }
    }
    arc *= 0.5;
  }
  return {fy, y};
}

}  // namespace hilbert::detail
