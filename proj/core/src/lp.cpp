#include "hilbert/lp.hpp"

#include <limits>

namespace hilbert {

LpResult minimizeLinear(const Vec& c, const Mat& G, const Vec& h, Vec x, double gap) {
  const auto m = static_cast<double>(G.rows());
  Vec slack = h - G * x;
  if ((slack.array() <= 0.0).any()) throw InvalidArgument("LP start point is not strictly feasible", "start");

  auto barrierValue = [&](double t, const Vec& z, double& out) {
    const Vec s = h - G * z;
    if ((s.array() <= 0.0).any()) return false;
    out = t * c.dot(z) - s.array().log().sum();
    return true;
  };

  LpResult result;
  double t = 1.0;
  const double cScale = std::max(1.0, c.norm());
  for (int outer = 0; outer < 200; ++outer) {
    for (int it = 0; it < 200; ++it) {
      slack = h - G * x;
      const Vec inv = slack.cwiseInverse();
      const Vec grad = t * c + G.transpose() * inv;
      const Mat hess = G.transpose() * inv.cwiseAbs2().asDiagonal() * G;
      Eigen::LDLT<Mat> ldlt(hess);
      if (ldlt.info() != Eigen::Success) throw ConvergenceError("LP Newton system is singular (unbounded feasible set?)");
      const Vec step = -ldlt.solve(grad);
      if (!step.allFinite()) throw ConvergenceError("LP Newton step is not finite (unbounded feasible set?)");
      const double decrement = -grad.dot(step);
      ++result.newtonSteps;
      if (decrement / 2.0 <= 1e-12) break;
      double f0 = 0.0;
      barrierValue(t, x, f0);
      double alpha = 1.0, f1 = 0.0;
      while (!barrierValue(t, x + alpha * step, f1) || f1 > f0 - 0.25 * alpha * decrement) {
        alpha *= 0.5;
        if (alpha < 1e-20) break;
      }
      if (alpha < 1e-20) break;
      x += alpha * step;
      if (c.dot(x) < -1e15 * cScale) throw ConvergenceError("LP objective is unbounded below");
    }
    if (m / t < gap) break;
    t *= 10.0;
  }
  result.x = x;
  result.value = c.dot(x);
  return result;
}

}  // namespace hilbert
