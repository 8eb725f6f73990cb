#pragma once

#include "hilbert/common.hpp"

namespace hilbert {

struct LpResult {
  Vec x;
  double value = 0.0;
  int newtonSteps = 0;
};

/// Minimizes c.x subject to G x < h with a log-barrier path-following
/// method started from the strictly feasible point `start`. Stops when the
/// duality gap m/t falls below `gap`. Throws ConvergenceError when the
/// objective decreases without bound or Newton stalls.
LpResult minimizeLinear(const Vec& c, const Mat& G, const Vec& h, Vec start, double gap = 1e-10);

}  // namespace hilbert
