#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "hilbert/convex_body.hpp"

namespace hilbert {

/// (x | y)_w = (d(x, w) + d(y, w) - d(x, y)) / 2.
double gromovProduct(const ConvexBody& body, const Vec& x, const Vec& y, const Vec& w);

/// Largest four-point defect min((x|y)_w, (y|z)_w) - (x|z)_w over the 12
/// labelings of the quadruple (base point, middle point).
double fourPointDefect(const ConvexBody& body, const std::array<Vec, 4>& points);

struct DeltaEstimate {
  double R = 0.0;
  long long quadruples = 0;
  double maxDefect = 0.0;
  std::uint64_t seed = 0;
  std::array<Vec, 4> witness;
};

/// Point at Hilbert distance rho from center along u.
Vec pointAtDistance(const ConvexBody& body, const Vec& center, const Vec& u, double rho);

/// Max four-point defect over quadruples drawn in the metric ball B(center,
/// R): each point has a uniform direction and a distance with density
/// proportional to sinh^{n-1} on [0, R], which is uniform in the Hilbert
/// measure when the body is a ball centered at `center`.
/// Quadruple j of scale i uses substream (substream(seed, i), j), so a larger
/// budget extends the sample. Lower-bound evidence for delta only.
std::vector<DeltaEstimate> deltaProbe(const ConvexBody& body, const Vec& center, const std::vector<double>& scales,
                                      long long quadruplesPerScale, std::uint64_t seed);

}  // namespace hilbert
