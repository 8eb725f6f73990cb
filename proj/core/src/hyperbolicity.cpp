#include "hilbert/hyperbolicity.hpp"

#include <algorithm>
#include <cmath>

#include "hilbert/hilbert_metric.hpp"
#include "hilbert/measure.hpp"
#include "hilbert/parallel.hpp"
#include "hilbert/random.hpp"

namespace hilbert {

double gromovProduct(const ConvexBody& body, const Vec& x, const Vec& y, const Vec& w) {
  return 0.5 * (hilbertDistance(body, x, w) + hilbertDistance(body, y, w) - hilbertDistance(body, x, y));
}

double fourPointDefect(const ConvexBody& body, const std::array<Vec, 4>& points) {
  double d[4][4] = {};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) d[i][j] = d[j][i] = hilbertDistance(body, points[i], points[j]);
  auto gp = [&](int x, int y, int w) { return 0.5 * (d[x][w] + d[y][w] - d[x][y]); };
  double worst = 0.0;
  for (int w = 0; w < 4; ++w) {
    int others[3], k = 0;
    for (int i = 0; i < 4; ++i)
      if (i != w) others[k++] = i;
    for (int m = 0; m < 3; ++m) {
      const int y = others[m], x = others[(m + 1) % 3], z = others[(m + 2) % 3];
      worst = std::max(worst, std::min(gp(x, y, w), gp(y, z, w)) - gp(x, z, w));
    }
  }
  return worst;
}

namespace {

// int_0^rho sinh^k, by I_k = sinh^{k-1} cosh / k - (k-1)/k I_{k-2}.
double sinhPowerIntegral(int k, double rho) {
  if (k == 0) return rho;
  if (k == 1) return std::cosh(rho) - 1.0;
  return std::pow(std::sinh(rho), k - 1) * std::cosh(rho) / k - (k - 1.0) / k * sinhPowerIntegral(k - 2, rho);
}

// Distance from the center with density proportional to sinh^{n-1} on [0, R]:
// the radial law of the uniform measure on a hyperbolic ball.
double hyperbolicRadius(double u, double R, int n) {
  const double target = u * sinhPowerIntegral(n - 1, R);
  double lo = 0.0, hi = R;
  for (int i = 0; i < 100; ++i) {
    const double mid = 0.5 * (lo + hi);
    (sinhPowerIntegral(n - 1, mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Vec pointAtDistance(const ConvexBody& body, const Vec& center, const Vec& u, double rho) {
  const Chord c = body.chord(center, u);
  return center + metricRadius(-c.tMinus, c.tPlus, rho) * u;
}

std::vector<DeltaEstimate> deltaProbe(const ConvexBody& body, const Vec& center, const std::vector<double>& scales,
                                      long long quadruplesPerScale, std::uint64_t seed) {
  const int n = body.dim();
  requireDim(center, n, "center");
  if (!body.contains(center)) throw NotInteriorError("probe center is not in the body");
  if (quadruplesPerScale < 1) throw InvalidArgument("quadruple count must be positive", "quadruples");
  std::vector<DeltaEstimate> out;
  for (std::size_t s = 0; s < scales.size(); ++s) {
    const double R = scales[s];
    if (!(R > 0.0)) throw InvalidArgument("scales must be positive", "scales");
    const std::uint64_t scaleSeed = substreamSeed(seed, s);
    std::vector<std::pair<double, std::array<Vec, 4>>> res(static_cast<std::size_t>(quadruplesPerScale));
    parallelFor(res.size(), [&](std::size_t j) {
      Rng rng(substreamSeed(scaleSeed, j));
      std::array<Vec, 4> q;
      for (auto& p : q) {
        const Vec u = rng.direction(n);
        p = pointAtDistance(body, center, u, hyperbolicRadius(rng.uniform(), R, n));
      }
      res[j] = {fourPointDefect(body, q), q};
    });
    DeltaEstimate e;
    e.R = R;
    e.quadruples = quadruplesPerScale;
    e.seed = seed;
    e.maxDefect = -1.0;
    for (auto& [v, q] : res) {
      if (v > e.maxDefect) {
        e.maxDefect = v;
        e.witness = q;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace hilbert
