#include "hilbert/local_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "golden.hpp"
#include "hilbert/hilbert_metric.hpp"
#include "hilbert/john.hpp"
#include "hilbert/measure.hpp"
#include "hilbert/parallel.hpp"
#include "hilbert/random.hpp"

namespace hilbert {

namespace {

DirectionSet ballDirections(int n, int resolution) {
  if (n == 1) return meshDirections(1, 2);
  if (n == 2) return circleDirections(std::max(8, ((resolution + 7) / 8) * 8));
  if (n == 3) return icosphere(resolution);
  return lowDiscrepancyDirections(n, resolution);
}

DirectionSet probeDirections(int n, int count) {
  if (n == 1) return meshDirections(1, 2);
  if (n == 2) return circleDirections(std::max(8, count + count % 2));
  if (n == 3) return icosphere(count);
  return lowDiscrepancyDirections(n, count);
}

int probeCount(int n, const ProbeOptions& o) { return o.probeDirs > 0 ? o.probeDirs : (n == 2 ? 64 : 162); }
int interiorCount(int n, const ProbeOptions& o) { return o.interiorPoints > 0 ? o.interiorPoints : (n == 2 ? 256 : 1024); }

// Spacing bound between neighbouring boundary samples.
double sampleSpacing(const RadialBall& ball) {
  const std::size_t count = ball.size();
  double spacing = 0.0;
  if (ball.dirs.dim == 2) {
    for (std::size_t k = 0; k < count; ++k)
      spacing = std::max(spacing, (ball.boundaryPoint(k) - ball.boundaryPoint((k + 1) % count)).norm());
  } else if (ball.dirs.dim == 3) {
    for (const auto& t : ball.dirs.triangles)
      for (int e = 0; e < 3; ++e)
        spacing = std::max(spacing, (ball.boundaryPoint(t[e]) - ball.boundaryPoint(t[(e + 1) % 3])).norm());
  }
  return spacing;
}

// Euclidean distance from an interior point to the body boundary, with the
// nearest boundary point.
double boundaryDistance(const ConvexBody& body, const Vec& y, const DirectionSet& probes, Vec* nearest) {
  if (const Halfspaces* h = body.halfspaces()) {
    const Vec slack = h->b - h->A * y;
    Eigen::Index i = 0;
    const double d = slack.minCoeff(&i);
    if (nearest) *nearest = y + d * h->A.row(i).transpose();
    return d;
  }
  double best = std::numeric_limits<double>::infinity();
  Vec arg;
  for (const auto& w : probes.dirs) {
    const double t = body.chord(y, w).tPlus;
    if (t < best) {
      best = t;
      arg = w;
    }
  }
  const int n = body.dim();
  if (n >= 2) {
    auto negExit = [&](const Vec& w) { return -body.chord(y, w).tPlus; };
    const auto refined = detail::sphereRefineMax(negExit, arg, -best, 2.0 * angularSpacing(probes), n == 2 ? 1 : 4, 40);
    best = -refined.first;
    arg = refined.second;
  }
  if (nearest) *nearest = y + best * arg;
  return best;
}

Vec haltonDirection(const Vec& h, int n) {
  Vec dir(n);
  if (n == 1) {
    dir[0] = h[1] < 0.5 ? 1.0 : -1.0;
  } else if (n == 2) {
    const double th = 2.0 * std::numbers::pi * h[1];
    dir << std::cos(th), std::sin(th);
  } else if (n == 3) {
    const double z = 2.0 * h[1] - 1.0;
    const double ph = 2.0 * std::numbers::pi * h[2];
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    dir << r * std::cos(ph), r * std::sin(ph), z;
  } else {
    dir = (2.0 * h.tail(n) - Vec::Ones(n));
    if (dir.norm() == 0.0) dir[0] = 1.0;
    dir.normalize();
  }
  return dir;
}

}  // namespace

int defaultBallResolution(int n) { return n <= 2 ? 512 : 2048; }

Vec metricSpherePoint(const ConvexBody& body, const Vec& center, double r, const Vec& u) {
  const Chord c = body.chord(center, u);
  return center + metricRadius(-c.tMinus, c.tPlus, r) * u;
}

RadialBall metricBall(const ConvexBody& body, const Vec& p, double r, int resolution) {
  const int n = body.dim();
  requireDim(p, n, "p");
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("radius must be positive", "radius");
  if (resolution <= 0) resolution = defaultBallResolution(n);
  RadialBall ball;
  ball.center = p;
  ball.radius = r;
  ball.dirs = ballDirections(n, resolution);
  ball.radial.resize(ball.dirs.size());
  for (std::size_t k = 0; k < ball.dirs.size(); ++k) {
    const Chord c = body.chord(p, ball.dirs.dirs[k]);
    requireResolved(body, c, ball.dirs.dirs[k]);
    ball.radial[k] = metricRadius(-c.tMinus, c.tPlus, r);
  }
  return ball;
}

NormalizedBall johnNormalizeBall(const ConvexBody& body, const RadialBall& ball, int passes) {
  const int n = body.dim();
  if (passes < 1) throw InvalidArgument("at least one pass is required", "passes");
  const int resolution = static_cast<int>(ball.size());
  Mat map = Mat::Identity(n, n);
  Vec shift = Vec::Zero(n);
  auto resample = [&]() { return metricBall(body.affineImage(map, shift), map * ball.center + shift, ball.radius, resolution); };
  // Round the ball by its boundary second moment first, so that the radial
  // triangulation of the samples stays close to their convex hull.
  for (int it = 0; it < 30 && n >= 2; ++it) {
    const RadialBall current = it == 0 ? ball : resample();
    Mat second = Mat::Zero(n, n);
    for (std::size_t k = 0; k < current.size(); ++k) {
      const Vec z = current.boundaryPoint(k) - current.center;
      second += z * z.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(second / static_cast<double>(current.size()));
    const Vec ev = eig.eigenvalues();
    if (ev[n - 1] < 1.5 * ev[0]) break;
    const Mat T = eig.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
    map = T * map;
    shift = T * shift;
  }
  for (int pass = 0; pass < passes; ++pass) {
    const RadialBall current = resample();
    const Ellipsoid E = radialJohnEllipsoid(current.center, current.dirs, current.radial);
    const Mat Binv = E.map().inverse();
    map = Binv * map;
    shift = Binv * (shift - E.center);

    Mat second = Mat::Zero(n, n);
    for (std::size_t k = 0; k < current.size(); ++k) {
      const Vec z = Binv * (current.boundaryPoint(k) - E.center);
      second += z * z.transpose();
    }
    Eigen::SelfAdjointEigenSolver<Mat> eig(second / static_cast<double>(current.size()));
    const Vec ev = eig.eigenvalues();
    bool separated = true;
    for (int i = 0; i + 1 < n; ++i)
      if (ev[i + 1] - ev[i] <= 1e-3 * ev[n - 1]) separated = false;
    if (separated && n >= 2) {
      Mat R = eig.eigenvectors();
      for (int j = 0; j < n; ++j) {
        Eigen::Index i = 0;
        R.col(j).cwiseAbs().maxCoeff(&i);
        if (R(i, j) < 0.0) R.col(j) = -R.col(j);
      }
      map = R.transpose() * map;
      shift = R.transpose() * shift;
    }
  }
  NormalizedBall out{map, shift, body.affineImage(map, shift), {}, 0.0, 0.0, passes};
  out.ball = metricBall(out.body, map * ball.center + shift, ball.radius, resolution);
  out.minNorm = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < out.ball.size(); ++k) {
    const double r = out.ball.boundaryPoint(k).norm();
    out.minNorm = std::min(out.minNorm, r);
    out.maxNorm = std::max(out.maxNorm, r);
  }
  return out;
}

std::vector<Vec> ballInteriorSamples(const ConvexBody& body, const RadialBall& ball, int count) {
  const int n = body.dim();
  std::vector<Vec> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 1)));
  out.push_back(ball.center);
  for (int i = 1; i < count; ++i) {
    const Vec h = haltonPoint(static_cast<std::uint64_t>(i), n + 1);
    const Vec dir = haltonDirection(h, n);
    const double s = std::pow(h[0], 1.0 / n);
    const Chord c = body.chord(ball.center, dir);
    out.push_back(ball.center + s * metricRadius(-c.tMinus, c.tPlus, ball.radius) * dir);
  }
  return out;
}

GapResult step1Gap(const ConvexBody& mappedBody, const RadialBall& mappedBall, const ProbeOptions& options) {
  const int n = mappedBody.dim();
  const DirectionSet probes = probeDirections(n, probeCount(n, options));
  const std::size_t count = mappedBall.size();
  std::vector<double> dist(count);
  parallelFor(count, [&](std::size_t k) { dist[k] = boundaryDistance(mappedBody, mappedBall.boundaryPoint(k), probes, nullptr); });

  std::vector<std::size_t> order(count);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dist[a] < dist[b] || (dist[a] == dist[b] && a < b); });

  GapResult res;
  const double sampled = dist[order.front()];
  res.d0 = sampled;
  res.ballWitness = mappedBall.boundaryPoint(order.front());
  boundaryDistance(mappedBody, res.ballWitness, probes, &res.bodyWitness);
  res.d0Lower = sampled - sampleSpacing(mappedBall);

  if (n >= 2) {
    const std::size_t refineCount = std::min<std::size_t>(32, count);
    std::vector<std::pair<double, Vec>> refined(refineCount);
    const double arc = 2.0 * angularSpacing(mappedBall.dirs);
    parallelFor(refineCount, [&](std::size_t i) {
      const std::size_t k = order[i];
      auto negGap = [&](const Vec& u) {
        return -boundaryDistance(mappedBody, metricSpherePoint(mappedBody, mappedBall.center, mappedBall.radius, u), probes,
                                 nullptr);
      };
      refined[i] = detail::sphereRefineMax(negGap, mappedBall.dirs.dirs[k], -dist[k], arc, 2, 30);
    });
    for (const auto& [val, u] : refined) {
      if (-val < res.d0) {
        res.d0 = -val;
        res.ballWitness = metricSpherePoint(mappedBody, mappedBall.center, mappedBall.radius, u);
        boundaryDistance(mappedBody, res.ballWitness, probes, &res.bodyWitness);
      }
    }
  }
  return res;
}

ChordBoundResult step2ChordBound(const ConvexBody& mappedBody, const RadialBall& mappedBall,
                                 const ProbeOptions& options) {
  const int n = mappedBody.dim();
  const DirectionSet probes = probeDirections(n, probeCount(n, options));
  const std::vector<Vec> points = ballInteriorSamples(mappedBody, mappedBall, interiorCount(n, options));
  auto minExit = [&](const Vec& x, const Vec& w) {
    const Chord c = mappedBody.chord(x, w);
    return std::min(c.tPlus, -c.tMinus) * w.norm();
  };
  std::vector<std::pair<double, std::size_t>> perPoint(points.size());
  parallelFor(points.size(), [&](std::size_t i) {
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const double m = minExit(points[i], probes.dirs[k]);
      if (m > best) {
        best = m;
        arg = k;
      }
    }
    perPoint[i] = {best, arg};
  });
  ChordBoundResult res;
  res.maxMinExit = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (perPoint[i].first > res.maxMinExit) {
      res.maxMinExit = perPoint[i].first;
      res.witnessPoint = points[i];
      res.witnessDirection = probes.dirs[perPoint[i].second];
    }
  }
  // Sharper check through the center, refined.
  const Vec& c = mappedBall.center;
  Vec dir = probes.dirs[perPoint[0].second];
  double val = perPoint[0].first;
  if (n >= 2) {
    auto f = [&](const Vec& w) { return minExit(c, w); };
    auto refined = detail::sphereRefineMax(f, dir, val, 2.0 * angularSpacing(probes), n == 2 ? 1 : 4, 50);
    val = refined.first;
    dir = refined.second;
  }
  res.centerMaxMinExit = val;
  res.centerWitnessDirection = dir;
  if (val > res.maxMinExit) {
    res.maxMinExit = val;
    res.witnessPoint = c;
    res.witnessDirection = dir;
  }
  return res;
}

LipschitzResult step3Bilipschitz(const ConvexBody& mappedBody, const RadialBall& mappedBall,
                                 const ProbeOptions& options) {
  const int n = mappedBody.dim();
  const DirectionSet probes = probeDirections(n, probeCount(n, options));
  std::vector<Vec> points = ballInteriorSamples(mappedBody, mappedBall, interiorCount(n, options));
  for (std::size_t k = 0; k < mappedBall.size(); ++k) points.push_back(mappedBall.boundaryPoint(k));

  struct Extremes {
    double hi = -1.0, lo = std::numeric_limits<double>::infinity();
    std::size_t hiDir = 0, loDir = 0;
  };
  std::vector<Extremes> per(points.size());
  parallelFor(points.size(), [&](std::size_t i) {
    Extremes e;
    for (std::size_t k = 0; k < probes.size(); ++k) {
      const double f = finslerNorm(mappedBody, points[i], probes.dirs[k]);
      if (f > e.hi) {
        e.hi = f;
        e.hiDir = k;
      }
      if (f < e.lo) {
        e.lo = f;
        e.loDir = k;
      }
    }
    per[i] = e;
  });
  LipschitzResult res;
  res.lipUpper = -1.0;
  res.lipLower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (per[i].hi > res.lipUpper) {
      res.lipUpper = per[i].hi;
      res.upperWitnessPoint = points[i];
      res.upperWitnessDirection = probes.dirs[per[i].hiDir];
    }
    if (per[i].lo < res.lipLower) {
      res.lipLower = per[i].lo;
      res.lowerWitnessPoint = points[i];
      res.lowerWitnessDirection = probes.dirs[per[i].loDir];
    }
  }
  res.C = std::max(res.lipUpper, 1.0 / res.lipLower);
  return res;
}

Theorem12Report theorem12(const ConvexBody& body, const Vec& p, const ProbeOptions& options, const std::string& bodyId) {
  const int n = body.dim();
  requireDim(p, n, "p");
  if (n > 3) throw InvalidArgument("the local-geometry checks need n <= 3", "body");
  const int resolution = options.boundaryDirs > 0 ? options.boundaryDirs : defaultBallResolution(n);
  const RadialBall ball = metricBall(body, p, 1.0, resolution);
  const NormalizedBall nb = johnNormalizeBall(body, ball, options.passes);

  Theorem12Report rep;
  rep.bodyId = bodyId;
  rep.point = p;
  rep.n = n;
  rep.map = nb.map;
  rep.shift = nb.shift;
  rep.minNorm = nb.minNorm;
  rep.maxNorm = nb.maxNorm;
  rep.gap = step1Gap(nb.body, nb.ball, options);
  rep.chords = step2ChordBound(nb.body, nb.ball, options);
  rep.lipschitz = step3Bilipschitz(nb.body, nb.ball, options);
  rep.boundarySamples = static_cast<int>(nb.ball.size());
  rep.interiorSamples = interiorCount(n, options);
  rep.probeDirections = static_cast<int>(probeDirections(n, probeCount(n, options)).size());

  const std::size_t count = nb.ball.size();
  std::vector<double> diam(count);
  parallelFor(count, [&](std::size_t k) {
    const Vec y = nb.ball.boundaryPoint(k);
    double d = 0.0;
    if (!nb.ball.dirs.antipode.empty() && nb.ball.dirs.antipode[k] >= 0)
      d = hilbertDistance(nb.body, y, nb.ball.boundaryPoint(static_cast<std::size_t>(nb.ball.dirs.antipode[k])));
    d = std::max(d, hilbertDistance(nb.body, y, nb.ball.boundaryPoint((k * 97 + 13) % count)));
    diam[k] = d;
  });
  rep.diameter = *std::max_element(diam.begin(), diam.end());

  const double root = std::sqrt(static_cast<double>(n));
  rep.gapOk = rep.gap.d0 >= bounds::boundaryGap() - 1e-12;
  rep.centerOk = rep.chords.centerMaxMinExit <= bounds::centerExit(n) + 1e-9;
  rep.chordOk = rep.chords.maxMinExit <= bounds::chordExit(n) + 1e-9;
  rep.upperOk = rep.lipschitz.lipUpper <= bounds::lipschitzUpper() + 1e-9;
  rep.lowerOk = rep.lipschitz.lipLower >= bounds::lipschitzLower(n) - 1e-12;
  rep.diameterOk = rep.diameter <= 2.0 + 1e-9;
  rep.symmetricNormOk = rep.maxNorm <= root + 1e-3;
  rep.normOk = rep.minNorm >= 1.0 - 1e-6 && rep.maxNorm <= n + 1e-3;
  return rep;
}

}  // namespace hilbert
