#include "hilbert/measure.hpp"

#include <cmath>
#include <limits>

#include "hilbert/hilbert_metric.hpp"
#include "hilbert/parallel.hpp"
#include "hilbert/random.hpp"

namespace hilbert {

namespace {

struct Neumaier {
  double sum = 0.0;
  double comp = 0.0;
  void add(double x) {
    const double t = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  double value() const { return sum + comp; }
};

DirectionSet frameDirections(int n, int resolution) {
  if (n == 1) return meshDirections(1, 2);
  if (n == 2) return circleDirections(resolution + resolution % 2);
  if (n == 3) return icosphere(resolution);
  return lowDiscrepancyDirections(n, resolution);
}

double polygonArea(const std::vector<Vec>& pts, std::size_t stride) {
  double area = 0.0;
  const std::size_t count = pts.size();
  for (std::size_t k = 0; k < count; k += stride) {
    const Vec& a = pts[k];
    const Vec& b = pts[(k + stride) % count];
    area += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * std::abs(area);
}

double polyhedronVolume(const std::vector<Vec>& pts, const std::vector<std::array<int, 3>>& triangles) {
  double vol = 0.0;
  for (const auto& t : triangles) {
    Eigen::Matrix3d m;
    m.col(0) = pts[t[0]].head<3>();
    m.col(1) = pts[t[1]].head<3>();
    m.col(2) = pts[t[2]].head<3>();
    vol += std::abs(m.determinant()) / 6.0;
  }
  return vol;
}

// Deterministic volume (value, Richardson correction size).
std::pair<double, double> deterministicVolume(const TangentUnitBall& tb) {
  const int n = static_cast<int>(tb.basePoint.size());
  if (n == 1) return {tb.radius[0] + tb.radius[1], 0.0};
  const double jac = std::abs(tb.frame.determinant());
  std::vector<Vec> pts(tb.frameDirs.size());
  for (std::size_t k = 0; k < pts.size(); ++k) pts[k] = tb.frameRadius[k] * tb.frameDirs.dirs[k];
  double fine = 0.0, coarse = 0.0;
  if (n == 2) {
    fine = polygonArea(pts, 1);
    coarse = polygonArea(pts, 2);
  } else {
    fine = polyhedronVolume(pts, tb.frameDirs.triangles);
    const DirectionSet coarser = icosphere(static_cast<int>(tb.frameDirs.size()) / 4);
    if (coarser.size() >= tb.frameDirs.size()) return {jac * fine, 0.0};
    coarse = polyhedronVolume(pts, coarser.triangles);
  }
  const double rich = (4.0 * fine - coarse) / 3.0;
  return {jac * rich, jac * std::abs(rich - fine)};
}

MCEstimate monteCarloVolume(const ConvexBody& body, const TangentUnitBall& tb, long long samples, std::uint64_t seed) {
  const int n = static_cast<int>(tb.basePoint.size());
  Vec half = Vec::Zero(n);
  for (std::size_t k = 0; k < tb.frameDirs.size(); ++k)
    half = half.cwiseMax((tb.frameRadius[k] * tb.frameDirs.dirs[k]).cwiseAbs());
  half *= 1.1;
  const double boxVol = (2.0 * half).prod();
  int k = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(samples) / 4.0, 1.0 / n))));
  k = std::min(k, n == 3 ? 16 : 4);
  long long strata = 1;
  for (int i = 0; i < n; ++i) strata *= k;
  const long long per = std::max(2LL, samples / strata);
  std::vector<double> mean(static_cast<std::size_t>(strata)), var(static_cast<std::size_t>(strata));
  parallelFor(static_cast<std::size_t>(strata), [&](std::size_t s) {
    Rng rng(substreamSeed(seed, s));
    std::vector<int> cell(n);
    std::size_t rest = s;
    for (int i = 0; i < n; ++i) {
      cell[i] = static_cast<int>(rest % static_cast<std::size_t>(k));
      rest /= static_cast<std::size_t>(k);
    }
    long long hits = 0;
    Vec y(n);
    for (long long j = 0; j < per; ++j) {
      for (int i = 0; i < n; ++i) y[i] = -half[i] + 2.0 * half[i] * (cell[i] + rng.uniform()) / k;
      if (finslerNorm(body, tb.basePoint, tb.frame * y) < 1.0) ++hits;
    }
    const double f = static_cast<double>(hits) / per;
    mean[s] = f;
    var[s] = f * (1.0 - f) / std::max(1LL, per - 1);
  });
  Neumaier m, v;
  for (long long s = 0; s < strata; ++s) {
    m.add(mean[s]);
    v.add(var[s]);
  }
  const double jac = std::abs(tb.frame.determinant());
  MCEstimate out;
  out.value = jac * boxVol * m.value() / strata;
  out.stdError = jac * boxVol * std::sqrt(v.value()) / strata;
  out.samples = per * strata;
  out.seed = seed;
  return out;
}

}  // namespace

int defaultResolution(int n) { return n <= 2 ? 256 : (n == 3 ? 642 : 2048); }

TangentUnitBall tangentUnitBall(const ConvexBody& body, const Vec& p, int resolution) {
  const int n = body.dim();
  requireDim(p, n, "p");
  if (n == 2 && resolution < 16) throw InvalidArgument("resolution must be >= 16 in the plane", "resolution");
  if (n == 3 && resolution < 128) throw InvalidArgument("resolution must be >= 128 in space", "resolution");
  if (!body.contains(p)) throw NotInteriorError("point is not in the open body");
  TangentUnitBall tb;
  tb.basePoint = p;
  tb.resolution = resolution;
  tb.frame = finslerFrame(body, p);
  tb.frameDirs = frameDirections(n, resolution);
  const std::size_t count = tb.frameDirs.size();
  tb.frameRadius.resize(count);
  tb.dirs.resize(count);
  tb.radius.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    const Vec v = tb.frame * tb.frameDirs.dirs[k];
    const double f = finslerNorm(body, p, v);
    tb.frameRadius[k] = 1.0 / f;
    const double len = v.norm();
    tb.dirs[k] = v / len;
    tb.radius[k] = 1.0 / (f / len);
  }
  return tb;
}

double maxFinslerNorm(const TangentUnitBall& ball) {
  double r = std::numeric_limits<double>::infinity();
  for (double x : ball.radius) r = std::min(r, x);
  return 1.0 / r;
}

MCEstimate tubVolume(const ConvexBody& body, const Vec& p, int resolution, long long samples, std::uint64_t seed) {
  const int n = body.dim();
  if (resolution <= 0) resolution = defaultResolution(n);
  const TangentUnitBall tb = tangentUnitBall(body, p, resolution);
  if (n >= 4 && samples == 0) samples = 20000;
  if (n >= 3 && samples > 0) return monteCarloVolume(body, tb, samples, seed);
  const auto [vol, err] = deterministicVolume(tb);
  return {vol, err, 0, seed};
}

DensityValue hilbertDensity(const ConvexBody& body, const Vec& p, int resolution, long long samples,
                            std::uint64_t seed) {
  const int n = body.dim();
  const MCEstimate vol = tubVolume(body, p, resolution, samples, seed);
  DensityValue d;
  d.point = p;
  d.tubVolume = vol.value;
  d.h = unitBallVolume(n) / vol.value;
  d.stdError = d.h * vol.stdError / vol.value;
  return d;
}

double metricRadius(double a, double b, double rho) {
  const double E = std::exp(2.0 * rho);
  return a * b * std::expm1(2.0 * rho) / (b + a * E);
}

double metricRadiusDerivative(double a, double b, double rho) {
  const double E = std::exp(2.0 * rho);
  const double den = b + a * E;
  return 2.0 * E * a * b * (a + b) / (den * den);
}

MultiEstimate integrateMany(const ConvexBody& body, const Proposal& proposal, int count, const Integrand& f,
                            const IntegrationOptions& options) {
  const int n = body.dim();
  if (count < 1) throw InvalidArgument("at least one integrand component is required", "count");
  if (options.samples < 1) throw InvalidArgument("samples must be positive", "samples");
  const int resolution = options.densityResolution > 0 ? options.densityResolution : defaultResolution(n);
  const bool polar = proposal.kind == Proposal::Kind::Polar;
  if (polar) {
    requireDim(proposal.center, n, "center");
    if (!body.contains(proposal.center)) throw NotInteriorError("proposal center is not in the body");
    if (!(proposal.rhoMax > proposal.rhoMin) || proposal.rhoMin < 0.0)
      throw InvalidArgument("need 0 <= rhoMin < rhoMax", "radius");
  }
  const BoundingBox& box = body.boundingBox();
  const double boxVol = box.volume();
  const double sphere = unitSphereArea(n);
  const double span = proposal.rhoMax - proposal.rhoMin;

  const int dims = polar ? (n == 1 ? 2 : std::min(n, 3)) : n;
  int k = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(options.samples) / 4.0, 1.0 / dims))));
  k = std::min(k, std::max(1, static_cast<int>(std::floor(std::pow(4096.0, 1.0 / dims)))));
  long long strata = 1;
  for (int i = 0; i < dims; ++i) strata *= k;
  const long long per = std::max(2LL, options.samples / strata);

  struct Stratum {
    std::vector<double> mean;
    Mat cov;
    long long accepted = 0;
  };
  std::vector<Stratum> results(static_cast<std::size_t>(strata));
  const double nan = std::numeric_limits<double>::quiet_NaN();

  parallelFor(static_cast<std::size_t>(strata), [&](std::size_t s) {
    Rng rng(substreamSeed(options.seed, s));
    std::vector<int> cell(dims);
    std::size_t rest = s;
    for (int i = 0; i < dims; ++i) {
      cell[i] = static_cast<int>(rest % static_cast<std::size_t>(k));
      rest /= static_cast<std::size_t>(k);
    }
    std::vector<Neumaier> sum(count);
    std::vector<Neumaier> cross(static_cast<std::size_t>(count * count));
    std::vector<double> vals(count);
    Vec u(dims);
    Stratum& out = results[s];
    for (long long j = 0; j < per; ++j) {
      for (int i = 0; i < dims; ++i) u[i] = (cell[i] + rng.uniform()) / k;
      Vec x;
      double w = 0.0;
      double dist = nan;
      if (!polar) {
        x = box.lo + u.cwiseProduct(box.hi - box.lo);
        if (body.contains(x)) w = boxVol;
      } else {
        Vec dir(n);
        if (n == 1) {
          dir[0] = u[1] < 0.5 ? 1.0 : -1.0;
        } else if (n == 2) {
          const double th = 2.0 * std::numbers::pi * u[1];
          dir << std::cos(th), std::sin(th);
        } else if (n == 3) {
          const double z = 2.0 * u[1] - 1.0;
          const double ph = 2.0 * std::numbers::pi * u[2];
          const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
          dir << r * std::cos(ph), r * std::sin(ph), z;
        } else {
          dir = rng.direction(n);
        }
        dist = proposal.rhoMin + span * u[0];
        const Chord c = body.chord(proposal.center, dir);
        const double a = -c.tMinus, b = c.tPlus;
        const double t = metricRadius(a, b, dist);
        x = proposal.center + t * dir;
        w = sphere * span * std::pow(t, n - 1) * metricRadiusDerivative(a, b, dist);
      }
      bool any = false;
      if (w > 0.0) {
        ++out.accepted;
        f(x, dist, vals.data());
        for (double v : vals) any = any || v != 0.0;
      }
      if (any && options.weight == Weight::HilbertDensity) {
        const TangentUnitBall tb = tangentUnitBall(body, x, resolution);
        if (maxFinslerNorm(tb) > options.maxFinsler)
          throw SupportError("integrand support reaches a point with Finsler norm above the limit");
        w *= unitBallVolume(n) / deterministicVolume(tb).first;
      }
      for (int a = 0; a < count; ++a) {
        const double ya = any ? w * vals[a] : 0.0;
        sum[a].add(ya);
        for (int b = a; b < count; ++b) cross[a * count + b].add(ya * (any ? w * vals[b] : 0.0));
      }
    }
    out.mean.resize(count);
    out.cov = Mat::Zero(count, count);
    for (int a = 0; a < count; ++a) out.mean[a] = sum[a].value() / per;
    for (int a = 0; a < count; ++a)
      for (int b = a; b < count; ++b)
        out.cov(a, b) = out.cov(b, a) =
            (cross[a * count + b].value() - per * out.mean[a] * out.mean[b]) / static_cast<double>(per - 1);
  });

  MultiEstimate est;
  est.values.resize(count);
  est.covariance = Mat::Zero(count, count);
  est.samples = per * strata;
  const double S = static_cast<double>(strata);
  for (int a = 0; a < count; ++a) {
    Neumaier m;
    for (const auto& r : results) m.add(r.mean[a]);
    est.values[a].value = m.value() / S;
  }
  for (int a = 0; a < count; ++a) {
    for (int b = a; b < count; ++b) {
      Neumaier c;
      for (const auto& r : results) c.add(r.cov(a, b));
      est.covariance(a, b) = est.covariance(b, a) = c.value() / (static_cast<double>(per) * S * S);
    }
  }
  for (const auto& r : results) est.accepted += r.accepted;
  for (int a = 0; a < count; ++a) {
    est.values[a].stdError = std::sqrt(std::max(0.0, est.covariance(a, a)));
    est.values[a].samples = est.samples;
    est.values[a].seed = options.seed;
  }
  if (est.accepted == 0) throw SupportError("all proposals were rejected");
  return est;
}

MCEstimate integrate(const ConvexBody& body, const std::function<double(const Vec&)>& f, Weight weight,
                     long long samples, std::uint64_t seed) {
  IntegrationOptions opt;
  opt.weight = weight;
  opt.samples = samples;
  opt.seed = seed;
  const MultiEstimate est =
      integrateMany(body, Proposal::box(), 1, [&](const Vec& x, double, double* out) { out[0] = f(x); }, opt);
  return est.values[0];
}

MCEstimate ratioEstimate(const MultiEstimate& est, int numerator, int denominator) {
  const double A = est.values[numerator].value;
  const double B = est.values[denominator].value;
  if (B == 0.0) throw SupportError("zero denominator");
  const double vA = est.covariance(numerator, numerator);
  const double vB = est.covariance(denominator, denominator);
  const double cAB = est.covariance(numerator, denominator);
  const double var = vA / (B * B) - 2.0 * A * cAB / (B * B * B) + A * A * vB / (B * B * B * B);
  MCEstimate out;
  out.value = A / B;
  out.stdError = std::sqrt(std::max(0.0, var));
  out.samples = est.samples;
  out.seed = est.values[numerator].seed;
  return out;
}

}  // namespace hilbert
