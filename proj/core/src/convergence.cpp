#include "hilbert/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hilbert/directions.hpp"
#include "hilbert/hilbert_metric.hpp"
#include "hilbert/measure.hpp"
#include "hilbert/parallel.hpp"
#include "hilbert/random.hpp"

namespace hilbert {

namespace {

int defaultGrid(int n, int value) { return value > 0 ? value : (n == 2 ? 64 : 256); }

// Every probed boundary point of `inner` lies in `outer`.
bool nestedIn(const ConvexBody& inner, const ConvexBody& outer, int probes) {
  const Vec c = inner.interiorPoint();
  for (const Vec& u : gridDirections(inner.dim(), probes)) {
    const Vec y = c + (1.0 - 1e-9) * inner.chord(c, u).tPlus * u;
    if (!outer.contains(y)) return false;
  }
  return true;
}

}  // namespace

std::vector<Vec> gridPoints(const ConvexBody& region, int count) {
  const int n = region.dim();
  const BoundingBox& box = region.boundingBox();
  std::vector<Vec> out;
  const std::uint64_t cap = 10000ULL * static_cast<std::uint64_t>(std::max(count, 1));
  for (std::uint64_t i = 1; static_cast<int>(out.size()) < count; ++i) {
    if (i > cap) throw SupportError("region is too thin for rejection sampling from its bounding box");
    const Vec x = box.lo + haltonPoint(i, n).cwiseProduct(box.hi - box.lo);
    if (region.contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Vec> gridDirections(int n, int count) {
  if (n == 1) return {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
  if (n == 2) return circleDirections(std::max(8, count + count % 2)).dirs;
  return lowDiscrepancyDirections(n, count).dirs;
}

NormRatioField normRatioField(const ConvexBody& member, const ConvexBody& limit, const ConvexBody& region,
                              const GridSpec& grid, bool reportOnly) {
  const int n = limit.dim();
  if (member.dim() != n || region.dim() != n) throw InvalidArgument("bodies have different dimensions", "A");
  NormRatioField field;
  const int probes = n == 2 ? 64 : 256;
  field.nested = nestedIn(region, limit, probes) && nestedIn(limit, member, probes);
  if (!field.nested && !reportOnly) throw InvalidArgument("sequence is not nested around the limit", "sequence");

  field.points = gridPoints(region, defaultGrid(n, grid.points));
  field.directions = gridDirections(n, defaultGrid(n, grid.directions));
  const auto P = field.points.size(), D = field.directions.size();
  field.ratio.resize(static_cast<Eigen::Index>(P), static_cast<Eigen::Index>(D));
  parallelFor(P, [&](std::size_t i) {
    for (std::size_t j = 0; j < D; ++j) {
      const Vec& v = field.directions[j];
      field.ratio(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          finslerNorm(member, field.points[i], v) / finslerNorm(limit, field.points[i], v);
    }
  });
  field.infRatio = field.ratio.minCoeff();
  field.supRatio = field.ratio.maxCoeff();
  field.supDeficit = 1.0 - field.infRatio;
  return field;
}

ConvergenceReport densityConvergence(const std::vector<ConvexBody>& sequence, const std::vector<std::string>& labels,
                                     const ConvexBody& limit, const ConvexBody& region, const GridSpec& grid,
                                     int densityResolution, bool reportOnly) {
  if (sequence.empty()) throw InvalidArgument("empty sequence", "sequence");
  if (!labels.empty() && labels.size() != sequence.size())
    throw InvalidArgument("one label per sequence member is required", "labels");
  const int n = limit.dim();
  const std::vector<Vec> points = gridPoints(region, defaultGrid(n, grid.points));
  std::vector<DensityValue> base(points.size());
  parallelFor(points.size(), [&](std::size_t i) { base[i] = hilbertDensity(limit, points[i], densityResolution); });

  ConvergenceReport rep;
  rep.ratioMonotone = rep.deficitMonotone = rep.deviationMonotone = true;
  double prevNoise = 0.0;
  for (std::size_t s = 0; s < sequence.size(); ++s) {
    ConvergenceStep step;
    step.label = labels.empty() ? std::to_string(s) : labels[s];
    step.field = normRatioField(sequence[s], limit, region, grid, reportOnly);
    std::vector<DensityValue> h(points.size());
    parallelFor(points.size(),
                [&](std::size_t i) { h[i] = hilbertDensity(sequence[s], points[i], densityResolution); });
    const double envelope = std::pow(step.field.infRatio, n);
    step.densitySandwich = true;
    double noise = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const double r = h[i].h / base[i].h;
      const double tol = 3.0 * (h[i].stdError / h[i].h + base[i].stdError / base[i].h) + 1e-9;
      step.densityRatio.push_back(r);
      step.densityDeviation = std::max(step.densityDeviation, std::abs(r - 1.0));
      step.densitySandwich = step.densitySandwich && r > envelope - tol && r <= 1.0 + tol;
      noise = std::max(noise, tol);
    }
    if (!rep.steps.empty()) {
      const ConvergenceStep& prev = rep.steps.back();
      if ((step.field.ratio - prev.field.ratio).minCoeff() < -1e-10) rep.ratioMonotone = false;
      if (step.field.supDeficit > prev.field.supDeficit + 1e-10) rep.deficitMonotone = false;
      if (step.densityDeviation > prev.densityDeviation + noise + prevNoise) rep.deviationMonotone = false;
    }
    prevNoise = noise;
    rep.steps.push_back(std::move(step));
  }
  rep.finalDeviation = rep.steps.back().densityDeviation;
  return rep;
}

std::vector<ConvexBody> concentricDisks(const std::vector<int>& ks) {
  std::vector<ConvexBody> out;
  for (int k : ks) {
    if (k < 1) throw InvalidArgument("sequence indices must be positive", "k");
    out.push_back(ConvexBody::ball(2, 1.0 + 1.0 / k));
  }
  return out;
}

std::vector<ConvexBody> smoothedSequence(const ConvexBody& base, const std::vector<int>& ks) {
  std::vector<ConvexBody> out;
  for (int k : ks) {
    if (k < 1) throw InvalidArgument("sequence indices must be positive", "k");
    out.push_back(ConvexBody::minkowskiBall(base, 1.0 / k));
  }
  return out;
}

}  // namespace hilbert
