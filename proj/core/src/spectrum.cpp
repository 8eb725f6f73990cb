#include "hilbert/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hilbert/hilbert_metric.hpp"
#include "hilbert/random.hpp"

namespace hilbert {

const char* toString(Profile profile) { return profile == Profile::Tent ? "tent" : "exponential"; }

Profile profileFromString(const std::string& name) {
  if (name == "tent") return Profile::Tent;
  if (name == "exponential" || name == "exp") return Profile::Exponential;
  throw InvalidArgument("unknown profile '" + name + "' (expected tent or exponential)", "profile");
}

TrialFunction::TrialFunction(const ConvexBody& body, Profile profile, const Vec& center, double R, double s)
    : body_(body), profile_(profile), center_(center), R_(R), s_(s) {
  requireDim(center, body.dim(), "center");
  if (!(R > 0.0) || !std::isfinite(R)) throw InvalidArgument("support radius must be positive", "R");
  if (!(s >= 0.0) || !std::isfinite(s)) throw InvalidArgument("shape must be nonnegative", "s");
  if (!body.contains(center)) throw NotInteriorError("trial center is not in the body");
}

TrialFunction TrialFunction::tent(const ConvexBody& body, const Vec& center, double R) {
  return TrialFunction(body, Profile::Tent, center, R, 0.0);
}

TrialFunction TrialFunction::exponential(const ConvexBody& body, const Vec& center, double s, double R) {
  return TrialFunction(body, Profile::Exponential, center, R, s);
}

TrialFunction TrialFunction::scaled(double c) const {
  TrialFunction out = *this;
  out.scale_ *= c;
  return out;
}

double TrialFunction::phi(double rho) const {
  if (rho >= R_) return 0.0;
  const double tent = 1.0 - rho / R_;
  return profile_ == Profile::Tent ? tent : std::exp(-s_ * rho) * tent;
}

double TrialFunction::phiDerivative(double rho) const {
  if (rho >= R_) return 0.0;
  if (profile_ == Profile::Tent) return -1.0 / R_;
  const double e = std::exp(-s_ * rho);
  return -e * (s_ * (1.0 - rho / R_) + 1.0 / R_);
}

double TrialFunction::value(const Vec& x) const { return scale_ * phi(hilbertDistance(body_, center_, x)); }

Vec TrialFunction::gradient(const Vec& x) const {
  const double rho = hilbertDistance(body_, center_, x);
  if (rho >= R_) return Vec::Zero(x.size());
  return scale_ * phiDerivative(rho) * distanceGradient(body_, center_, x);
}

double gradientCheck(const TrialFunction& f, int points, std::uint64_t seed, double step, double kink) {
  const ConvexBody& body = f.body();
  const int n = body.dim();
  Rng rng(seed);
  double worst = 0.0;
  for (int i = 0; i < points; ++i) {
    const Vec dir = rng.direction(n);
    const double rho = rng.uniform(kink, f.R() - kink);
    const Chord c = body.chord(f.center(), dir);
    const Vec x = f.center() + metricRadius(-c.tMinus, c.tPlus, rho) * dir;
    const Vec e = rng.direction(n);
    const Chord local = body.chord(x, e);
    const double h = step * std::min(local.tPlus, -local.tMinus);
    const double numeric = (f.value(x + h * e) - f.value(x - h * e)) / (2.0 * h);
    const Vec g = f.gradient(x);
    const double scale = std::max(g.norm(), std::numeric_limits<double>::min());
    worst = std::max(worst, std::abs(numeric - g.dot(e)) / scale);
  }
  return worst;
}

namespace {

QuotientEstimate quotient(const TrialFunction& f, const QuotientOptions& options, bool squared) {
  IntegrationOptions opt;
  opt.weight = Weight::HilbertDensity;
  opt.samples = options.samples;
  opt.seed = options.seed;
  opt.densityResolution = options.densityResolution;
  opt.maxFinsler = options.maxFinsler;
  const ConvexBody& body = f.body();
  const Proposal proposal = Proposal::polar(f.center(), f.R());
  const MultiEstimate est = integrateMany(
      body, proposal, 2,
      [&](const Vec& x, double rho, double* out) {
        const double v = f.scale() * f.phi(rho);
        const double slope = std::abs(f.scale() * f.phiDerivative(rho));
        double dual = 0.0;
        if (slope > 0.0) dual = slope * dualNorm(body, x, distanceGradient(body, f.center(), x), options.dualResolution);
        out[0] = squared ? dual * dual : dual;
        out[1] = squared ? v * v : std::abs(v);
      },
      opt);
  if (est.values[1].value <= 0.0) throw SupportError("trial function vanishes on all samples");
  QuotientEstimate q;
  q.numerator = est.values[0];
  q.denominator = est.values[1];
  q.quotient = ratioEstimate(est, 0, 1);
  q.samples = est.samples;
  q.seed = options.seed;
  return q;
}

}  // namespace

QuotientEstimate rayleighQuotient(const TrialFunction& f, const QuotientOptions& options) {
  return quotient(f, options, true);
}

QuotientEstimate sobolevQuotient(const TrialFunction& f, const QuotientOptions& options) {
  return quotient(f, options, false);
}

MinimizeResult minimizeRayleigh(const ConvexBody& body, const TrialFamily& family, int budget,
                                const QuotientOptions& options) {
  if (family.radii.empty()) throw InvalidArgument("family needs at least one radius", "radii");
  const bool tent = family.profile == Profile::Tent;
  if (!tent && family.shapes.empty()) throw InvalidArgument("exponential family needs at least one shape", "shapes");
  if (budget < 1) throw InvalidArgument("budget must be positive", "budget");

  MinimizeResult res;
  auto eval = [&](double R, double s) -> double {
    if (res.evaluations >= budget) return std::numeric_limits<double>::infinity();
    ++res.evaluations;
    try {
      const TrialFunction f =
          tent ? TrialFunction::tent(body, family.center, R) : TrialFunction::exponential(body, family.center, s, R);
      TrialRecord rec{R, s, rayleighQuotient(f, options)};
      res.trials.push_back(rec);
      return rec.estimate.quotient.value;
    } catch (const SupportError&) {
      return std::numeric_limits<double>::infinity();
    }
  };

  std::vector<double> radii = family.radii;
  std::vector<double> shapes = tent ? std::vector<double>{0.0} : family.shapes;
  std::sort(radii.begin(), radii.end());
  std::sort(shapes.begin(), shapes.end());
  double bestVal = std::numeric_limits<double>::infinity();
  std::size_t bi = 0, bj = 0;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (std::size_t j = 0; j < shapes.size(); ++j) {
      const double v = eval(radii[i], shapes[j]);
      if (v < bestVal) {
        bestVal = v;
        bi = i;
        bj = j;
      }
    }
  }
  if (!std::isfinite(bestVal)) throw ConvergenceError("budget exhausted without a finite quotient");

  // Golden section on the continuous parameter between grid neighbours.
  const std::vector<double>& axis = tent ? radii : shapes;
  const std::size_t k = tent ? bi : bj;
  if (axis.size() > 1 && res.evaluations + 2 <= budget) {
    double lo = axis[k > 0 ? k - 1 : k];
    double hi = axis[k + 1 < axis.size() ? k + 1 : k];
    auto at = [&](double x) { return tent ? eval(x, 0.0) : eval(radii[bi], x); };
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - g * (hi - lo), x2 = lo + g * (hi - lo);
    double f1 = at(x1), f2 = at(x2);
    while (res.evaluations < budget) {
      if (f1 < f2) {
        hi = x2;
        x2 = x1;
        f2 = f1;
        x1 = hi - g * (hi - lo);
        f1 = at(x1);
      } else {
        lo = x1;
        x1 = x2;
        f1 = f2;
        x2 = lo + g * (hi - lo);
        f2 = at(x2);
      }
    }
  }
  res.best = *std::min_element(res.trials.begin(), res.trials.end(), [](const TrialRecord& a, const TrialRecord& b) {
    return a.estimate.quotient.value < b.estimate.quotient.value;
  });
  return res;
}

CheegerEstimate cheegerQuotient(const ConvexBody& body, const Vec& center, double radius, double epsilon,
                                const QuotientOptions& options) {
  if (!(radius > 0.0)) throw InvalidArgument("radius must be positive", "radius");
  if (!(epsilon > 0.0)) throw InvalidArgument("epsilon must be positive", "epsilon");
  IntegrationOptions opt;
  opt.weight = Weight::HilbertDensity;
  opt.samples = options.samples;
  opt.densityResolution = options.densityResolution;
  opt.maxFinsler = options.maxFinsler;
  auto one = [](const Vec&, double, double* out) { out[0] = 1.0; };
  auto measure = [&](double lo, double hi, std::uint64_t stream) {
    opt.seed = substreamSeed(options.seed, stream);
    return integrateMany(body, Proposal::polar(center, hi, lo), 1, one, opt).values[0];
  };

  CheegerEstimate out;
  out.center = center;
  out.radius = radius;
  out.epsilon = epsilon;
  out.volume = measure(0.0, radius, 0);
  const MCEstimate coarse = measure(radius, radius + epsilon, 1);
  const MCEstimate fine = measure(radius, radius + 0.5 * epsilon, 2);
  out.boundaryCoarse = coarse;
  out.boundaryCoarse.value /= epsilon;
  out.boundaryCoarse.stdError /= epsilon;
  out.boundaryFine = fine;
  out.boundaryFine.value /= 0.5 * epsilon;
  out.boundaryFine.stdError /= 0.5 * epsilon;
  out.boundary = out.boundaryFine;
  out.boundary.value = 2.0 * out.boundaryFine.value - out.boundaryCoarse.value;
  out.boundary.stdError = std::hypot(2.0 * out.boundaryFine.stdError, out.boundaryCoarse.stdError);
  if (!(out.boundary.stdError <= 0.25 * std::abs(out.boundary.value)))
    throw SupportError("epsilon too small for the sample budget");
  out.quotient = out.boundary;
  out.quotient.value = out.boundary.value / out.volume.value;
  out.quotient.stdError = std::abs(out.quotient.value) * std::hypot(out.boundary.stdError / out.boundary.value,
                                                                    out.volume.stdError / out.volume.value);
  return out;
}

ConvexBody cylinderBody() {
  return ConvexBody::product({ConvexBody::ball(2, 1.0), ConvexBody::box(Vec::Constant(1, -1.0), Vec::Constant(1, 1.0))});
}

double cylinderAlpha(double t) { return (1.0 + t) * (1.0 - t); }

std::vector<Vec> defaultCylinderPoints() {
  std::vector<Vec> qs(5, Vec(2));
  qs[0] << 0.0, 0.0;
  qs[1] << 0.7, 0.0;
  qs[2] << 0.0, 0.5;
  qs[3] << -0.3, 0.4;
  qs[4] << 0.6, -0.6;
  return qs;
}

double fact1Check(const Vec& q, double t) {
  requireDim(q, 2, "q");
  if (!(std::abs(t) < 1.0)) throw InvalidArgument("t must lie in (-1, 1)", "t");
  Vec p(3), ez = Vec::Unit(3, 2);
  p << q, t;
  return std::abs(finslerNorm(cylinderBody(), p, ez) * cylinderAlpha(t) - 1.0);
}

Fact2Result fact2Check(double l1, double l2, const std::vector<double>& angles) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) throw InvalidArgument("slab half-heights must be positive", "l");
  const ConvexBody slab =
      ConvexBody::product({ConvexBody::ball(2, 10.0), ConvexBody::box(Vec::Constant(1, -l2), Vec::Constant(1, l1))});
  Fact2Result out;
  out.l1 = l1;
  out.l2 = l2;
  out.expected = 2.0 * l1 * l2 / (l1 + l2);
  out.angles = angles;
  const Vec origin = Vec::Zero(3);
  for (double th : angles) {
    if (!(std::abs(th) <= 0.2)) throw InvalidArgument("angle leaves the flat cap region (|theta| <= 0.2)", "angle");
    Vec v(3);
    v << std::sin(th), 0.0, std::cos(th);
    const double z = v[2] / finslerNorm(slab, origin, v);
    out.heights.push_back(z);
    out.maxDefect = std::max(out.maxDefect, std::abs(z - out.expected));
  }
  return out;
}

bool CylinderReport::pass() const {
  if (!withinBounds || !(fact1MaxDefect < 1e-9)) return false;
  for (const auto& f : fact2)
    if (!(f.maxDefect < 1e-6)) return false;
  return true;
}

CylinderReport cylinderSandwich(const std::vector<double>& tGrid, const std::vector<Vec>& points, long long samples,
                                std::uint64_t seed, double tolerance) {
  if (tGrid.empty()) throw InvalidArgument("t-grid is empty", "tgrid");
  if (points.empty()) throw InvalidArgument("no base points", "q");
  for (double t : tGrid)
    if (!(std::abs(t) < 1.0)) throw InvalidArgument("t values must lie in (-1, 1)", "tgrid");
  for (const Vec& q : points) {
    requireDim(q, 2, "q");
    if (!(q.norm() < 1.0)) throw InvalidArgument("base points must lie in the open unit disk", "q");
  }
  const ConvexBody cyl = cylinderBody();
  const ConvexBody disk = ConvexBody::ball(2, 1.0);

  CylinderReport rep;
  rep.tGrid = tGrid;
  rep.points = points;
  rep.lower = bounds::kCylinderLower;
  rep.upper = bounds::kCylinderUpper;
  rep.tolerance = tolerance;
  rep.spectralBound = bounds::kCylinderSpectral;
  rep.minRatio = std::numeric_limits<double>::infinity();
  rep.maxRatio = -std::numeric_limits<double>::infinity();
  rep.withinBounds = true;
  rep.lowerHoldsWithoutAlpha = true;
  std::uint64_t index = 0;
  for (double t : tGrid) {
    for (const Vec& q : points) {
      CylinderSample s;
      s.t = t;
      s.q = q;
      s.alpha = cylinderAlpha(t);
      Vec p(3);
      p << q, t;
      s.cylinderVolume = tubVolume(cyl, p, defaultResolution(3), samples, substreamSeed(seed, index++));
      s.diskVolume = tubVolume(disk, q, defaultResolution(2)).value;
      s.ratio = s.cylinderVolume.value / (s.alpha * s.diskVolume);
      s.ratioStdError = s.cylinderVolume.stdError / (s.alpha * s.diskVolume);
      s.ratioWithoutAlpha = s.cylinderVolume.value / s.diskVolume;
      s.withinBounds = s.ratio >= rep.lower - tolerance && s.ratio <= rep.upper + tolerance;
      rep.withinBounds = rep.withinBounds && s.withinBounds;
      rep.lowerHoldsWithoutAlpha = rep.lowerHoldsWithoutAlpha && s.ratioWithoutAlpha >= rep.lower - tolerance;
      rep.minRatio = std::min(rep.minRatio, s.ratio);
      rep.maxRatio = std::max(rep.maxRatio, s.ratio);
      rep.fact1MaxDefect = std::max(rep.fact1MaxDefect, fact1Check(q, t));
      rep.samples.push_back(std::move(s));
    }
  }
  const std::vector<double> angles{0.0, 0.05, 0.1, 0.15, 0.2};
  rep.fact2.push_back(fact2Check(1.0, 1.0, angles));
  rep.fact2.push_back(fact2Check(1.0, 3.0, angles));
  return rep;
}

}  // namespace hilbert
