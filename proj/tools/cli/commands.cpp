#include <cmath>
#include <cstdio>
#include <sstream>

#include "cli.hpp"
#include "hilbert/body_io.hpp"
#include "hilbert/convergence.hpp"
#include "hilbert/hilbert_metric.hpp"
#include "hilbert/hyperbolicity.hpp"
#include "hilbert/john.hpp"
#include "hilbert/local_geometry.hpp"
#include "hilbert/measure.hpp"
#include "hilbert/spectrum.hpp"

namespace hilbert::cli {

namespace {

std::vector<double> parseNumbers(const std::string& text, const char* field) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InvalidArgument("'" + item + "' is not a number", field);
    }
  }
  if (out.empty()) throw InvalidArgument("empty list", field);
  return out;
}

Vec parseVec(const std::string& text, const char* field, int dim) {
  const std::vector<double> xs = parseNumbers(text, field);
  Vec v = Eigen::Map<const Vec>(xs.data(), static_cast<Eigen::Index>(xs.size()));
  requireDim(v, dim, field);
  return v;
}

std::vector<int> parseInts(const std::string& text, const char* field) {
  std::vector<int> out;
  for (double x : parseNumbers(text, field)) {
    if (x != std::floor(x)) throw InvalidArgument("expected integers", field);
    out.push_back(static_cast<int>(x));
  }
  return out;
}

// "a:b:k" -> k equally spaced values from a to b.
std::vector<double> parseGrid(const std::string& text, const char* field) {
  double a = 0, b = 0;
  int k = 0;
  char tail = 0;
  if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &a, &b, &k, &tail) != 3 || k < 1)
    throw InvalidArgument("expected start:stop:count", field);
  std::vector<double> out;
  for (int i = 0; i < k; ++i) out.push_back(k == 1 ? a : a + (b - a) * i / (k - 1));
  return out;
}

ConvexBody requireBody(const Config& c) {
  if (c.body.empty()) throw InvalidArgument("a body file is required", "body");
  return loadBody(c.body);
}

Vec pointOr(const std::string& text, const char* field, const ConvexBody& body) {
  return text.empty() ? Vec(body.interiorPoint()) : parseVec(text, field, body.dim());
}

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f\n", x);
  return buf;
}

std::string format(const Config& c, const char* fallback) { return c.format.empty() ? fallback : c.format; }

void requireFormat(const std::string& f, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (f == a) return;
  throw InvalidArgument("unsupported format '" + f + "' for this command", "format");
}

std::vector<Vec> outline(const ConvexBody& body, int count = 256) {
  const Vec c = body.interiorPoint();
  std::vector<Vec> pts;
  for (const Vec& u : circleDirections(count).dirs) pts.push_back(c + body.chord(c, u).tPlus * u);
  return pts;
}

Svg canvas(const ConvexBody& body) {
  const BoundingBox& b = body.boundingBox();
  const Vec pad = Vec::Constant(2, 0.05 * b.diagonal());
  return Svg(b.lo - pad, b.hi + pad);
}

void requirePlanarSvg(const Config& c, const ConvexBody& body) {
  if (!c.svg.empty() && body.dim() != 2) throw InvalidArgument("SVG output needs a 2-D body", "svg");
}

Report makeReport(const Config& c, const Json& echo) {
  Report r;
  r.command = c.command;
  r.config = echo;
  return r;
}

Outcome finish(const Report& r, const std::string& fmt, const std::string& other = {}) {
  Outcome o;
  o.pass = r.pass;
  o.text = fmt == "json" ? r.json() : other;
  return o;
}

Outcome distanceCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  const Vec p = parseVec(c.p, "p", body.dim()), q = parseVec(c.q, "q", body.dim());
  const double d = hilbertDistance(body, p, q);
  const std::string fmt = format(c, "text");
  requireFormat(fmt, {"text", "json"});
  Report r = makeReport(c, echo);
  r.results["distance"] = num(d);
  return finish(r, fmt, fixed6(d));
}

Outcome normCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  const Vec p = parseVec(c.p, "p", body.dim());
  const std::string fmt = format(c, "text");
  requireFormat(fmt, {"text", "json"});
  Report r = makeReport(c, echo);
  std::string text;
  if (!c.v.empty()) {
    const double f = finslerNorm(body, p, parseVec(c.v, "v", body.dim()));
    r.results["finsler_norm"] = num(f);
    text += fixed6(f);
  }
  if (!c.covector.empty()) {
    const double f = dualNorm(body, p, parseVec(c.covector, "covector", body.dim()), c.dualResolution);
    r.results["dual_norm"] = num(f);
    text += fixed6(f);
  }
  if (text.empty()) throw InvalidArgument("give a vector (--v) or a covector (--covector)", "v");
  return finish(r, fmt, text);
}

Outcome densityCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  const Vec p = parseVec(c.p, "p", body.dim());
  const DensityValue h = hilbertDensity(body, p, c.resolution, c.samples, c.seed);
  const std::string fmt = format(c, "text");
  requireFormat(fmt, {"text", "json"});
  Report r = makeReport(c, echo);
  r.results["density"] = num(h.h);
  r.results["tangent_ball_volume"] = num(h.tubVolume);
  r.results["stderr"] = num(h.stdError);
  return finish(r, fmt, fixed6(h.h));
}

Outcome ballCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  requirePlanarSvg(c, body);
  const Vec p = pointOr(c.p, "p", body);
  const RadialBall b = metricBall(body, p, c.radius, c.resolution);
  const std::string fmt = format(c, "json");
  requireFormat(fmt, {"json", "csv"});
  Report r = makeReport(c, echo);
  Json pts = Json::array();
  std::vector<std::string> header;
  for (int i = 0; i < body.dim(); ++i) header.push_back("x" + std::to_string(i));
  Csv csv(header);
  std::vector<Vec> boundary;
  for (std::size_t k = 0; k < b.size(); ++k) {
    boundary.push_back(b.boundaryPoint(k));
    pts.push_back(vec(boundary.back()));
    std::vector<std::string> row;
    for (int i = 0; i < body.dim(); ++i) row.push_back(Csv::cell(boundary.back()[i]));
    csv.row(row);
  }
  r.results["center"] = vec(p);
  r.results["radius"] = num(c.radius);
  r.results["boundary"] = pts;
  Outcome o = finish(r, fmt, csv.str());
  if (!c.svg.empty()) {
    Svg svg = canvas(body);
    svg.polygon(outline(body), "black");
    svg.polygon(boundary, "blue");
    svg.point(p, "red");
    o.svg = svg.str();
  }
  return o;
}

Outcome johnCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  requirePlanarSvg(c, body);
  const Ellipsoid E = johnEllipsoid(body);
  const SandwichReport s = sandwichCheck(body, E);
  const std::string fmt = format(c, "json");
  requireFormat(fmt, {"json"});
  Report r = makeReport(c, echo);
  r.results["center"] = vec(E.center);
  r.results["shape"] = mat(E.shape);
  r.results["volume"] = num(E.volume());
  r.results["contained"] = s.contained;
  r.results["cover_factor"] = num(s.coverFactor);
  r.results["symmetric_body"] = s.symmetricBody;
  r.results["exceeds_symmetric_factor"] = s.exceedsSymmetricFactor;
  r.witnesses["cover"] = vec(s.witness);
  r.bounds["cover_factor"] = num(s.bound);
  r.pass = s.contained && s.withinBound;
  Outcome o = finish(r, fmt);
  if (!c.svg.empty()) {
    Svg svg = canvas(body);
    svg.polygon(outline(body), "black");
    std::vector<Vec> ell;
    const Mat B = E.map();
    for (const Vec& u : circleDirections(256).dirs) ell.push_back(E.center + B * u);
    svg.polygon(ell, "green");
    o.svg = svg.str();
  }
  return o;
}

Outcome theorem12Cmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  requirePlanarSvg(c, body);
  const Vec p = pointOr(c.p, "p", body);
  ProbeOptions opt;
  opt.boundaryDirs = c.resolution;
  const Theorem12Report t = theorem12(body, p, opt, c.body);
  const std::string fmt = format(c, "json");
  requireFormat(fmt, {"json"});
  const int n = t.n;
  Report r = makeReport(c, echo);
  r.results = {{"point", vec(t.point)},
               {"radius", num(t.radius)},
               {"dim", n},
               {"map", mat(t.map)},
               {"shift", vec(t.shift)},
               {"min_norm", num(t.minNorm)},
               {"max_norm", num(t.maxNorm)},
               {"d0", num(t.gap.d0)},
               {"d0_lower", num(t.gap.d0Lower)},
               {"center_max_min_exit", num(t.chords.centerMaxMinExit)},
               {"max_min_exit", num(t.chords.maxMinExit)},
               {"lipschitz_upper", num(t.lipschitz.lipUpper)},
               {"lipschitz_lower", num(t.lipschitz.lipLower)},
               {"lipschitz_constant", num(t.lipschitz.C)},
               {"diameter", num(t.diameter)},
               {"samples", {{"boundary", t.boundarySamples}, {"interior", t.interiorSamples}, {"probe_directions", t.probeDirections}}},
               {"checks",
                {{"gap", t.gapOk},
                 {"center_exit", t.centerOk},
                 {"chord_exit", t.chordOk},
                 {"lipschitz_upper", t.upperOk},
                 {"lipschitz_lower", t.lowerOk},
                 {"diameter", t.diameterOk},
                 {"norm", t.normOk},
                 {"symmetric_norm", t.symmetricNormOk}}}};
  r.witnesses = {{"gap_ball_point", vec(t.gap.ballWitness)},
                 {"gap_body_point", vec(t.gap.bodyWitness)},
                 {"chord_point", vec(t.chords.witnessPoint)},
                 {"chord_direction", vec(t.chords.witnessDirection)},
                 {"center_direction", vec(t.chords.centerWitnessDirection)},
                 {"upper_point", vec(t.lipschitz.upperWitnessPoint)},
                 {"upper_direction", vec(t.lipschitz.upperWitnessDirection)},
                 {"lower_point", vec(t.lipschitz.lowerWitnessPoint)},
                 {"lower_direction", vec(t.lipschitz.lowerWitnessDirection)}};
  r.bounds = {{"boundary_gap", num(bounds::boundaryGap())},
              {"center_exit", num(bounds::centerExit(n))},
              {"chord_exit", num(bounds::chordExit(n))},
              {"lipschitz_upper", num(bounds::lipschitzUpper())},
              {"lipschitz_lower", num(bounds::lipschitzLower(n))},
              {"norm_upper", n}};
  r.pass = t.pass();
  Outcome o = finish(r, fmt);
  if (!c.svg.empty()) {
    const RadialBall b = metricBall(body, p, 1.0, c.resolution);
    std::vector<Vec> boundary;
    for (std::size_t k = 0; k < b.size(); ++k) boundary.push_back(b.boundaryPoint(k));
    Svg svg = canvas(body);
    svg.polygon(outline(body), "black");
    svg.polygon(boundary, "blue");
    svg.point(p, "red");
    o.svg = svg.str();
  }
  return o;
}

Outcome cylinderCmd(const Config& c, const Json& echo) {
  const std::vector<double> tGrid = parseGrid(c.tgrid, "tgrid");
  std::vector<Vec> qs = defaultCylinderPoints();
  if (!c.points.empty()) {
    qs.clear();
    std::stringstream ss(c.points);
    std::string item;
    while (std::getline(ss, item, ';')) qs.push_back(parseVec(item, "points", 2));
  }
  if (!c.svg.empty()) throw InvalidArgument("SVG output needs a 2-D body", "svg");
  const long long samples = c.samples > 0 ? c.samples : 100000;
  const CylinderReport rep = cylinderSandwich(tGrid, qs, samples, c.seed, c.tolerance);
  const std::string fmt = format(c, "csv");
  requireFormat(fmt, {"json", "csv"});

  Csv csv({"t", "q0", "q1", "alpha", "cylinder_volume", "cylinder_stderr", "disk_volume", "ratio", "ratio_stderr",
           "ratio_without_alpha", "within"});
  Json rows = Json::array();
  for (const CylinderSample& s : rep.samples) {
    csv.row({Csv::cell(s.t), Csv::cell(s.q[0]), Csv::cell(s.q[1]), Csv::cell(s.alpha), Csv::cell(s.cylinderVolume.value),
             Csv::cell(s.cylinderVolume.stdError), Csv::cell(s.diskVolume), Csv::cell(s.ratio), Csv::cell(s.ratioStdError),
             Csv::cell(s.ratioWithoutAlpha), Csv::cell(s.withinBounds)});
    rows.push_back({{"t", num(s.t)},
                    {"q", vec(s.q)},
                    {"alpha", num(s.alpha)},
                    {"cylinder_volume", estimate(s.cylinderVolume)},
                    {"disk_volume", num(s.diskVolume)},
                    {"ratio", num(s.ratio)},
                    {"ratio_stderr", num(s.ratioStdError)},
                    {"ratio_without_alpha", num(s.ratioWithoutAlpha)},
                    {"within", s.withinBounds}});
  }
  Json fact2 = Json::array();
  for (const Fact2Result& f : rep.fact2)
    fact2.push_back({{"l1", num(f.l1)}, {"l2", num(f.l2)}, {"expected", num(f.expected)}, {"heights", vec(Eigen::Map<const Vec>(f.heights.data(), static_cast<Eigen::Index>(f.heights.size())))}, {"max_defect", num(f.maxDefect)}});
  Report r = makeReport(c, echo);
  r.results = {{"samples", rows},
               {"min_ratio", num(rep.minRatio)},
               {"max_ratio", num(rep.maxRatio)},
               {"within_bounds", rep.withinBounds},
               {"lower_holds_without_alpha", rep.lowerHoldsWithoutAlpha},
               {"fact1_max_defect", num(rep.fact1MaxDefect)},
               {"fact2", fact2}};
  r.bounds = {{"lower", num(rep.lower)},
              {"upper", num(rep.upper)},
              {"tolerance", num(rep.tolerance)},
              {"spectral_lower_bound", num(rep.spectralBound)}};
  r.pass = rep.pass();
  return finish(r, fmt, csv.str());
}

Json quotientJson(const QuotientEstimate& q) {
  return {{"numerator", estimate(q.numerator)},
          {"denominator", estimate(q.denominator)},
          {"quotient", estimate(q.quotient)}};
}

Outcome rayleighCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  const Vec center = pointOr(c.center, "center", body);
  QuotientOptions opt;
  opt.samples = c.samples > 0 ? c.samples : 20000;
  opt.seed = c.seed;
  opt.dualResolution = c.dualResolution;
  opt.densityResolution = c.resolution;
  opt.maxFinsler = c.maxFinsler;
  const Profile profile = profileFromString(c.profile);
  const std::string fmt = format(c, "json");
  requireFormat(fmt, {"json", "csv"});
  Report r = makeReport(c, echo);
  Csv csv({"profile", "R", "s", "quotient", "stderr"});
  QuotientEstimate best;
  if (c.minimize) {
    if (c.sobolev) throw InvalidArgument("minimization is for Rayleigh quotients", "sobolev");
    TrialFamily fam{profile, center, parseNumbers(c.radii, "radii"), parseNumbers(c.shapes, "shapes")};
    const MinimizeResult m = minimizeRayleigh(body, fam, c.budget, opt);
    Json trials = Json::array();
    for (const TrialRecord& t : m.trials) {
      trials.push_back({{"R", num(t.R)}, {"s", num(t.s)}, {"quotient", estimate(t.estimate.quotient)}});
      csv.row({toString(profile), Csv::cell(t.R), Csv::cell(t.s), Csv::cell(t.estimate.quotient.value),
               Csv::cell(t.estimate.quotient.stdError)});
    }
    r.results = {{"trials", trials},
                 {"best", {{"R", num(m.best.R)}, {"s", num(m.best.s)}, {"estimate", quotientJson(m.best.estimate)}}},
                 {"evaluations", m.evaluations}};
    best = m.best.estimate;
  } else {
    const TrialFunction f = profile == Profile::Tent ? TrialFunction::tent(body, center, c.R)
                                                     : TrialFunction::exponential(body, center, c.s, c.R);
    best = c.sobolev ? sobolevQuotient(f, opt) : rayleighQuotient(f, opt);
    r.results = quotientJson(best);
    csv.row({toString(profile), Csv::cell(c.R), Csv::cell(profile == Profile::Tent ? 0.0 : c.s),
             Csv::cell(best.quotient.value), Csv::cell(best.quotient.stdError)});
  }
  r.results["kind"] = c.sobolev ? "sobolev" : "rayleigh";
  r.results["note"] = "quotients are upper bounds on the infimum; no lower bound is claimed";
  if (c.bound > 0.0) {
    r.bounds["lower_bound"] = num(c.bound);
    r.pass = best.quotient.value + 3.0 * best.quotient.stdError >= c.bound;
  }
  return finish(r, fmt, csv.str());
}

Outcome cheegerCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  const Vec center = pointOr(c.center, "center", body);
  QuotientOptions opt;
  opt.samples = c.samples > 0 ? c.samples : 20000;
  opt.seed = c.seed;
  opt.densityResolution = c.resolution;
  opt.maxFinsler = c.maxFinsler;
  const CheegerEstimate e = cheegerQuotient(body, center, c.radius, c.epsilon, opt);
  const std::string fmt = format(c, "json");
  requireFormat(fmt, {"json"});
  Report r = makeReport(c, echo);
  r.results = {{"center", vec(e.center)},
               {"radius", num(e.radius)},
               {"epsilon", num(e.epsilon)},
               {"volume", estimate(e.volume)},
               {"boundary_eps", estimate(e.boundaryCoarse)},
               {"boundary_half_eps", estimate(e.boundaryFine)},
               {"boundary_extrapolated", estimate(e.boundary)},
               {"quotient", estimate(e.quotient)},
               {"note", "metric-ball quotient; an upper bound on the Cheeger constant"}};
  return finish(r, fmt);
}

Outcome convergeCmd(const Config& c, const Json& echo) {
  const ConvexBody limit = requireBody(c);
  const int n = limit.dim();
  const Vec center = limit.interiorPoint();
  auto dilate = [&](double f) { return limit.affineImage(f * Mat::Identity(n, n), (1.0 - f) * center); };
  const std::vector<int> ks = parseInts(c.ks, "ks");
  std::vector<ConvexBody> seq;
  std::vector<std::string> labels;
  for (int k : ks) {
    if (k < 1) throw InvalidArgument("sequence indices must be positive", "ks");
    labels.push_back(std::to_string(k));
  }
  if (c.sequence == "smoothed") {
    seq = smoothedSequence(limit, ks);
  } else if (c.sequence == "concentric") {
    for (int k : ks) seq.push_back(dilate(1.0 + 1.0 / k));
  } else {
    throw InvalidArgument("unknown sequence '" + c.sequence + "' (expected smoothed or concentric)", "sequence");
  }
  if (!(c.regionScale > 0.0 && c.regionScale < 1.0)) throw InvalidArgument("must lie in (0, 1)", "region-scale");
  const ConvergenceReport rep =
      densityConvergence(seq, labels, limit, dilate(c.regionScale), {c.gridPoints, c.gridDirections}, c.resolution);
  const std::string fmt = format(c, "csv");
  requireFormat(fmt, {"json", "csv"});
  Csv csv({"k", "sup_deficit", "inf_ratio", "sup_ratio", "density_deviation", "density_sandwich", "nested"});
  Json steps = Json::array();
  bool ok = rep.ratioMonotone && rep.deficitMonotone;
  for (const ConvergenceStep& s : rep.steps) {
    csv.row({s.label, Csv::cell(s.field.supDeficit), Csv::cell(s.field.infRatio), Csv::cell(s.field.supRatio),
             Csv::cell(s.densityDeviation), Csv::cell(s.densitySandwich), Csv::cell(s.field.nested)});
    steps.push_back({{"k", s.label},
                     {"sup_deficit", num(s.field.supDeficit)},
                     {"inf_ratio", num(s.field.infRatio)},
                     {"sup_ratio", num(s.field.supRatio)},
                     {"density_deviation", num(s.densityDeviation)},
                     {"density_sandwich", s.densitySandwich},
                     {"nested", s.field.nested}});
    ok = ok && s.densitySandwich && s.field.nested;
  }
  Report r = makeReport(c, echo);
  r.results = {{"steps", steps},
               {"ratio_monotone", rep.ratioMonotone},
               {"deficit_monotone", rep.deficitMonotone},
               {"deviation_monotone", rep.deviationMonotone},
               {"final_deviation", num(rep.finalDeviation)}};
  r.bounds = {{"ratio_upper", 1.0}};
  r.pass = ok;
  return finish(r, fmt, csv.str());
}

Outcome deltaCmd(const Config& c, const Json& echo) {
  const ConvexBody body = requireBody(c);
  const Vec center = pointOr(c.center, "center", body);
  const std::vector<DeltaEstimate> est = deltaProbe(body, center, parseNumbers(c.scales, "scales"), c.quadruples, c.seed);
  const std::string fmt = format(c, "csv");
  requireFormat(fmt, {"json", "csv"});
  Csv csv({"R", "quadruples", "max_defect", "seed"});
  Json rows = Json::array(), wit = Json::array();
  for (const DeltaEstimate& e : est) {
    csv.row({Csv::cell(e.R), Csv::cell(e.quadruples), Csv::cell(e.maxDefect), std::to_string(e.seed)});
    rows.push_back({{"R", num(e.R)}, {"quadruples", e.quadruples}, {"max_defect", num(e.maxDefect)}});
    Json q = Json::array();
    for (const Vec& x : e.witness) q.push_back(vec(x));
    wit.push_back(q);
  }
  Report r = makeReport(c, echo);
  r.results = {{"scales", rows}, {"note", "lower-bound evidence for delta; no numeric delta is claimed"}};
  r.witnesses = {{"quadruples", wit}};
  return finish(r, fmt, csv.str());
}

}  // namespace

Outcome runCommand(const Config& c, const Json& echo) {
  if (c.command == "distance") return distanceCmd(c, echo);
  if (c.command == "norm") return normCmd(c, echo);
  if (c.command == "density") return densityCmd(c, echo);
  if (c.command == "ball") return ballCmd(c, echo);
  if (c.command == "john") return johnCmd(c, echo);
  if (c.command == "theorem12") return theorem12Cmd(c, echo);
  if (c.command == "cylinder") return cylinderCmd(c, echo);
  if (c.command == "rayleigh") return rayleighCmd(c, echo);
  if (c.command == "cheeger") return cheegerCmd(c, echo);
  if (c.command == "converge") return convergeCmd(c, echo);
  if (c.command == "delta") return deltaCmd(c, echo);
  throw InvalidArgument("unknown command '" + c.command + "'", "command");
}

}  // namespace hilbert::cli
