// Acceptance runner: one PASS/FAIL line per criterion.
//   acceptance [--criterion N] [--cli path/to/hilbert-lab]

#include <sys/wait.h>

#include <array>
#include <cstdarg>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "hilbert/convergence.hpp"
#include "hilbert/hilbert_metric.hpp"
#include "hilbert/hyperbolicity.hpp"
#include "hilbert/john.hpp"
#include "hilbert/local_geometry.hpp"
#include "hilbert/measure.hpp"
#include "hilbert/random.hpp"
#include "hilbert/spectrum.hpp"
#include "hilbert/suite.hpp"
#include "oracles.hpp"

using namespace hilbert;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[1024];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

std::string cliPath;

Verdict kleinOracle() {
  double distErr = 0.0, densErr = 0.0;
  for (int n : {2, 3}) {
    const ConvexBody ball = ConvexBody::ball(n, 1.0);
    Rng rng(1000 + n);
    for (int i = 0; i < 1000; ++i) {
      const double r = 0.99 * std::pow(rng.uniform(), 1.0 / n);
      const Vec p = r * rng.direction(n);
      distErr = std::max(distErr, std::abs(hilbertDistance(ball, Vec::Zero(n), p) - oracle::kleinDistanceFromCenter(r)));
    }
  }
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  for (int i = 0; i <= 19; ++i) {
    const double r = 0.05 * i, theta = 0.37 * i;
    Vec p(2);
    p << r * std::cos(theta), r * std::sin(theta);
    const double h = hilbertDensity(disk, p).h;
    densErr = std::max(densErr, std::abs(h / oracle::kleinDensity(r, 2) - 1.0));
  }
  return {distErr < 1e-10 && densErr < 1e-3,
          fmt("max |d - atanh r| = %.2e (< 1e-10) on 2x1000 points; max density rel err = %.2e (< 1e-3) for r <= 0.95",
              distErr, densErr)};
}

Verdict metricAxioms() {
  double sym = 0.0, tri = 0.0, add = 0.0;
  int triples = 0;
  for (const SuiteBody& s : regressionSuite()) {
    const int n = s.body.dim();
    Rng rng(substreamSeed(2024, static_cast<std::uint64_t>(triples)));
    for (int i = 0; i < 125; ++i, ++triples) {
      std::array<Vec, 3> x;
      for (Vec& y : x) y = pointAtDistance(s.body, s.center, rng.direction(n), rng.uniform(0.0, 4.0));
      const double pq = hilbertDistance(s.body, x[0], x[1]), qp = hilbertDistance(s.body, x[1], x[0]);
      const double qr = hilbertDistance(s.body, x[1], x[2]), pr = hilbertDistance(s.body, x[0], x[2]);
      sym = std::max(sym, std::abs(pq - qp));
      tri = std::max(tri, pr - pq - qr);
      const Vec mid = x[0] + rng.uniform() * (x[2] - x[0]);
      add = std::max(add, geodesicAdditivityCheck(s.body, x[0], mid, x[2]));
    }
  }
  return {sym < 1e-9 && tri < 1e-9 && add < 1e-9,
          fmt("%d triples over 8 bodies: symmetry %.2e, triangle excess %.2e, collinear defect %.2e (all < 1e-9)", triples,
              sym, std::max(tri, 0.0), add)};
}

Verdict theorem12Constants() {
  bool ok = true;
  int points = 0;
  double d0 = 1e300, center = 0.0, chord = 0.0, up = 0.0, low = 1e300;
  std::string failures;
  for (const SuiteBody& s : regressionSuite()) {
    for (const Vec& p : s.basePoints) {
      const Theorem12Report t = theorem12(s.body, p, {}, s.id);
      ++points;
      d0 = std::min(d0, t.gap.d0Lower);
      center = std::max(center, t.chords.centerMaxMinExit);
      chord = std::max(chord, t.chords.maxMinExit / bounds::chordExit(t.n));
      up = std::max(up, t.lipschitz.lipUpper);
      low = std::min(low, t.lipschitz.lipLower / bounds::lipschitzLower(t.n));
      if (!t.pass()) {
        ok = false;
        failures += " " + s.id + "@" + std::to_string(points);
      }
    }
    std::printf("  theorem12 %-18s done\n", s.id.c_str());
    std::fflush(stdout);
  }
  std::string d = fmt("%d points: min d0 %.5f (>= %.7f), max center exit %.3f (<= 3 sqrt n), max chord exit / bound "
                      "%.4f, max Lipschitz %.3f (<= %.3f), min lower / bound %.1f",
                      points, d0, bounds::boundaryGap(), center, chord, up, bounds::lipschitzUpper(), low);
  if (!failures.empty()) d += "; failing:" + failures;
  return {ok && points >= 40, d};
}

Verdict johnSandwich() {
  bool ok = true;
  std::string d;
  for (const SuiteBody& s : regressionSuite()) {
    const SandwichReport r = sandwichCheck(s.body, johnEllipsoid(s.body));
    const int n = s.body.dim();
    const double bound = r.symmetricBody ? std::sqrt(double(n)) : double(n);
    bool good = r.contained && r.coverFactor <= bound + 1e-3;
    if (s.id == "square") good = good && std::abs(r.coverFactor - std::numbers::sqrt2) <= 1e-4;
    if (s.id == "triangle") good = good && std::abs(r.coverFactor - 2.0) <= 1e-3;
    ok = ok && good;
    d += fmt("%s %.5f%s ", s.id.c_str(), r.coverFactor, good ? "" : "(!)");
  }
  return {ok, "cover factors: " + d + "(square sqrt2 +-1e-4, triangle 2 +-1e-3)"};
}

Verdict cylinder() {
  std::vector<double> grid;
  for (int i = 0; i < 7; ++i) grid.push_back(-0.9 + 0.3 * i);
  const CylinderReport r = cylinderSandwich(grid, defaultCylinderPoints(), 100000, 7);
  double f2 = 0.0;
  for (const Fact2Result& f : r.fact2) f2 = std::max(f2, f.maxDefect);
  return {r.pass() && r.samples.size() == 35,
          fmt("35 samples x 1e5: ratio in [%.4f, %.4f] vs [%.4f, %.2f]; fact1 defect %.1e (< 1e-9); fact2 defect %.1e "
              "(< 1e-6)",
              r.minRatio, r.maxRatio, 2.0 / 3.0 - 0.05, 8.05, r.fact1MaxDefect, f2)};
}

Verdict spectral() {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  TrialFamily fam{Profile::Exponential, Vec::Zero(2), {4.0, 8.0, 12.0, 15.0}, {0.25, 0.3, 0.35, 0.4}};
  QuotientOptions o;
  o.samples = 20000;
  o.seed = 42;
  o.maxFinsler = 1e14;
  const MinimizeResult m = minimizeRayleigh(disk, fam, 20, o);
  const double R = m.best.R, s = m.best.s;
  const double ref = oracle::radialRayleigh([&](double r) { return oracle::expTent(r, s, R); },
                                            [&](double r) { return oracle::expTentSlope(r, s, R); }, R);
  const MCEstimate& q = m.best.estimate.quotient;
  const bool window = q.value >= 0.24 && q.value <= 0.30;
  const bool agree = std::abs(q.value - ref) <= 3.0 * q.stdError;

  const SuiteBody cyl = suiteBody("cylinder");
  TrialFamily cfam{Profile::Exponential, cyl.center, {2.0, 4.0, 6.0}, {0.0, 0.5}};
  QuotientOptions co;
  co.samples = 8000;
  co.seed = 42;
  const MinimizeResult c = minimizeRayleigh(cyl.body, cfam, 6, co);
  double worst = 1e300;
  bool floor = true;
  for (const TrialRecord& t : c.trials) {
    const MCEstimate& e = t.estimate.quotient;
    worst = std::min(worst, e.value - (1.0 / 48.0 - 3.0 * e.stdError));
    floor = floor && e.value >= 1.0 / 48.0 - 3.0 * e.stdError;
  }
  return {window && agree && floor && !c.trials.empty(),
          fmt("disk min quotient %.5f +- %.1e at R=%g s=%.4f (window [0.24, 0.30]), oracle %.5f, |diff| = %.1f stderr; "
              "cylinder %zu trials, min margin over 1/48 - 3 stderr = %.3f",
              q.value, q.stdError, R, s, ref, std::abs(q.value - ref) / q.stdError, c.trials.size(), worst)};
}

Verdict cheeger() {
  const ConvexBody disk = ConvexBody::ball(2, 1.0);
  bool ok = true;
  std::string d;
  for (double R : {1.0, 2.0, 5.0}) {
    const CheegerEstimate c = cheegerQuotient(disk, Vec::Zero(2), R, 0.1);
    const double ref = oracle::cheegerDisk(R), rel = std::abs(c.quotient.value / ref - 1.0);
    ok = ok && rel < 0.05;
    d += fmt("R=%g %.4f vs %.4f (%.2f%%) ", R, c.quotient.value, ref, 100.0 * rel);
  }
  return {ok, d + "(within 5%)"};
}

Verdict convergence() {
  const ConvexBody disk = ConvexBody::ball(2, 1.0), A = ConvexBody::ball(2, 0.5);
  double err = 0.0, prev = 1.0;
  bool monotone = true;
  std::string d = "concentric deficits";
  for (int k : {2, 4, 8, 16, 32}) {
    const double a = 1.0 + 1.0 / k;
    const NormRatioField f = normRatioField(ConvexBody::ball(2, a), disk, A);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.points.size(); ++i)
      for (std::size_t j = 0; j < f.directions.size(); ++j)
        worst = std::max(worst, 1.0 - oracle::diskFinsler(f.points[i], f.directions[j], a) /
                                          oracle::diskFinsler(f.points[i], f.directions[j], 1.0));
    err = std::max(err, std::abs(f.supDeficit - worst));
    monotone = monotone && f.supDeficit < prev;
    prev = f.supDeficit;
    d += fmt(" %.4f", f.supDeficit);
  }
  const ConvexBody cyl = suiteBody("cylinder").body;
  const ConvergenceReport r =
      densityConvergence(smoothedSequence(cyl, {4, 16, 64}), {"4", "16", "64"}, cyl, cyl.scaled(0.5));
  return {err < 1e-3 && monotone && r.ratioMonotone && r.finalDeviation < 0.1,
          d + fmt(" (oracle err %.1e, monotone %d); smoothed cylinder k=4,16,64: M monotone %d, density deviation "
                  "%.3f %.3f %.3f (final < 0.1)",
                  err, monotone, r.ratioMonotone, r.steps[0].densityDeviation, r.steps[1].densityDeviation,
                  r.finalDeviation)};
}

Verdict hyperbolicity() {
  const std::vector<double> scales{2.0, 4.0, 6.0};
  const SuiteBody disk = suiteBody("disk"), cyl = suiteBody("cylinder");
  const auto a = deltaProbe(disk.body, disk.center, scales, 10000, 42);
  const auto b = deltaProbe(cyl.body, cyl.center, scales, 10000, 42);
  return {a[2].maxDefect <= a[0].maxDefect + 1.0 && b[2].maxDefect >= b[0].maxDefect + 0.5,
          fmt("disk delta(2,4,6) = %.3f %.3f %.3f (growth <= 1.0); cylinder %.3f %.3f %.3f (growth >= 0.5)",
              a[0].maxDefect, a[1].maxDefect, a[2].maxDefect, b[0].maxDefect, b[1].maxDefect, b[2].maxDefect)};
}

std::string capture(const std::string& cmd, int& code) {
  std::string out;
  FILE* pipe = popen((cmd + " 2>&1").c_str(), "r");
  if (!pipe) {
    code = -1;
    return out;
  }
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Verdict reproducibility() {
  if (cliPath.empty()) return {false, "no --cli binary given"};
  const std::string data = HILBERT_DATA_DIR;
  const std::vector<std::string> commands{
      "distance --body " + data + "/disk.json --p 0,0 --q 0.761594,0",
      "norm --body " + data + "/triangle.json --p 0.1,0.2 --v 1,1 --covector 0,1",
      "density --body " + data + "/cylinder.json --p 0.2,0.1,0.3 --samples 20000",
      "ball --body " + data + "/triangle.json --radius 2",
      "john --body " + data + "/smoothed_square.json",
      "theorem12 --body " + data + "/square.json",
      "cylinder --tgrid -0.9:0.9:7 --samples 20000",
      "rayleigh --body " + data + "/disk.json --profile tent --R 4 --samples 4000",
      "rayleigh --body " + data + "/disk.json --minimize --radii 2,4 --shapes 0.3,0.5 --budget 5 --samples 2000",
      "cheeger --body " + data + "/disk.json --radius 2 --samples 4000",
      "converge --body " + data + "/square.json --ks 2,4,8",
      "delta --body " + data + "/cylinder.json --quadruples 2000",
  };
  int identical = 0;
  std::string bad;
  for (const std::string& c : commands) {
    for (const char* seed : {"7", "42"}) {
      const std::string cmd = cliPath + " " + c + " --seed " + seed;
      int c1 = 0, c2 = 0;
      const std::string a = capture(cmd, c1), b = capture(cmd, c2);
      if (a == b && c1 == 0 && c2 == 0 && !a.empty())
        ++identical;
      else
        bad += " [" + c.substr(0, c.find(' ')) + " seed " + seed + " exit " + std::to_string(c1) + "]";
    }
  }
  const int total = static_cast<int>(2 * commands.size());
  return {identical == total, fmt("%d/%d command runs byte-identical on rerun", identical, total) + bad};
}

struct Criterion {
  int id;
  const char* name;
  double limitSeconds;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc)
      only = std::atoi(argv[++i]);
    else if (!std::strcmp(argv[i], "--cli") && i + 1 < argc)
      cliPath = argv[++i];
    else {
      std::fprintf(stderr, "usage: acceptance [--criterion N] [--cli PATH]\n");
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {1, "Klein oracle suite", 10, kleinOracle},
      {2, "metric axioms", 60, metricAxioms},
      {3, "local geometry constants", 600, theorem12Constants},
      {4, "John sandwich", 60, johnSandwich},
      {5, "cylinder tangent-ball sandwich", 600, cylinder},
      {6, "spectral benchmarks", 600, spectral},
      {7, "Cheeger proxy", 300, cheeger},
      {8, "convergence", 600, convergence},
      {9, "hyperbolicity separation", 300, hyperbolicity},
      {10, "CLI reproducibility", 600, reproducibility},
  };
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only && c.id != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = v.pass && secs < c.limitSeconds;
    all = all && pass;
    std::printf("%s %d %s: %s [%.1f s, limit %.0f s]\n", pass ? "PASS" : "FAIL", c.id, c.name, v.detail.c_str(), secs,
                c.limitSeconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
