#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hilbert/convex_body.hpp"
#include "hilbert/measure.hpp"

namespace hilbert {

enum class Profile { Tent, Exponential };

const char* toString(Profile profile);
Profile profileFromString(const std::string& name);

/// Radial trial function f(x) = scale * phi(d(center, x)) supported in the
/// metric ball of radius R. Tent: phi = 1 - rho/R. Exponential: phi =
/// e^{-s rho} (1 - rho/R), i.e. the exponential with a tent cutoff.
class TrialFunction {
 public:
  static TrialFunction tent(const ConvexBody& body, const Vec& center, double R);
  static TrialFunction exponential(const ConvexBody& body, const Vec& center, double s, double R);

  TrialFunction scaled(double c) const;

  double phi(double rho) const;
  double phiDerivative(double rho) const;
  double value(const Vec& x) const;
  /// Differential of f at x (zero outside the support).
  Vec gradient(const Vec& x) const;

  const ConvexBody& body() const { return body_; }
  Profile profile() const { return profile_; }
  const Vec& center() const { return center_; }
  double R() const { return R_; }
  double s() const { return s_; }
  double scale() const { return scale_; }

 private:
  TrialFunction(const ConvexBody& body, Profile profile, const Vec& center, double R, double s);

  ConvexBody body_;
  Profile profile_;
  Vec center_;
  double R_;
  double s_;
  double scale_ = 1.0;
};

/// Largest relative deviation between gradient() and centered differences at
/// `points` seeded points of the support, skipping points within `kink` of
/// rho = 0 or rho = R.
double gradientCheck(const TrialFunction& f, int points, std::uint64_t seed, double step = 1e-6,
                     double kink = 1e-3);

struct QuotientOptions {
  int dualResolution = 64;
  long long samples = 20000;
  std::uint64_t seed = 1;
  int densityResolution = 0;
  double maxFinsler = 1e6;
};

struct QuotientEstimate {
  MCEstimate numerator;
  MCEstimate denominator;
  MCEstimate quotient;
  long long samples = 0;
  std::uint64_t seed = 0;
};

/// int |df|*^2 dmu / int f^2 dmu over the support, sampled in polar
/// coordinates around the trial center.
QuotientEstimate rayleighQuotient(const TrialFunction& f, const QuotientOptions& options = {});
/// int |df|* dmu / int |f| dmu.
QuotientEstimate sobolevQuotient(const TrialFunction& f, const QuotientOptions& options = {});

struct TrialFamily {
  Profile profile = Profile::Exponential;
  Vec center;
  std::vector<double> radii;
  std::vector<double> shapes;  // ignored for tents
};

struct TrialRecord {
  double R = 0.0;
  double s = 0.0;
  QuotientEstimate estimate;
};

struct MinimizeResult {
  TrialRecord best;
  std::vector<TrialRecord> trials;
  int evaluations = 0;
};

/// Grid over the family parameters, then golden-section refinement of the
/// continuous parameter (s for exponentials, R for tents) between the grid
/// neighbours of the best node. All evaluations share the sampling seed.
/// The best quotient is an upper bound on the bottom of the spectrum.
MinimizeResult minimizeRayleigh(const ConvexBody& body, const TrialFamily& family, int budget,
                                const QuotientOptions& options = {});

struct CheegerEstimate {
  Vec center;
  double radius = 0.0;
  double epsilon = 0.0;
  MCEstimate volume;
  MCEstimate boundaryCoarse;  // mu(U_eps \ U) / eps
  MCEstimate boundaryFine;    // same with eps / 2
  MCEstimate boundary;        // Richardson: 2 fine - coarse
  MCEstimate quotient;        // boundary / volume
};

/// Outer Minkowski-content estimate of nu(dU)/mu(U) for the metric ball U =
/// B(center, radius). An upper bound on the Cheeger constant.
CheegerEstimate cheegerQuotient(const ConvexBody& body, const Vec& center, double radius, double epsilon,
                                const QuotientOptions& options = {});

/// Unit disk times (-1, 1).
ConvexBody cylinderBody();
/// alpha(t) = (1 + t)(1 - t).
double cylinderAlpha(double t);
/// Default base points q of the cylinder experiment.
std::vector<Vec> defaultCylinderPoints();

struct CylinderSample {
  double t = 0.0;
  Vec q;
  double alpha = 0.0;
  MCEstimate cylinderVolume;  // vol TB_C((q, t), 1)
  double diskVolume = 0.0;    // vol TB_D(q, 1)
  double ratio = 0.0;         // cylinderVolume / (alpha diskVolume)
  double ratioStdError = 0.0;
  double ratioWithoutAlpha = 0.0;
  bool withinBounds = false;
};

struct Fact2Result {
  double l1 = 0.0, l2 = 0.0;
  double expected = 0.0;
  std::vector<double> angles;
  std::vector<double> heights;
  double maxDefect = 0.0;
};

struct CylinderReport {
  std::vector<double> tGrid;
  std::vector<Vec> points;
  std::vector<CylinderSample> samples;
  double lower = 0.0, upper = 0.0, tolerance = 0.0;
  double minRatio = 0.0, maxRatio = 0.0;
  bool withinBounds = false;
  /// Whether the lower bound also holds without the alpha factor.
  bool lowerHoldsWithoutAlpha = false;
  double fact1MaxDefect = 0.0;
  std::vector<Fact2Result> fact2;
  double spectralBound = 0.0;

  bool pass() const;
};

/// |F(p, e_z) alpha(t) - 1| at p = (q, t) in the cylinder.
double fact1Check(const Vec& q, double t);

/// Cap height of the tangent unit ball of wide disk x (-l2, l1) at the origin
/// along directions at angle theta <= 0.2 from vertical.
Fact2Result fact2Check(double l1, double l2, const std::vector<double>& angles);

CylinderReport cylinderSandwich(const std::vector<double>& tGrid, const std::vector<Vec>& points, long long samples,
                                std::uint64_t seed, double tolerance = 0.05);

}  // namespace hilbert
