#pragma once

#include <string>
#include <vector>

#include "hilbert/convex_body.hpp"
#include "hilbert/directions.hpp"

namespace hilbert {

/// Metric ball B(center, radius) stored radially: center + radial[k] dirs[k]
/// is at Hilbert distance `radius` from the center.
struct RadialBall {
  Vec center;
  double radius = 0.0;
  DirectionSet dirs;
  std::vector<double> radial;

  std::size_t size() const { return radial.size(); }
  Vec boundaryPoint(std::size_t k) const { return center + radial[k] * dirs.dirs[k]; }
};

/// Default boundary resolution: 512 (plane), 2048 (space, rounded up to the
/// icosphere level 2562).
int defaultBallResolution(int n);

/// The radius along each direction is solved in closed form from the chord
/// through the center: t = ab (e^{2r} - 1) / (b + a e^{2r}).
RadialBall metricBall(const ConvexBody& body, const Vec& p, double r, int resolution = 0);

/// Euclidean boundary point of B(center, r) in direction u (not necessarily
/// a sample direction).
Vec metricSpherePoint(const ConvexBody& body, const Vec& center, double r, const Vec& u);

/// Affine frame y = map x + shift in which the John ellipsoid of the ball is
/// the Euclidean unit ball centered at the origin.
struct NormalizedBall {
  Mat map;
  Vec shift;
  ConvexBody body;
  RadialBall ball;
  double minNorm = 0.0;
  double maxNorm = 0.0;
  int passes = 0;
};

/// Each pass resamples the metric ball along fixed directions of the current
/// frame, takes the John ellipsoid of the sampled ball and renormalizes; the
/// frame is then rotated to the principal axes of the normalized ball when
/// these are well separated. The result is therefore equivariant under
/// affine maps of the body.
NormalizedBall johnNormalizeBall(const ConvexBody& body, const RadialBall& ball, int passes = 3);

struct GapResult {
  /// min over probed ball-boundary points of the distance to the body boundary.
  double d0 = 0.0;
  /// d0 of the samples minus the sample spacing (distance is 1-Lipschitz).
  double d0Lower = 0.0;
  Vec ballWitness;
  Vec bodyWitness;
};

struct ChordBoundResult {
  double maxMinExit = 0.0;
  Vec witnessPoint;
  Vec witnessDirection;
  /// max over directions through the center of min(a, b).
  double centerMaxMinExit = 0.0;
  Vec centerWitnessDirection;
};

struct LipschitzResult {
  double lipUpper = 0.0;
  double lipLower = 0.0;
  double C = 0.0;
  Vec upperWitnessPoint, upperWitnessDirection;
  Vec lowerWitnessPoint, lowerWitnessDirection;
};

struct ProbeOptions {
  int boundaryDirs = 0;   // 0: defaultBallResolution(n)
  int interiorPoints = 0; // 0: 256 (plane), 1024 otherwise
  int probeDirs = 0;      // 0: 64 (plane), 162 otherwise
  int passes = 3;
};

GapResult step1Gap(const ConvexBody& mappedBody, const RadialBall& mappedBall, const ProbeOptions& options = {});
ChordBoundResult step2ChordBound(const ConvexBody& mappedBody, const RadialBall& mappedBall,
                                 const ProbeOptions& options = {});
LipschitzResult step3Bilipschitz(const ConvexBody& mappedBody, const RadialBall& mappedBall,
                                 const ProbeOptions& options = {});

/// Interior sample points of a radial ball (deterministic Halton), the center
/// first.
std::vector<Vec> ballInteriorSamples(const ConvexBody& body, const RadialBall& ball, int count);

struct Theorem12Report {
  std::string bodyId;
  Vec point;
  double radius = 1.0;
  int n = 0;
  Mat map;
  Vec shift;
  double minNorm = 0.0, maxNorm = 0.0;
  GapResult gap;
  ChordBoundResult chords;
  LipschitzResult lipschitz;
  double diameter = 0.0;
  int boundarySamples = 0, interiorSamples = 0, probeDirections = 0;

  bool gapOk = false, centerOk = false, chordOk = false, upperOk = false, lowerOk = false, diameterOk = false;
  /// |y| <= sqrt(n) on the normalized ball boundary (reported only).
  bool symmetricNormOk = false;
  /// 1 - tol <= |y| <= n + tol.
  bool normOk = false;

  bool pass() const { return gapOk && centerOk && chordOk && upperOk && lowerOk && diameterOk && normOk; }
};

/// Runs metricBall, johnNormalizeBall and the three step checks at radius 1.
Theorem12Report theorem12(const ConvexBody& body, const Vec& p, const ProbeOptions& options = {},
                          const std::string& bodyId = {});

}  // namespace hilbert
