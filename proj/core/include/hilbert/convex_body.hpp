#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hilbert/common.hpp"
#include "hilbert/hull.hpp"

namespace hilbert {

enum class BodyKind { Ball, Ellipsoid, HPolytope, VPolytope, Product, MinkowskiBall, Affine };

const char* toString(BodyKind kind);

/// Line parameters where x + t v leaves the body: tMinus < 0 < tPlus.
/// `certified` is true for closed-form chords, false for bisection.
struct Chord {
  double tMinus = 0.0;
  double tPlus = 0.0;
  bool certified = true;

  /// Shorter of the two exit parameters.
  double nearer() const { return std::min(-tMinus, tPlus); }
};

/// A chord together with outward unit normals at both exit points.
struct ChordWithNormals {
  Chord chord;
  Vec normalMinus;
  Vec normalPlus;
};

struct BoundingBox {
  Vec lo;
  Vec hi;
  double volume() const { return (hi - lo).prod(); }
  double diagonal() const { return (hi - lo).norm(); }
};

class ConvexBody;

/// Construction parameters of a body, as read from or written to JSON.
struct BodySpec {
  BodyKind kind = BodyKind::Ball;
  int dim = 0;
  Vec center;
  double radius = 1.0;
  Mat shape;
  Mat A;
  Vec b;
  std::vector<Vec> vertices;
  std::vector<ConvexBody> factors;
  std::shared_ptr<const ConvexBody> base;
  Mat map;
  Vec shift;
};

namespace detail {
struct BodyImpl;
}

/// An open, bounded, convex, nonempty subset of R^n with a membership and
/// chord oracle. Bodies are immutable values; copies share state.
///
/// Chords are exact for balls, ellipsoids, polytopes, products of exact
/// bodies and affine images of exact bodies. Minkowski sums with a ball are
/// resolved by bracketed root finding on the distance to the base body, to
/// kChordTolerance relative accuracy.
class ConvexBody {
 public:
  static constexpr double kChordTolerance = 1e-10;
  static constexpr int kChordIterations = 200;
  /// Relative floor below which an exit distance is not trusted for exact
  /// chords (floating-point resolution of the coordinates).
  static constexpr double kExactFloor = 1e-14;

  /// Open Euclidean ball.
  static ConvexBody ball(int dim, double radius = 1.0);
  static ConvexBody ball(const Vec& center, double radius);
  /// {x : (x - c)^T M (x - c) < 1} with M symmetric positive definite.
  static ConvexBody ellipsoid(const Vec& center, const Mat& shape);
  /// {x : A x < b}; must be bounded with a strict interior point.
  static ConvexBody hPolytope(const Mat& A, const Vec& b);
  /// Interior of conv(vertices), n <= 3.
  static ConvexBody vPolytope(const std::vector<Vec>& vertices);
  /// Open axis-aligned box (lo, hi).
  static ConvexBody box(const Vec& lo, const Vec& hi);
  static ConvexBody product(const std::vector<ConvexBody>& factors);
  /// Interior of the Minkowski sum of the closure of `base` with a closed
  /// ball of radius `radius`. The base must admit nearest-point queries.
  static ConvexBody minkowskiBall(const ConvexBody& base, double radius);

  /// {map y + shift : y in this}. Exact kinds keep their kind (balls become
  /// ellipsoids, polytopes stay polytopes); images of images compose.
  ConvexBody affineImage(const Mat& map, const Vec& shift) const;
  /// Dilation about the origin.
  ConvexBody scaled(double factor) const;

  BodyKind kind() const;
  int dim() const;
  BodySpec spec() const;

  bool contains(const Vec& x) const;
  /// Throws InvalidArgument for v = 0 or a dimension mismatch,
  /// NotInteriorError when x is not a member.
  Chord chord(const Vec& x, const Vec& v) const;
  ChordWithNormals chordWithNormals(const Vec& x, const Vec& v) const;

  /// Support function h(u) = sup_{y in body} <u, y>.
  double support(const Vec& u) const;
  /// Nearest point of the closure (x itself for members). Supported for
  /// balls, ellipsoids, polytopes with n <= 3, products and Minkowski sums
  /// of supported bodies.
  Vec closestPoint(const Vec& x) const;
  bool supportsClosestPoint() const;
  double distance(const Vec& x) const { return (x - closestPoint(x)).norm(); }

  const Vec& interiorPoint() const;
  const BoundingBox& boundingBox() const;
  /// Diagonal of the bounding box; the length unit for relative tolerances.
  double scale() const;
  bool exactChords() const;
  /// Smallest exit distance accepted by metric computations.
  double boundaryFloor() const;
  /// True (with the center) when the body is centrally symmetric.
  bool centrallySymmetric(Vec* center = nullptr) const;

  /// For h-polytopes (and v-polytopes): the halfspace form.
  const Halfspaces* halfspaces() const;

 private:
  explicit ConvexBody(std::shared_ptr<const detail::BodyImpl> impl);
  std::shared_ptr<const detail::BodyImpl> impl_;
};

}  // namespace hilbert
