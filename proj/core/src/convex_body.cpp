#include "hilbert/convex_body.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hilbert/lp.hpp"

namespace hilbert {

const char* toString(BodyKind kind) {
  switch (kind) {
    case BodyKind::Ball:
      return "ball";
    case BodyKind::Ellipsoid:
      return "ellipsoid";
    case BodyKind::HPolytope:
      return "hpolytope";
    case BodyKind::VPolytope:
      return "vpolytope";
    case BodyKind::Product:
      return "product";
    case BodyKind::MinkowskiBall:
      return "minkowski_ball";
    case BodyKind::Affine:
      return "affine";
  }
  return "unknown";
}

namespace detail {

struct BodyImpl {
  virtual ~BodyImpl() = default;

  int n = 0;
  Vec interior;
  BoundingBox box;
  double scale = 1.0;

  virtual BodyKind kind() const = 0;
  virtual bool contains(const Vec& x) const = 0;
  // Throws NotInteriorError when x is not a member.
  virtual Chord chord(const Vec& x, const Vec& v, Vec* nMinus, Vec* nPlus) const = 0;
  virtual double support(const Vec& u) const = 0;
  virtual bool hasClosestPoint() const { return false; }
  virtual Vec closestPoint(const Vec&) const {
    throw InvalidArgument(std::string("nearest-point queries are not available for ") + toString(kind()) + " bodies",
                          "base");
  }
  virtual bool exact() const { return true; }
  virtual bool symmetric(Vec* center) const = 0;
  virtual BodySpec spec() const = 0;
  virtual const Halfspaces* halfspaces() const { return nullptr; }

  void finishFromSupport() {
    box.lo.resize(n);
    box.hi.resize(n);
    for (int i = 0; i < n; ++i) {
      Vec e = Vec::Zero(n);
      e[i] = 1.0;
      box.hi[i] = support(e);
      box.lo[i] = -support(-e);
    }
    scale = std::max(box.diagonal(), std::numeric_limits<double>::min());
  }
};

}  // namespace detail

namespace {

using detail::BodyImpl;

[[noreturn]] void notInterior() { throw NotInteriorError("point is not in the open body"); }

// ---------------------------------------------------------------- ellipsoid

struct EllipsoidImpl final : BodyImpl {
  bool isBall = false;
  double radius = 1.0;
  Vec c;
  Mat M;
  Mat Minv;
  Mat Q;     // eigenvectors of M
  Vec axes;  // semi-axis lengths along the columns of Q

  EllipsoidImpl(const Vec& center, const Mat& shape, bool ball, double r) : isBall(ball), radius(r), c(center), M(shape) {
    n = static_cast<int>(c.size());
    Eigen::SelfAdjointEigenSolver<Mat> eig(M);
    Q = eig.eigenvectors();
    axes = eig.eigenvalues().cwiseSqrt().cwiseInverse();
    Minv = Q * axes.cwiseAbs2().asDiagonal() * Q.transpose();
    interior = c;
    finishFromSupport();
  }

  BodyKind kind() const override { return isBall ? BodyKind::Ball : BodyKind::Ellipsoid; }

  double level(const Vec& x) const {
    const Vec w = x - c;
    return w.dot(M * w);
  }

  bool contains(const Vec& x) const override { return level(x) < 1.0; }

  Chord chord(const Vec& x, const Vec& v, Vec* nMinus, Vec* nPlus) const override {
    const Vec w = x - c;
    const Vec Mv = M * v;
    const double a = v.dot(Mv);
    const double b = 2.0 * w.dot(Mv);
    const double c0 = w.dot(M * w) - 1.0;
    if (!(c0 < 0.0)) notInterior();
    const double disc = b * b - 4.0 * a * c0;
    const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
    const double t1 = q / a;
    const double t2 = c0 / q;
    Chord ch{std::min(t1, t2), std::max(t1, t2), true};
    if (nMinus) *nMinus = (M * (w + ch.tMinus * v)).normalized();
    if (nPlus) *nPlus = (M * (w + ch.tPlus * v)).normalized();
    return ch;
  }

  double support(const Vec& u) const override { return c.dot(u) + std::sqrt(std::max(0.0, u.dot(Minv * u))); }

  bool hasClosestPoint() const override { return true; }

  Vec closestPoint(const Vec& x) const override {
    if (level(x) <= 1.0) return x;
    if (isBall) return c + radius * (x - c).normalized();
    // Minimize |y - z|^2 on sum y_i^2 / e_i^2 = 1; y_i = e_i^2 z_i / (e_i^2 + s).
    const Vec z = Q.transpose() * (x - c);
    const Vec e2 = axes.cwiseAbs2();
    auto constraint = [&](double s) {
      double sum = 0.0;
      for (int i = 0; i < n; ++i) {
        const double r = axes[i] * z[i] / (e2[i] + s);
        sum += r * r;
      }
      return sum - 1.0;
    };
    double lo = 0.0;
    double hi = z.norm() * axes.maxCoeff();
    for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (constraint(mid) > 0.0 ? lo : hi) = mid;
    }
    const double s = 0.5 * (lo + hi);
    Vec y(n);
    for (int i = 0; i < n; ++i) y[i] = e2[i] * z[i] / (e2[i] + s);
    return c + Q * y;
  }

  bool symmetric(Vec* center) const override {
    if (center) *center = c;
    return true;
  }

  BodySpec spec() const override {
    BodySpec s;
    s.kind = kind();
    s.dim = n;
    s.center = c;
    s.radius = radius;
    s.shape = M;
    return s;
  }
};

// ---------------------------------------------------------------- polytope

struct PolytopeImpl final : BodyImpl {
  Halfspaces h;  // unit-norm rows
  bool fromVertices = false;
  std::vector<Vec> inputVertices;
  std::vector<Vec> vertices;                 // n <= 3
  std::vector<std::vector<int>> facetCycles;  // n == 3: ordered vertex indices per row
  std::vector<int> polygon;                   // n == 2: CCW vertex order

  PolytopeImpl(const Mat& A, const Vec& b) {
    n = static_cast<int>(A.cols());
    h.A = A;
    h.b = b;
    for (int i = 0; i < h.count(); ++i) {
      const double len = h.A.row(i).norm();
      h.A.row(i) /= len;
      h.b[i] /= len;
    }
    chebyshevCenter();
    checkBounded();
    if (n == 1 || (n == 2 && h.count() <= 400) || (n == 3 && h.count() <= 64)) buildFaces();
    finishFromSupport();
  }

  void chebyshevCenter() {
    const int m = h.count();
    Mat G(m, n + 1);
    G.leftCols(n) = h.A;
    G.col(n).setOnes();
    Vec start = Vec::Zero(n + 1);
    start[n] = h.b.minCoeff() - 1.0;
    Vec cost = Vec::Zero(n + 1);
    cost[n] = -1.0;
    LpResult res;
    try {
      res = minimizeLinear(cost, G, h.b, start, 1e-11);
    } catch (const ConvergenceError&) {
      throw InvalidArgument("halfspaces do not bound a region", "A");
    }
    if (!(res.x[n] > 0.0)) throw InvalidArgument("offset vector admits no strict interior point", "b");
    interior = res.x.head(n);
  }

  void checkBounded() const {
    Eigen::FullPivLU<Mat> lu(h.A);
    if (lu.rank() < n) throw InvalidArgument("halfspaces do not bound a region", "A");
    for (int i = 0; i < n; ++i) {
      for (double sign : {1.0, -1.0}) {
        Vec c = Vec::Zero(n);
        c[i] = -sign;
        try {
          minimizeLinear(c, h.A, h.b, interior, 1e-6);
        } catch (const ConvergenceError&) {
          throw InvalidArgument("halfspaces do not bound a region", "A");
        }
      }
    }
  }

  void buildFaces() {
    vertices = polytopeVertices(h);
    if (n == 2) {
      polygon = convexHull2D(vertices);
    } else if (n == 3) {
      const double tol = 1e-9 * std::max(1.0, h.b.cwiseAbs().maxCoeff());
      facetCycles.resize(h.count());
      for (int f = 0; f < h.count(); ++f) {
        const Vec normal = h.A.row(f).transpose();
        std::vector<int> on;
        for (int k = 0; k < static_cast<int>(vertices.size()); ++k)
          if (std::abs(normal.dot(vertices[k]) - h.b[f]) <= tol) on.push_back(k);
        if (on.size() < 3) continue;
        Vec centroid = Vec::Zero(3);
        for (int k : on) centroid += vertices[k];
        centroid /= static_cast<double>(on.size());
        const Eigen::Vector3d nn = normal.head<3>();
        Eigen::Vector3d u1 = nn.unitOrthogonal();
        Eigen::Vector3d u2 = nn.cross(u1);
        std::vector<double> angle(on.size());
        for (std::size_t k = 0; k < on.size(); ++k) {
          const Eigen::Vector3d d = (vertices[on[k]] - centroid).head<3>();
          angle[k] = std::atan2(d.dot(u2), d.dot(u1));
        }
        std::vector<int> order(on.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return angle[a] < angle[b]; });
        for (int k : order) facetCycles[f].push_back(on[k]);
      }
    }
  }

  BodyKind kind() const override { return fromVertices ? BodyKind::VPolytope : BodyKind::HPolytope; }

  bool contains(const Vec& x) const override { return ((h.A * x - h.b).array() < 0.0).all(); }

  Chord chord(const Vec& x, const Vec& v, Vec* nMinus, Vec* nPlus) const override {
    const Vec slack = h.b - h.A * x;
    const Vec rate = h.A * v;
    double tPlus = std::numeric_limits<double>::infinity();
    double tMinus = -std::numeric_limits<double>::infinity();
    int iPlus = -1, iMinus = -1;
    for (int i = 0; i < h.count(); ++i) {
      if (!(slack[i] > 0.0)) notInterior();
      if (rate[i] > 0.0) {
        const double t = slack[i] / rate[i];
        if (t < tPlus) {
          tPlus = t;
          iPlus = i;
        }
      } else if (rate[i] < 0.0) {
        const double t = slack[i] / rate[i];
        if (t > tMinus) {
          tMinus = t;
          iMinus = i;
        }
      }
    }
    if (iPlus < 0 || iMinus < 0) throw ConvergenceError("polytope chord is unbounded");
    if (nMinus) *nMinus = h.A.row(iMinus).transpose();
    if (nPlus) *nPlus = h.A.row(iPlus).transpose();
    return {tMinus, tPlus, true};
  }

  double support(const Vec& u) const override {
    if (!vertices.empty()) {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& v : vertices) best = std::max(best, u.dot(v));
      return best;
    }
    if (u.squaredNorm() == 0.0) return 0.0;
    return -minimizeLinear(-u, h.A, h.b, interior, 1e-12 * std::max(1.0, u.norm())).value;
  }

  bool hasClosestPoint() const override { return !vertices.empty(); }

  static Vec segmentProjection(const Vec& x, const Vec& a, const Vec& b) {
    const Vec d = b - a;
    const double len2 = d.squaredNorm();
    const double s = len2 > 0.0 ? std::clamp((x - a).dot(d) / len2, 0.0, 1.0) : 0.0;
    return a + s * d;
  }

  Vec closestPoint(const Vec& x) const override {
    if (((h.A * x - h.b).array() <= 0.0).all()) return x;
    if (n == 1) return Vec::Constant(1, std::clamp(x[0], box.lo[0], box.hi[0]));
    Vec best;
    double bestDist = std::numeric_limits<double>::infinity();
    auto consider = [&](const Vec& y) {
      const double d = (y - x).squaredNorm();
      if (d < bestDist) {
        bestDist = d;
        best = y;
      }
    };
    if (n == 2) {
      for (std::size_t i = 0; i < polygon.size(); ++i)
        consider(segmentProjection(x, vertices[polygon[i]], vertices[polygon[(i + 1) % polygon.size()]]));
      return best;
    }
    if (n == 3) {
      for (int f = 0; f < h.count(); ++f) {
        const auto& cyc = facetCycles[f];
        if (cyc.size() < 3) continue;
        const Eigen::Vector3d nn = h.A.row(f).transpose();
        const Vec p = x - (nn.dot(x.head<3>()) - h.b[f]) * Vec(nn);
        bool inside = true;
        for (std::size_t k = 0; k < cyc.size() && inside; ++k) {
          const Eigen::Vector3d a = vertices[cyc[k]].head<3>();
          const Eigen::Vector3d b = vertices[cyc[(k + 1) % cyc.size()]].head<3>();
          if ((b - a).cross(p.head<3>() - a).dot(nn) < 0.0) inside = false;
        }
        if (inside) consider(p);
        for (std::size_t k = 0; k < cyc.size(); ++k)
          consider(segmentProjection(x, vertices[cyc[k]], vertices[cyc[(k + 1) % cyc.size()]]));
      }
      return best;
    }
    return BodyImpl::closestPoint(x);
  }

  bool symmetric(Vec* center) const override {
    if (vertices.empty()) return false;
    Vec c = Vec::Zero(n);
    for (const auto& v : vertices) c += v;
    c /= static_cast<double>(vertices.size());
    const double tol = 1e-9 * scale;
    for (const auto& v : vertices) {
      const Vec mirror = 2.0 * c - v;
      bool found = false;
      for (const auto& w : vertices)
        if ((w - mirror).norm() <= tol) {
          found = true;
          break;
        }
      if (!found) return false;
    }
    if (center) *center = c;
    return true;
  }

  BodySpec spec() const override {
    BodySpec s;
    s.kind = kind();
    s.dim = n;
    s.A = h.A;
    s.b = h.b;
    s.vertices = inputVertices;
    return s;
  }

  const Halfspaces* halfspaces() const override { return &h; }
};

// ---------------------------------------------------------------- product

struct ProductImpl final : BodyImpl {
  std::vector<ConvexBody> factors;
  std::vector<int> offsets;

  explicit ProductImpl(std::vector<ConvexBody> fs) : factors(std::move(fs)) {
    n = 0;
    for (const auto& f : factors) {
      offsets.push_back(n);
      n += f.dim();
    }
    interior.resize(n);
    for (std::size_t i = 0; i < factors.size(); ++i) interior.segment(offsets[i], factors[i].dim()) = factors[i].interiorPoint();
    finishFromSupport();
  }

  BodyKind kind() const override { return BodyKind::Product; }

  bool contains(const Vec& x) const override {
    for (std::size_t i = 0; i < factors.size(); ++i)
      if (!factors[i].contains(x.segment(offsets[i], factors[i].dim()))) return false;
    return true;
  }

  Chord chord(const Vec& x, const Vec& v, Vec* nMinus, Vec* nPlus) const override {
    Chord out{-std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(), true};
    int iMinus = -1, iPlus = -1;
    Vec fnMinus, fnPlus;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const int d = factors[i].dim();
      const Vec xi = x.segment(offsets[i], d);
      const Vec vi = v.segment(offsets[i], d);
      if (vi.squaredNorm() == 0.0) {
        if (!factors[i].contains(xi)) notInterior();
        continue;
      }
      const bool wantNormals = nMinus || nPlus;
      Chord c;
      Vec a, b;
      if (wantNormals) {
        auto cw = factors[i].chordWithNormals(xi, vi);
        c = cw.chord;
        a = std::move(cw.normalMinus);
        b = std::move(cw.normalPlus);
      } else {
        c = factors[i].chord(xi, vi);
      }
      out.certified = out.certified && c.certified;
      if (c.tPlus < out.tPlus) {
        out.tPlus = c.tPlus;
        iPlus = static_cast<int>(i);
        fnPlus = b;
      }
      if (c.tMinus > out.tMinus) {
        out.tMinus = c.tMinus;
        iMinus = static_cast<int>(i);
        fnMinus = a;
      }
    }
    if (nMinus) {
      *nMinus = Vec::Zero(n);
      nMinus->segment(offsets[iMinus], factors[iMinus].dim()) = fnMinus;
    }
    if (nPlus) {
      *nPlus = Vec::Zero(n);
      nPlus->segment(offsets[iPlus], factors[iPlus].dim()) = fnPlus;
    }
    return out;
  }

  double support(const Vec& u) const override {
    double s = 0.0;
    for (std::size_t i = 0; i < factors.size(); ++i) s += factors[i].support(u.segment(offsets[i], factors[i].dim()));
    return s;
  }

  bool hasClosestPoint() const override {
    return std::all_of(factors.begin(), factors.end(), [](const ConvexBody& f) { return f.supportsClosestPoint(); });
  }

  Vec closestPoint(const Vec& x) const override {
    Vec y(n);
    for (std::size_t i = 0; i < factors.size(); ++i)
      y.segment(offsets[i], factors[i].dim()) = factors[i].closestPoint(x.segment(offsets[i], factors[i].dim()));
    return y;
  }

  bool exact() const override {
    return std::all_of(factors.begin(), factors.end(), [](const ConvexBody& f) { return f.exactChords(); });
  }

  bool symmetric(Vec* center) const override {
    Vec c(n);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      Vec ci;
      if (!factors[i].centrallySymmetric(&ci)) return false;
      c.segment(offsets[i], factors[i].dim()) = ci;
    }
    if (center) *center = c;
    return true;
  }

  BodySpec spec() const override {
    BodySpec s;
    s.kind = BodyKind::Product;
    s.dim = n;
    s.factors = factors;
    return s;
  }
};

// ---------------------------------------------------------------- Minkowski sum with a ball

struct MinkowskiImpl final : BodyImpl {
  ConvexBody base;
  double radius;

  MinkowskiImpl(const ConvexBody& b, double r) : base(b), radius(r) {
    n = base.dim();
    interior = base.interiorPoint();
    finishFromSupport();
  }

  BodyKind kind() const override { return BodyKind::MinkowskiBall; }

  double defect(const Vec& x) const { return base.distance(x) - radius; }

  bool contains(const Vec& x) const override { return defect(x) < 0.0; }

  // Root of defect(x + t v) on a bracket [lo, hi] with defect(lo) < 0 < defect(hi).
  double solve(const Vec& x, const Vec& v, double gLo, double hi) const {
    double lo = 0.0;
    double gHi = defect(x + hi * v);
    for (int grow = 0; !(gHi > 0.0); ++grow) {
      if (grow > 60) throw ConvergenceError("could not bracket the boundary of the smoothed body");
      lo = hi;
      gLo = gHi;
      hi *= 2.0;
      gHi = defect(x + hi * v);
    }
    int side = 0;
    for (int it = 0; it < ConvexBody::kChordIterations; ++it) {
      if (hi - lo <= ConvexBody::kChordTolerance * hi) return 0.5 * (lo + hi);
      double t = (lo * gHi - hi * gLo) / (gHi - gLo);
      if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
      const double g = defect(x + t * v);
      if (g == 0.0) return t;
      if (g > 0.0) {
        hi = t;
        gHi = g;
        if (side == 1) gLo *= 0.5;
        side = 1;
      } else {
        lo = t;
        gLo = g;
        if (side == -1) gHi *= 0.5;
        side = -1;
      }
    }
    if (hi - lo <= ConvexBody::kChordTolerance * hi) return 0.5 * (lo + hi);
    throw ConvergenceError("chord root finding exceeded the iteration cap");
  }

  Vec normalAt(const Vec& y) const {
    const Vec p = base.closestPoint(y);
    const Vec d = y - p;
    const double len = d.norm();
    return len > 0.0 ? Vec(d / len) : Vec::Zero(n);
  }

  Chord chord(const Vec& x, const Vec& v, Vec* nMinus, Vec* nPlus) const override {
    const double g0 = defect(x);
    if (!(g0 < 0.0)) notInterior();
    const double hi = 2.0 * scale / v.norm();
    const double tPlus = solve(x, v, g0, hi);
    const double tMinus = -solve(x, -v, g0, hi);
    if (nMinus) *nMinus = normalAt(x + tMinus * v);
    if (nPlus) *nPlus = normalAt(x + tPlus * v);
    return {tMinus, tPlus, false};
  }

  double support(const Vec& u) const override { return base.support(u) + radius * u.norm(); }

  bool hasClosestPoint() const override { return true; }

  Vec closestPoint(const Vec& x) const override {
    const Vec p = base.closestPoint(x);
    const Vec d = x - p;
    const double len = d.norm();
    if (len <= radius) return x;
    return p + (radius / len) * d;
  }

  bool exact() const override { return false; }

  bool symmetric(Vec* center) const override { return base.centrallySymmetric(center); }

  BodySpec spec() const override {
    BodySpec s;
    s.kind = BodyKind::MinkowskiBall;
    s.dim = n;
    s.radius = radius;
    s.base = std::make_shared<const ConvexBody>(base);
    return s;
  }
};

// ---------------------------------------------------------------- affine image

struct AffineImpl final : BodyImpl {
  ConvexBody base;
  Mat T;
  Mat Tinv;
  Vec s;

  AffineImpl(const ConvexBody& b, const Mat& map, const Vec& shift) : base(b), T(map), Tinv(map.inverse()), s(shift) {
    n = base.dim();
    interior = T * base.interiorPoint() + s;
    finishFromSupport();
  }

  BodyKind kind() const override { return BodyKind::Affine; }

  Vec pull(const Vec& x) const { return Tinv * (x - s); }

  bool contains(const Vec& x) const override { return base.contains(pull(x)); }

  Chord chord(const Vec& x, const Vec& v, Vec* nMinus, Vec* nPlus) const override {
    const Vec y = pull(x);
    const Vec w = Tinv * v;
    if (!base.contains(y)) notInterior();
    if (!nMinus && !nPlus) return base.chord(y, w);
    auto cw = base.chordWithNormals(y, w);
    if (nMinus) *nMinus = (Tinv.transpose() * cw.normalMinus).normalized();
    if (nPlus) *nPlus = (Tinv.transpose() * cw.normalPlus).normalized();
    return cw.chord;
  }

  double support(const Vec& u) const override { return base.support(T.transpose() * u) + u.dot(s); }

  bool exact() const override { return base.exactChords(); }

  bool symmetric(Vec* center) const override {
    Vec c;
    if (!base.centrallySymmetric(&c)) return false;
    if (center) *center = T * c + s;
    return true;
  }

  BodySpec spec() const override {
    BodySpec out;
    out.kind = BodyKind::Affine;
    out.dim = n;
    out.map = T;
    out.shift = s;
    out.base = std::make_shared<const ConvexBody>(base);
    return out;
  }
};

void requireFinite(const Vec& x, const char* field) {
  if (!x.allFinite()) throw InvalidArgument("entries must be finite", field);
}

void requireFinite(const Mat& x, const char* field) {
  if (!x.allFinite()) throw InvalidArgument("entries must be finite", field);
}

}  // namespace

// ---------------------------------------------------------------- factories

ConvexBody::ConvexBody(std::shared_ptr<const detail::BodyImpl> impl) : impl_(std::move(impl)) {}

ConvexBody ConvexBody::ball(int dim, double radius) {
  if (dim < 1) throw InvalidArgument("dimension must be >= 1", "dim");
  return ball(Vec::Zero(dim), radius);
}

ConvexBody ConvexBody::ball(const Vec& center, double radius) {
  if (center.size() < 1) throw InvalidArgument("dimension must be >= 1", "dim");
  requireFinite(center, "center");
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("radius must be positive", "radius");
  const int n = static_cast<int>(center.size());
  Mat M = Mat::Identity(n, n) / (radius * radius);
  return ConvexBody(std::make_shared<EllipsoidImpl>(center, M, true, radius));
}

ConvexBody ConvexBody::ellipsoid(const Vec& center, const Mat& shape) {
  const auto n = center.size();
  if (n < 1) throw InvalidArgument("dimension must be >= 1", "center");
  requireFinite(center, "center");
  requireFinite(shape, "shape");
  if (shape.rows() != n || shape.cols() != n) throw InvalidArgument("shape must be an n x n matrix", "shape");
  const double norm = shape.norm();
  if ((shape - shape.transpose()).norm() > 1e-12 * std::max(1.0, norm))
    throw InvalidArgument("shape matrix must be symmetric", "shape");
  const Mat sym = 0.5 * (shape + shape.transpose());
  Eigen::SelfAdjointEigenSolver<Mat> eig(sym, Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) throw InvalidArgument("shape matrix must be positive definite", "shape");
  return ConvexBody(std::make_shared<EllipsoidImpl>(center, sym, false, 1.0));
}

ConvexBody ConvexBody::hPolytope(const Mat& A, const Vec& b) {
  if (A.cols() < 1 || A.rows() < 1) throw InvalidArgument("normal matrix must be nonempty", "A");
  if (b.size() != A.rows()) throw InvalidArgument("offset vector length must equal the number of rows of A", "b");
  requireFinite(A, "A");
  requireFinite(b, "b");
  for (Eigen::Index i = 0; i < A.rows(); ++i)
    if (A.row(i).norm() == 0.0) throw InvalidArgument("row " + std::to_string(i) + " of the normal matrix is zero", "A");
  return ConvexBody(std::make_shared<PolytopeImpl>(A, b));
}

ConvexBody ConvexBody::vPolytope(const std::vector<Vec>& vertices) {
  if (vertices.empty()) throw InvalidArgument("vertex list is empty", "vertices");
  const int n = static_cast<int>(vertices.front().size());
  if (n < 1) throw InvalidArgument("dimension must be >= 1", "vertices");
  if (n > 3) throw InvalidArgument("v-polytopes are supported for n <= 3 only", "vertices");
  for (const auto& v : vertices) {
    requireDim(v, n, "vertices");
    requireFinite(v, "vertices");
  }
  const Halfspaces h = facetsOfHull(vertices);
  auto impl = std::make_shared<PolytopeImpl>(h.A, h.b);
  impl->fromVertices = true;
  impl->inputVertices = vertices;
  return ConvexBody(std::move(impl));
}

ConvexBody ConvexBody::box(const Vec& lo, const Vec& hi) {
  requireDim(hi, static_cast<int>(lo.size()), "hi");
  const int n = static_cast<int>(lo.size());
  if (((hi - lo).array() <= 0.0).any()) throw InvalidArgument("box must have positive extent", "hi");
  Mat A = Mat::Zero(2 * n, n);
  Vec b(2 * n);
  for (int i = 0; i < n; ++i) {
    A(2 * i, i) = 1.0;
    b[2 * i] = hi[i];
    A(2 * i + 1, i) = -1.0;
    b[2 * i + 1] = -lo[i];
  }
  return hPolytope(A, b);
}

ConvexBody ConvexBody::product(const std::vector<ConvexBody>& factors) {
  if (factors.empty()) throw InvalidArgument("product needs at least one factor", "factors");
  return ConvexBody(std::make_shared<ProductImpl>(factors));
}

ConvexBody ConvexBody::minkowskiBall(const ConvexBody& base, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw InvalidArgument("radius must be positive", "radius");
  if (!base.supportsClosestPoint())
    throw InvalidArgument(std::string("nearest-point queries are not available for ") + toString(base.kind()) +
                              " bodies",
                          "base");
  return ConvexBody(std::make_shared<MinkowskiImpl>(base, radius));
}

ConvexBody ConvexBody::affineImage(const Mat& map, const Vec& shift) const {
  const int n = dim();
  if (map.rows() != n || map.cols() != n) throw InvalidArgument("map must be an n x n matrix", "map");
  requireDim(shift, n, "shift");
  requireFinite(map, "map");
  requireFinite(shift, "shift");
  Eigen::JacobiSVD<Mat> svd(map);
  const Vec sv = svd.singularValues();
  if (!(sv.minCoeff() > 1e-12 * sv.maxCoeff())) throw InvalidArgument("map is singular", "map");

  switch (kind()) {
    case BodyKind::Ball:
    case BodyKind::Ellipsoid: {
      const auto& e = static_cast<const EllipsoidImpl&>(*impl_);
      const Mat Tinv = map.inverse();
      Mat M = Tinv.transpose() * e.M * Tinv;
      M = 0.5 * (M + M.transpose());
      return ConvexBody(std::make_shared<EllipsoidImpl>(map * e.c + shift, M, false, 1.0));
    }
    case BodyKind::HPolytope: {
      const auto& p = static_cast<const PolytopeImpl&>(*impl_);
      const Mat Tinv = map.inverse();
      const Mat A = p.h.A * Tinv;
      return hPolytope(A, p.h.b + A * shift);
    }
    case BodyKind::VPolytope: {
      const auto& p = static_cast<const PolytopeImpl&>(*impl_);
      std::vector<Vec> mapped;
      for (const auto& v : p.inputVertices) mapped.push_back(map * v + shift);
      return vPolytope(mapped);
    }
    case BodyKind::Affine: {
      const auto& a = static_cast<const AffineImpl&>(*impl_);
      return a.base.affineImage(map * a.T, map * a.s + shift);
    }
    default:
      return ConvexBody(std::make_shared<AffineImpl>(*this, map, shift));
  }
}

ConvexBody ConvexBody::scaled(double factor) const {
  return affineImage(factor * Mat::Identity(dim(), dim()), Vec::Zero(dim()));
}

// ---------------------------------------------------------------- queries

BodyKind ConvexBody::kind() const { return impl_->kind(); }
int ConvexBody::dim() const { return impl_->n; }
BodySpec ConvexBody::spec() const { return impl_->spec(); }

bool ConvexBody::contains(const Vec& x) const {
  requireDim(x, dim(), "x");
  if (!x.allFinite()) return false;
  return impl_->contains(x);
}

Chord ConvexBody::chord(const Vec& x, const Vec& v) const {
  requireDim(x, dim(), "x");
  requireDim(v, dim(), "v");
  if (!v.allFinite() || v.squaredNorm() == 0.0) throw InvalidArgument("direction must be finite and nonzero", "v");
  if (!x.allFinite()) notInterior();
  return impl_->chord(x, v, nullptr, nullptr);
}

ChordWithNormals ConvexBody::chordWithNormals(const Vec& x, const Vec& v) const {
  requireDim(x, dim(), "x");
  requireDim(v, dim(), "v");
  if (!v.allFinite() || v.squaredNorm() == 0.0) throw InvalidArgument("direction must be finite and nonzero", "v");
  if (!x.allFinite()) notInterior();
  ChordWithNormals out;
  out.chord = impl_->chord(x, v, &out.normalMinus, &out.normalPlus);
  return out;
}

double ConvexBody::support(const Vec& u) const {
  requireDim(u, dim(), "u");
  return impl_->support(u);
}

Vec ConvexBody::closestPoint(const Vec& x) const {
  requireDim(x, dim(), "x");
  return impl_->closestPoint(x);
}

bool ConvexBody::supportsClosestPoint() const { return impl_->hasClosestPoint(); }
const Vec& ConvexBody::interiorPoint() const { return impl_->interior; }
const BoundingBox& ConvexBody::boundingBox() const { return impl_->box; }
double ConvexBody::scale() const { return impl_->scale; }
bool ConvexBody::exactChords() const { return impl_->exact(); }

double ConvexBody::boundaryFloor() const { return (exactChords() ? kExactFloor : kChordTolerance) * scale(); }

bool ConvexBody::centrallySymmetric(Vec* center) const { return impl_->symmetric(center); }

const Halfspaces* ConvexBody::halfspaces() const { return impl_->halfspaces(); }

}  // namespace hilbert
