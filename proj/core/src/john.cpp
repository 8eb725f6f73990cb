#include "hilbert/john.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "golden.hpp"
#include "hilbert/hilbert_metric.hpp"

namespace hilbert {

Ellipsoid Ellipsoid::fromMap(const Mat& B, const Vec& d) {
  Mat S = (B * B.transpose()).inverse();
  S = 0.5 * (S + S.transpose());
  return {d, S};
}

Mat Ellipsoid::map() const {
  Eigen::SelfAdjointEigenSolver<Mat> eig(shape);
  return eig.eigenvectors() * eig.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
         eig.eigenvectors().transpose();
}

double Ellipsoid::volume() const {
  return unitBallVolume(static_cast<int>(center.size())) / std::sqrt(shape.determinant());
}

bool Ellipsoid::contains(const Vec& x) const {
  const Vec w = x - center;
  return w.dot(shape * w) < 1.0;
}

ConvexBody Ellipsoid::toBody() const { return ConvexBody::ellipsoid(center, shape); }

namespace {

struct LogDetProblem {
  int n;
  Mat A;
  Vec b;
  bool pin;
  Vec pinned;
  std::vector<Mat> basis;  // symmetric basis of B

  int vars() const { return static_cast<int>(basis.size()) + (pin ? 0 : n); }

  void unpack(const Vec& z, Mat& B, Vec& d) const {
    B = Mat::Zero(n, n);
    for (std::size_t j = 0; j < basis.size(); ++j) B += z[static_cast<Eigen::Index>(j)] * basis[j];
    d = pin ? pinned : Vec(z.tail(n));
  }

  // Slacks b - |B a_i| - a_i.d of all rows.
  Vec slacks(const Mat& B, const Vec& d, Vec* norms = nullptr, Mat* Y = nullptr) const {
    Mat AB = A * B;
    Vec ny = AB.rowwise().norm();
    Vec s = b - ny - A * d;
    if (norms) *norms = std::move(ny);
    if (Y) *Y = std::move(AB);
    return s;
  }

  // -t log det B - sum log s_i; false outside the domain.
  bool value(double t, const Vec& z, double& out) const {
    Mat B;
    Vec d;
    unpack(z, B, d);
    Eigen::LLT<Mat> llt(B);
    if (llt.info() != Eigen::Success) return false;
    const Mat L = llt.matrixL();
    if ((L.diagonal().array() <= 0.0).any()) return false;
    const Vec s = slacks(B, d);
    if (!(s.minCoeff() > 0.0)) return false;
    out = -t * 2.0 * L.diagonal().array().log().sum() - s.array().log().sum();
    return true;
  }

  void derivatives(double t, const Vec& z, Vec& grad, Mat& hess) const {
    const int N = vars();
    const int nv = static_cast<int>(basis.size());
    const Eigen::Index m = A.rows();
    Mat B;
    Vec d;
    unpack(z, B, d);
    const Mat Binv = B.inverse();
    grad = Vec::Zero(N);
    hess = Mat::Zero(N, N);
    std::vector<Mat> G(nv);
    for (int j = 0; j < nv; ++j) {
      G[j] = Binv * basis[j];
      grad[j] = -t * G[j].trace();
    }
    for (int j = 0; j < nv; ++j)
      for (int k = j; k < nv; ++k) hess(j, k) = hess(k, j) = t * (G[j] * G[k]).trace();

    Vec ny;
    Mat Y;
    const Vec s = slacks(B, d, &ny, &Y);
    const Mat U = Y.array().colwise() / ny.array();
    // Row i of Gm is the gradient of |B a_i| + a_i.d; V[c] row i holds
    // component c of basis_j a_i.
    Mat Gm(m, N);
    std::vector<Mat> V(n, Mat::Zero(m, nv));
    for (int j = 0; j < nv; ++j) {
      int k = 0, l = 0;
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          if (basis[j](r, c) != 0.0) {
            k = std::min(r, c);
            l = std::max(r, c);
          }
      if (k == l) {
        Gm.col(j) = U.col(k).cwiseProduct(A.col(k));
        V[k].col(j) = A.col(k);
      } else {
        Gm.col(j) = U.col(k).cwiseProduct(A.col(l)) + U.col(l).cwiseProduct(A.col(k));
        V[k].col(j) = A.col(l);
        V[l].col(j) = A.col(k);
      }
    }
    if (!pin) Gm.rightCols(n) = A;
    const Vec inv = s.cwiseInverse();
    const Vec w = (ny.cwiseProduct(s)).cwiseInverse();
    grad += Gm.transpose() * inv;
    hess += Gm.transpose() * inv.cwiseAbs2().asDiagonal() * Gm;
    const Mat GB = Gm.leftCols(nv);
    Mat curv = -GB.transpose() * w.asDiagonal() * GB;
    for (int c = 0; c < n; ++c) curv += V[c].transpose() * w.asDiagonal() * V[c];
    hess.topLeftCorner(nv, nv) += curv;
  }
};

}  // namespace

namespace {

// Solves hess step = -grad; a vanishing diagonal shift is added when the
// factorization loses definiteness to rounding.
Vec newtonStep(const Mat& hess, const Vec& grad) {
  const double scale = hess.diagonal().cwiseAbs().maxCoeff();
  for (double shift = 0.0; shift <= 1e-4 * scale; shift = shift == 0.0 ? 1e-14 * scale : 10.0 * shift) {
    Eigen::LLT<Mat> llt(hess + shift * Mat::Identity(hess.rows(), hess.cols()));
    if (llt.info() != Eigen::Success) continue;
    Vec step = -llt.solve(grad);
    if (step.allFinite()) return step;
  }
  throw ConvergenceError("ellipsoid Newton system is singular");
}

}  // namespace

Ellipsoid maxVolumeEllipsoid(const Halfspaces& h, const Vec& start, bool pinCenter) {
  const int n = h.dim();
  requireDim(start, n, "start");
  LogDetProblem prob{n, h.A, h.b, pinCenter, start, {}};
  for (Eigen::Index i = 0; i < prob.A.rows(); ++i) {
    const double len = prob.A.row(i).norm();
    if (len == 0.0) throw InvalidArgument("zero halfspace normal", "A");
    prob.A.row(i) /= len;
    prob.b[i] /= len;
  }
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      Mat E = Mat::Zero(n, n);
      E(k, l) = 1.0;
      E(l, k) = 1.0;
      prob.basis.push_back(E);
    }
  }
  const double room = (prob.b - prob.A * start).minCoeff();
  if (!(room > 0.0)) throw InvalidArgument("start point is not strictly inside the halfspaces", "start");

  const int N = prob.vars();
  Vec z = Vec::Zero(N);
  for (std::size_t j = 0; j < prob.basis.size(); ++j)
    if (prob.basis[j].trace() > 0.0) z[static_cast<Eigen::Index>(j)] = 0.5 * room;
  if (!pinCenter) z.tail(n) = start;

  const double m = static_cast<double>(prob.A.rows());
  double t = 1.0;
  for (int outer = 0; outer < 100; ++outer) {
    for (int it = 0; it < 100; ++it) {
      Vec grad;
      Mat hess;
      prob.derivatives(t, z, grad, hess);
      const Vec step = newtonStep(hess, grad);
      const double decrement = -grad.dot(step);
      if (decrement / 2.0 <= 1e-12) break;
      double f0 = 0.0, f1 = 0.0;
      prob.value(t, z, f0);
      double alpha = 1.0;
      while (!prob.value(t, z + alpha * step, f1) || f1 > f0 - 0.25 * alpha * decrement) {
        alpha *= 0.5;
        if (alpha < 1e-20) break;
      }
      if (alpha < 1e-20) break;
      z += alpha * step;
    }
    if (m / t < 1e-10) break;
    t *= 10.0;
  }
  Mat B;
  Vec d;
  prob.unpack(z, B, d);
  return Ellipsoid::fromMap(B, d);
}

Ellipsoid radialJohnEllipsoid(const Vec& center, const DirectionSet& dirs, const std::vector<double>& radius,
                              bool pinCenter) {
  const int n = static_cast<int>(center.size());
  if (radius.size() != dirs.size()) throw InvalidArgument("one radius per direction is required", "radius");
  for (double r : radius)
    if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("radii must be positive and finite", "radius");
  std::vector<Vec> points(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) points[k] = center + radius[k] * dirs.dirs[k];
  if (n >= 2 && n <= 3) {
    // Solve in the frame where the sample has identity second moment.
    Mat C = Mat::Zero(n, n);
    for (std::size_t k = 0; k < dirs.size(); ++k) C += (points[k] - center) * (points[k] - center).transpose();
    Eigen::SelfAdjointEigenSolver<Mat> eig(C / static_cast<double>(dirs.size()));
    const Vec ev = eig.eigenvalues();
    if (ev.minCoeff() > 0.0 && ev.maxCoeff() > 4.0 * ev.minCoeff()) {
      const Mat T = eig.eigenvectors() * ev.cwiseSqrt().cwiseInverse().asDiagonal() * eig.eigenvectors().transpose();
      const Mat Tinv = eig.eigenvectors() * ev.cwiseSqrt().asDiagonal() * eig.eigenvectors().transpose();
      std::vector<double> whiteRadius(dirs.size());
      DirectionSet white = dirs;
      for (std::size_t k = 0; k < dirs.size(); ++k) {
        const Vec y = T * (points[k] - center);
        whiteRadius[k] = y.norm();
        white.dirs[k] = y / whiteRadius[k];
      }
      const Ellipsoid Ey = radialJohnEllipsoid(Vec::Zero(n), white, whiteRadius, pinCenter);
      Mat S = T.transpose() * Ey.shape * T;
      return {center + Tinv * Ey.center, 0.5 * (S + S.transpose())};
    }
  }

  if (n == 1) {
    double lo = center[0], hi = center[0];
    for (const auto& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    Mat B(1, 1);
    Vec d = center;
    if (pinCenter) {
      B(0, 0) = std::min(hi - center[0], center[0] - lo);
    } else {
      B(0, 0) = 0.5 * (hi - lo);
      d[0] = 0.5 * (hi + lo);
    }
    return Ellipsoid::fromMap(B, d);
  }
  if (n == 2) return maxVolumeEllipsoid(facetsOfHull(points), center, pinCenter);
  if (n == 3) {
    if (dirs.triangles.empty()) throw InvalidArgument("direction set carries no triangulation", "dirs");
    Halfspaces h;
    h.A.resize(static_cast<Eigen::Index>(dirs.triangles.size()), 3);
    h.b.resize(static_cast<Eigen::Index>(dirs.triangles.size()));
    Eigen::Index rows = 0;
    for (const auto& tri : dirs.triangles) {
      const Eigen::Vector3d p0 = points[tri[0]].head<3>();
      const Eigen::Vector3d p1 = points[tri[1]].head<3>();
      const Eigen::Vector3d p2 = points[tri[2]].head<3>();
      Eigen::Vector3d normal = (p1 - p0).cross(p2 - p0);
      const double len = normal.norm();
      if (len == 0.0) continue;
      normal /= len;
      if (normal.dot(p0 - center.head<3>()) < 0.0) normal = -normal;
      h.A.row(rows) = normal.transpose();
      h.b[rows] = normal.dot(p0);
      ++rows;
    }
    h.A.conservativeResize(rows, 3);
    h.b.conservativeResize(rows);
    return maxVolumeEllipsoid(h, center, pinCenter);
  }
  throw InvalidArgument("radial John ellipsoids need n <= 3", "dirs");
}

namespace {

void verifyContained(const ConvexBody& body, const Ellipsoid& E) {
  const int n = body.dim();
  const Mat B = E.map();
  const DirectionSet probes = lowDiscrepancyDirections(n, 1000);
  for (const auto& u : probes.dirs)
    if (!body.contains(E.center + (1.0 - 1e-9) * (B * u)))
      throw ConvergenceError("John ellipsoid containment probe failed");
}

}  // namespace

Ellipsoid johnEllipsoid(const ConvexBody& body, int facetBudget) {
  const int n = body.dim();
  if (facetBudget < 2 * n + 2) throw InvalidArgument("facetBudget must be at least 2n+2", "facetBudget");
  Ellipsoid E;
  if (body.kind() == BodyKind::Ball || body.kind() == BodyKind::Ellipsoid) {
    const BodySpec s = body.spec();
    return {s.center, s.shape};
  }
  if (const Halfspaces* h = body.halfspaces()) {
    E = maxVolumeEllipsoid(*h, body.interiorPoint());
  } else {
    if (n > 3) throw InvalidArgument("John ellipsoids of non-polytope bodies need n <= 3", "body");
    const Vec& x0 = body.interiorPoint();
    const DirectionSet dirs = meshDirections(n, facetBudget);
    std::vector<double> radius(dirs.size());
    for (std::size_t k = 0; k < dirs.size(); ++k) radius[k] = body.chord(x0, dirs.dirs[k]).tPlus;
    E = radialJohnEllipsoid(x0, dirs, radius);
  }
  verifyContained(body, E);
  return E;
}

SandwichReport sandwichCheck(const ConvexBody& body, const Ellipsoid& E, int directions) {
  const int n = body.dim();
  SandwichReport rep;
  const Mat B = E.map();
  DirectionSet set;
  if (n == 2) {
    set = circleDirections(std::max(8, directions - directions % 8));
  } else if (n == 3) {
    set = icosphere(directions);
  } else if (n == 1) {
    set = meshDirections(1, 2);
  } else {
    set = lowDiscrepancyDirections(n, directions);
  }
  rep.contained = body.contains(E.center);
  auto extent = [&](const Vec& u) {
    try {
      return body.chord(E.center, B * u).tPlus;
    } catch (const NotInteriorError&) {
      return 0.0;
    }
  };
  double best = -1.0;
  Vec arg;
  for (const auto& u : set.dirs) {
    const double r = extent(u);
    if (r < 1.0 - 1e-9) rep.contained = false;
    if (r > best) {
      best = r;
      arg = u;
    }
  }
  if (n >= 2) {
    const double arc = 2.0 * angularSpacing(set);
    auto refined = detail::sphereRefineMax(extent, arg, best, arc, n == 2 ? 1 : 6, 60);
    best = refined.first;
    arg = refined.second;
  }
  rep.coverFactor = best;
  rep.witness = E.center + best * (B * arg);
  rep.symmetricBody = body.centrallySymmetric();
  const double root = std::sqrt(static_cast<double>(n));
  rep.bound = rep.symmetricBody ? root : static_cast<double>(n);
  rep.withinBound = rep.contained && rep.coverFactor <= rep.bound + 1e-3;
  rep.exceedsSymmetricFactor = !rep.symmetricBody && rep.coverFactor > root + 1e-3;
  return rep;
}

JohnMetric johnMetricAt(const ConvexBody& body, const Vec& p, int facetBudget) {
  const int n = body.dim();
  requireDim(p, n, "p");
  if (n > 3) throw InvalidArgument("John metrics need n <= 3", "body");
  if (facetBudget < 2 * n + 2) throw InvalidArgument("facetBudget must be at least 2n+2", "facetBudget");
  const Mat L = finslerFrame(body, p);
  const DirectionSet dirs = meshDirections(n, facetBudget);
  std::vector<double> radius(dirs.size());
  for (std::size_t k = 0; k < dirs.size(); ++k) radius[k] = 1.0 / finslerNorm(body, p, L * dirs.dirs[k]);
  const Ellipsoid Ey = radialJohnEllipsoid(Vec::Zero(n), dirs, radius, true);
  const Mat Bx = L * Ey.map();
  Mat g = (Bx * Bx.transpose()).inverse();
  g = 0.5 * (g + g.transpose());

  JohnMetric out{p, g, std::numeric_limits<double>::infinity(), 0.0};
  for (const auto& y : lowDiscrepancyDirections(n, 1000).dirs) {
    const Vec v = L * y;
    const double f = finslerNorm(body, p, v);
    const double ratio = f * f / v.dot(g * v);
    out.lowRatio = std::min(out.lowRatio, ratio);
    out.highRatio = std::max(out.highRatio, ratio);
  }
  return out;
}

}  // namespace hilbert
