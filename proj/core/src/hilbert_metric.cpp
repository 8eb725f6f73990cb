#include "hilbert/hilbert_metric.hpp"

#include <cmath>

#include "golden.hpp"
#include "hilbert/directions.hpp"

namespace hilbert {

double crossRatio(const Vec& a, const Vec& p, const Vec& q, const Vec& b) {
  const int n = static_cast<int>(a.size());
  requireDim(p, n, "p");
  requireDim(q, n, "q");
  requireDim(b, n, "b");
  const Vec line = b - a;
  const double len = line.norm();
  if (len == 0.0) throw InvalidArgument("endpoints coincide", "b");
  const Vec dir = line / len;
  for (const Vec* x : {&p, &q}) {
    const Vec off = *x - a;
    if ((off - off.dot(dir) * dir).norm() > kCollinearTolerance * len)
      throw InvalidArgument("points are not collinear", x == &p ? "p" : "q");
  }
  const double pa = (p - a).norm();
  const double qb = (q - b).norm();
  if (pa == 0.0) throw InvalidArgument("a and p coincide", "p");
  if (qb == 0.0) throw InvalidArgument("q and b coincide", "q");
  return ((q - a).norm() * (p - b).norm()) / (pa * qb);
}

void requireResolved(const ConvexBody& body, const Chord& chord, const Vec& v) {
  if (chord.nearer() * v.norm() < body.boundaryFloor())
    throw NotInteriorError("point lies within the boundary resolution of the body");
}

double hilbertDistance(const ConvexBody& body, const Vec& p, const Vec& q) {
  requireDim(p, body.dim(), "p");
  requireDim(q, body.dim(), "q");
  const Vec v = q - p;
  if (v.squaredNorm() == 0.0) {
    if (!body.contains(p)) throw NotInteriorError("point is not in the open body");
    return 0.0;
  }
  const Chord atP = body.chord(p, v);
  const Chord atQ = body.chord(q, v);
  requireResolved(body, atP, v);
  requireResolved(body, atQ, v);
  // Line parameter 0 at p, 1 at q; a at atP.tMinus, b at 1 + atQ.tPlus.
  return 0.5 * (std::log1p(1.0 / -atP.tMinus) + std::log1p(1.0 / atQ.tPlus));
}

double finslerNorm(const ConvexBody& body, const Vec& p, const Vec& u) {
  requireDim(u, body.dim(), "u");
  if (u.squaredNorm() == 0.0) {
    if (!body.contains(p)) throw NotInteriorError("point is not in the open body");
    return 0.0;
  }
  const Chord c = body.chord(p, u);
  requireResolved(body, c, u);
  return 0.5 * (1.0 / c.tPlus + 1.0 / -c.tMinus);
}

namespace {

// Q with y^T Q y ~ F(L y)^2, by polarization along the columns of L.
Mat polarizedForm(const ConvexBody& body, const Vec& p, const Mat& L) {
  const int n = body.dim();
  Mat Q(n, n);
  for (int i = 0; i < n; ++i) {
    const double f = finslerNorm(body, p, L.col(i));
    Q(i, i) = f * f;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double fp = finslerNorm(body, p, L.col(i) + L.col(j));
      const double fm = finslerNorm(body, p, L.col(i) - L.col(j));
      Q(i, j) = Q(j, i) = 0.25 * (fp * fp - fm * fm);
    }
  }
  return Q;
}

Mat inverseSqrt(const Mat& Q) {
  Eigen::SelfAdjointEigenSolver<Mat> eig(Q);
  Vec ev = eig.eigenvalues();
  const double top = ev.maxCoeff();
  for (Eigen::Index i = 0; i < ev.size(); ++i) ev[i] = 1.0 / std::sqrt(std::max(ev[i], 1e-6 * top));
  return eig.eigenvectors() * ev.asDiagonal() * eig.eigenvectors().transpose();
}

}  // namespace

Mat finslerFrame(const ConvexBody& body, const Vec& p) {
  const int n = body.dim();
  Mat L = Mat::Identity(n, n);
  for (int pass = 0; pass < 2; ++pass) L = L * inverseSqrt(polarizedForm(body, p, L));
  return L;
}

double dualNorm(const ConvexBody& body, const Vec& p, const Vec& l, int directions) {
  const int n = body.dim();
  requireDim(l, n, "l");
  if (directions < 8) throw InvalidArgument("at least 8 directions are required", "directions");
  if (!body.contains(p)) throw NotInteriorError("point is not in the open body");
  if (l.squaredNorm() == 0.0) return 0.0;

  const Mat L = finslerFrame(body, p);
  const Vec lf = L.transpose() * l;
  auto ratio = [&](const Vec& y) { return lf.dot(y) / finslerNorm(body, p, L * y); };

  const DirectionSet set = lowDiscrepancyDirections(n, directions);
  double best = -std::numeric_limits<double>::infinity();
  Vec arg;
  for (const auto& y : set.dirs) {
    const double r = ratio(y);
    if (r > best) {
      best = r;
      arg = y;
    }
  }

  // Local refinement around the best sample.
  const double spacing = n == 1 ? 0.0 : std::min(std::numbers::pi, 4.0 * std::pow(unitSphereArea(n) / directions, 1.0 / (n - 1)));
  const double refined =
      detail::sphereRefineMax(ratio, arg, best, spacing, n == 2 ? 1 : 6, n == 2 ? 80 : 50).first;
  return std::max(best, refined);
}

double geodesicAdditivityCheck(const ConvexBody& body, const Vec& p, const Vec& q, const Vec& r) {
  const Vec seg = r - p;
  const double len = seg.norm();
  if (len == 0.0) {
    if ((q - p).norm() != 0.0) throw InvalidArgument("q is not on the segment [p, r]", "q");
    return 0.0;
  }
  const double s = (q - p).dot(seg) / (len * len);
  if (s < -kCollinearTolerance || s > 1.0 + kCollinearTolerance || (q - p - s * seg).norm() > kCollinearTolerance * len)
    throw InvalidArgument("q is not on the segment [p, r]", "q");
  return std::abs(hilbertDistance(body, p, q) + hilbertDistance(body, q, r) - hilbertDistance(body, p, r));
}

Vec distanceGradient(const ConvexBody& body, const Vec& c, const Vec& x) {
  const Vec w = x - c;
  if (w.squaredNorm() == 0.0) return Vec::Zero(body.dim());
  // Exits from c at c + t w: t+ = 1 + u+, t- = 1 + u- with u from the chord at x.
  const ChordWithNormals cw = body.chordWithNormals(x, w);
  requireResolved(body, cw.chord, w);
  const double uPlus = cw.chord.tPlus;
  const double tMinus = 1.0 + cw.chord.tMinus;
  const double nb = cw.normalPlus.dot(w);
  const double na = cw.normalMinus.dot(w);
  return cw.normalPlus / (2.0 * uPlus * nb) + cw.normalMinus / (2.0 * (1.0 - tMinus) * na);
}

}  // namespace hilbert
