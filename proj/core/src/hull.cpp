#include "hilbert/hull.hpp"

#include <algorithm>
#include <numeric>

namespace hilbert {

namespace {

double cross2(const Vec& o, const Vec& a, const Vec& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

double pointScale(const std::vector<Vec>& points) {
  double s = 0.0;
  for (const auto& p : points) s = std::max(s, p.cwiseAbs().maxCoeff());
  return std::max(s, 1e-300);
}

void appendUnique(std::vector<Vec>& normals, std::vector<double>& offsets, const Vec& n, double d, double tol) {
  for (std::size_t i = 0; i < normals.size(); ++i) {
    if ((normals[i] - n).norm() < 1e-9 && std::abs(offsets[i] - d) < tol) return;
  }
  normals.push_back(n);
  offsets.push_back(d);
}

Halfspaces pack(const std::vector<Vec>& normals, const std::vector<double>& offsets, int n) {
  Halfspaces h;
  h.A.resize(static_cast<Eigen::Index>(normals.size()), n);
  h.b.resize(static_cast<Eigen::Index>(normals.size()));
  for (std::size_t i = 0; i < normals.size(); ++i) {
    h.A.row(static_cast<Eigen::Index>(i)) = normals[i].transpose();
    h.b[static_cast<Eigen::Index>(i)] = offsets[i];
  }
  return h;
}

}  // namespace

std::vector<int> convexHull2D(const std::vector<Vec>& points) {
  const int count = static_cast<int>(points.size());
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return points[a][0] < points[b][0] || (points[a][0] == points[b][0] && points[a][1] < points[b][1]);
  });
  if (count < 3) return order;
  const double tol = 1e-14 * pointScale(points) * pointScale(points);
  std::vector<int> hull(2 * count);
  int k = 0;
  for (int i = 0; i < count; ++i) {
    while (k >= 2 && cross2(points[hull[k - 2]], points[hull[k - 1]], points[order[i]]) <= tol) --k;
    hull[k++] = order[i];
  }
  for (int i = count - 2, lower = k + 1; i >= 0; --i) {
    while (k >= lower && cross2(points[hull[k - 2]], points[hull[k - 1]], points[order[i]]) <= tol) --k;
    hull[k++] = order[i];
  }
  hull.resize(std::max(0, k - 1));
  return hull;
}

Halfspaces facetsOfHull(const std::vector<Vec>& points) {
  if (points.empty()) throw InvalidArgument("empty point set", "vertices");
  const int n = static_cast<int>(points.front().size());
  for (const auto& p : points) requireDim(p, n, "vertices");
  const double scale = pointScale(points);
  const double tol = 1e-10 * scale;
  std::vector<Vec> normals;
  std::vector<double> offsets;

  if (n == 1) {
    double lo = points.front()[0], hi = lo;
    for (const auto& p : points) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    if (hi - lo <= tol) throw InvalidArgument("points do not span a segment", "vertices");
    normals = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
    offsets = {hi, -lo};
    return pack(normals, offsets, 1);
  }

  if (n == 2) {
    const auto hull = convexHull2D(points);
    if (hull.size() < 3) throw InvalidArgument("points do not span a polygon", "vertices");
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const Vec& a = points[hull[i]];
      const Vec& b = points[hull[(i + 1) % hull.size()]];
      Vec normal(2);
      normal << b[1] - a[1], a[0] - b[0];
      normal.normalize();
      appendUnique(normals, offsets, normal, normal.dot(a), tol);
    }
    return pack(normals, offsets, 2);
  }

  if (n == 3) {
    const std::size_t count = points.size();
    if (count > 160) throw InvalidArgument("too many vertices for exact facet enumeration (max 160)", "vertices");
    for (std::size_t i = 0; i < count; ++i) {
      for (std::size_t j = i + 1; j < count; ++j) {
        for (std::size_t k = j + 1; k < count; ++k) {
          Eigen::Vector3d u = (points[j] - points[i]).head<3>();
          Eigen::Vector3d v = (points[k] - points[i]).head<3>();
          Eigen::Vector3d c = u.cross(v);
          const double len = c.norm();
          if (len <= 1e-12 * scale * scale) continue;
          Vec normal = c / len;
          const double d = normal.dot(points[i]);
          bool below = true, above = true;
          for (const auto& p : points) {
            const double s = normal.dot(p) - d;
            if (s > tol) below = false;
            if (s < -tol) above = false;
            if (!below && !above) break;
          }
          if (below) appendUnique(normals, offsets, normal, d, tol);
          if (above) appendUnique(normals, offsets, Vec(-normal), -d, tol);
        }
      }
    }
    if (normals.size() < 4) throw InvalidArgument("points do not span a polyhedron", "vertices");
    return pack(normals, offsets, 3);
  }
  throw InvalidArgument("facet enumeration is only supported for n <= 3", "vertices");
}

std::vector<Vec> polytopeVertices(const Halfspaces& h) {
  const int n = h.dim();
  const int m = h.count();
  if (n > 3) throw InvalidArgument("vertex enumeration is only supported for n <= 3", "A");
  double scale = h.b.cwiseAbs().maxCoeff();
  if (scale <= 0) scale = 1.0;
  const double tol = 1e-9 * scale;
  std::vector<Vec> out;
  std::vector<int> idx(n);
  // Walk all n-subsets of rows.
  std::vector<bool> select(m, false);
  std::fill(select.begin(), select.begin() + std::min(n, m), true);
  if (m < n) return out;
  do {
    int c = 0;
    for (int i = 0; i < m; ++i)
      if (select[i]) idx[c++] = i;
    Mat M(n, n);
    Vec r(n);
    for (int i = 0; i < n; ++i) {
      M.row(i) = h.A.row(idx[i]);
      r[i] = h.b[idx[i]];
    }
    Eigen::FullPivLU<Mat> lu(M);
    if (lu.rank() < n) continue;
    Vec x = lu.solve(r);
    if (((h.A * x - h.b).array() > tol).any()) continue;
    bool dup = false;
    for (const auto& v : out)
      if ((v - x).norm() <= tol) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(x);
  } while (std::prev_permutation(select.begin(), select.end()));
  return out;
}

}  // namespace hilbert
