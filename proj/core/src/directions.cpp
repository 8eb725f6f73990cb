#include "hilbert/directions.hpp"

#include <cmath>
#include <map>
#include <numbers>

#include "hilbert/random.hpp"

namespace hilbert {

bool DirectionSet::symmetric() const {
  if (antipode.size() != dirs.size()) return false;
  for (int a : antipode)
    if (a < 0) return false;
  return true;
}

DirectionSet circleDirections(int count) {
  if (count < 2 || count % 2 != 0) throw InvalidArgument("count must be even and >= 2", "resolution");
  DirectionSet set;
  set.dim = 2;
  set.cyclic = true;
  set.dirs.resize(count);
  set.antipode.resize(count);
  const int half = count / 2;
  for (int k = 0; k < half; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / count;
    Vec v(2);
    v << std::cos(theta), std::sin(theta);
    set.dirs[k] = v;
    set.dirs[k + half] = -v;
    set.antipode[k] = k + half;
    set.antipode[k + half] = k;
  }
  return set;
}

namespace {

struct Mesh {
  std::vector<Vec> vertices;
  std::vector<std::array<int, 3>> faces;
};

Mesh icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double raw[12][3] = {{-1, phi, 0}, {1, phi, 0},  {-1, -phi, 0}, {1, -phi, 0},
                             {0, -1, phi}, {0, 1, phi},  {0, -1, -phi}, {0, 1, -phi},
                             {phi, 0, -1}, {phi, 0, 1},  {-phi, 0, -1}, {-phi, 0, 1}};
  Mesh m;
  const double norm = std::sqrt(1.0 + phi * phi);
  for (const auto& r : raw) {
    Vec v(3);
    v << r[0] / norm, r[1] / norm, r[2] / norm;
    m.vertices.push_back(v);
  }
  m.faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
             {11, 10, 2}, {10, 7, 6}, {7, 1, 8},  {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
             {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  return m;
}

Mesh subdivide(const Mesh& in) {
  Mesh out;
  out.vertices = in.vertices;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto it = midpoint.find(key);
    if (it != midpoint.end()) return it->second;
    Vec m = in.vertices[a] + in.vertices[b];
    m /= m.norm();
    out.vertices.push_back(m);
    const int idx = static_cast<int>(out.vertices.size()) - 1;
    midpoint.emplace(key, idx);
    return idx;
  };
  for (const auto& f : in.faces) {
    const int ab = mid(f[0], f[1]);
    const int bc = mid(f[1], f[2]);
    const int ca = mid(f[2], f[0]);
    out.faces.push_back({f[0], ab, ca});
    out.faces.push_back({f[1], bc, ab});
    out.faces.push_back({f[2], ca, bc});
    out.faces.push_back({ab, bc, ca});
  }
  return out;
}

std::vector<int> antipodeMap(const std::vector<Vec>& dirs) {
  // Exact negation is preserved by midpoint subdivision of the icosahedron,
  // so a lexicographic lookup of the negated coordinates is sufficient.
  std::map<std::array<double, 3>, int> index;
  for (std::size_t i = 0; i < dirs.size(); ++i) index[{dirs[i][0], dirs[i][1], dirs[i][2]}] = static_cast<int>(i);
  std::vector<int> out(dirs.size(), -1);
  for (std::size_t i = 0; i < dirs.size(); ++i) {
    auto it = index.find({-dirs[i][0], -dirs[i][1], -dirs[i][2]});
    if (it != index.end()) out[i] = it->second;
  }
  return out;
}

constexpr int kMaxIcoLevel = 5;

const std::vector<DirectionSet>& icoLevels() {
  static const std::vector<DirectionSet> levels = [] {
    std::vector<DirectionSet> out;
    Mesh m = icosahedron();
    for (int level = 0; level <= kMaxIcoLevel; ++level) {
      if (level > 0) m = subdivide(m);
      DirectionSet set;
      set.dim = 3;
      set.dirs = m.vertices;
      set.triangles = m.faces;
      set.antipode = antipodeMap(m.vertices);
      out.push_back(std::move(set));
    }
    return out;
  }();
  return levels;
}

}  // namespace

DirectionSet icosphere(int minCount) {
  const auto& levels = icoLevels();
  for (const auto& set : levels)
    if (static_cast<int>(set.size()) >= minCount) return set;
  throw InvalidArgument("icosphere resolution too large", "resolution");
}

DirectionSet meshDirections(int n, int minCount) {
  if (n == 1) {
    DirectionSet set;
    set.dim = 1;
    set.dirs = {Vec::Constant(1, 1.0), Vec::Constant(1, -1.0)};
    set.antipode = {1, 0};
    set.cyclic = true;
    return set;
  }
  if (n == 2) return circleDirections(std::max(4, minCount + (minCount % 2)));
  if (n == 3) return icosphere(minCount);
  throw InvalidArgument("mesh direction sets are available for n <= 3 only", "dim");
}

DirectionSet lowDiscrepancyDirections(int n, int count) {
  if (count < 1) throw InvalidArgument("count must be positive", "directions");
  DirectionSet set;
  set.dim = n;
  if (n == 1) {
    for (int i = 0; i < count; ++i) set.dirs.push_back(Vec::Constant(1, i % 2 == 0 ? 1.0 : -1.0));
    return set;
  }
  if (n == 2) {
    for (int i = 0; i < count; ++i) {
      const double theta = 2.0 * std::numbers::pi * radicalInverse(static_cast<std::uint64_t>(i), 2);
      Vec v(2);
      v << std::cos(theta), std::sin(theta);
      set.dirs.push_back(v);
    }
    return set;
  }
  if (n == 3) {
    for (int i = 0; i < count; ++i) {
      const auto idx = static_cast<std::uint64_t>(i) + 1;
      const double z = 1.0 - 2.0 * radicalInverse(idx, 2);
      const double phi = 2.0 * std::numbers::pi * radicalInverse(idx, 3);
      const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
      Vec v(3);
      v << s * std::cos(phi), s * std::sin(phi), z;
      set.dirs.push_back(v);
    }
    return set;
  }
  std::uint64_t idx = 1;
  while (static_cast<int>(set.dirs.size()) < count) {
    Vec p = 2.0 * haltonPoint(idx++, n) - Vec::Ones(n);
    const double r = p.norm();
    if (r <= 1.0 && r > 1e-6) set.dirs.push_back(p / r);
  }
  return set;
}

double angularSpacing(const DirectionSet& set) {
  const double count = static_cast<double>(std::max<std::size_t>(1, set.size()));
  switch (set.dim) {
    case 1:
      return 0.0;
    case 2:
      return 2.0 * std::numbers::pi / count;
    case 3:
      return 2.0 * std::sqrt(4.0 * std::numbers::pi / count);
    default:
      return std::min(std::numbers::pi, 2.0 * std::pow(unitSphereArea(set.dim) / count, 1.0 / (set.dim - 1)));
  }
}

}  // namespace hilbert
