#include "hilbert/body_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace hilbert {

namespace {

using json = nlohmann::json;

std::string join(const std::string& prefix, const std::string& key) { return prefix.empty() ? key : prefix + "." + key; }

[[noreturn]] void fail(const std::string& field, const std::string& what) { throw InvalidArgument(what, field); }

const json& require(const json& j, const std::string& key, const std::string& prefix) {
  auto it = j.find(key);
  if (it == j.end()) fail(join(prefix, key), "missing required field");
  return *it;
}

double number(const json& j, const std::string& field) {
  if (!j.is_number()) fail(field, "expected a number");
  return j.get<double>();
}

Vec vector(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = number(j[i], field + "[" + std::to_string(i) + "]");
  return v;
}

Mat matrix(const json& j, const std::string& field) {
  if (!j.is_array() || j.empty()) fail(field, "expected a nonempty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  Mat m;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::string rowField = field + "[" + std::to_string(r) + "]";
    const Vec row = vector(j[r], rowField);
    if (r == 0) {
      cols = static_cast<std::size_t>(row.size());
      m.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    } else if (static_cast<std::size_t>(row.size()) != cols) {
      fail(rowField, "rows must have equal length");
    }
    m.row(static_cast<Eigen::Index>(r)) = row.transpose();
  }
  return m;
}

void allowOnly(const json& j, std::initializer_list<const char*> keys, const std::string& prefix) {
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) fail(join(prefix, it.key()), "unknown field");
}

ConvexBody parse(const json& j, const std::string& prefix);

// Runs a factory and prefixes any field named by its validation error.
template <class Fn>
ConvexBody build(const std::string& prefix, Fn&& fn) {
  try {
    return fn();
  } catch (const InvalidArgument& e) {
    const std::string field = e.field().empty() ? prefix : join(prefix, e.field());
    std::string what = e.what();
    if (!e.field().empty() && what.rfind(e.field() + ": ", 0) == 0) what = what.substr(e.field().size() + 2);
    throw InvalidArgument(what, field);
  }
}

ConvexBody parse(const json& j, const std::string& prefix) {
  if (!j.is_object()) fail(prefix.empty() ? "body" : prefix, "expected an object");
  const json& typeJ = require(j, "type", prefix);
  if (!typeJ.is_string()) fail(join(prefix, "type"), "expected a string");
  const std::string type = typeJ.get<std::string>();

  if (type == "ball") {
    allowOnly(j, {"type", "dim", "radius", "center"}, prefix);
    const double radius = j.contains("radius") ? number(j["radius"], join(prefix, "radius")) : 1.0;
    Vec center;
    if (j.contains("center")) {
      center = vector(j["center"], join(prefix, "center"));
      if (j.contains("dim")) {
        const double d = number(j["dim"], join(prefix, "dim"));
        if (d != static_cast<double>(center.size())) fail(join(prefix, "dim"), "does not match the center length");
      }
    } else {
      const double d = number(require(j, "dim", prefix), join(prefix, "dim"));
      if (d < 1 || d != std::floor(d)) fail(join(prefix, "dim"), "expected a positive integer");
      center = Vec::Zero(static_cast<int>(d));
    }
    return build(prefix, [&] { return ConvexBody::ball(center, radius); });
  }
  if (type == "ellipsoid") {
    allowOnly(j, {"type", "center", "shape"}, prefix);
    const Vec c = vector(require(j, "center", prefix), join(prefix, "center"));
    const Mat M = matrix(require(j, "shape", prefix), join(prefix, "shape"));
    return build(prefix, [&] { return ConvexBody::ellipsoid(c, M); });
  }
  if (type == "hpolytope") {
    allowOnly(j, {"type", "A", "b"}, prefix);
    const Mat A = matrix(require(j, "A", prefix), join(prefix, "A"));
    const Vec b = vector(require(j, "b", prefix), join(prefix, "b"));
    return build(prefix, [&] { return ConvexBody::hPolytope(A, b); });
  }
  if (type == "vpolytope") {
    allowOnly(j, {"type", "vertices"}, prefix);
    const Mat V = matrix(require(j, "vertices", prefix), join(prefix, "vertices"));
    std::vector<Vec> verts;
    for (Eigen::Index r = 0; r < V.rows(); ++r) verts.push_back(V.row(r).transpose());
    return build(prefix, [&] { return ConvexBody::vPolytope(verts); });
  }
  if (type == "product") {
    allowOnly(j, {"type", "factors"}, prefix);
    const json& fj = require(j, "factors", prefix);
    if (!fj.is_array() || fj.empty()) fail(join(prefix, "factors"), "expected a nonempty array of bodies");
    std::vector<ConvexBody> factors;
    for (std::size_t i = 0; i < fj.size(); ++i) factors.push_back(parse(fj[i], join(prefix, "factors[" + std::to_string(i) + "]")));
    return build(prefix, [&] { return ConvexBody::product(factors); });
  }
  if (type == "minkowski_ball") {
    allowOnly(j, {"type", "base", "radius"}, prefix);
    const ConvexBody base = parse(require(j, "base", prefix), join(prefix, "base"));
    const double r = number(require(j, "radius", prefix), join(prefix, "radius"));
    return build(prefix, [&] { return ConvexBody::minkowskiBall(base, r); });
  }
  if (type == "affine") {
    allowOnly(j, {"type", "map", "shift", "base"}, prefix);
    const ConvexBody base = parse(require(j, "base", prefix), join(prefix, "base"));
    const Mat map = matrix(require(j, "map", prefix), join(prefix, "map"));
    const Vec shift = j.contains("shift") ? vector(j["shift"], join(prefix, "shift")) : Vec::Zero(base.dim());
    return build(prefix, [&] { return base.affineImage(map, shift); });
  }
  fail(join(prefix, "type"), "unknown body type '" + type + "'");
}

json toJson(const Vec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

json toJson(const Mat& m) {
  json a = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) a.push_back(toJson(Vec(m.row(r).transpose())));
  return a;
}

json toJson(const ConvexBody& body) {
  const BodySpec s = body.spec();
  json j;
  j["type"] = toString(s.kind);
  switch (s.kind) {
    case BodyKind::Ball:
      j["dim"] = s.dim;
      j["radius"] = s.radius;
      j["center"] = toJson(s.center);
      break;
    case BodyKind::Ellipsoid:
      j["center"] = toJson(s.center);
      j["shape"] = toJson(s.shape);
      break;
    case BodyKind::HPolytope:
      j["A"] = toJson(s.A);
      j["b"] = toJson(s.b);
      break;
    case BodyKind::VPolytope: {
      json v = json::array();
      for (const auto& p : s.vertices) v.push_back(toJson(p));
      j["vertices"] = v;
      break;
    }
    case BodyKind::Product: {
      json f = json::array();
      for (const auto& b : s.factors) f.push_back(toJson(b));
      j["factors"] = f;
      break;
    }
    case BodyKind::MinkowskiBall:
      j["base"] = toJson(*s.base);
      j["radius"] = s.radius;
      break;
    case BodyKind::Affine:
      j["map"] = toJson(s.map);
      j["shift"] = toJson(s.shift);
      j["base"] = toJson(*s.base);
      break;
  }
  return j;
}

}  // namespace

ConvexBody bodyFromJson(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument(std::string("malformed JSON: ") + e.what(), "body");
  }
  return parse(j, "");
}

ConvexBody loadBody(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'", "body");
  std::stringstream ss;
  ss << in.rdbuf();
  return bodyFromJson(ss.str());
}

std::string bodyToJson(const ConvexBody& body, int indent) { return toJson(body).dump(indent); }

}  // namespace hilbert
