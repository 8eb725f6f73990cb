#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hilbert::cli {

namespace {

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

Json num(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::stod(fmt12(x));
}

Json vec(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(num(v[i]));
  return a;
}

Json mat(const Mat& m) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec(m.row(i).transpose()));
  return a;
}

Json estimate(const MCEstimate& e) {
  return Json{{"value", num(e.value)}, {"stderr", num(e.stdError)}, {"samples", e.samples}, {"seed", e.seed}};
}

std::string Report::json() const {
  Json j;
  j["command"] = command;
  j["version"] = libraryVersion();
  j["config"] = config;
  j["results"] = results;
  j["witnesses"] = witnesses;
  j["bounds"] = bounds;
  j["pass"] = pass;
  return j.dump(2) + "\n";
}

Csv::Csv(std::vector<std::string> header) { row(header); }

Csv& Csv::row(const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) text_ += ',';
    text_ += cells[i];
  }
  text_ += '\n';
  return *this;
}

std::string Csv::str() const { return text_; }

std::string Csv::cell(double x) { return std::isfinite(x) ? fmt12(x) : "nan"; }
std::string Csv::cell(long long x) { return std::to_string(x); }
std::string Csv::cell(bool x) { return x ? "true" : "false"; }

Svg::Svg(const Vec& lo, const Vec& hi, int pixels) : lo_(lo), hi_(hi) {
  const Vec span = hi - lo;
  scale_ = pixels / std::max(span[0], span[1]);
  width_ = static_cast<int>(std::ceil(span[0] * scale_));
  height_ = static_cast<int>(std::ceil(span[1] * scale_));
}

void Svg::polygon(const std::vector<Vec>& points, const std::string& stroke, const std::string& fill) {
  std::ostringstream s;
  s << "  <polygon fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"1\" points=\"";
  for (const Vec& p : points) s << fmt12((p[0] - lo_[0]) * scale_) << ',' << fmt12((hi_[1] - p[1]) * scale_) << ' ';
  s << "\"/>\n";
  body_ += s.str();
}

void Svg::point(const Vec& p, const std::string& colour) {
  std::ostringstream s;
  s << "  <circle cx=\"" << fmt12((p[0] - lo_[0]) * scale_) << "\" cy=\"" << fmt12((hi_[1] - p[1]) * scale_)
    << "\" r=\"3\" fill=\"" << colour << "\"/>\n";
  body_ += s.str();
}

std::string Svg::str() const {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width_ << "\" height=\"" << height_ << "\">\n"
    << body_ << "</svg>\n";
  return s.str();
}

}  // namespace hilbert::cli
