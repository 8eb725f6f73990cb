#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "hilbert/common.hpp"
#include "hilbert/measure.hpp"

namespace hilbert::cli {

using Json = nlohmann::ordered_json;

/// Rounded to 12 significant digits; non-finite values become null.
Json num(double x);
Json vec(const Vec& v);
Json mat(const Mat& m);
Json estimate(const MCEstimate& e);

/// {command, version, config, results, witnesses, bounds, pass}.
struct Report {
  std::string command;
  Json config = Json::object();
  Json results = Json::object();
  Json witnesses = Json::object();
  Json bounds = Json::object();
  bool pass = true;

  std::string json() const;
};

/// CSV with '.' decimals and 12 significant digits.
class Csv {
 public:
  explicit Csv(std::vector<std::string> header);
  Csv& row(const std::vector<std::string>& cells);
  std::string str() const;

  static std::string cell(double x);
  static std::string cell(long long x);
  static std::string cell(bool x);

 private:
  std::string text_;
};

/// Minimal SVG canvas for 2-D sections.
class Svg {
 public:
  Svg(const Vec& lo, const Vec& hi, int pixels = 600);
  void polygon(const std::vector<Vec>& points, const std::string& stroke, const std::string& fill = "none");
  void point(const Vec& p, const std::string& colour);
  std::string str() const;

 private:
  Vec lo_, hi_;
  double scale_;
  int width_, height_;
  std::string body_;
};

}  // namespace hilbert::cli
