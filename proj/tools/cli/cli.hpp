#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "report.hpp"

namespace hilbert::cli {

/// Parsed command line; fields not used by a command keep their defaults.
struct Config {
  std::string command;
  std::string body;
  std::string output;
  std::string format;  // empty: command default
  std::string svg;
  std::uint64_t seed = 42;
  long long samples = 0;  // 0: command default
  int resolution = 0;
  double tolerance = 0.05;

  std::string p, q, v, covector, center;
  double radius = 1.0;
  double epsilon = 0.1;

  std::string tgrid = "-0.9:0.9:7";
  std::string points;

  std::string profile = "exponential";
  double R = 6.0;
  double s = 0.5;
  bool sobolev = false;
  bool minimize = false;
  std::string radii = "4,8,12,15";
  std::string shapes = "0.4,0.5,0.6";
  int budget = 16;
  int dualResolution = 64;
  double maxFinsler = 1e6;
  double bound = 0.0;

  std::string sequence = "smoothed";
  std::string ks = "2,4,8,16";
  double regionScale = 0.5;
  int gridPoints = 0;
  int gridDirections = 0;

  std::string scales = "2,4,6";
  long long quadruples = 10000;
};

struct Outcome {
  std::string text;
  std::string svg;
  bool pass = true;
};

/// Runs one command; `echo` is the config section of the report.
Outcome runCommand(const Config& config, const Json& echo);

/// Full driver: parses argv, runs, writes output. Exit codes: 0 success,
/// 1 bound violation, 2 input error, 3 numerical failure.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hilbert::cli
