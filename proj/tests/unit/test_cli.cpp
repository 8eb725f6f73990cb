#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "cli.hpp"
#include "oracles.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result runCli(std::vector<std::string> args) {
  args.insert(args.begin(), "hilbert-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = hilbert::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(HILBERT_DATA_DIR) + "/" + name; }

std::string tempFile(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("hilbert_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, DistanceMatchesKleinModel) {
  const Result r = runCli({"distance", "--body", data("disk.json"), "--p", "0,0", "--q", "0.761594,0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1.000000\n");
  oracle::Vec q(2);
  q << 0.761594, 0.0;
  EXPECT_NEAR(std::stod(r.out), oracle::kleinDistance(oracle::Vec::Zero(2), q), 5e-7);
}

TEST(Cli, NormAndDensityText) {
  const Result n = runCli({"norm", "--body", data("disk.json"), "--p", "0.5,0", "--v", "1,0"});
  EXPECT_EQ(n.code, 0);
  oracle::Vec p(2), v(2);
  p << 0.5, 0.0;
  v << 1.0, 0.0;
  EXPECT_NEAR(std::stod(n.out), oracle::diskFinsler(p, v, 1.0), 1e-6);
  const Result d = runCli({"density", "--body", data("disk.json"), "--p", "0.3,0"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NEAR(std::stod(d.out), oracle::kleinDensity(0.3, 2), 1e-5);
}

TEST(Cli, ReportsEmbedConfigSeedVersionAndBounds) {
  const Result r = runCli({"theorem12", "--body", data("square.json"), "--seed", "42"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "theorem12");
  EXPECT_EQ(j["config"]["seed"], 42);
  EXPECT_FALSE(j["version"].get<std::string>().empty());
  EXPECT_GE(j["results"]["d0"].get<double>(), 0.0090744);
  EXPECT_NEAR(j["bounds"]["boundary_gap"].get<double>(), 1.0 / (2.0 * std::exp(4.0) + 1.0), 1e-12);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(Cli, OutputIsByteIdentical) {
  const std::vector<std::string> args{"delta", "--body", data("disk.json"), "--quadruples", "300", "--seed", "9"};
  const Result a = runCli(args), b = runCli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> cyl{"cylinder", "--tgrid", "0:0.5:2", "--samples", "4000", "--format", "json"};
  EXPECT_EQ(runCli(cyl).out, runCli(cyl).out);
}

TEST(Cli, CylinderCsvWithinConstants) {
  const Result r = runCli({"cylinder", "--tgrid", "-0.9:0.9:3", "--samples", "20000", "--seed", "7"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("t,q0,q1,alpha", 0), 0u);
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream ls(line);
    for (std::string c; std::getline(ls, c, ',');) cells.push_back(c);
    const double ratio = std::stod(cells[7]);
    EXPECT_GE(ratio, 2.0 / 3.0 - 0.05);
    EXPECT_LE(ratio, 8.0 + 0.05);
  }
  EXPECT_EQ(rows, 15);
}

TEST(Cli, InputErrorsExitTwo) {
  const std::string unknown = tempFile("unknown.json", R"({"type": "ball", "dim": 2, "colour": 1})");
  Result r = runCli({"distance", "--body", unknown, "--p", "0,0", "--q", "0.1,0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("colour"), std::string::npos);

  const std::string broken = tempFile("broken.json", R"({"type": )");
  EXPECT_EQ(runCli({"distance", "--body", broken, "--p", "0,0", "--q", "0.1,0"}).code, 2);
  EXPECT_EQ(runCli({"distance", "--body", data("disk.json"), "--p", "2,0", "--q", "0,0"}).code, 2);
  EXPECT_EQ(runCli({"distance", "--body", data("disk.json"), "--p", "0,0,0", "--q", "0,0"}).code, 2);
  EXPECT_EQ(runCli({"distance", "--body", data("disk.json"), "--p", "0,0"}).code, 2);
  EXPECT_EQ(runCli({"distance", "--body", data("disk.json"), "--p", "0,0", "--q", "0,0", "--bogus", "1"}).code, 2);
  EXPECT_EQ(runCli({"ball", "--body", data("cylinder.json"), "--svg", "/tmp/x.svg"}).code, 2);
  EXPECT_EQ(runCli({"cylinder", "--tgrid", "1:2"}).code, 2);
  EXPECT_EQ(runCli({"rayleigh", "--body", data("disk.json"), "--profile", "gauss"}).code, 2);
  EXPECT_EQ(runCli({}).code, 2);
}

TEST(Cli, BoundViolationExitsOne) {
  const Result r = runCli({"rayleigh", "--body", data("disk.json"), "--profile", "tent", "--R", "4", "--samples", "4000",
                           "--bound", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, HelpExitsZero) {
  const Result r = runCli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("theorem12"), std::string::npos);
}

TEST(Cli, SvgAndOutputFiles) {
  const auto dir = std::filesystem::temp_directory_path();
  const std::string svg = (dir / "hilbert_cli_ball.svg").string(), out = (dir / "hilbert_cli_ball.json").string();
  const Result r = runCli({"ball", "--body", data("triangle.json"), "--radius", "1.5", "--svg", svg, "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream s(svg), o(out);
  std::stringstream ss, os;
  ss << s.rdbuf();
  os << o.rdbuf();
  EXPECT_EQ(ss.str().rfind("<svg", 0), 0u);
  const auto j = nlohmann::json::parse(os.str());
  EXPECT_EQ(j["results"]["boundary"].size(), 512u);
}
