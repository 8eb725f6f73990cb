#include "cli.hpp"

#include <fstream>
#include <ostream>

#include "CLI11.hpp"

namespace hilbert::cli {

namespace {

void addCommon(CLI::App* sub, Config& c, bool needsBody = true) {
  if (needsBody) sub->add_option("--body", c.body, "Body JSON file")->required();
  sub->add_option("-o,--output", c.output, "Write the result to this file");
  sub->add_option("--format", c.format, "text, json or csv");
  sub->add_option("--seed", c.seed, "Sampling seed");
  sub->add_option("--resolution", c.resolution, "Direction resolution (0: default)");
}

void addSvg(CLI::App* sub, Config& c) { sub->add_option("--svg", c.svg, "Write an SVG drawing (2-D bodies)"); }

void addQuotientOptions(CLI::App* sub, Config& c) {
  sub->add_option("--center", c.center, "Center, comma separated (default: interior point)");
  sub->add_option("--samples", c.samples, "Monte-Carlo samples (0: 20000)");
  sub->add_option("--max-finsler", c.maxFinsler, "Cap on the Finsler norm of the sampled region");
}

void build(CLI::App& app, Config& c) {
  app.require_subcommand(1);

  auto* distance = app.add_subcommand("distance", "Hilbert distance between two points");
  addCommon(distance, c);
  distance->add_option("--p", c.p, "First point")->required();
  distance->add_option("--q", c.q, "Second point")->required();

  auto* norm = app.add_subcommand("norm", "Finsler norm of a vector or dual norm of a covector");
  addCommon(norm, c);
  norm->add_option("--p", c.p, "Base point")->required();
  norm->add_option("--v", c.v, "Tangent vector");
  norm->add_option("--covector", c.covector, "Covector");
  norm->add_option("--dual-resolution", c.dualResolution, "Directions for the dual norm");

  auto* density = app.add_subcommand("density", "Hilbert (Busemann) density at a point");
  addCommon(density, c);
  density->add_option("--p", c.p, "Point")->required();
  density->add_option("--samples", c.samples, "Monte-Carlo samples (0: deterministic)");

  auto* ball = app.add_subcommand("ball", "Boundary of a metric ball");
  addCommon(ball, c);
  addSvg(ball, c);
  ball->add_option("--p", c.p, "Center (default: interior point)");
  ball->add_option("--radius", c.radius, "Metric radius");

  auto* john = app.add_subcommand("john", "John ellipsoid and sandwich check");
  addCommon(john, c);
  addSvg(john, c);

  auto* t12 = app.add_subcommand("theorem12", "Bounded local geometry checks at a point");
  addCommon(t12, c);
  addSvg(t12, c);
  t12->add_option("--p", c.p, "Point (default: interior point)");

  auto* cyl = app.add_subcommand("cylinder", "Tangent-ball volume sandwich on the cylinder");
  addCommon(cyl, c, false);
  addSvg(cyl, c);
  cyl->add_option("--tgrid", c.tgrid, "Heights as start:stop:count");
  cyl->add_option("--points", c.points, "Disk points, ';' separated (x,y;x,y)");
  cyl->add_option("--samples", c.samples, "Monte-Carlo samples per tangent ball");
  cyl->add_option("--tolerance", c.tolerance, "Relative tolerance on the sandwich");

  auto* ray = app.add_subcommand("rayleigh", "Rayleigh or Sobolev quotient of radial trial functions");
  addCommon(ray, c);
  addQuotientOptions(ray, c);
  ray->add_option("--profile", c.profile, "tent or exponential");
  ray->add_option("--R", c.R, "Support radius");
  ray->add_option("--s", c.s, "Exponential rate");
  ray->add_flag("--sobolev", c.sobolev, "L1 quotient instead of L2");
  ray->add_flag("--minimize", c.minimize, "Minimize over the trial family");
  ray->add_option("--radii", c.radii, "Family radii");
  ray->add_option("--shapes", c.shapes, "Family rates");
  ray->add_option("--budget", c.budget, "Evaluation budget");
  ray->add_option("--dual-resolution", c.dualResolution, "Directions for the dual norm");
  ray->add_option("--bound", c.bound, "Fail when the quotient is below this value");

  auto* cheeger = app.add_subcommand("cheeger", "Boundary-to-volume quotient of a metric ball");
  addCommon(cheeger, c);
  addQuotientOptions(cheeger, c);
  cheeger->add_option("--radius", c.radius, "Metric radius");
  cheeger->add_option("--epsilon", c.epsilon, "Collar width");

  auto* conv = app.add_subcommand("converge", "Norm and density convergence towards a body");
  addCommon(conv, c);
  conv->add_option("--sequence", c.sequence, "smoothed or concentric");
  conv->add_option("--ks", c.ks, "Sequence indices");
  conv->add_option("--region-scale", c.regionScale, "Grid region as a dilate of the body");
  conv->add_option("--grid-points", c.gridPoints, "Grid points (0: default)");
  conv->add_option("--grid-directions", c.gridDirections, "Grid directions (0: default)");

  auto* delta = app.add_subcommand("delta", "Four-point hyperbolicity defects");
  addCommon(delta, c);
  delta->add_option("--center", c.center, "Center (default: interior point)");
  delta->add_option("--scales", c.scales, "Ball radii");
  delta->add_option("--quadruples", c.quadruples, "Quadruples per radius");
}

Json echoOf(const CLI::App& sub, const Config& c) {
  Json echo = Json::object();
  echo["seed"] = c.seed;
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->count() == 0 || opt->get_name() == "--help" || opt->get_name() == "--seed") continue;
    std::string name = opt->get_single_name();
    const std::string value = opt->as<std::string>();
    if (opt->get_type_size() == 0) {
      echo[name] = true;
      continue;
    }
    try {
      std::size_t used = 0;
      const double x = std::stod(value, &used);
      if (used == value.size()) {
        echo[name] = num(x);
        continue;
      }
    } catch (const std::exception&) {
    }
    echo[name] = value;
  }
  return echo;
}

void writeFile(const std::string& path, const std::string& text, const char* field) {
  std::ofstream f(path);
  if (!f) throw InvalidArgument("cannot write '" + path + "'", field);
  f << text;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical experiments on Hilbert geometries", "hilbert-lab"};
  Config c;
  build(app, c);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }
  const CLI::App* sub = app.get_subcommands().front();
  c.command = sub->get_name();
  try {
    const Outcome o = runCommand(c, echoOf(*sub, c));
    if (c.output.empty())
      out << o.text;
    else
      writeFile(c.output, o.text, "output");
    if (!o.svg.empty()) writeFile(c.svg, o.svg, "svg");
    return o.pass ? 0 : 1;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NotInteriorError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace hilbert::cli
