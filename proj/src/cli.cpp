#include "cayley/cli.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cayley/curvature.hpp"
#include "cayley/geodesy.hpp"
#include "cayley/plot.hpp"
#include "cayley/suites.hpp"

namespace cayley::cli {
namespace {

struct Flags {
  std::uint64_t seed = 0;
  int trials = 0;
  std::string radius;
  std::string grid;
  std::string out;
  bool parallel = false;
  std::string format;
  std::string config;
  std::string table;
  std::string exportOperator;
  int pinchStarts = 0;
  std::vector<CLI::Option*> opts;
};

void addCommonFlags(CLI::App* app, Flags& f) {
  f.opts.push_back(app->add_option("--seed", f.seed, "master seed"));
  f.opts.push_back(app->add_option("--trials", f.trials, "random trials per check")->check(CLI::PositiveNumber));
  f.opts.push_back(app->add_option("--radius", f.radius, "comma-separated geodesic ball radii"));
  f.opts.push_back(app->add_option("--grid", f.grid, "comma-separated grid sizes"));
  f.opts.push_back(app->add_option("--out", f.out, "output directory"));
  f.opts.push_back(app->add_flag("--parallel", f.parallel, "run independent work concurrently"));
  f.opts.push_back(app->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"})));
  f.opts.push_back(app->add_option("--config", f.config, "flat key = value config file"));
  f.opts.push_back(app->add_option("--table", f.table, "octonion multiplication table file"));
  f.opts.push_back(app->add_option("--export-operator", f.exportOperator, "write the 120x120 curvature operator as CSV"));
  f.opts.push_back(app->add_option("--pinch-starts", f.pinchStarts, "random starts for the pinching search")
                       ->check(CLI::PositiveNumber));
}

RunConfig buildConfig(const Flags& f) {
  RunConfig cfg;
  auto given = [&](const char* name) {
    for (const auto* o : f.opts) {
      if (o->check_name(name) && o->count() > 0) return true;
    }
    return false;
  };
  if (given("--config")) applyConfigFile(cfg, f.config);
  if (given("--seed")) cfg.seed = f.seed;
  if (given("--trials")) cfg.trials = f.trials;
  if (given("--radius")) cfg.radii = parseDoubleList(f.radius);
  if (given("--grid")) cfg.grids = parseIntList(f.grid);
  if (given("--out")) cfg.outDir = f.out;
  if (given("--parallel")) cfg.parallel = f.parallel;
  if (given("--format")) cfg.format = f.format;
  if (given("--table")) cfg.tablePath = f.table;
  if (given("--export-operator")) cfg.exportOperator = f.exportOperator;
  if (given("--pinch-starts")) cfg.pinchStarts = f.pinchStarts;
  cfg.validate();
  return cfg;
}

void writeReport(const VerificationReport& rep, const RunConfig& cfg) {
  std::filesystem::create_directories(cfg.outDir);
  std::ofstream os(cfg.outDir / "report.json");
  os << rep.toJson().dump(2) << '\n';
  if (cfg.format == "csv") {
    std::ofstream csv(cfg.outDir / "report.csv");
    csv << "suite,check,residual,tolerance,pass\n";
    for (const auto& s : rep.suites) {
      for (const auto& c : s.checks) {
        csv << s.name << ',' << c.name << ',' << c.residual << ',' << c.tolerance << ',' << (c.pass ? "true" : "false")
            << '\n';
      }
    }
  }
}

int summarize(const VerificationReport& rep) {
  for (const auto& s : rep.suites) {
    for (const auto& c : s.checks) {
      if (!c.pass) {
        std::cerr << "FAIL " << c.name << "  residual " << c.residual << " > " << c.tolerance << "  [" << c.anchor << "]";
        if (!c.detail.empty()) std::cerr << "  " << c.detail;
        std::cerr << '\n';
      }
    }
    std::cout << (s.pass() ? "PASS " : "FAIL ") << s.name << "  checks " << s.checks.size() << "  max residual "
              << s.maxResidual() << '\n';
  }
  std::cout << (rep.pass() ? "all checks passed" : "verification failed") << '\n';
  return rep.pass() ? 0 : 1;
}

void writeGeodesyPlots(const RunConfig& cfg) {
  std::vector<double> rs, lap, logA;
  std::vector<std::vector<double>> lapRows, areaRows;
  for (int i = 1; i <= 400; ++i) {
    const double r = 0.025 * i;
    rs.push_back(r);
    lap.push_back(laplacianDistance(r));
    logA.push_back(logArea(r));
    lapRows.push_back({r, lap.back()});
    areaRows.push_back({r, logA.back()});
  }
  writeCsv(cfg.outDir / "laplacian.csv", {"r", "laplacian"}, lapRows);
  writeCsv(cfg.outDir / "logarea.csv", {"r", "log_area"}, areaRows);
  writeLineChartSvg(cfg.outDir / "laplacian.svg", "Laplacian of the distance function", "r", "14 coth 2r + 8 coth r", rs,
                    lap);
  writeLineChartSvg(cfg.outDir / "logarea.svg", "Log area of geodesic spheres", "r", "log A(r)", rs, logA);
}

void writeSpectrumFiles(const std::vector<SpectrumSweepRow>& rows, const RunConfig& cfg) {
  std::vector<std::vector<double>> table;
  for (const auto& r : rows) table.push_back({r.radius, static_cast<double>(r.grid), r.lambda, r.extrapolated});
  writeCsv(cfg.outDir / "spectrum.csv", {"R", "N", "lambda", "extrapolated"}, table);
  int finest = 0;
  for (const auto& r : rows) finest = std::max(finest, r.grid);
  std::vector<double> xs, ys;
  for (const auto& r : rows) {
    if (r.grid == finest) {
      xs.push_back(r.radius);
      ys.push_back(r.extrapolated);
    }
  }
  writeLineChartSvg(cfg.outDir / "spectrum.svg", "Bottom of the Dirichlet spectrum", "R", "lambda(R), extrapolated", xs,
                    ys);
}

int cmdVerify(const std::string& which, const RunConfig& cfg) {
  std::vector<std::string> names;
  if (which == "all") {
    names = suiteNames();
  } else {
    names = {which};
  }
  const VerificationReport rep = runSuites(names, cfg, "verify " + which);
  writeReport(rep, cfg);
  for (const auto& s : rep.suites) {
    if (s.name != "geodesy") continue;
    writeGeodesyPlots(cfg);
    std::vector<SpectrumSweepRow> rows;
    for (const auto& r : s.data.at("spectrum")) {
      rows.push_back({r.at("R").get<double>(), r.at("N").get<int>(), r.at("lambda").get<double>(),
                      r.at("extrapolated").get<double>()});
    }
    writeSpectrumFiles(rows, cfg);
  }
  return summarize(rep);
}

VerificationReport singleSuiteReport(SuiteRecord s, const RunConfig& cfg, const std::string& command) {
  VerificationReport rep;
  rep.command = command;
  rep.config = cfg;
  rep.suites.push_back(std::move(s));
  return rep;
}

int cmdSpectrum(const RunConfig& cfg) {
  auto radii = cfg.radii;
  std::sort(radii.begin(), radii.end());
  auto grids = cfg.grids;
  std::sort(grids.begin(), grids.end());
  const auto rows = spectrumSweep(radii, grids, cfg.parallel);
  std::filesystem::create_directories(cfg.outDir);
  writeSpectrumFiles(rows, cfg);

  SuiteRecord s;
  s.name = "spectrum";
  s.seed = cfg.seed;
  double rise = 0.0, below = 0.0;
  for (std::size_t g = 0; g < grids.size(); ++g) {
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
      rise = std::max(rise, rows[(i + 1) * grids.size() + g].lambda - rows[i * grids.size() + g].lambda);
    }
  }
  for (const auto& r : rows) below = std::max(below, (121.0 - r.extrapolated) / 121.0);
  s.check("monotone", "lambda(R) nonincreasing in R", std::max(rise, 0.0), 0.0);
  s.check("lower_bound", "lambda(R) >= 121", std::max(below, 0.0), cfg.spectralTol);
  nlohmann::json table = nlohmann::json::array();
  std::cout << "R,N,lambda,extrapolated\n";
  for (const auto& r : rows) {
    std::cout << r.radius << ',' << r.grid << ',' << std::setprecision(10) << r.lambda << ',' << r.extrapolated << '\n';
    table.push_back({{"R", r.radius}, {"N", r.grid}, {"lambda", r.lambda}, {"extrapolated", r.extrapolated}});
  }
  s.data["spectrum"] = table;
  const auto rep = singleSuiteReport(std::move(s), cfg, "spectrum");
  writeReport(rep, cfg);
  return summarize(rep);
}

int cmdPinch(const RunConfig& cfg) {
  const CurvatureOperator r = assemble();
  if (cfg.exportOperator) {
    std::ofstream os(*cfg.exportOperator);
    r.writeCsv(os);
  }
  PinchOptions po;
  po.starts = cfg.pinchStarts;
  po.seed = suiteSeed(cfg.seed, "pinch");
  po.parallel = cfg.parallel;
  const PinchResult res = pinchExtremes(r, po);
  std::filesystem::create_directories(cfg.outDir);
  std::vector<std::vector<double>> rows;
  for (std::size_t k = 0; k < res.descentValues.size(); ++k) {
    rows.push_back({static_cast<double>(k), res.descentValues[k], -1.0});
    rows.push_back({static_cast<double>(k), res.ascentValues[k], 1.0});
  }
  writeCsv(cfg.outDir / "pinch.csv", {"trial", "K", "direction"}, rows);

  SuiteRecord s;
  s.name = "pinch";
  s.seed = po.seed;
  s.check("min", "min K = -4", std::fabs(res.min.value + 4.0), 1e-6);
  s.check("max", "max K = -1", std::fabs(res.max.value + 1.0), 1e-6);
  s.data = {{"min", res.min.value}, {"max", res.max.value}, {"starts", po.starts}};
  std::cout << std::setprecision(12) << "min K " << res.min.value << "\nmax K " << res.max.value << '\n';
  const auto rep = singleSuiteReport(std::move(s), cfg, "pinch");
  writeReport(rep, cfg);
  return summarize(rep);
}

int cmdReport(const RunConfig& cfg) {
  const auto file = cfg.outDir / "report.json";
  std::ifstream in(file);
  if (!in) {
    std::cerr << "no report at " << file << '\n';
    return 1;
  }
  const auto j = nlohmann::json::parse(in);
  if (j.value("schema", 0) != 1) {
    std::cerr << "unsupported report schema\n";
    return 1;
  }
  if (cfg.format == "csv") {
    std::cout << "suite,check,residual,tolerance,pass\n";
  }
  for (const auto& s : j.at("suites")) {
    for (const auto& c : s.at("checks")) {
      if (cfg.format == "csv") {
        std::cout << s.at("name").get<std::string>() << ',' << c.at("name").get<std::string>() << ','
                  << c.at("residual").dump() << ',' << c.at("tolerance").dump() << ','
                  << (c.at("pass").get<bool>() ? "true" : "false") << '\n';
      } else {
        std::cout << (c.at("pass").get<bool>() ? "pass " : "FAIL ") << c.at("name").get<std::string>() << "  "
                  << c.at("residual").dump() << "  [" << c.at("anchor").get<std::string>() << "]\n";
      }
    }
  }
  return j.at("pass").get<bool>() ? 0 : 1;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Property-based verifier for the geometry of the Cayley hyperbolic plane", "cayley-verify"};
  app.set_version_flag("--version", std::string(kToolkitVersion));
  app.require_subcommand(1);

  Flags verifyFlags, spectrumFlags, pinchFlags, reportFlags;
  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", suite, "all or one suite")
      ->check(CLI::IsMember({"all", "octonion", "exterior", "curvature", "geodesy", "forms", "kernels"}));
  addCommonFlags(verify, verifyFlags);
  auto* spectrum = app.add_subcommand("spectrum", "bottom-of-spectrum sweep over radii and grids");
  addCommonFlags(spectrum, spectrumFlags);
  auto* pinch = app.add_subcommand("pinch", "extremal sectional curvature search");
  addCommonFlags(pinch, pinchFlags);
  auto* report = app.add_subcommand("report", "summarize an existing report.json");
  addCommonFlags(report, reportFlags);

  RunConfig cfg;
  try {
    app.parse(argc, argv);
    const Flags& f = verify->parsed() ? verifyFlags : spectrum->parsed() ? spectrumFlags
                                                   : pinch->parsed()    ? pinchFlags
                                                                        : reportFlags;
    cfg = buildConfig(f);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n' << app.help();
    return 2;
  }

  try {
    if (verify->parsed()) return cmdVerify(suite, cfg);
    if (spectrum->parsed()) return cmdSpectrum(cfg);
    if (pinch->parsed()) return cmdPinch(cfg);
    return cmdReport(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace cayley::cli
