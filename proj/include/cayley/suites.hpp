#pragma once

// Verification suites: each runs a family of seeded property checks against
// one module and records residuals against tolerances.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cayley/geodesy.hpp"
#include "cayley/octonion.hpp"
#include "json.hpp"

namespace cayley {

inline constexpr const char* kToolkitVersion = "0.1.0";

struct RunConfig {
  std::uint64_t seed = 42;
  double identityTol = 1e-12;
  double numericTol = 1e-8;
  double spectralTol = 5e-3;
  /// Overrides every suite's default random-trial count when set.
  std::optional<int> trials;
  std::vector<double> radii{4.0, 6.0, 8.0, 10.0};
  std::vector<int> grids{2000, 4000, 8000};
  int pinchStarts = 64;
  std::filesystem::path outDir = ".";
  bool parallel = false;
  std::string format = "json";
  /// Octonion table used in place of the canonical one.
  std::optional<std::filesystem::path> tablePath;
  std::optional<std::filesystem::path> exportOperator;

  int trialsOr(int fallback) const { return trials ? *trials : fallback; }
  /// Throws std::invalid_argument on non-positive tolerances or trial counts.
  void validate() const;
  nlohmann::json toJson() const;
};

/// Applies `key = value` lines ('#' comments) from a config file. Unknown keys
/// throw std::invalid_argument.
void applyConfigFile(RunConfig& cfg, const std::filesystem::path& file);
void applyConfigValue(RunConfig& cfg, const std::string& key, const std::string& value);

std::vector<double> parseDoubleList(const std::string& csv);
std::vector<int> parseIntList(const std::string& csv);

struct CheckRecord {
  std::string name;
  std::string anchor;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string detail;

  nlohmann::json toJson() const;
};

struct SuiteRecord {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<CheckRecord> checks;
  nlohmann::json data;  // suite-specific results (constraint sets, kernel results, ...)
  double wallSeconds = 0.0;

  bool pass() const;
  double maxResidual() const;
  /// Adds a check that passes iff residual is finite and <= tolerance.
  CheckRecord& check(std::string name, std::string anchor, double residual, double tolerance, std::string detail = {});
  /// Adds a boolean check (residual 0 or 1, tolerance 0).
  CheckRecord& require(std::string name, std::string anchor, bool ok, std::string detail = {});
  nlohmann::json toJson() const;
};

const std::vector<std::string>& suiteNames();

std::uint64_t suiteSeed(std::uint64_t master, const std::string& suite);

/// Octonion table from cfg.tablePath, or the canonical table.
MultiplicationTable loadTable(const RunConfig& cfg);

SuiteRecord runOctonionSuite(const RunConfig& cfg);
SuiteRecord runExteriorSuite(const RunConfig& cfg);
SuiteRecord runCurvatureSuite(const RunConfig& cfg);
SuiteRecord runGeodesySuite(const RunConfig& cfg);
SuiteRecord runFormsSuite(const RunConfig& cfg);
SuiteRecord runKernelsSuite(const RunConfig& cfg);
/// Dispatches by name; throws std::invalid_argument for unknown suites.
SuiteRecord runSuite(const std::string& name, const RunConfig& cfg);

struct VerificationReport {
  std::string command;
  RunConfig config;
  std::vector<SuiteRecord> suites;
  std::string startedAt;
  double wallSeconds = 0.0;

  bool pass() const;
  /// Every wall-clock quantity lives under the single "timing" key.
  nlohmann::json toJson() const;
};

/// Runs the named suites (sequentially, or concurrently with cfg.parallel);
/// the suite order in the report follows `names`.
VerificationReport runSuites(const std::vector<std::string>& names, const RunConfig& cfg, const std::string& command);

/// Rows of the spectrum sweep, one per (R, N).
struct SpectrumSweepRow {
  double radius;
  int grid;
  double lambda;
  double extrapolated;
};
std::vector<SpectrumSweepRow> spectrumSweep(const std::vector<double>& radii, const std::vector<int>& grids,
                                            bool parallel = false);

}  // namespace cayley
