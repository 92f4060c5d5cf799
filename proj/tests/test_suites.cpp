#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cayley/suites.hpp"

using namespace cayley;

namespace {

RunConfig quick() {
  RunConfig cfg;
  cfg.trials = 50;
  cfg.radii = {4.0, 6.0};
  cfg.grids = {400, 800};
  cfg.pinchStarts = 3;
  return cfg;
}

}  // namespace

TEST(Suites, ListParsing) {
  EXPECT_EQ(parseDoubleList("4, 6,8.5"), (std::vector<double>{4.0, 6.0, 8.5}));
  EXPECT_EQ(parseIntList("2000,4000"), (std::vector<int>{2000, 4000}));
  EXPECT_THROW(parseIntList("20x"), std::invalid_argument);
}

TEST(Suites, ConfigFileOverridesDefaults) {
  RunConfig cfg;
  applyConfigFile(cfg, std::string(CAYLEY_FIXTURE_DIR) + "/small.cfg");
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_EQ(*cfg.trials, 200);
  EXPECT_EQ(cfg.radii, (std::vector<double>{4.0, 6.0}));
  EXPECT_EQ(cfg.pinchStarts, 4);
  EXPECT_THROW(applyConfigValue(cfg, "colour", "blue"), std::invalid_argument);
  EXPECT_THROW(applyConfigFile(cfg, "/nonexistent/file.cfg"), std::invalid_argument);
}

TEST(Suites, ValidateRejectsBadConfig) {
  RunConfig cfg;
  cfg.identityTol = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.grids = {50};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = RunConfig{};
  cfg.format = "xml";
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Suites, SeedsDifferPerSuite) {
  EXPECT_EQ(suiteSeed(42, "forms"), suiteSeed(42, "forms"));
  EXPECT_NE(suiteSeed(42, "forms"), suiteSeed(42, "kernels"));
  EXPECT_NE(suiteSeed(42, "forms"), suiteSeed(43, "forms"));
}

TEST(Suites, ReportIsDeterministicOutsideTiming) {
  const RunConfig cfg = quick();
  auto a = runSuites({"octonion", "forms", "curvature"}, cfg, "verify").toJson();
  auto b = runSuites({"octonion", "forms", "curvature"}, cfg, "verify").toJson();
  ASSERT_TRUE(a.contains("timing"));
  EXPECT_EQ(a["schema"], 1);
  a.erase("timing");
  b.erase("timing");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Suites, ParallelMatchesSequential) {
  RunConfig cfg = quick();
  auto a = runSuites({"octonion", "geodesy"}, cfg, "verify").toJson();
  cfg.parallel = true;
  auto b = runSuites({"octonion", "geodesy"}, cfg, "verify").toJson();
  a.erase("timing");
  b.erase("timing");
  a.erase("config");
  b.erase("config");
  EXPECT_EQ(a.dump(), b.dump());
}

TEST(Suites, EveryCheckCarriesAnAnchor) {
  const auto rep = runSuites({"kernels"}, quick(), "verify");
  for (const auto& s : rep.suites) {
    for (const auto& c : s.checks) {
      EXPECT_FALSE(c.anchor.empty()) << c.name;
      EXPECT_EQ(c.name.rfind(s.name + ".", 0), 0u) << c.name;
    }
  }
  EXPECT_TRUE(rep.pass());
}

TEST(Suites, CorruptedTableFailsNamedCheck) {
  RunConfig cfg = quick();
  cfg.tablePath = std::string(CAYLEY_FIXTURE_DIR) + "/corrupted_table.txt";
  const SuiteRecord s = runOctonionSuite(cfg);
  EXPECT_FALSE(s.pass());
  ASSERT_FALSE(s.checks.empty());
  EXPECT_EQ(s.checks.front().name, "octonion.table_rules");
  EXPECT_FALSE(s.checks.front().pass);
}

TEST(Suites, CanonicalFixtureTablePasses) {
  RunConfig cfg = quick();
  cfg.tablePath = std::string(CAYLEY_FIXTURE_DIR) + "/canonical_table.txt";
  EXPECT_TRUE(runOctonionSuite(cfg).pass());
}

TEST(Suites, UnknownSuiteRejected) { EXPECT_THROW(runSuite("topology", quick()), std::invalid_argument); }

TEST(Suites, NonFiniteResidualFails) {
  SuiteRecord s;
  s.name = "x";
  s.check("nan", "anchor", std::nan(""), 1.0);
  EXPECT_FALSE(s.pass());
}
