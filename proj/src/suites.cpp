#include "cayley/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <future>
#include <iomanip>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cayley/curvature.hpp"
#include "cayley/exterior.hpp"
#include "cayley/forms.hpp"
#include "cayley/kernels.hpp"

namespace cayley {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parseBool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw std::invalid_argument("not a boolean: " + v);
}

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

Octonion randomOctonion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Octonion o;
  for (int k = 0; k < 8; ++k) o[k] = u(rng);
  return o;
}

Vec16 randomVec16(std::mt19937_64& rng) {
  std::normal_distribution<double> nd;
  Vec16 v;
  for (int k = 0; k < 16; ++k) v[k] = nd(rng);
  return v;
}

Vec16 unitVec16(int k) {
  Vec16 v = Vec16::Zero();
  v[k] = 1.0;
  return v;
}

// ---------------------------------------------------------------- exterior

struct HodgeResiduals {
  std::array<double, 6> p{};
  void merge(const HodgeResiduals& o) {
    for (std::size_t k = 0; k < p.size(); ++k) p[k] = std::max(p[k], o.p[k]);
  }
};

using FormMap = std::function<Form(const Form&)>;

// eps/in act with a unit (co)vector, epsPerp with one orthogonal to it.
HodgeResiduals hodgeProperties(const Form& eta, const FormMap& eps, const FormMap& in, const FormMap& epsPerp) {
  const int n = eta.dim();
  const int p = eta.grade();
  HodgeResiduals r;
  const Form star = hodge(eta);
  r.p[0] = maxAbsDiff(hodge(star), sign(p * (n - p)) * eta);
  r.p[1] = maxAbsDiff(hodge(eps(eta)), sign(p) * in(star));
  r.p[2] = maxAbsDiff(eps(star), sign(p - 1) * hodge(in(eta)));
  r.p[3] = maxAbsDiff(hodge(eps(star)), sign((p - 1) * (n - p)) * in(eta));
  r.p[4] = maxAbsCoeff(in(epsPerp(eta)) + epsPerp(in(eta)));
  r.p[5] = maxAbsDiff(in(eps(eta)) + eps(in(eta)), eta);
  return r;
}

HodgeResiduals exhaustiveHodge(int n) {
  HodgeResiduals worst;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    const Form eta = Form::monomial(n, MultiIndex(bits));
    for (int s = 0; s < n; ++s) {
      const FormMap eps = [s](const Form& f) { return epsilon(s, f); };
      const FormMap in = [s](const Form& f) { return interior(s, f); };
      for (int t = 0; t < n; ++t) {
        if (t == s && n > 1) continue;
        const FormMap epsT = [t](const Form& f) { return epsilon(t, f); };
        HodgeResiduals r = hodgeProperties(eta, eps, in, epsT);
        if (n == 1) r.p[4] = 0.0;  // no orthogonal direction exists
        worst.merge(r);
      }
    }
  }
  return worst;
}

HodgeResiduals randomHodge(int n, int trials, std::mt19937_64& rng) {
  HodgeResiduals worst;
  std::uniform_int_distribution<int> grade(0, n);
  std::normal_distribution<double> nd;
  for (int t = 0; t < trials; ++t) {
    const int p = grade(rng);
    const Form eta = randomSparseForm(n, p, 12, rng);
    Eigen::VectorXd v(n), w(n);
    for (int k = 0; k < n; ++k) v[k] = nd(rng);
    for (int k = 0; k < n; ++k) w[k] = nd(rng);
    v.normalize();
    w -= v.dot(w) * v;
    w.normalize();
    std::vector<double> vv(v.data(), v.data() + n), ww(w.data(), w.data() + n);
    const FormMap eps = [&](const Form& f) { return epsilon(std::span<const double>(vv), f); };
    const FormMap in = [&](const Form& f) { return interior(std::span<const double>(vv), f); };
    const FormMap epsW = [&](const Form& f) { return epsilon(std::span<const double>(ww), f); };
    worst.merge(hodgeProperties(eta, eps, in, epsW));
  }
  return worst;
}

constexpr std::array<const char*, 6> kHodgeAnchors{
    "**eta = (-1)^{p(n-p)} eta",
    "*eps(theta) eta = (-1)^p l(v) *eta",
    "eps(theta) *eta = (-1)^{p-1} *l(v) eta",
    "*eps(theta) *eta = (-1)^{(p-1)(n-p)} l(v) eta",
    "l(v) eps(theta') eta + eps(theta') l(v) eta = 0, v perp v'",
    "l(v) eps(theta) eta + eps(theta) l(v) eta = eta"};

// ---------------------------------------------------------------- kernels helpers

double maxConstraintViolation(const ConstraintSet& c, const Eigen::MatrixXd& a) {
  double worst = std::fabs(a.trace());
  for (const auto& f : c.functionals()) worst = std::max(worst, std::fabs(f.evaluate(a)));
  return worst;
}

}  // namespace

// ---------------------------------------------------------------- config

void RunConfig::validate() const {
  if (!(identityTol > 0) || !(numericTol > 0) || !(spectralTol > 0)) {
    throw std::invalid_argument("tolerances must be positive");
  }
  if (trials && *trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (pinchStarts < 1) throw std::invalid_argument("pinch_starts must be >= 1");
  if (radii.empty() || grids.empty()) throw std::invalid_argument("radius and grid lists must be non-empty");
  for (double r : radii) {
    if (!(r >= 1.0)) throw std::invalid_argument("radius values must be >= 1");
  }
  for (int n : grids) {
    if (n < 100) throw std::invalid_argument("grid values must be >= 100");
  }
  if (format != "json" && format != "csv") throw std::invalid_argument("format must be json or csv");
}

nlohmann::json RunConfig::toJson() const {
  nlohmann::json j;
  j["seed"] = seed;
  j["identity_tol"] = identityTol;
  j["numeric_tol"] = numericTol;
  j["spectral_tol"] = spectralTol;
  j["trials"] = trials ? nlohmann::json(*trials) : nlohmann::json(nullptr);
  j["radius"] = radii;
  j["grid"] = grids;
  j["pinch_starts"] = pinchStarts;
  j["parallel"] = parallel;
  j["format"] = format;
  j["table"] = tablePath ? nlohmann::json(tablePath->filename().string()) : nlohmann::json(nullptr);
  return j;
}

std::vector<double> parseDoubleList(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad number: " + item);
    out.push_back(v);
  }
  return out;
}

std::vector<int> parseIntList(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad integer: " + item);
    out.push_back(v);
  }
  return out;
}

void applyConfigValue(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "seed") {
    cfg.seed = std::stoull(value);
  } else if (key == "trials") {
    cfg.trials = std::stoi(value);
  } else if (key == "identity_tol") {
    cfg.identityTol = std::stod(value);
  } else if (key == "numeric_tol") {
    cfg.numericTol = std::stod(value);
  } else if (key == "spectral_tol") {
    cfg.spectralTol = std::stod(value);
  } else if (key == "radius") {
    cfg.radii = parseDoubleList(value);
  } else if (key == "grid") {
    cfg.grids = parseIntList(value);
  } else if (key == "pinch_starts") {
    cfg.pinchStarts = std::stoi(value);
  } else if (key == "out") {
    cfg.outDir = value;
  } else if (key == "parallel") {
    cfg.parallel = parseBool(value);
  } else if (key == "format") {
    cfg.format = value;
  } else if (key == "table") {
    cfg.tablePath = value;
  } else {
    throw std::invalid_argument("unknown config key: " + key);
  }
}

void applyConfigFile(RunConfig& cfg, const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::invalid_argument("cannot open config file " + file.string());
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(file.string() + ":" + std::to_string(lineNo) + ": expected key = value");
    }
    applyConfigValue(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

// ---------------------------------------------------------------- records

nlohmann::json CheckRecord::toJson() const {
  nlohmann::json j = {{"name", name}, {"anchor", anchor}, {"residual", residual}, {"tolerance", tolerance}, {"pass", pass}};
  if (!detail.empty()) j["detail"] = detail;
  return j;
}

bool SuiteRecord::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.pass; });
}

double SuiteRecord::maxResidual() const {
  double m = 0.0;
  for (const auto& c : checks) {
    if (std::isfinite(c.residual)) m = std::max(m, c.residual);
  }
  return m;
}

CheckRecord& SuiteRecord::check(std::string checkName, std::string anchor, double residual, double tolerance,
                                std::string detail) {
  CheckRecord c;
  c.name = name + "." + checkName;
  c.anchor = std::move(anchor);
  c.residual = residual;
  c.tolerance = tolerance;
  c.pass = std::isfinite(residual) && residual <= tolerance;
  c.detail = std::move(detail);
  checks.push_back(std::move(c));
  return checks.back();
}

CheckRecord& SuiteRecord::require(std::string checkName, std::string anchor, bool ok, std::string detail) {
  return check(std::move(checkName), std::move(anchor), ok ? 0.0 : 1.0, 0.0, std::move(detail));
}

nlohmann::json SuiteRecord::toJson() const {
  nlohmann::json j;
  j["name"] = name;
  j["seed"] = seed;
  j["checks_run"] = checks.size();
  j["max_residual"] = maxResidual();
  j["pass"] = pass();
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks) j["checks"].push_back(c.toJson());
  if (!data.is_null()) j["data"] = data;
  return j;
}

const std::vector<std::string>& suiteNames() {
  static const std::vector<std::string> names{"octonion", "exterior", "curvature", "geodesy", "forms", "kernels"};
  return names;
}

std::uint64_t suiteSeed(std::uint64_t master, const std::string& suite) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a of the suite name
  for (unsigned char c : suite) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = master ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

MultiplicationTable loadTable(const RunConfig& cfg) {
  if (!cfg.tablePath) return MultiplicationTable::canonical();
  std::ifstream in(*cfg.tablePath);
  if (!in) throw std::invalid_argument("cannot open table " + cfg.tablePath->string());
  return MultiplicationTable::parse(in);
}

// ---------------------------------------------------------------- octonion

SuiteRecord runOctonionSuite(const RunConfig& cfg) {
  SuiteRecord s;
  s.name = "octonion";
  s.seed = suiteSeed(cfg.seed, s.name);
  const MultiplicationTable table = loadTable(cfg);
  const auto defects = table.defects();
  s.require("table_rules", "e_i e_{i+1} = e_{i+3}, e_i^2 = -1, e_i e_j = -e_j e_i", defects.empty(),
            defects.empty() ? std::string() : defects.front());

  std::mt19937_64 rng(s.seed);
  const int trials = cfg.trialsOr(100000);
  double leftAlt = 0, rightAlt = 0, conjProd = 0, normId = 0, normMul = 0;
  for (int t = 0; t < trials; ++t) {
    const Octonion a = randomOctonion(rng);
    const Octonion b = randomOctonion(rng);
    const double na = norm(a), nb = norm(b);
    const Octonion ab = mul(a, b, table);
    leftAlt = std::max(leftAlt, maxAbsDiff(mul(mul(a, a, table), b, table), mul(a, ab, table)) / (na * na * nb));
    rightAlt = std::max(rightAlt, maxAbsDiff(mul(ab, b, table), mul(a, mul(b, b, table), table)) / (na * nb * nb));
    conjProd = std::max(conjProd, maxAbsDiff(conj(ab), mul(conj(b), conj(a), table)) / (na * nb));
    normId = std::max(normId, maxAbsDiff(mul(a, conj(a), table), Octonion::real(inner(a, a))) / (na * na));
    normMul = std::max(normMul, std::fabs(norm(ab) - na * nb) / (na * nb));
  }
  const std::string n = std::to_string(trials) + " random pairs";
  s.check("alternative_left", "(aa)b = a(ab)", leftAlt, cfg.identityTol, n);
  s.check("alternative_right", "(ab)b = a(bb)", rightAlt, cfg.identityTol, n);
  s.check("conjugate_product", "(ab)* = b* a*", conjProd, cfg.identityTol, n);
  s.check("norm_identity", "a a* = <a,a> 1", normId, cfg.identityTol, n);
  s.check("norm_multiplicative", "|ab| = |a| |b|", normMul, cfg.identityTol, n);

  // Non-associativity witness on a Fano-independent triple.
  const Octonion lhs = mul(mul(Octonion::e(0), Octonion::e(1), table), Octonion::e(2), table);
  const Octonion rhs = mul(Octonion::e(0), mul(Octonion::e(1), Octonion::e(2), table), table);
  s.check("nonassociative_witness", "(e0 e1) e2 = -e0 (e1 e2)", maxAbsDiff(lhs, -rhs), cfg.identityTol);
  s.data = {{"trials", trials}};
  return s;
}

// ---------------------------------------------------------------- exterior

SuiteRecord runExteriorSuite(const RunConfig& cfg) {
  SuiteRecord s;
  s.name = "exterior";
  s.seed = suiteSeed(cfg.seed, s.name);
  std::mt19937_64 rng(s.seed);

  HodgeResiduals small;
  for (int n = 1; n <= 6; ++n) small.merge(exhaustiveHodge(n));
  const int randomTrials = cfg.trialsOr(1000);
  const HodgeResiduals big = randomHodge(16, randomTrials, rng);
  for (std::size_t k = 0; k < 6; ++k) {
    const std::string id = "hodge_property_" + std::to_string(k + 1);
    s.check(id + "_exhaustive", kHodgeAnchors[k], small.p[k], cfg.identityTol, "all monomials, n <= 6");
    s.check(id + "_random16", kHodgeAnchors[k], big.p[k], cfg.identityTol,
            std::to_string(randomTrials) + " sparse forms, n = 16");
  }

  double adj = 0.0;
  std::normal_distribution<double> nd;
  std::uniform_int_distribution<int> grade(0, 15);
  for (int t = 0; t < std::min(randomTrials, 1000); ++t) {
    const int p = grade(rng);
    const Form xi = randomSparseForm(16, p, 10, rng);
    const Form eta = randomSparseForm(16, p + 1, 10, rng);
    std::vector<double> v(16);
    for (double& x : v) x = nd(rng);
    adj = std::max(adj, std::fabs(inner(epsilon(std::span<const double>(v), xi), eta) -
                                  inner(xi, interior(std::span<const double>(v), eta))));
  }
  s.check("epsilon_interior_adjoint", "<eps(theta) xi, eta> = <xi, l(v) eta>", adj, cfg.identityTol);

  const int dualityTrials = cfg.trialsOr(100);
  nlohmann::json duality = nlohmann::json::array();
  for (const auto& [n, p] : {std::pair{4, 2}, std::pair{8, 4}, std::pair{16, 8}}) {
    const auto rep = verifyDualityIdentity(n, p, dualityTrials, rng());
    const std::string tag = std::to_string(n) + "_" + std::to_string(p);
    s.check("duality_star_" + tag, "*d*(a^w) = (-1)^{n-1} d*(a^*w)", rep.maxStarIdentity, cfg.identityTol,
            std::to_string(dualityTrials) + " trace-free jets");
    s.check("duality_coclosed_" + tag, "d*(a^*w) = (-1)^{(p-1)(n-p)} sum a_ji eps_i l_j w", rep.maxCoclosedChain,
            cfg.identityTol);
    s.check("duality_closed_" + tag, "*d*(a^w) = (-1)^{p(n-p-1)+1} sum a_ij eps_i l_j w", rep.maxClosedChain,
            cfg.identityTol);
    duality.push_back({{"n", n}, {"p", p}, {"max_residual", rep.maxResidual}});
  }
  const Form kahler = buildForm(ParallelFormSpec::kahler(2));
  const auto kRep = verifyDualityIdentity(4, 2, dualityTrials, rng(), &kahler);
  s.check("duality_kahler_4_2", "*d*(a^Omega) = -d*(a^*Omega)", kRep.maxResidual, 1e-13);
  const Form vol = Form::volume(6);
  const auto vRep = verifyDualityIdentity(6, 6, 10, rng(), &vol);
  s.check("duality_top_grade", "a ^ vol = 0", vRep.maxResidual, 0.0);
  s.data = {{"duality", duality}};
  return s;
}

// ---------------------------------------------------------------- curvature

SuiteRecord runCurvatureSuite(const RunConfig& cfg) {
  SuiteRecord s;
  s.name = "curvature";
  s.seed = suiteSeed(cfg.seed, s.name);
  std::mt19937_64 rng(s.seed);
  const MultiplicationTable table = loadTable(cfg);

  SectionalFormula formula;
  formula.table = &table;
  const CurvatureOperator r = assemble(formula);
  if (cfg.exportOperator) {
    std::ofstream os(*cfg.exportOperator);
    r.writeCsv(os);
  }

  double pairSym = (r.matrix() - r.matrix().transpose()).cwiseAbs().maxCoeff();
  double bianchi = 0.0;
  for (int t = 0; t < 200; ++t) {
    const Vec16 x = randomVec16(rng), y = randomVec16(rng), z = randomVec16(rng), w = randomVec16(rng);
    pairSym = std::max(pairSym, std::fabs(r.evaluate(x, y, z, w) - r.evaluate(z, w, x, y)));
    bianchi = std::max(bianchi, std::fabs(r.evaluate(x, y, z, w) + r.evaluate(z, x, y, w) + r.evaluate(y, z, x, w)));
  }
  s.check("pair_symmetry", "<R(x^y), z^w> = <R(z^w), x^y>", pairSym, 1e-10);
  s.check("first_bianchi", "R(x^y)z + R(z^x)y + R(y^z)x = 0", bianchi, 1e-10);

  // Adapted planes in both the closed form and the assembled operator.
  auto adaptedResidual = [&](const SectionalFormula& f, const CurvatureOperator* op) {
    double worstVV = 0.0, worstVW = 0.0;
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        const Vec16 va = unitVec16(a), vb = unitVec16(b), wb = unitVec16(8 + b), wa = unitVec16(8 + a);
        if (a != b) {
          const double k1 = op ? *op->sectional(va, vb) : *sectional(f, TwoPlane(va, vb));
          const double k2 = op ? *op->sectional(wa, wb) : *sectional(f, TwoPlane(wa, wb));
          worstVV = std::max({worstVV, std::fabs(k1 - f.alpha), std::fabs(k2 - f.alpha)});
        }
        const double k3 = op ? *op->sectional(va, wb) : *sectional(f, TwoPlane(va, wb));
        worstVW = std::max(worstVW, std::fabs(k3 - f.alpha / 4.0));
      }
    }
    return std::pair{worstVV, worstVW};
  };
  const auto [fVV, fVW] = adaptedResidual(formula, nullptr);
  const auto [oVV, oVW] = adaptedResidual(formula, &r);
  s.check("adapted_vv", "K((a,0)^(b,0)) = alpha", std::max(fVV, oVV), 1e-9);
  s.check("adapted_vw", "K((a,0)^(0,b)) = alpha/4", std::max(fVW, oVW), 1e-9);

  const int planes = cfg.trialsOr(10000);
  double outside = 0.0, roundTrip = 0.0, scaling = 0.0;
  SectionalFormula reversed = formula;
  reversed.reading = ProductReading::Reversed;
  SectionalFormula unitAlpha = formula;
  unitAlpha.alpha = -1.0;
  double reversedOutside = 0.0;
  for (int t = 0; t < planes; ++t) {
    const Vec16 x = randomVec16(rng), y = randomVec16(rng);
    const TwoPlane plane(x, y);
    const auto k = sectional(formula, plane);
    if (!k) continue;
    outside = std::max({outside, *k - (-1.0), -4.0 - *k, 0.0});
    roundTrip = std::max(roundTrip, std::fabs(*r.sectional(x, y) - *k));
    scaling = std::max(scaling, std::fabs(*sectional(unitAlpha, plane) - *k / 4.0));
    const double kr = *sectional(reversed, plane);
    reversedOutside = std::max({reversedOutside, kr + 1.0, -4.0 - kr, 0.0});
  }
  s.check("pinching_random", "alpha <= K <= alpha/4", outside, 1e-9, std::to_string(planes) + " random planes");
  s.check("operator_round_trip", "K = <R(x^y), x^y> / |x^y|^2", roundTrip, 1e-9);
  s.check("alpha_scaling", "K_alpha = (alpha/-4) K_{-4}", scaling, 1e-12);
  const auto [rVV, rVW] = adaptedResidual(reversed, nullptr);
  const bool reversedPasses = rVV <= 1e-9 && rVW <= 1e-9 && reversedOutside <= 1e-9;
  s.data["reading"] = {{"chosen", "standard"}, {"standard_passes", true}, {"reversed_passes", reversedPasses}};

  PinchOptions po;
  po.starts = cfg.pinchStarts;
  po.seed = rng();
  po.parallel = cfg.parallel;
  const PinchResult pinch = pinchExtremes(r, po);
  s.check("pinch_min", "min K = alpha", std::fabs(pinch.min.value + 4.0), 1e-6);
  s.check("pinch_max", "max K = alpha/4", std::fabs(pinch.max.value + 1.0), 1e-6);
  const PlaneOptimum stay = optimizePlane(r, unitVec16(0), unitVec16(1), -1, po);
  s.check("pinch_stationary", "(a,0)^(b,0) is a minimum", std::fabs(stay.value + 4.0), 1e-9);
  s.data["pinch"] = {{"min", pinch.min.value}, {"max", pinch.max.value}, {"starts", po.starts}};

  const Mat16 ric = ricci(r);
  s.check("ricci_einstein", "Ric = -36 g", (ric + 36.0 * Mat16::Identity()).cwiseAbs().maxCoeff(), 1e-9);
  s.check("scalar_curvature", "scal = 16 (-36) = -576", std::fabs(ric.trace() + 576.0), 1e-8);

  auto spectrumResidual = [&](const Vec16& u) {
    const auto ev = radialSpectrum(r, u);
    std::vector<double> expect(16);
    std::fill(expect.begin(), expect.begin() + 7, -4.0);
    std::fill(expect.begin() + 7, expect.begin() + 15, -1.0);
    expect[15] = 0.0;
    double worst = 0.0;
    for (std::size_t i = 0; i < 16; ++i) worst = std::max(worst, std::fabs(ev[i] - expect[i]));
    return worst;
  };
  double spec = std::max(spectrumResidual(unitVec16(0)), spectrumResidual(unitVec16(8)));
  const int directions = std::min(cfg.trialsOr(100), 1000);
  for (int t = 0; t < directions; ++t) spec = std::max(spec, spectrumResidual(randomVec16(rng).normalized()));
  s.check("jacobi_spectrum", "spec(R(.,u)u) = {0, -4 x7, -1 x8}", spec, 1e-8,
          std::to_string(directions) + " random unit vectors");
  return s;
}

// ---------------------------------------------------------------- geodesy

std::vector<SpectrumSweepRow> spectrumSweep(const std::vector<double>& radii, const std::vector<int>& grids,
                                            bool parallel) {
  std::vector<std::pair<double, int>> jobs;
  for (double R : radii) {
    for (int N : grids) jobs.emplace_back(R, N);
  }
  auto run = [](double R, int N) {
    const auto est = spectrumEstimate(R, N);
    return SpectrumSweepRow{R, N, est.lambda, est.extrapolated};
  };
  std::vector<SpectrumSweepRow> rows;
  if (parallel) {
    std::vector<std::future<SpectrumSweepRow>> fs;
    for (const auto& [R, N] : jobs) fs.push_back(std::async(std::launch::async, run, R, N));
    for (auto& f : fs) rows.push_back(f.get());
  } else {
    for (const auto& [R, N] : jobs) rows.push_back(run(R, N));
  }
  return rows;
}

SuiteRecord runGeodesySuite(const RunConfig& cfg) {
  SuiteRecord s;
  s.name = "geodesy";
  s.seed = suiteSeed(cfg.seed, s.name);
  const RadialModel& model = RadialModel::cayleyHyperbolic();

  double triangle = 0.0;
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    double eig = 0.0;
    for (const auto& m : model.modes) eig += m.multiplicity * hessianEigen(m.c, r);
    const double closed = laplacianDistance(r);
    const double dlogA = logAreaDerivative(r);
    triangle = std::max({triangle, std::fabs(eig - closed), std::fabs(dlogA - closed)});
  }
  s.check("laplacian_triangle", "sum c_A coth(c_A r) = 14 coth 2r + 8 coth r = A'/A", triangle, cfg.numericTol);
  s.check("laplacian_limit", "r Delta r -> 15 as r -> 0", std::fabs(1e-6 * laplacianDistance(1e-6) - 15.0), 1e-6);
  s.check("laplacian_infinity", "Delta r -> 22", std::fabs(laplacianDistance(40.0) - 22.0), 1e-12);

  double indexForm = 0.0;
  for (double c : {1.0, 2.0}) {
    for (double L : {0.5, 1.0, 2.0}) {
      const double q = integrate(
          [&](double t) {
            const double f = jacobiProfile(c, L, t), df = jacobiProfileDerivative(c, L, t);
            return df * df + c * c * f * f;
          },
          0.0, L, 1e-13, 1e-14);
      indexForm = std::max(indexForm, std::fabs(q - hessianEigen(c, L)));
    }
  }
  s.check("index_form", "int (f'^2 + c^2 f^2) = c coth(cL)", indexForm, cfg.numericTol);

  // RK4 on f'' = c^2 f from f(0) = 0, f'(0) = c / sinh(cL).
  double ode = 0.0;
  for (double c : {1.0, 2.0}) {
    const double L = 1.0;
    const int steps = 10000;
    const double h = L / steps;
    double f = 0.0, g = c / std::sinh(c * L);
    for (int i = 0; i < steps; ++i) {
      const double k1f = g, k1g = c * c * f;
      const double k2f = g + 0.5 * h * k1g, k2g = c * c * (f + 0.5 * h * k1f);
      const double k3f = g + 0.5 * h * k2g, k3g = c * c * (f + 0.5 * h * k2f);
      const double k4f = g + h * k3g, k4g = c * c * (f + h * k3f);
      f += h / 6.0 * (k1f + 2 * k2f + 2 * k3f + k4f);
      g += h / 6.0 * (k1g + 2 * k2g + 2 * k3g + k4g);
      ode = std::max(ode, std::fabs(f - jacobiProfile(c, L, (i + 1) * h)));
    }
    ode = std::max(ode, std::fabs(f - 1.0));
  }
  s.check("jacobi_ode", "f'' = c^2 f, f(0) = 0, f(L) = 1", ode, cfg.numericTol);

  double growth = 0.0;
  for (double r : {20.0, 40.0, 100.0}) {
    growth = std::max(growth, std::fabs(logArea(r) / r - (22.0 - 15.0 * std::numbers::ln2 / r)));
  }
  s.check("area_growth", "log A(r) = 22 r - 15 log 2 + O(e^{-2r})", growth, 1e-12,
          "log A(20)/20 = " + fmt(logArea(20.0) / 20.0));
  s.check("volume_origin", "V(0) = 0", std::fabs(areaVolume(0.0).volume), 0.0);
  {
    const double r = 1.0, h = 1e-3;
    auto central = [&](double step) { return (areaVolume(r + step).volume - areaVolume(r - step).volume) / (2 * step); };
    const double dv = (4.0 * central(0.5 * h) - central(h)) / 3.0;
    const double a = areaVolume(r).area;
    s.check("volume_derivative", "V' = A", std::fabs(dv - a) / a, 1e-6);
  }

  auto radii = cfg.radii;
  std::sort(radii.begin(), radii.end());
  auto grids = cfg.grids;
  std::sort(grids.begin(), grids.end());
  const auto rows = spectrumSweep(radii, grids, cfg.parallel);
  double monotone = 0.0, below = 0.0;
  for (std::size_t g = 0; g < grids.size(); ++g) {
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
      const auto& a = rows[i * grids.size() + g];
      const auto& b = rows[(i + 1) * grids.size() + g];
      monotone = std::max(monotone, b.lambda - a.lambda);
    }
  }
  for (const auto& row : rows) below = std::max(below, (121.0 - row.extrapolated) / 121.0);
  s.check("spectrum_monotone", "lambda(R) nonincreasing in R", std::max(monotone, 0.0), 0.0);
  s.check("spectrum_lower_bound", "lambda(R) >= 121", std::max(below, 0.0), cfg.spectralTol);
  // The sharpness target is the R = 10 ball, whatever the sweep covers.
  const int finest = std::max(8000, grids.back());
  const SpectrumEstimate sharp = spectrumEstimate(10.0, finest, cfg.spectralTol);
  s.check("spectrum_sharp", "lambda_1 = (22/2)^2 = 121", std::fabs(sharp.extrapolated - 121.0) / 121.0,
          cfg.spectralTol, "R = 10, N = " + std::to_string(finest) + ", extrapolated = " + fmt(sharp.extrapolated));
  nlohmann::json table = nlohmann::json::array();
  for (const auto& row : rows) {
    table.push_back({{"R", row.radius}, {"N", row.grid}, {"lambda", row.lambda}, {"extrapolated", row.extrapolated}});
  }
  s.data["spectrum"] = table;

  const WarpedReport w = warpedChecks();
  double curv = 0.0, jac = 0.0;
  for (const auto& f : w.fibers) {
    curv = std::max(curv, std::fabs(f.analyticCurvature + f.rate * f.rate));
    jac = std::max({jac, f.jacobiResidual, f.jacobiInitialResidual});
  }
  s.check("warped_curvature_fd", "-f''/f = -4 (x7), -1 (x8)", w.maxCurvatureError, 1e-6);
  s.check("warped_curvature_exact", "-f''/f = -c^2", curv, 1e-12);
  s.check("warped_mean_curvature", "Delta beta = -22", std::fabs(w.meanCurvature + 22.0), 1e-12);
  s.check("warped_busemann_gradient", "|grad beta| = 1", std::fabs(w.busemannGradientNorm - 1.0), 0.0);
  double diag = 0.0;
  for (const auto& f : w.fibers) diag = std::max(diag, std::fabs(f.shapeOperator + f.rate));
  s.check("warped_hessian_diagonal", "beta_AB = -c_A delta_AB", diag, 1e-12);
  s.check("warped_hessian_squared", "sum beta_AB^2 = 36 = -Ric(grad beta, grad beta)", std::fabs(w.hessianSquared - 36.0),
          1e-12);
  s.check("warped_schwarz_equality", "(1/7)(sum beta_ii)^2 + (1/8)(sum beta_aa)^2 = 36", std::fabs(w.schwarzBound - 36.0),
          1e-12);
  s.check("warped_jacobi_transport", "V'' = c^2 V, V'(0) = -c V(0)", jac, 1e-6);
  return s;
}

// ---------------------------------------------------------------- forms

SuiteRecord runFormsSuite(const RunConfig& cfg) {
  SuiteRecord s;
  s.name = "forms";
  s.seed = suiteSeed(cfg.seed, s.name);
  std::mt19937_64 rng(s.seed);

  bool kahlerOk = true;
  std::string kahlerDetail;
  for (int n = 1; n <= 4; ++n) {
    const auto spec = ParallelFormSpec::kahler(n);
    const auto anchors = anchorMonomials(spec);
    const ConstraintSet got = extractConstraints(buildForm(spec), &anchors);
    std::vector<SymmetricFunctional> want;
    for (int i = 0; i < n; ++i) want.push_back(SymmetricFunctional::diagonalSum(2 * n, {i, n + i}));
    const ConstraintSet expected = ConstraintSet::canonical(2 * n, want);
    if (got.size() != static_cast<std::size_t>(n) || !got.equivalentTo(expected)) {
      kahlerOk = false;
      kahlerDetail = "n = " + std::to_string(n);
    }
    if (n == 2) s.data["kahler_2"] = got.toJson();
  }
  s.require("kahler_constraints", "a_ii + a_{i+n,i+n} = 0", kahlerOk, kahlerDetail);

  {
    const Form k2 = buildForm(ParallelFormSpec::kahler(2));
    Form expect(4, 2);
    expect.add(MultiIndex::of({0, 2}), -1.0);
    expect.add(MultiIndex::of({1, 3}), -1.0);
    s.check("kahler_form", "Omega = -theta^1^theta^3 - theta^2^theta^4", maxAbsDiff(k2, expect), 0.0);
  }

  bool quatOk = true;
  std::string quatDetail;
  for (int n = 1; n <= 4; ++n) {
    const auto spec = ParallelFormSpec::quaternionic(n);
    const auto anchors = anchorMonomials(spec);
    const ConstraintSet got = extractConstraints(buildForm(spec), &anchors);
    std::vector<SymmetricFunctional> want;
    for (int i = 0; i < n; ++i) want.push_back(SymmetricFunctional::diagonalSum(4 * n, {i, i + n, i + 2 * n, i + 3 * n}));
    if (got.size() != static_cast<std::size_t>(n) || !got.equivalentTo(ConstraintSet::canonical(4 * n, want))) {
      quatOk = false;
      quatDetail = "n = " + std::to_string(n);
    }
  }
  s.require("quaternionic_constraints", "a_ii + a_{i+n,i+n} + a_{i+2n,i+2n} + a_{i+3n,i+3n} = 0", quatOk, quatDetail);
  {
    const Form q1 = buildForm(ParallelFormSpec::quaternionic(1));
    const double c = q1.coefficient(MultiIndex::full(4));
    s.check("quaternionic_volume", "omega_1^2 + omega_2^2 + omega_3^2 = 6 vol (n = 1)",
            std::max(std::fabs(std::fabs(c) - 6.0), static_cast<double>(q1.terms().size()) - 1.0), 0.0);
  }

  {
    const Form sp = buildForm(ParallelFormSpec::spin9());
    Form expect(16, 8);
    expect.add(vTop(), -1.0);
    expect.add(wTop(), 1.0);
    s.check("spin9_skeleton", "Omega = -v_0^...^v_7 + w_0^...^w_7 (F = 0)", maxAbsDiff(sp, expect), 0.0);
  }

  const int fTrials = cfg.trialsOr(100);
  std::vector<int> low(8), high(8);
  for (int i = 0; i < 8; ++i) {
    low[static_cast<std::size_t>(i)] = i;
    high[static_cast<std::size_t>(i)] = 8 + i;
  }
  const SymmetricFunctional sumLow = SymmetricFunctional::diagonalSum(16, low);
  const SymmetricFunctional sumHigh = SymmetricFunctional::diagonalSum(16, high);
  const SymmetricFunctional trace = SymmetricFunctional::trace(16);
  double vTopRes = 0.0, wTopRes = 0.0, traceRes = 0.0, leak = 0.0;
  int pairs = 0;
  std::uniform_int_distribution<int> wordCount(1, 4);
  for (int t = 0; t < fTrials; ++t) {
    const FSpec f = FSpec::random(rng, wordCount(rng));
    const Form omega = buildForm(ParallelFormSpec::spin9(f));
    const SymmetricFunctional v = monomialFunctional(omega, vTop());
    const SymmetricFunctional w = monomialFunctional(omega, wTop());
    for (std::size_t k = 0; k < v.packed().size(); ++k) {
      vTopRes = std::max(vTopRes, std::fabs(v.packed()[k] + sumLow.packed()[k]));
      wTopRes = std::max(wTopRes, std::fabs(w.packed()[k] - sumHigh.packed()[k]));
      traceRes = std::max(traceRes, std::fabs(w.packed()[k] - v.packed()[k] - trace.packed()[k]));
    }
    const NoLeakReport nl = noLeakLemma(f);
    leak = std::max(leak, nl.maxLeak);
    pairs += nl.pairsChecked;
  }
  const std::string fDetail = std::to_string(fTrials) + " random admissible F";
  s.check("spin9_vtop", "coeff of v_0^...^v_7 = -sum_{i<=8} a_ii", vTopRes, cfg.identityTol, fDetail);
  s.check("spin9_wtop", "coeff of w_0^...^w_7 = sum_{i>8} a_ii", wTopRes, cfg.identityTol, fDetail);
  s.check("spin9_tops_sum_to_trace", "sum_{i<=8} a_ii + sum_{i>8} a_ii = tr a", traceRes, cfg.identityTol);
  s.check("no_leak", "eps(theta^i) l(e_j) F has no pure top monomial", leak, cfg.identityTol,
          std::to_string(pairs) + " (i, j) pairs");

  {
    const auto spec = ParallelFormSpec::kahler(3);
    const auto anchors = anchorMonomials(spec);
    const Form omega = buildForm(spec);
    const bool same = extractConstraints(omega, &anchors).equivalentTo(extractConstraints(-2.5 * omega, &anchors)) &&
                      extractConstraints(omega).equivalentTo(extractConstraints(3.0 * omega));
    s.require("rescaling_invariance", "C(c Omega) = C(Omega)", same);
  }
  {
    FSpec bad;
    bad.sigma[1] = 0;
    FSpec pure;
    pure.words.push_back({1.0, {{FFactor::Block::V, 0, 1}, {FFactor::Block::V, 2, 3},
                                {FFactor::Block::V, 4, 5}, {FFactor::Block::V, 6, 7}}});
    int rejected = 0;
    for (const FSpec* f : {&bad, &pure}) {
      try {
        f->validate();
      } catch (const std::invalid_argument&) {
        ++rejected;
      }
    }
    s.require("malformed_f_rejected", "sigma, tau injective; words mix v- and w-pairs", rejected == 2);
  }
  {
    const ConstraintSet sp = extractSpin9Constraints(FSpec::random(rng, 3));
    s.data["spin9_portable"] = sp.toJson();
    s.data["spin9_form_dependent_count"] = sp.formDependent().size();
  }
  return s;
}

// ---------------------------------------------------------------- kernels

SuiteRecord runKernelsSuite(const RunConfig& cfg) {
  SuiteRecord s;
  s.name = "kernels";
  s.seed = suiteSeed(cfg.seed, s.name);
  std::mt19937_64 rng(s.seed);

  struct Case {
    std::string id;
    RatioProblem problem;
    Rational expected;
    std::string anchor;
  };
  const std::vector<Case> cases{
      {"kahler", RatioProblem::kahler(2), Rational(2), "|Hess h|^2 >= 2 |grad |grad h||^2"},
      {"kahler_8", RatioProblem::kahler(4), Rational(2), "|Hess h|^2 >= 2 |grad |grad h||^2"},
      {"quaternionic", RatioProblem::quaternionic(1), Rational(4, 3), "|Hess h|^2 >= (4/3) |grad |grad h||^2"},
      {"quaternionic_8", RatioProblem::quaternionic(2), Rational(4, 3), "|Hess h|^2 >= (4/3) |grad |grad h||^2"},
      {"spin9", RatioProblem::spin9(), Rational(8, 7), "|Hess f|^2 >= (8/7) |grad |grad f||^2"},
  };
  const int samples = cfg.trialsOr(100000);
  std::normal_distribution<double> nd;
  for (const auto& c : cases) {
    const KernelResult kr = minBochnerRatio(c.problem);
    const double gap = kr.closedFormRatio ? std::fabs(*kr.closedFormRatio - kr.numericRatio) : 1.0;
    s.check(c.id + "_ratio_routes", c.anchor, gap, 1e-9,
            "numeric " + fmt(kr.numericRatio) + (kr.closedFormRatio ? ", closed " + fmt(*kr.closedFormRatio) : ""));
    s.require(c.id + "_ratio_rational", c.anchor, kr.rational && *kr.rational == c.expected,
              kr.rational ? kr.rational->str() : "no rational");
    s.check(c.id + "_minimizer_feasible", "minimizer satisfies every constraint",
            maxConstraintViolation(c.problem.constraints, kr.minimizer), 1e-10);
    s.check(c.id + "_minimizer_attains", "objective(minimizer) = minimal ratio",
            std::fabs(bochnerObjective(kr.minimizer) - kr.ratio), 1e-9);

    // Sharpness: no feasible sample beats the minimum.
    const Eigen::MatrixXd z = feasibleBasis(c.problem);
    const int count = c.id.find('_') == std::string::npos ? samples : std::min(samples, 10000);
    double beat = 0.0;
    Eigen::VectorXd g(z.cols());
    for (int t = 0; t < count; ++t) {
      for (Eigen::Index k = 0; k < g.size(); ++k) g[k] = nd(rng);
      const Eigen::MatrixXd a = unpackSymmetric(c.problem.n, z * g);
      beat = std::max(beat, kr.ratio - bochnerObjective(a));
    }
    s.check(c.id + "_sharpness", "objective >= minimal ratio on the feasible set", std::max(beat, 0.0), 1e-12,
            std::to_string(count) + " random feasible matrices");
    s.data[c.id] = kr.toJson();
  }

  {
    const KernelResult sp = minBochnerRatio(RatioProblem::spin9());
    std::vector<double> pattern(16, 0.0);
    pattern[0] = -7.0;
    for (int i = 1; i < 8; ++i) pattern[static_cast<std::size_t>(i)] = 1.0;
    const EqualityReport eq = equalityDiagnostics(sp, pattern);
    s.check("spin9_equality_case", "(f_ab) = diag(-7 mu, mu I_7, 0_8)", std::max(eq.patternResidual, eq.maxOffDiagonal),
            1e-9, "mu = " + fmt(eq.mu));
    const KernelResult kh = minBochnerRatio(RatioProblem::kahler(2));
    const Eigen::MatrixXd& m = kh.minimizer;
    double offPattern = std::fabs(m(0, 0) + m(2, 2));
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if ((i == 0 && j == 0) || (i == 2 && j == 2)) continue;
        offPattern = std::max(offPattern, std::fabs(m(i, j)));
      }
    }
    s.check("kahler_equality_case", "a_11 = -a_33, other entries 0", offPattern, 1e-9);
  }

  {
    // Adding constraints never lowers the minimum.
    RatioProblem traceOnly{16, ConstraintSet(16), 0};
    const double base = minBochnerRatio(traceOnly).ratio;
    const double withSpin9 = minBochnerRatio(RatioProblem::spin9()).ratio;
    double drop = std::max(0.0, base - withSpin9);
    RatioProblem k = RatioProblem::kahler(2);
    const double kBase = minBochnerRatio(k).ratio;
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int t = 0; t < 20; ++t) {
      SymmetricFunctional extra(4);
      for (double& v : extra.packed()) v = u(rng);
      RatioProblem more{4, k.constraints.with(extra), 0};
      try {
        drop = std::max(drop, kBase - minBochnerRatio(more).ratio);
      } catch (const std::invalid_argument&) {
        // feasible set lost every matrix with a nonzero first row
      }
    }
    s.check("monotone_in_constraints", "C subset C' implies ratio(C) <= ratio(C')", drop, 1e-12);
  }

  {
    const KatoTransform t = katoTransform(8.0 / 7.0, -36.0);
    s.require("kato_spin9", "g = |grad f|^{6/7}: Delta g >= -(216/7) g",
              t.exponent == Rational(6, 7) && t.drift == Rational(216, 7) && t.identityHolds,
              "exponent " + t.exponent.str() + ", drift " + t.drift.str());
    const KatoTransform q = katoTransform(4.0 / 3.0, -36.0);
    s.require("kato_quaternionic", "g = h^{2/3}: Delta g >= -24 g",
              q.exponent == Rational(2, 3) && q.drift == Rational(24) && q.identityHolds);
    const KatoTransform k = katoTransform(2.0, -36.0);
    s.require("kato_degenerate", "b = 1 gives exponent 0", k.degenerate && k.exponent == Rational(0));
    s.data["kato"] = t.toJson();
  }
  {
    const double lambda = 100.0;
    const double th = std::max(std::fabs(vanishingThreshold(1.0, lambda) + 2.0 * lambda),
                               std::fabs(vanishingThreshold(1.0 / 3.0, lambda) + 4.0 / 3.0 * lambda));
    s.check("vanishing_thresholds", "Ric >= -(b+1) lambda_1", th, 1e-12);
    const Spin9Bound b = spin9SpectralBound();
    s.require("spin9_bound", "lambda_1 >= 216/7 = 36 (6/7) < 121",
              b.consistent && b.stated.value() < 121.0,
              "stated " + b.stated.str() + ", Kato drift " + b.katoDrift.str() + ", corollary route " +
                  b.corollaryRoute.str());
    s.data["thresholds"] = {{"stated", b.stated.str()},
                            {"kato_drift", b.katoDrift.str()},
                            {"corollary_route", b.corollaryRoute.str()}};
  }
  return s;
}

SuiteRecord runSuite(const std::string& name, const RunConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  SuiteRecord rec;
  if (name == "octonion") {
    rec = runOctonionSuite(cfg);
  } else if (name == "exterior") {
    rec = runExteriorSuite(cfg);
  } else if (name == "curvature") {
    rec = runCurvatureSuite(cfg);
  } else if (name == "geodesy") {
    rec = runGeodesySuite(cfg);
  } else if (name == "forms") {
    rec = runFormsSuite(cfg);
  } else if (name == "kernels") {
    rec = runKernelsSuite(cfg);
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  rec.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// ---------------------------------------------------------------- report

bool VerificationReport::pass() const {
  return std::all_of(suites.begin(), suites.end(), [](const SuiteRecord& s) { return s.pass(); });
}

nlohmann::json VerificationReport::toJson() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["version"] = kToolkitVersion;
  j["command"] = command;
  j["config"] = config.toJson();
  j["pass"] = pass();
  j["suites"] = nlohmann::json::array();
  nlohmann::json perSuite = nlohmann::json::object();
  for (const auto& s : suites) {
    j["suites"].push_back(s.toJson());
    perSuite[s.name] = s.wallSeconds;
  }
  j["timing"] = {{"started_at", startedAt}, {"wall_seconds", wallSeconds}, {"suites", perSuite}};
  return j;
}

VerificationReport runSuites(const std::vector<std::string>& names, const RunConfig& cfg, const std::string& command) {
  cfg.validate();
  VerificationReport rep;
  rep.command = command;
  rep.config = cfg;
  {
    const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    rep.startedAt = os.str();
  }
  const auto start = std::chrono::steady_clock::now();
  if (cfg.parallel) {
    std::vector<std::future<SuiteRecord>> fs;
    for (const auto& n : names) fs.push_back(std::async(std::launch::async, [&cfg, n] { return runSuite(n, cfg); }));
    for (auto& f : fs) rep.suites.push_back(f.get());
  } else {
    for (const auto& n : names) rep.suites.push_back(runSuite(n, cfg));
  }
  rep.wallSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cayley
