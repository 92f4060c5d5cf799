#include "cayley/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "cayley/rational.hpp"

namespace cayley {
namespace {

// Quaternion units 1, I, J, K as slots 0..3: u * v = sign * unit[index].
std::pair<int, int> quaternionProduct(int u, int v) {
  if (u == 0) return {v, 1};
  if (v == 0) return {u, 1};
  if (u == v) return {0, -1};
  // I J = K, J K = I, K I = J
  const int w = 6 - u - v;
  const bool cyclic = (u == 1 && v == 2) || (u == 2 && v == 3) || (u == 3 && v == 1);
  return {w, cyclic ? 1 : -1};
}

Form quaternionicTwoForm(int n, int unit) {
  // omega_u(X, Y) = g(X, uY) on the frame e_{qn+i} = Q_q e_i
  Form out(4 * n, 2);
  for (int q = 0; q < 4; ++q) {
    const auto [r, sign] = quaternionProduct(unit, q);
    for (int i = 0; i < n; ++i) {
      const int b = q * n + i;  // source e_b, image sign * e_a
      const int a = r * n + i;
      if (a < b) out.add(MultiIndex::of({a, b}), sign);
    }
  }
  return out;
}

void checkInjective(const std::array<int, 8>& map, const char* name) {
  std::set<int> seen;
  for (int v : map) {
    if (v < 0 || v > 7) throw std::invalid_argument(std::string(name) + " maps outside {0..7}");
    if (!seen.insert(v).second) throw std::invalid_argument(std::string(name) + " is not injective");
  }
}

std::vector<SymmetricFunctional> functionalsFor(const Form& omega, const std::vector<MultiIndex>& monomials,
                                                const std::vector<Form>& images) {
  const int n = omega.dim();
  std::vector<SymmetricFunctional> out;
  for (MultiIndex m : monomials) {
    SymmetricFunctional f(n);
    for (int i = 0, k = 0; i < n; ++i) {
      for (int j = i; j < n; ++j, ++k) f.setCoeff(i, j, images[static_cast<std::size_t>(k)].coefficient(m));
    }
    if (!f.isZero(1e-13)) out.push_back(std::move(f));
  }
  return out;
}

// T(E^(ij), omega) for every packed (i <= j).
std::vector<Form> basisImages(const Form& omega) {
  const int n = omega.dim();
  std::vector<Form> images;
  images.reserve(static_cast<std::size_t>(SymmetricFunctional::packedSize(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) images.push_back(applyHessianOperator(HessianSurrogate::unit(n, i, j), omega));
  }
  return images;
}

}  // namespace

void FSpec::validate() const {
  checkInjective(sigma, "sigma");
  checkInjective(tau, "tau");
  for (std::size_t w = 0; w < words.size(); ++w) {
    const auto& word = words[w];
    const std::string where = "F-word " + std::to_string(w) + ": ";
    if (word.factors.size() != 4) {
      throw std::invalid_argument(where + "grade " + std::to_string(2 * word.factors.size()) + ", expected 8");
    }
    bool hasV = false;
    bool hasW = false;
    for (const auto& f : word.factors) {
      if (f.first < 0 || f.first > 7 || f.second < 0 || f.second > 7) throw std::invalid_argument(where + "index outside {0..7}");
      if (f.first == f.second) throw std::invalid_argument(where + "factor repeats an index");
      (f.block == FFactor::Block::V ? hasV : hasW) = true;
    }
    if (!hasV || !hasW) throw std::invalid_argument(where + "must mix v-pairs and w-pairs");
  }
}

FSpec FSpec::random(std::mt19937_64& rng, int words) {
  FSpec f;
  std::shuffle(f.sigma.begin(), f.sigma.end(), rng);
  std::shuffle(f.tau.begin(), f.tau.end(), rng);
  std::uniform_int_distribution<int> vCount(1, 3);
  std::uniform_int_distribution<int> idx(0, 7);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  for (int w = 0; w < words; ++w) {
    FWord word;
    word.coefficient = coeff(rng);
    const int nv = vCount(rng);
    for (int k = 0; k < 4; ++k) {
      FFactor fac;
      fac.block = k < nv ? FFactor::Block::V : FFactor::Block::W;
      fac.first = idx(rng);
      do {
        fac.second = idx(rng);
      } while (fac.second == fac.first);
      word.factors.push_back(fac);
    }
    f.words.push_back(std::move(word));
  }
  return f;
}

ParallelFormSpec ParallelFormSpec::kahler(int n) { return {Kind::Kahler, n, {}}; }
ParallelFormSpec ParallelFormSpec::quaternionic(int n) { return {Kind::Quaternionic, n, {}}; }
ParallelFormSpec ParallelFormSpec::spin9(FSpec f) { return {Kind::Spin9, 8, std::move(f)}; }

int ParallelFormSpec::dimension() const {
  switch (kind) {
    case Kind::Kahler: return 2 * n;
    case Kind::Quaternionic: return 4 * n;
    case Kind::Spin9: return 16;
  }
  return 0;
}

MultiIndex vTop() { return MultiIndex(0x00FFu); }
MultiIndex wTop() { return MultiIndex(0xFF00u); }

Form buildF(const FSpec& f) {
  f.validate();
  Form out(16, 8);
  for (const auto& word : f.words) {
    Form prod = Form::scalar(16, word.coefficient);
    for (const auto& fac : word.factors) {
      const bool v = fac.block == FFactor::Block::V;
      const int a = v ? f.sigma[static_cast<std::size_t>(fac.first)] : 8 + f.tau[static_cast<std::size_t>(fac.first)];
      const int b = v ? f.sigma[static_cast<std::size_t>(fac.second)] : 8 + f.tau[static_cast<std::size_t>(fac.second)];
      Form two(16, 2);
      two.add(MultiIndex::of({std::min(a, b)}).with(std::max(a, b)), a < b ? 1.0 : -1.0);
      prod = wedge(prod, two);
    }
    out += prod;
  }
  return out;
}

Form buildForm(const ParallelFormSpec& spec) {
  switch (spec.kind) {
    case ParallelFormSpec::Kind::Kahler: {
      if (spec.n < 1 || 2 * spec.n > kMaxFormDim) throw std::invalid_argument("kahler: need 1 <= n <= 8");
      Form omega(2 * spec.n, 2);
      for (int i = 0; i < spec.n; ++i) omega.add(MultiIndex::of({i, spec.n + i}), -1.0);
      return omega;
    }
    case ParallelFormSpec::Kind::Quaternionic: {
      if (spec.n < 1 || 4 * spec.n > kMaxFormDim) throw std::invalid_argument("quaternionic: need 1 <= n <= 4");
      Form omega(4 * spec.n, 4);
      for (int u = 1; u <= 3; ++u) {
        const Form w = quaternionicTwoForm(spec.n, u);
        omega += wedge(w, w);
      }
      return omega;
    }
    case ParallelFormSpec::Kind::Spin9: {
      Form omega = buildF(spec.f);
      omega.add(vTop(), -1.0);
      omega.add(wTop(), 1.0);
      return omega;
    }
  }
  throw std::invalid_argument("unknown parallel form kind");
}

std::vector<MultiIndex> anchorMonomials(const ParallelFormSpec& spec) {
  std::vector<MultiIndex> out;
  switch (spec.kind) {
    case ParallelFormSpec::Kind::Kahler:
      for (int i = 0; i < spec.n; ++i) out.push_back(MultiIndex::of({i, spec.n + i}));
      break;
    case ParallelFormSpec::Kind::Quaternionic:
      for (int i = 0; i < spec.n; ++i) {
        out.push_back(MultiIndex::of({i, i + spec.n, i + 2 * spec.n, i + 3 * spec.n}));
      }
      break;
    case ParallelFormSpec::Kind::Spin9:
      out = {vTop(), wTop()};
      break;
  }
  return out;
}

SymmetricFunctional::SymmetricFunctional(int n) : n_(n), c_(static_cast<std::size_t>(packedSize(n)), 0.0) {
  if (n < 1) throw std::invalid_argument("SymmetricFunctional: n must be positive");
}

int SymmetricFunctional::packedIndex(int n, int i, int j) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n) throw std::out_of_range("SymmetricFunctional: index out of range");
  return i * n - i * (i - 1) / 2 + (j - i);
}

double SymmetricFunctional::evaluate(const Eigen::MatrixXd& a) const {
  double s = 0.0;
  for (int i = 0, k = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j, ++k) s += c_[static_cast<std::size_t>(k)] * a(i, j);
  }
  return s;
}

bool SymmetricFunctional::isZero(double tol) const {
  return std::all_of(c_.begin(), c_.end(), [tol](double v) { return std::fabs(v) <= tol; });
}

std::string SymmetricFunctional::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0, k = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j, ++k) {
      const double c = c_[static_cast<std::size_t>(k)];
      if (c == 0.0) continue;
      os << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
      if (std::fabs(c) != 1.0) {
        const auto r = recoverRational(std::fabs(c));
        if (r) {
          os << r->str() << ' ';
        } else {
          os << std::fabs(c) << ' ';
        }
      }
      os << 'a' << i + 1 << (n_ > 9 ? "," : "") << j + 1;
      first = false;
    }
  }
  return first ? "0" : os.str();
}

nlohmann::json SymmetricFunctional::toJson() const {
  nlohmann::json indices = nlohmann::json::array();
  nlohmann::json coeffs = nlohmann::json::array();
  for (int i = 0, k = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j, ++k) {
      const double c = c_[static_cast<std::size_t>(k)];
      if (c == 0.0) continue;
      indices.push_back({i + 1, j + 1});
      coeffs.push_back(c);
    }
  }
  return {{"indices", indices}, {"coeffs", coeffs}};
}

SymmetricFunctional SymmetricFunctional::trace(int n) {
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);
  return diagonalSum(n, all);
}

SymmetricFunctional SymmetricFunctional::diagonalSum(int n, const std::vector<int>& slots) {
  SymmetricFunctional f(n);
  for (int s : slots) f.setCoeff(s, s, 1.0);
  return f;
}

ConstraintSet ConstraintSet::canonical(int n, const std::vector<SymmetricFunctional>& raw, double tol) {
  const int cols = SymmetricFunctional::packedSize(n);
  std::vector<std::vector<double>> rows;
  for (const auto& f : raw) {
    if (f.dim() != n) throw std::invalid_argument("ConstraintSet: functional dimension mismatch");
    rows.push_back(f.packed());
  }
  double scale = 0.0;
  for (const auto& r : rows) {
    for (double v : r) scale = std::max(scale, std::fabs(v));
  }
  const double zeroTol = tol * std::max(1.0, scale);

  std::size_t pivotRow = 0;
  for (int c = 0; c < cols && pivotRow < rows.size(); ++c) {
    const auto col = static_cast<std::size_t>(c);
    std::size_t best = pivotRow;
    for (std::size_t r = pivotRow; r < rows.size(); ++r) {
      if (std::fabs(rows[r][col]) > std::fabs(rows[best][col])) best = r;
    }
    if (std::fabs(rows[best][col]) <= zeroTol) continue;
    std::swap(rows[pivotRow], rows[best]);
    const double p = rows[pivotRow][col];
    for (double& v : rows[pivotRow]) v /= p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivotRow) continue;
      const double factor = rows[r][col];
      if (factor == 0.0) continue;
      for (std::size_t k = 0; k < rows[r].size(); ++k) rows[r][k] -= factor * rows[pivotRow][k];
    }
    ++pivotRow;
  }
  rows.resize(pivotRow);

  ConstraintSet out(n);
  for (auto& r : rows) {
    SymmetricFunctional f(n);
    for (std::size_t k = 0; k < r.size(); ++k) {
      double v = std::fabs(r[k]) <= tol ? 0.0 : r[k];
      if (v != 0.0) {
        if (const auto q = recoverRational(v, 64, tol)) v = q->value();
      }
      f.packed()[k] = v;
    }
    if (!f.isZero()) out.functionals_.push_back(std::move(f));
  }
  return out;
}

ConstraintSet ConstraintSet::with(const SymmetricFunctional& extra) const {
  auto raw = functionals_;
  raw.push_back(extra);
  ConstraintSet out = canonical(n_, raw);
  out.formDependent_ = formDependent_;
  return out;
}

bool ConstraintSet::satisfiedBy(const Eigen::MatrixXd& a, double tol) const {
  return std::all_of(functionals_.begin(), functionals_.end(),
                     [&](const SymmetricFunctional& f) { return std::fabs(f.evaluate(a)) <= tol; });
}

bool ConstraintSet::equivalentTo(const ConstraintSet& other, double tol) const {
  if (n_ != other.n_ || size() != other.size()) return false;
  for (std::size_t r = 0; r < size(); ++r) {
    const auto& a = functionals_[r].packed();
    const auto& b = other.functionals_[r].packed();
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (std::fabs(a[k] - b[k]) > tol) return false;
    }
  }
  return true;
}

nlohmann::json ConstraintSet::toJson() const {
  nlohmann::json out = {{"n", n_}, {"functionals", nlohmann::json::array()}};
  for (const auto& f : functionals_) out["functionals"].push_back(f.toJson());
  if (!formDependent_.empty()) {
    out["form_dependent"] = nlohmann::json::array();
    for (const auto& f : formDependent_) out["form_dependent"].push_back(f.toJson());
  }
  return out;
}

SymmetricFunctional monomialFunctional(const Form& omega, MultiIndex m) {
  const auto images = basisImages(omega);
  SymmetricFunctional f(omega.dim());
  for (int i = 0, k = 0; i < omega.dim(); ++i) {
    for (int j = i; j < omega.dim(); ++j, ++k) f.setCoeff(i, j, images[static_cast<std::size_t>(k)].coefficient(m));
  }
  return f;
}

ConstraintSet extractConstraints(const Form& omega, const std::vector<MultiIndex>* targets) {
  const auto images = basisImages(omega);
  std::vector<MultiIndex> monomials;
  if (targets) {
    monomials = *targets;
  } else {
    std::set<MultiIndex> all;
    for (const auto& img : images) {
      for (const auto& kv : img.terms()) all.insert(kv.first);
    }
    monomials.assign(all.begin(), all.end());
  }
  return ConstraintSet::canonical(omega.dim(), functionalsFor(omega, monomials, images));
}

ConstraintSet extractSpin9Constraints(const FSpec& f) {
  const Form omega = buildForm(ParallelFormSpec::spin9(f));
  const auto images = basisImages(omega);
  const std::vector<MultiIndex> tops = {vTop(), wTop()};
  ConstraintSet portable = ConstraintSet::canonical(16, functionalsFor(omega, tops, images));

  std::set<MultiIndex> rest;
  for (const auto& img : images) {
    for (const auto& kv : img.terms()) {
      if (kv.first != vTop() && kv.first != wTop()) rest.insert(kv.first);
    }
  }
  const std::vector<MultiIndex> others(rest.begin(), rest.end());
  ConstraintSet extra = ConstraintSet::canonical(16, functionalsFor(omega, others, images));
  portable.setFormDependent(extra.functionals());
  return portable;
}

NoLeakReport noLeakLemma(const FSpec& f, double tol) {
  const Form F = buildF(f);
  NoLeakReport rep;
  for (int j = 0; j < 16; ++j) {
    const Form lj = interior(j, F);
    for (int i = 0; i < 16; ++i) {
      const Form el = epsilon(i, lj);
      rep.maxLeak = std::max({rep.maxLeak, std::fabs(el.coefficient(vTop())), std::fabs(el.coefficient(wTop()))});
      ++rep.pairsChecked;
    }
  }
  rep.pass = rep.maxLeak <= tol;
  return rep;
}

}  // namespace cayley
