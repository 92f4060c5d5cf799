#include "cayley/exterior.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cayley {
namespace {

int parity(int e) { return ((e % 2) + 2) % 2 == 0 ? 1 : -1; }

void checkDim(int n) {
  if (n < 1 || n > kMaxFormDim) {
    throw std::invalid_argument("form dimension must lie in [1, 16], got " + std::to_string(n));
  }
}

void checkSameDim(const Form& a, const Form& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}

}  // namespace

MultiIndex MultiIndex::of(std::initializer_list<int> slots) {
  return of(std::span<const int>(slots.begin(), slots.size()));
}

MultiIndex MultiIndex::of(std::span<const int> slots) {
  std::uint32_t bits = 0;
  for (int s : slots) {
    if (s < 0 || s >= kMaxFormDim) throw std::out_of_range("multi-index slot out of range");
    if (bits & (1u << s)) throw std::invalid_argument("repeated slot in multi-index");
    bits |= 1u << s;
  }
  return MultiIndex(bits);
}

std::vector<int> MultiIndex::slots() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
  return out;
}

int wedgeSign(MultiIndex a, MultiIndex b) {
  if (a.bits() & b.bits()) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b.bits(); rest; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a.bits() >> (j + 1));
  }
  return parity(inversions);
}

Form::Form(int n, int grade) : n_(n), p_(grade) { checkDim(n); }

Form Form::monomial(int n, MultiIndex idx, double coeff) {
  Form f(n, idx.grade());
  f.add(idx, coeff);
  return f;
}

Form Form::scalar(int n, double value) { return monomial(n, MultiIndex(), value); }

Form Form::volume(int n) {
  checkDim(n);
  return monomial(n, MultiIndex::full(n));
}

double Form::coefficient(MultiIndex idx) const {
  const auto it = terms_.find(idx);
  return it == terms_.end() ? 0.0 : it->second;
}

void Form::add(MultiIndex idx, double coeff) {
  if (idx.grade() != p_) throw std::invalid_argument("monomial grade does not match form grade");
  if (idx.bits() >> n_) throw std::invalid_argument("monomial uses a slot beyond the form dimension");
  if (coeff == 0.0) return;
  auto [it, inserted] = terms_.try_emplace(idx, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0.0) terms_.erase(it);
  }
}

Form& Form::operator+=(const Form& o) {
  checkSameDim(*this, o);
  if (o.isZero()) return *this;
  if (isZero()) p_ = o.p_;
  if (o.p_ != p_) throw std::invalid_argument("cannot add forms of different grade");
  for (const auto& [idx, c] : o.terms_) add(idx, c);
  return *this;
}

Form& Form::operator-=(const Form& o) { return *this += (-1.0) * o; }

Form& Form::operator*=(double s) {
  if (s == 0.0) {
    terms_.clear();
    return *this;
  }
  for (auto& kv : terms_) kv.second *= s;
  return *this;
}

Form Form::pruned(double tol) const {
  Form out(n_, p_);
  for (const auto& [idx, c] : terms_) {
    if (std::fabs(c) > tol) out.terms_.emplace(idx, c);
  }
  return out;
}

double maxAbsDiff(const Form& a, const Form& b) {
  checkSameDim(a, b);
  if (a.grade() != b.grade() && !a.isZero() && !b.isZero()) {
    throw std::invalid_argument("maxAbsDiff: grade mismatch");
  }
  double m = 0.0;
  for (const auto& [idx, c] : a.terms()) m = std::max(m, std::fabs(c - b.coefficient(idx)));
  for (const auto& [idx, c] : b.terms()) {
    if (!a.terms().count(idx)) m = std::max(m, std::fabs(c));
  }
  return m;
}

double maxAbsCoeff(const Form& a) {
  double m = 0.0;
  for (const auto& kv : a.terms()) m = std::max(m, std::fabs(kv.second));
  return m;
}

double inner(const Form& a, const Form& b) {
  checkSameDim(a, b);
  if (a.grade() != b.grade()) return 0.0;
  double s = 0.0;
  for (const auto& [idx, c] : a.terms()) s += c * b.coefficient(idx);
  return s;
}

Form wedge(const Form& a, const Form& b) {
  checkSameDim(a, b);
  Form out(a.dim(), a.grade() + b.grade());
  if (a.grade() + b.grade() > a.dim()) return out;
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int s = wedgeSign(ia, ib);
      if (s) out.add(MultiIndex(ia.bits() | ib.bits()), s * ca * cb);
    }
  }
  return out;
}

Form epsilon(int slot, const Form& f) {
  if (slot < 0 || slot >= f.dim()) throw std::out_of_range("epsilon: slot out of range");
  Form out(f.dim(), f.grade() + 1);
  for (const auto& [idx, c] : f.terms()) {
    if (idx.contains(slot)) continue;
    out.add(idx.with(slot), parity(idx.countBelow(slot)) * c);
  }
  return out;
}

Form interior(int slot, const Form& f) {
  if (slot < 0 || slot >= f.dim()) throw std::out_of_range("interior: slot out of range");
  Form out(f.dim(), f.grade() - 1);
  for (const auto& [idx, c] : f.terms()) {
    if (!idx.contains(slot)) continue;
    out.add(idx.without(slot), parity(idx.countBelow(slot)) * c);
  }
  return out;
}

Form epsilon(std::span<const double> theta, const Form& f) {
  if (static_cast<int>(theta.size()) != f.dim()) throw std::invalid_argument("epsilon: covector dimension mismatch");
  Form out(f.dim(), f.grade() + 1);
  for (int k = 0; k < f.dim(); ++k) {
    if (theta[k] != 0.0) out += theta[k] * epsilon(k, f);
  }
  return out;
}

Form interior(std::span<const double> v, const Form& f) {
  if (static_cast<int>(v.size()) != f.dim()) throw std::invalid_argument("interior: vector dimension mismatch");
  Form out(f.dim(), f.grade() - 1);
  for (int k = 0; k < f.dim(); ++k) {
    if (v[k] != 0.0) out += v[k] * interior(k, f);
  }
  return out;
}

Form hodge(const Form& f) {
  const MultiIndex all = MultiIndex::full(f.dim());
  Form out(f.dim(), f.dim() - f.grade());
  for (const auto& [idx, c] : f.terms()) {
    const MultiIndex comp(all.bits() & ~idx.bits());
    out.add(comp, wedgeSign(idx, comp) * c);
  }
  return out;
}

HessianSurrogate::HessianSurrogate(int n, std::vector<double> rowMajor, bool traceFree)
    : n_(n), a_(std::move(rowMajor)), traceFree_(traceFree) {
  checkDim(n);
  if (a_.size() != static_cast<std::size_t>(n * n)) throw std::invalid_argument("HessianSurrogate: expected n*n entries");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double x = (*this)(i, j);
      const double y = (*this)(j, i);
      if (std::fabs(x - y) > 1e-12 * std::max(1.0, std::fabs(x))) {
        throw std::invalid_argument("HessianSurrogate: matrix is not symmetric");
      }
    }
  }
  if (traceFree_ && std::fabs(trace()) > 1e-12) {
    throw std::invalid_argument("HessianSurrogate: flagged trace-free but trace is nonzero");
  }
}

HessianSurrogate HessianSurrogate::zero(int n) {
  return HessianSurrogate(n, std::vector<double>(static_cast<std::size_t>(n * n), 0.0), true);
}

HessianSurrogate HessianSurrogate::identity(int n) {
  std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] = 1.0;
  return HessianSurrogate(n, std::move(a));
}

HessianSurrogate HessianSurrogate::unit(int n, int i, int j) {
  std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
  a[static_cast<std::size_t>(i * n + j)] = 1.0;
  a[static_cast<std::size_t>(j * n + i)] = 1.0;
  return HessianSurrogate(n, std::move(a), i != j);
}

HessianSurrogate HessianSurrogate::random(int n, std::mt19937_64& rng, bool traceFree) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> a(static_cast<std::size_t>(n * n), 0.0);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double x = u(rng);
      a[static_cast<std::size_t>(i * n + j)] = x;
      a[static_cast<std::size_t>(j * n + i)] = x;
    }
  }
  if (traceFree) {
    double tr = 0.0;
    for (int i = 0; i < n; ++i) tr += a[static_cast<std::size_t>(i * n + i)];
    for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i * n + i)] -= tr / n;
    // absorb the rounding residue in the last diagonal slot
    double rest = 0.0;
    for (int i = 0; i + 1 < n; ++i) rest += a[static_cast<std::size_t>(i * n + i)];
    a[static_cast<std::size_t>(n * n - 1)] = -rest;
  }
  return HessianSurrogate(n, std::move(a), traceFree);
}

double HessianSurrogate::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

Form applyHessianOperator(const HessianSurrogate& a, const Form& w) {
  if (a.dim() != w.dim()) throw std::invalid_argument("applyHessianOperator: dimension mismatch");
  const int n = w.dim();
  Form out(n, w.grade());
  for (int j = 0; j < n; ++j) {
    const Form lj = interior(j, w);
    if (lj.isZero()) continue;
    for (int i = 0; i < n; ++i) {
      const double aij = a(i, j);
      if (aij != 0.0) out += aij * epsilon(i, lj);
    }
  }
  return out;
}

Form randomSparseForm(int n, int p, int terms, std::mt19937_64& rng) {
  checkDim(n);
  if (p < 0 || p > n) throw std::invalid_argument("randomSparseForm: grade out of range");
  // C(n, p) fits easily in 64 bits for n <= 16
  std::uint64_t total = 1;
  for (int k = 1; k <= p; ++k) total = total * static_cast<std::uint64_t>(n - p + k) / static_cast<std::uint64_t>(k);
  const auto want = static_cast<std::size_t>(std::min<std::uint64_t>(total, static_cast<std::uint64_t>(std::max(terms, 1))));
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<int> slots(static_cast<std::size_t>(n));
  std::iota(slots.begin(), slots.end(), 0);
  std::set<MultiIndex> chosen;
  while (chosen.size() < want) {
    std::shuffle(slots.begin(), slots.end(), rng);
    chosen.insert(MultiIndex::of(std::span<const int>(slots.data(), static_cast<std::size_t>(p))));
  }
  Form f(n, p);
  for (const auto& idx : chosen) {
    double c = 0.0;
    while (c == 0.0) c = u(rng);
    f.add(idx, c);
  }
  return f;
}

double DualityResiduals::max() const { return std::max({starIdentity, coclosedChain, closedChain}); }

DualityResiduals dualityResiduals(const HessianSurrogate& a, const Form& w) {
  if (a.dim() != w.dim()) throw std::invalid_argument("dualityResiduals: dimension mismatch");
  const int n = w.dim();
  const int p = w.grade();

  // d acts as sum_i eps(theta^i) grad_i, and grad_i (alpha) = sum_j a_{j,i} theta^j.
  const Form starW = hodge(w);
  Form lhs(n, p);           // *d*(alpha ^ w)
  Form rhs(n, p);           // d*(alpha ^ *w)
  for (int i = 0; i < n; ++i) {
    Form inner1(n, n - p - 1);
    Form inner2(n, p - 1);
    for (int j = 0; j < n; ++j) {
      const double aji = a(j, i);
      if (aji == 0.0) continue;
      inner1 += aji * hodge(epsilon(j, w));
      inner2 += aji * hodge(epsilon(j, starW));
    }
    lhs += hodge(epsilon(i, inner1));
    rhs += epsilon(i, inner2);
  }

  Form sumJi(n, p);
  Form sumIj(n, p);
  for (int j = 0; j < n; ++j) {
    const Form lj = interior(j, w);
    if (lj.isZero()) continue;
    for (int i = 0; i < n; ++i) {
      const Form el = epsilon(i, lj);
      if (a(j, i) != 0.0) sumJi += a(j, i) * el;
      if (a(i, j) != 0.0) sumIj += a(i, j) * el;
    }
  }

  DualityResiduals r;
  r.starIdentity = maxAbsDiff(lhs, parity(n - 1) * rhs);
  r.coclosedChain = maxAbsDiff(rhs, parity((p - 1) * (n - p)) * sumJi);
  r.closedChain = maxAbsDiff(lhs, parity(p * (n - p - 1) + 1) * sumIj);
  return r;
}

DualityReport verifyDualityIdentity(int n, int p, int trials, std::uint64_t seed, const Form* omega,
                                    int sparseTerms) {
  if (!(1 <= p && p <= n && n <= kMaxFormDim)) throw std::invalid_argument("verifyDualityIdentity: need 1 <= p <= n <= 16");
  if (trials < 1) throw std::invalid_argument("verifyDualityIdentity: trials must be >= 1");
  if (omega && (omega->dim() != n || (omega->grade() != p && !omega->isZero()))) {
    throw std::invalid_argument("verifyDualityIdentity: supplied form has wrong dimension or grade");
  }
  std::mt19937_64 rng(seed);
  DualityReport rep;
  rep.n = n;
  rep.p = p;
  rep.trials = trials;
  for (int t = 0; t < trials; ++t) {
    const HessianSurrogate a = HessianSurrogate::random(n, rng, true);
    const Form w = omega ? *omega : randomSparseForm(n, p, sparseTerms, rng);
    const DualityResiduals r = dualityResiduals(a, w);
    rep.maxStarIdentity = std::max(rep.maxStarIdentity, r.starIdentity);
    rep.maxCoclosedChain = std::max(rep.maxCoclosedChain, r.coclosedChain);
    rep.maxClosedChain = std::max(rep.maxClosedChain, r.closedChain);
  }
  rep.maxResidual = std::max({rep.maxStarIdentity, rep.maxCoclosedChain, rep.maxClosedChain});
  return rep;
}

void writeForm(std::ostream& os, const Form& f) {
  os << "# n=" << f.dim() << " p=" << f.grade() << '\n';
  std::ostringstream line;
  line.precision(17);
  for (const auto& [idx, c] : f.terms()) {
    line.str("");
    const auto slots = idx.slots();
    for (std::size_t k = 0; k < slots.size(); ++k) line << (k ? "," : "") << slots[k] + 1;
    line << ':' << c;
    os << line.str() << '\n';
  }
}

Form readForm(std::istream& is, int n) {
  int p = -1;
  std::vector<std::pair<std::vector<int>, double>> entries;
  std::string line;
  int lineNo = 0;
  while (std::getline(is, line)) {
    ++lineNo;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string tok;
      while (hs >> tok) {
        if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
        if (tok.rfind("p=", 0) == 0) p = std::stoi(tok.substr(2));
      }
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("form line " + std::to_string(lineNo) + ": missing ':'");
    std::vector<int> slots;
    std::istringstream ids(line.substr(0, colon));
    std::string tok;
    while (std::getline(ids, tok, ',')) {
      if (tok.find_first_not_of(" \t") == std::string::npos) continue;
      slots.push_back(std::stoi(tok) - 1);
    }
    if (!std::is_sorted(slots.begin(), slots.end()) ||
        std::adjacent_find(slots.begin(), slots.end()) != slots.end()) {
      throw std::invalid_argument("form line " + std::to_string(lineNo) + ": indices must be strictly ascending");
    }
    entries.emplace_back(std::move(slots), std::stod(line.substr(colon + 1)));
  }
  if (n < 0) throw std::invalid_argument("form text: dimension unknown (no header and none supplied)");
  if (p < 0) p = entries.empty() ? 0 : static_cast<int>(entries.front().first.size());
  Form f(n, p);
  for (const auto& [slots, c] : entries) {
    for (int s : slots) {
      if (s < 0 || s >= n) throw std::invalid_argument("form text: index out of range");
    }
    f.add(MultiIndex::of(slots), c);
  }
  return f;
}

}  // namespace cayley
