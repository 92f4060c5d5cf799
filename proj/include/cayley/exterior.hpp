#pragma once

// Sparse exterior algebra over an oriented orthonormal frame of R^n, n <= 16.
//
// A monomial theta^{i1} ^ ... ^ theta^{ip} with i1 < ... < ip is labelled by the
// bitmask with bits i1..ip set (0-based slots). Every operator sign comes from
// merge parity of bitmasks, so the stored coefficient is always the one of the
// ascending product.

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <random>
#include <span>
#include <vector>

namespace cayley {

constexpr int kMaxFormDim = 16;

class MultiIndex {
 public:
  constexpr MultiIndex() = default;
  constexpr explicit MultiIndex(std::uint32_t bits) : bits_(bits) {}
  static MultiIndex of(std::initializer_list<int> slots);
  static MultiIndex of(std::span<const int> slots);
  /// All slots 0..n-1.
  static constexpr MultiIndex full(int n) { return MultiIndex(n >= 32 ? ~0u : ((1u << n) - 1u)); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int grade() const { return std::popcount(bits_); }
  constexpr bool contains(int slot) const { return (bits_ >> slot) & 1u; }
  constexpr MultiIndex with(int slot) const { return MultiIndex(bits_ | (1u << slot)); }
  constexpr MultiIndex without(int slot) const { return MultiIndex(bits_ & ~(1u << slot)); }
  /// Number of set slots strictly below `slot`.
  constexpr int countBelow(int slot) const { return std::popcount(bits_ & ((1u << slot) - 1u)); }
  std::vector<int> slots() const;

  friend constexpr auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::uint32_t bits_ = 0;
};

/// Sign of theta^I ^ theta^J relative to the ascending monomial of I|J; 0 if they overlap.
int wedgeSign(MultiIndex a, MultiIndex b);

class Form {
 public:
  using Terms = std::map<MultiIndex, double>;

  Form(int n, int grade);
  static Form monomial(int n, MultiIndex idx, double coeff = 1.0);
  static Form scalar(int n, double value);
  static Form volume(int n);

  int dim() const { return n_; }
  int grade() const { return p_; }
  const Terms& terms() const { return terms_; }
  bool isZero() const { return terms_.empty(); }
  double coefficient(MultiIndex idx) const;

  /// Adds to a coefficient; entries that cancel to exactly zero are dropped.
  void add(MultiIndex idx, double coeff);

  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(double s);
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, double s) { return a *= s; }
  friend Form operator*(double s, Form a) { return a *= s; }

  /// Removes coefficients with |c| <= tol.
  Form pruned(double tol) const;

 private:
  int n_;
  int p_;
  Terms terms_;
};

/// Max absolute coefficient difference; forms must share n (grades may differ
/// only when one side is zero).
double maxAbsDiff(const Form& a, const Form& b);
double maxAbsCoeff(const Form& a);
double inner(const Form& a, const Form& b);

Form wedge(const Form& a, const Form& b);

/// epsilon(theta^slot): theta^slot ^ form.
Form epsilon(int slot, const Form& f);
/// l(e_slot): contraction in the leading argument.
Form interior(int slot, const Form& f);
/// Covector / vector versions with coefficients in the orthonormal frame.
Form epsilon(std::span<const double> theta, const Form& f);
Form interior(std::span<const double> v, const Form& f);

/// Hodge star with theta^I ^ *theta^I = vol.
Form hodge(const Form& f);

/// Real symmetric n x n matrix a_ij standing in for the first jet of a closed,
/// co-closed 1-form (or the Hessian of a harmonic function).
class HessianSurrogate {
 public:
  HessianSurrogate(int n, std::vector<double> rowMajor, bool traceFree = false);
  static HessianSurrogate zero(int n);
  static HessianSurrogate identity(int n);
  static HessianSurrogate unit(int n, int i, int j);
  /// Entries uniform in [-1, 1], symmetrized; trace removed when requested.
  static HessianSurrogate random(int n, std::mt19937_64& rng, bool traceFree);

  int dim() const { return n_; }
  bool traceFree() const { return traceFree_; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  double trace() const;

 private:
  int n_;
  std::vector<double> a_;
  bool traceFree_;
};

/// T(a, w) = sum_ij a_ij epsilon(theta^i) l(e_j) w.
Form applyHessianOperator(const HessianSurrogate& a, const Form& w);

/// Random grade-p form with `terms` distinct monomials and coefficients in [-1, 1].
Form randomSparseForm(int n, int p, int terms, std::mt19937_64& rng);

struct DualityResiduals {
  double starIdentity = 0.0;    // |*d*(a^w) - (-1)^{n-1} d*(a^*w)|
  double coclosedChain = 0.0;   // |d*(a^*w) - (-1)^{(p-1)(n-p)} sum a_ji eps_i l_j w|
  double closedChain = 0.0;     // |*d*(a^w) - (-1)^{p(n-p-1)+1} sum a_ij eps_i l_j w|
  double max() const;
};

/// Symbol-level evaluation of both sides of the duality identity for a
/// closed, co-closed 1-form with jet `a` against a parallel form `w`.
DualityResiduals dualityResiduals(const HessianSurrogate& a, const Form& w);

struct DualityReport {
  int n = 0;
  int p = 0;
  int trials = 0;
  double maxResidual = 0.0;
  double maxStarIdentity = 0.0;
  double maxCoclosedChain = 0.0;
  double maxClosedChain = 0.0;
};

/// Random trace-free symmetric jets against random sparse constant forms.
/// When `omega` is given it is used for every trial instead.
DualityReport verifyDualityIdentity(int n, int p, int trials, std::uint64_t seed,
                                    const Form* omega = nullptr, int sparseTerms = 12);

/// Text format: one `i1,i2,...:coefficient` line per monomial, 1-based
/// ascending indices; '#' lines are comments. The writer emits a `# n=<n> p=<p>`
/// header which the reader honours when present.
void writeForm(std::ostream& os, const Form& f);
Form readForm(std::istream& is, int n = -1);

}  // namespace cayley
