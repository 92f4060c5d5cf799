#pragma once

// Parallel forms of Kähler, quaternionic-Kähler and Spin(9) geometry, and the
// linear constraints that T(a, Omega) = 0 imposes on a symmetric Hessian a.

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cayley/exterior.hpp"
#include "json.hpp"

namespace cayley {

/// One 2-form factor of an F-word: v_{sigma(first)} ^ v_{sigma(second)} for
/// block V, w_{tau(first)} ^ w_{tau(second)} for block W.
struct FFactor {
  enum class Block { V, W };
  Block block = Block::V;
  int first = 0;
  int second = 1;
};

struct FWord {
  double coefficient = 1.0;
  std::vector<FFactor> factors;
};

/// The undetermined part F of the Spin(9) 8-form: a linear combination of
/// grade-8 wedge words in the v-pairs and w-pairs.
struct FSpec {
  std::array<int, 8> sigma{0, 1, 2, 3, 4, 5, 6, 7};
  std::array<int, 8> tau{0, 1, 2, 3, 4, 5, 6, 7};
  std::vector<FWord> words;

  /// Throws std::invalid_argument unless sigma and tau are injective into
  /// {0..7} and every word has four factors, both blocks represented, and
  /// distinct indices inside each factor.
  void validate() const;
  static FSpec random(std::mt19937_64& rng, int words);
};

struct ParallelFormSpec {
  enum class Kind { Kahler, Quaternionic, Spin9 };
  Kind kind = Kind::Spin9;
  int n = 1;  // complex / quaternionic dimension; ignored for Spin9
  FSpec f;

  static ParallelFormSpec kahler(int n);
  static ParallelFormSpec quaternionic(int n);
  static ParallelFormSpec spin9(FSpec f = {});
  int dimension() const;
};

/// v_0 ^ ... ^ v_7 (slots 0..7) and w_0 ^ ... ^ w_7 (slots 8..15).
MultiIndex vTop();
MultiIndex wTop();

/// Kähler: frame (e_1..e_n, Ie_1..Ie_n). Quaternionic: blocks (e, Ie, Je, Ke).
/// Spin9: v-block then w-block.
Form buildForm(const ParallelFormSpec& spec);
Form buildF(const FSpec& f);

/// The monomials whose coefficients carry the diagonal-block constraints:
/// theta^i ^ theta^{n+i} (Kähler), theta^i ^ theta^{i+n} ^ theta^{i+2n} ^ theta^{i+3n}
/// (quaternionic), and the two top monomials (Spin9).
std::vector<MultiIndex> anchorMonomials(const ParallelFormSpec& spec);

/// L(a) = sum_{i <= j} c_ij a_ij on symmetric n x n matrices.
class SymmetricFunctional {
 public:
  explicit SymmetricFunctional(int n);
  static int packedSize(int n) { return n * (n + 1) / 2; }
  static int packedIndex(int n, int i, int j);

  int dim() const { return n_; }
  double coeff(int i, int j) const { return c_[static_cast<std::size_t>(packedIndex(n_, i, j))]; }
  void setCoeff(int i, int j, double v) { c_[static_cast<std::size_t>(packedIndex(n_, i, j))] = v; }
  const std::vector<double>& packed() const { return c_; }
  std::vector<double>& packed() { return c_; }

  double evaluate(const Eigen::MatrixXd& a) const;
  bool isZero(double tol = 0.0) const;
  /// e.g. "a11 + a33" with 1-based indices.
  std::string str() const;
  nlohmann::json toJson() const;

  static SymmetricFunctional trace(int n);
  static SymmetricFunctional diagonalSum(int n, const std::vector<int>& slots);

 private:
  int n_;
  std::vector<double> c_;
};

/// Canonical (row-reduced, rationalized, deduplicated) set of linear functionals.
class ConstraintSet {
 public:
  explicit ConstraintSet(int n) : n_(n) {}
  /// Gaussian elimination with partial pivoting; entries within 1e-9 of a
  /// fraction with denominator <= 64 are snapped to it.
  static ConstraintSet canonical(int n, const std::vector<SymmetricFunctional>& raw, double tol = 1e-9);

  int dim() const { return n_; }
  const std::vector<SymmetricFunctional>& functionals() const { return functionals_; }
  std::size_t size() const { return functionals_.size(); }

  /// Constraints that depend on the chosen F and are not part of the portable set.
  const std::vector<SymmetricFunctional>& formDependent() const { return formDependent_; }
  void setFormDependent(std::vector<SymmetricFunctional> extra) { formDependent_ = std::move(extra); }

  ConstraintSet with(const SymmetricFunctional& extra) const;
  bool satisfiedBy(const Eigen::MatrixXd& a, double tol = 1e-10) const;
  /// Same span as `other` (after canonicalization both are RREF, so compare rows).
  bool equivalentTo(const ConstraintSet& other, double tol = 1e-9) const;
  nlohmann::json toJson() const;

 private:
  int n_;
  std::vector<SymmetricFunctional> functionals_;
  std::vector<SymmetricFunctional> formDependent_;
};

/// Coefficient functional a -> coeff_m T(a, omega).
SymmetricFunctional monomialFunctional(const Form& omega, MultiIndex m);

/// Constraints from the requested monomials (default: every monomial with a
/// nonzero coefficient functional).
ConstraintSet extractConstraints(const Form& omega, const std::vector<MultiIndex>* targets = nullptr);

/// Portable constraints (top monomials) for Spin(9); every other nonzero
/// coefficient functional is reported as form-dependent.
ConstraintSet extractSpin9Constraints(const FSpec& f);

struct NoLeakReport {
  int pairsChecked = 0;
  double maxLeak = 0.0;
  bool pass = false;
};

/// Checks that eps(theta^i) l(e_j) F never reaches the pure-v or pure-w top monomial.
NoLeakReport noLeakLemma(const FSpec& f, double tol = 1e-12);

}  // namespace cayley
