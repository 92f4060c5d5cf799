#pragma once

// Sharp Bochner ratios |Hess f|^2 / |grad |grad f||^2 under the linear
// constraints a parallel form imposes on the Hessian, refined Kato exponents
// and the associated vanishing thresholds.

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

#include "cayley/forms.hpp"
#include "cayley/rational.hpp"
#include "json.hpp"

namespace cayley {

/// Minimize sum_ij a_ij^2 / sum_j a_{d j}^2 over symmetric, trace-free a
/// satisfying `constraints`, with d the distinguished row.
struct RatioProblem {
  int n = 0;
  ConstraintSet constraints{1};
  int distinguished = 0;

  static RatioProblem kahler(int complexDim);
  static RatioProblem quaternionic(int quaternionicDim);
  static RatioProblem spin9();
  /// Constraint set with the trace appended, canonicalized.
  ConstraintSet withTrace() const;
};

struct KernelResult {
  double ratio = 0.0;
  std::optional<Rational> rational;
  double numericRatio = 0.0;
  std::optional<double> closedFormRatio;
  int blockSize = 0;
  Eigen::MatrixXd minimizer;
  /// Same minimizer after a permutation of the non-distinguished slots and a
  /// rescaling: a_dd < 0 and the largest remaining diagonal entry equal to 1.
  Eigen::MatrixXd canonicalMinimizer;
  double mu = 0.0;
  double katoB = 0.0;
  double exponent = 0.0;
  int topMultiplicity = 0;

  nlohmann::json toJson() const;
};

double bochnerObjective(const Eigen::MatrixXd& a, int distinguished = 0);

/// Smallest s such that some constraint reads sum_{i in S} a_ii = 0 with the
/// distinguished slot in S, |S| = s. Empty when no such block exists.
std::optional<int> diagonalBlockSize(const RatioProblem& p);

/// Throws std::invalid_argument when the feasible set has no matrix with a
/// nonzero distinguished row, and std::runtime_error if the closed form and
/// the generalized eigensolve disagree by more than 1e-8.
KernelResult minBochnerRatio(const RatioProblem& p);

/// Packed (upper-triangular, row-major) coordinates of a symmetric matrix.
Eigen::VectorXd packSymmetric(const Eigen::MatrixXd& a);
Eigen::MatrixXd unpackSymmetric(int n, const Eigen::VectorXd& v);

/// Orthonormal basis of the feasible subspace (columns, packed coordinates).
Eigen::MatrixXd feasibleBasis(const RatioProblem& p);

/// -(b + 1) lambda1. Throws std::invalid_argument for b <= -1 or lambda1 <= 0.
double vanishingThreshold(double b, double lambda1);

struct Spin9Bound {
  Rational stated{216, 7};
  Rational katoDrift;      // 36 * (6/7)
  Rational corollaryRoute; // lambda with (1 + 1/7) lambda = 36
  bool consistent = false;
};
Spin9Bound spin9SpectralBound();

/// Coefficients of Delta(h^k) - (-a h^k) after substituting the Kato
/// inequality, as a polynomial in h^{k-2}|grad h|^2 and h^k.
struct KatoTransform {
  Rational ratio;
  Rational b;
  Rational exponent;
  Rational drift;
  Rational gradientCoefficient;  // k (b + k - 1), zero when the transform closes
  Rational potentialCoefficient; // -|ric| k
  bool degenerate = false;
  bool identityHolds = false;

  nlohmann::json toJson() const;
};

/// Requires ratio in (1, 2] and ricci < 0, both exactly representable with
/// denominator <= 64; throws std::invalid_argument otherwise.
KatoTransform katoTransform(double ratio, double ricci);

struct EqualityReport {
  double maxOffDiagonal = 0.0;
  double mu = 0.0;
  std::vector<double> diagonal;
  double patternResidual = 0.0;  // against the expected block pattern, if given
  bool pass = false;
};

/// Checks the canonical minimizer is diagonal; when `pattern` is non-empty,
/// compares the canonical diagonal to it entrywise.
EqualityReport equalityDiagnostics(const KernelResult& r, const std::vector<double>& pattern = {}, double tol = 1e-9);

}  // namespace cayley
