#pragma once

// Curvature model of the Cayley hyperbolic plane on T = O^2 = R^16.
//
// Convention: R(x, y, z, w) = <R(x ^ y), z ^ w>, so R(x, y, x, y) is the
// sectional numerator K(x ^ y) * |x ^ y|^2 and the adapted-frame diagonal is
// R_{1i1i} = alpha for 2 <= i <= 8, alpha / 4 for 9 <= i <= 16.

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "cayley/octonion.hpp"

namespace cayley {

using Vec16 = Eigen::Matrix<double, 16, 1>;
using Mat16 = Eigen::Matrix<double, 16, 16>;

constexpr int kTangentDim = 16;
constexpr int kBivectorDim = 120;

Vec16 toVec16(const OctPair& p);
OctPair toOctPair(const Vec16& v);

/// Which multiplication order the mixed term of the sectional formula uses:
/// Standard evaluates 1/2 <ab, cd> - <ad, cb>; Reversed evaluates
/// 1/2 <ba, dc> - <da, bc>.
enum class ProductReading { Standard, Reversed };

struct SectionalFormula {
  double alpha = -4.0;
  ProductReading reading = ProductReading::Standard;
  const MultiplicationTable* table = &MultiplicationTable::canonical();

  /// The closed-form expression for an orthonormal pair (a, b), (c, d).
  double orthonormal(const OctPair& x, const OctPair& y) const;
  /// B(x, y) = K(span{x, y}) * (|x|^2 |y|^2 - <x, y>^2); zero on (near-)parallel input.
  double biquadratic(const Vec16& x, const Vec16& y) const;
};

class TwoPlane {
 public:
  TwoPlane(const Vec16& x, const Vec16& y);
  TwoPlane(const OctPair& x, const OctPair& y) : TwoPlane(toVec16(x), toVec16(y)) {}

  const Vec16& x() const { return x_; }
  const Vec16& y() const { return y_; }
  const Eigen::Matrix2d& gram() const { return gram_; }
  double gramDeterminant() const { return gram_.determinant(); }
  /// Non-degenerate when det(Gram) > relTol * |x|^2 |y|^2.
  bool valid(double relTol = 1e-10) const;
  /// Gram-Schmidt orthonormal basis of the plane.
  std::pair<Vec16, Vec16> orthonormalBasis() const;

 private:
  Vec16 x_;
  Vec16 y_;
  Eigen::Matrix2d gram_;
};

/// Sectional curvature from the closed-form expression; nullopt for a degenerate plane.
std::optional<double> sectional(const SectionalFormula& f, const TwoPlane& plane);

/// R(x, y, z, w) by exact four-point polarization of the biquadratic form.
double polarize(const SectionalFormula& f, const Vec16& x, const Vec16& y, const Vec16& z, const Vec16& w);

class CurvatureOperator {
 public:
  explicit CurvatureOperator(Eigen::MatrixXd bivectorMatrix);

  /// Position of e_a ^ e_b (a < b) in the lexicographic bivector basis.
  static int pairIndex(int a, int b);
  static std::pair<int, int> pairAt(int index);
  static Eigen::VectorXd bivector(const Vec16& x, const Vec16& y);

  const Eigen::MatrixXd& matrix() const { return m_; }
  double component(int a, int b, int c, int d) const;
  double evaluate(const Vec16& x, const Vec16& y, const Vec16& z, const Vec16& w) const;
  std::optional<double> sectional(const Vec16& x, const Vec16& y) const;
  /// Symmetric matrix of X -> R(X, u)u in the form J_ab = R(e_a, u, e_b, u).
  Mat16 jacobiOperator(const Vec16& u) const;

  void writeCsv(std::ostream& os) const;

 private:
  Eigen::MatrixXd m_;
};

CurvatureOperator assemble(const SectionalFormula& f = {});

/// Ric(u, v) = sum_A R(u, e_A, v, e_A).
Mat16 ricci(const CurvatureOperator& r);

/// Ascending eigenvalues of the Jacobi operator along the unit vector u.
std::vector<double> radialSpectrum(const CurvatureOperator& r, const Vec16& u);

struct PinchOptions {
  int starts = 64;
  int maxSteps = 10000;
  double step = 1e-2;
  double gradientTol = 1e-9;
  std::uint64_t seed = 1;
  bool parallel = false;
};

struct PlaneOptimum {
  double value = 0.0;
  Vec16 x = Vec16::Zero();
  Vec16 y = Vec16::Zero();
  int steps = 0;
};

/// Projected gradient ascent (direction = +1) or descent (-1) of K over
/// orthonormal pairs, re-orthonormalized every step.
PlaneOptimum optimizePlane(const CurvatureOperator& r, Vec16 x, Vec16 y, int direction,
                           const PinchOptions& opts = {});

struct PinchResult {
  PlaneOptimum min;
  PlaneOptimum max;
  std::vector<double> descentValues;
  std::vector<double> ascentValues;
};

PinchResult pinchExtremes(const CurvatureOperator& r, const PinchOptions& opts = {});

}  // namespace cayley
