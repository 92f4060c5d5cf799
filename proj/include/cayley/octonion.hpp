#pragma once

// Cayley numbers over the canonical basis {1, e0, ..., e6}.
//
// Coefficient slot 0 holds the real part; slot k+1 holds the e_k component.
// The imaginary products are generated by e_i e_{i+1} = e_{i+3} (indices mod 7),
// closed under cyclic rotation of each triple and anticommutation.

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace cayley {

/// Signed basis index: e_a e_b = sign * basis[index].
struct BasisProduct {
  int index = 0;
  int sign = 1;
  friend bool operator==(const BasisProduct&, const BasisProduct&) = default;
};

class MultiplicationTable {
 public:
  static constexpr int kSize = 8;

  /// The table generated from the seven Fano triples (i, i+1, i+3).
  static const MultiplicationTable& canonical();

  /// Parses 8 rows of 8 signed slot tokens such as "+3" or "-0".
  /// Lines starting with '#' are ignored. Throws std::invalid_argument.
  static MultiplicationTable parse(std::istream& in);
  std::string toText() const;

  BasisProduct operator()(int a, int b) const { return entries_[a][b]; }
  void set(int a, int b, BasisProduct p) { entries_[a][b] = p; }

  /// Human-readable list of violated table rules (unit, e_i^2 = -1,
  /// anticommutation, closure on imaginary units). Empty when consistent.
  std::vector<std::string> defects() const;

 private:
  std::array<std::array<BasisProduct, kSize>, kSize> entries_{};
};

class Octonion {
 public:
  static constexpr int kDim = 8;

  constexpr Octonion() = default;
  explicit constexpr Octonion(const std::array<double, kDim>& coeffs) : c_(coeffs) {}

  static Octonion real(double alpha);
  /// Basis element by slot: 0 is the unit, k+1 is e_k.
  static Octonion basis(int slot);
  /// Imaginary unit e_i, 0 <= i <= 6.
  static Octonion e(int i) { return basis(i + 1); }

  double operator[](int slot) const { return c_[slot]; }
  double& operator[](int slot) { return c_[slot]; }
  std::span<const double, kDim> coeffs() const { return c_; }

  double realPart() const { return c_[0]; }
  Octonion imaginaryPart() const;

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(double s);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= -1.0; }
  friend Octonion operator*(Octonion a, double s) { return a *= s; }
  friend Octonion operator*(double s, Octonion a) { return a *= s; }
  friend bool operator==(const Octonion&, const Octonion&) = default;

 private:
  std::array<double, kDim> c_{};
};

Octonion mul(const Octonion& a, const Octonion& b,
             const MultiplicationTable& table = MultiplicationTable::canonical());
inline Octonion operator*(const Octonion& a, const Octonion& b) { return mul(a, b); }

Octonion conj(const Octonion& a);
double inner(const Octonion& a, const Octonion& b);
double norm(const Octonion& a);
/// Largest absolute coefficient difference.
double maxAbsDiff(const Octonion& a, const Octonion& b);

/// An element of O^2 = R^16, the tangent-space model of the Cayley hyperbolic plane.
struct OctPair {
  Octonion x;
  Octonion y;

  static OctPair fromArray(std::span<const double, 16> v);
  std::array<double, 16> toArray() const;
};

double inner(const OctPair& p, const OctPair& q);
double norm(const OctPair& p);

}  // namespace cayley
