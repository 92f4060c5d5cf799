#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace cayley {

/// Exact fraction with a positive denominator, always kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  Rational operator-() const { return {-num_, den_}; }
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& b) { return *this = *this + b; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Continued-fraction reconstruction. Returns the convergent with denominator
// <= maxDen closest to x, provided it lies within tol of x.
std::optional<Rational> recoverRational(double x, std::int64_t maxDen = 64, double tol = 1e-9);

}  // namespace cayley
