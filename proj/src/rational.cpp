#include "cayley/rational.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cayley {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = g ? num / g : 0;
  den_ = g ? den / g : 1;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}
Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
Rational operator*(const Rational& a, const Rational& b) {
  return {a.num_ * b.num_, a.den_ * b.den_};
}
Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::optional<Rational> recoverRational(double x, std::int64_t maxDen, double tol) {
  if (!std::isfinite(x)) return std::nullopt;
  // Convergents h_k / k_k of the continued fraction of x.
  std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double rem = x;
  std::optional<Rational> best;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(rem);
    if (std::fabs(fl) > 1e15) break;
    const auto a = static_cast<std::int64_t>(fl);
    const std::int64_t h2 = a * h1 + h0;
    const std::int64_t k2 = a * k1 + k0;
    if (k2 > maxDen) break;
    best = Rational(h2, k2);
    if (std::fabs(best->value() - x) <= tol * 1e-3) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    const double frac = rem - fl;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  if (!best || std::fabs(best->value() - x) > tol) return std::nullopt;
  return best;
}

}  // namespace cayley
