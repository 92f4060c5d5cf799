#include "cayley/octonion.hpp"

#include <cmath>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace cayley {
namespace {

MultiplicationTable buildCanonical() {
  MultiplicationTable t;
  for (int a = 0; a < 8; ++a) {
    t.set(0, a, {a, 1});
    t.set(a, 0, {a, 1});
  }
  for (int i = 1; i < 8; ++i) t.set(i, i, {0, -1});
  for (int i = 0; i < 7; ++i) {
    const int triple[3] = {i, (i + 1) % 7, (i + 3) % 7};
    for (int r = 0; r < 3; ++r) {
      const int x = triple[r] + 1;
      const int y = triple[(r + 1) % 3] + 1;
      const int z = triple[(r + 2) % 3] + 1;
      t.set(x, y, {z, 1});
      t.set(y, x, {z, -1});
    }
  }
  return t;
}

}  // namespace

const MultiplicationTable& MultiplicationTable::canonical() {
  static const MultiplicationTable table = buildCanonical();
  return table;
}

MultiplicationTable MultiplicationTable::parse(std::istream& in) {
  MultiplicationTable t;
  std::string line;
  int row = 0;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    if (row >= kSize) throw std::invalid_argument("multiplication table: more than 8 rows");
    std::istringstream ls(line);
    std::string tok;
    int col = 0;
    while (ls >> tok) {
      if (col >= kSize) throw std::invalid_argument("multiplication table: row " + std::to_string(row) + " has more than 8 entries");
      if (tok.size() != 2 || (tok[0] != '+' && tok[0] != '-') || tok[1] < '0' || tok[1] > '7') {
        throw std::invalid_argument("multiplication table: bad token '" + tok + "'");
      }
      t.set(row, col, {tok[1] - '0', tok[0] == '+' ? 1 : -1});
      ++col;
    }
    if (col != kSize) throw std::invalid_argument("multiplication table: row " + std::to_string(row) + " has fewer than 8 entries");
    ++row;
  }
  if (row != kSize) throw std::invalid_argument("multiplication table: expected 8 rows");
  return t;
}

std::string MultiplicationTable::toText() const {
  std::ostringstream os;
  for (int a = 0; a < kSize; ++a) {
    for (int b = 0; b < kSize; ++b) {
      const auto p = entries_[a][b];
      os << (b ? " " : "") << (p.sign > 0 ? '+' : '-') << p.index;
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> MultiplicationTable::defects() const {
  std::vector<std::string> out;
  auto name = [](int s) { return s == 0 ? std::string("1") : "e" + std::to_string(s - 1); };
  for (int a = 0; a < kSize; ++a) {
    if (entries_[0][a] != BasisProduct{a, 1} || entries_[a][0] != BasisProduct{a, 1}) {
      out.push_back("unit law fails for " + name(a));
    }
  }
  for (int i = 1; i < kSize; ++i) {
    if (entries_[i][i] != BasisProduct{0, -1}) out.push_back(name(i) + "^2 != -1");
    for (int j = 1; j < kSize; ++j) {
      if (i == j) continue;
      const auto p = entries_[i][j];
      const auto q = entries_[j][i];
      if (p.index == 0) out.push_back(name(i) + name(j) + " is not imaginary");
      if (p.index != q.index || p.sign != -q.sign) {
        out.push_back(name(i) + name(j) + " != -" + name(j) + name(i));
      }
    }
  }
  return out;
}

Octonion Octonion::real(double alpha) {
  Octonion o;
  o.c_[0] = alpha;
  return o;
}

Octonion Octonion::basis(int slot) {
  if (slot < 0 || slot >= kDim) throw std::out_of_range("octonion basis slot");
  Octonion o;
  o.c_[slot] = 1.0;
  return o;
}

Octonion Octonion::imaginaryPart() const {
  Octonion o = *this;
  o.c_[0] = 0.0;
  return o;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (int k = 0; k < kDim; ++k) c_[k] += o.c_[k];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (int k = 0; k < kDim; ++k) c_[k] -= o.c_[k];
  return *this;
}

Octonion& Octonion::operator*=(double s) {
  for (double& v : c_) v *= s;
  return *this;
}

Octonion mul(const Octonion& a, const Octonion& b, const MultiplicationTable& table) {
  Octonion r;
  for (int i = 0; i < Octonion::kDim; ++i) {
    if (a[i] == 0.0) continue;
    for (int j = 0; j < Octonion::kDim; ++j) {
      const auto p = table(i, j);
      r[p.index] += p.sign * a[i] * b[j];
    }
  }
  return r;
}

Octonion conj(const Octonion& a) {
  Octonion r = -a;
  r[0] = a[0];
  return r;
}

double inner(const Octonion& a, const Octonion& b) {
  double s = 0.0;
  for (int k = 0; k < Octonion::kDim; ++k) s += a[k] * b[k];
  return s;
}

double norm(const Octonion& a) { return std::sqrt(inner(a, a)); }

double maxAbsDiff(const Octonion& a, const Octonion& b) {
  double m = 0.0;
  for (int k = 0; k < Octonion::kDim; ++k) m = std::max(m, std::fabs(a[k] - b[k]));
  return m;
}

OctPair OctPair::fromArray(std::span<const double, 16> v) {
  OctPair p;
  for (int k = 0; k < 8; ++k) {
    p.x[k] = v[k];
    p.y[k] = v[k + 8];
  }
  return p;
}

std::array<double, 16> OctPair::toArray() const {
  std::array<double, 16> v{};
  for (int k = 0; k < 8; ++k) {
    v[k] = x[k];
    v[k + 8] = y[k];
  }
  return v;
}

double inner(const OctPair& p, const OctPair& q) { return inner(p.x, q.x) + inner(p.y, q.y); }
double norm(const OctPair& p) { return std::sqrt(inner(p, p)); }

}  // namespace cayley
