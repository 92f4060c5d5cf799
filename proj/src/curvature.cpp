#include "cayley/curvature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <ostream>
#include <random>
#include <stdexcept>

namespace cayley {
namespace {

double wedgeNormSq(const Octonion& a, const Octonion& b) {
  const double ab = inner(a, b);
  return inner(a, a) * inner(b, b) - ab * ab;
}

struct PairTable {
  std::array<std::array<int, kTangentDim>, kTangentDim> index{};
  std::array<std::pair<int, int>, kBivectorDim> pairs{};
  PairTable() {
    int k = 0;
    for (int a = 0; a < kTangentDim; ++a) {
      for (int b = a + 1; b < kTangentDim; ++b) {
        index[a][b] = k;
        index[b][a] = k;
        pairs[k] = {a, b};
        ++k;
      }
    }
  }
};

const PairTable& pairTable() {
  static const PairTable t;
  return t;
}

// splitmix64 step, used to derive independent per-start seeds
std::uint64_t deriveSeed(std::uint64_t master, std::uint64_t k) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (k + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

bool orthonormalize(Vec16& x, Vec16& y) {
  const double nx = x.norm();
  if (nx == 0.0) return false;
  x /= nx;
  y -= x.dot(y) * x;
  const double ny = y.norm();
  if (ny < 1e-300) return false;
  y /= ny;
  return true;
}

}  // namespace

Vec16 toVec16(const OctPair& p) {
  Vec16 v;
  for (int k = 0; k < 8; ++k) {
    v[k] = p.x[k];
    v[k + 8] = p.y[k];
  }
  return v;
}

OctPair toOctPair(const Vec16& v) {
  OctPair p;
  for (int k = 0; k < 8; ++k) {
    p.x[k] = v[k];
    p.y[k] = v[k + 8];
  }
  return p;
}

double SectionalFormula::orthonormal(const OctPair& x, const OctPair& y) const {
  const Octonion& a = x.x;
  const Octonion& b = x.y;
  const Octonion& c = y.x;
  const Octonion& d = y.y;
  auto m = [this](const Octonion& u, const Octonion& v) {
    return reading == ProductReading::Standard ? mul(u, v, *table) : mul(v, u, *table);
  };
  const double quarter = 0.25 * (inner(a, a) * inner(d, d) + inner(b, b) * inner(c, c));
  const double mixed = 0.5 * inner(m(a, b), m(c, d)) - inner(m(a, d), m(c, b));
  return alpha * (wedgeNormSq(a, c) + wedgeNormSq(b, d) + quarter + mixed);
}

double SectionalFormula::biquadratic(const Vec16& x, const Vec16& y) const {
  const double xx = x.squaredNorm();
  const double yy = y.squaredNorm();
  const double xy = x.dot(y);
  const double gram = xx * yy - xy * xy;
  if (gram <= 1e-14 * xx * yy || xx == 0.0 || yy == 0.0) return 0.0;
  Vec16 u = x;
  Vec16 v = y;
  orthonormalize(u, v);
  return orthonormal(toOctPair(u), toOctPair(v)) * gram;
}

TwoPlane::TwoPlane(const Vec16& x, const Vec16& y) : x_(x), y_(y) {
  gram_ << x.squaredNorm(), x.dot(y), x.dot(y), y.squaredNorm();
}

bool TwoPlane::valid(double relTol) const {
  return gramDeterminant() > relTol * gram_(0, 0) * gram_(1, 1) && gram_(0, 0) > 0.0 && gram_(1, 1) > 0.0;
}

std::pair<Vec16, Vec16> TwoPlane::orthonormalBasis() const {
  Vec16 u = x_;
  Vec16 v = y_;
  if (!orthonormalize(u, v)) throw std::domain_error("degenerate two-plane");
  return {u, v};
}

std::optional<double> sectional(const SectionalFormula& f, const TwoPlane& plane) {
  if (!plane.valid()) return std::nullopt;
  const auto [u, v] = plane.orthonormalBasis();
  return f.orthonormal(toOctPair(u), toOctPair(v));
}

double polarize(const SectionalFormula& f, const Vec16& x, const Vec16& y, const Vec16& z, const Vec16& w) {
  // g(s, t) is biquadratic in (s, t), so the +-1 stencil gives d^2 g / ds dt exactly.
  auto g = [&](double s, double t) {
    return f.biquadratic(x + s * z, y + t * w) - f.biquadratic(x + s * w, y + t * z);
  };
  const double mixed = (g(1, 1) - g(1, -1) - g(-1, 1) + g(-1, -1)) / 4.0;
  return mixed / 6.0;
}

CurvatureOperator::CurvatureOperator(Eigen::MatrixXd bivectorMatrix) : m_(std::move(bivectorMatrix)) {
  if (m_.rows() != kBivectorDim || m_.cols() != kBivectorDim) {
    throw std::invalid_argument("curvature operator must be 120 x 120");
  }
}

int CurvatureOperator::pairIndex(int a, int b) {
  if (a == b || a < 0 || b < 0 || a >= kTangentDim || b >= kTangentDim) {
    throw std::out_of_range("pairIndex: need distinct slots in [0, 16)");
  }
  return pairTable().index[a][b];
}

std::pair<int, int> CurvatureOperator::pairAt(int index) { return pairTable().pairs.at(static_cast<std::size_t>(index)); }

Eigen::VectorXd CurvatureOperator::bivector(const Vec16& x, const Vec16& y) {
  Eigen::VectorXd b(kBivectorDim);
  const auto& pairs = pairTable().pairs;
  for (int k = 0; k < kBivectorDim; ++k) {
    const auto [a, c] = pairs[k];
    b[k] = x[a] * y[c] - x[c] * y[a];
  }
  return b;
}

double CurvatureOperator::component(int a, int b, int c, int d) const {
  if (a == b || c == d) return 0.0;
  const double s = (a < b ? 1.0 : -1.0) * (c < d ? 1.0 : -1.0);
  return s * m_(pairIndex(a, b), pairIndex(c, d));
}

double CurvatureOperator::evaluate(const Vec16& x, const Vec16& y, const Vec16& z, const Vec16& w) const {
  return bivector(x, y).dot(m_ * bivector(z, w));
}

std::optional<double> CurvatureOperator::sectional(const Vec16& x, const Vec16& y) const {
  const TwoPlane plane(x, y);
  if (!plane.valid()) return std::nullopt;
  return evaluate(x, y, x, y) / plane.gramDeterminant();
}

Mat16 CurvatureOperator::jacobiOperator(const Vec16& u) const {
  Eigen::MatrixXd cols(kBivectorDim, kTangentDim);
  for (int a = 0; a < kTangentDim; ++a) cols.col(a) = bivector(Vec16::Unit(a), u);
  const Eigen::MatrixXd j = cols.transpose() * m_ * cols;
  return j;
}

void CurvatureOperator::writeCsv(std::ostream& os) const {
  const auto old = os.precision(17);
  for (int i = 0; i < kBivectorDim; ++i) {
    for (int j = 0; j < kBivectorDim; ++j) os << (j ? "," : "") << m_(i, j);
    os << '\n';
  }
  os.precision(old);
}

CurvatureOperator assemble(const SectionalFormula& f) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(kBivectorDim, kBivectorDim);
  for (int p = 0; p < kBivectorDim; ++p) {
    const auto [a, b] = CurvatureOperator::pairAt(p);
    for (int q = p; q < kBivectorDim; ++q) {
      const auto [c, d] = CurvatureOperator::pairAt(q);
      const double v = polarize(f, Vec16::Unit(a), Vec16::Unit(b), Vec16::Unit(c), Vec16::Unit(d));
      m(p, q) = v;
      m(q, p) = v;
    }
  }
  return CurvatureOperator(std::move(m));
}

Mat16 ricci(const CurvatureOperator& r) {
  Mat16 ric = Mat16::Zero();
  for (int c = 0; c < kTangentDim; ++c) {
    for (int d = 0; d < kTangentDim; ++d) {
      double s = 0.0;
      for (int a = 0; a < kTangentDim; ++a) s += r.component(c, a, d, a);
      ric(c, d) = s;
    }
  }
  return ric;
}

std::vector<double> radialSpectrum(const CurvatureOperator& r, const Vec16& u) {
  if (std::fabs(u.norm() - 1.0) > 1e-9) throw std::invalid_argument("radialSpectrum: u must be a unit vector");
  Eigen::SelfAdjointEigenSolver<Mat16> es(r.jacobiOperator(u), Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

PlaneOptimum optimizePlane(const CurvatureOperator& r, Vec16 x, Vec16 y, int direction, const PinchOptions& opts) {
  if (direction != 1 && direction != -1) throw std::invalid_argument("optimizePlane: direction must be +1 or -1");
  if (!orthonormalize(x, y)) throw std::invalid_argument("optimizePlane: degenerate start");
  const Eigen::MatrixXd& m = r.matrix();
  const auto& pairs = pairTable().pairs;

  auto valueAndGradient = [&](const Vec16& u, const Vec16& v, Vec16* gu, Vec16* gv) {
    const Eigen::VectorXd b = CurvatureOperator::bivector(u, v);
    const Eigen::VectorXd w = m * b;
    if (gu && gv) {
      Mat16 W = Mat16::Zero();
      for (int k = 0; k < kBivectorDim; ++k) {
        W(pairs[k].first, pairs[k].second) = w[k];
        W(pairs[k].second, pairs[k].first) = -w[k];
      }
      *gu = 2.0 * W * v;
      *gv = -2.0 * W * u;
    }
    return b.dot(w);
  };

  double step = opts.step;
  Vec16 gx, gy;
  double value = valueAndGradient(x, y, &gx, &gy);
  int steps = 0;
  for (; steps < opts.maxSteps; ++steps) {
    // tangential part: strip components inside the current plane
    const Vec16 px = gx - x * x.dot(gx) - y * y.dot(gx);
    const Vec16 py = gy - x * x.dot(gy) - y * y.dot(gy);
    if (std::sqrt(px.squaredNorm() + py.squaredNorm()) < opts.gradientTol) break;
    bool accepted = false;
    while (step > 1e-14) {
      Vec16 nx = x + direction * step * px;
      Vec16 ny = y + direction * step * py;
      if (orthonormalize(nx, ny)) {
        const double nv = valueAndGradient(nx, ny, nullptr, nullptr);
        if (direction * (nv - value) > 0.0) {
          x = nx;
          y = ny;
          value = valueAndGradient(x, y, &gx, &gy);
          accepted = true;
          break;
        }
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return {value, x, y, steps};
}

PinchResult pinchExtremes(const CurvatureOperator& r, const PinchOptions& opts) {
  if (opts.starts < 1) throw std::invalid_argument("pinchExtremes: need at least one start");
  auto run = [&](int k) {
    std::mt19937_64 rng(deriveSeed(opts.seed, static_cast<std::uint64_t>(k)));
    std::normal_distribution<double> nd;
    Vec16 x, y;
    for (int i = 0; i < kTangentDim; ++i) x[i] = nd(rng);
    for (int i = 0; i < kTangentDim; ++i) y[i] = nd(rng);
    return std::make_pair(optimizePlane(r, x, y, -1, opts), optimizePlane(r, x, y, +1, opts));
  };

  std::vector<std::pair<PlaneOptimum, PlaneOptimum>> runs(static_cast<std::size_t>(opts.starts));
  if (opts.parallel) {
    std::vector<std::future<std::pair<PlaneOptimum, PlaneOptimum>>> futures;
    for (int k = 0; k < opts.starts; ++k) futures.push_back(std::async(std::launch::async, run, k));
    for (int k = 0; k < opts.starts; ++k) runs[static_cast<std::size_t>(k)] = futures[static_cast<std::size_t>(k)].get();
  } else {
    for (int k = 0; k < opts.starts; ++k) runs[static_cast<std::size_t>(k)] = run(k);
  }

  PinchResult res;
  res.min = runs.front().first;
  res.max = runs.front().second;
  for (const auto& [lo, hi] : runs) {
    res.descentValues.push_back(lo.value);
    res.ascentValues.push_back(hi.value);
    if (lo.value < res.min.value) res.min = lo;
    if (hi.value > res.max.value) res.max = hi;
  }
  return res;
}

}  // namespace cayley
