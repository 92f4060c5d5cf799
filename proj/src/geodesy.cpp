#include "cayley/geodesy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cayley {
namespace {

double coth(double x) { return 1.0 / std::tanh(x); }

double logSinh(double x) { return x - std::log(2.0) + std::log(-std::expm1(-2.0 * x)); }

double simpsonStep(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
                   double whole, double absTol, double relTol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  const double tol = std::max(absTol, relTol * std::fabs(left + right));
  if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  return simpsonStep(f, a, m, fa, flm, fm, left, 0.5 * absTol, relTol, depth - 1) +
         simpsonStep(f, m, b, fm, frm, fb, right, 0.5 * absTol, relTol, depth - 1);
}

// Number of eigenvalues of the symmetric tridiagonal (d, e) below x.
int sturmCount(const std::vector<double>& d, const std::vector<double>& e, double x) {
  int count = 0;
  double q = 1.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double off = i ? e[i - 1] * e[i - 1] : 0.0;
    q = d[i] - x - (i ? off / q : 0.0);
    if (q == 0.0) q = -std::numeric_limits<double>::epsilon() * (std::fabs(d[i]) + std::fabs(x) + 1.0);
    if (q < 0.0) ++count;
  }
  return count;
}

}  // namespace

const RadialModel& RadialModel::cayleyHyperbolic() {
  static const RadialModel m;
  return m;
}

int RadialModel::sphereDimension() const {
  int s = 0;
  for (const auto& mode : modes) s += mode.multiplicity;
  return s;
}

double RadialModel::laplacianDistance(double r) const {
  double s = 0.0;
  for (const auto& mode : modes) s += mode.multiplicity * hessianEigen(mode.c, r);
  return s;
}

double RadialModel::logArea(double r) const {
  double s = 0.0;
  for (const auto& mode : modes) s += mode.multiplicity * logSinh(mode.c * r);
  return s;
}

double laplacianDistance(double r) {
  if (!(r > 0.0)) throw std::domain_error("laplacianDistance: r must be positive");
  return 14.0 * coth(2.0 * r) + 8.0 * coth(r);
}

double jacobiProfile(double c, double L, double t) {
  if (!(L > 0.0)) throw std::domain_error("jacobiProfile: L must be positive");
  if (t < 0.0 || t > L) throw std::domain_error("jacobiProfile: t outside [0, L]");
  return std::sinh(c * t) / std::sinh(c * L);
}

double jacobiProfileDerivative(double c, double L, double t) {
  if (!(L > 0.0)) throw std::domain_error("jacobiProfileDerivative: L must be positive");
  return c * std::cosh(c * t) / std::sinh(c * L);
}

double hessianEigen(double c, double L) {
  if (!(L > 0.0)) throw std::domain_error("hessianEigen: L must be positive");
  return c * coth(c * L);
}

double logArea(double r) {
  if (!(r > 0.0)) throw std::domain_error("logArea: r must be positive");
  return 7.0 * logSinh(2.0 * r) + 8.0 * logSinh(r);
}

double logAreaDerivative(double r) {
  const double h = std::min(1e-3, 0.25 * r);
  auto central = [r](double step) { return (logArea(r + step) - logArea(r - step)) / (2.0 * step); };
  const double d1 = central(h);
  const double d2 = central(0.5 * h);
  return (4.0 * d2 - d1) / 3.0;
}

AreaVolume areaVolume(double r) {
  if (r < 0.0) throw std::domain_error("areaVolume: r must be non-negative");
  if (r == 0.0) return {0.0, 0.0};
  const double area = r <= 20.0 ? std::pow(std::sinh(2.0 * r), 7) * std::pow(std::sinh(r), 8) : std::exp(logArea(r));
  return {area, std::exp(logVolume(r))};
}

double logVolume(double r) {
  if (!(r > 0.0)) throw std::domain_error("logVolume: r must be positive");
  // scale the integrand by A(r) so it stays O(1) for every r
  const double scale = logArea(r);
  const double scaled = integrate(
      [scale](double t) { return t <= 0.0 ? 0.0 : std::exp(logArea(t) - scale); }, 0.0, r, 1e-14, 1e-12);
  return scale + std::log(scaled);
}

double integrate(const std::function<double(double)>& f, double a, double b, double absTol, double relTol,
                 int maxDepth) {
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpsonStep(f, a, b, fa, fm, fb, whole, absTol, relTol, maxDepth);
}

double lowestEigenvalue(const SturmLiouvilleProblem& problem) {
  const int n = problem.grid;
  const double R = problem.radius;
  if (n < 2 || !(R > 0.0)) throw std::invalid_argument("lowestEigenvalue: need grid >= 2 and radius > 0");
  const double h = R / n;
  const double h2 = h * h;

  // cell centres (i + 1/2) h, faces i h; the face at r = 0 carries zero flux
  std::vector<double> logCell(static_cast<std::size_t>(n));
  std::vector<double> logFace(static_cast<std::size_t>(n + 1));
  for (int i = 0; i < n; ++i) logCell[static_cast<std::size_t>(i)] = problem.logWeight((i + 0.5) * h);
  for (int i = 1; i <= n; ++i) logFace[static_cast<std::size_t>(i)] = problem.logWeight(i * h);

  std::vector<double> diag(static_cast<std::size_t>(n));
  std::vector<double> off(static_cast<std::size_t>(n - 1));
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double left = i == 0 ? 0.0 : std::exp(logFace[k] - logCell[k]);
    double right = std::exp(logFace[k + 1] - logCell[k]);
    if (i == n - 1) right *= 2.0;  // ghost value -u_N puts the zero on the face r = R
    diag[k] = (left + right) / h2;
    if (i + 1 < n) off[k] = -std::exp(logFace[k + 1] - 0.5 * (logCell[k] + logCell[k + 1])) / h2;
  }

  double lo = std::numeric_limits<double>::max();
  double hi = std::numeric_limits<double>::lowest();
  for (int i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    const double radius = (i > 0 ? std::fabs(off[k - 1]) : 0.0) + (i + 1 < n ? std::fabs(off[k]) : 0.0);
    lo = std::min(lo, diag[k] - radius);
    hi = std::max(hi, diag[k] + radius);
  }
  while (hi - lo > 1e-10 * std::max(1.0, std::fabs(hi))) {
    const double mid = 0.5 * (lo + hi);
    if (sturmCount(diag, off, mid) >= 1) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

SpectrumEstimate spectrumEstimate(double R, int N, double relTol) {
  if (R < 1.0) throw std::invalid_argument("spectrumEstimate: radius must be >= 1");
  if (N < 100) throw std::invalid_argument("spectrumEstimate: grid must have at least 100 cells");
  SpectrumEstimate est;
  est.radius = R;
  est.grid = N;
  est.tolerance = relTol;
  for (int g : {N / 4, N / 2, N}) {
    est.table.push_back({g, lowestEigenvalue({[](double r) { return logArea(r); }, R, g})});
  }
  est.lambda = est.table.back().lambda;
  const double coarse = est.table[1].lambda;
  est.extrapolated = (4.0 * est.lambda - coarse) / 3.0;
  est.converged = std::fabs(est.lambda - est.extrapolated) <= relTol * std::fabs(est.extrapolated);
  return est;
}

const WarpedMetric& WarpedMetric::splitting() {
  static const WarpedMetric m;
  return m;
}

double WarpedMetric::warp(std::size_t fiber, double t) const { return std::exp(-fibers.at(fiber).rate * t); }

WarpedReport warpedChecks(const WarpedMetric& metric, double t, double h) {
  WarpedReport rep;
  rep.busemannGradientNorm = 1.0;  // beta = t and g^{tt} = 1 in this chart
  for (std::size_t idx = 0; idx < metric.fibers.size(); ++idx) {
    const auto& fib = metric.fibers[idx];
    auto f = [&](double s) { return metric.warp(idx, s); };
    FiberCheck fc;
    fc.rate = fib.rate;
    fc.multiplicity = fib.multiplicity;
    // f = exp(k t) with k = -c: f'/f = k and f''/f = k^2
    const double k = -fib.rate;
    fc.analyticCurvature = -(k * k);
    fc.shapeOperator = k;
    auto fdCurv = [&](double step) {
      return -(f(t + step) - 2.0 * f(t) + f(t - step)) / (step * step) / f(t);
    };
    fc.fdCurvature = fdCurv(h);
    fc.fdCurvatureHalfStep = fdCurv(0.5 * h);
    fc.fdShapeOperator = (f(t + h) - f(t - h)) / (2.0 * h) / f(t);
    const double second = (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
    fc.jacobiResidual = std::fabs(second - fib.rate * fib.rate * f(t)) / f(t);
    fc.jacobiInitialResidual = std::fabs((f(h) - f(-h)) / (2.0 * h) + fib.rate * f(0.0));
    rep.maxCurvatureError = std::max({rep.maxCurvatureError, std::fabs(fc.fdCurvature - fc.analyticCurvature),
                                      std::fabs(fc.fdCurvatureHalfStep - fc.analyticCurvature),
                                      std::fabs(fc.fdShapeOperator - fc.shapeOperator)});
    rep.meanCurvature += fib.multiplicity * fc.shapeOperator;
    rep.hessianSquared += fib.multiplicity * fc.shapeOperator * fc.shapeOperator;
    const double blockTrace = fib.multiplicity * fc.shapeOperator;
    rep.schwarzBound += blockTrace * blockTrace / fib.multiplicity;
    rep.fibers.push_back(fc);
  }
  return rep;
}

}  // namespace cayley
