#pragma once

// Radial geometry of the Cayley hyperbolic plane (curvature normalized to
// [-4, -1]): Jacobi fields, Laplacian of the distance function, geodesic-ball
// growth, the radial bottom-of-spectrum problem and the horospherical
// warped-product chart.

#include <functional>
#include <vector>

namespace cayley {

/// Principal curvatures c_A of geodesic spheres, with multiplicities.
struct RadialModel {
  struct Mode {
    double c;
    int multiplicity;
  };
  std::vector<Mode> modes{{2.0, 7}, {1.0, 8}};
  int dimension = 16;

  static const RadialModel& cayleyHyperbolic();
  int sphereDimension() const;
  /// sum_A c_A coth(c_A r)
  double laplacianDistance(double r) const;
  double logArea(double r) const;
};

/// 14 coth 2r + 8 coth r. Throws std::domain_error for r <= 0.
double laplacianDistance(double r);

/// Normalized Jacobi profile sinh(ct) / sinh(cL), 0 <= t <= L.
double jacobiProfile(double c, double L, double t);
double jacobiProfileDerivative(double c, double L, double t);
/// Index form of the Jacobi field, c coth(cL).
double hessianEigen(double c, double L);

/// log of (sinh 2r)^7 (sinh r)^8, stable for every r > 0.
double logArea(double r);
/// d/dr log A by Richardson-extrapolated central differences of logArea.
double logAreaDerivative(double r);

struct AreaVolume {
  double area = 0.0;
  double volume = 0.0;
};

/// Area (sinh 2r)^7 (sinh r)^8 and volume int_0^r A(t) dt (unit normalization).
AreaVolume areaVolume(double r);
/// log V(r), finite well past the range where V itself overflows.
double logVolume(double r);

/// Adaptive Simpson quadrature; stops when the local error is below
/// max(absTol, relTol * |estimate|).
double integrate(const std::function<double(double)>& f, double a, double b, double absTol = 1e-10,
                 double relTol = 1e-13, int maxDepth = 50);

/// -(A u')' / A on (0, R], natural condition at 0, Dirichlet at R.
struct SturmLiouvilleProblem {
  std::function<double(double)> logWeight = [](double r) { return logArea(r); };
  double radius = 10.0;
  int grid = 8000;
};

/// Lowest eigenvalue of the cell-centred finite-difference discretization
/// (symmetric tridiagonal, Sturm-sequence bisection).
double lowestEigenvalue(const SturmLiouvilleProblem& problem);

struct SpectrumRow {
  int grid;
  double lambda;
};

struct SpectrumEstimate {
  double radius = 0.0;
  int grid = 0;
  double lambda = 0.0;
  double extrapolated = 0.0;
  std::vector<SpectrumRow> table;
  double tolerance = 0.0;
  /// False when |lambda - extrapolated| exceeds tolerance * extrapolated.
  bool converged = false;
};

/// Bottom-of-spectrum estimate on the geodesic ball of radius R with N cells,
/// Richardson-extrapolated against N/2. Requires R >= 1 and N >= 100.
SpectrumEstimate spectrumEstimate(double R, int N, double relTol = 5e-3);

/// dt^2 + sum_k exp(-2 rate_k t) omega_k^2 over the fibre directions.
struct WarpedMetric {
  struct Fiber {
    double rate;
    int multiplicity;
  };
  std::vector<Fiber> fibers{{2.0, 7}, {1.0, 8}};

  static const WarpedMetric& splitting();
  /// Warp factor f_k(t) = exp(-rate_k t); the metric coefficient is f_k^2.
  double warp(std::size_t fiber, double t) const;
};

struct FiberCheck {
  double rate = 0.0;
  int multiplicity = 0;
  double analyticCurvature = 0.0;   // -f''/f from the closed form
  double fdCurvature = 0.0;         // central differences, step h
  double fdCurvatureHalfStep = 0.0; // same at h/2
  double shapeOperator = 0.0;       // f'/f, the level-set second fundamental form
  double fdShapeOperator = 0.0;     // same by central differences
  double jacobiResidual = 0.0;      // |V'' - c^2 V| / |V| by finite differences
  double jacobiInitialResidual = 0.0; // |V'(0) + c V(0)|
};

struct WarpedReport {
  std::vector<FiberCheck> fibers;
  double meanCurvature = 0.0;        // sum f'/f = Laplacian of the Busemann function
  double busemannGradientNorm = 0.0; // sqrt(g^{tt}) for beta = t
  double hessianSquared = 0.0;       // sum_AB beta_AB^2
  double schwarzBound = 0.0;         // sum over fibres (trace of block)^2 / multiplicity
  double maxCurvatureError = 0.0;    // worst finite-difference deviation
};

WarpedReport warpedChecks(const WarpedMetric& metric = WarpedMetric::splitting(), double t = 0.7,
                          double h = 1e-4);

}  // namespace cayley
