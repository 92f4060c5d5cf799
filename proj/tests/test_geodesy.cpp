#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "cayley/geodesy.hpp"

using namespace cayley;

namespace {

long double cothL(long double x) { return std::cosh(x) / std::sinh(x); }

}  // namespace

TEST(Geodesy, LaplacianClosedFormAgainstLongDouble) {
  for (double r : {0.1, 0.5, 1.0, 2.0, 5.0, 15.0}) {
    const long double expect = 14.0L * cothL(2.0L * r) + 8.0L * cothL(static_cast<long double>(r));
    EXPECT_NEAR(laplacianDistance(r), static_cast<double>(expect), 1e-12 * static_cast<double>(expect));
    EXPECT_NEAR(RadialModel::cayleyHyperbolic().laplacianDistance(r), laplacianDistance(r), 1e-12);
  }
  EXPECT_NEAR(laplacianDistance(1.0), 25.0266, 1e-4);
}

TEST(Geodesy, LaplacianRejectsNonPositiveRadius) {
  EXPECT_THROW(laplacianDistance(0.0), std::domain_error);
  EXPECT_THROW(laplacianDistance(-1.0), std::domain_error);
}

TEST(Geodesy, ModelMultiplicities) {
  const auto& m = RadialModel::cayleyHyperbolic();
  EXPECT_EQ(m.sphereDimension(), 15);
  for (const auto& mode : m.modes) EXPECT_TRUE(mode.c * mode.c == 4.0 || mode.c * mode.c == 1.0);
}

TEST(Geodesy, JacobiProfileBoundaryValues) {
  for (double c : {1.0, 2.0}) {
    for (double L : {0.3, 1.0, 4.0}) {
      EXPECT_EQ(jacobiProfile(c, L, 0.0), 0.0);
      EXPECT_NEAR(jacobiProfile(c, L, L), 1.0, 1e-15);
      EXPECT_NEAR(jacobiProfileDerivative(c, L, L), hessianEigen(c, L), 1e-12);
    }
  }
  EXPECT_THROW(hessianEigen(2.0, 0.0), std::domain_error);
  EXPECT_THROW(jacobiProfile(2.0, 1.0, 1.5), std::domain_error);
}

TEST(Geodesy, IndexFormQuadrature) {
  const double c = 2.0, L = 1.0;
  const double q = integrate(
      [&](double t) {
        const double f = jacobiProfile(c, L, t), df = jacobiProfileDerivative(c, L, t);
        return df * df + c * c * f * f;
      },
      0.0, L);
  EXPECT_NEAR(q, c / std::tanh(c * L), 1e-8);
}

TEST(Geodesy, QuadratureOracles) {
  EXPECT_NEAR(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi), 2.0, 1e-10);
  EXPECT_NEAR(integrate([](double x) { return std::exp(x); }, 0.0, 3.0, 0.0, 1e-13), std::exp(3.0) - 1.0, 1e-10);
}

TEST(Geodesy, LogAreaDerivativeMatchesLaplacian) {
  for (double r : {0.5, 1.0, 2.0, 5.0}) EXPECT_NEAR(logAreaDerivative(r), laplacianDistance(r), 1e-8);
}

TEST(Geodesy, LogAreaStableAtLargeRadius) {
  const double r = 60.0;  // A(60) is about e^{1310}, far beyond double range
  EXPECT_TRUE(std::isfinite(logArea(r)));
  EXPECT_NEAR(logArea(r), 22.0 * r - 15.0 * std::numbers::ln2, 1e-9);
  EXPECT_NEAR(std::log(areaVolume(1.0).area), logArea(1.0), 1e-12);
}

TEST(Geodesy, AreaGrowthRateAtTwenty) {
  // log A(r)/r approaches 22 from below with gap 15 log 2 / r.
  const double ratio = logArea(20.0) / 20.0;
  EXPECT_NEAR(ratio, 22.0 - 15.0 * std::numbers::ln2 / 20.0, 1e-12);
  EXPECT_NEAR(logArea(2000.0) / 2000.0, 22.0, 0.01);
}

TEST(Geodesy, VolumeAgreesWithLogVolume) {
  EXPECT_EQ(areaVolume(0.0).volume, 0.0);
  for (double r : {0.5, 1.0, 3.0}) {
    EXPECT_NEAR(logVolume(r), std::log(areaVolume(r).volume), 1e-9);
  }
  // V ~ A / 22 for large r
  EXPECT_NEAR(logVolume(40.0) - logArea(40.0), -std::log(22.0), 1e-3);
}

TEST(Geodesy, SturmLiouvilleFlatOracle) {
  // A = 1: u = cos(pi r / 2R), lambda = (pi / 2R)^2
  SturmLiouvilleProblem p;
  p.logWeight = [](double) { return 0.0; };
  p.radius = 2.0;
  p.grid = 2000;
  const double exact = std::pow(std::numbers::pi / (2.0 * p.radius), 2);
  EXPECT_NEAR(lowestEigenvalue(p), exact, 1e-5 * exact);
}

TEST(Geodesy, SturmLiouvilleBallOracle) {
  // A = r^2 (the Euclidean 3-ball): u = sin(pi r / R) / r, lambda = (pi / R)^2
  SturmLiouvilleProblem p;
  p.logWeight = [](double r) { return 2.0 * std::log(r); };
  p.radius = 1.0;
  p.grid = 4000;
  const double exact = std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(lowestEigenvalue(p), exact, 1e-5 * exact);
}

TEST(Geodesy, SpectrumDecreasesInRadius) {
  const double l4 = spectrumEstimate(4.0, 2000).extrapolated;
  const double l6 = spectrumEstimate(6.0, 2000).extrapolated;
  const double l10 = spectrumEstimate(10.0, 4000).extrapolated;
  EXPECT_GT(l4, l6);
  EXPECT_GT(l6, l10);
  EXPECT_GT(l10, 121.0);
}

TEST(Geodesy, SpectrumAtRadiusTen) {
  const auto est = spectrumEstimate(10.0, 8000);
  EXPECT_GE(est.lambda, 121.0);
  EXPECT_LE(est.lambda, 123.0);
  EXPECT_NEAR(est.extrapolated, 121.0, 0.005 * 121.0);
  EXPECT_TRUE(est.converged);
  ASSERT_EQ(est.table.size(), 3u);
  EXPECT_EQ(est.table.back().grid, 8000);
}

TEST(Geodesy, SpectrumPreconditions) {
  EXPECT_THROW(spectrumEstimate(0.5, 1000), std::invalid_argument);
  EXPECT_THROW(spectrumEstimate(10.0, 50), std::invalid_argument);
}

TEST(Geodesy, CoarseGridIsReportedUnconverged) {
  const auto est = spectrumEstimate(10.0, 100, 1e-6);
  EXPECT_FALSE(est.converged);
}

TEST(Geodesy, WarpedSplittingChart) {
  const auto rep = warpedChecks();
  ASSERT_EQ(rep.fibers.size(), 2u);
  EXPECT_NEAR(rep.fibers[0].fdCurvature, -4.0, 1e-6);
  EXPECT_NEAR(rep.fibers[1].fdCurvature, -1.0, 1e-6);
  EXPECT_EQ(rep.fibers[0].shapeOperator, -2.0);
  EXPECT_EQ(rep.fibers[1].shapeOperator, -1.0);
  EXPECT_EQ(rep.meanCurvature, -22.0);
  EXPECT_EQ(rep.hessianSquared, 36.0);
  EXPECT_EQ(rep.schwarzBound, 36.0);
  EXPECT_LT(rep.maxCurvatureError, 1e-6);
}

TEST(Geodesy, WarpedCurvatureAtOtherTimes) {
  for (double t : {-1.0, 0.0, 2.5}) EXPECT_LT(warpedChecks(WarpedMetric::splitting(), t).maxCurvatureError, 1e-6);
}
