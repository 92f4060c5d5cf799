#include <gtest/gtest.h>

#include <random>

#include "cayley/kernels.hpp"

using namespace cayley;

namespace {

// Random feasible matrix built without feasibleBasis: least-squares
// projection of a random symmetric matrix onto the constraint kernel.
Eigen::MatrixXd projectedSample(const RatioProblem& p, std::mt19937_64& rng) {
  const ConstraintSet c = p.withTrace();
  const int m = SymmetricFunctional::packedSize(p.n);
  Eigen::MatrixXd cm(static_cast<Eigen::Index>(c.size()), m);
  for (std::size_t r = 0; r < c.size(); ++r) {
    for (int k = 0; k < m; ++k) cm(static_cast<Eigen::Index>(r), k) = c.functionals()[r].packed()[static_cast<std::size_t>(k)];
  }
  std::normal_distribution<double> nd;
  Eigen::VectorXd v(m);
  for (int k = 0; k < m; ++k) v[k] = nd(rng);
  const Eigen::VectorXd corr = cm.transpose() * (cm * cm.transpose()).ldlt().solve(cm * v);
  return unpackSymmetric(p.n, v - corr);
}

}  // namespace

TEST(Kernels, ClosedFormRatios) {
  EXPECT_EQ(*minBochnerRatio(RatioProblem::kahler(2)).rational, Rational(2));
  EXPECT_EQ(*minBochnerRatio(RatioProblem::quaternionic(1)).rational, Rational(4, 3));
  const auto sp = minBochnerRatio(RatioProblem::spin9());
  EXPECT_EQ(*sp.rational, Rational(8, 7));
  EXPECT_EQ(sp.blockSize, 8);
  EXPECT_NEAR(sp.katoB, 1.0 / 7.0, 1e-12);
  EXPECT_NEAR(*sp.closedFormRatio, sp.numericRatio, 1e-9);
}

TEST(Kernels, TraceOnlyRatio) {
  RatioProblem p{5, ConstraintSet(5), 0};
  const auto r = minBochnerRatio(p);
  EXPECT_EQ(*r.rational, Rational(5, 4));
}

TEST(Kernels, SharpnessAgainstIndependentSampler) {
  std::mt19937_64 rng(1);
  for (const auto& p : {RatioProblem::kahler(2), RatioProblem::quaternionic(1), RatioProblem::spin9()}) {
    const double ratio = minBochnerRatio(p).ratio;
    for (int t = 0; t < 5000; ++t) {
      const Eigen::MatrixXd a = projectedSample(p, rng);
      ASSERT_TRUE(p.withTrace().satisfiedBy(a, 1e-9));
      EXPECT_GE(bochnerObjective(a), ratio - 1e-12);
    }
  }
}

TEST(Kernels, Spin9MinimizerCanonicalForm) {
  const auto r = minBochnerRatio(RatioProblem::spin9());
  std::vector<double> pattern(16, 0.0);
  pattern[0] = -7.0;
  for (int i = 1; i < 8; ++i) pattern[static_cast<std::size_t>(i)] = 1.0;
  const auto eq = equalityDiagnostics(r, pattern);
  EXPECT_TRUE(eq.pass) << eq.patternResidual << " " << eq.maxOffDiagonal;
  EXPECT_NEAR(bochnerObjective(r.minimizer), 8.0 / 7.0, 1e-12);
  EXPECT_NEAR(bochnerObjective(r.canonicalMinimizer), 8.0 / 7.0, 1e-12);
}

TEST(Kernels, FeasibleBasisIsOrthonormalAndFeasible) {
  const auto p = RatioProblem::spin9();
  const Eigen::MatrixXd z = feasibleBasis(p);
  EXPECT_EQ(z.cols(), 136 - 2);
  EXPECT_TRUE((z.transpose() * z).isApprox(Eigen::MatrixXd::Identity(z.cols(), z.cols()), 1e-12));
  for (Eigen::Index k = 0; k < z.cols(); k += 17) EXPECT_TRUE(p.withTrace().satisfiedBy(unpackSymmetric(16, z.col(k))));
}

TEST(Kernels, MonotoneUnderExtraConstraints) {
  RatioProblem p = RatioProblem::kahler(2);
  const double base = minBochnerRatio(p).ratio;
  SymmetricFunctional extra(4);
  extra.setCoeff(0, 1, 1.0);
  p.constraints = p.constraints.with(extra);
  EXPECT_GE(minBochnerRatio(p).ratio, base - 1e-12);
}

TEST(Kernels, InfeasibleProblemRejected) {
  // Pin the whole first row to zero.
  std::vector<SymmetricFunctional> rows;
  for (int j = 0; j < 3; ++j) {
    SymmetricFunctional f(3);
    f.setCoeff(0, j, 1.0);
    rows.push_back(f);
  }
  RatioProblem p{3, ConstraintSet::canonical(3, rows), 0};
  EXPECT_THROW(minBochnerRatio(p), std::invalid_argument);
}

TEST(Kernels, KatoTransforms) {
  const auto t = katoTransform(8.0 / 7.0, -36.0);
  EXPECT_EQ(t.exponent, Rational(6, 7));
  EXPECT_EQ(t.drift, Rational(216, 7));
  EXPECT_EQ(t.gradientCoefficient, Rational(0));
  EXPECT_TRUE(t.identityHolds);
  const auto q = katoTransform(4.0 / 3.0, -36.0);
  EXPECT_EQ(q.exponent, Rational(2, 3));
  EXPECT_EQ(q.drift, Rational(24));
  const auto d = katoTransform(2.0, -36.0);
  EXPECT_TRUE(d.degenerate);
  EXPECT_FALSE(d.identityHolds);
  EXPECT_THROW(katoTransform(1.0, -36.0), std::invalid_argument);
  EXPECT_THROW(katoTransform(2.5, -36.0), std::invalid_argument);
  EXPECT_THROW(katoTransform(8.0 / 7.0, 36.0), std::invalid_argument);
}

TEST(Kernels, KatoIdentityNumerically) {
  // With Delta h = b|grad h|^2/h - c h exactly, Delta(h^k) = -a h^k.
  const double b = 1.0 / 7.0, c = 36.0, k = 1.0 - b, a = c * k;
  for (double h : {0.3, 1.0, 2.7}) {
    for (double g : {0.0, 0.5, 3.0}) {
      const double lap = b * g * g / h - c * h;
      const double lapG = k * std::pow(h, k - 1) * lap + k * (k - 1) * std::pow(h, k - 2) * g * g;
      EXPECT_NEAR(lapG, -a * std::pow(h, k), 1e-10);
    }
  }
}

TEST(Kernels, Thresholds) {
  EXPECT_DOUBLE_EQ(vanishingThreshold(1.0, 50.0), -100.0);
  EXPECT_DOUBLE_EQ(vanishingThreshold(1.0 / 3.0, 30.0), -40.0);
  EXPECT_THROW(vanishingThreshold(-1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(vanishingThreshold(0.5, 0.0), std::invalid_argument);
  const auto s = spin9SpectralBound();
  EXPECT_EQ(s.stated, Rational(216, 7));
  EXPECT_EQ(s.katoDrift, Rational(216, 7));
  EXPECT_EQ(s.corollaryRoute, Rational(63, 2));
  EXPECT_TRUE(s.consistent);
  EXPECT_LT(s.stated.value(), 121.0);
}

TEST(Kernels, PackRoundTrip) {
  Eigen::MatrixXd a(3, 3);
  a << 1, 2, 3, 2, 4, 5, 3, 5, 6;
  EXPECT_EQ(unpackSymmetric(3, packSymmetric(a)), a);
  EXPECT_THROW(bochnerObjective(Eigen::MatrixXd::Zero(3, 3)), std::invalid_argument);
}
