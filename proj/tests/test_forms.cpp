#include <gtest/gtest.h>

#include <Eigen/Dense>

#include <random>

#include "cayley/forms.hpp"

using namespace cayley;

namespace {

// Left multiplication by I, J, K on H = R^4 with basis (1, i, j, k).
Eigen::Matrix4d leftMul(int unit) {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  const int table[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  for (int b = 0; b < 4; ++b) m(table[unit][b][0], b) = table[unit][b][1];
  return m;
}

double pfaffian(const Eigen::Matrix4d& w) { return w(0, 1) * w(2, 3) - w(0, 2) * w(1, 3) + w(0, 3) * w(1, 2); }

FSpec singleMixedWord() {
  FSpec f;
  f.words.push_back({1.0, {{FFactor::Block::V, 0, 1}, {FFactor::Block::V, 2, 3},
                           {FFactor::Block::W, 0, 1}, {FFactor::Block::W, 2, 3}}});
  return f;
}

}  // namespace

TEST(Forms, KahlerFormTwoDimensional) {
  const Form k = buildForm(ParallelFormSpec::kahler(2));
  EXPECT_EQ(k.terms().size(), 2u);
  EXPECT_EQ(k.coefficient(MultiIndex::of({0, 2})), -1.0);
  EXPECT_EQ(k.coefficient(MultiIndex::of({1, 3})), -1.0);
}

TEST(Forms, QuaternionicVolumeCoefficientByPfaffians) {
  // omega_u(X, Y) = <X, u Y>; omega ^ omega = 2 Pf(omega) vol in dimension 4.
  double expect = 0.0;
  for (int u = 1; u <= 3; ++u) {
    const Eigen::Matrix4d w = leftMul(u);  // w(a, b) = <e_a, u e_b>
    expect += 2.0 * pfaffian(w);
  }
  const Form q = buildForm(ParallelFormSpec::quaternionic(1));
  EXPECT_EQ(q.terms().size(), 1u);
  EXPECT_DOUBLE_EQ(q.coefficient(MultiIndex::full(4)), expect);
  EXPECT_DOUBLE_EQ(std::fabs(expect), 6.0);
}

TEST(Forms, QuaternionicTwoFormsAreComplexStructures) {
  // Each left multiplication squares to -1 and the three anticommute: the
  // oracle the frame construction relies on.
  for (int u = 1; u <= 3; ++u) EXPECT_TRUE((leftMul(u) * leftMul(u)).isApprox(-Eigen::Matrix4d::Identity()));
  EXPECT_TRUE((leftMul(1) * leftMul(2)).isApprox(leftMul(3)));
}

TEST(Forms, KahlerConstraintsFromAnchors) {
  const auto spec = ParallelFormSpec::kahler(2);
  const auto anchors = anchorMonomials(spec);
  const ConstraintSet c = extractConstraints(buildForm(spec), &anchors);
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.functionals()[0].str(), "a11 + a33");
  EXPECT_EQ(c.functionals()[1].str(), "a22 + a44");
  const auto j = c.toJson();
  EXPECT_EQ(j["functionals"][0]["indices"], nlohmann::json::parse("[[1,1],[3,3]]"));
  EXPECT_EQ(j["functionals"][0]["coeffs"], nlohmann::json::parse("[1.0,1.0]"));
}

TEST(Forms, FullKahlerExtractionContainsAnchorSet) {
  const Form k = buildForm(ParallelFormSpec::kahler(2));
  const ConstraintSet all = extractConstraints(k);
  const auto spec = ParallelFormSpec::kahler(2);
  const auto anchors = anchorMonomials(spec);
  const ConstraintSet anchored = extractConstraints(k, &anchors);
  EXPECT_GT(all.size(), anchored.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(4, 4);
  a(0, 0) = 1;
  a(2, 2) = -1;
  EXPECT_TRUE(anchored.satisfiedBy(a));
  EXPECT_TRUE(all.satisfiedBy(a));
}

TEST(Forms, QuaternionicConstraintCount) {
  for (int n = 1; n <= 3; ++n) {
    const auto spec = ParallelFormSpec::quaternionic(n);
    const auto anchors = anchorMonomials(spec);
    const ConstraintSet c = extractConstraints(buildForm(spec), &anchors);
    EXPECT_EQ(c.size(), static_cast<std::size_t>(n));
  }
}

TEST(Forms, Spin9SkeletonAndTops) {
  const Form omega = buildForm(ParallelFormSpec::spin9());
  EXPECT_EQ(omega.terms().size(), 2u);
  EXPECT_EQ(omega.coefficient(vTop()), -1.0);
  EXPECT_EQ(omega.coefficient(wTop()), 1.0);
  const SymmetricFunctional v = monomialFunctional(omega, vTop());
  for (int i = 0; i < 16; ++i) EXPECT_EQ(v.coeff(i, i), i < 8 ? -1.0 : 0.0);
}

TEST(Forms, Spin9PortableConstraints) {
  std::mt19937_64 rng(3);
  const ConstraintSet c = extractSpin9Constraints(FSpec::random(rng, 3));
  ASSERT_EQ(c.size(), 2u);
  std::vector<int> low{0, 1, 2, 3, 4, 5, 6, 7}, high{8, 9, 10, 11, 12, 13, 14, 15};
  const ConstraintSet want =
      ConstraintSet::canonical(16, {SymmetricFunctional::diagonalSum(16, low), SymmetricFunctional::diagonalSum(16, high)});
  EXPECT_TRUE(c.equivalentTo(want));
  EXPECT_FALSE(c.formDependent().empty());
  EXPECT_TRUE(c.toJson().contains("form_dependent"));
}

TEST(Forms, NoLeakOnSingleWord) {
  const auto rep = noLeakLemma(singleMixedWord());
  EXPECT_EQ(rep.pairsChecked, 256);
  EXPECT_EQ(rep.maxLeak, 0.0);
  EXPECT_TRUE(rep.pass);
  EXPECT_TRUE(noLeakLemma(FSpec{}).pass);
}

TEST(Forms, BuildFMatchesHandExpansion) {
  // v0^v1^v2^v3^w0^w1^w2^w3 with identity sigma, tau.
  const Form f = buildF(singleMixedWord());
  EXPECT_EQ(f.terms().size(), 1u);
  EXPECT_EQ(f.coefficient(MultiIndex::of({0, 1, 2, 3, 8, 9, 10, 11})), 1.0);
}

TEST(Forms, FValidation) {
  FSpec f = singleMixedWord();
  f.tau = {0, 1, 2, 3, 4, 5, 6, 6};
  EXPECT_THROW(f.validate(), std::invalid_argument);

  FSpec shortWord;
  shortWord.words.push_back({1.0, {{FFactor::Block::V, 0, 1}, {FFactor::Block::W, 0, 1}}});
  EXPECT_THROW(shortWord.validate(), std::invalid_argument);

  FSpec repeated = singleMixedWord();
  repeated.words[0].factors[0].second = 0;
  EXPECT_THROW(repeated.validate(), std::invalid_argument);

  FSpec pureW;
  pureW.words.push_back({1.0, {{FFactor::Block::W, 0, 1}, {FFactor::Block::W, 2, 3},
                               {FFactor::Block::W, 4, 5}, {FFactor::Block::W, 6, 7}}});
  EXPECT_THROW(pureW.validate(), std::invalid_argument);
  EXPECT_THROW(buildForm(ParallelFormSpec::spin9(pureW)), std::invalid_argument);
}

TEST(Forms, RandomFIsAdmissible) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 50; ++t) EXPECT_NO_THROW(FSpec::random(rng, 4).validate());
}

TEST(Forms, CanonicalizationSnapsAndDeduplicates) {
  SymmetricFunctional a(3), b(3);
  a.setCoeff(0, 0, 3.0);
  a.setCoeff(1, 1, 1.0);
  b.setCoeff(0, 0, 6.0);
  b.setCoeff(1, 1, 2.0 + 1e-12);
  const ConstraintSet c = ConstraintSet::canonical(3, {a, b});
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.functionals()[0].coeff(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(c.functionals()[0].coeff(1, 1), 1.0 / 3.0);
  EXPECT_EQ(c.functionals()[0].str(), "a11 + 1/3 a22");
}

TEST(Forms, ConstraintsInvariantUnderRescaling) {
  const auto spec = ParallelFormSpec::quaternionic(2);
  const auto anchors = anchorMonomials(spec);
  const Form q = buildForm(spec);
  EXPECT_TRUE(extractConstraints(q, &anchors).equivalentTo(extractConstraints(-0.125 * q, &anchors)));
}

TEST(Forms, PackedIndexing) {
  EXPECT_EQ(SymmetricFunctional::packedSize(16), 136);
  EXPECT_EQ(SymmetricFunctional::packedIndex(4, 0, 0), 0);
  EXPECT_EQ(SymmetricFunctional::packedIndex(4, 1, 0), 1);
  EXPECT_EQ(SymmetricFunctional::packedIndex(4, 1, 1), 4);
  EXPECT_EQ(SymmetricFunctional::packedIndex(4, 3, 3), 9);
  EXPECT_THROW(SymmetricFunctional::packedIndex(4, 0, 4), std::out_of_range);
  EXPECT_EQ(SymmetricFunctional::trace(12).str(), "a1,1 + a2,2 + a3,3 + a4,4 + a5,5 + a6,6 + a7,7 + a8,8 + a9,9 + a10,10 + a11,11 + a12,12");
}
