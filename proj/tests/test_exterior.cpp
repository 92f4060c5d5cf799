#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "cayley/exterior.hpp"
#include "cayley/forms.hpp"

using namespace cayley;

namespace {

// Parity of the permutation sorting `v`, by explicit bubble sort.
int bubbleSign(std::vector<int> v) {
  int s = 1;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j + 1 < v.size() - i; ++j) {
      if (v[j] > v[j + 1]) {
        std::swap(v[j], v[j + 1]);
        s = -s;
      }
    }
  }
  return s;
}

// Wedge of two monomial forms by concatenation and sorting.
Form wedgeOracle(const Form& a, const Form& b) {
  Form out(a.dim(), a.grade() + b.grade());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      if ((ia.bits() & ib.bits()) != 0) continue;
      auto v = ia.slots();
      const auto w = ib.slots();
      v.insert(v.end(), w.begin(), w.end());
      out.add(MultiIndex(ia.bits() | ib.bits()), bubbleSign(v) * ca * cb);
    }
  }
  return out;
}

// *theta^I = sign(I, I^c) theta^{I^c}, so that theta^I ^ *theta^I = vol.
Form hodgeOracle(const Form& f) {
  const int n = f.dim();
  Form out(n, n - f.grade());
  for (const auto& [idx, c] : f.terms()) {
    auto v = idx.slots();
    const MultiIndex comp(MultiIndex::full(n).bits() & ~idx.bits());
    const auto w = comp.slots();
    v.insert(v.end(), w.begin(), w.end());
    out.add(comp, bubbleSign(v) * c);
  }
  return out;
}

}  // namespace

TEST(Exterior, WedgeMatchesPermutationOracle) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 300; ++t) {
    const int n = 2 + static_cast<int>(rng() % 9);
    const int p = static_cast<int>(rng() % (n + 1));
    const int q = static_cast<int>(rng() % (n - p + 1));
    const Form a = randomSparseForm(n, p, 5, rng);
    const Form b = randomSparseForm(n, q, 5, rng);
    EXPECT_LT(maxAbsDiff(wedge(a, b), wedgeOracle(a, b)), 1e-15);
  }
}

TEST(Exterior, HodgeMatchesComplementOracle) {
  for (int n = 1; n <= 7; ++n) {
    for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
      const Form m = Form::monomial(n, MultiIndex(bits));
      EXPECT_EQ(maxAbsDiff(hodge(m), hodgeOracle(m)), 0.0);
      EXPECT_EQ(maxAbsDiff(wedge(m, hodge(m)), Form::volume(n)), 0.0);
    }
  }
}

TEST(Exterior, WedgeSignCountsInversions) {
  EXPECT_EQ(wedgeSign(MultiIndex::of({1}), MultiIndex::of({0})), -1);
  EXPECT_EQ(wedgeSign(MultiIndex::of({0, 2}), MultiIndex::of({1, 3})), -1);
  EXPECT_EQ(wedgeSign(MultiIndex::of({2, 3}), MultiIndex::of({0, 1})), 1);
  EXPECT_EQ(wedgeSign(MultiIndex::of({0}), MultiIndex::of({0})), 0);
}

TEST(Exterior, EpsilonSquaresToZeroAndInteriorToo) {
  std::mt19937_64 rng(2);
  const Form w = randomSparseForm(10, 4, 20, rng);
  for (int s = 0; s < 10; ++s) {
    EXPECT_TRUE(epsilon(s, epsilon(s, w)).isZero());
    EXPECT_TRUE(interior(s, interior(s, w)).isZero());
  }
}

TEST(Exterior, DenseVersionsAreLinearCombinations) {
  std::mt19937_64 rng(3);
  const Form w = randomSparseForm(6, 3, 10, rng);
  std::vector<double> v{0.3, -1.0, 0.0, 2.0, 0.5, -0.25};
  Form eps(6, 4), in(6, 2);
  for (int s = 0; s < 6; ++s) {
    eps += v[s] * epsilon(s, w);
    in += v[s] * interior(s, w);
  }
  EXPECT_LT(maxAbsDiff(epsilon(std::span<const double>(v), w), eps), 1e-15);
  EXPECT_LT(maxAbsDiff(interior(std::span<const double>(v), w), in), 1e-15);
}

TEST(Exterior, AddRejectsWrongGrade) {
  Form f(4, 2);
  EXPECT_THROW(f.add(MultiIndex::of({0}), 1.0), std::invalid_argument);
  EXPECT_THROW(f.add(MultiIndex::of({0, 5}), 1.0), std::invalid_argument);
  EXPECT_THROW(Form(17, 1), std::invalid_argument);
}

TEST(Exterior, HessianOperatorIsLinear) {
  std::mt19937_64 rng(4);
  const Form w = randomSparseForm(8, 3, 10, rng);
  const Form w2 = randomSparseForm(8, 3, 10, rng);
  const auto a = HessianSurrogate::random(8, rng, true);
  const auto b = HessianSurrogate::random(8, rng, true);
  std::vector<double> sum(64);
  for (int i = 0; i < 8; ++i) {
    for (int j = 0; j < 8; ++j) sum[static_cast<std::size_t>(i * 8 + j)] = 2.0 * a(i, j) - b(i, j);
  }
  const HessianSurrogate c(8, sum, true);
  EXPECT_LT(maxAbsDiff(applyHessianOperator(c, w), 2.0 * applyHessianOperator(a, w) - applyHessianOperator(b, w)), 1e-14);
  EXPECT_LT(maxAbsDiff(applyHessianOperator(a, w + 3.0 * w2), applyHessianOperator(a, w) + 3.0 * applyHessianOperator(a, w2)),
            1e-14);
  // The identity jet acts as multiplication by the grade.
  EXPECT_LT(maxAbsDiff(applyHessianOperator(HessianSurrogate::identity(8), w), 3.0 * w), 1e-15);
}

TEST(Exterior, HessianSurrogateValidation) {
  EXPECT_THROW(HessianSurrogate(2, {1.0, 2.0, 3.0, 4.0}), std::invalid_argument);
  EXPECT_THROW(HessianSurrogate(2, {1.0, 0.0, 0.0, 1.0}, true), std::invalid_argument);
  std::mt19937_64 rng(5);
  EXPECT_NEAR(HessianSurrogate::random(9, rng, true).trace(), 0.0, 1e-15);
}

TEST(Exterior, DualityOnKahlerSymbol) {
  const Form omega = buildForm(ParallelFormSpec::kahler(2));
  const auto rep = verifyDualityIdentity(4, 2, 50, 9, &omega);
  EXPECT_LE(rep.maxResidual, 1e-13);
}

TEST(Exterior, DualityAtTopGradeVanishes) {
  std::mt19937_64 rng(6);
  const auto a = HessianSurrogate::random(5, rng, true);
  const auto r = dualityResiduals(a, Form::volume(5));
  EXPECT_LT(r.max(), 1e-15);
}

TEST(Exterior, DualityRequiresTraceFreeness) {
  // With a trace the two sides differ, so the check is not vacuous.
  std::mt19937_64 rng(7);
  const Form w = randomSparseForm(6, 3, 10, rng);
  const auto r = dualityResiduals(HessianSurrogate::identity(6), w);
  EXPECT_GT(r.starIdentity, 1e-3);
}

TEST(Exterior, TextRoundTrip) {
  std::mt19937_64 rng(8);
  const Form w = randomSparseForm(12, 5, 15, rng);
  std::stringstream ss;
  writeForm(ss, w);
  const Form back = readForm(ss);
  EXPECT_EQ(back.dim(), 12);
  EXPECT_EQ(back.grade(), 5);
  EXPECT_LT(maxAbsDiff(back, w), 1e-15);
}

TEST(Exterior, ReadsFixtureForm) {
  std::ifstream in(std::string(CAYLEY_FIXTURE_DIR) + "/kahler4.form");
  ASSERT_TRUE(in);
  const Form f = readForm(in);
  EXPECT_EQ(maxAbsDiff(f, buildForm(ParallelFormSpec::kahler(2))), 0.0);
}

TEST(Exterior, ReadRejectsBadLines) {
  std::istringstream unsorted("# n=4 p=2\n3,1:1\n");
  EXPECT_THROW(readForm(unsorted), std::invalid_argument);
  std::istringstream noColon("# n=4 p=2\n1,2 1\n");
  EXPECT_THROW(readForm(noColon), std::invalid_argument);
}
