#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "cayley/octonion.hpp"

using namespace cayley;

namespace {

Octonion randomOct(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Octonion o;
  for (int k = 0; k < 8; ++k) o[k] = u(rng);
  return o;
}

}  // namespace

TEST(Octonion, CanonicalTableHasNoDefects) { EXPECT_TRUE(MultiplicationTable::canonical().defects().empty()); }

TEST(Octonion, FanoTriplesByHand) {
  // (0,1,3) (1,2,4) (2,3,5) (3,4,6) (4,5,0) (5,6,1) (6,0,2), with cyclic shifts.
  const int triples[7][3] = {{0, 1, 3}, {1, 2, 4}, {2, 3, 5}, {3, 4, 6}, {4, 5, 0}, {5, 6, 1}, {6, 0, 2}};
  for (const auto& t : triples) {
    for (int r = 0; r < 3; ++r) {
      const int a = t[r], b = t[(r + 1) % 3], c = t[(r + 2) % 3];
      EXPECT_EQ(maxAbsDiff(Octonion::e(a) * Octonion::e(b), Octonion::e(c)), 0.0) << a << b << c;
      EXPECT_EQ(maxAbsDiff(Octonion::e(b) * Octonion::e(a), -Octonion::e(c)), 0.0) << b << a << c;
    }
  }
}

TEST(Octonion, NonAssociativeOnIndependentTriple) {
  const Octonion lhs = (Octonion::e(0) * Octonion::e(1)) * Octonion::e(2);
  const Octonion rhs = Octonion::e(0) * (Octonion::e(1) * Octonion::e(2));
  EXPECT_EQ(maxAbsDiff(lhs, -Octonion::e(5)), 0.0);
  EXPECT_EQ(maxAbsDiff(rhs, Octonion::e(5)), 0.0);
}

TEST(Octonion, MoufangIdentity) {
  // Left Moufang identity, not among the verifier checks.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 2000; ++t) {
    const Octonion x = randomOct(rng), y = randomOct(rng), z = randomOct(rng);
    EXPECT_LT(maxAbsDiff(z * (x * (z * y)), ((z * x) * z) * y), 1e-13);
  }
}

TEST(Octonion, ArtinSubalgebraIsAssociative) {
  // Any two elements generate an associative subalgebra: (xy)x = x(yx).
  std::mt19937_64 rng(4);
  for (int t = 0; t < 2000; ++t) {
    const Octonion x = randomOct(rng), y = randomOct(rng);
    EXPECT_LT(maxAbsDiff((x * y) * x, x * (y * x)), 1e-13);
  }
}

TEST(Octonion, ConjugationAndNorm) {
  std::mt19937_64 rng(5);
  const Octonion a = randomOct(rng);
  const Octonion c = conj(a);
  EXPECT_EQ(c.realPart(), a.realPart());
  for (int k = 1; k < 8; ++k) EXPECT_EQ(c[k], -a[k]);
  EXPECT_NEAR(norm(a) * norm(a), inner(a, a), 1e-15);
  EXPECT_EQ(a.imaginaryPart().realPart(), 0.0);
}

TEST(Octonion, TableTextRoundTrip) {
  const auto& t = MultiplicationTable::canonical();
  std::istringstream in("# comment\n" + t.toText());
  const auto parsed = MultiplicationTable::parse(in);
  EXPECT_EQ(parsed.toText(), t.toText());
}

TEST(Octonion, ParseRejectsMalformed) {
  std::istringstream shortTable("+0 +1\n");
  EXPECT_THROW(MultiplicationTable::parse(shortTable), std::invalid_argument);
  std::string text = MultiplicationTable::canonical().toText();
  text.replace(0, 2, "*0");
  std::istringstream badToken(text);
  EXPECT_THROW(MultiplicationTable::parse(badToken), std::invalid_argument);
}

TEST(Octonion, CorruptedFixtureIsDetected) {
  std::ifstream in(std::string(CAYLEY_FIXTURE_DIR) + "/corrupted_table.txt");
  ASSERT_TRUE(in);
  const auto t = MultiplicationTable::parse(in);
  EXPECT_FALSE(t.defects().empty());
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int k = 0; k < 100; ++k) {
    const Octonion a = randomOct(rng), b = randomOct(rng);
    worst = std::max(worst, std::fabs(norm(mul(a, b, t)) - norm(a) * norm(b)));
  }
  EXPECT_GT(worst, 1e-3);
}

TEST(Octonion, PairInnerProduct) {
  OctPair p;
  p.x = Octonion::e(0);
  p.y = Octonion::real(2.0);
  EXPECT_DOUBLE_EQ(norm(p), std::sqrt(5.0));
  const auto arr = p.toArray();
  EXPECT_EQ(maxAbsDiff(OctPair::fromArray(arr).y, p.y), 0.0);
}
