#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <set>

#include "pnarray/column_sequence.hpp"

using namespace pnarray;

TEST(Legendre, TernaryAndBinaryP7) {
  EXPECT_EQ(legendre(7, legendre_variant::ternary).entries, (std::vector<std::int64_t>{0, 1, 1, -1, 1, -1, -1}));
  EXPECT_EQ(legendre(7, legendre_variant::binary).entries, (std::vector<std::int64_t>{1, 1, 1, -1, 1, -1, -1}));
  EXPECT_THROW(legendre(9, legendre_variant::binary), std::invalid_argument);
  EXPECT_THROW(legendre(2, legendre_variant::binary), std::invalid_argument);
}

TEST(Legendre, TernaryIsTwoValuedForEveryOddPrime) {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31}) {
    const auto r = verify_pseudonoise(legendre(p, legendre_variant::ternary));
    EXPECT_TRUE(r.two_valued) << p;
    EXPECT_EQ(r.peak, static_cast<std::int64_t>(p - 1));
    EXPECT_EQ(*r.off_peak, -1);
  }
}

TEST(Legendre, BinaryTwoValuedOnlyWhenThreeModFour) {
  for (std::uint64_t p : {7, 11, 19, 23, 31}) {
    const auto r = verify_pseudonoise(legendre(p, legendre_variant::binary));
    EXPECT_TRUE(r.two_valued) << p;
    EXPECT_EQ(*r.off_peak, -1);
  }
  EXPECT_FALSE(verify_pseudonoise(legendre(13, legendre_variant::binary)).two_valued);
}

TEST(Hall, PrimesOfTheRightFormAreTwoValued) {
  for (std::uint64_t p : {31, 43}) {
    const auto c = hall(p);
    const auto r = verify_pseudonoise(c);
    EXPECT_TRUE(r.two_valued) << p;
    EXPECT_EQ(r.peak, static_cast<std::int64_t>(p));
    EXPECT_EQ(*r.off_peak, -1);
    EXPECT_EQ(c.kind, alphabet::binary);
  }
  EXPECT_THROW(hall(29), std::invalid_argument);
  EXPECT_THROW(hall(37), std::invalid_argument);
}

TEST(MSequence, BinaryDegreeFour) {
  const auto s = m_sequence(2, 4, {1, 1, 0, 0, 1});
  EXPECT_EQ(s.period(), 15U);
  EXPECT_EQ(s.kind, alphabet::residue);
  EXPECT_EQ(s.symbol_modulus, 2U);
  // recurrence s[i+4] = s[i+1] + s[i]
  for (std::size_t i = 0; i < 15; ++i)
    EXPECT_EQ(s.entries[(i + 4) % 15], (s.entries[(i + 1) % 15] + s.entries[i]) % 2);
  const auto b = bipolar(s);
  const auto r = verify_pseudonoise(b);
  EXPECT_TRUE(r.two_valued);
  EXPECT_EQ(r.peak, 15);
  EXPECT_EQ(*r.off_peak, -1);
}

TEST(MSequence, SymbolBalance) {
  const auto s = m_sequence(3, 3, ff::find_primitive_polynomial(3, 3));
  std::vector<int> counts(3, 0);
  for (auto x : s.entries) ++counts[static_cast<std::size_t>(x)];
  EXPECT_EQ(counts, (std::vector<int>{8, 9, 9}));
}

TEST(MSequence, RejectsNonPrimitivePolynomial) {
  EXPECT_THROW(m_sequence(2, 4, {1, 1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(m_sequence(2, 3, {1, 1, 0, 0, 1}), std::invalid_argument);
}

TEST(MSequence, RootsOfUnityMapIsPerfectlyBalanced) {
  for (std::uint64_t p : {3, 5, 7}) {
    const auto s = m_sequence(p, 2, ff::find_primitive_polynomial(p, 2));
    const auto c = roots_of_unity_map(s, p);
    const auto r = verify_pseudonoise(c);
    EXPECT_TRUE(r.two_valued) << p;
    EXPECT_NEAR(r.peak.real(), static_cast<double>(p * p - 1), 1e-9);
    EXPECT_NEAR(r.off_peak->real(), -1.0, 1e-9);
    EXPECT_NEAR(r.off_peak->imag(), 0.0, 1e-9);
  }
}

TEST(MSequence, LinearComplexityEqualsDegree) {
  for (unsigned m = 2; m <= 10; ++m) {
    const auto s = m_sequence(2, m, ff::find_primitive_polynomial(2, m));
    EXPECT_EQ(linear_complexity(s), m);
    EXPECT_EQ(linear_complexity(bipolar(s)), m);
  }
}

TEST(Gmw, TwoValuedWithHigherComplexity) {
  const auto g = gmw_sequence(2, 6, 3, 3);
  EXPECT_EQ(g.period(), 63U);
  const auto r = verify_pseudonoise(g);
  EXPECT_TRUE(r.two_valued);
  EXPECT_EQ(*r.off_peak, -1);
  EXPECT_EQ(linear_complexity(g), 12U);
  // r = 1 collapses to an m-sequence
  EXPECT_EQ(linear_complexity(gmw_sequence(2, 6, 3, 1)), 6U);
}

TEST(Gmw, RejectsBadParameters) {
  EXPECT_THROW(gmw_sequence(2, 6, 4, 3), std::invalid_argument);
  EXPECT_THROW(gmw_sequence(2, 6, 3, 7), std::invalid_argument);
}

TEST(LinearComplexity, KnownSmallCases) {
  EXPECT_EQ(linear_complexity(std::vector<std::int64_t>{0, 0, 0, 0}), 0U);
  EXPECT_EQ(linear_complexity(std::vector<std::int64_t>{0, 0, 0, 1}), 4U);
  EXPECT_EQ(linear_complexity(std::vector<std::int64_t>{1, 1, 1, 1}), 1U);
  EXPECT_THROW(linear_complexity(std::vector<std::int64_t>{}), std::invalid_argument);
}

TEST(ColumnSequence, ValidateRejectsForeignSymbols) {
  int_column c{{1, 2, -1}, alphabet::binary, 0};
  EXPECT_THROW(c.validate(), std::invalid_argument);
  int_column r{{0, 1, 5}, alphabet::residue, 5};
  EXPECT_THROW(r.validate(), std::invalid_argument);
  EXPECT_EQ(alphabet_from_string(to_string(alphabet::roots_of_unity)), alphabet::roots_of_unity);
  EXPECT_THROW(alphabet_from_string("octal"), std::invalid_argument);
}

TEST(ColumnSequence, NonPseudonoiseIsNotTwoValued) {
  const int_column c{{1, 1, 1, 1}, alphabet::binary, 0};
  EXPECT_FALSE(verify_pseudonoise(c).two_valued);
}
