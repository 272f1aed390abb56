#include <gtest/gtest.h>

#include <algorithm>

#include "catalog.hpp"
#include "pnarray/unfold.hpp"
#include "pnarray/window.hpp"

using namespace pnarray;

TEST(DiagonalUnfold, ReadsWrappingDiagonal) {
  pn_array<int> a(2, 3);
  int x = 0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 3; ++j) a(i, j) = x++;
  // (0,0) (1,1) (0,2) (1,0) (0,1) (1,2)
  EXPECT_EQ(diagonal_unfold(a), (std::vector<int>{0, 4, 2, 3, 1, 5}));
  EXPECT_THROW(diagonal_unfold(pn_array<int>(4, 6)), std::invalid_argument);
  EXPECT_THROW(diagonal_unfold(a, 2, 1), std::invalid_argument);
}

TEST(DiagonalUnfold, OneDimensionalShiftIsTwoDimensionalShift) {
  const auto a = catalog::perfect_array();
  const auto s = diagonal_unfold(a);
  for (std::size_t tau = 0; tau < s.size(); tau += 7) {
    const auto sh = diagonal_shift_to_2d(tau, 5, 12);
    const auto b = cyclic_shift_2d(a, static_cast<std::int64_t>(sh.k), static_cast<std::int64_t>(sh.l));
    const auto t = diagonal_unfold(b);
    for (std::size_t i = 0; i < s.size(); ++i) EXPECT_DOUBLE_EQ(t[(i + tau) % s.size()], s[i]);
  }
}

TEST(DiagonalUnfold, PerfectArrayGivesPerfectSequence) {
  const auto s = diagonal_unfold(catalog::perfect_array());
  ASSERT_EQ(s.size(), 60U);
  const auto c = correlate_1d<double>(s, s);
  EXPECT_NEAR(c[0], 55.0, 1e-9);
  for (std::size_t t = 1; t < c.size(); ++t) EXPECT_NEAR(c[t], 0.0, 1e-9);
}

TEST(DiagonalUnfold, CorrelationMultisetPreserved) {
  const auto a = build_array(exponential_shift(11, 2), legendre(11, legendre_variant::binary));
  for (auto [q, r] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {3, 7}, {10, 9}}) {
    const auto s = diagonal_unfold(a, q, r);
    auto one = correlate_1d<std::int64_t>(s, s);
    auto two = autocorrelate_2d(a).values;
    std::sort(one.begin(), one.end());
    std::sort(two.begin(), two.end());
    EXPECT_EQ(one, two) << q << "," << r;
  }
}

TEST(RowUnfold, ReportWithinBound) {
  const auto a = catalog::quad7_array_a();
  EXPECT_EQ(row_unfold(a).size(), 49U);
  const auto rep = measure_row_unfold(a, a, 6.0);
  EXPECT_EQ(rep.worst_2d, 7.0);
  EXPECT_TRUE(rep.within_bound);
  EXPECT_DOUBLE_EQ(rep.bound, 20.0);
}

TEST(Correlate1d, LengthMismatch) {
  const std::vector<int> a{1, 2, 3}, b{1, 2};
  EXPECT_THROW(correlate_1d<int>(a, b), std::invalid_argument);
}

TEST(Window1d, MSequencesAreWeak) {
  for (unsigned m = 2; m <= 8; ++m) {
    const auto s = m_sequence(2, m, ff::find_primitive_polynomial(2, m));
    EXPECT_EQ(window_check_1d<std::int64_t>(s.entries, m), window_verdict::weak) << m;
    EXPECT_EQ(window_check_1d<std::int64_t>(s.entries, m - 1), window_verdict::none) << m;
  }
  const auto t = m_sequence(3, 3, ff::find_primitive_polynomial(3, 3));
  EXPECT_EQ(window_check_1d<std::int64_t>(t.entries, 3), window_verdict::weak);
}

TEST(Window1d, DeBruijnExtensionIsStrong) {
  auto s = m_sequence(2, 4, {1, 1, 0, 0, 1}).entries;
  // insert a zero into the run of three zeros
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0 && s[(i + 1) % 15] == 0 && s[(i + 2) % 15] == 0) {
      s.insert(s.begin() + static_cast<std::ptrdiff_t>(i), 0);
      break;
    }
  }
  ASSERT_EQ(s.size(), 16U);
  EXPECT_EQ(window_check_1d<std::int64_t>(s, 4), window_verdict::strong);
}

TEST(Window1d, ConstantRepeats) {
  const std::vector<int> c(5, 1);
  EXPECT_EQ(window_check_1d<int>(c, 1), window_verdict::none);
  EXPECT_THROW(window_check_1d<int>(c, 6), std::invalid_argument);
}

TEST(Doubleton, QuadraticExponentialAndConstant) {
  const auto q = doubleton_check(catalog::quad7_shift_a());
  EXPECT_TRUE(q.at_most_once);
  EXPECT_TRUE(q.exactly_once_translated);
  EXPECT_TRUE(doubleton_check(exponential_shift(7, 3)).at_most_once);
  const shift_sequence constant({3, 3, 3, 3}, 5);
  EXPECT_FALSE(doubleton_check(constant).at_most_once);
}

// Cyclic doubletons repeat for the trace shift sequence (k = 4, 8) and for
// a degree-3 member (k = 3, 4); both are reported, not hidden.
TEST(Doubleton, RepeatsFoundOutsideTheDdpConstructions) {
  const auto marray = doubleton_check(marray_shift(catalog::gf121(), 1));
  EXPECT_FALSE(marray.at_most_once);
  EXPECT_FALSE(marray.per_separation[4]);
  EXPECT_FALSE(marray.per_separation[8]);
  EXPECT_TRUE(marray.per_separation[1]);
  EXPECT_FALSE(doubleton_check(polynomial_shift(7, {0, 1, 0, 1})).at_most_once);
}

TEST(WindowArray, QuadraticAndExponential) {
  const auto a = catalog::quad7_array_a();
  EXPECT_TRUE(window_check_array(a, 3, 1));
  const auto e = build_array(exponential_shift(7, 3), legendre(7, legendre_variant::binary));
  for (std::size_t k = 1; k < 6; ++k) EXPECT_TRUE(window_check_array(e, 3, k)) << k;
  EXPECT_TRUE(window_check_array(exponential_shift(7, 3), legendre(7, legendre_variant::binary), 3, 2));
}

TEST(WindowArray, IdenticalColumnsRepeat) {
  const shift_sequence constant({0, 0, 0, 0}, 7);
  const auto a = build_array(constant, legendre(7, legendre_variant::ternary));
  EXPECT_FALSE(window_check_array(a, 3, 1));
  EXPECT_THROW(window_check_array(a, 3, 0), std::invalid_argument);
}

// Windows identify i - phi(j) and i - phi(j+k), so uniqueness tracks the
// difference phi(j+k) - phi(j): distinct differences suffice.
TEST(WindowArray, DistinctDifferencesImplyUniqueWindows) {
  for (std::uint64_t p : {7, 11, 13}) {
    const auto c = legendre(p, legendre_variant::ternary);
    std::size_t n = 1;
    while (window_check_1d<std::int64_t>(c.entries, n) == window_verdict::none) ++n;
    for (std::uint64_t g = 2; g < p; ++g) {
      if (!ff::is_primitive_root(g, p)) continue;
      const auto a = build_array(exponential_shift(p, g), c);
      for (std::size_t k = 1; k < a.cols(); ++k) EXPECT_TRUE(window_check_array(a, n, k)) << p << " " << g << " " << k;
    }
  }
}
