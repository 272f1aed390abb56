#include <gtest/gtest.h>

#include <random>

#include "catalog.hpp"
#include "pnarray/correlation.hpp"

using namespace pnarray;

namespace {

template <class Scalar>
correlation_table<Scalar> naive(const pn_array<Scalar>& a, const pn_array<Scalar>& b) {
  correlation_table<Scalar> t(a.cols(), a.rows());
  for (std::size_t k = 0; k < a.cols(); ++k)
    for (std::size_t l = 0; l < a.rows(); ++l) {
      Scalar acc{};
      for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
          acc += a(i, j) * conj_of(b.at_cyclic(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(l),
                                               static_cast<std::int64_t>(j) - static_cast<std::int64_t>(k)));
      t.at(k, l) = acc;
    }
  return t;
}

template <class Scalar>
void expect_tables_near(const correlation_table<Scalar>& x, const correlation_table<Scalar>& y) {
  ASSERT_EQ(x.values.size(), y.values.size());
  for (std::size_t i = 0; i < x.values.size(); ++i) EXPECT_TRUE(approx_equal(x.values[i], y.values[i])) << i;
}

}  // namespace

TEST(Correlation, QuadraticAutocorrelationValues) {
  const auto c = autocorrelate_2d(catalog::quad7_array_a());
  EXPECT_EQ(c.at(0, 0), 42);
  const auto hist = correlation_histogram(c);
  ASSERT_EQ(hist.size(), 3U);
  EXPECT_EQ(hist[0].value, -7);
  EXPECT_EQ(hist[0].count, 6U);
  EXPECT_EQ(hist[1].value, 0);
  EXPECT_EQ(hist[1].count, 42U);
  EXPECT_EQ(hist[2].value, 42);
  EXPECT_EQ(hist[2].count, 1U);
}

TEST(Correlation, QuadraticCrossValues) {
  const auto c = cross_correlate_2d(catalog::quad7_array_a(), catalog::quad7_array_b());
  for (auto x : c.values) EXPECT_TRUE(x == -7 || x == 0 || x == 7) << x;
}

TEST(Correlation, AgreesWithNaiveDefinition) {
  const auto a = catalog::quad7_array_a(), b = catalog::quad7_array_b();
  expect_tables_near(cross_correlate_2d(a, b), naive(a, b));
  const auto ca = catalog::shipped_complex_arrays()[0].value;
  expect_tables_near(cross_correlate_2d(ca, ca), naive(ca, ca));
}

TEST(Correlation, ThreadCountDoesNotChangeResult) {
  const auto arrays = catalog::shipped_arrays();
  const auto& a = arrays[5].value;
  const auto one = cross_correlate_2d(a, a, 1);
  const auto four = cross_correlate_2d(a, a, 4);
  EXPECT_EQ(one.values, four.values);
}

TEST(Correlation, ShapeMismatchThrows) {
  EXPECT_THROW(cross_correlate_2d(catalog::quad7_array_a(), pn_array<std::int64_t>(7, 6)), std::invalid_argument);
}

TEST(Correlation, ZeroArrayGivesZeroTable) {
  const pn_array<std::int64_t> z(5, 4, 0);
  const auto c = autocorrelate_2d(z);
  for (auto x : c.values) EXPECT_EQ(x, 0);
  const auto stats = peak_sidelobe_stats(c);
  EXPECT_TRUE(stats.unbounded);
}

TEST(Correlation, ShiftCovariance) {
  std::mt19937 rng(11);
  const auto a = catalog::quad7_array_a(), b = catalog::quad7_array_b();
  const auto base = cross_correlate_2d(a, b);
  for (int trial = 0; trial < 10; ++trial) {
    const auto k = static_cast<std::int64_t>(rng() % 7), l = static_cast<std::int64_t>(rng() % 7);
    const auto shifted = cross_correlate_2d(cyclic_shift_2d(a, k, l), b);
    for (std::size_t kk = 0; kk < 7; ++kk)
      for (std::size_t ll = 0; ll < 7; ++ll)
        EXPECT_EQ(shifted.at(kk, ll), base.at_cyclic(static_cast<std::int64_t>(kk) - k, static_cast<std::int64_t>(ll) - l));
  }
}

TEST(MatchingColumns, AutocorrelationOfQuadratic) {
  const auto phi = catalog::quad7_shift_a();
  const auto counts = matching_table(phi, phi);
  EXPECT_EQ(counts.at(0, 0), 7);
  EXPECT_EQ(max_off_origin(counts), 1);
  const auto m = matching_columns(phi, phi, 0, 0);
  EXPECT_EQ(m.present_pairs, 7U);
  EXPECT_EQ(m.blank_pairs, 0U);
}

TEST(MatchingColumns, BlankBookkeeping) {
  const auto phi = legendre_index_shift(7, 3, 1);
  const auto m = matching_columns(phi, phi, 1, 0);
  EXPECT_EQ(m.a_blank_only, 1U);
  EXPECT_EQ(m.b_blank_only, 1U);
  EXPECT_EQ(m.present_pairs, 5U);
}

TEST(MatchingColumns, PredictsBruteForceForTwoValuedColumns) {
  const auto c = legendre(7, legendre_variant::ternary);
  const auto pa = catalog::quad7_shift_a(), pb = catalog::quad7_shift_b();
  expect_tables_near(correlation_from_matches(pa, pb, c), cross_correlate_2d(build_array(pa, c), build_array(pb, c)));

  const auto roots = catalog::roots_column(7);
  const auto li = legendre_index_shift(7, 3, 1), li2 = legendre_index_shift(7, 3, 5);
  const catalog::cplx fa(0.5, 0.25), fb(-1.0, 0.0);
  expect_tables_near(correlation_from_matches(li, li2, roots, fa, fb),
                     cross_correlate_2d(build_array(li, roots, fa), build_array(li2, roots, fb)));
}

TEST(MatchingColumns, RejectsNonPseudonoiseColumn) {
  const int_column flat{{1, 1, 1, 1, 1, 1, 1}, alphabet::binary, 0};
  EXPECT_THROW(correlation_from_matches(catalog::quad7_shift_a(), catalog::quad7_shift_a(), flat),
               std::invalid_argument);
}

TEST(Structured, MatchesBruteForceOnArbitraryData) {
  std::mt19937 rng(5);
  std::normal_distribution<double> noise;
  for (const auto& [name, a] : catalog::shipped_arrays()) {
    const auto st = find_structure(a);
    ASSERT_TRUE(st.has_value()) << name;
    pn_array<double> data(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) data(i, j) = noise(rng);
    expect_tables_near(correlate_structured(data, *st), cross_correlate_2d(data, a));
  }
}

TEST(Summary, PeakSidelobe) {
  const auto c = autocorrelate_2d(catalog::quad7_array_a());
  const auto s = peak_sidelobe_stats(c);
  EXPECT_EQ(s.peak, 42);
  EXPECT_EQ(s.peak_k, 0U);
  EXPECT_EQ(s.peak_l, 0U);
  EXPECT_DOUBLE_EQ(s.sidelobe, 7.0);
  EXPECT_DOUBLE_EQ(s.ratio, 6.0);
  EXPECT_FALSE(s.unbounded);

  const auto perfect = autocorrelate_2d(catalog::perfect_array());
  const auto ps = peak_sidelobe_stats(perfect);
  EXPECT_TRUE(ps.unbounded);
  const auto hist = correlation_histogram(perfect, true);
  ASSERT_EQ(hist.size(), 1U);
  EXPECT_EQ(hist[0].count, 59U);
}
