#include <gtest/gtest.h>

#include "catalog.hpp"
#include "pnarray/io.hpp"

using namespace pnarray;
using pnarray::io::json;

TEST(Io, ShiftRoundTrip) {
  for (const auto& [name, phi] : catalog::shipped_shifts()) {
    const auto j = io::to_json(phi);
    EXPECT_EQ(io::shift_from_json(json::parse(j.dump())), phi) << name;
  }
  EXPECT_TRUE(io::to_json(legendre_index_shift(7, 3, 1))["entries"][0].is_null());
}

TEST(Io, ColumnRoundTrip) {
  const auto c = legendre(7, legendre_variant::ternary);
  const auto back = io::column_from_json(json::parse(io::to_json(c).dump()));
  ASSERT_TRUE(std::holds_alternative<int_column>(back));
  EXPECT_EQ(std::get<int_column>(back).entries, c.entries);

  const auto roots = catalog::roots_column(7);
  const auto cb = io::column_from_json(io::to_json(roots));
  ASSERT_TRUE(std::holds_alternative<complex_column>(cb));
  for (std::size_t i = 0; i < roots.entries.size(); ++i)
    EXPECT_TRUE(approx_equal(std::get<complex_column>(cb).entries[i], roots.entries[i]));
}

TEST(Io, ArrayRoundTrip) {
  const auto a = catalog::quad7_array_a();
  const auto j = io::to_json(a);
  EXPECT_EQ(j["scalar"], "integer");
  const auto back = io::array_from_json(json::parse(j.dump()));
  ASSERT_TRUE(std::holds_alternative<pn_array<std::int64_t>>(back));
  EXPECT_EQ(std::get<pn_array<std::int64_t>>(back), a);

  const auto p = catalog::perfect_array();
  const auto pb = io::array_from_json(io::to_json(p));
  ASSERT_TRUE(std::holds_alternative<pn_array<double>>(pb));
  const auto& pd = std::get<pn_array<double>>(pb);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t jj = 0; jj < p.cols(); ++jj) EXPECT_DOUBLE_EQ(pd(i, jj), p(i, jj));
}

TEST(Io, MalformedInput) {
  EXPECT_ANY_THROW(io::array_from_json(json::parse(R"({"values": [[1, 2], [3]]})")));
  EXPECT_ANY_THROW(io::array_from_json(json::parse(R"({"rows": 2})")));
  EXPECT_ANY_THROW(io::shift_from_json(json::parse(R"({"T": 3, "v": 3, "entries": [0, 5, 1]})")));
}

TEST(Io, CorrelationTableLayout) {
  const auto c = autocorrelate_2d(catalog::quad7_array_a());
  const auto j = io::to_json(c);
  EXPECT_EQ(j["values"].size(), 7U);
  EXPECT_EQ(j["values"][0][0], 42);
  const auto csv = io::to_csv(c);
  EXPECT_NE(csv.find("42"), std::string::npos);
}
