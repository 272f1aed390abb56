#include <gtest/gtest.h>

#include <sstream>

#include "pnarray/watermark.hpp"

using namespace pnarray;
using namespace pnarray::wm;

TEST(Pgm, RoundTrip) {
  const auto img = synthetic_image(13, 9, 120.0, 10.0, 4);
  std::stringstream buf;
  write_pgm(buf, img);
  const auto back = read_pgm(buf);
  EXPECT_EQ(back.width, 13U);
  EXPECT_EQ(back.height, 9U);
  EXPECT_EQ(back.samples, img.samples);
}

TEST(Pgm, RejectsOtherFormats) {
  std::stringstream ascii("P2\n2 2\n255\n1 2 3 4\n");
  EXPECT_ANY_THROW(read_pgm(ascii));
  std::stringstream truncated("P5\n4 4\n255\nab");
  EXPECT_ANY_THROW(read_pgm(truncated));
}

TEST(Payload, Capacity) {
  EXPECT_EQ(capacity(1, 127, 127), 13U);
  EXPECT_EQ(capacity(4, 127, 127), 52U);
  EXPECT_EQ(capacity(2, 7, 7), 10U);
  EXPECT_EQ(capacity(0, 7, 7), 0U);
}

TEST(Payload, EncodeDecodeRoundTrip) {
  const std::vector<shift_2d> shifts{{3, 5}, {126, 0}, {0, 64}, {10, 20}};
  const auto hex = encode_payload(shifts, 127, 127);
  EXPECT_EQ(hex.size(), 13U);
  const auto back = decode_payload(hex, 4, 127, 127);
  ASSERT_EQ(back.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(back[i].k, shifts[i].k);
    EXPECT_EQ(back[i].l, shifts[i].l);
  }
  EXPECT_THROW(decode_payload("fffffffffffffff", 4, 127, 127), std::invalid_argument);
  EXPECT_THROW(decode_payload("xyz", 1, 127, 127), std::invalid_argument);
}

TEST(Column, ChoosesByPeriod) {
  EXPECT_EQ(watermark_column(127).kind, alphabet::binary);
  EXPECT_EQ(watermark_column(11).kind, alphabet::binary);
  EXPECT_EQ(watermark_column(13).kind, alphabet::ternary);
}

TEST(EmbedDetect, RecoversShiftsOnSmallImage) {
  const auto arrays = watermark_arrays(family_kind::quadratic, 31, 2);
  const std::vector<shift_2d> shifts{{7, 19}, {30, 2}};
  const auto cover = synthetic_image(124, 93, 128.0, 8.0, 21);
  const auto marked = embed<std::int64_t>(cover, arrays, shifts, 3.0);
  for (std::size_t a = 0; a < arrays.size(); ++a) {
    const auto d = detect(marked, arrays[a]);
    ASSERT_FALSE(d.peaks.empty()) << a;
    EXPECT_EQ(d.peaks.front().k, shifts[a].k);
    EXPECT_EQ(d.peaks.front().l, shifts[a].l);
  }
}

TEST(EmbedDetect, Validation) {
  const auto arrays = watermark_arrays(family_kind::exponential, 31, 1);
  const auto cover = synthetic_image(40, 40, 128.0, 8.0, 1);
  const std::vector<shift_2d> bad{{31, 0}};
  EXPECT_THROW(embed<std::int64_t>(cover, arrays, bad, 3.0), std::invalid_argument);
  const std::vector<shift_2d> ok{{0, 0}};
  EXPECT_THROW(embed<std::int64_t>(cover, arrays, ok, 0.0), std::invalid_argument);
  EXPECT_THROW(detect(synthetic_image(10, 10, 128.0, 1.0, 1), arrays[0]), std::invalid_argument);
  EXPECT_THROW(watermark_arrays(family_kind::legendre, 31, 1), std::invalid_argument);
  EXPECT_THROW(watermark_arrays(family_kind::quadratic, 7, 7), std::invalid_argument);
}
