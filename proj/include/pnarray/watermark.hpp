#pragma once

// Spatial-domain watermarking with arrays: payload bits select 2D cyclic
// shifts, arrays are summed, tiled over a grayscale image, and detected by
// correlating the tile-folded residual against each array.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pnarray/array.hpp"
#include "pnarray/correlation.hpp"
#include "pnarray/error.hpp"
#include "pnarray/family.hpp"
#include "pnarray/unfold.hpp"

namespace pnarray::wm {

/// 8-bit luminance image, row-major.
struct gray_image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> samples;

  gray_image() = default;
  gray_image(std::size_t w, std::size_t h, std::uint8_t fill = 0)
      : width(w), height(h), samples(w * h, fill) {}

  std::uint8_t& at(std::size_t y, std::size_t x) { return samples[y * width + x]; }
  std::uint8_t at(std::size_t y, std::size_t x) const { return samples[y * width + x]; }
};

/// Flat background plus seeded Gaussian noise, rounded and clamped.
inline gray_image synthetic_image(std::size_t width, std::size_t height, double mean, double sigma,
                                  std::uint64_t seed) {
  gray_image img(width, height);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, sigma > 0 ? sigma : 1.0);
  for (auto& px : img.samples) {
    const double value = mean + (sigma > 0 ? noise(rng) : 0.0);
    px = static_cast<std::uint8_t>(std::clamp(std::lround(value), 0L, 255L));
  }
  return img;
}

// ---------------------------------------------------------------------------
// Binary PGM (P5, maxval 255)

inline void write_pgm(std::ostream& out, const gray_image& img) {
  out << "P5\n" << img.width << ' ' << img.height << "\n255\n";
  out.write(reinterpret_cast<const char*>(img.samples.data()),
            static_cast<std::streamsize>(img.samples.size()));
}

inline gray_image read_pgm(std::istream& in) {
  auto token = [&in]() {
    std::string t;
    while (in >> std::ws && in.peek() == '#') std::getline(in, t);
    in >> t;
    return t;
  };
  detail::require(token() == "P5", "read_pgm: not a binary PGM (P5) stream");
  std::size_t w = 0, h = 0;
  int maxval = 0;
  try {
    w = std::stoul(token());
    h = std::stoul(token());
    maxval = std::stoi(token());
  } catch (const std::exception&) {
    throw std::invalid_argument("read_pgm: malformed header");
  }
  detail::require(maxval == 255, "read_pgm: only maxval 255 is supported");
  in.get();
  gray_image img(w, h);
  in.read(reinterpret_cast<char*>(img.samples.data()), static_cast<std::streamsize>(img.samples.size()));
  detail::require(static_cast<std::size_t>(in.gcount()) == img.samples.size(),
                  "read_pgm: truncated pixel data");
  return img;
}

inline void write_pgm(const std::string& path, const gray_image& img) {
  std::ofstream out(path, std::ios::binary);
  detail::require(static_cast<bool>(out), "write_pgm: cannot open " + path);
  write_pgm(out, img);
}

inline gray_image read_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  detail::require(static_cast<bool>(in), "read_pgm: cannot open " + path);
  return read_pgm(in);
}

// ---------------------------------------------------------------------------
// Payload

/// Bits carried by M arrays of size v x T: M floor(log2(v T)).
inline std::uint64_t capacity(std::uint64_t arrays, std::uint64_t v, std::uint64_t T) {
  if (arrays == 0 || v * T < 2) return 0;
  return arrays * static_cast<std::uint64_t>(std::bit_width(v * T) - 1);
}

/// Splits a hex payload (MSB first, left-padded to capacity) into one shift per array;
/// chunk value n maps to (k, l) = (n mod T, n / T).
inline std::vector<shift_2d> decode_payload(const std::string& hex, std::size_t arrays, std::size_t v,
                                            std::size_t T) {
  const std::size_t per_array = capacity(1, v, T);
  const std::size_t total = arrays * per_array;
  std::vector<bool> bits;
  for (char ch : hex) {
    int nibble = -1;
    if (ch >= '0' && ch <= '9') nibble = ch - '0';
    if (ch >= 'a' && ch <= 'f') nibble = ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') nibble = ch - 'A' + 10;
    detail::require(nibble >= 0, std::string("decode_payload: invalid hex digit '") + ch + "'");
    for (int b = 3; b >= 0; --b) bits.push_back(((nibble >> b) & 1) != 0);
  }
  while (bits.size() > total) {
    detail::require(!bits.front(), "decode_payload: payload exceeds capacity of " +
                                       std::to_string(total) + " bits");
    bits.erase(bits.begin());
  }
  bits.insert(bits.begin(), total - bits.size(), false);
  std::vector<shift_2d> shifts(arrays);
  for (std::size_t a = 0; a < arrays; ++a) {
    std::size_t n = 0;
    for (std::size_t b = 0; b < per_array; ++b) n = (n << 1) | (bits[a * per_array + b] ? 1U : 0U);
    shifts[a] = {n % T, n / T};
  }
  return shifts;
}

/// Inverse of decode_payload; returns ceil(capacity / 4) hex digits.
inline std::string encode_payload(std::span<const shift_2d> shifts, std::size_t v, std::size_t T) {
  const std::size_t per_array = capacity(1, v, T);
  std::vector<bool> bits;
  for (const auto& s : shifts) {
    const std::size_t n = s.l * T + s.k;
    for (std::size_t b = per_array; b-- > 0;) bits.push_back(((n >> b) & 1U) != 0);
  }
  bits.insert(bits.begin(), (4 - bits.size() % 4) % 4, false);
  std::string hex;
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    const int nibble = (bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | bits[i + 3];
    hex.push_back("0123456789abcdef"[nibble]);
  }
  return hex;
}

// ---------------------------------------------------------------------------
// Embedding and detection

/// Adds strength * sum_i cyclic_shift_2d(A_i, k_i, l_i), tiled from the
/// image origin, with clamping to [0, 255].
template <class Scalar>
gray_image embed(const gray_image& img, std::span<const pn_array<Scalar>> arrays,
                 std::span<const shift_2d> shifts, double strength) {
  detail::require(strength > 0, "embed: strength must be positive");
  detail::require(!arrays.empty() && arrays.size() == shifts.size(),
                  "embed: need one shift per array");
  const std::size_t v = arrays.front().rows(), T = arrays.front().cols();
  pn_array<double> composite(v, T, 0.0);
  for (std::size_t a = 0; a < arrays.size(); ++a) {
    detail::require(arrays[a].rows() == v && arrays[a].cols() == T, "embed: arrays differ in shape");
    detail::require(shifts[a].k < T && shifts[a].l < v, "embed: payload shift out of range");
    const auto shifted = cyclic_shift_2d(arrays[a], static_cast<std::int64_t>(shifts[a].k),
                                         static_cast<std::int64_t>(shifts[a].l));
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < T; ++j) composite(i, j) += static_cast<double>(shifted(i, j));
  }
  gray_image out = img;
  for (std::size_t y = 0; y < img.height; ++y) {
    for (std::size_t x = 0; x < img.width; ++x) {
      const double value = img.at(y, x) + strength * composite(y % v, x % T);
      out.at(y, x) = static_cast<std::uint8_t>(std::clamp(std::lround(value), 0L, 255L));
    }
  }
  return out;
}

/// Image minus per-tile means, accumulated into one v x T block.
inline pn_array<double> fold_residual(const gray_image& img, std::size_t v, std::size_t T) {
  detail::require(img.height >= v && img.width >= T, "detect: array does not fit in the image");
  pn_array<double> block(v, T, 0.0);
  for (std::size_t ty = 0; ty < img.height; ty += v) {
    for (std::size_t tx = 0; tx < img.width; tx += T) {
      const std::size_t y1 = std::min(img.height, ty + v), x1 = std::min(img.width, tx + T);
      double sum = 0.0;
      for (std::size_t y = ty; y < y1; ++y)
        for (std::size_t x = tx; x < x1; ++x) sum += img.at(y, x);
      const double mean = sum / static_cast<double>((y1 - ty) * (x1 - tx));
      for (std::size_t y = ty; y < y1; ++y)
        for (std::size_t x = tx; x < x1; ++x) block(y - ty, x - tx) += img.at(y, x) - mean;
    }
  }
  return block;
}

struct detected_peak {
  std::size_t k = 0;
  std::size_t l = 0;
  double value = 0.0;
};

struct detection {
  correlation_table<double> surface;
  std::vector<detected_peak> peaks;  // above threshold, strongest first
  double mean = 0.0;
  double stddev = 0.0;
  double threshold = 0.0;  // mean + 4 stddev
  peak_stats<double> stats;
};

template <class Scalar>
detection detect(const gray_image& img, const pn_array<Scalar>& array, unsigned threads = 1) {
  const auto residual = fold_residual(img, array.rows(), array.cols());
  const auto reference = array.template cast<double>();
  detection out;
  if (const auto structure = find_structure(reference)) {
    out.surface = correlate_structured(residual, *structure, threads);
  } else {
    out.surface = cross_correlate_2d(residual, reference, threads);
  }
  const auto& values = out.surface.values;
  const auto n = static_cast<double>(values.size());
  for (double x : values) out.mean += x / n;
  for (double x : values) out.stddev += (x - out.mean) * (x - out.mean) / n;
  out.stddev = std::sqrt(out.stddev);
  out.threshold = out.mean + 4.0 * out.stddev;
  for (std::size_t idx = 0; idx < values.size(); ++idx) {
    if (values[idx] > out.threshold)
      out.peaks.push_back({idx / out.surface.row_shifts, idx % out.surface.row_shifts, values[idx]});
  }
  std::stable_sort(out.peaks.begin(), out.peaks.end(),
                   [](const detected_peak& a, const detected_peak& b) { return a.value > b.value; });
  out.stats = peak_sidelobe_stats(out.surface);
  return out;
}

/// Column of period p for watermark arrays: a +-1 m-sequence when p = 2^m - 1,
/// otherwise the binary (p = 3 mod 4) or ternary Legendre sequence.
inline int_column watermark_column(std::uint64_t p) {
  const unsigned m = static_cast<unsigned>(std::bit_width(p + 1) - 1);
  if (std::has_single_bit(p + 1) && m >= 2)
    return bipolar(m_sequence(2, m, ff::find_primitive_polynomial(2, m)));
  return legendre(p, p % 4 == 3 ? legendre_variant::binary : legendre_variant::ternary);
}

/// The first `count` members of a family built over watermark_column(p).
inline std::vector<pn_array<std::int64_t>> watermark_arrays(family_kind kind, std::uint64_t p,
                                                            std::size_t count) {
  detail::require(kind == family_kind::quadratic || kind == family_kind::exponential,
                  "watermark_arrays: family must be quadratic or exponential");
  const auto fam = family_enumerate(kind, {p, 0, 2});
  detail::require(count >= 1 && count <= fam.members.size(),
                  "watermark_arrays: family has only " + std::to_string(fam.members.size()) + " members");
  const auto column = watermark_column(p);
  std::vector<pn_array<std::int64_t>> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto a = build_array(fam.members[i].generator, column);
    a.set_origin({to_string(kind) + " " + fam.members[i].label, to_string(column.kind), std::nullopt});
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace pnarray::wm
