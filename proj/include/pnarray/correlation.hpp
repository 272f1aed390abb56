#pragma once

// Exact 2D periodic correlation. The brute-force path is the reference; the
// shift-sequence paths (matching columns, structured fast path) are checked
// against it in the tests.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <thread>
#include <vector>

#include "pnarray/array.hpp"
#include "pnarray/column_sequence.hpp"
#include "pnarray/error.hpp"
#include "pnarray/scalar.hpp"
#include "pnarray/shift_sequence.hpp"

namespace pnarray {

/// C(k, l) for column shift k in [0, T) and row shift l in [0, v).
template <class Scalar>
struct correlation_table {
  std::size_t col_shifts = 0;  // T
  std::size_t row_shifts = 0;  // v
  std::vector<Scalar> values;  // index k * v + l

  correlation_table() = default;
  correlation_table(std::size_t T, std::size_t v)
      : col_shifts(T), row_shifts(v), values(T * v, Scalar{}) {}

  Scalar& at(std::size_t k, std::size_t l) { return values[k * row_shifts + l]; }
  const Scalar& at(std::size_t k, std::size_t l) const { return values[k * row_shifts + l]; }
  const Scalar& at_cyclic(std::int64_t k, std::int64_t l) const {
    return at(static_cast<std::size_t>(ff::mod(k, static_cast<std::int64_t>(col_shifts))),
              static_cast<std::size_t>(ff::mod(l, static_cast<std::int64_t>(row_shifts))));
  }
};

namespace detail {

template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
  threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < count; i += threads) fn(i);
    });
  }
}

}  // namespace detail

/// C(k, l) = sum_ij A(i, j) conj(B'(i, j)) with B' = cyclic_shift_2d(B, k, l).
template <class Scalar>
correlation_table<Scalar> cross_correlate_2d(const pn_array<Scalar>& a, const pn_array<Scalar>& b,
                                             unsigned threads = 1) {
  detail::require(a.rows() == b.rows() && a.cols() == b.cols(),
                  "cross_correlate_2d: arrays differ in shape");
  const std::size_t v = a.rows(), T = a.cols();
  correlation_table<Scalar> table(T, v);
  detail::parallel_for(T, threads, [&](std::size_t k) {
    for (std::size_t l = 0; l < v; ++l) {
      Scalar acc{};
      for (std::size_t i = 0; i < v; ++i) {
        const std::size_t bi = (i + v - l) % v;
        for (std::size_t j = 0; j < T; ++j) acc += a(i, j) * conj_of(b(bi, (j + T - k) % T));
      }
      table.at(k, l) = acc;
    }
  });
  return table;
}

template <class Scalar>
correlation_table<Scalar> autocorrelate_2d(const pn_array<Scalar>& a, unsigned threads = 1) {
  return cross_correlate_2d(a, a, threads);
}

struct match_count {
  std::size_t matches = 0;      // both present and phi_A(j) = phi_B(j - k) + l
  std::size_t blank_pairs = 0;  // both blank
  std::size_t present_pairs = 0;
  std::size_t a_blank_only = 0;
  std::size_t b_blank_only = 0;
};

/// Column matches between A and the (k, l) shift of B.
inline match_count matching_columns(const shift_sequence& a, const shift_sequence& b,
                                    std::int64_t k, std::int64_t l) {
  detail::require(a.length() == b.length() && a.modulus() == b.modulus(),
                  "matching_columns: shift sequences differ in shape");
  match_count out;
  for (std::size_t j = 0; j < a.length(); ++j) {
    const auto& x = a[j];
    const auto& y = b.at_cyclic(static_cast<std::int64_t>(j) - k);
    if (x && y) {
      ++out.present_pairs;
      if (*x == ff::mod(*y + l, a.modulus())) ++out.matches;
    } else if (!x && !y) {
      ++out.blank_pairs;
    } else if (!x) {
      ++out.a_blank_only;
    } else {
      ++out.b_blank_only;
    }
  }
  return out;
}

/// Matching-column counts for every (k, l), laid out like a correlation table.
inline correlation_table<std::int64_t> matching_table(const shift_sequence& a,
                                                      const shift_sequence& b) {
  correlation_table<std::int64_t> table(a.length(), static_cast<std::size_t>(a.modulus()));
  for (std::size_t k = 0; k < table.col_shifts; ++k)
    for (std::size_t l = 0; l < table.row_shifts; ++l)
      table.at(k, l) = static_cast<std::int64_t>(
          matching_columns(a, b, static_cast<std::int64_t>(k), static_cast<std::int64_t>(l)).matches);
  return table;
}

/// Largest off-origin entry (k, l) != (0, 0) of a matching table.
inline std::int64_t max_off_origin(const correlation_table<std::int64_t>& counts) {
  std::int64_t best = 0;
  for (std::size_t idx = 1; idx < counts.values.size(); ++idx) best = std::max(best, counts.values[idx]);
  return best;
}

inline std::int64_t max_entry(const correlation_table<std::int64_t>& counts) {
  return *std::max_element(counts.values.begin(), counts.values.end());
}

/// Correlation predicted from matching-column counts for arrays sharing a
/// two-valued column c: m peak + (P - m) off-peak, plus the constant-column terms.
template <class Scalar>
correlation_table<Scalar> correlation_from_matches(const shift_sequence& a, const shift_sequence& b,
                                                   const column_sequence<Scalar>& c,
                                                   Scalar fill_a = Scalar{}, Scalar fill_b = Scalar{}) {
  const auto report = verify_pseudonoise(c);
  detail::require(report.two_valued, "correlation_from_matches: column is not two-valued");
  const Scalar peak = report.peak, off = *report.off_peak;
  Scalar column_sum{};
  for (const Scalar& x : c.entries) column_sum += x;
  const auto v = static_cast<double>(c.period());
  correlation_table<Scalar> table(a.length(), static_cast<std::size_t>(a.modulus()));
  for (std::size_t k = 0; k < table.col_shifts; ++k) {
    for (std::size_t l = 0; l < table.row_shifts; ++l) {
      const auto m = matching_columns(a, b, static_cast<std::int64_t>(k), static_cast<std::int64_t>(l));
      const auto matched = static_cast<Scalar>(static_cast<std::int64_t>(m.matches));
      const auto unmatched = static_cast<Scalar>(static_cast<std::int64_t>(m.present_pairs - m.matches));
      Scalar value = matched * peak + unmatched * off;
      value += static_cast<Scalar>(static_cast<std::int64_t>(m.a_blank_only)) * fill_a * conj_of(column_sum);
      value += static_cast<Scalar>(static_cast<std::int64_t>(m.b_blank_only)) * column_sum * conj_of(fill_b);
      value += static_cast<Scalar>(static_cast<std::int64_t>(m.blank_pairs)) *
               static_cast<Scalar>(static_cast<std::int64_t>(v)) * fill_a * conj_of(fill_b);
      table.at(k, l) = value;
    }
  }
  return table;
}

/// Correlation of arbitrary data against a structured array in
/// O(v^2 T + T^2 v): column-wise correlations of the data with the base
/// column are computed once and gathered through the shift sequence.
template <class Scalar>
correlation_table<Scalar> correlate_structured(const pn_array<Scalar>& data,
                                               const structured_array<Scalar>& s,
                                               unsigned threads = 1) {
  const std::size_t v = data.rows(), T = data.cols();
  detail::require(s.base.period() == v && s.shifts.length() == T,
                  "correlate_structured: data shape does not match structure");
  // x(j, d) = sum_i data(i, j) conj(c[i - d]); col_sum(j) = sum_i data(i, j)
  std::vector<Scalar> x(T * v, Scalar{}), col_sum(T, Scalar{});
  detail::parallel_for(T, threads, [&](std::size_t j) {
    for (std::size_t i = 0; i < v; ++i) col_sum[j] += data(i, j);
    for (std::size_t d = 0; d < v; ++d) {
      Scalar acc{};
      for (std::size_t i = 0; i < v; ++i) acc += data(i, j) * conj_of(s.base.entries[(i + v - d) % v]);
      x[j * v + d] = acc;
    }
  });
  correlation_table<Scalar> table(T, v);
  detail::parallel_for(T, threads, [&](std::size_t k) {
    for (std::size_t l = 0; l < v; ++l) {
      Scalar acc{};
      for (std::size_t j = 0; j < T; ++j) {
        const std::size_t src = (j + T - k) % T;
        const auto& shift = s.shifts[src];
        if (shift) {
          acc += x[j * v + static_cast<std::size_t>(ff::mod(static_cast<std::int64_t>(l) + *shift,
                                                            static_cast<std::int64_t>(v)))];
        } else {
          acc += col_sum[j] * conj_of(s.fills[src]);
        }
      }
      table.at(k, l) = acc;
    }
  });
  return table;
}

template <class Scalar>
struct histogram_bin {
  Scalar value{};
  std::size_t count = 0;
};

/// Value -> frequency, ordered by value; real and complex values are merged at 1e-9.
template <class Scalar>
std::vector<histogram_bin<Scalar>> correlation_histogram(const correlation_table<Scalar>& c,
                                                         bool exclude_origin = false) {
  std::map<std::pair<std::int64_t, std::int64_t>, histogram_bin<Scalar>> bins;
  for (std::size_t idx = exclude_origin ? 1 : 0; idx < c.values.size(); ++idx) {
    auto& bin = bins[symbol_key(c.values[idx])];
    if (bin.count == 0) bin.value = c.values[idx];
    ++bin.count;
  }
  std::vector<histogram_bin<Scalar>> out;
  out.reserve(bins.size());
  for (auto& [key, bin] : bins) out.push_back(bin);
  return out;
}

template <class Scalar>
struct peak_stats {
  Scalar peak{};
  std::size_t peak_k = 0;
  std::size_t peak_l = 0;
  double sidelobe = 0.0;  // largest magnitude away from the peak
  double ratio = 0.0;     // |peak| / sidelobe; infinite when unbounded
  bool unbounded = false;
};

template <class Scalar>
peak_stats<Scalar> peak_sidelobe_stats(const correlation_table<Scalar>& c) {
  peak_stats<Scalar> out;
  std::size_t best = 0;
  for (std::size_t idx = 1; idx < c.values.size(); ++idx) {
    if (magnitude(c.values[idx]) > magnitude(c.values[best]) + tolerance) best = idx;
  }
  out.peak = c.values[best];
  out.peak_k = best / c.row_shifts;
  out.peak_l = best % c.row_shifts;
  for (std::size_t idx = 0; idx < c.values.size(); ++idx) {
    if (idx != best) out.sidelobe = std::max(out.sidelobe, magnitude(c.values[idx]));
  }
  out.unbounded = out.sidelobe < tolerance;
  out.ratio = out.unbounded ? std::numeric_limits<double>::infinity()
                            : magnitude(out.peak) / out.sidelobe;
  return out;
}

}  // namespace pnarray
