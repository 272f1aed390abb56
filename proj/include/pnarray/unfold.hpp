#pragma once

// Unfolding arrays into long sequences, diagonally and row by row.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "pnarray/array.hpp"
#include "pnarray/correlation.hpp"
#include "pnarray/error.hpp"
#include "pnarray/scalar.hpp"

namespace pnarray {

/// s_i = A(q i mod v, r i mod T); requires gcd(v, T) = gcd(q, v) = gcd(r, T) = 1.
template <class Scalar>
std::vector<Scalar> diagonal_unfold(const pn_array<Scalar>& a, std::size_t q = 1, std::size_t r = 1) {
  const std::size_t v = a.rows(), T = a.cols();
  detail::require(std::gcd(v, T) == 1, "diagonal_unfold: rows and columns must be coprime");
  detail::require(std::gcd(q, v) == 1 && std::gcd(r, T) == 1,
                  "diagonal_unfold: steps must be coprime to their dimensions");
  std::vector<Scalar> s(v * T);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = a((q * i) % v, (r * i) % T);
  return s;
}

/// s_{i T + j} = A(i, j).
template <class Scalar>
std::vector<Scalar> row_unfold(const pn_array<Scalar>& a) {
  return {a.values().begin(), a.values().end()};
}

/// Periodic cross-correlation c[tau] = sum_i s[i] conj(t[i - tau]).
template <class Scalar>
std::vector<Scalar> correlate_1d(std::span<const Scalar> s, std::span<const Scalar> t) {
  detail::require(s.size() == t.size() && !s.empty(), "correlate_1d: sequences differ in length");
  const std::size_t n = s.size();
  std::vector<Scalar> out(n, Scalar{});
  for (std::size_t tau = 0; tau < n; ++tau) {
    Scalar acc{};
    for (std::size_t i = 0; i < n; ++i) acc += s[i] * conj_of(t[(i + n - tau) % n]);
    out[tau] = acc;
  }
  return out;
}

struct shift_2d {
  std::size_t k = 0;  // column shift
  std::size_t l = 0;  // row shift
  friend bool operator==(const shift_2d&, const shift_2d&) = default;
};

/// The 2D shift equivalent to a 1D shift tau of a (q, r) diagonal unfolding:
/// (k, l) = (r tau mod T, q tau mod v), a Chinese-remainder pairing.
inline shift_2d diagonal_shift_to_2d(std::size_t tau, std::size_t v, std::size_t T, std::size_t q = 1,
                                     std::size_t r = 1) {
  return {(r * tau) % T, (q * tau) % v};
}

struct row_unfold_report {
  double worst_1d = 0.0;     // largest off-peak 1D magnitude
  double worst_2d = 0.0;     // largest off-origin 2D magnitude
  double column_peak = 0.0;  // peak of the column autocorrelation
  double bound = 0.0;        // 2 * worst_2d + column_peak
  double measured_factor = 0.0;
  bool within_bound = false;
};

/// Compares row-unfolded 1D correlation against the 2D correlation of the same pair.
template <class Scalar>
row_unfold_report measure_row_unfold(const pn_array<Scalar>& a, const pn_array<Scalar>& b,
                                     double column_peak) {
  const bool same = &a == &b;
  const auto s = row_unfold(a), t = row_unfold(b);
  const auto c1 = correlate_1d<Scalar>(s, t);
  const auto c2 = cross_correlate_2d(a, b);
  row_unfold_report out;
  for (std::size_t tau = same ? 1 : 0; tau < c1.size(); ++tau)
    out.worst_1d = std::max(out.worst_1d, magnitude(c1[tau]));
  for (std::size_t idx = same ? 1 : 0; idx < c2.values.size(); ++idx)
    out.worst_2d = std::max(out.worst_2d, magnitude(c2.values[idx]));
  out.column_peak = column_peak;
  out.bound = 2.0 * out.worst_2d + column_peak;
  out.measured_factor = out.worst_2d > 0 ? out.worst_1d / out.worst_2d : 0.0;
  out.within_bound = out.worst_1d <= out.bound + tolerance;
  return out;
}

}  // namespace pnarray
