#pragma once

// Window properties. All windows are cyclic in both directions.

#include <cmath>
#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "pnarray/array.hpp"
#include "pnarray/error.hpp"
#include "pnarray/scalar.hpp"
#include "pnarray/shift_sequence.hpp"

namespace pnarray {

enum class window_verdict { strong, weak, none };

inline const char* to_string(window_verdict w) {
  switch (w) {
    case window_verdict::strong: return "strong";
    case window_verdict::weak: return "weak";
    case window_verdict::none: return "none";
  }
  return "none";
}

namespace detail {
using window_key = std::vector<std::pair<std::int64_t, std::int64_t>>;
}

/// strong: every tuple over the realised alphabet occurs exactly once;
/// weak: no n-window repeats; none: some window repeats.
template <class Scalar>
window_verdict window_check_1d(std::span<const Scalar> s, std::size_t n) {
  const std::size_t v = s.size();
  detail::require(n >= 1 && n <= v, "window_check_1d: window length must lie in 1..period");
  std::set<std::pair<std::int64_t, std::int64_t>> symbols;
  for (const Scalar& x : s) symbols.insert(symbol_key(x));
  std::set<detail::window_key> seen;
  for (std::size_t i = 0; i < v; ++i) {
    detail::window_key w(n);
    for (std::size_t t = 0; t < n; ++t) w[t] = symbol_key(s[(i + t) % v]);
    if (!seen.insert(std::move(w)).second) return window_verdict::none;
  }
  const double tuples = std::pow(static_cast<double>(symbols.size()), static_cast<double>(n));
  return tuples == static_cast<double>(v) ? window_verdict::strong : window_verdict::weak;
}

struct doubleton_report {
  bool at_most_once = true;            // no (phi(j), phi(j+k)) repeats for any k
  bool exactly_once_translated = true;  // each difference class occurs exactly once per k
  std::vector<bool> per_separation;     // at_most_once per k (index 0 unused)
};

inline doubleton_report doubleton_check(const shift_sequence& phi) {
  const std::size_t T = phi.length();
  doubleton_report out;
  out.per_separation.assign(T, true);
  for (std::size_t k = 1; k < T; ++k) {
    std::set<std::pair<std::int64_t, std::int64_t>> pairs;
    for (std::size_t j = 0; j < T; ++j) {
      const auto& a = phi[j];
      const auto& b = phi[(j + k) % T];
      if (a && b && !pairs.insert({*a, *b}).second) out.per_separation[k] = false;
    }
    out.at_most_once = out.at_most_once && out.per_separation[k];
    const auto counts = difference_counts(phi, k);
    for (std::size_t c : counts) out.exactly_once_translated = out.exactly_once_translated && c == 1;
  }
  return out;
}

/// No n x 2 window (rows i..i+n-1 of columns j and j+k) repeats anywhere in A.
template <class Scalar>
bool window_check_array(const pn_array<Scalar>& a, std::size_t n, std::size_t k) {
  const std::size_t v = a.rows(), T = a.cols();
  detail::require(n >= 1 && n <= v, "window_check_array: window height must lie in 1..rows");
  detail::require(k >= 1 && k < T, "window_check_array: separation must lie in 1..T-1");
  std::set<detail::window_key> seen;
  for (std::size_t j = 0; j < T; ++j) {
    for (std::size_t i = 0; i < v; ++i) {
      detail::window_key w(2 * n);
      for (std::size_t t = 0; t < n; ++t) {
        w[t] = symbol_key(a((i + t) % v, j));
        w[n + t] = symbol_key(a((i + t) % v, (j + k) % T));
      }
      if (!seen.insert(std::move(w)).second) return false;
    }
  }
  return true;
}

template <class Scalar>
bool window_check_array(const shift_sequence& phi, const column_sequence<Scalar>& c, std::size_t n,
                        std::size_t k, Scalar blank_fill = Scalar{}) {
  return window_check_array(build_array(phi, c, blank_fill), n, k);
}

}  // namespace pnarray
