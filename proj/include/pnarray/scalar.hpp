#pragma once

// Scalar helpers shared by the integer, real and complex backends.

#include <cmath>
#include <complex>
#include <cstdint>
#include <type_traits>
#include <utility>

namespace pnarray {

/// Absolute tolerance for real and complex comparisons.
inline constexpr double tolerance = 1e-9;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};
template <class T>
inline constexpr bool is_complex_v = is_complex<T>::value;

template <class Scalar>
Scalar conj_of(const Scalar& x) {
  if constexpr (is_complex_v<Scalar>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <class Scalar>
double magnitude(const Scalar& x) {
  if constexpr (is_complex_v<Scalar>) {
    return std::abs(x);
  } else {
    return std::abs(static_cast<double>(x));
  }
}

template <class Scalar>
bool approx_equal(const Scalar& a, const Scalar& b) {
  if constexpr (std::is_integral_v<Scalar>) {
    return a == b;
  } else {
    return magnitude(a - b) < tolerance;
  }
}

/// Totally ordered key for hashing symbols into windows and histograms;
/// real and complex values are bucketed at the comparison tolerance.
template <class Scalar>
std::pair<std::int64_t, std::int64_t> symbol_key(const Scalar& x) {
  if constexpr (std::is_integral_v<Scalar>) {
    return {static_cast<std::int64_t>(x), 0};
  } else if constexpr (is_complex_v<Scalar>) {
    return {std::llround(x.real() / tolerance), std::llround(x.imag() / tolerance)};
  } else {
    return {std::llround(static_cast<double>(x) / tolerance), 0};
  }
}

}  // namespace pnarray
