#pragma once

// Pseudonoise column sequences: Legendre, Hall, m-sequences, GMW and their
// roots-of-unity images, with autocorrelation and linear complexity checks.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "pnarray/error.hpp"
#include "pnarray/finite_field.hpp"
#include "pnarray/scalar.hpp"

namespace pnarray {

enum class alphabet { binary, ternary, roots_of_unity, residue, real };

inline std::string to_string(alphabet a) {
  switch (a) {
    case alphabet::binary: return "binary";
    case alphabet::ternary: return "ternary";
    case alphabet::roots_of_unity: return "roots_of_unity";
    case alphabet::residue: return "residue";
    case alphabet::real: return "real";
  }
  return "real";
}

inline alphabet alphabet_from_string(const std::string& name) {
  for (alphabet a : {alphabet::binary, alphabet::ternary, alphabet::roots_of_unity,
                     alphabet::residue, alphabet::real}) {
    if (to_string(a) == name) return a;
  }
  throw std::invalid_argument("unknown alphabet '" + name + "'");
}

/// One period of a column sequence. `symbol_modulus` is p for residue and
/// roots-of-unity alphabets, 0 otherwise.
template <class Scalar>
struct column_sequence {
  using value_type = Scalar;

  std::vector<Scalar> entries;
  alphabet kind = alphabet::real;
  std::uint64_t symbol_modulus = 0;

  std::size_t period() const { return entries.size(); }
  const Scalar& operator[](std::size_t i) const { return entries[i]; }

  /// Entry at a cyclic index.
  const Scalar& at_cyclic(std::int64_t i) const {
    return entries[static_cast<std::size_t>(ff::mod(i, static_cast<std::int64_t>(entries.size())))];
  }

  void validate() const {
    detail::require(entries.size() >= 2, "column_sequence: period must be at least 2");
    for (const Scalar& x : entries) {
      bool ok = true;
      if constexpr (std::is_integral_v<Scalar>) {
        switch (kind) {
          case alphabet::binary: ok = x == 1 || x == -1; break;
          case alphabet::ternary: ok = x == 1 || x == -1 || x == 0; break;
          case alphabet::residue:
            ok = x >= 0 && static_cast<std::uint64_t>(x) < symbol_modulus;
            break;
          default: break;
        }
      } else if constexpr (is_complex_v<Scalar>) {
        if (kind == alphabet::roots_of_unity) ok = std::abs(x) < tolerance || std::abs(std::abs(x) - 1.0) < tolerance;
      }
      detail::require(ok, "column_sequence: entry outside the " + to_string(kind) + " alphabet");
    }
  }
};

using int_column = column_sequence<std::int64_t>;
using real_column = column_sequence<double>;
using complex_column = column_sequence<std::complex<double>>;

enum class legendre_variant { binary, ternary };

/// Legendre symbol sequence: +1 on quadratic residues, -1 on non-residues;
/// index 0 is 0 (ternary) or +1 (binary).
inline int_column legendre(std::uint64_t p, legendre_variant variant) {
  detail::require(ff::is_prime(p) && p != 2, "legendre: p must be an odd prime");
  int_column c;
  c.kind = variant == legendre_variant::ternary ? alphabet::ternary : alphabet::binary;
  c.entries.assign(p, -1);
  for (std::uint64_t x = 1; x < p; ++x) c.entries[ff::mul_mod(x, x, p)] = 1;
  c.entries[0] = variant == legendre_variant::ternary ? 0 : 1;
  return c;
}

/// Primitive root used for the sextic classes: smallest g with ind_g(3) = 1 (mod 6).
inline std::uint64_t hall_primitive_root(std::uint64_t p) {
  for (std::uint64_t g = 2; g < p; ++g) {
    if (!ff::is_primitive_root(g, p)) continue;
    const auto ind = ff::index_table(p, g);
    if (*ind[3 % p] % 6 == 1) return g;
  }
  throw not_found_error("hall: no primitive root places 3 in the first sextic class");
}

/// Hall sextic residue sequence for primes p = 4x^2 + 27: +1 on C0 u C1 u C3.
inline int_column hall(std::uint64_t p) {
  bool representable = false;
  for (std::uint64_t x = 1; 4 * x * x + 27 <= p; ++x) representable |= 4 * x * x + 27 == p;
  detail::require(ff::is_prime(p) && representable,
                  "hall: " + std::to_string(p) + " is not a prime of the form 4x^2+27");
  const std::uint64_t g = hall_primitive_root(p);
  const auto ind = ff::index_table(p, g);
  int_column c;
  c.kind = alphabet::binary;
  c.entries.assign(p, -1);
  for (std::uint64_t j = 1; j < p; ++j) {
    const std::uint64_t cls = *ind[j] % 6;
    if (cls == 0 || cls == 1 || cls == 3) c.entries[j] = 1;
  }
  return c;
}

/// Output of the LFSR with characteristic polynomial `primitive_poly`
/// (monic, degree m, constant term first) from state (0, ..., 0, 1).
inline int_column m_sequence(std::uint64_t p, unsigned m, const ff::polynomial& primitive_poly) {
  detail::require(primitive_poly.size() == m + 1, "m_sequence: polynomial degree must equal m");
  detail::require(ff::is_primitive_polynomial(p, primitive_poly),
                  "m_sequence: " + ff::format_polynomial(primitive_poly) +
                      " is not primitive over Z_" + std::to_string(p));
  const std::uint64_t period = ff::ipow(p, m) - 1;
  const auto pp = static_cast<std::int64_t>(p);
  std::vector<std::int64_t> s(period + m, 0);
  s[m - 1] = 1;
  for (std::uint64_t i = 0; i + m < s.size(); ++i) {
    std::int64_t next = 0;
    for (unsigned k = 0; k < m; ++k) next -= primitive_poly[k] * s[i + k];
    s[i + m] = ff::mod(next, pp);
  }
  s.resize(period);
  int_column c;
  c.entries = std::move(s);
  c.kind = alphabet::residue;
  c.symbol_modulus = p;
  return c;
}

/// GF(2) symbols 0 -> +1, 1 -> -1.
inline int_column bipolar(const int_column& s) {
  detail::require(s.kind == alphabet::residue && s.symbol_modulus == 2,
                  "bipolar: input must be a residue sequence over GF(2)");
  int_column c;
  c.kind = alphabet::binary;
  c.entries.reserve(s.period());
  for (std::int64_t x : s.entries) c.entries.push_back(x == 0 ? 1 : -1);
  return c;
}

/// s_j = Tr^m_1[(Tr^n_m(alpha^j))^r] over the field defined by the first
/// primitive polynomial of degree n. Binary (+-1) for p = 2, residues otherwise.
inline int_column gmw_sequence(std::uint64_t p, unsigned n, unsigned m, std::uint64_t r) {
  detail::require(ff::is_prime(p) && n >= 1 && m >= 1 && n % m == 0,
                  "gmw_sequence: need prime p and m | n");
  const std::uint64_t sub_order = ff::ipow(p, m) - 1;
  detail::require(sub_order > 0 && std::gcd(r, sub_order) == 1,
                  "gmw_sequence: gcd(r, p^m - 1) must be 1");
  const ff::ext_field field(p, n, ff::find_primitive_polynomial(p, n));
  const std::uint64_t period = field.order() - 1;
  int_column c;
  c.entries.resize(period);
  for (std::uint64_t j = 0; j < period; ++j) {
    const auto inner = field.relative_trace(field.alpha_power(static_cast<std::int64_t>(j)), n, m);
    const auto outer = field.relative_trace(field.pow(inner, static_cast<std::int64_t>(r)), m, 1);
    c.entries[j] = field.coefficients(outer)[0];
  }
  if (p == 2) {
    c.kind = alphabet::binary;
    for (auto& x : c.entries) x = x == 0 ? 1 : -1;
  } else {
    c.kind = alphabet::residue;
    c.symbol_modulus = p;
  }
  return c;
}

/// Maps symbol x in Z_p to omega^x, omega = exp(2 pi i / p).
inline complex_column roots_of_unity_map(const int_column& s, std::uint64_t p) {
  detail::require(p >= 2, "roots_of_unity_map: p must be at least 2");
  complex_column c;
  c.kind = alphabet::roots_of_unity;
  c.symbol_modulus = p;
  c.entries.reserve(s.period());
  for (std::int64_t x : s.entries) {
    detail::require(x >= 0 && static_cast<std::uint64_t>(x) < p,
                    "roots_of_unity_map: entry outside [0, p)");
    c.entries.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(x) /
                                            static_cast<double>(p)));
  }
  return c;
}

/// Periodic autocorrelation R(d) = sum_i c[i] conj(c[i - d]).
template <class Scalar>
std::vector<Scalar> periodic_autocorrelation(std::span<const Scalar> c) {
  const std::size_t v = c.size();
  std::vector<Scalar> r(v, Scalar{});
  for (std::size_t d = 0; d < v; ++d) {
    Scalar acc{};
    for (std::size_t i = 0; i < v; ++i) acc += c[i] * conj_of(c[(i + v - d) % v]);
    r[d] = acc;
  }
  return r;
}

template <class Scalar>
struct pseudonoise_report {
  std::vector<Scalar> autocorrelation;
  Scalar peak{};
  std::optional<Scalar> off_peak;  // the common off-peak value when two-valued
  bool two_valued = false;
};

/// Autocorrelation at every shift; two-valued iff all off-peak values agree.
template <class Scalar>
pseudonoise_report<Scalar> verify_pseudonoise(const column_sequence<Scalar>& c) {
  pseudonoise_report<Scalar> report;
  report.autocorrelation = periodic_autocorrelation<Scalar>(c.entries);
  report.peak = report.autocorrelation.front();
  if (report.autocorrelation.size() < 2) return report;
  const Scalar first = report.autocorrelation[1];
  report.two_valued =
      std::all_of(report.autocorrelation.begin() + 1, report.autocorrelation.end(),
                  [&](const Scalar& x) { return approx_equal(x, first); }) &&
      !approx_equal(first, report.peak);
  if (report.two_valued) report.off_peak = first;
  return report;
}

/// Berlekamp-Massey over GF(2). Accepts 0/1 symbols or +-1 (+1 -> 0, -1 -> 1).
inline std::size_t linear_complexity(std::span<const std::int64_t> sequence) {
  detail::require(!sequence.empty(), "linear_complexity: empty sequence");
  const bool bipolar_input = std::any_of(sequence.begin(), sequence.end(),
                                         [](std::int64_t x) { return x == -1; });
  std::vector<std::uint8_t> s(sequence.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::int64_t x = sequence[i];
    if (bipolar_input) {
      detail::require(x == 1 || x == -1, "linear_complexity: mixed +-1 and 0/1 symbols");
      s[i] = x == -1 ? 1 : 0;
    } else {
      detail::require(x == 0 || x == 1, "linear_complexity: symbols must be binary");
      s[i] = static_cast<std::uint8_t>(x);
    }
  }
  const std::size_t n = s.size();
  std::vector<std::uint8_t> c(n + 1, 0), b(n + 1, 0);
  c[0] = b[0] = 1;
  std::size_t length = 0;
  std::size_t m = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::uint8_t discrepancy = s[i];
    for (std::size_t k = 1; k <= length; ++k) discrepancy ^= c[k] & s[i - k];
    if (discrepancy == 0) {
      ++m;
      continue;
    }
    const auto previous = c;
    for (std::size_t k = 0; k + m <= n; ++k) c[k + m] ^= b[k];
    if (2 * length <= i) {
      length = i + 1 - length;
      b = previous;
      m = 1;
    } else {
      ++m;
    }
  }
  return length;
}

template <class Scalar>
std::size_t linear_complexity(const column_sequence<Scalar>& c) {
  static_assert(std::is_integral_v<Scalar>, "linear_complexity needs an integer column");
  return linear_complexity(std::span<const std::int64_t>(c.entries));
}

}  // namespace pnarray
