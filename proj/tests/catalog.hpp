#pragma once

// Reference instances shared by the unit tests and the acceptance runner.

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "pnarray/pnarray.hpp"

namespace catalog {

using namespace pnarray;
using cplx = std::complex<double>;
using table = std::vector<std::vector<std::int64_t>>;

// Reference 7x7 quadratic arrays over the ternary Legendre column.
inline const table& quad7_a() {
  static const table t = {{0, 1, -1, -1, -1, 1, 0},   {1, 1, 1, 0, 1, 1, 1},      {1, -1, -1, 1, -1, -1, 1},
                          {-1, 1, -1, 1, -1, 1, -1},  {1, -1, 0, -1, 0, -1, 1},    {-1, -1, 1, 1, 1, -1, -1},
                          {-1, 0, 1, -1, 1, 0, -1}};
  return t;
}

inline const table& quad7_b() {
  static const table t = {{0, 1, -1, -1, -1, 1, 0},   {1, -1, 0, -1, 0, -1, 1},   {1, 1, 1, 0, 1, 1, 1},
                          {-1, -1, 1, 1, 1, -1, -1},  {1, -1, -1, 1, -1, -1, 1},  {-1, 0, 1, -1, 1, 0, -1},
                          {-1, 1, -1, 1, -1, 1, -1}};
  return t;
}

// Coefficients (constant term first) recovered from the reference sequences.
inline const ff::polynomial quad7_coeffs_a{0, 3, 3};
inline const ff::polynomial quad7_coeffs_b{0, 6, 6};

inline shift_sequence quad7_shift_a() { return polynomial_shift(7, quad7_coeffs_a); }
inline shift_sequence quad7_shift_b() { return polynomial_shift(7, quad7_coeffs_b); }

inline pn_array<std::int64_t> quad7_array_a() {
  return build_array(quad7_shift_a(), legendre(7, legendre_variant::ternary));
}
inline pn_array<std::int64_t> quad7_array_b() {
  return build_array(quad7_shift_b(), legendre(7, legendre_variant::ternary));
}

inline pn_array<std::int64_t> from_table(const table& t) {
  pn_array<std::int64_t> a(t.size(), t.front().size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t[i].size(); ++j) a(i, j) = t[i][j];
  return a;
}

inline shift_sequence from_entries(const std::vector<std::int64_t>& xs, std::int64_t modulus) {
  std::vector<shift_sequence::entry> e;
  for (std::int64_t x : xs) e.push_back(x < 0 ? shift_sequence::entry{} : shift_sequence::entry{x});
  return {std::move(e), modulus};
}

// GF(2^4) with x^4 + x + 1; -1 marks the blank column.
inline ff::ext_field gf16() { return ff::ext_field(2, 4, {1, 1, 0, 0, 1}); }
inline shift_sequence zech16_a() {
  return from_entries({-1, 4, 8, 14, 1, 10, 13, 9, 2, 7, 5, 12, 11, 6, 3}, 15);
}
inline shift_sequence zech16_b() {
  return from_entries({-1, 8, 1, 13, 2, 5, 11, 3, 4, 14, 10, 9, 7, 12, 6}, 15);
}

// GF(11^2) m-array: trace shift sequence and its reference mod-5 conversion.
inline ff::ext_field gf121() { return ff::ext_field(11, 2, ff::find_primitive_polynomial(11, 2)); }
inline shift_sequence reference_perfect_shift() {
  return from_entries({3, 2, 2, 4, 0, 3, -1, 3, 0, 4, 2, 2}, 5);
}

/// s_i = Tr(alpha^i) over GF(11^2) -> GF(11), as residues.
inline int_column trace_m_sequence(const ff::ext_field& field) {
  int_column c;
  c.kind = alphabet::residue;
  c.symbol_modulus = field.characteristic();
  for (std::uint64_t i = 0; i + 1 < field.order(); ++i)
    c.entries.push_back(field.coefficients(field.trace(1, field.alpha_power(static_cast<std::int64_t>(i))))[0]);
  return c;
}

inline real_column perfect_column() { return {{0, 1, -1, -1, 1}, alphabet::ternary, 0}; }
inline double perfect_fill() { return std::sqrt(11.0 / 5.0); }
inline pn_array<double> perfect_array() {
  return build_array(reference_perfect_shift(), perfect_column(), perfect_fill());
}

template <class Scalar>
struct named {
  std::string name;
  Scalar value;
};

/// Every shift sequence the repository exercises by name.
inline std::vector<named<shift_sequence>> shipped_shifts() {
  const auto f16 = gf16();
  const auto f121 = gf121();
  return {{"quad7-a", quad7_shift_a()},
          {"quad7-b", quad7_shift_b()},
          {"zech16-a", zech16_a()},
          {"zech16-b", zech16_b()},
          {"lempel-gf16", zech_shift(f16, 1, 1)},
          {"exponential-p7-g3", exponential_shift(7, 3)},
          {"exponential-p11-g2", exponential_shift(11, 2)},
          {"legendre-index-p7-r1", legendre_index_shift(7, 3, 1)},
          {"reciprocal-p7", reciprocal_shift(7, 1)},
          {"marray-gf121", marray_shift(f121, 1)},
          {"perfect-mod5", reference_perfect_shift()},
          {"cubic-p7", polynomial_shift(7, {0, 1, 0, 1})}};
}

/// Two-valued column for a shift sequence of the given modulus.
inline complex_column roots_column(std::uint64_t p) {
  return roots_of_unity_map(m_sequence(p, 1, ff::find_primitive_polynomial(p, 1)), p);
}

/// Shipped real arrays; the Legendre-index array has a complex column and is separate.
inline std::vector<named<pn_array<double>>> shipped_arrays() {
  const auto f16 = gf16();
  const auto f121 = gf121();
  const auto mseq121 = trace_m_sequence(f121);
  const auto bip15 = bipolar(m_sequence(2, 4, {1, 1, 0, 0, 1}));
  return {
      {"quad7-a", quad7_array_a().cast<double>()},
      {"quad7-b", quad7_array_b().cast<double>()},
      {"quadratic-p11", build_array(polynomial_shift(11, {0, 0, 1}), legendre(11, legendre_variant::binary))
                            .cast<double>()},
      {"exponential-p7", build_array(exponential_shift(7, 3), legendre(7, legendre_variant::binary)).cast<double>()},
      {"exponential-p11",
       build_array(exponential_shift(11, 2), legendre(11, legendre_variant::binary)).cast<double>()},
      {"lempel-gf16", build_array(zech_shift(f16, 1, 1), bip15).cast<double>()},
      {"marray-gf121", fold_sequence<std::int64_t>(mseq121.entries, 10, 12).cast<double>()},
      {"perfect-5x12", perfect_array()},
  };
}

inline std::vector<named<pn_array<cplx>>> shipped_complex_arrays() {
  return {{"legendre-index-p7", build_array(legendre_index_shift(7, 3, 1), roots_column(7))},
          {"legendre-index-p11", build_array(legendre_index_shift(11, 2, 1), roots_column(11))}};
}

}  // namespace catalog
