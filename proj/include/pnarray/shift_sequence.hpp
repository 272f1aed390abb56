#pragma once

// Shift sequences: per-column cyclic shifts (or blanks for constant columns),
// the constructions that produce them, and their difference properties.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "pnarray/error.hpp"
#include "pnarray/finite_field.hpp"

namespace pnarray {

/// phi(j) for j = 0..T-1 over Z_v; an absent entry marks a constant column.
class shift_sequence {
 public:
  using entry = std::optional<std::int64_t>;

  shift_sequence() = default;
  shift_sequence(std::vector<entry> entries, std::int64_t modulus)
      : entries_(std::move(entries)), modulus_(modulus) {
    detail::require(modulus_ >= 1, "shift_sequence: modulus must be positive");
    detail::require(entries_.size() >= 2, "shift_sequence: need at least two columns");
    for (const entry& e : entries_) {
      detail::require(!e || (*e >= 0 && *e < modulus_),
                      "shift_sequence: entry outside [0, " + std::to_string(modulus_) + ")");
    }
  }

  std::size_t length() const { return entries_.size(); }
  std::int64_t modulus() const { return modulus_; }
  const std::vector<entry>& entries() const { return entries_; }
  const entry& operator[](std::size_t j) const { return entries_[j]; }
  const entry& at_cyclic(std::int64_t j) const {
    return entries_[static_cast<std::size_t>(ff::mod(j, static_cast<std::int64_t>(length())))];
  }
  std::size_t blank_count() const {
    return static_cast<std::size_t>(
        std::count_if(entries_.begin(), entries_.end(), [](const entry& e) { return !e; }));
  }

  /// phi'(j) = phi(j - k) + l, the shift sequence of the (k, l) cyclic shift of its array.
  shift_sequence translated(std::int64_t k, std::int64_t l) const {
    std::vector<entry> out(length());
    for (std::size_t j = 0; j < length(); ++j) {
      const entry& e = at_cyclic(static_cast<std::int64_t>(j) - k);
      if (e) out[j] = ff::mod(*e + l, modulus_);
    }
    return {std::move(out), modulus_};
  }

  friend bool operator==(const shift_sequence&, const shift_sequence&) = default;

 private:
  std::vector<entry> entries_;
  std::int64_t modulus_ = 1;
};

/// phi(x) = sum a_i x^i mod p for x = 0..p-1; coefficients constant term first.
inline shift_sequence polynomial_shift(std::uint64_t p, const ff::polynomial& coeffs) {
  const ff::prime_field field(p);
  ff::polynomial reduced(coeffs.size());
  std::transform(coeffs.begin(), coeffs.end(), reduced.begin(),
                 [&](std::int64_t a) { return static_cast<std::int64_t>(field.reduce(a)); });
  while (!reduced.empty() && reduced.back() == 0) reduced.pop_back();
  detail::require(reduced.size() >= 3, "polynomial_shift: polynomial degree must exceed 1");
  std::vector<shift_sequence::entry> out(p);
  for (std::uint64_t x = 0; x < p; ++x) out[x] = static_cast<std::int64_t>(field.evaluate(reduced, x));
  return {std::move(out), static_cast<std::int64_t>(p)};
}

/// phi(j) = g^j mod p, j = 0..p-2.
inline shift_sequence exponential_shift(std::uint64_t p, std::uint64_t g) {
  detail::require(ff::is_primitive_root(g, p), "exponential_shift: " + std::to_string(g) +
                                                   " is not a primitive root mod " +
                                                   std::to_string(p));
  std::vector<shift_sequence::entry> out(p - 1);
  std::uint64_t power = 1;
  for (auto& e : out) {
    e = static_cast<std::int64_t>(power);
    power = ff::mul_mod(power, g, p);
  }
  return {std::move(out), static_cast<std::int64_t>(p)};
}

/// phi(j) = r * ind_g(j) mod (p - 1) for j = 1..p-1; blank at j = 0.
inline shift_sequence legendre_index_shift(std::uint64_t p, std::uint64_t g, std::uint64_t r) {
  detail::require(r >= 1 && r < p, "legendre_index_shift: r must lie in 1..p-1");
  const auto ind = ff::index_table(p, g);
  const auto v = static_cast<std::int64_t>(p - 1);
  std::vector<shift_sequence::entry> out(p);
  for (std::uint64_t j = 1; j < p; ++j) out[j] = ff::mod(static_cast<std::int64_t>(r * *ind[j]), v);
  return {std::move(out), v};
}

/// phi(j) = log_beta(1 - alpha^{s j}) with beta = alpha^t; blank where
/// alpha^{s j} = 1. (t, s) = (1, 1) is the Lempel construction.
inline shift_sequence zech_shift(const ff::ext_field& field, std::int64_t t, std::int64_t s) {
  const auto n = static_cast<std::int64_t>(field.order() - 1);
  detail::require(std::gcd(ff::mod(t, n), n) == 1 && std::gcd(ff::mod(s, n), n) == 1,
                  "zech_shift: base exponent and decimation must be coprime to p^m - 1");
  const auto t_inverse = static_cast<std::int64_t>(ff::inverse_mod(t, static_cast<std::uint64_t>(n)));
  std::vector<shift_sequence::entry> out(static_cast<std::size_t>(n));
  for (std::int64_t j = 0; j < n; ++j) {
    const auto y = field.sub(field.one(), field.alpha_power(s * j));
    if (const auto index = field.log(y)) out[j] = ff::mod(static_cast<std::int64_t>(*index) * t_inverse, n);
  }
  return {std::move(out), n};
}

/// f_j = ind_gamma(Tr^n_m(alpha^j)), gamma = alpha^T, for the T = (p^n-1)/(p^m-1)
/// columns of the folded m-sequence; blank where the trace vanishes.
inline shift_sequence marray_shift(const ff::ext_field& field, unsigned m_sub) {
  const unsigned n = field.degree();
  detail::require(m_sub >= 1 && n % m_sub == 0,
                  "marray_shift: " + std::to_string(m_sub) + " does not divide " + std::to_string(n));
  const std::uint64_t v = ff::ipow(field.characteristic(), m_sub) - 1;
  const std::uint64_t columns = (field.order() - 1) / v;
  detail::require(v >= 1 && columns >= 2, "marray_shift: degenerate fold");
  std::vector<shift_sequence::entry> out(columns);
  for (std::uint64_t j = 0; j < columns; ++j) {
    const auto tr = field.trace(m_sub, field.alpha_power(static_cast<std::int64_t>(j)));
    // log_alpha(tr) is a multiple of T because tr lies in the subfield; divide to get ind_gamma.
    if (const auto index = field.log(tr)) out[j] = static_cast<std::int64_t>(*index / columns);
  }
  return {std::move(out), static_cast<std::int64_t>(v)};
}

/// phi(j) = a * j^{-1} mod p for j >= 1; blank at j = 0.
inline shift_sequence reciprocal_shift(std::uint64_t p, std::uint64_t a) {
  const ff::prime_field field(p);
  detail::require(a % p != 0, "reciprocal_shift: a must be nonzero mod p");
  std::vector<shift_sequence::entry> out(p);
  for (std::uint64_t j = 1; j < p; ++j) out[j] = static_cast<std::int64_t>(field.mul(a % p, field.inv(j)));
  return {std::move(out), static_cast<std::int64_t>(p)};
}

/// Differences (phi(j + k) - phi(j)) mod v over j where both entries are present.
inline std::vector<std::int64_t> difference_spectrum(const shift_sequence& phi, std::size_t k) {
  const std::size_t T = phi.length();
  detail::require(k >= 1 && k < T, "difference_spectrum: separation must lie in 1..T-1");
  std::vector<std::int64_t> out;
  out.reserve(T);
  for (std::size_t j = 0; j < T; ++j) {
    const auto& a = phi[j];
    const auto& b = phi[(j + k) % T];
    if (a && b) out.push_back(ff::mod(*b - *a, phi.modulus()));
  }
  return out;
}

/// Occurrence count of each residue in the difference spectrum.
inline std::vector<std::size_t> difference_counts(const shift_sequence& phi, std::size_t k) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(phi.modulus()), 0);
  for (std::int64_t d : difference_spectrum(phi, k)) ++counts[static_cast<std::size_t>(d)];
  return counts;
}

/// Distinct difference property: no difference repeats at any separation.
inline bool check_ddp(const shift_sequence& phi) {
  for (std::size_t k = 1; k < phi.length(); ++k) {
    const auto counts = difference_counts(phi, k);
    if (std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c > 1; })) return false;
  }
  return true;
}

/// Every residue occurs equally often at every separation.
inline bool check_constant_difference(const shift_sequence& phi) {
  for (std::size_t k = 1; k < phi.length(); ++k) {
    const auto counts = difference_counts(phi, k);
    if (counts.front() == 0 ||
        std::any_of(counts.begin(), counts.end(), [&](std::size_t c) { return c != counts.front(); }))
      return false;
  }
  return true;
}

struct conversion_result {
  shift_sequence sequence;
  std::int64_t slope = 0;
  std::int64_t offset = 0;
};

/// First (c, d) in Z_w^2 (row-major) such that (f_j + c j + d) mod w has the
/// constant difference property, w = v_target.
inline conversion_result perfect_conversion(const shift_sequence& f, std::int64_t v_target) {
  detail::require(v_target >= 1 && f.modulus() % v_target == 0,
                  "perfect_conversion: target modulus must divide " + std::to_string(f.modulus()));
  for (std::int64_t c = 0; c < v_target; ++c) {
    for (std::int64_t d = 0; d < v_target; ++d) {
      std::vector<shift_sequence::entry> out(f.length());
      for (std::size_t j = 0; j < f.length(); ++j) {
        if (f[j]) out[j] = ff::mod(*f[j] + c * static_cast<std::int64_t>(j) + d, v_target);
      }
      shift_sequence candidate(std::move(out), v_target);
      if (check_constant_difference(candidate)) return {std::move(candidate), c, d};
    }
  }
  throw not_found_error("perfect_conversion: no linear term balances the differences mod " +
                        std::to_string(v_target));
}

/// Lexicographically smallest member of the orbit under phi -> phi(j - k) + l
/// (blank sorts first).
inline shift_sequence canonical_form(const shift_sequence& phi) {
  std::optional<shift_sequence> best;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(phi.length()); ++k) {
    for (std::int64_t l = 0; l < phi.modulus(); ++l) {
      auto candidate = phi.translated(k, l);
      if (!best || candidate.entries() < best->entries()) best = std::move(candidate);
    }
  }
  return *best;
}

/// True when the two sequences describe arrays that are 2D cyclic shifts of each other.
inline bool cyclically_equivalent(const shift_sequence& a, const shift_sequence& b) {
  if (a.length() != b.length() || a.modulus() != b.modulus()) return false;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(a.length()); ++k) {
    for (std::int64_t l = 0; l < a.modulus(); ++l) {
      if (a.translated(k, l) == b) return true;
    }
  }
  return false;
}

}  // namespace pnarray
