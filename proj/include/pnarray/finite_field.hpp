#pragma once

// Exact arithmetic over Z_p and GF(p^m): primitive roots, index (discrete log)
// tables, Zech logarithms and relative traces. Extension fields are table
// driven and sized for desk-scale work (p^m <= 2^20).

#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "pnarray/error.hpp"

namespace pnarray::ff {

using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Polynomial over Z_p, constant term first.
using polynomial = std::vector<i64>;

inline constexpr u64 max_field_order = u64{1} << 20;

inline i64 mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

inline u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

inline u64 pow_mod(u64 base, u64 exponent, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1U;
  }
  return result;
}

inline u64 ipow(u64 base, unsigned exponent) {
  u64 result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// Deterministic trial division; inputs are small.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (u64 d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

/// Distinct prime factors in ascending order.
inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> factors;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    factors.push_back(d);
    while (n % d == 0) n /= d;
  }
  if (n > 1) factors.push_back(n);
  return factors;
}

inline u64 euler_totient(u64 n) {
  detail::require(n >= 1, "euler_totient: n must be positive");
  u64 result = n;
  for (u64 f : prime_factors(n)) result = result / f * (f - 1);
  return result;
}

/// Inverse of a modulo n; throws when gcd(a, n) != 1.
inline u64 inverse_mod(i64 a, u64 n) {
  detail::require(n >= 1, "inverse_mod: modulus must be positive");
  i64 r0 = static_cast<i64>(n), r1 = mod(a, static_cast<i64>(n));
  i64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    const i64 q = r0 / r1;
    r0 = std::exchange(r1, r0 - q * r1);
    t0 = std::exchange(t1, t0 - q * t1);
  }
  detail::require(r0 == 1, "inverse_mod: " + std::to_string(a) + " is not invertible mod " +
                               std::to_string(n));
  return static_cast<u64>(mod(t0, static_cast<i64>(n)));
}

/// Multiplicative order of a modulo n (gcd(a, n) must be 1).
inline u64 multiplicative_order(u64 a, u64 n) {
  detail::require(n >= 1 && std::gcd(a % n, n) == 1, "multiplicative_order: a not a unit");
  if (n == 1) return 1;
  u64 order = euler_totient(n);
  for (u64 f : prime_factors(order)) {
    while (order % f == 0 && pow_mod(a, order / f, n) == 1) order /= f;
  }
  return order;
}

inline bool is_primitive_root(u64 g, u64 p) {
  if (!is_prime(p) || g == 0 || g >= p) return false;
  return multiplicative_order(g, p) == p - 1;
}

/// Smallest generator of Z_p^*.
inline u64 primitive_root(u64 p) {
  detail::require(is_prime(p), "primitive_root: " + std::to_string(p) + " is not prime");
  for (u64 g = 1; g < p; ++g) {
    if (multiplicative_order(g, p) == p - 1) return g;
  }
  throw std::logic_error("primitive_root: search exhausted");
}

/// ind_g(j) for j = 0..p-1; entry 0 is absent because ind(0) is undefined.
inline std::vector<std::optional<u64>> index_table(u64 p, u64 g) {
  detail::require(is_primitive_root(g, p),
                  "index_table: " + std::to_string(g) + " is not a primitive root mod " +
                      std::to_string(p));
  std::vector<std::optional<u64>> table(p);
  u64 power = 1;
  for (u64 k = 0; k + 1 < p; ++k) {
    table[power] = k;
    power = mul_mod(power, g, p);
  }
  return table;
}

/// The prime field Z_p.
class prime_field {
 public:
  explicit prime_field(u64 p) : p_(p) {
    detail::require(is_prime(p), "prime_field: " + std::to_string(p) + " is not prime");
  }

  u64 modulus() const { return p_; }
  u64 reduce(i64 a) const { return static_cast<u64>(mod(a, static_cast<i64>(p_))); }
  u64 add(u64 a, u64 b) const { return (a + b) % p_; }
  u64 sub(u64 a, u64 b) const { return (a + p_ - b) % p_; }
  u64 mul(u64 a, u64 b) const { return mul_mod(a, b, p_); }
  u64 inv(u64 a) const { return inverse_mod(static_cast<i64>(a), p_); }
  u64 pow(u64 a, u64 e) const { return pow_mod(a, e, p_); }

  /// Horner evaluation of a polynomial with integer coefficients.
  u64 evaluate(const polynomial& coeffs, u64 x) const {
    u64 acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add(mul(acc, x), reduce(*it));
    return acc;
  }

 private:
  u64 p_;
};

// ---------------------------------------------------------------------------
// Polynomials over Z_p

inline std::string format_polynomial(const polynomial& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) out << (i ? "," : "") << f[i];
  return out.str();
}

inline polynomial parse_polynomial(std::string_view text) {
  polynomial f;
  std::string token;
  std::istringstream in{std::string(text)};
  while (std::getline(in, token, ',')) {
    detail::require(!token.empty(), "parse_polynomial: empty coefficient in '" +
                                        std::string(text) + "'");
    std::size_t used = 0;
    i64 value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    detail::require(used == token.size(), "parse_polynomial: bad coefficient '" + token + "'");
    f.push_back(value);
  }
  detail::require(!f.empty(), "parse_polynomial: no coefficients");
  return f;
}

namespace detail {

using pnarray::detail::require;

inline void trim(polynomial& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

/// Remainder of a modulo a monic b.
inline polynomial poly_rem(polynomial a, const polynomial& b, i64 p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() > db) {
    const i64 lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) a[shift + i] = mod(a[shift + i] - lead * b[i], p);
    trim(a);
  }
  return a;
}

/// (a * b) mod f, with a and b already reduced, all as length-m coefficient arrays.
inline polynomial poly_mulmod(const polynomial& a, const polynomial& b, const polynomial& f,
                              i64 p) {
  polynomial product(a.size() + b.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) product[i + j] = mod(product[i + j] + a[i] * b[j], p);
  }
  return poly_rem(std::move(product), f, p);
}

inline polynomial poly_powmod(polynomial base, u64 exponent, const polynomial& f, i64 p) {
  polynomial result{1};
  base = poly_rem(std::move(base), f, p);
  while (exponent > 0) {
    if (exponent & 1U) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
    exponent >>= 1U;
  }
  return result;
}

inline bool is_one(polynomial f) {
  trim(f);
  return f.size() == 1 && f[0] == 1;
}

inline void validate_monic(u64 p, const polynomial& f, const std::string& who) {
  require(is_prime(p), who + ": " + std::to_string(p) + " is not prime");
  require(f.size() >= 2, who + ": polynomial must have degree >= 1");
  require(f.back() == 1, who + ": polynomial must be monic");
  for (i64 c : f) {
    require(c >= 0 && static_cast<u64>(c) < p, who + ": coefficient " + std::to_string(c) +
                                                    " outside [0, p)");
  }
}

}  // namespace detail

/// Trial factorisation against every monic polynomial of degree <= m/2.
inline bool is_irreducible(u64 p, const polynomial& f) {
  detail::validate_monic(p, f, "is_irreducible");
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  const i64 pp = static_cast<i64>(p);
  for (unsigned d = 1; d <= m / 2; ++d) {
    const u64 count = ipow(p, d);
    for (u64 code = 0; code < count; ++code) {
      polynomial g(d + 1, 0);
      u64 c = code;
      for (unsigned i = 0; i < d; ++i, c /= p) g[i] = static_cast<i64>(c % p);
      g[d] = 1;
      if (detail::poly_rem(f, g, pp).empty()) return false;
    }
  }
  return true;
}

/// True when f is irreducible and x has order p^m - 1 modulo f.
inline bool is_primitive_polynomial(u64 p, const polynomial& f) {
  if (!is_irreducible(p, f) || f.front() == 0) return false;
  const unsigned m = static_cast<unsigned>(f.size() - 1);
  const u64 q = ipow(p, m);
  const polynomial x = m == 1 ? polynomial{mod(-f[0], static_cast<i64>(p))} : polynomial{0, 1};
  for (u64 r : prime_factors(q - 1)) {
    if (detail::is_one(detail::poly_powmod(x, (q - 1) / r, f, static_cast<i64>(p)))) return false;
  }
  return true;
}

/// First primitive monic polynomial of degree m in ascending order of
/// (a_{m-1}, ..., a_0) read as a base-p number.
inline polynomial find_primitive_polynomial(u64 p, unsigned m) {
  detail::require(is_prime(p) && m >= 1, "find_primitive_polynomial: need prime p and m >= 1");
  detail::require(ipow(p, m) <= max_field_order, "find_primitive_polynomial: field too large");
  const u64 count = ipow(p, m);
  for (u64 code = 0; code < count; ++code) {
    polynomial f(m + 1, 0);
    u64 c = code;
    for (unsigned i = 0; i < m; ++i, c /= p) f[i] = static_cast<i64>(c % p);
    f[m] = 1;
    if (is_primitive_polynomial(p, f)) return f;
  }
  throw std::logic_error("find_primitive_polynomial: search exhausted");
}

/// Element of an ext_field, identified by its base-p coefficient code
/// (constant term is the least significant digit).
struct field_element {
  std::uint32_t code = 0;
  friend auto operator<=>(const field_element&, const field_element&) = default;
};

/// GF(p^m) = Z_p[x]/(modulus) with exhaustive power, index and Zech tables.
class ext_field {
 public:
  ext_field(u64 p, unsigned m, polynomial modulus) : p_(p), m_(m), modulus_(std::move(modulus)) {
    detail::validate_monic(p, modulus_, "ext_field");
    detail::require(modulus_.size() == m + 1, "ext_field: modulus degree must equal m");
    q_ = ipow(p, m);
    detail::require(q_ <= max_field_order, "ext_field: p^m exceeds desk-scale bound 2^20");
    detail::require(is_irreducible(p, modulus_),
                    "ext_field: modulus " + format_polynomial(modulus_) + " is reducible over Z_" +
                        std::to_string(p));
    weights_.resize(m_);
    for (unsigned i = 0; i < m_; ++i) weights_[i] = ipow(p_, i);
    find_primitive_element();
    build_tables();
  }

  u64 characteristic() const { return p_; }
  unsigned degree() const { return m_; }
  u64 order() const { return q_; }
  const polynomial& modulus() const { return modulus_; }

  field_element zero() const { return {0}; }
  field_element one() const { return {1}; }
  field_element primitive_element() const { return exp_[q_ > 2 ? 1 : 0]; }

  field_element element(std::span<const i64> coeffs) const {
    detail::require(coeffs.size() <= m_, "ext_field::element: too many coefficients");
    u64 code = 0;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
      code += static_cast<u64>(mod(coeffs[i], static_cast<i64>(p_))) * weights_[i];
    return {static_cast<std::uint32_t>(code)};
  }
  field_element constant(i64 c) const {
    return {static_cast<std::uint32_t>(mod(c, static_cast<i64>(p_)))};
  }

  std::vector<i64> coefficients(field_element x) const {
    std::vector<i64> out(m_);
    u64 c = x.code;
    for (unsigned i = 0; i < m_; ++i, c /= p_) out[i] = static_cast<i64>(c % p_);
    return out;
  }

  field_element add(field_element a, field_element b) const {
    if (p_ == 2) return {a.code ^ b.code};
    return combine(a, b, 1);
  }
  field_element sub(field_element a, field_element b) const {
    if (p_ == 2) return {a.code ^ b.code};
    return combine(a, b, -1);
  }
  field_element neg(field_element a) const { return sub(zero(), a); }

  field_element mul(field_element a, field_element b) const {
    if (a.code == 0 || b.code == 0) return zero();
    return exp_[(log_[a.code] + log_[b.code]) % (q_ - 1)];
  }
  field_element inv(field_element a) const {
    detail::require(a.code != 0, "ext_field::inv: zero has no inverse");
    return exp_[(q_ - 1 - log_[a.code]) % (q_ - 1)];
  }
  field_element div(field_element a, field_element b) const { return mul(a, inv(b)); }

  field_element pow(field_element a, i64 exponent) const {
    if (a.code == 0) {
      detail::require(exponent >= 0, "ext_field::pow: negative power of zero");
      return exponent == 0 ? one() : zero();
    }
    const i64 n = static_cast<i64>(q_ - 1);
    const u64 e = static_cast<u64>(mod(mod(exponent, n) * static_cast<i64>(log_[a.code]) % n, n));
    return exp_[e];
  }

  /// alpha^k for any integer k.
  field_element alpha_power(i64 k) const {
    return exp_[static_cast<u64>(mod(k, static_cast<i64>(q_ - 1)))];
  }

  /// Index of x to base alpha; absent for zero.
  std::optional<u64> log(field_element x) const {
    if (x.code == 0) return std::nullopt;
    return log_[x.code];
  }

  /// z(j) with 1 + alpha^j = alpha^{z(j)}; absent where 1 + alpha^j = 0.
  std::optional<u64> zech(i64 j) const {
    return zech_[static_cast<u64>(mod(j, static_cast<i64>(q_ - 1)))];
  }
  const std::vector<std::optional<u64>>& zech_table() const { return zech_; }

  /// x^{p^times}.
  field_element frobenius(field_element x, unsigned times) const {
    if (x.code == 0) return x;
    const u64 n = q_ - 1;
    return exp_[mul_mod(log_[x.code], pow_mod(p_, times, n), n)];
  }

  /// Tr from GF(p^from) to GF(p^to) of an element of GF(p^from) embedded in this field.
  field_element relative_trace(field_element x, unsigned from, unsigned to) const {
    detail::require(to >= 1 && from % to == 0 && m_ % from == 0,
                    "relative_trace: need to | from | " + std::to_string(m_));
    field_element sum = zero();
    for (unsigned i = 0; i < from / to; ++i) sum = add(sum, frobenius(x, to * i));
    return sum;
  }

  /// Trace onto the subfield of order p^m_sub.
  field_element trace(unsigned m_sub, field_element x) const {
    detail::require(m_sub >= 1 && m_ % m_sub == 0, "trace: " + std::to_string(m_sub) +
                                                       " does not divide " + std::to_string(m_));
    return relative_trace(x, m_, m_sub);
  }

  bool in_subfield(field_element x, unsigned m_sub) const {
    return m_ % m_sub == 0 && frobenius(x, m_sub) == x;
  }

 private:
  field_element combine(field_element a, field_element b, i64 sign) const {
    u64 ca = a.code, cb = b.code, code = 0;
    for (unsigned i = 0; i < m_; ++i, ca /= p_, cb /= p_) {
      const i64 digit = mod(static_cast<i64>(ca % p_) + sign * static_cast<i64>(cb % p_),
                            static_cast<i64>(p_));
      code += static_cast<u64>(digit) * weights_[i];
    }
    return {static_cast<std::uint32_t>(code)};
  }

  polynomial as_polynomial(u64 code) const {
    polynomial f(m_);
    for (unsigned i = 0; i < m_; ++i, code /= p_) f[i] = static_cast<i64>(code % p_);
    return f;
  }

  u64 as_code(polynomial f) const {
    f.resize(m_, 0);
    u64 code = 0;
    for (unsigned i = 0; i < m_; ++i) code += static_cast<u64>(f[i]) * weights_[i];
    return code;
  }

  void find_primitive_element() {
    const auto factors = prime_factors(q_ - 1);
    const i64 pp = static_cast<i64>(p_);
    for (u64 code = 1; code < q_; ++code) {
      const polynomial candidate = as_polynomial(code);
      bool primitive = true;
      for (u64 r : factors) {
        if (detail::is_one(detail::poly_powmod(candidate, (q_ - 1) / r, modulus_, pp))) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        alpha_code_ = code;
        return;
      }
    }
    throw std::logic_error("ext_field: primitive element search exhausted");
  }

  void build_tables() {
    const i64 pp = static_cast<i64>(p_);
    exp_.resize(q_ - 1);
    log_.assign(q_, 0);
    const polynomial alpha = as_polynomial(alpha_code_);
    polynomial power{1};
    for (u64 k = 0; k + 1 < q_; ++k) {
      const u64 code = as_code(power);
      exp_[k] = {static_cast<std::uint32_t>(code)};
      log_[code] = k;
      power = detail::poly_mulmod(power, alpha, modulus_, pp);
    }
    zech_.resize(q_ - 1);
    for (u64 j = 0; j + 1 < q_; ++j) {
      const field_element s = add(one(), exp_[j]);
      if (s.code != 0) zech_[j] = log_[s.code];
    }
  }

  u64 p_;
  unsigned m_;
  polynomial modulus_;
  u64 q_ = 0;
  u64 alpha_code_ = 0;
  std::vector<u64> weights_;
  std::vector<field_element> exp_;
  std::vector<u64> log_;
  std::vector<std::optional<u64>> zech_;
};

}  // namespace pnarray::ff
