#pragma once

// Shift-sequence families and the matching-column bounds they are known for.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "pnarray/correlation.hpp"
#include "pnarray/error.hpp"
#include "pnarray/finite_field.hpp"
#include "pnarray/shift_sequence.hpp"

namespace pnarray {

enum class family_kind { quadratic, polynomial, exponential, legendre, zech };

inline std::string to_string(family_kind k) {
  switch (k) {
    case family_kind::quadratic: return "quadratic";
    case family_kind::polynomial: return "polynomial";
    case family_kind::exponential: return "exponential";
    case family_kind::legendre: return "legendre";
    case family_kind::zech: return "zech";
  }
  return "quadratic";
}

inline family_kind family_kind_from_string(const std::string& name) {
  for (auto k : {family_kind::quadratic, family_kind::polynomial, family_kind::exponential,
                 family_kind::legendre, family_kind::zech}) {
    if (to_string(k) == name) return k;
  }
  throw std::invalid_argument("unsupported family kind '" + name + "'");
}

struct family_member {
  shift_sequence generator;       // as constructed
  shift_sequence representative;  // lexicographically smallest cyclic equivalent
  std::string label;
  std::vector<std::int64_t> parameters;
};

struct shift_family {
  family_kind kind = family_kind::quadratic;
  std::vector<family_member> members;
  std::uint64_t declared_size = 0;
  std::size_t distinct_classes = 0;
};

struct family_params {
  std::uint64_t p = 7;
  unsigned extension_degree = 4;  // zech: m in GF(p^m)
  unsigned degree = 2;            // polynomial: n
};

namespace detail {

inline std::string join(const std::vector<std::int64_t>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
  return out;
}

inline void finish(shift_family& f) {
  std::set<std::vector<shift_sequence::entry>> classes;
  for (const auto& m : f.members) classes.insert(m.representative.entries());
  f.distinct_classes = classes.size();
}

inline family_member make_member(shift_sequence generator, std::string label,
                                 std::vector<std::int64_t> parameters) {
  auto rep = canonical_form(generator);
  return {std::move(generator), std::move(rep), std::move(label), std::move(parameters)};
}

}  // namespace detail

/// The zech family's field: GF(p^m) with its first primitive polynomial.
inline ff::ext_field family_field(std::uint64_t p, unsigned m) {
  return ff::ext_field(p, m, ff::find_primitive_polynomial(p, m));
}

/// Emits each family with its declared size:
///   quadratic    a x^2, a in 1..p-1                       (p - 1)
///   polynomial   (a_n, a_{n-2}, ..., a_1) != 0, a_{n-1} = a_0 = 0   (p^{n-1} - 1)
///   exponential  g^j for each primitive root g             (phi(p - 1))
///   legendre     r ind_g(j), r in 1..p-2                   (p - 2)
///   zech         r z(j) with z the Lempel sequence, r in 1..q-2   (q - 2)
inline shift_family family_enumerate(family_kind kind, const family_params& params,
                                     const ff::ext_field* field = nullptr) {
  const std::uint64_t p = params.p;
  shift_family f;
  f.kind = kind;
  switch (kind) {
    case family_kind::quadratic: {
      detail::require(ff::is_prime(p) && p > 2, "family_enumerate: quadratic needs an odd prime");
      for (std::uint64_t a = 1; a < p; ++a) {
        f.members.push_back(detail::make_member(
            polynomial_shift(p, {0, 0, static_cast<std::int64_t>(a)}),
            std::to_string(a) + "x^2", {static_cast<std::int64_t>(a)}));
      }
      f.declared_size = p - 1;
      break;
    }
    case family_kind::polynomial: {
      const unsigned n = params.degree;
      detail::require(ff::is_prime(p) && n >= 2 && n < p, "family_enumerate: need prime p > n >= 2");
      const std::uint64_t count = ff::ipow(p, n - 1);
      for (std::uint64_t code = 1; code < count; ++code) {
        // free coefficients a_1..a_{n-2} and a_n, in that digit order
        ff::polynomial coeffs(n + 1, 0);
        std::uint64_t c = code;
        for (unsigned i = 1; i + 1 < n; ++i, c /= p) coeffs[i] = static_cast<std::int64_t>(c % p);
        coeffs[n] = static_cast<std::int64_t>(c % p);
        std::vector<shift_sequence::entry> values(p);
        const ff::prime_field field_p(p);
        for (std::uint64_t x = 0; x < p; ++x) values[x] = static_cast<std::int64_t>(field_p.evaluate(coeffs, x));
        f.members.push_back(detail::make_member(shift_sequence(std::move(values), static_cast<std::int64_t>(p)),
                                                "coeffs " + detail::join(coeffs), coeffs));
      }
      f.declared_size = count - 1;
      break;
    }
    case family_kind::exponential: {
      detail::require(ff::is_prime(p) && p > 2, "family_enumerate: exponential needs an odd prime");
      for (std::uint64_t g = 2; g < p; ++g) {
        if (!ff::is_primitive_root(g, p)) continue;
        f.members.push_back(detail::make_member(exponential_shift(p, g), "g=" + std::to_string(g),
                                                {static_cast<std::int64_t>(g)}));
      }
      f.declared_size = ff::euler_totient(p - 1);
      break;
    }
    case family_kind::legendre: {
      detail::require(ff::is_prime(p) && p > 3, "family_enumerate: legendre needs a prime p > 3");
      const std::uint64_t g = ff::primitive_root(p);
      for (std::uint64_t r = 1; r + 1 < p; ++r) {
        f.members.push_back(detail::make_member(legendre_index_shift(p, g, r),
                                                "r=" + std::to_string(r),
                                                {static_cast<std::int64_t>(r)}));
      }
      f.declared_size = p - 2;
      break;
    }
    case family_kind::zech: {
      const ff::ext_field own = field ? *field : family_field(p, params.extension_degree);
      const auto lempel = zech_shift(own, 1, 1);
      const auto n = static_cast<std::int64_t>(own.order() - 1);
      for (std::int64_t r = 1; r < n; ++r) {
        std::vector<shift_sequence::entry> values(lempel.length());
        for (std::size_t j = 0; j < values.size(); ++j)
          if (lempel[j]) values[j] = ff::mod(*lempel[j] * r, n);
        f.members.push_back(detail::make_member(shift_sequence(std::move(values), n),
                                                "r=" + std::to_string(r), {r}));
      }
      f.declared_size = own.order() - 2;
      break;
    }
  }
  detail::finish(f);
  return f;
}

// ---------------------------------------------------------------------------
// Table reproduction

struct table_row {
  std::string construction;
  std::string parameters;
  std::uint64_t declared_size = 0;
  std::size_t enumerated_classes = 0;
  std::int64_t auto_peak = 0;      // matches at the origin
  std::int64_t expected_peak = 0;
  std::int64_t auto_max = 0;       // largest off-origin autocorrelation match count
  std::int64_t auto_bound = 0;
  std::int64_t cross_max = 0;      // largest match count over the checked pairs
  std::int64_t cross_bound = 0;
  std::string notes;

  bool count_ok() const { return enumerated_classes == declared_size; }
  bool auto_ok() const { return auto_peak == expected_peak && auto_max <= auto_bound; }
  bool cross_ok() const { return cross_max <= cross_bound; }
  bool ok() const { return count_ok() && auto_ok() && cross_ok(); }
};

struct tables_report {
  std::vector<table_row> rows;
  bool ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const table_row& r) { return r.ok(); });
  }
};

namespace detail {

inline table_row make_row(std::string construction, std::string parameters, const shift_family& fam) {
  table_row row;
  row.construction = std::move(construction);
  row.parameters = std::move(parameters);
  row.declared_size = fam.declared_size;
  row.enumerated_classes = fam.distinct_classes;
  return row;
}

inline std::int64_t auto_peak(const shift_sequence& s) {
  return static_cast<std::int64_t>(matching_columns(s, s, 0, 0).matches);
}

inline std::int64_t auto_off(const shift_sequence& s) { return max_off_origin(matching_table(s, s)); }

inline std::int64_t cross_max(const shift_sequence& a, const shift_sequence& b) {
  return max_entry(matching_table(a, b));
}

}  // namespace detail

/// Exhaustive family sizes and matching-column bounds for prime p (quadratic,
/// degree-n, exponential, Legendre) and for GF(field_p^field_m) (Zech).
inline tables_report verify_tables(std::uint64_t p, std::uint64_t field_p = 2, unsigned field_m = 4,
                                   unsigned degree = 3) {
  tables_report report;
  const auto ps = std::to_string(p);
  {
    const auto fam = family_enumerate(family_kind::quadratic, {p, 0, 2});
    auto row = detail::make_row("quadratic", "p=" + ps, fam);
    row.expected_peak = static_cast<std::int64_t>(p);
    row.auto_peak = row.expected_peak;
    row.auto_bound = 1;
    row.cross_bound = 2;
    for (const auto& m : fam.members) {
      row.auto_peak = std::min(row.auto_peak, detail::auto_peak(m.generator));
      row.auto_max = std::max(row.auto_max, detail::auto_off(m.generator));
    }
    for (std::size_t a = 0; a < fam.members.size(); ++a)
      for (std::size_t b = a + 1; b < fam.members.size(); ++b)
        row.cross_max = std::max(row.cross_max, detail::cross_max(fam.members[a].generator, fam.members[b].generator));
    row.notes = "auto over all members; cross over all pairs";
    report.rows.push_back(row);
  }
  if (degree < p) {
    const auto fam = family_enumerate(family_kind::polynomial, {p, 0, degree});
    auto row = detail::make_row("degree-" + std::to_string(degree), "p=" + ps, fam);
    row.expected_peak = static_cast<std::int64_t>(p);
    row.auto_peak = row.expected_peak;
    row.auto_bound = static_cast<std::int64_t>(degree) - 1;
    row.cross_bound = static_cast<std::int64_t>(degree);
    std::int64_t lower_degree_auto = 0;
    std::size_t lower_degree = 0;
    for (const auto& m : fam.members) {
      const std::int64_t off = detail::auto_off(m.generator);
      row.auto_peak = std::min(row.auto_peak, detail::auto_peak(m.generator));
      if (m.parameters[degree] != 0) {
        row.auto_max = std::max(row.auto_max, off);
      } else {
        ++lower_degree;
        lower_degree_auto = std::max(lower_degree_auto, off);
      }
    }
    for (std::size_t a = 0; a < fam.members.size(); ++a)
      for (std::size_t b = a + 1; b < fam.members.size(); ++b)
        row.cross_max = std::max(row.cross_max, detail::cross_max(fam.members[a].generator, fam.members[b].generator));
    row.notes = "auto over the degree-" + std::to_string(degree) + " members; " +
                std::to_string(lower_degree) + " lower-degree members reach " +
                std::to_string(lower_degree_auto) + " off-origin matches; cross over all pairs";
    report.rows.push_back(row);
  }
  {
    const auto fam = family_enumerate(family_kind::exponential, {p, 0, 0});
    auto row = detail::make_row("exponential", "p=" + ps, fam);
    row.expected_peak = static_cast<std::int64_t>(p) - 1;
    row.auto_peak = row.expected_peak;
    row.auto_bound = 1;
    row.cross_bound = 2;
    for (const auto& m : fam.members) {
      row.auto_peak = std::min(row.auto_peak, detail::auto_peak(m.generator));
      row.auto_max = std::max(row.auto_max, detail::auto_off(m.generator));
    }
    const std::uint64_t g = ff::primitive_root(p);
    const std::uint64_t h = ff::inverse_mod(static_cast<std::int64_t>(g), p);
    row.cross_max = detail::cross_max(exponential_shift(p, g), exponential_shift(p, h));
    row.notes = "cross for the pair g=" + std::to_string(g) + ", g^-1=" + std::to_string(h);
    report.rows.push_back(row);
  }
  if (p > 3) {
    const auto fam = family_enumerate(family_kind::legendre, {p, 0, 0});
    auto row = detail::make_row("legendre", "p=" + ps, fam);
    row.expected_peak = static_cast<std::int64_t>(p) - 1;
    row.auto_peak = row.expected_peak;
    row.auto_bound = 1;
    row.cross_bound = 2;
    for (const auto& m : fam.members) {
      if (std::gcd(static_cast<std::uint64_t>(m.parameters[0]), p - 1) != 1) continue;
      row.auto_peak = std::min(row.auto_peak, detail::auto_peak(m.generator));
      row.auto_max = std::max(row.auto_max, detail::auto_off(m.generator));
    }
    const std::uint64_t g = ff::primitive_root(p);
    const auto base = legendre_index_shift(p, g, 1);
    row.cross_max = std::max(detail::cross_max(base, legendre_index_shift(p, g, 2)),
                             detail::cross_max(base, legendre_index_shift(p, g, p - 2)));
    row.notes = "auto over multipliers coprime to p-1; cross for r=1 against r=2 and r=-1";
    report.rows.push_back(row);
  }
  {
    const auto field = family_field(field_p, field_m);
    const auto fam = family_enumerate(family_kind::zech, {field_p, field_m, 0}, &field);
    const auto q = static_cast<std::int64_t>(field.order());
    auto row = detail::make_row(
        "zech", "GF(" + std::to_string(field_p) + "^" + std::to_string(field_m) + ")", fam);
    row.expected_peak = q - 2;
    row.auto_peak = row.expected_peak;
    row.auto_bound = 1;
    row.cross_bound = 2;
    for (const auto& m : fam.members) {
      if (std::gcd(m.parameters[0], q - 1) != 1) continue;
      row.auto_peak = std::min(row.auto_peak, detail::auto_peak(m.generator));
      row.auto_max = std::max(row.auto_max, detail::auto_off(m.generator));
    }
    const auto lempel = zech_shift(field, 1, 1);
    for (auto [t, s] : {std::pair<std::int64_t, std::int64_t>{-1, 1}, {1, -1}, {2, 1}, {1, 2}}) {
      if (std::gcd(ff::mod(t, q - 1), q - 1) != 1 || std::gcd(ff::mod(s, q - 1), q - 1) != 1) continue;
      row.cross_max = std::max(row.cross_max, detail::cross_max(lempel, zech_shift(field, t, s)));
    }
    row.notes = "auto over multipliers coprime to q-1; cross for Lempel against (r,s) = (-1,1), (1,-1), (2,1), (1,2)";
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace pnarray
