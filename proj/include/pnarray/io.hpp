#pragma once

// JSON, CSV and plain-text forms of sequences, arrays and correlation tables.
//
//   shift sequence     {"T": 7, "v": 7, "entries": [0, 6, null, ...]}
//   column sequence    {"alphabet": "ternary", "v": 7, "symbol_modulus": 0,
//                       "entries": [0, 1, ...]}      complex entries as [re, im]
//   array              {"rows": v, "cols": T, "scalar": "integer"|"real"|"complex",
//                       "values": [[row 0], [row 1], ...], "provenance": {...}}
//   correlation table  {"T": T, "v": v, "scalar": ..., "values": [[C(0,0..v-1)], ...]}

#include <complex>
#include <cstdint>
#include <iomanip>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "json.hpp"
#include "pnarray/array.hpp"
#include "pnarray/column_sequence.hpp"
#include "pnarray/correlation.hpp"
#include "pnarray/family.hpp"
#include "pnarray/shift_sequence.hpp"

namespace pnarray::io {

using json = nlohmann::ordered_json;

using any_column = std::variant<int_column, real_column, complex_column>;
using any_array = std::variant<pn_array<std::int64_t>, pn_array<double>, pn_array<std::complex<double>>>;

template <class Scalar>
const char* scalar_name() {
  if constexpr (std::is_integral_v<Scalar>) {
    return "integer";
  } else if constexpr (is_complex_v<Scalar>) {
    return "complex";
  } else {
    return "real";
  }
}

template <class Scalar>
json scalar_to_json(const Scalar& x) {
  if constexpr (is_complex_v<Scalar>) {
    return json::array({x.real(), x.imag()});
  } else {
    return x;
  }
}

/// Integers print exactly, reals with 12 significant digits, complex as re+imi.
template <class Scalar>
std::string format_scalar(const Scalar& x) {
  std::ostringstream out;
  if constexpr (std::is_integral_v<Scalar>) {
    out << x;
  } else if constexpr (is_complex_v<Scalar>) {
    out << std::setprecision(12) << x.real() << (x.imag() < 0 ? "-" : "+") << std::abs(x.imag()) << "i";
  } else {
    out << std::setprecision(12) << x;
  }
  return out.str();
}

// --- shift sequences -------------------------------------------------------

inline json to_json(const shift_sequence& s) {
  json entries = json::array();
  for (const auto& e : s.entries()) entries.push_back(e ? json(*e) : json(nullptr));
  return {{"T", s.length()}, {"v", s.modulus()}, {"entries", entries}};
}

inline shift_sequence shift_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("entries") && j.contains("v"),
                  "shift sequence JSON needs 'entries' and 'v'");
  std::vector<shift_sequence::entry> entries;
  for (const auto& e : j.at("entries")) {
    if (e.is_null()) {
      entries.emplace_back();
    } else {
      detail::require(e.is_number_integer(), "shift sequence entries must be integers or null");
      entries.emplace_back(e.get<std::int64_t>());
    }
  }
  if (j.contains("T"))
    detail::require(j.at("T").get<std::size_t>() == entries.size(), "shift sequence T does not match entries");
  return {std::move(entries), j.at("v").get<std::int64_t>()};
}

// --- column sequences ------------------------------------------------------

template <class Scalar>
json to_json(const column_sequence<Scalar>& c) {
  json entries = json::array();
  for (const auto& x : c.entries) entries.push_back(scalar_to_json(x));
  return {{"alphabet", to_string(c.kind)},
          {"v", c.period()},
          {"symbol_modulus", c.symbol_modulus},
          {"entries", entries}};
}

inline any_column column_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("entries"), "column JSON needs 'entries'");
  const auto& entries = j.at("entries");
  const alphabet kind = j.contains("alphabet") ? alphabet_from_string(j.at("alphabet").get<std::string>())
                                               : alphabet::real;
  const std::uint64_t modulus = j.value("symbol_modulus", std::uint64_t{0});
  bool any_complex = kind == alphabet::roots_of_unity, any_real = kind == alphabet::real;
  for (const auto& e : entries) {
    any_complex = any_complex || e.is_array();
    any_real = any_real || e.is_number_float();
  }
  if (any_complex) {
    complex_column c{{}, kind, modulus};
    for (const auto& e : entries)
      c.entries.push_back(e.is_array() ? std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>())
                                       : std::complex<double>(e.get<double>(), 0.0));
    c.validate();
    return c;
  }
  if (any_real) {
    real_column c{{}, kind, modulus};
    for (const auto& e : entries) c.entries.push_back(e.get<double>());
    c.validate();
    return c;
  }
  int_column c{{}, kind, modulus};
  for (const auto& e : entries) c.entries.push_back(e.get<std::int64_t>());
  c.validate();
  return c;
}

// --- arrays ----------------------------------------------------------------

template <class Scalar>
json to_json(const pn_array<Scalar>& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(scalar_to_json(a(i, j)));
    rows.push_back(std::move(row));
  }
  json out = {{"rows", a.rows()}, {"cols", a.cols()}, {"scalar", scalar_name<Scalar>()}, {"values", rows}};
  if (const auto& origin = a.origin()) {
    json prov = {{"shift", origin->shift}, {"column", origin->column}};
    if (origin->blank_fill) prov["blank_fill"] = *origin->blank_fill;
    out["provenance"] = prov;
  }
  return out;
}

inline any_array array_from_json(const json& j) {
  detail::require(j.is_object() && j.contains("values"), "array JSON needs 'values'");
  const auto& rows = j.at("values");
  detail::require(rows.is_array() && !rows.empty(), "array JSON 'values' must be a non-empty matrix");
  const std::size_t v = rows.size(), T = rows.at(0).size();
  bool any_complex = j.value("scalar", "") == "complex", any_real = j.value("scalar", "") == "real";
  for (const auto& row : rows) {
    detail::require(row.is_array() && row.size() == T, "array JSON rows differ in length");
    for (const auto& e : row) {
      any_complex = any_complex || e.is_array();
      any_real = any_real || e.is_number_float();
    }
  }
  auto fill = [&](auto& a, auto convert) {
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t jj = 0; jj < T; ++jj) a(i, jj) = convert(rows.at(i).at(jj));
  };
  if (any_complex) {
    pn_array<std::complex<double>> a(v, T);
    fill(a, [](const json& e) {
      return e.is_array() ? std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>())
                          : std::complex<double>(e.get<double>(), 0.0);
    });
    return a;
  }
  if (any_real) {
    pn_array<double> a(v, T);
    fill(a, [](const json& e) { return e.get<double>(); });
    return a;
  }
  pn_array<std::int64_t> a(v, T);
  fill(a, [](const json& e) { return e.get<std::int64_t>(); });
  return a;
}

/// Whitespace-separated grid, one array row per line.
template <class Scalar>
std::string to_text(const pn_array<Scalar>& a) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (const auto& x : a.values()) {
    cells.push_back(format_scalar(x));
    width = std::max(width, cells.back().size());
  }
  std::ostringstream out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j)
      out << (j ? " " : "") << std::setw(static_cast<int>(width)) << cells[i * a.cols() + j];
    out << '\n';
  }
  return out.str();
}

// --- correlation -----------------------------------------------------------

template <class Scalar>
json to_json(const correlation_table<Scalar>& c) {
  json rows = json::array();
  for (std::size_t k = 0; k < c.col_shifts; ++k) {
    json row = json::array();
    for (std::size_t l = 0; l < c.row_shifts; ++l) row.push_back(scalar_to_json(c.at(k, l)));
    rows.push_back(std::move(row));
  }
  return {{"T", c.col_shifts}, {"v", c.row_shifts}, {"scalar", scalar_name<Scalar>()}, {"values", rows}};
}

/// CSV with header k,l,value (plus imag for complex tables).
template <class Scalar>
std::string to_csv(const correlation_table<Scalar>& c) {
  std::ostringstream out;
  out << std::setprecision(12);
  out << (is_complex_v<Scalar> ? "k,l,real,imag\n" : "k,l,value\n");
  for (std::size_t k = 0; k < c.col_shifts; ++k) {
    for (std::size_t l = 0; l < c.row_shifts; ++l) {
      const auto& x = c.at(k, l);
      if constexpr (is_complex_v<Scalar>) {
        out << k << ',' << l << ',' << x.real() << ',' << x.imag() << '\n';
      } else {
        out << k << ',' << l << ',' << x << '\n';
      }
    }
  }
  return out.str();
}

template <class Scalar>
json to_json(const std::vector<histogram_bin<Scalar>>& bins) {
  json out = json::array();
  for (const auto& b : bins) out.push_back({{"value", scalar_to_json(b.value)}, {"count", b.count}});
  return out;
}

template <class Scalar>
json to_json(const peak_stats<Scalar>& s) {
  json out = {{"peak", scalar_to_json(s.peak)}, {"k", s.peak_k}, {"l", s.peak_l}, {"sidelobe", s.sidelobe}};
  if (s.unbounded) {
    out["ratio"] = nullptr;
    out["unbounded"] = true;
  } else {
    out["ratio"] = s.ratio;
    out["unbounded"] = false;
  }
  return out;
}

/// 1D sequences: integer, real or [re, im] entries.
template <class Scalar>
json sequence_to_json(const std::vector<Scalar>& s) {
  json out = json::array();
  for (const auto& x : s) out.push_back(scalar_to_json(x));
  return out;
}

template <class Scalar>
std::string sequence_to_csv(const std::vector<Scalar>& s) {
  std::ostringstream out;
  out << std::setprecision(12) << (is_complex_v<Scalar> ? "index,real,imag\n" : "index,value\n");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if constexpr (is_complex_v<Scalar>) {
      out << i << ',' << s[i].real() << ',' << s[i].imag() << '\n';
    } else {
      out << i << ',' << s[i] << '\n';
    }
  }
  return out.str();
}

// --- families and tables ---------------------------------------------------

inline json to_json(const shift_family& f) {
  json members = json::array();
  for (const auto& m : f.members) {
    members.push_back({{"label", m.label},
                       {"generator", to_json(m.generator)},
                       {"representative", to_json(m.representative)}});
  }
  return {{"kind", to_string(f.kind)},
          {"declared_size", f.declared_size},
          {"distinct_classes", f.distinct_classes},
          {"members", members}};
}

inline json to_json(const tables_report& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"construction", row.construction},
                    {"parameters", row.parameters},
                    {"declared_size", row.declared_size},
                    {"enumerated_classes", row.enumerated_classes},
                    {"count_ok", row.count_ok()},
                    {"auto_peak", row.auto_peak},
                    {"expected_peak", row.expected_peak},
                    {"auto_max", row.auto_max},
                    {"auto_bound", row.auto_bound},
                    {"auto_ok", row.auto_ok()},
                    {"cross_max", row.cross_max},
                    {"cross_bound", row.cross_bound},
                    {"cross_ok", row.cross_ok()},
                    {"notes", row.notes}});
  }
  return {{"ok", r.ok()}, {"rows", rows}};
}

}  // namespace pnarray::io
