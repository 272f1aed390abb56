#pragma once

// v x T arrays built from a column sequence and a shift sequence, folding of
// long sequences, and recovery of the shift sequence from an array.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pnarray/column_sequence.hpp"
#include "pnarray/error.hpp"
#include "pnarray/scalar.hpp"
#include "pnarray/shift_sequence.hpp"

namespace pnarray {

struct provenance {
  std::string shift;
  std::string column;
  std::optional<double> blank_fill;
};

/// Row-major v x T matrix. Row index i runs down a column (length v), column
/// index j runs across (length T).
template <class Scalar>
class pn_array {
 public:
  using value_type = Scalar;

  pn_array() = default;
  pn_array(std::size_t rows, std::size_t cols, Scalar fill = Scalar{})
      : rows_(rows), cols_(cols), values_(rows * cols, fill) {}
  pn_array(std::size_t rows, std::size_t cols, std::vector<Scalar> values)
      : rows_(rows), cols_(cols), values_(std::move(values)) {
    detail::require(values_.size() == rows_ * cols_, "pn_array: value count does not match shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return values_.size(); }

  Scalar& operator()(std::size_t i, std::size_t j) { return values_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return values_[i * cols_ + j]; }

  /// Entry at cyclic indices.
  const Scalar& at_cyclic(std::int64_t i, std::int64_t j) const {
    return (*this)(static_cast<std::size_t>(ff::mod(i, static_cast<std::int64_t>(rows_))),
                   static_cast<std::size_t>(ff::mod(j, static_cast<std::int64_t>(cols_))));
  }

  std::span<const Scalar> values() const { return values_; }

  std::vector<Scalar> column(std::size_t j) const {
    std::vector<Scalar> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  /// Sum of |a_ij|^2.
  double energy() const {
    double e = 0.0;
    for (const Scalar& x : values_) e += magnitude(x) * magnitude(x);
    return e;
  }

  const std::optional<provenance>& origin() const { return origin_; }
  void set_origin(provenance p) { origin_ = std::move(p); }

  template <class Other>
  pn_array<Other> cast() const {
    pn_array<Other> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = static_cast<Other>((*this)(i, j));
    if (origin_) out.set_origin(*origin_);
    return out;
  }

  friend bool operator==(const pn_array& a, const pn_array& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           std::equal(a.values_.begin(), a.values_.end(), b.values_.begin(),
                      [](const Scalar& x, const Scalar& y) { return approx_equal(x, y); });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> values_;
  std::optional<provenance> origin_;
};

/// Column j is c shifted down by phi(j); blank columns hold `blank_fill`.
template <class Scalar>
pn_array<Scalar> build_array(const shift_sequence& phi, const column_sequence<Scalar>& c,
                             Scalar blank_fill = Scalar{}) {
  detail::require(static_cast<std::int64_t>(c.period()) == phi.modulus(),
                  "build_array: column period " + std::to_string(c.period()) +
                      " does not match shift modulus " + std::to_string(phi.modulus()));
  pn_array<Scalar> a(c.period(), phi.length());
  for (std::size_t j = 0; j < phi.length(); ++j) {
    for (std::size_t i = 0; i < c.period(); ++i) {
      a(i, j) = phi[j] ? c.at_cyclic(static_cast<std::int64_t>(i) - *phi[j]) : blank_fill;
    }
  }
  return a;
}

/// B(i, j) = A((i - l) mod v, (j - k) mod T): rows rotate right by k, columns down by l.
template <class Scalar>
pn_array<Scalar> cyclic_shift_2d(const pn_array<Scalar>& a, std::int64_t k, std::int64_t l) {
  pn_array<Scalar> b(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      b(i, j) = a.at_cyclic(static_cast<std::int64_t>(i) - l, static_cast<std::int64_t>(j) - k);
  return b;
}

/// Row-by-row fold: A(i, j) = s[i T + j].
template <class Scalar>
pn_array<Scalar> fold_sequence(std::span<const Scalar> s, std::size_t rows, std::size_t cols) {
  detail::require(rows >= 1 && cols >= 1 && s.size() == rows * cols,
                  "fold_sequence: sequence length " + std::to_string(s.size()) + " is not " +
                      std::to_string(rows) + " x " + std::to_string(cols));
  return pn_array<Scalar>(rows, cols, std::vector<Scalar>(s.begin(), s.end()));
}

template <class Scalar>
bool is_constant(std::span<const Scalar> column) {
  return std::all_of(column.begin(), column.end(),
                     [&](const Scalar& x) { return approx_equal(x, column.front()); });
}

/// Recovers phi with column j = base shifted down by phi(j); constant columns are blank.
template <class Scalar>
shift_sequence extract_shift_sequence(const pn_array<Scalar>& a,
                                      const column_sequence<Scalar>& base) {
  const std::size_t v = a.rows();
  detail::require(base.period() == v, "extract_shift_sequence: base period must equal row count");
  detail::require(!is_constant<Scalar>(base.entries),
                  "extract_shift_sequence: base column is constant");
  std::vector<shift_sequence::entry> out(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto col = a.column(j);
    if (is_constant<Scalar>(col)) continue;
    std::vector<std::int64_t> matches;
    for (std::size_t d = 0; d < v; ++d) {
      bool same = true;
      for (std::size_t i = 0; i < v && same; ++i)
        same = approx_equal(col[i], base.at_cyclic(static_cast<std::int64_t>(i) - static_cast<std::int64_t>(d)));
      if (same) matches.push_back(static_cast<std::int64_t>(d));
    }
    if (matches.empty())
      throw structure_error("extract_shift_sequence: column " + std::to_string(j) +
                            " is not a cyclic shift of the base column");
    detail::require(matches.size() == 1,
                    "extract_shift_sequence: base column has a shorter period; shift ambiguous");
    out[j] = matches.front();
  }
  return {std::move(out), static_cast<std::int64_t>(v)};
}

/// Shift-sequence description of an array: every column constant or a cyclic
/// shift of `base`. Constant columns keep their value in `fills`.
template <class Scalar>
struct structured_array {
  shift_sequence shifts;
  column_sequence<Scalar> base;
  std::vector<Scalar> fills;  // per column; meaningful only where shifts[j] is blank
};

/// Uses the first non-constant column as base; absent if any column fails to match.
template <class Scalar>
std::optional<structured_array<Scalar>> find_structure(const pn_array<Scalar>& a) {
  std::optional<std::size_t> first;
  for (std::size_t j = 0; j < a.cols() && !first; ++j) {
    if (!is_constant<Scalar>(a.column(j))) first = j;
  }
  if (!first || a.rows() < 2 || a.cols() < 2) return std::nullopt;
  column_sequence<Scalar> base;
  base.entries = a.column(*first);
  try {
    structured_array<Scalar> out{extract_shift_sequence(a, base), base, {}};
    out.fills.resize(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) out.fills[j] = a(0, j);
    return out;
  } catch (const structure_error&) {
    return std::nullopt;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace pnarray
