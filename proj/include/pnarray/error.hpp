#pragma once

#include <stdexcept>
#include <string>

namespace pnarray {

/// A matrix column that is neither constant nor a cyclic shift of the base column.
class structure_error : public std::runtime_error {
 public:
  explicit structure_error(const std::string& what) : std::runtime_error(what) {}
};

/// A search over a finite parameter space found no admissible candidate.
class not_found_error : public std::runtime_error {
 public:
  explicit not_found_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace detail
}  // namespace pnarray
