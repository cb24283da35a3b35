#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace tfnp {

/// Square integer matrix, row-major. The lattice L(B) is {B z : z in Z^n},
/// i.e. the basis vectors are the columns.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<std::int64_t> entries;

  IntMatrix() = default;
  IntMatrix(std::size_t dim, std::vector<std::int64_t> values);
  static IntMatrix identity(std::size_t dim, std::int64_t scale = 1);

  std::int64_t at(std::size_t row, std::size_t col) const { return entries[row * n + col]; }
  std::int64_t& at(std::size_t row, std::size_t col) { return entries[row * n + col]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
};

/// Exact determinant by Bareiss fraction-free elimination. Throws RangeError
/// if an intermediate value leaves the 128-bit range or the result does
/// not fit in 64 bits.
std::int64_t det_exact(const IntMatrix& b);

/// z with B z = x when x lies in L(B), nullopt otherwise. Throws
/// ValidationError for a singular B.
std::optional<std::vector<std::int64_t>> lattice_member(const IntMatrix& b, const std::vector<std::int64_t>& x);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
std::vector<std::int64_t> apply(const IntMatrix& b, const std::vector<std::int64_t>& z);

}  // namespace tfnp
