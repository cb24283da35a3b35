#include "tfnp/lattice.hpp"

#include <limits>
#include <string>

#include "tfnp/errors.hpp"

namespace tfnp {

namespace {

using i128 = __int128;

i128 checked_mul(i128 a, i128 b) {
  i128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw RangeError("determinant overflow");
  return r;
}

i128 checked_sub(i128 a, i128 b) {
  i128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw RangeError("determinant overflow");
  return r;
}

i128 bareiss(std::vector<i128> m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap * n + k] == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[swap * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        i128 num = checked_sub(checked_mul(m[i * n + j], m[k * n + k]), checked_mul(m[i * n + k], m[k * n + j]));
        m[i * n + j] = num / prev;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

std::vector<i128> widen(const IntMatrix& b) { return std::vector<i128>(b.entries.begin(), b.entries.end()); }

std::int64_t narrow(i128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw RangeError("value does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

}  // namespace

IntMatrix::IntMatrix(std::size_t dim, std::vector<std::int64_t> values) : n(dim), entries(std::move(values)) {
  if (entries.size() != n * n) throw StructuralError("matrix needs " + std::to_string(n * n) + " entries");
}

IntMatrix IntMatrix::identity(std::size_t dim, std::int64_t scale) {
  IntMatrix m(dim, std::vector<std::int64_t>(dim * dim, 0));
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = scale;
  return m;
}

std::int64_t det_exact(const IntMatrix& b) { return narrow(bareiss(widen(b), b.n)); }

std::optional<std::vector<std::int64_t>> lattice_member(const IntMatrix& b, const std::vector<std::int64_t>& x) {
  if (x.size() != b.n) throw StructuralError("vector length does not match the basis dimension");
  const i128 d = bareiss(widen(b), b.n);
  if (d == 0) throw ValidationError("lattice_member needs a nonsingular basis");
  // Cramer's rule: z_i = det(B with column i replaced by x) / det(B).
  std::vector<std::int64_t> z(b.n);
  for (std::size_t i = 0; i < b.n; ++i) {
    std::vector<i128> m = widen(b);
    for (std::size_t r = 0; r < b.n; ++r) m[r * b.n + i] = x[r];
    const i128 di = bareiss(std::move(m), b.n);
    if (di % d != 0) return std::nullopt;
    z[i] = narrow(di / d);
  }
  return z;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.n != b.n) throw StructuralError("matrix dimensions differ");
  IntMatrix out(a.n, std::vector<std::int64_t>(a.n * a.n, 0));
  for (std::size_t i = 0; i < a.n; ++i) {
    for (std::size_t j = 0; j < a.n; ++j) {
      i128 acc = 0;
      for (std::size_t k = 0; k < a.n; ++k) acc += static_cast<i128>(a.at(i, k)) * b.at(k, j);
      out.at(i, j) = narrow(acc);
    }
  }
  return out;
}

std::vector<std::int64_t> apply(const IntMatrix& b, const std::vector<std::int64_t>& z) {
  if (z.size() != b.n) throw StructuralError("vector length does not match the basis dimension");
  std::vector<std::int64_t> out(b.n);
  for (std::size_t i = 0; i < b.n; ++i) {
    i128 acc = 0;
    for (std::size_t k = 0; k < b.n; ++k) acc += static_cast<i128>(b.at(i, k)) * z[k];
    out[i] = narrow(acc);
  }
  return out;
}

}  // namespace tfnp
