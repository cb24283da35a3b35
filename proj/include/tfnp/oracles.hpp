#pragma once

#include <cstddef>
#include <limits>
#include <vector>

#include "tfnp/problems.hpp"

namespace tfnp {

struct EnumerateOptions {
  VerifyOptions verify;
  /// Stop after this many solutions.
  std::size_t limit = std::numeric_limits<std::size_t>::max();
  /// Restrict to one case number (0 = all cases).
  int only_case = 0;
};

/// Every solution of the instance in the canonical order: ascending case
/// number, then witnesses ascending (pairs are ordered and enumerated
/// lexicographically). Circuit domains up to 20 input bits and [s] up to
/// 2^20 are supported; larger searches throw RangeError.
std::vector<Solution> enumerate_solutions(const Instance& inst, const EnumerateOptions& opts = {});

/// The first solution in the canonical order. Throws InvariantViolation if
/// the search space holds none, which a valid instance never allows.
Solution brute_force(const Instance& inst, const VerifyOptions& opts = {});

/// Adjugate of B (so that adj(B) B = det(B) I); entries must fit in 64 bits.
IntMatrix adjugate(const IntMatrix& b);

}  // namespace tfnp
