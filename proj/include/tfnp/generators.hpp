#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "tfnp/circuit.hpp"
#include "tfnp/problems.hpp"

namespace tfnp {

/// mt19937_64 with a fixed draw rule (`next() % bound`) so that seeded runs
/// are reproducible across platforms and standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  /// Uniform-ish draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Draw in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool coin() { return (next() & 1) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item);

struct CircuitSpec {
  std::size_t inputs = 1;
  std::size_t outputs = 1;
  std::size_t gates = 16;
  std::size_t depth = 8;
};

/// Random gate circuit. Gates are drawn in order; each picks an op from
/// NOT/AND/OR/XOR (one draw mod 4) and operands uniformly among the earlier
/// wires of depth < spec.depth. Outputs are then drawn uniformly among all
/// wires. The result is always structurally valid.
Circuit random_circuit(Rng& rng, const CircuitSpec& spec);

/// Uniformly random function table, synthesized. At most 20 inputs.
Circuit random_table_circuit(Rng& rng, std::size_t inputs, std::size_t outputs);

/// Random bijection on n bits, synthesized.
Circuit random_permutation_circuit(Rng& rng, std::size_t n);

struct GenOptions {
  /// Size parameter: input bits, or ceil(log s) for groupoid problems.
  std::size_t n = 3;
  /// Gate budget for random gate circuits; 0 picks 4 * (inputs + outputs).
  std::size_t gates = 0;
  std::size_t depth = 8;
};

/// A valid random instance of the problem. Draws mix random gate circuits,
/// random tables and structured families (bijections, cyclic groups, the
/// shifted identity groupoid, Dove groupoids) so that every solution case
/// gets exercised.
Instance generate_instance(Problem p, Rng& rng, const GenOptions& opts);

/// DLog_p instance with p - 1 factorized by trial division.
DLogPInstance make_dlogp(std::uint64_t p, std::uint64_t g, std::uint64_t y);

}  // namespace tfnp
