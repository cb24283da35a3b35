#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "tfnp/circuit.hpp"

namespace tfnp {

/// Incremental circuit construction with constant folding and structural
/// hashing. Wire vectors are most-significant-bit first, like Bitstring.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t num_inputs);

  std::size_t num_inputs() const noexcept { return num_inputs_; }
  Wire input(std::size_t i) const;
  Wires inputs() const;
  Wires inputs(std::size_t first, std::size_t count) const;

  Wire constant(bool value);
  Wire zero() { return constant(false); }
  Wire one() { return constant(true); }

  Wire lnot(Wire a);
  Wire land(Wire a, Wire b);
  Wire lor(Wire a, Wire b);
  Wire lxor(Wire a, Wire b);

  /// Inlines `c` with its inputs bound to `in`; returns its output wires.
  Wires embed(const Circuit& c, std::span<const Wire> in);

  /// Constant value of a wire, if known.
  std::optional<bool> constant_value(Wire w) const;

  /// Number of gates created so far (inputs excluded).
  std::size_t size() const noexcept { return gates_.size() - num_inputs_; }

  /// Emits the circuit, dropping gates that no output depends on.
  Circuit finish(std::span<const Wire> outputs) const;

 private:
  Wire emit(Op op, Wire a, Wire b);

  std::size_t num_inputs_;
  std::vector<Gate> gates_;
  std::unordered_map<std::uint64_t, Wire> cache_;
  std::optional<Wire> const0_;
  std::optional<Wire> const1_;
};

/// Arithmetic and selection gadgets over unsigned MSB-first wire vectors.
namespace gadgets {

Wires constant_bits(CircuitBuilder& b, std::uint64_t value, std::size_t width);
Wires zero_extend(CircuitBuilder& b, std::span<const Wire> x, std::size_t width);

/// OR over all bits.
Wire any(CircuitBuilder& b, std::span<const Wire> x);
Wire equal(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y);
Wire equal_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t value);
/// x < y, unsigned, equal widths.
Wire less_than(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y);
/// x < c; constants at or above 2^width make this constant true.
Wire less_than_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t c);

Wires bitwise_xor(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y);
/// sel ? when_true : when_false, bitwise.
Wires mux(CircuitBuilder& b, Wire sel, std::span<const Wire> when_true, std::span<const Wire> when_false);

/// Ripple-carry sum modulo 2^width (carry dropped).
Wires add(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y);
/// Ripple-carry sum with the carry prepended (width + 1 bits).
Wires add_with_carry(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y);
/// x - y modulo 2^width.
Wires subtract(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y);
Wires add_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t c);
Wires subtract_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t c);

}  // namespace gadgets

}  // namespace tfnp
