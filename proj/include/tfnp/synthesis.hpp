#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tfnp/circuit.hpp"

namespace tfnp {

/// Where an input of an embedded copy of the old circuit reads from.
struct InputSource {
  enum class Kind : std::uint8_t { NewInput, Const0, Const1 };
  Kind kind = Kind::NewInput;
  std::size_t index = 0;

  static InputSource input(std::size_t i) { return {Kind::NewInput, i}; }
  static InputSource constant(bool v) { return {v ? Kind::Const1 : Kind::Const0, 0}; }
};

/// Where an output of the transformed circuit reads from.
struct OutputSource {
  enum class Kind : std::uint8_t { OldOutput, NewInput, Const0, Const1 };
  Kind kind = Kind::OldOutput;
  std::size_t copy = 0;
  std::size_t index = 0;

  static OutputSource old_output(std::size_t i, std::size_t copy = 0) { return {Kind::OldOutput, copy, i}; }
  static OutputSource input(std::size_t i) { return {Kind::NewInput, 0, i}; }
  static OutputSource constant(bool v) { return {v ? Kind::Const1 : Kind::Const0, 0, 0}; }
};

/// A rewiring of one or more copies of a circuit. `copies[j][i]` binds
/// input i of copy j.
struct Wiring {
  std::size_t num_inputs = 0;
  std::vector<std::vector<InputSource>> copies;
  std::vector<OutputSource> outputs;

  /// Single copy reading the old inputs in order, outputs passed through.
  static Wiring identity(std::size_t num_inputs, std::size_t num_outputs);
};

/// Throws StructuralError on dangling references.
Circuit wire_transform(const Circuit& c, const Wiring& wiring);

/// The single wiring equivalent to applying `first` and then `second`.
Wiring compose(const Wiring& first, const Wiring& second, std::size_t old_inputs);

/// Appends constant zero outputs up to `width`.
Circuit pad_outputs(const Circuit& c, std::size_t width);
/// Prepends constant zero outputs up to `width`.
Circuit pad_outputs_front(const Circuit& c, std::size_t width);
Circuit drop_last_output(const Circuit& c);

struct PiecewiseCase {
  Circuit predicate;
  Circuit body;
};

/// First matching case wins; `fallback` applies when no predicate holds.
Circuit build_piecewise(std::span<const PiecewiseCase> cases, const Circuit& fallback);

/// Multiplication in Z_p^* with element e stored as e-1 on l = ceil(log(p-1))
/// bits: inputs bd(a)||bd(b), output bd((a+1)(b+1) mod p - 1).
Circuit build_modmul(std::uint64_t p);

/// Circuit for an arbitrary function given by its table (row bc(x) holds
/// bc(output)). Shannon expansion with structural sharing.
Circuit from_truth_table(std::size_t num_inputs, std::size_t num_outputs, std::span<const std::uint64_t> table);

}  // namespace tfnp
