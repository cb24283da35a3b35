#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string_view>
#include <vector>

#include "tfnp/bitstring.hpp"

namespace tfnp {

enum class Op : std::uint8_t { Input, Const0, Const1, Not, And, Or, Xor };

std::string_view op_name(Op op) noexcept;
/// Throws ParseError on an unknown name.
Op op_from_name(std::string_view name);
std::size_t op_arity(Op op) noexcept;

using Wire = std::uint32_t;
using Wires = std::vector<Wire>;

/// A gate's id is its position in the gate list; args refer to earlier ids.
struct Gate {
  Op op = Op::Const0;
  Wire a = 0;
  Wire b = 0;

  friend bool operator==(const Gate&, const Gate&) = default;
};

/// Combinational Boolean circuit. The first `num_inputs` gates are the
/// INPUT gates (wire ids 0..n-1), the rest are in topological order.
class Circuit {
 public:
  Circuit() = default;
  /// Validates topological order, arities and output references; throws
  /// StructuralError otherwise.
  Circuit(std::size_t num_inputs, std::vector<Gate> gates, Wires outputs);

  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  const Wires& outputs() const noexcept { return outputs_; }
  /// Number of non-input gates.
  std::size_t size() const noexcept { return gates_.size() - num_inputs_; }

  Bitstring evaluate(const Bitstring& input) const;

  /// Word-level evaluation, both sides read as bc(.). Requires widths <= 64.
  std::uint64_t evaluate_word(std::uint64_t input) const;

  /// Allocation-free core; `scratch` is resized as needed.
  void evaluate_into(std::span<const std::uint8_t> input, std::span<std::uint8_t> output,
                     std::vector<std::uint8_t>& scratch) const;

  /// Full truth table indexed by bc(input), computed 64 inputs at a time.
  /// Requires at most 26 inputs and 64 outputs.
  std::vector<std::uint64_t> tabulate() const;

  /// Cached truth table; computed on first use and shared between copies.
  const std::vector<std::uint64_t>& table() const;

  /// Table lookup when the circuit is small enough, evaluate_word otherwise.
  std::uint64_t lookup(std::uint64_t input) const;

  friend bool operator==(const Circuit& a, const Circuit& b) {
    return a.num_inputs_ == b.num_inputs_ && a.gates_ == b.gates_ && a.outputs_ == b.outputs_;
  }

  static constexpr std::size_t kMaxTableInputs = 26;
  /// Inputs up to which lookup() builds and uses the cached table.
  static constexpr std::size_t kLookupTableInputs = 20;

 private:
  struct TableCache {
    std::once_flag once;
    std::vector<std::uint64_t> values;
  };

  std::size_t num_inputs_ = 0;
  std::vector<Gate> gates_;
  Wires outputs_;
  std::shared_ptr<TableCache> cache_ = std::make_shared<TableCache>();
};

}  // namespace tfnp
