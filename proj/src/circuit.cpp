#include "tfnp/circuit.hpp"

#include <algorithm>
#include <string>

#include "tfnp/errors.hpp"

namespace tfnp {

std::string_view op_name(Op op) noexcept {
  switch (op) {
    case Op::Input: return "INPUT";
    case Op::Const0: return "CONST0";
    case Op::Const1: return "CONST1";
    case Op::Not: return "NOT";
    case Op::And: return "AND";
    case Op::Or: return "OR";
    case Op::Xor: return "XOR";
  }
  return "?";
}

Op op_from_name(std::string_view name) {
  for (Op op : {Op::Input, Op::Const0, Op::Const1, Op::Not, Op::And, Op::Or, Op::Xor}) {
    if (op_name(op) == name) return op;
  }
  throw ParseError("", "unknown gate op '" + std::string(name) + "'");
}

std::size_t op_arity(Op op) noexcept {
  switch (op) {
    case Op::Not: return 1;
    case Op::And:
    case Op::Or:
    case Op::Xor: return 2;
    default: return 0;
  }
}

Circuit::Circuit(std::size_t num_inputs, std::vector<Gate> gates, Wires outputs)
    : num_inputs_(num_inputs), gates_(std::move(gates)), outputs_(std::move(outputs)) {
  if (num_inputs_ == 0) throw StructuralError("circuit needs at least one input");
  if (gates_.size() < num_inputs_) throw StructuralError("gate list shorter than the input count");
  if (outputs_.empty()) throw StructuralError("circuit needs at least one output");
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    const Gate& g = gates_[i];
    const bool is_input = i < num_inputs_;
    if (is_input != (g.op == Op::Input)) {
      throw StructuralError("gate " + std::to_string(i) +
                            (is_input ? " must be an INPUT gate" : " is an INPUT gate past the input block"));
    }
    const std::size_t arity = op_arity(g.op);
    if ((arity >= 1 && g.a >= i) || (arity == 2 && g.b >= i)) {
      throw StructuralError("gate " + std::to_string(i) + " references a wire that is not defined earlier");
    }
    if (arity < 2) gates_[i].b = 0;
    if (arity < 1) gates_[i].a = 0;
  }
  for (Wire w : outputs_) {
    if (w >= gates_.size()) throw StructuralError("output references undefined wire " + std::to_string(w));
  }
}

void Circuit::evaluate_into(std::span<const std::uint8_t> input, std::span<std::uint8_t> output,
                            std::vector<std::uint8_t>& scratch) const {
  if (input.size() != num_inputs_) {
    throw StructuralError("circuit expects " + std::to_string(num_inputs_) + " input bits, got " +
                          std::to_string(input.size()));
  }
  if (output.size() != outputs_.size()) throw StructuralError("output buffer has the wrong width");
  scratch.resize(gates_.size());
  std::uint8_t* v = scratch.data();
  for (std::size_t i = 0; i < num_inputs_; ++i) v[i] = input[i];
  const Gate* g = gates_.data();
  for (std::size_t i = num_inputs_; i < gates_.size(); ++i) {
    switch (g[i].op) {
      case Op::Const0: v[i] = 0; break;
      case Op::Const1: v[i] = 1; break;
      case Op::Not: v[i] = v[g[i].a] ^ 1U; break;
      case Op::And: v[i] = v[g[i].a] & v[g[i].b]; break;
      case Op::Or: v[i] = v[g[i].a] | v[g[i].b]; break;
      case Op::Xor: v[i] = v[g[i].a] ^ v[g[i].b]; break;
      case Op::Input: break;
    }
  }
  for (std::size_t k = 0; k < outputs_.size(); ++k) output[k] = v[outputs_[k]];
}

Bitstring Circuit::evaluate(const Bitstring& input) const {
  std::vector<std::uint8_t> scratch;
  std::vector<std::uint8_t> out(outputs_.size());
  evaluate_into(input.bits(), out, scratch);
  return Bitstring(std::move(out));
}

std::uint64_t Circuit::evaluate_word(std::uint64_t input) const {
  if (num_inputs_ > 64 || outputs_.size() > 64) throw RangeError("evaluate_word supports widths up to 64");
  if (num_inputs_ < 64 && (input >> num_inputs_) != 0) throw RangeError("input word exceeds the circuit's input width");
  thread_local std::vector<std::uint8_t> scratch;
  thread_local std::vector<std::uint8_t> in;
  thread_local std::vector<std::uint8_t> out;
  in.resize(num_inputs_);
  out.resize(outputs_.size());
  for (std::size_t i = 0; i < num_inputs_; ++i) in[i] = (input >> (num_inputs_ - 1 - i)) & 1U;
  evaluate_into(in, out, scratch);
  std::uint64_t value = 0;
  for (auto bit : out) value = (value << 1) | bit;
  return value;
}

std::vector<std::uint64_t> Circuit::tabulate() const {
  if (num_inputs_ > kMaxTableInputs || outputs_.size() > 64) {
    throw RangeError("tabulate supports at most " + std::to_string(kMaxTableInputs) + " inputs and 64 outputs");
  }
  const std::size_t rows = std::size_t{1} << num_inputs_;
  std::vector<std::uint64_t> table(rows, 0);
  std::vector<std::uint64_t> v(gates_.size());
  // Bit-sliced: lane j of every word holds row base + j.
  for (std::size_t base = 0; base < rows; base += 64) {
    for (std::size_t i = 0; i < num_inputs_; ++i) {
      const std::size_t shift = num_inputs_ - 1 - i;
      std::uint64_t word = 0;
      if (shift >= 6) {
        word = ((base >> shift) & 1U) ? ~std::uint64_t{0} : 0;
      } else {
        for (std::size_t j = 0; j < 64; ++j) word |= static_cast<std::uint64_t>((j >> shift) & 1U) << j;
      }
      v[i] = word;
    }
    for (std::size_t i = num_inputs_; i < gates_.size(); ++i) {
      const Gate& g = gates_[i];
      switch (g.op) {
        case Op::Const0: v[i] = 0; break;
        case Op::Const1: v[i] = ~std::uint64_t{0}; break;
        case Op::Not: v[i] = ~v[g.a]; break;
        case Op::And: v[i] = v[g.a] & v[g.b]; break;
        case Op::Or: v[i] = v[g.a] | v[g.b]; break;
        case Op::Xor: v[i] = v[g.a] ^ v[g.b]; break;
        case Op::Input: break;
      }
    }
    const std::size_t lanes = std::min<std::size_t>(64, rows - base);
    for (std::size_t k = 0; k < outputs_.size(); ++k) {
      const std::uint64_t word = v[outputs_[k]];
      const std::size_t shift = outputs_.size() - 1 - k;
      for (std::size_t j = 0; j < lanes; ++j) table[base + j] |= ((word >> j) & 1U) << shift;
    }
  }
  return table;
}

const std::vector<std::uint64_t>& Circuit::table() const {
  std::call_once(cache_->once, [this] { cache_->values = tabulate(); });
  return cache_->values;
}

std::uint64_t Circuit::lookup(std::uint64_t input) const {
  if (num_inputs_ <= kLookupTableInputs && outputs_.size() <= 64) {
    if ((input >> num_inputs_) != 0) throw RangeError("input word exceeds the circuit's input width");
    return table()[input];
  }
  return evaluate_word(input);
}

}  // namespace tfnp
