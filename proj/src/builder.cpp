#include "tfnp/builder.hpp"

#include <algorithm>
#include <string>

#include "tfnp/errors.hpp"

namespace tfnp {

namespace {

std::uint64_t cache_key(Op op, Wire a, Wire b) {
  return (static_cast<std::uint64_t>(op) << 58) | (static_cast<std::uint64_t>(a) << 29) | b;
}

void require_same_width(std::span<const Wire> x, std::span<const Wire> y, const char* what) {
  if (x.size() != y.size()) throw StructuralError(std::string(what) + ": operand widths differ");
}

}  // namespace

CircuitBuilder::CircuitBuilder(std::size_t num_inputs) : num_inputs_(num_inputs) {
  if (num_inputs == 0) throw StructuralError("circuit needs at least one input");
  gates_.assign(num_inputs, Gate{Op::Input, 0, 0});
}

Wire CircuitBuilder::input(std::size_t i) const {
  if (i >= num_inputs_) throw StructuralError("input index out of range");
  return static_cast<Wire>(i);
}

Wires CircuitBuilder::inputs() const { return inputs(0, num_inputs_); }

Wires CircuitBuilder::inputs(std::size_t first, std::size_t count) const {
  if (first + count > num_inputs_) throw StructuralError("input range out of bounds");
  Wires out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = static_cast<Wire>(first + i);
  return out;
}

Wire CircuitBuilder::emit(Op op, Wire a, Wire b) {
  if (op_arity(op) == 2 && a > b) std::swap(a, b);
  const auto key = cache_key(op, a, b);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const auto id = static_cast<Wire>(gates_.size());
  gates_.push_back(Gate{op, a, b});
  cache_.emplace(key, id);
  return id;
}

Wire CircuitBuilder::constant(bool value) {
  auto& slot = value ? const1_ : const0_;
  if (!slot) slot = emit(value ? Op::Const1 : Op::Const0, 0, 0);
  return *slot;
}

std::optional<bool> CircuitBuilder::constant_value(Wire w) const {
  if (w >= gates_.size()) throw StructuralError("unknown wire");
  if (gates_[w].op == Op::Const0) return false;
  if (gates_[w].op == Op::Const1) return true;
  return std::nullopt;
}

Wire CircuitBuilder::lnot(Wire a) {
  if (auto c = constant_value(a)) return constant(!*c);
  if (gates_[a].op == Op::Not) return gates_[a].a;
  return emit(Op::Not, a, 0);
}

Wire CircuitBuilder::land(Wire a, Wire b) {
  auto ca = constant_value(a);
  auto cb = constant_value(b);
  if (ca) return *ca ? b : zero();
  if (cb) return *cb ? a : zero();
  if (a == b) return a;
  return emit(Op::And, a, b);
}

Wire CircuitBuilder::lor(Wire a, Wire b) {
  auto ca = constant_value(a);
  auto cb = constant_value(b);
  if (ca) return *ca ? one() : b;
  if (cb) return *cb ? one() : a;
  if (a == b) return a;
  return emit(Op::Or, a, b);
}

Wire CircuitBuilder::lxor(Wire a, Wire b) {
  auto ca = constant_value(a);
  auto cb = constant_value(b);
  if (ca) return *ca ? lnot(b) : b;
  if (cb) return *cb ? lnot(a) : a;
  if (a == b) return zero();
  return emit(Op::Xor, a, b);
}

Wires CircuitBuilder::embed(const Circuit& c, std::span<const Wire> in) {
  if (in.size() != c.num_inputs()) {
    throw StructuralError("embedding a " + std::to_string(c.num_inputs()) + "-input circuit on " +
                          std::to_string(in.size()) + " wires");
  }
  const auto& gates = c.gates();
  Wires map(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    switch (g.op) {
      case Op::Input: map[i] = in[i]; break;
      case Op::Const0: map[i] = zero(); break;
      case Op::Const1: map[i] = one(); break;
      case Op::Not: map[i] = lnot(map[g.a]); break;
      case Op::And: map[i] = land(map[g.a], map[g.b]); break;
      case Op::Or: map[i] = lor(map[g.a], map[g.b]); break;
      case Op::Xor: map[i] = lxor(map[g.a], map[g.b]); break;
    }
  }
  Wires out;
  out.reserve(c.num_outputs());
  for (Wire w : c.outputs()) out.push_back(map[w]);
  return out;
}

Circuit CircuitBuilder::finish(std::span<const Wire> outputs) const {
  std::vector<std::uint8_t> live(gates_.size(), 0);
  for (Wire w : outputs) {
    if (w >= gates_.size()) throw StructuralError("output references an unknown wire");
    live[w] = 1;
  }
  for (std::size_t i = gates_.size(); i-- > num_inputs_;) {
    if (!live[i]) continue;
    const auto arity = op_arity(gates_[i].op);
    if (arity >= 1) live[gates_[i].a] = 1;
    if (arity == 2) live[gates_[i].b] = 1;
  }
  std::vector<Wire> remap(gates_.size(), 0);
  std::vector<Gate> gates;
  gates.reserve(gates_.size());
  for (std::size_t i = 0; i < gates_.size(); ++i) {
    if (i >= num_inputs_ && !live[i]) continue;
    Gate g = gates_[i];
    const auto arity = op_arity(g.op);
    if (arity >= 1) g.a = remap[g.a];
    if (arity == 2) g.b = remap[g.b];
    remap[i] = static_cast<Wire>(gates.size());
    gates.push_back(g);
  }
  Wires outs;
  outs.reserve(outputs.size());
  for (Wire w : outputs) outs.push_back(remap[w]);
  return Circuit(num_inputs_, std::move(gates), std::move(outs));
}

namespace gadgets {

Wires constant_bits(CircuitBuilder& b, std::uint64_t value, std::size_t width) {
  Wires out(width);
  for (std::size_t i = 0; i < width; ++i) {
    const std::size_t shift = width - 1 - i;
    out[i] = b.constant(shift < 64 && ((value >> shift) & 1U) != 0);
  }
  return out;
}

Wires zero_extend(CircuitBuilder& b, std::span<const Wire> x, std::size_t width) {
  if (width < x.size()) throw StructuralError("zero_extend to a narrower width");
  Wires out(width - x.size(), b.zero());
  out.insert(out.end(), x.begin(), x.end());
  return out;
}

Wire any(CircuitBuilder& b, std::span<const Wire> x) {
  Wire acc = b.zero();
  for (Wire w : x) acc = b.lor(acc, w);
  return acc;
}

Wire equal(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y) {
  require_same_width(x, y, "equal");
  Wire acc = b.one();
  for (std::size_t i = 0; i < x.size(); ++i) acc = b.land(acc, b.lnot(b.lxor(x[i], y[i])));
  return acc;
}

Wire equal_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t value) {
  if (x.size() < 64 && (value >> x.size()) != 0) return b.zero();
  return equal(b, x, constant_bits(b, value, x.size()));
}

Wire less_than(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y) {
  require_same_width(x, y, "less_than");
  // Scan from the least significant bit: lt' = (!x & y) | (!(x ^ y) & lt).
  Wire lt = b.zero();
  for (std::size_t i = x.size(); i-- > 0;) {
    Wire strictly = b.land(b.lnot(x[i]), y[i]);
    Wire same = b.lnot(b.lxor(x[i], y[i]));
    lt = b.lor(strictly, b.land(same, lt));
  }
  return lt;
}

Wire less_than_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t c) {
  if (x.size() < 64 && (c >> x.size()) != 0) return b.one();
  return less_than(b, x, constant_bits(b, c, x.size()));
}

Wires bitwise_xor(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y) {
  require_same_width(x, y, "bitwise_xor");
  Wires out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = b.lxor(x[i], y[i]);
  return out;
}

Wires mux(CircuitBuilder& b, Wire sel, std::span<const Wire> when_true, std::span<const Wire> when_false) {
  require_same_width(when_true, when_false, "mux");
  if (auto c = b.constant_value(sel)) {
    return *c ? Wires(when_true.begin(), when_true.end()) : Wires(when_false.begin(), when_false.end());
  }
  Wires out(when_true.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    // f ^ (sel & (t ^ f))
    out[i] = b.lxor(when_false[i], b.land(sel, b.lxor(when_true[i], when_false[i])));
  }
  return out;
}

Wires add_with_carry(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y) {
  require_same_width(x, y, "add");
  Wires sum(x.size() + 1);
  Wire carry = b.zero();
  for (std::size_t i = x.size(); i-- > 0;) {
    Wire t = b.lxor(x[i], y[i]);
    sum[i + 1] = b.lxor(t, carry);
    carry = b.lor(b.land(x[i], y[i]), b.land(t, carry));
  }
  sum[0] = carry;
  return sum;
}

Wires add(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y) {
  Wires full = add_with_carry(b, x, y);
  return Wires(full.begin() + 1, full.end());
}

Wires subtract(CircuitBuilder& b, std::span<const Wire> x, std::span<const Wire> y) {
  require_same_width(x, y, "subtract");
  // x + ~y + 1
  Wires out(x.size());
  Wire carry = b.one();
  for (std::size_t i = x.size(); i-- > 0;) {
    Wire ny = b.lnot(y[i]);
    Wire t = b.lxor(x[i], ny);
    out[i] = b.lxor(t, carry);
    carry = b.lor(b.land(x[i], ny), b.land(t, carry));
  }
  return out;
}

Wires add_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t c) {
  return add(b, x, constant_bits(b, c, x.size()));
}

Wires subtract_const(CircuitBuilder& b, std::span<const Wire> x, std::uint64_t c) {
  return subtract(b, x, constant_bits(b, c, x.size()));
}

}  // namespace gadgets

}  // namespace tfnp
