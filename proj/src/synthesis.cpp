#include "tfnp/synthesis.hpp"

#include <map>
#include <string>

#include "tfnp/bitstring.hpp"
#include "tfnp/builder.hpp"
#include "tfnp/errors.hpp"
#include "tfnp/numtheory.hpp"

namespace tfnp {

Wiring Wiring::identity(std::size_t num_inputs, std::size_t num_outputs) {
  Wiring w;
  w.num_inputs = num_inputs;
  w.copies.emplace_back();
  for (std::size_t i = 0; i < num_inputs; ++i) w.copies[0].push_back(InputSource::input(i));
  for (std::size_t i = 0; i < num_outputs; ++i) w.outputs.push_back(OutputSource::old_output(i));
  return w;
}

Circuit wire_transform(const Circuit& c, const Wiring& wiring) {
  if (wiring.num_inputs == 0) throw StructuralError("wiring must declare at least one input");
  CircuitBuilder b(wiring.num_inputs);
  std::vector<Wires> copy_outputs;
  for (std::size_t j = 0; j < wiring.copies.size(); ++j) {
    const auto& binding = wiring.copies[j];
    if (binding.size() != c.num_inputs()) {
      throw StructuralError("copy " + std::to_string(j) + " binds " + std::to_string(binding.size()) +
                            " inputs, circuit has " + std::to_string(c.num_inputs()));
    }
    Wires in;
    for (const auto& src : binding) {
      switch (src.kind) {
        case InputSource::Kind::NewInput:
          if (src.index >= wiring.num_inputs) throw StructuralError("input binding references a missing input");
          in.push_back(b.input(src.index));
          break;
        case InputSource::Kind::Const0: in.push_back(b.zero()); break;
        case InputSource::Kind::Const1: in.push_back(b.one()); break;
      }
    }
    copy_outputs.push_back(b.embed(c, in));
  }
  Wires outs;
  for (const auto& src : wiring.outputs) {
    switch (src.kind) {
      case OutputSource::Kind::OldOutput:
        if (src.copy >= copy_outputs.size() || src.index >= c.num_outputs()) {
          throw StructuralError("output references a missing copy or output");
        }
        outs.push_back(copy_outputs[src.copy][src.index]);
        break;
      case OutputSource::Kind::NewInput:
        if (src.index >= wiring.num_inputs) throw StructuralError("output passthrough references a missing input");
        outs.push_back(b.input(src.index));
        break;
      case OutputSource::Kind::Const0: outs.push_back(b.zero()); break;
      case OutputSource::Kind::Const1: outs.push_back(b.one()); break;
    }
  }
  return b.finish(outs);
}

Wiring compose(const Wiring& first, const Wiring& second, std::size_t old_inputs) {
  // `second` rewires the circuit produced by `first`, whose inputs are
  // first.num_inputs and whose outputs are first.outputs.
  const std::size_t k = first.copies.size();
  Wiring fused;
  fused.num_inputs = second.num_inputs;
  for (std::size_t j2 = 0; j2 < second.copies.size(); ++j2) {
    const auto& outer = second.copies[j2];
    if (outer.size() != first.num_inputs) throw StructuralError("wirings do not compose: input counts differ");
    for (std::size_t j1 = 0; j1 < k; ++j1) {
      const auto& inner = first.copies[j1];
      if (inner.size() != old_inputs) throw StructuralError("wiring copy does not match the circuit's inputs");
      std::vector<InputSource> binding;
      for (const auto& src : inner) {
        if (src.kind != InputSource::Kind::NewInput) {
          binding.push_back(src);
        } else {
          if (src.index >= outer.size()) throw StructuralError("input binding references a missing input");
          binding.push_back(outer[src.index]);
        }
      }
      fused.copies.push_back(std::move(binding));
    }
  }
  for (const auto& src : second.outputs) {
    switch (src.kind) {
      case OutputSource::Kind::OldOutput: {
        if (src.index >= first.outputs.size() || src.copy >= second.copies.size()) {
          throw StructuralError("output references a missing copy or output");
        }
        const auto& mid = first.outputs[src.index];
        switch (mid.kind) {
          case OutputSource::Kind::OldOutput:
            fused.outputs.push_back(OutputSource::old_output(mid.index, src.copy * k + mid.copy));
            break;
          case OutputSource::Kind::NewInput: {
            const auto& bound = second.copies[src.copy].at(mid.index);
            if (bound.kind == InputSource::Kind::NewInput) {
              fused.outputs.push_back(OutputSource::input(bound.index));
            } else {
              fused.outputs.push_back(OutputSource::constant(bound.kind == InputSource::Kind::Const1));
            }
            break;
          }
          default: fused.outputs.push_back(mid); break;
        }
        break;
      }
      default: fused.outputs.push_back(src); break;
    }
  }
  return fused;
}

Circuit pad_outputs(const Circuit& c, std::size_t width) {
  if (width < c.num_outputs()) throw StructuralError("pad_outputs to a narrower width");
  Wiring w = Wiring::identity(c.num_inputs(), c.num_outputs());
  while (w.outputs.size() < width) w.outputs.push_back(OutputSource::constant(false));
  return wire_transform(c, w);
}

Circuit pad_outputs_front(const Circuit& c, std::size_t width) {
  if (width < c.num_outputs()) throw StructuralError("pad_outputs_front to a narrower width");
  Wiring w = Wiring::identity(c.num_inputs(), c.num_outputs());
  std::vector<OutputSource> outs(width - c.num_outputs(), OutputSource::constant(false));
  outs.insert(outs.end(), w.outputs.begin(), w.outputs.end());
  w.outputs = std::move(outs);
  return wire_transform(c, w);
}

Circuit drop_last_output(const Circuit& c) {
  if (c.num_outputs() < 2) throw StructuralError("cannot drop the only output");
  Wiring w = Wiring::identity(c.num_inputs(), c.num_outputs() - 1);
  return wire_transform(c, w);
}

Circuit build_piecewise(std::span<const PiecewiseCase> cases, const Circuit& fallback) {
  const std::size_t n = fallback.num_inputs();
  CircuitBuilder b(n);
  const Wires in = b.inputs();
  Wires result = b.embed(fallback, in);
  for (std::size_t i = cases.size(); i-- > 0;) {
    const auto& c = cases[i];
    if (c.predicate.num_inputs() != n || c.body.num_inputs() != n) {
      throw StructuralError("piecewise case " + std::to_string(i) + " has the wrong input width");
    }
    if (c.predicate.num_outputs() != 1) throw StructuralError("piecewise predicate must have one output");
    if (c.body.num_outputs() != fallback.num_outputs()) {
      throw StructuralError("piecewise body " + std::to_string(i) + " has the wrong output width");
    }
    const Wire sel = b.embed(c.predicate, in)[0];
    const Wires body = b.embed(c.body, in);
    result = gadgets::mux(b, sel, body, result);
  }
  return b.finish(result);
}

Circuit build_modmul(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) throw ValidationError("build_modmul needs a prime p >= 3, got " + std::to_string(p));
  const std::size_t l = ceil_log2(p - 1);
  const std::size_t w = bit_length(p) + 1;
  CircuitBuilder b(2 * l);
  using namespace gadgets;
  auto reduce_once = [&](const Wires& x) {
    Wire ge = b.lnot(less_than_const(b, x, p));
    return mux(b, ge, subtract_const(b, x, p), x);
  };
  // A = a + 1 reduced mod p (a < 2^l < 2p so one subtraction suffices).
  Wires a = add_const(b, zero_extend(b, b.inputs(0, l), w), 1);
  a = reduce_once(a);
  Wires bb = add_const(b, zero_extend(b, b.inputs(l, l), w), 1);
  Wires acc = constant_bits(b, 0, w);
  // Horner over the bits of B = b + 1 (at most l + 1 significant bits).
  for (std::size_t i = w - (l + 1); i < w; ++i) {
    Wires doubled(acc.begin() + 1, acc.end());
    doubled.push_back(b.zero());
    acc = reduce_once(doubled);
    Wires sum = reduce_once(add(b, acc, a));
    acc = mux(b, bb[i], sum, acc);
  }
  Wires out = subtract_const(b, acc, 1);
  return b.finish(std::span<const Wire>(out).subspan(w - l));
}

Circuit from_truth_table(std::size_t num_inputs, std::size_t num_outputs, std::span<const std::uint64_t> table) {
  if (num_inputs == 0 || num_outputs == 0 || num_outputs > 64) throw StructuralError("bad truth-table dimensions");
  if (num_inputs > 20) throw RangeError("truth tables above 20 inputs are not supported");
  if (table.size() != (std::size_t{1} << num_inputs)) throw StructuralError("truth table has the wrong length");
  CircuitBuilder b(num_inputs);
  // Shannon expansion on the most significant input first; identical
  // sub-tables share a wire via memoization on (depth, column bits).
  Wires outs;
  for (std::size_t k = 0; k < num_outputs; ++k) {
    const std::size_t shift = num_outputs - 1 - k;
    std::vector<std::uint8_t> column(table.size());
    for (std::size_t r = 0; r < table.size(); ++r) column[r] = (table[r] >> shift) & 1U;
    std::map<std::pair<std::size_t, std::vector<std::uint8_t>>, Wire> memo;
    auto build = [&](auto&& self, std::size_t depth, std::span<const std::uint8_t> col) -> Wire {
      bool all0 = true;
      bool all1 = true;
      for (auto v : col) {
        all0 = all0 && v == 0;
        all1 = all1 && v == 1;
      }
      if (all0) return b.zero();
      if (all1) return b.one();
      std::vector<std::uint8_t> key(col.begin(), col.end());
      auto it = memo.find({depth, key});
      if (it != memo.end()) return it->second;
      const std::size_t half = col.size() / 2;
      Wire lo = self(self, depth + 1, col.subspan(0, half));
      Wire hi = self(self, depth + 1, col.subspan(half));
      Wire x = b.input(depth);
      Wire out = b.lxor(lo, b.land(x, b.lxor(hi, lo)));
      memo.emplace(std::make_pair(depth, std::move(key)), out);
      return out;
    };
    outs.push_back(build(build, 0, column));
  }
  return b.finish(outs);
}

}  // namespace tfnp
