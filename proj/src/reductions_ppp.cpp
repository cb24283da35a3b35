#include <memory>

#include "tfnp/errors.hpp"
#include "tfnp/reductions.hpp"
#include "tfnp/synthesis.hpp"

namespace tfnp {

namespace {

[[noreturn]] void unsound(const std::string& id, const Solution& sol) {
  throw SoundnessViolation(id + ": target solution " + describe(sol) + " lies in a case the construction rules out");
}

Solution overflow_index(const GroupoidRep& rep, std::uint64_t x) {
  std::uint64_t left = 0, right = 0;
  if (!first_overflow(rep, index_trace(rep, x), left, right)) {
    throw InvariantViolation("index_to_pigeon: expected an overflowing step in the trace of " + std::to_string(x));
  }
  return make_solution(Problem::Index, 2, {left, right});
}

}  // namespace

// ---------------------------------------------------------------------------
// Pigeon -> Index

GroupoidRep pigeon_index_groupoid(const Circuit& c) {
  const std::size_t n = c.num_inputs();
  if (n == 0 || c.num_outputs() != n) throw StructuralError("Pigeon circuit must map n bits to n bits");
  if (n + 2 > 62) throw RangeError("Pigeon circuit too wide for the Index construction");
  const std::size_t width = n + 2;
  const std::uint64_t s = std::uint64_t{1} << width;
  const std::uint64_t w = std::uint64_t{1} << n;
  const std::uint64_t g = s - 1;

  CircuitBuilder b(2 * width);
  Wires u = b.inputs(0, width);
  Wires v = b.inputs(width, width);
  Wires d = gadgets::subtract_const(b, v, w);
  Wire eq = gadgets::equal(b, u, v);
  Wire is_g = gadgets::equal_const(b, u, g);

  // Case 1: a square on the shifted image of 01v' lands on 11v'.
  Wire c1 = b.land(b.land(eq, b.lnot(is_g)), b.land(b.lnot(d[0]), d[1]));
  Wires o1{b.one(), b.one()};
  o1.insert(o1.end(), d.begin() + 2, d.end());

  // Case 2: shifted rotation.
  Wire c2 = b.land(eq, b.lnot(is_g));
  Wires rot(d.begin() + 1, d.end());
  rot.push_back(d[0]);
  Wires o2 = gadgets::add_const(b, rot, w);

  // Case 3: a multiply on 11v' applies C to v'.
  Wire c3 = b.land(is_g, b.land(v[0], v[1]));
  Wires low(v.begin() + 2, v.end());
  Wires o3{b.zero(), b.zero()};
  Wires cv = b.embed(c, low);
  o3.insert(o3.end(), cv.begin(), cv.end());

  // Case 4: shifted set-last-bit, except on 1...0 patterns.
  Wire c4 = b.land(is_g, b.lnot(b.land(d[0], b.lnot(d.back()))));
  Wires sl = d;
  sl.back() = b.one();
  Wires o4 = gadgets::add_const(b, sl, w);

  Wires out = gadgets::mux(b, c4, o4, v);
  out = gadgets::mux(b, c3, o3, out);
  out = gadgets::mux(b, c2, o2, out);
  out = gadgets::mux(b, c1, o1, out);
  return GroupoidRep{s, b.finish(out), w, g, 0};
}

Reduction red_pigeon_to_index(const PigeonInstance& inst) {
  const std::size_t n = inst.c.num_inputs();
  Reduction r;
  r.source = Problem::Pigeon;
  r.target = Problem::Index;
  r.target_instance = IndexInstance{pigeon_index_groupoid(inst.c)};
  r.pull_back = [n](const Solution& sol) -> Solution {
    const std::uint64_t lo = std::uint64_t{1} << (n + 1);
    const std::uint64_t hi = std::uint64_t{1} << (n + 2);
    // Indices in A_o (odd, upper half) encode the Pigeon inputs.
    auto decode = [&](std::uint64_t a) -> Witness {
      if (a < lo || a >= hi || a % 2 == 0) unsound("pigeon_to_index", sol);
      return bit_decompose((a - 1) / 2 - (std::uint64_t{1} << n), n);
    };
    if (sol.case_no == 1) return make_solution(Problem::Pigeon, 1, {decode(int_witness(sol, 0))});
    if (sol.case_no == 3) {
      return make_solution(Problem::Pigeon, 2, {decode(int_witness(sol, 0)), decode(int_witness(sol, 1))});
    }
    unsound("pigeon_to_index", sol);
  };
  return r;
}

// ---------------------------------------------------------------------------
// Index -> Pigeon

Reduction red_index_to_pigeon(const IndexInstance& inst) {
  const GroupoidRep rep = inst.rep;
  const std::size_t l = rep.width();
  CircuitBuilder b(l);
  Wires x = b.inputs();
  Wires val = index_function_wires(b, rep, x);
  // (I - t) mod s for I < 2^l < 2s: I + s - t lies in [0, 3s).
  Wires acc = gadgets::add_const(b, gadgets::zero_extend(b, val, l + 2), rep.s - rep.t);
  for (int k = 0; k < 2; ++k) {
    Wire ge = b.lnot(gadgets::less_than_const(b, acc, rep.s));
    acc = gadgets::mux(b, ge, gadgets::subtract_const(b, acc, rep.s), acc);
  }
  Wires reduced(acc.begin() + 2, acc.end());
  Wire in_range = gadgets::less_than_const(b, x, rep.s);
  Wires out = gadgets::mux(b, in_range, reduced, x);

  Reduction r;
  r.source = Problem::Index;
  r.target = Problem::Pigeon;
  r.target_instance = PigeonInstance{b.finish(out)};
  r.pull_back = [rep](const Solution& sol) -> Solution {
    auto I = [&](std::uint64_t a) { return index_function(rep, a); };
    const std::uint64_t x = bit_compose(std::get<Bitstring>(sol.witnesses.at(0)));
    if (x >= rep.s) throw InvariantViolation("index_to_pigeon: witness outside [s] cannot solve Pigeon");
    if (sol.case_no == 1) {
      if (I(x) >= rep.s) return overflow_index(rep, x);
      return make_solution(Problem::Index, 1, {x});
    }
    const std::uint64_t y = bit_compose(std::get<Bitstring>(sol.witnesses.at(1)));
    if (y >= rep.s) throw InvariantViolation("index_to_pigeon: witness outside [s] cannot solve Pigeon");
    if (I(x) >= rep.s) return overflow_index(rep, x);
    if (I(y) >= rep.s) return overflow_index(rep, y);
    return make_solution(Problem::Index, 3, {x, y});
  };
  return r;
}

// ---------------------------------------------------------------------------
// DLog_p -> DLog

Reduction red_dlogp_to_dlog(const DLogPInstance& inst) {
  GroupoidRep rep{inst.p - 1, build_modmul(inst.p), 0, inst.g - 1, inst.y - 1};
  Reduction r;
  r.source = Problem::DLogP;
  r.target = Problem::DLog;
  r.target_instance = DLogInstance{rep};
  r.pull_back = [](const Solution& sol) -> Solution {
    if (sol.case_no != 1) unsound("dlogp_to_dlog", sol);
    return make_solution(Problem::DLogP, 1, {int_witness(sol, 0)});
  };
  return r;
}

// ---------------------------------------------------------------------------
// Pigeon -> Blichfeldt

Reduction red_pigeon_to_blichfeldt(const PigeonInstance& inst) {
  const Circuit c = inst.c;
  const std::size_t n = c.num_inputs();
  Reduction r;
  r.source = Problem::Pigeon;
  r.target = Problem::Blichfeldt;
  const Bitstring zero = Bitstring::zeros(n);
  if (c.evaluate(zero).is_zero()) {
    r.direct = make_solution(Problem::Pigeon, 1, {zero});
    return r;
  }
  CircuitBuilder b(n);
  Wires cx = b.embed(c, b.inputs());
  Wires c0 = b.embed(c, gadgets::constant_bits(b, 0, n));
  Wires v = gadgets::mux(b, gadgets::any(b, cx), cx, c0);
  r.target_instance = BlichfeldtInstance{IntMatrix::identity(n, 2), std::uint64_t{1} << n, b.finish(v), 1};
  r.pull_back = [c](const Solution& sol) -> Solution {
    if (sol.case_no != 1) unsound("pigeon_to_blichfeldt", sol);
    const Bitstring& u = std::get<Bitstring>(sol.witnesses.at(0));
    const Bitstring& w = std::get<Bitstring>(sol.witnesses.at(1));
    if (c.evaluate(u).is_zero()) return make_solution(Problem::Pigeon, 1, {u});
    if (c.evaluate(w).is_zero()) return make_solution(Problem::Pigeon, 1, {w});
    return make_solution(Problem::Pigeon, 2, {u, w});
  };
  return r;
}

}  // namespace tfnp
