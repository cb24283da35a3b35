#include <algorithm>
#include <memory>

#include "tfnp/errors.hpp"
#include "tfnp/reductions.hpp"
#include "tfnp/synthesis.hpp"

namespace tfnp {

namespace {

Wires cat(std::span<const Wire> a, std::span<const Wire> b) {
  Wires out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Wires rotl(std::span<const Wire> x) {
  Wires out(x.begin() + 1, x.end());
  out.push_back(x[0]);
  return out;
}

Wires set_last(CircuitBuilder& b, std::span<const Wire> x) {
  Wires out(x.begin(), x.end());
  out.back() = b.one();
  return out;
}

Bitstring bits_of(const Witness& w) { return std::get<Bitstring>(w); }

[[noreturn]] void unsound(const std::string& id, const Solution& sol) {
  throw SoundnessViolation(id + ": target solution " + describe(sol) + " lies in a case the construction rules out");
}

}  // namespace

GroupoidRep shifted_identity_groupoid(std::size_t n, std::uint64_t w, std::uint64_t t) {
  if (n == 0 || n > 62) throw RangeError("identity construction width out of range");
  const std::uint64_t s = std::uint64_t{1} << n;
  if (w >= s || t >= s) throw RangeError("identity construction shift or target out of range");
  const std::uint64_t g = (w + s - 1) % s;
  CircuitBuilder b(2 * n);
  Wires u = b.inputs(0, n);
  Wires v = b.inputs(n, n);
  Wires d = gadgets::subtract_const(b, v, w);
  Wires f0 = gadgets::add_const(b, rotl(d), w);
  Wires f1 = gadgets::add_const(b, set_last(b, d), w);
  Wire eq = gadgets::equal(b, u, v);
  Wire is_g = gadgets::equal_const(b, u, g);
  Wires out = gadgets::mux(b, eq, f0, gadgets::mux(b, is_g, f1, v));
  return GroupoidRep{s, b.finish(out), w, g, t};
}

GroupoidRep dove_groupoid(const Circuit& c) {
  const std::size_t n = c.num_inputs();
  if (n == 0 || c.num_outputs() != n) throw StructuralError("Dove circuit must map n bits to n bits");
  CircuitBuilder b(2 * n);
  Wires x = b.inputs(0, n);
  Wires y = b.inputs(n, n);
  Wire eq = gadgets::equal(b, x, y);
  Wire x_is_g = b.lnot(gadgets::any(b, x));
  Wire mult = b.land(x_is_g, gadgets::any(b, y));
  Wires cx = b.embed(c, x);
  Wires ye = y;
  ye.back() = b.lnot(ye.back());
  Wires cy = b.embed(c, ye);
  Wires out = gadgets::mux(b, eq, cx, gadgets::mux(b, mult, cy, gadgets::bitwise_xor(b, x, y)));
  return GroupoidRep{std::uint64_t{1} << n, b.finish(out), 1, 0, 1};
}

Wires index_function_wires(CircuitBuilder& b, const GroupoidRep& rep, std::span<const Wire> x) {
  const std::size_t l = rep.width();
  if (x.size() != l) throw StructuralError("index function input width mismatch");
  Wires r = gadgets::constant_bits(b, rep.id, l);
  const Wires g = gadgets::constant_bits(b, rep.g, l);
  Wire started = b.zero();
  for (std::size_t i = 0; i < l; ++i) {
    // bd_0 drops leading zeroes except for x = 0, which still squares once.
    Wire active = i + 1 == l ? b.one() : b.lor(started, x[i]);
    Wires sq = b.embed(rep.f, cat(r, r));
    Wires r1 = gadgets::mux(b, active, sq, r);
    Wires m = b.embed(rep.f, cat(g, r1));
    r = gadgets::mux(b, x[i], m, r1);
    started = b.lor(started, x[i]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Collision -> Dove

Reduction red_collision_to_dove(const CollisionInstance& inst) {
  const std::size_t n = inst.c.num_inputs();
  Circuit cp = pad_outputs(inst.c, n - 1);
  CircuitBuilder b(2 * n);
  Wires a = b.embed(cp, b.inputs(0, n));
  Wires c2 = b.embed(cp, b.inputs(n, n));
  Wires out = cat(a, c2);
  out.push_back(b.one());
  out.push_back(b.one());
  Reduction r;
  r.source = Problem::Collision;
  r.target = Problem::Dove;
  r.target_instance = DoveInstance{b.finish(out)};
  r.pull_back = [n](const Solution& sol) -> Solution {
    if (sol.case_no != 3) unsound("collision_to_dove", sol);
    Bitstring x = bits_of(sol.witnesses.at(0));
    Bitstring y = bits_of(sol.witnesses.at(1));
    Bitstring x1 = x.slice(0, n), y1 = y.slice(0, n);
    if (x1 != y1) return make_solution(Problem::Collision, 1, {x1, y1});
    return make_solution(Problem::Collision, 1, {x.slice(n, n), y.slice(n, n)});
  };
  return r;
}

// ---------------------------------------------------------------------------
// Dove -> DLog

namespace {

// Every step's output is C(pre) for the Dove groupoid.
std::uint64_t step_pre(const TraceStep& st, std::uint64_t e) {
  if (st.kind == StepKind::Square || st.right == 0) return st.right;
  return st.right ^ e;
}

struct DovePull {
  Circuit c;
  std::size_t n;
  GroupoidRep rep;

  Bitstring bd(std::uint64_t a) const { return bit_decompose(a, n); }
  Solution dove(int k, std::vector<std::uint64_t> w) const {
    std::vector<Witness> ws;
    for (auto a : w) ws.emplace_back(bd(a));
    return make_solution(Problem::Dove, k, std::move(ws));
  }

  // Two distinct indices with equal I_G values.
  Solution from_equal(std::uint64_t x, std::uint64_t y) const {
    const IndexTrace ta = index_trace(rep, x);
    const IndexTrace tb = index_trace(rep, y);
    for (const IndexTrace* t : {&ta, &tb}) {
      for (const auto& st : t->steps) {
        if (st.out == 0) return dove(1, {step_pre(st, 1)});
      }
    }
    std::size_t ia = ta.steps.size() - 1, ib = tb.steps.size() - 1;
    for (;;) {
      const TraceStep& sa = ta.steps[ia];
      const TraceStep& sb = tb.steps[ib];
      const std::uint64_t pa = step_pre(sa, 1), pb = step_pre(sb, 1);
      if (pa != pb) return dove(3, {pa, pb});
      if (sa.kind == sb.kind && sa.right == sb.right) {
        if (ia == 0 && ib == 0) throw InvariantViolation("dove_to_dlog: distinct indices with identical traces");
        if (ia == 0) return dove(2, {step_pre(tb.steps[ib - 1], 1)});
        if (ib == 0) return dove(2, {step_pre(ta.steps[ia - 1], 1)});
        --ia;
        --ib;
        continue;
      }
      // Same pre, one square and one multiply: the inputs differ in the last bit.
      if (ia == 0 || ib == 0) throw InvariantViolation("dove_to_dlog: mixed step at the start of a trace");
      return dove(4, {step_pre(ta.steps[ia - 1], 1), step_pre(tb.steps[ib - 1], 1)});
    }
  }

  Solution last_pre(int k, std::uint64_t x) const {
    const IndexTrace t = index_trace(rep, x);
    return dove(k, {step_pre(t.steps.back(), 1)});
  }
};

}  // namespace

Reduction red_dove_to_dlog(const DoveInstance& inst) {
  auto ctx = std::make_shared<DovePull>(DovePull{inst.c, inst.c.num_inputs(), dove_groupoid(inst.c)});
  Reduction r;
  r.source = Problem::Dove;
  r.target = Problem::DLog;
  r.target_instance = DLogInstance{ctx->rep};
  r.pull_back = [ctx](const Solution& sol) -> Solution {
    const GroupoidRep& rep = ctx->rep;
    switch (sol.case_no) {
      case 1:
        return ctx->last_pre(2, int_witness(sol, 0));
      case 3:
        return ctx->from_equal(int_witness(sol, 0), int_witness(sol, 1));
      case 4: {
        std::uint64_t x = int_witness(sol, 0), y = int_witness(sol, 1);
        if (index_function(rep, x) == rep.t) return ctx->last_pre(2, x);
        if (index_function(rep, y) == rep.t) return ctx->last_pre(2, y);
        return ctx->from_equal(x, y);
      }
      case 5: {
        std::uint64_t x = int_witness(sol, 0), y = int_witness(sol, 1);
        if (index_function(rep, y) == rep.t) return ctx->last_pre(2, y);
        const IndexTrace tx = index_trace(rep, x), ty = index_trace(rep, y);
        return ctx->dove(4, {step_pre(tx.steps.back(), 1), step_pre(ty.steps.back(), 1)});
      }
      default:
        unsound("dove_to_dlog", sol);
    }
  };
  return r;
}

// ---------------------------------------------------------------------------
// DLog -> General-Claw

namespace {

Solution overflow_solution(const GroupoidRep& rep, std::uint64_t x, const char* who) {
  std::uint64_t left = 0, right = 0;
  if (!first_overflow(rep, index_trace(rep, x), left, right)) {
    throw InvariantViolation(std::string(who) + ": expected an overflowing step in the trace of " + std::to_string(x));
  }
  return make_solution(Problem::DLog, 2, {left, right});
}

}  // namespace

Reduction red_dlog_to_general_claw(const DLogInstance& inst) {
  const GroupoidRep rep = inst.rep;
  const std::size_t l = rep.width();
  const std::size_t n = bit_length(rep.s);

  auto build = [&](bool with_t) {
    CircuitBuilder b(n);
    Wires u = b.inputs();
    Wires x(u.end() - static_cast<std::ptrdiff_t>(l), u.end());
    Wires val = index_function_wires(b, rep, x);
    if (with_t) val = b.embed(rep.f, cat(gadgets::constant_bits(b, rep.t, l), val));
    Wire in_range = gadgets::less_than_const(b, u, rep.s);
    return b.finish(gadgets::mux(b, in_range, gadgets::zero_extend(b, val, n), u));
  };

  Reduction r;
  r.source = Problem::DLog;
  r.target = Problem::GeneralClaw;
  r.target_instance = GeneralClawInstance{build(false), build(true), rep.s};
  r.pull_back = [rep](const Solution& sol) -> Solution {
    const char* who = "dlog_to_general_claw";
    const std::uint64_t s = rep.s;
    auto I = [&](std::uint64_t a) { return index_function(rep, a); };
    auto dlog = [](int k, std::vector<Witness> w) { return make_solution(Problem::DLog, k, std::move(w)); };
    const std::uint64_t x = bit_compose(bits_of(sol.witnesses.at(0)));
    switch (sol.case_no) {
      case 1: {
        const std::uint64_t y = bit_compose(bits_of(sol.witnesses.at(1)));
        const std::uint64_t diff = (x + s - y) % s;
        if (I(diff) == rep.t) return dlog(1, {diff});
        if (I(y) >= s) return overflow_solution(rep, y, who);
        return dlog(5, {x, y});
      }
      case 2: {
        const std::uint64_t y = bit_compose(bits_of(sol.witnesses.at(1)));
        if (x >= s) return overflow_solution(rep, y, who);
        if (y >= s) return overflow_solution(rep, x, who);
        return dlog(3, {x, y});
      }
      case 3: {
        const std::uint64_t y = bit_compose(bits_of(sol.witnesses.at(1)));
        if (x >= s || y >= s) {
          const std::uint64_t in = x >= s ? y : x;
          if (I(in) >= s) return overflow_solution(rep, in, who);
          return dlog(2, {rep.t, I(in)});
        }
        if (I(x) >= s) return overflow_solution(rep, x, who);
        if (I(y) >= s) return overflow_solution(rep, y, who);
        return dlog(4, {x, y});
      }
      case 4:
        return overflow_solution(rep, x, who);
      case 5:
        if (I(x) >= s) return overflow_solution(rep, x, who);
        return dlog(2, {rep.t, I(x)});
      default:
        unsound(who, sol);
    }
  };
  return r;
}

// ---------------------------------------------------------------------------
// General-Claw -> Collision

Reduction red_general_claw_to_collision(const GeneralClawInstance& inst) {
  const std::size_t n = inst.sigma0.num_inputs();
  CircuitBuilder b(n + 1);
  Wires x = b.inputs();
  Wires cur = gadgets::constant_bits(b, 0, n);
  for (std::size_t i = n + 1; i-- > 0;) {
    Wires a = b.embed(inst.sigma0, cur);
    Wires c1 = b.embed(inst.sigma1, cur);
    cur = gadgets::mux(b, x[i], c1, a);
  }
  Reduction r;
  r.source = Problem::GeneralClaw;
  r.target = Problem::Collision;
  r.target_instance = CollisionInstance{b.finish(cur)};
  r.pull_back = [inst, n](const Solution& sol) -> Solution {
    if (sol.case_no != 1) unsound("general_claw_to_collision", sol);
    const std::uint64_t s = inst.s;
    // chain[i] = sigma_{x_i}(chain[i+1]), chain[n+1] = 0^n.
    auto chain_of = [&](const Bitstring& x) {
      std::vector<std::uint64_t> c(n + 2, 0);
      for (std::size_t i = n + 1; i-- > 0;) {
        c[i] = (x[i] ? inst.sigma1 : inst.sigma0).lookup(c[i + 1]);
      }
      return c;
    };
    auto gc = [n](int k, std::vector<std::uint64_t> w) {
      std::vector<Witness> ws;
      for (auto a : w) ws.emplace_back(bit_decompose(a, n));
      return make_solution(Problem::GeneralClaw, k, std::move(ws));
    };
    const Bitstring x = bits_of(sol.witnesses.at(0));
    const Bitstring y = bits_of(sol.witnesses.at(1));
    const auto cx = chain_of(x), cy = chain_of(y);
    // A chain that leaves [s] does so at a largest index j with c[j+1] < s.
    for (auto [bits, c] : {std::make_pair(&x, &cx), std::make_pair(&y, &cy)}) {
      for (std::size_t j = n + 1; j-- > 0;) {
        if ((*c)[j] >= s) return gc((*bits)[j] ? 5 : 4, {(*c)[j + 1]});
      }
    }
    for (std::size_t j = 0; j <= n; ++j) {
      if (x[j] != y[j]) {
        return x[j] ? gc(1, {cy[j + 1], cx[j + 1]}) : gc(1, {cx[j + 1], cy[j + 1]});
      }
      if (cx[j + 1] != cy[j + 1]) return gc(x[j] ? 3 : 2, {cx[j + 1], cy[j + 1]});
    }
    throw InvariantViolation("general_claw_to_collision: equal witnesses in a collision");
  };
  return r;
}

// ---------------------------------------------------------------------------
// Collision -> Claw, Claw -> General-Claw

Reduction red_collision_to_claw(const CollisionInstance& inst) {
  const std::size_t n = inst.c.num_inputs();
  Circuit cp = pad_outputs(inst.c, n - 1);
  auto with_tail = [&](bool bit) {
    CircuitBuilder b(n);
    Wires out = b.embed(cp, b.inputs());
    out.push_back(b.constant(bit));
    return b.finish(out);
  };
  Reduction r;
  r.source = Problem::Collision;
  r.target = Problem::Claw;
  r.target_instance = ClawInstance{with_tail(false), with_tail(true)};
  r.pull_back = [](const Solution& sol) -> Solution {
    if (sol.case_no == 1) unsound("collision_to_claw", sol);
    return make_solution(Problem::Collision, 1, sol.witnesses);
  };
  return r;
}

Reduction red_claw_to_general_claw(const ClawInstance& inst) {
  const std::size_t n = inst.sigma0.num_inputs();
  auto lift = [&](const Circuit& sigma) {
    CircuitBuilder b(n + 1);
    Wire lead = b.input(0);
    Wires rest = b.inputs(1, n);
    Wires img = b.embed(sigma, rest);
    Wires out{lead};
    Wires body = gadgets::mux(b, lead, rest, img);
    out.insert(out.end(), body.begin(), body.end());
    return b.finish(out);
  };
  Reduction r;
  r.source = Problem::Claw;
  r.target = Problem::GeneralClaw;
  r.target_instance = GeneralClawInstance{lift(inst.sigma0), lift(inst.sigma1), std::uint64_t{1} << n};
  r.pull_back = [n](const Solution& sol) -> Solution {
    if (sol.case_no > 3) unsound("claw_to_general_claw", sol);
    std::vector<Witness> ws;
    for (const auto& w : sol.witnesses) {
      const Bitstring& u = std::get<Bitstring>(w);
      if (u[0]) unsound("claw_to_general_claw", sol);
      ws.emplace_back(u.slice(1, n));
    }
    return make_solution(Problem::Claw, sol.case_no, std::move(ws));
  };
  return r;
}

// ---------------------------------------------------------------------------
// Collision <-> Prefix-Collision

Reduction red_collision_to_prefix(const CollisionInstance& inst) {
  Reduction r;
  r.source = Problem::Collision;
  r.target = Problem::PrefixCollision;
  r.target_instance = PrefixCollisionInstance{pad_outputs(inst.c, inst.c.num_inputs())};
  r.pull_back = [](const Solution& sol) { return make_solution(Problem::Collision, 1, sol.witnesses); };
  return r;
}

Reduction red_prefix_to_collision(const PrefixCollisionInstance& inst) {
  Reduction r;
  r.source = Problem::PrefixCollision;
  r.target = Problem::Collision;
  r.target_instance = CollisionInstance{drop_last_output(inst.c)};
  r.pull_back = [](const Solution& sol) { return make_solution(Problem::PrefixCollision, 1, sol.witnesses); };
  return r;
}

}  // namespace tfnp
