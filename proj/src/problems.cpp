#include "tfnp/problems.hpp"

#include <cstdlib>
#include <sstream>

#include "tfnp/errors.hpp"
#include "tfnp/numtheory.hpp"

namespace tfnp {

namespace {

constexpr std::string_view kNames[] = {"pigeon", "collision", "prefix_collision", "dove",  "claw",
                                       "general_claw", "dlog", "index", "dlogp", "blichfeldt"};

Bitstring eval(const Circuit& c, const Bitstring& x) {
  if (c.num_inputs() <= 64 && c.num_outputs() <= 64) {
    return bit_decompose(c.lookup(bit_compose(x)), c.num_outputs());
  }
  return c.evaluate(x);
}

Verdict accept(int case_no) { return Verdict{true, case_no, {}}; }
Verdict reject(int case_no, std::string reason) { return Verdict{false, case_no, std::move(reason)}; }

// Checks arity and witness kinds before any predicate runs.
bool shape_ok(const Solution& sol, std::size_t count, bool bits, std::size_t width, std::string& why) {
  if (sol.witnesses.size() != count) {
    why = "case " + std::to_string(sol.case_no) + " needs " + std::to_string(count) + " witness(es)";
    return false;
  }
  for (const auto& w : sol.witnesses) {
    if (bits) {
      const auto* b = std::get_if<Bitstring>(&w);
      if (b == nullptr) {
        why = "witness must be a bitstring";
        return false;
      }
      if (b->width() != width) {
        why = "witness width " + std::to_string(b->width()) + " differs from " + std::to_string(width);
        return false;
      }
    } else if (!std::holds_alternative<std::uint64_t>(w)) {
      why = "witness must be an integer";
      return false;
    }
  }
  return true;
}

Verdict verify_pigeonlike(const Circuit& c, const Solution& sol, Problem p) {
  const int k = sol.case_no;
  const std::size_t n = c.num_inputs();
  std::string why;
  auto single = [&]() { return shape_ok(sol, 1, true, n, why); };
  auto pair = [&]() { return shape_ok(sol, 2, true, n, why); };
  const Bitstring zero = Bitstring::zeros(c.num_outputs());
  const Bitstring unit = Bitstring::unit(c.num_outputs());
  switch (p) {
    case Problem::Pigeon:
      if (k == 1) {
        if (!single()) return reject(k, why);
        return eval(c, bits_witness(sol, 0)) == zero ? accept(k) : reject(k, "C(u) is not 0^n");
      }
      if (k == 2) {
        if (!pair()) return reject(k, why);
        if (bits_witness(sol, 0) == bits_witness(sol, 1)) return reject(k, "u and v are not distinct");
        return eval(c, bits_witness(sol, 0)) == eval(c, bits_witness(sol, 1)) ? accept(k)
                                                                             : reject(k, "C(u) != C(v)");
      }
      break;
    case Problem::Collision:
      if (k == 1) {
        if (!pair()) return reject(k, why);
        if (bits_witness(sol, 0) == bits_witness(sol, 1)) return reject(k, "u and v are not distinct");
        return eval(c, bits_witness(sol, 0)) == eval(c, bits_witness(sol, 1)) ? accept(k)
                                                                             : reject(k, "C(u) != C(v)");
      }
      break;
    case Problem::PrefixCollision:
      if (k == 1) {
        if (!pair()) return reject(k, why);
        if (bits_witness(sol, 0) == bits_witness(sol, 1)) return reject(k, "u and v are not distinct");
        const Bitstring a = eval(c, bits_witness(sol, 0));
        const Bitstring b = eval(c, bits_witness(sol, 1));
        const std::size_t m = a.width() - 1;
        return a.slice(0, m) == b.slice(0, m) ? accept(k) : reject(k, "outputs differ before the last bit");
      }
      break;
    case Problem::Dove:
      if (k == 1 || k == 2) {
        if (!single()) return reject(k, why);
        const Bitstring out = eval(c, bits_witness(sol, 0));
        if (k == 1) return out == zero ? accept(k) : reject(k, "C(u) is not 0^n");
        return out == unit ? accept(k) : reject(k, "C(u) is not 0^{n-1}1");
      }
      if (k == 3 || k == 4) {
        if (!pair()) return reject(k, why);
        if (bits_witness(sol, 0) == bits_witness(sol, 1)) return reject(k, "u and v are not distinct");
        const Bitstring a = eval(c, bits_witness(sol, 0));
        const Bitstring b = eval(c, bits_witness(sol, 1));
        if (k == 3) return a == b ? accept(k) : reject(k, "C(u) != C(v)");
        return a == (b ^ unit) ? accept(k) : reject(k, "C(u) != C(v) xor 0^{n-1}1");
      }
      break;
    default: break;
  }
  return reject(k, "no such case");
}

Verdict verify_claw(const Circuit& s0, const Circuit& s1, std::uint64_t s, bool general, const Solution& sol) {
  const int k = sol.case_no;
  const std::size_t n = s0.num_inputs();
  std::string why;
  auto below = [&](const Bitstring& u) { return bit_compose(u) < s; };
  if (k == 1 || k == 2 || k == 3) {
    if (!shape_ok(sol, 2, true, n, why)) return reject(k, why);
    const Bitstring& u = bits_witness(sol, 0);
    const Bitstring& v = bits_witness(sol, 1);
    if (k == 1) {
      if (general && (!below(u) || !below(v))) return reject(k, "claw witnesses must satisfy bc(.) < s");
      return eval(s0, u) == eval(s1, v) ? accept(k) : reject(k, "sigma0(u) != sigma1(v)");
    }
    if (u == v) return reject(k, "u and v are not distinct");
    const Circuit& c = k == 2 ? s0 : s1;
    return eval(c, u) == eval(c, v) ? accept(k) : reject(k, "no collision");
  }
  if (general && (k == 4 || k == 5)) {
    if (!shape_ok(sol, 1, true, n, why)) return reject(k, why);
    const Bitstring& u = bits_witness(sol, 0);
    if (!below(u)) return reject(k, "bc(u) must be < s");
    const Circuit& c = k == 4 ? s0 : s1;
    return bit_compose(eval(c, u)) >= s ? accept(k) : reject(k, "output is below s");
  }
  return reject(k, "no such case");
}

Verdict verify_groupoid(const GroupoidRep& rep, bool index, const Solution& sol, const VerifyOptions& opts) {
  const int k = sol.case_no;
  std::string why;
  const std::size_t count = (k == 1) ? 1 : 2;
  if (k < 1 || k > (index ? 3 : 5)) return reject(k, "no such case");
  if (!shape_ok(sol, count, false, 0, why)) return reject(k, why);
  for (const auto& w : sol.witnesses) {
    if (std::get<std::uint64_t>(w) >= rep.s) return reject(k, "witness outside [s]");
  }
  const std::uint64_t x = int_witness(sol, 0);
  if (k == 1) return index_function(rep, x) == rep.t ? accept(k) : reject(k, "I_G(x) != t");
  const std::uint64_t y = int_witness(sol, 1);
  if (k == 2) {
    if (index && opts.strict_index_distinct && x == y) return reject(k, "x and y are not distinct (strict mode)");
    return groupoid_op(rep, x, y) >= rep.s ? accept(k) : reject(k, "f_G(x,y) < s");
  }
  if (k == 3) {
    if (x == y) return reject(k, "x and y are not distinct");
    return index_function(rep, x) == index_function(rep, y) ? accept(k) : reject(k, "I_G(x) != I_G(y)");
  }
  const std::uint64_t ix = index_function(rep, x);
  const std::uint64_t iy = index_function(rep, y);
  if (k == 4) {
    if (x == y) return reject(k, "x and y are not distinct");
    if (ix >= rep.s || iy >= rep.s) return reject(k, "I_G value outside [s] cannot be an operand of f_G");
    return groupoid_op(rep, rep.t, ix) == groupoid_op(rep, rep.t, iy) ? accept(k)
                                                                      : reject(k, "f_G(t,I_G(x)) != f_G(t,I_G(y))");
  }
  if (iy >= rep.s) return reject(k, "I_G(y) outside [s] cannot be an operand of f_G");
  if (ix != groupoid_op(rep, rep.t, iy)) return reject(k, "I_G(x) != f_G(t, I_G(y))");
  const std::uint64_t diff = (x + rep.s - y) % rep.s;
  return index_function(rep, diff) != rep.t ? accept(k) : reject(k, "I_G(x-y mod s) = t");
}

Verdict verify_blichfeldt(const BlichfeldtInstance& inst, const Solution& sol) {
  const int k = sol.case_no;
  std::string why;
  const std::size_t kin = inst.v.num_inputs();
  if (k == 1) {
    if (!shape_ok(sol, 2, true, kin, why)) return reject(k, why);
    if (bits_witness(sol, 0) == bits_witness(sol, 1)) return reject(k, "u and v are not distinct");
    return eval(inst.v, bits_witness(sol, 0)) == eval(inst.v, bits_witness(sol, 1)) ? accept(k)
                                                                                   : reject(k, "V(u) != V(v)");
  }
  if (k == 2 || k == 3) {
    if (!shape_ok(sol, k == 2 ? 1 : 2, false, 0, why)) return reject(k, why);
    for (const auto& w : sol.witnesses) {
      if (std::get<std::uint64_t>(w) >= inst.s) return reject(k, "index outside [s]");
    }
    auto vec = [&](std::uint64_t i) { return blichfeldt_vector(inst, inst.v.lookup(i)); };
    const auto x = vec(int_witness(sol, 0));
    if (k == 2) return lattice_member(inst.basis, x) ? accept(k) : reject(k, "vector is not in L(B)");
    const auto y = vec(int_witness(sol, 1));
    if (x == y) return reject(k, "vectors are not distinct");
    std::vector<std::int64_t> d(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) d[i] = x[i] - y[i];
    return lattice_member(inst.basis, d) ? accept(k) : reject(k, "difference is not in L(B)");
  }
  return reject(k, "no such case");
}

}  // namespace

std::string_view problem_name(Problem p) noexcept { return kNames[static_cast<std::size_t>(p)]; }

Problem problem_from_name(std::string_view name) {
  for (Problem p : kAllProblems) {
    if (problem_name(p) == name) return p;
  }
  throw ParseError("problem", "unknown problem '" + std::string(name) + "'");
}

int case_count(Problem p) noexcept {
  switch (p) {
    case Problem::Pigeon: return 2;
    case Problem::Collision:
    case Problem::PrefixCollision:
    case Problem::DLogP: return 1;
    case Problem::Dove: return 4;
    case Problem::Claw:
    case Problem::Index:
    case Problem::Blichfeldt: return 3;
    case Problem::GeneralClaw:
    case Problem::DLog: return 5;
  }
  return 0;
}

Problem problem_of(const Instance& inst) noexcept { return static_cast<Problem>(inst.index()); }

Solution make_solution(Problem p, int case_no, std::vector<Witness> witnesses) {
  return Solution{p, case_no, std::move(witnesses)};
}

std::string describe(const Solution& sol) {
  std::ostringstream os;
  os << problem_name(sol.problem) << " case " << sol.case_no << " (";
  for (std::size_t i = 0; i < sol.witnesses.size(); ++i) {
    if (i) os << ", ";
    if (const auto* b = std::get_if<Bitstring>(&sol.witnesses[i])) {
      os << '"' << b->str() << '"';
    } else {
      os << std::get<std::uint64_t>(sol.witnesses[i]);
    }
  }
  os << ')';
  return os.str();
}

const Bitstring& bits_witness(const Solution& sol, std::size_t i) {
  if (i >= sol.witnesses.size()) throw StructuralError("missing witness " + std::to_string(i));
  const auto* b = std::get_if<Bitstring>(&sol.witnesses[i]);
  if (b == nullptr) throw StructuralError("witness " + std::to_string(i) + " is not a bitstring");
  return *b;
}

std::uint64_t int_witness(const Solution& sol, std::size_t i) {
  if (i >= sol.witnesses.size()) throw StructuralError("missing witness " + std::to_string(i));
  const auto* v = std::get_if<std::uint64_t>(&sol.witnesses[i]);
  if (v == nullptr) throw StructuralError("witness " + std::to_string(i) + " is not an integer");
  return *v;
}

Verdict verify(const Instance& inst, const Solution& sol, const VerifyOptions& opts) {
  const Problem p = problem_of(inst);
  if (p != sol.problem) {
    throw StructuralError("solution for " + std::string(problem_name(sol.problem)) + " given to a " +
                          std::string(problem_name(p)) + " instance");
  }
  return std::visit(
      [&](const auto& in) -> Verdict {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, PigeonInstance> || std::is_same_v<T, CollisionInstance> ||
                      std::is_same_v<T, PrefixCollisionInstance> || std::is_same_v<T, DoveInstance>) {
          return verify_pigeonlike(in.c, sol, p);
        } else if constexpr (std::is_same_v<T, ClawInstance>) {
          return verify_claw(in.sigma0, in.sigma1, 0, false, sol);
        } else if constexpr (std::is_same_v<T, GeneralClawInstance>) {
          return verify_claw(in.sigma0, in.sigma1, in.s, true, sol);
        } else if constexpr (std::is_same_v<T, DLogInstance>) {
          return verify_groupoid(in.rep, false, sol, opts);
        } else if constexpr (std::is_same_v<T, IndexInstance>) {
          return verify_groupoid(in.rep, true, sol, opts);
        } else if constexpr (std::is_same_v<T, DLogPInstance>) {
          std::string why;
          if (sol.case_no != 1) return reject(sol.case_no, "no such case");
          if (!shape_ok(sol, 1, false, 0, why)) return reject(1, why);
          const std::uint64_t x = int_witness(sol, 0);
          if (x > in.p - 2) return reject(1, "x outside {0..p-2}");
          return pow_mod(in.g, x, in.p) == in.y % in.p ? accept(1) : reject(1, "g^x != y");
        } else {
          return verify_blichfeldt(in, sol);
        }
      },
      inst);
}

namespace {

void check_square(const Circuit& c, std::vector<std::string>& out, const std::string& name) {
  if (c.num_inputs() != c.num_outputs()) out.push_back(name + " must have as many outputs as inputs");
  if (c.num_inputs() > 64) out.push_back(name + " has more than 64 inputs");
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& inst) {
  std::vector<std::string> out;
  std::visit(
      [&](const auto& in) {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, PigeonInstance> || std::is_same_v<T, DoveInstance>) {
          check_square(in.c, out, "C");
        } else if constexpr (std::is_same_v<T, PrefixCollisionInstance>) {
          check_square(in.c, out, "C");
          if (in.c.num_inputs() < 2) out.push_back("prefix collision needs n >= 2");
        } else if constexpr (std::is_same_v<T, CollisionInstance>) {
          if (in.c.num_outputs() >= in.c.num_inputs()) out.push_back("collision needs m < n");
          if (in.c.num_inputs() > 64) out.push_back("C has more than 64 inputs");
        } else if constexpr (std::is_same_v<T, ClawInstance> || std::is_same_v<T, GeneralClawInstance>) {
          check_square(in.sigma0, out, "sigma0");
          check_square(in.sigma1, out, "sigma1");
          if (in.sigma0.num_inputs() != in.sigma1.num_inputs()) out.push_back("sigma0 and sigma1 widths differ");
          if constexpr (std::is_same_v<T, GeneralClawInstance>) {
            const std::size_t n = in.sigma0.num_inputs();
            if (in.s < 1 || (n < 64 && in.s >= (std::uint64_t{1} << n))) out.push_back("s must satisfy 1 <= s < 2^n");
          }
        } else if constexpr (std::is_same_v<T, DLogInstance> || std::is_same_v<T, IndexInstance>) {
          out = groupoid_violations(in.rep);
        } else if constexpr (std::is_same_v<T, DLogPInstance>) {
          if (in.p < 3 || !is_prime(in.p)) {
            out.push_back("p must be an odd prime");
            return;
          }
          std::uint64_t product = 1;
          bool overflow = false;
          for (std::size_t i = 0; i < in.factors.size(); ++i) {
            const auto& [q, k] = in.factors[i];
            if (!is_prime(q)) out.push_back("factor " + std::to_string(q) + " is not prime");
            if (q == in.p) out.push_back("factor primes must differ from p");
            for (std::size_t j = 0; j < i; ++j) {
              if (in.factors[j].first == q) out.push_back("factor primes must be distinct");
            }
            if (k == 0) out.push_back("exponents must be positive");
            for (std::uint64_t e = 0; e < k && !overflow; ++e) {
              if (__builtin_mul_overflow(product, q, &product)) overflow = true;
            }
          }
          if (overflow || product != in.p - 1) out.push_back("p - 1 is not the product of the listed prime powers");
          if (in.g == 0 || in.g >= in.p) out.push_back("g must lie in Z_p^*");
          if (in.y == 0 || in.y >= in.p) out.push_back("y must lie in Z_p^*");
          if (out.empty()) {
            if (auto q = generator_witness(in.p, in.factors, in.g)) {
              out.push_back("g^((p-1)/" + std::to_string(*q) + ") = 1, so g is not a generator");
            }
          }
        } else {
          const std::size_t n = in.basis.n;
          if (n == 0) {
            out.push_back("basis must be nonempty");
            return;
          }
          if (in.s < 2) out.push_back("s must be at least 2");
          try {
            const std::int64_t d = det_exact(in.basis);
            if (d == 0) out.push_back("basis is singular");
            if (static_cast<std::uint64_t>(std::llabs(d)) > in.s) out.push_back("s must be at least |det(B)|");
          } catch (const RangeError& e) {
            out.push_back(e.what());
          }
          if (in.coord_width == 0 || in.coord_width > 62) out.push_back("coordinate width must be in 1..62");
          if (in.s >= 2 && in.v.num_inputs() != ceil_log2(in.s)) out.push_back("V must have ceil(log s) inputs");
          if (in.v.num_outputs() != n * in.coord_width) out.push_back("V must have n * coord_width outputs");
        }
      },
      inst);
  return out;
}

std::vector<std::int64_t> blichfeldt_vector(const BlichfeldtInstance& inst, std::uint64_t word) {
  const std::size_t n = inst.basis.n;
  const std::size_t m = inst.coord_width;
  std::vector<std::int64_t> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t shift = (n - 1 - i) * m;
    v[i] = static_cast<std::int64_t>((word >> shift) & ((std::uint64_t{1} << m) - 1));
  }
  return v;
}

std::size_t instance_gates(const Instance& inst) {
  return std::visit(
      [](const auto& in) -> std::size_t {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, ClawInstance> || std::is_same_v<T, GeneralClawInstance>) {
          return in.sigma0.size() + in.sigma1.size();
        } else if constexpr (std::is_same_v<T, DLogInstance> || std::is_same_v<T, IndexInstance>) {
          return in.rep.f.size();
        } else if constexpr (std::is_same_v<T, DLogPInstance>) {
          return 0;
        } else if constexpr (std::is_same_v<T, BlichfeldtInstance>) {
          return in.v.size();
        } else {
          return in.c.size();
        }
      },
      inst);
}

std::size_t instance_width(const Instance& inst) {
  return std::visit(
      [](const auto& in) -> std::size_t {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, ClawInstance> || std::is_same_v<T, GeneralClawInstance>) {
          return in.sigma0.num_inputs();
        } else if constexpr (std::is_same_v<T, DLogInstance> || std::is_same_v<T, IndexInstance>) {
          return in.rep.width();
        } else if constexpr (std::is_same_v<T, DLogPInstance>) {
          return bit_length(in.p);
        } else if constexpr (std::is_same_v<T, BlichfeldtInstance>) {
          return in.v.num_inputs();
        } else {
          return in.c.num_inputs();
        }
      },
      inst);
}

}  // namespace tfnp
