#include "tfnp/generators.hpp"

#include <algorithm>
#include <numeric>

#include "tfnp/errors.hpp"
#include "tfnp/lattice.hpp"
#include "tfnp/numtheory.hpp"
#include "tfnp/reductions.hpp"
#include "tfnp/synthesis.hpp"

namespace tfnp {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw RangeError("Rng::below needs a positive bound");
  return next() % bound;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t item) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (item + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Circuit random_circuit(Rng& rng, const CircuitSpec& spec) {
  if (spec.inputs == 0 || spec.outputs == 0) throw RangeError("random circuit needs inputs and outputs");
  const std::size_t max_depth = std::max<std::size_t>(spec.depth, 1);
  std::vector<Gate> gates(spec.inputs, Gate{Op::Input, 0, 0});
  std::vector<std::size_t> depth(spec.inputs, 0);
  std::vector<Wire> eligible(spec.inputs);
  std::iota(eligible.begin(), eligible.end(), Wire{0});
  static constexpr Op kOps[] = {Op::Not, Op::And, Op::Or, Op::Xor};
  for (std::size_t i = 0; i < spec.gates; ++i) {
    const Op op = kOps[rng.below(4)];
    const Wire a = eligible[rng.below(eligible.size())];
    const Wire b = op == Op::Not ? 0 : eligible[rng.below(eligible.size())];
    const std::size_t d = 1 + std::max(depth[a], op == Op::Not ? 0 : depth[b]);
    const auto id = static_cast<Wire>(gates.size());
    gates.push_back(Gate{op, a, b});
    depth.push_back(d);
    if (d < max_depth) eligible.push_back(id);
  }
  Wires outputs(spec.outputs);
  for (auto& w : outputs) w = static_cast<Wire>(rng.below(gates.size()));
  return Circuit(spec.inputs, std::move(gates), std::move(outputs));
}

Circuit random_table_circuit(Rng& rng, std::size_t inputs, std::size_t outputs) {
  if (inputs > 20 || outputs > 63) throw RangeError("random table circuit too large");
  std::vector<std::uint64_t> table(std::size_t{1} << inputs);
  for (auto& v : table) v = rng.below(std::uint64_t{1} << outputs);
  return from_truth_table(inputs, outputs, table);
}

Circuit random_permutation_circuit(Rng& rng, std::size_t n) {
  if (n > 20) throw RangeError("random permutation circuit too large");
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  std::iota(table.begin(), table.end(), std::uint64_t{0});
  for (std::size_t i = table.size(); i > 1; --i) std::swap(table[i - 1], table[rng.below(i)]);
  return from_truth_table(n, n, table);
}

DLogPInstance make_dlogp(std::uint64_t p, std::uint64_t g, std::uint64_t y) {
  return DLogPInstance{p, factorize(p - 1), g, y};
}

namespace {

Circuit some_circuit(Rng& rng, const GenOptions& o, std::size_t in, std::size_t out) {
  const std::size_t gates = o.gates != 0 ? o.gates : 4 * (in + out);
  if (in <= 12 && rng.below(3) == 0) return random_table_circuit(rng, in, out);
  return random_circuit(rng, CircuitSpec{in, out, gates, o.depth});
}

GroupoidRep random_groupoid(Rng& rng, const GenOptions& o) {
  const std::size_t n = std::max<std::size_t>(o.n, 1);
  const std::uint64_t full = std::uint64_t{1} << n;
  const std::uint64_t s = n == 1 ? 2 : rng.between(full / 2 + 1, full);
  const std::size_t l = ceil_log2(s);
  switch (rng.below(5)) {
    case 0: {
      // Cyclic group Z_s written additively.
      std::vector<std::uint64_t> table(std::size_t{1} << (2 * l));
      for (std::uint64_t x = 0; x < (std::uint64_t{1} << l); ++x) {
        for (std::uint64_t y = 0; y < (std::uint64_t{1} << l); ++y) table[(x << l) | y] = (x + y) % s;
      }
      return GroupoidRep{s, from_truth_table(2 * l, l, table), 0, rng.below(s), rng.below(s)};
    }
    case 1:
      return shifted_identity_groupoid(n, rng.below(full), rng.below(full));
    case 2: {
      Rng sub(rng.next());
      return dove_groupoid(some_circuit(sub, o, n, n));
    }
    case 3:
      return GroupoidRep{s, random_circuit(rng, CircuitSpec{2 * l, l, o.gates != 0 ? o.gates : 6 * l, o.depth}),
                         rng.below(s), rng.below(s), rng.below(s)};
    default: {
      // Random table, mostly closed on [s].
      std::vector<std::uint64_t> table(std::size_t{1} << (2 * l));
      for (auto& v : table) v = rng.below(4) == 0 ? rng.below(std::uint64_t{1} << l) : rng.below(s);
      return GroupoidRep{s, from_truth_table(2 * l, l, table), rng.below(s), rng.below(s), rng.below(s)};
    }
  }
}

DLogPInstance random_dlogp(Rng& rng, const GenOptions& o) {
  const std::uint64_t hi = std::max<std::uint64_t>(5, std::uint64_t{1} << std::min<std::size_t>(o.n + 1, 20));
  std::vector<std::uint64_t> primes;
  for (std::uint64_t q = 3; q <= hi; q += 2) {
    if (is_prime(q)) primes.push_back(q);
  }
  const std::uint64_t p = primes[rng.below(primes.size())];
  const auto factors = factorize(p - 1);
  std::uint64_t g = 0;
  do {
    g = rng.between(1, p - 1);
  } while (generator_witness(p, factors, g).has_value());
  return DLogPInstance{p, factors, g, rng.between(1, p - 1)};
}

BlichfeldtInstance random_blichfeldt(Rng& rng, const GenOptions& o) {
  const std::size_t n = std::max<std::size_t>(o.n, 1);
  const std::size_t dim = 1 + rng.below(std::min<std::size_t>(n, 3));
  IntMatrix basis;
  std::int64_t det = 0;
  do {
    basis = IntMatrix{dim, std::vector<std::int64_t>(dim * dim)};
    for (auto& e : basis.entries) e = static_cast<std::int64_t>(rng.below(5)) - 2;
    det = det_exact(basis);
  } while (det == 0 || static_cast<std::uint64_t>(std::llabs(det)) > (std::uint64_t{1} << n));
  const std::uint64_t s = std::max<std::uint64_t>(2, std::llabs(det)) + rng.below(std::uint64_t{1} << n);
  const std::size_t width = 1 + rng.below(3);
  const std::size_t k = ceil_log2(s);
  return BlichfeldtInstance{basis, s, some_circuit(rng, o, k, dim * width), width};
}

}  // namespace

Instance generate_instance(Problem p, Rng& rng, const GenOptions& o) {
  const std::size_t n = std::max<std::size_t>(o.n, 1);
  switch (p) {
    case Problem::Pigeon:
      if (n <= 12 && rng.below(4) == 0) return PigeonInstance{random_permutation_circuit(rng, n)};
      return PigeonInstance{some_circuit(rng, o, n, n)};
    case Problem::Collision: {
      const std::size_t in = std::max<std::size_t>(n, 2);
      return CollisionInstance{some_circuit(rng, o, in, rng.between(1, in - 1))};
    }
    case Problem::PrefixCollision: {
      const std::size_t in = std::max<std::size_t>(n, 2);
      return PrefixCollisionInstance{some_circuit(rng, o, in, in)};
    }
    case Problem::Dove:
      if (n <= 12 && rng.below(4) == 0) return DoveInstance{random_permutation_circuit(rng, n)};
      return DoveInstance{some_circuit(rng, o, n, n)};
    case Problem::Claw: {
      Circuit a = some_circuit(rng, o, n, n);
      return ClawInstance{a, some_circuit(rng, o, n, n)};
    }
    case Problem::GeneralClaw: {
      const std::size_t in = std::max<std::size_t>(n, 2);
      Circuit a = some_circuit(rng, o, in, in);
      Circuit b = some_circuit(rng, o, in, in);
      return GeneralClawInstance{a, b, rng.between(1, (std::uint64_t{1} << in) - 1)};
    }
    case Problem::DLog:
      return DLogInstance{random_groupoid(rng, o)};
    case Problem::Index:
      return IndexInstance{random_groupoid(rng, o)};
    case Problem::DLogP:
      return random_dlogp(rng, o);
    case Problem::Blichfeldt:
      return random_blichfeldt(rng, o);
  }
  throw StructuralError("unknown problem");
}

}  // namespace tfnp
