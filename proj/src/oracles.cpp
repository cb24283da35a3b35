#include "tfnp/oracles.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <unordered_map>

#include "tfnp/errors.hpp"
#include "tfnp/numtheory.hpp"

namespace tfnp {

namespace {

constexpr std::size_t kMaxDomainBits = 20;
constexpr std::uint64_t kMaxPairScan = std::uint64_t{1} << 28;

using Groups = std::unordered_map<std::uint64_t, std::vector<std::uint64_t>>;

class Collector {
 public:
  Collector(Problem p, const EnumerateOptions& opts) : problem_(p), opts_(opts) {}

  bool wants(int case_no) const { return !full() && (opts_.only_case == 0 || opts_.only_case == case_no); }
  bool full() const { return out_.size() >= opts_.limit; }

  void add(int case_no, std::vector<Witness> w) { out_.push_back(make_solution(problem_, case_no, std::move(w))); }

  std::vector<Solution> take() { return std::move(out_); }

 private:
  Problem problem_;
  const EnumerateOptions& opts_;
  std::vector<Solution> out_;
};

const std::vector<std::uint64_t>& table_of(const Circuit& c) {
  if (c.num_inputs() > kMaxDomainBits) {
    throw RangeError("exhaustive search over " + std::to_string(c.num_inputs()) + " input bits is not supported");
  }
  return c.table();
}

Groups group_by(const std::vector<std::uint64_t>& values, std::uint64_t domain) {
  Groups g;
  for (std::uint64_t x = 0; x < domain; ++x) g[values[x]].push_back(x);
  return g;
}

Witness bits(std::uint64_t v, std::size_t width) { return bit_decompose(v, width); }

// Ordered pairs (u, v), u != v, with equal values, u ascending then v.
template <class Emit>
void equal_pairs(const std::vector<std::uint64_t>& values, std::uint64_t domain, Collector& col, Emit emit) {
  const Groups g = group_by(values, domain);
  for (std::uint64_t u = 0; u < domain && !col.full(); ++u) {
    const auto& grp = g.at(values[u]);
    if (grp.size() < 2) continue;
    for (std::uint64_t v : grp) {
      if (col.full()) return;
      if (v != u) emit(u, v);
    }
  }
}

void circuit_problem(const Circuit& c, Problem p, Collector& col) {
  const auto& t = table_of(c);
  const std::size_t n = c.num_inputs();
  const std::uint64_t domain = std::uint64_t{1} << n;
  auto single = [&](int k, std::uint64_t target) {
    if (!col.wants(k)) return;
    for (std::uint64_t u = 0; u < domain && !col.full(); ++u) {
      if (t[u] == target) col.add(k, {bits(u, n)});
    }
  };
  auto collisions = [&](int k, const std::vector<std::uint64_t>& values) {
    if (!col.wants(k)) return;
    equal_pairs(values, domain, col, [&](std::uint64_t u, std::uint64_t v) { col.add(k, {bits(u, n), bits(v, n)}); });
  };
  switch (p) {
    case Problem::Pigeon:
      single(1, 0);
      collisions(2, t);
      break;
    case Problem::Collision: collisions(1, t); break;
    case Problem::PrefixCollision: {
      std::vector<std::uint64_t> prefix(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) prefix[i] = t[i] >> 1;
      collisions(1, prefix);
      break;
    }
    case Problem::Dove: {
      single(1, 0);
      single(2, 1);
      collisions(3, t);
      if (col.wants(4)) {
        const Groups g = group_by(t, domain);
        for (std::uint64_t u = 0; u < domain && !col.full(); ++u) {
          auto it = g.find(t[u] ^ 1U);
          if (it == g.end()) continue;
          for (std::uint64_t v : it->second) {
            if (col.full()) break;
            col.add(4, {bits(u, n), bits(v, n)});
          }
        }
      }
      break;
    }
    default: throw StructuralError("not a single-circuit problem");
  }
}

void claw_problem(const Circuit& s0, const Circuit& s1, std::uint64_t s, bool general, Collector& col) {
  const auto& t0 = table_of(s0);
  const auto& t1 = table_of(s1);
  const std::size_t n = s0.num_inputs();
  const std::uint64_t domain = std::uint64_t{1} << n;
  const std::uint64_t bound = general ? s : domain;
  const Problem p = general ? Problem::GeneralClaw : Problem::Claw;
  (void)p;
  if (col.wants(1)) {
    Groups g1;
    for (std::uint64_t v = 0; v < bound; ++v) g1[t1[v]].push_back(v);
    for (std::uint64_t u = 0; u < bound && !col.full(); ++u) {
      auto it = g1.find(t0[u]);
      if (it == g1.end()) continue;
      for (std::uint64_t v : it->second) {
        if (col.full()) break;
        col.add(1, {bits(u, n), bits(v, n)});
      }
    }
  }
  for (int k : {2, 3}) {
    if (!col.wants(k)) continue;
    equal_pairs(k == 2 ? t0 : t1, domain, col,
                [&](std::uint64_t u, std::uint64_t v) { col.add(k, {bits(u, n), bits(v, n)}); });
  }
  if (!general) return;
  for (int k : {4, 5}) {
    if (!col.wants(k)) continue;
    const auto& t = k == 4 ? t0 : t1;
    for (std::uint64_t u = 0; u < s && !col.full(); ++u) {
      if (t[u] >= s) col.add(k, {bits(u, n)});
    }
  }
}

void groupoid_problem(const GroupoidRep& rep, bool index, const VerifyOptions& vopts, Collector& col) {
  if (rep.s > (std::uint64_t{1} << kMaxDomainBits)) throw RangeError("exhaustive search needs s <= 2^20");
  const std::uint64_t s = rep.s;
  const std::vector<std::uint64_t> I = index_table(rep);
  if (col.wants(1)) {
    for (std::uint64_t x = 0; x < s && !col.full(); ++x) {
      if (I[x] == rep.t) col.add(1, {x});
    }
  }
  if (col.wants(2)) {
    if (s * s > kMaxPairScan) throw RangeError("scanning f_G over [s]^2 is intractable for this s");
    const bool distinct = index && vopts.strict_index_distinct;
    for (std::uint64_t x = 0; x < s && !col.full(); ++x) {
      for (std::uint64_t y = 0; y < s && !col.full(); ++y) {
        if (distinct && x == y) continue;
        if (apply_f(rep, x, y) >= s) col.add(2, {x, y});
      }
    }
  }
  if (col.wants(3)) {
    equal_pairs(I, s, col, [&](std::uint64_t x, std::uint64_t y) { col.add(3, {x, y}); });
  }
  if (index) return;
  // h(x) = f_G(t, I_G(x)) where I_G(x) is a legal operand.
  constexpr std::uint64_t kUndefined = ~std::uint64_t{0};
  std::vector<std::uint64_t> h(s, kUndefined);
  for (std::uint64_t x = 0; x < s; ++x) {
    if (I[x] < s) h[x] = apply_f(rep, rep.t, I[x]);
  }
  if (col.wants(4)) {
    Groups g;
    for (std::uint64_t x = 0; x < s; ++x) {
      if (h[x] != kUndefined) g[h[x]].push_back(x);
    }
    for (std::uint64_t x = 0; x < s && !col.full(); ++x) {
      if (h[x] == kUndefined) continue;
      for (std::uint64_t y : g[h[x]]) {
        if (col.full()) break;
        if (y != x) col.add(4, {x, y});
      }
    }
  }
  if (col.wants(5)) {
    Groups g;
    for (std::uint64_t y = 0; y < s; ++y) {
      if (h[y] != kUndefined) g[h[y]].push_back(y);
    }
    for (std::uint64_t x = 0; x < s && !col.full(); ++x) {
      auto it = g.find(I[x]);
      if (it == g.end()) continue;
      for (std::uint64_t y : it->second) {
        if (col.full()) break;
        if (I[(x + s - y) % s] != rep.t) col.add(5, {x, y});
      }
    }
  }
}

using i128 = __int128;

i128 det128(std::vector<i128> m, std::size_t n) {
  if (n == 0) return 1;
  int sign = 1;
  i128 prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k * n + k] == 0) {
      std::size_t sw = k + 1;
      while (sw < n && m[sw * n + k] == 0) ++sw;
      if (sw == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[sw * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i * n + j] = (m[i * n + j] * m[k * n + k] - m[i * n + k] * m[k * n + j]) / prev;
      }
    }
    prev = m[k * n + k];
  }
  return sign * m[(n - 1) * n + (n - 1)];
}

void blichfeldt_problem(const BlichfeldtInstance& inst, Collector& col) {
  const auto& t = table_of(inst.v);
  const std::size_t k = inst.v.num_inputs();
  if (col.wants(1)) {
    equal_pairs(t, std::uint64_t{1} << k, col,
                [&](std::uint64_t u, std::uint64_t v) { col.add(1, {bits(u, k), bits(v, k)}); });
  }
  if (!col.wants(2) && !col.wants(3)) return;
  const std::int64_t d = det_exact(inst.basis);
  if (d == 0) throw ValidationError("Blichfeldt basis is singular");
  const i128 mod = d < 0 ? -static_cast<i128>(d) : static_cast<i128>(d);
  const IntMatrix adj = adjugate(inst.basis);
  const std::size_t n = inst.basis.n;
  // x - y is in L(B) iff adj(B) x = adj(B) y (mod |det B|) componentwise.
  std::vector<std::vector<std::int64_t>> vecs(inst.s);
  std::map<std::vector<std::int64_t>, std::vector<std::uint64_t>> cosets;
  std::vector<std::vector<std::int64_t>> keys(inst.s);
  for (std::uint64_t i = 0; i < inst.s; ++i) {
    vecs[i] = blichfeldt_vector(inst, t[i]);
    std::vector<std::int64_t> key(n);
    for (std::size_t r = 0; r < n; ++r) {
      i128 acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc += static_cast<i128>(adj.at(r, c)) * vecs[i][c];
      acc %= mod;
      if (acc < 0) acc += mod;
      key[r] = static_cast<std::int64_t>(acc);
    }
    keys[i] = key;
    cosets[key].push_back(i);
  }
  if (col.wants(2)) {
    for (std::uint64_t i = 0; i < inst.s && !col.full(); ++i) {
      if (std::all_of(keys[i].begin(), keys[i].end(), [](std::int64_t v) { return v == 0; })) col.add(2, {i});
    }
  }
  if (col.wants(3)) {
    for (std::uint64_t i = 0; i < inst.s && !col.full(); ++i) {
      for (std::uint64_t j : cosets[keys[i]]) {
        if (col.full()) break;
        if (vecs[i] != vecs[j]) col.add(3, {i, j});
      }
    }
  }
}

}  // namespace

IntMatrix adjugate(const IntMatrix& b) {
  const std::size_t n = b.n;
  IntMatrix adj(n, std::vector<std::int64_t>(n * n, 0));
  if (n == 1) {
    adj.at(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<i128> minor;
      minor.reserve((n - 1) * (n - 1));
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) minor.push_back(b.at(r, c));
        }
      }
      i128 m = det128(std::move(minor), n - 1);
      if ((i + j) % 2 == 1) m = -m;
      if (m > INT64_MAX || m < INT64_MIN) throw RangeError("adjugate entry does not fit in 64 bits");
      adj.at(j, i) = static_cast<std::int64_t>(m);
    }
  }
  return adj;
}

std::vector<Solution> enumerate_solutions(const Instance& inst, const EnumerateOptions& opts) {
  const Problem p = problem_of(inst);
  Collector col(p, opts);
  std::visit(
      [&](const auto& in) {
        using T = std::decay_t<decltype(in)>;
        if constexpr (std::is_same_v<T, PigeonInstance> || std::is_same_v<T, CollisionInstance> ||
                      std::is_same_v<T, PrefixCollisionInstance> || std::is_same_v<T, DoveInstance>) {
          circuit_problem(in.c, p, col);
        } else if constexpr (std::is_same_v<T, ClawInstance>) {
          claw_problem(in.sigma0, in.sigma1, 0, false, col);
        } else if constexpr (std::is_same_v<T, GeneralClawInstance>) {
          claw_problem(in.sigma0, in.sigma1, in.s, true, col);
        } else if constexpr (std::is_same_v<T, DLogInstance>) {
          groupoid_problem(in.rep, false, opts.verify, col);
        } else if constexpr (std::is_same_v<T, IndexInstance>) {
          groupoid_problem(in.rep, true, opts.verify, col);
        } else if constexpr (std::is_same_v<T, DLogPInstance>) {
          if (!col.wants(1)) return;
          std::uint64_t acc = 1 % in.p;
          for (std::uint64_t x = 0; x + 1 < in.p && !col.full(); ++x) {
            if (acc == in.y % in.p) col.add(1, {x});
            acc = mul_mod(acc, in.g, in.p);
          }
        } else {
          blichfeldt_problem(in, col);
        }
      },
      inst);
  return col.take();
}

Solution brute_force(const Instance& inst, const VerifyOptions& opts) {
  EnumerateOptions eo;
  eo.verify = opts;
  eo.limit = 1;
  auto found = enumerate_solutions(inst, eo);
  if (found.empty()) {
    throw InvariantViolation("exhaustive search found no " + std::string(problem_name(problem_of(inst))) +
                             " solution; the instance is invalid or the oracle is broken");
  }
  return found.front();
}

}  // namespace tfnp
