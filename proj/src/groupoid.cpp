#include "tfnp/groupoid.hpp"

#include <string>

#include "tfnp/errors.hpp"

namespace tfnp {

std::size_t GroupoidRep::width() const {
  if (s < 2) throw ValidationError("groupoid order must be at least 2");
  return ceil_log2(s);
}

std::vector<std::string> groupoid_violations(const GroupoidRep& rep) {
  std::vector<std::string> out;
  if (rep.s < 2) {
    out.push_back("s must be at least 2");
    return out;
  }
  if (rep.s > (std::uint64_t{1} << 31)) out.push_back("s above 2^31 is not supported");
  const std::size_t l = ceil_log2(rep.s);
  if (rep.f.num_inputs() != 2 * l) out.push_back("f must have 2*ceil(log s) = " + std::to_string(2 * l) + " inputs");
  if (rep.f.num_outputs() != l) out.push_back("f must have ceil(log s) = " + std::to_string(l) + " outputs");
  if (rep.id >= rep.s) out.push_back("id must lie in [s]");
  if (rep.g >= rep.s) out.push_back("g must lie in [s]");
  if (rep.t >= rep.s) out.push_back("t must lie in [s]");
  return out;
}

std::uint64_t apply_f(const GroupoidRep& rep, std::uint64_t x, std::uint64_t y) {
  const std::size_t l = rep.f.num_outputs();
  return rep.f.lookup((x << l) | y);
}

std::uint64_t groupoid_op(const GroupoidRep& rep, std::uint64_t x, std::uint64_t y) {
  if (x >= rep.s || y >= rep.s) throw RangeError("groupoid operands must lie in [s]");
  return apply_f(rep, x, y);
}

IndexTrace index_trace(const GroupoidRep& rep, std::uint64_t x) {
  if (x >= rep.s) throw RangeError("index_function argument must lie in [s]");
  IndexTrace trace;
  trace.x = x;
  trace.bits = bit_decompose_minimal(x);
  trace.start = rep.id;
  std::uint64_t r = rep.id;
  for (std::size_t i = 0; i < trace.bits.width(); ++i) {
    std::uint64_t sq = apply_f(rep, r, r);
    trace.steps.push_back({StepKind::Square, r, r, sq});
    r = sq;
    if (trace.bits[i]) {
      std::uint64_t m = apply_f(rep, rep.g, r);
      trace.steps.push_back({StepKind::Multiply, rep.g, r, m});
      r = m;
    }
  }
  return trace;
}

std::uint64_t index_function(const GroupoidRep& rep, std::uint64_t x) { return index_trace(rep, x).value(); }

std::vector<std::uint64_t> index_table(const GroupoidRep& rep) {
  std::vector<std::uint64_t> r(rep.s);
  r[0] = apply_f(rep, rep.id, rep.id);
  if (rep.s > 1) r[1] = apply_f(rep, rep.g, r[0]);
  for (std::uint64_t x = 2; x < rep.s; ++x) {
    const std::uint64_t half = r[x >> 1];
    std::uint64_t v = apply_f(rep, half, half);
    if (x & 1U) v = apply_f(rep, rep.g, v);
    r[x] = v;
  }
  return r;
}

bool first_overflow(const GroupoidRep& rep, const IndexTrace& trace, std::uint64_t& left, std::uint64_t& right) {
  for (const auto& step : trace.steps) {
    if (step.left >= rep.s || step.right >= rep.s) return false;
    if (step.out >= rep.s) {
      left = step.left;
      right = step.right;
      return true;
    }
  }
  return false;
}

}  // namespace tfnp
