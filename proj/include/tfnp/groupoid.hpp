#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tfnp/bitstring.hpp"
#include "tfnp/circuit.hpp"

namespace tfnp {

/// (s, f, id, g, t): a groupoid on [s] given by f with 2l inputs and l
/// outputs, l = ceil(log s), plus identity, generator and target indices.
struct GroupoidRep {
  std::uint64_t s = 0;
  Circuit f;
  std::uint64_t id = 0;
  std::uint64_t g = 0;
  std::uint64_t t = 0;

  std::size_t width() const;

  friend bool operator==(const GroupoidRep&, const GroupoidRep&) = default;
};

/// Structural violations (widths, ranges); empty when the rep is valid.
std::vector<std::string> groupoid_violations(const GroupoidRep& rep);

/// bc(f(bd(x), bd(y))) for arbitrary l-bit words; no range check on x, y.
std::uint64_t apply_f(const GroupoidRep& rep, std::uint64_t x, std::uint64_t y);

/// f_G(x, y) for x, y in [s]; the result may be >= s. Throws RangeError
/// for operands outside [s].
std::uint64_t groupoid_op(const GroupoidRep& rep, std::uint64_t x, std::uint64_t y);

enum class StepKind : std::uint8_t { Square, Multiply };

struct TraceStep {
  StepKind kind;
  std::uint64_t left;   // r for a square, g for a multiply
  std::uint64_t right;  // r
  std::uint64_t out;
};

/// Full record of one run of the square-and-multiply indexing function.
struct IndexTrace {
  std::uint64_t x = 0;
  Bitstring bits;  // bd_0(x)
  std::uint64_t start = 0;  // id
  std::vector<TraceStep> steps;

  std::uint64_t value() const { return steps.empty() ? start : steps.back().out; }
};

/// Algorithm 1 verbatim: r = bd(id); for each bit of bd_0(x), most
/// significant first, r = f(r, r) and then r = f(g, r) when the bit is 1.
IndexTrace index_trace(const GroupoidRep& rep, std::uint64_t x);

/// I_G(x) for x in [s].
std::uint64_t index_function(const GroupoidRep& rep, std::uint64_t x);

/// I_G on all of [s] via r(0) = f0(id), r(1) = f1(r(0)),
/// r(x) = f0(r(x/2)) then f1 for odd x >= 2.
std::vector<std::uint64_t> index_table(const GroupoidRep& rep);

/// First step of the trace whose output is >= s while its operands lie in
/// [s]. Returns its operands (left, right), or false when none exists.
bool first_overflow(const GroupoidRep& rep, const IndexTrace& trace, std::uint64_t& left, std::uint64_t& right);

}  // namespace tfnp
