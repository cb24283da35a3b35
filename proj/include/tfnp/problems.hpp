#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "tfnp/bitstring.hpp"
#include "tfnp/circuit.hpp"
#include "tfnp/groupoid.hpp"
#include "tfnp/lattice.hpp"

namespace tfnp {

enum class Problem : std::uint8_t {
  Pigeon,
  Collision,
  PrefixCollision,
  Dove,
  Claw,
  GeneralClaw,
  DLog,
  Index,
  DLogP,
  Blichfeldt,
};

inline constexpr Problem kAllProblems[] = {Problem::Pigeon, Problem::Collision, Problem::PrefixCollision,
                                           Problem::Dove,   Problem::Claw,      Problem::GeneralClaw,
                                           Problem::DLog,   Problem::Index,     Problem::DLogP,
                                           Problem::Blichfeldt};

std::string_view problem_name(Problem p) noexcept;
/// Throws ParseError on an unknown name.
Problem problem_from_name(std::string_view name);
/// Number of solution cases in the problem's definition.
int case_count(Problem p) noexcept;

struct PigeonInstance {
  Circuit c;
  friend bool operator==(const PigeonInstance&, const PigeonInstance&) = default;
};
struct CollisionInstance {
  Circuit c;
  friend bool operator==(const CollisionInstance&, const CollisionInstance&) = default;
};
struct PrefixCollisionInstance {
  Circuit c;
  friend bool operator==(const PrefixCollisionInstance&, const PrefixCollisionInstance&) = default;
};
struct DoveInstance {
  Circuit c;
  friend bool operator==(const DoveInstance&, const DoveInstance&) = default;
};
struct ClawInstance {
  Circuit sigma0;
  Circuit sigma1;
  friend bool operator==(const ClawInstance&, const ClawInstance&) = default;
};
struct GeneralClawInstance {
  Circuit sigma0;
  Circuit sigma1;
  std::uint64_t s = 0;
  friend bool operator==(const GeneralClawInstance&, const GeneralClawInstance&) = default;
};
struct DLogInstance {
  GroupoidRep rep;
  friend bool operator==(const DLogInstance&, const DLogInstance&) = default;
};
struct IndexInstance {
  GroupoidRep rep;
  friend bool operator==(const IndexInstance&, const IndexInstance&) = default;
};
struct DLogPInstance {
  std::uint64_t p = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
  std::uint64_t g = 0;
  std::uint64_t y = 0;
  friend bool operator==(const DLogPInstance&, const DLogPInstance&) = default;
};
/// V has k = ceil(log s) inputs and n * coord_width outputs; output block i
/// (coord_width bits, most significant first) is coordinate i.
struct BlichfeldtInstance {
  IntMatrix basis;
  std::uint64_t s = 0;
  Circuit v;
  std::size_t coord_width = 1;
  friend bool operator==(const BlichfeldtInstance&, const BlichfeldtInstance&) = default;
};

using Instance = std::variant<PigeonInstance, CollisionInstance, PrefixCollisionInstance, DoveInstance, ClawInstance,
                              GeneralClawInstance, DLogInstance, IndexInstance, DLogPInstance, BlichfeldtInstance>;

Problem problem_of(const Instance& inst) noexcept;

/// Bitstrings for circuit-domain witnesses, integers for [s]-domain ones.
using Witness = std::variant<Bitstring, std::uint64_t>;

struct Solution {
  Problem problem = Problem::Pigeon;
  int case_no = 1;
  std::vector<Witness> witnesses;

  friend bool operator==(const Solution&, const Solution&) = default;
};

Solution make_solution(Problem p, int case_no, std::vector<Witness> witnesses);
std::string describe(const Solution& sol);

const Bitstring& bits_witness(const Solution& sol, std::size_t i);
std::uint64_t int_witness(const Solution& sol, std::size_t i);

struct VerifyOptions {
  /// Index case 2 requires distinct x, y (as written) instead of allowing
  /// x = y (as DLog's case 2 does).
  bool strict_index_distinct = false;
};

struct Verdict {
  bool accepted = false;
  int case_no = 0;
  std::string reason;

  explicit operator bool() const noexcept { return accepted; }
};

/// Checks exactly the defining predicate of the claimed case. Throws
/// StructuralError when the solution's problem differs from the instance's.
Verdict verify(const Instance& inst, const Solution& sol, const VerifyOptions& opts = {});

/// Structural and semantic preconditions; an empty list means valid.
std::vector<std::string> validate_instance(const Instance& inst);

/// Decodes a Blichfeldt output string into its integer vector.
std::vector<std::int64_t> blichfeldt_vector(const BlichfeldtInstance& inst, std::uint64_t output_word);

/// Gate count of all circuits in the instance.
std::size_t instance_gates(const Instance& inst);
/// The size parameter that governs enumeration (input bits or log s).
std::size_t instance_width(const Instance& inst);

}  // namespace tfnp
