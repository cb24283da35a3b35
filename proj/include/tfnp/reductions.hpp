#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tfnp/builder.hpp"
#include "tfnp/groupoid.hpp"
#include "tfnp/problems.hpp"

namespace tfnp {

/// One application of a reduction to a source instance: either a target
/// instance plus the pull-back for its solutions, or a source solution
/// found directly during the instance map.
struct Reduction {
  Problem source = Problem::Pigeon;
  Problem target = Problem::Pigeon;
  std::optional<Instance> target_instance;
  std::optional<Solution> direct;
  std::function<Solution(const Solution&)> pull_back;

  /// Checks the solution's problem tag, then runs the pull-back.
  Solution pull(const Solution& target_solution) const;
};

struct ReductionDef {
  std::string id;
  Problem source = Problem::Pigeon;
  Problem target = Problem::Pigeon;
  /// Target cases that the construction rules out; their pull-back raises
  /// SoundnessViolation.
  std::vector<int> impossible_cases;
  /// Throws ValidationError for an invalid source instance.
  std::function<Reduction(const Instance&)> apply;
};

/// All registered reductions in a fixed order.
const std::vector<ReductionDef>& reductions();
/// Throws ValidationError for an unknown id.
const ReductionDef& find_reduction(std::string_view id);

/// Instance map r2 after r1; pull-back r2 then r1. Throws StructuralError
/// when r1's target is not r2's source.
ReductionDef chain(const ReductionDef& r1, const ReductionDef& r2);
ReductionDef chain(std::span<const ReductionDef> steps);

// Individual instance maps.
Reduction red_collision_to_dove(const CollisionInstance& inst);
Reduction red_dove_to_dlog(const DoveInstance& inst);
Reduction red_dlog_to_general_claw(const DLogInstance& inst);
Reduction red_general_claw_to_collision(const GeneralClawInstance& inst);
Reduction red_collision_to_claw(const CollisionInstance& inst);
Reduction red_claw_to_general_claw(const ClawInstance& inst);
Reduction red_collision_to_prefix(const CollisionInstance& inst);
Reduction red_prefix_to_collision(const PrefixCollisionInstance& inst);
Reduction red_pigeon_to_index(const PigeonInstance& inst);
Reduction red_index_to_pigeon(const IndexInstance& inst);
Reduction red_dlogp_to_dlog(const DLogPInstance& inst);
Reduction red_pigeon_to_blichfeldt(const PigeonInstance& inst);

// Groupoid constructions used by the maps above, exposed for testing.

/// s = 2^n, id = w, g = w - 1 mod 2^n; squaring rotates (r - w) left and
/// multiplying sets the last bit of (r - w), each shifted back by w. With
/// w = 0 this is the plain construction and I_G(a) = a; in general
/// I_G(a) = a + w mod 2^n.
GroupoidRep shifted_identity_groupoid(std::size_t n, std::uint64_t w, std::uint64_t t = 0);

/// The groupoid built from a Dove instance: s = 2^n, g = 0, id = 1, t = 1,
/// f(x,y) = C(x) if x = y, C(y xor 0^{n-1}1) if x = g != y, x xor y otherwise.
GroupoidRep dove_groupoid(const Circuit& c);

/// The groupoid built from a Pigeon instance C on n bits: s = 2^{n+2},
/// w = 2^n = id, g = s - 1, t = 0.
GroupoidRep pigeon_index_groupoid(const Circuit& c);

/// Wires computing I_G(bc(x)) for an l-bit x, unrolled with 2l copies of f.
Wires index_function_wires(CircuitBuilder& b, const GroupoidRep& rep, std::span<const Wire> x);

}  // namespace tfnp
