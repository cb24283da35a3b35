#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "tfnp/problems.hpp"
#include "tfnp/reductions.hpp"

namespace tfnp {

struct CampaignConfig {
  std::string id = "campaign";
  std::uint64_t seed = 1;
  /// Source instances per reduction.
  std::size_t count = 100;
  std::size_t n_min = 1;
  std::size_t n_max = 3;
  /// Reduction ids; chains are written "a+b+c".
  std::vector<std::string> reductions;
  VerifyOptions verify;
  /// Per-case cap on enumerated target solutions (0 = enumerate all).
  std::size_t case_limit = 0;
  std::size_t gates = 0;
  std::size_t depth = 8;
  std::size_t jobs = 1;
};

/// The cycle collision -> dove -> dlog -> general_claw -> collision.
inline constexpr const char* kCycleChain =
    "collision_to_dove+dove_to_dlog+dlog_to_general_claw+general_claw_to_collision";

/// Every registered id plus the cycle chain.
std::vector<std::string> default_fuzz_reductions();

/// Resolves an id or a "+"-joined chain. Throws ValidationError for unknown ids.
ReductionDef resolve_reduction(const std::string& spec);

/// Runs `count` seeded source instances through one reduction: apply,
/// enumerate target solutions case by case, pull each back and verify it.
/// The report depends only on the config, not on `jobs`.
nlohmann::ordered_json run_roundtrip(const std::string& reduction, const CampaignConfig& cfg);

/// run_roundtrip over every listed reduction, aggregated into one report.
nlohmann::ordered_json run_fuzz(const CampaignConfig& cfg);

std::size_t report_failures(const nlohmann::ordered_json& report);

}  // namespace tfnp
