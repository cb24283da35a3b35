#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tfnp/problems.hpp"

namespace tfnp {

/// {"problem": name, ...fields}; circuits embed the circuit format.
nlohmann::ordered_json instance_to_json(const Instance& inst);
Instance instance_from_json(const nlohmann::ordered_json& j);

/// {"problem", "case", "witnesses"}; bitstrings as '0'/'1' strings,
/// indices as integers.
nlohmann::ordered_json solution_to_json(const Solution& sol);
Solution solution_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json parse_json(std::string_view text);

}  // namespace tfnp
