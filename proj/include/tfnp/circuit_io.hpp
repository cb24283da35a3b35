#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "tfnp/circuit.hpp"

namespace tfnp {

/// {"inputs": n, "gates": [{"id", "op", "args"}...], "outputs": [...]},
/// fields in that order. Input gates are listed explicitly.
nlohmann::ordered_json circuit_to_json(const Circuit& c);

/// Throws ParseError naming the offending element (e.g. "gates[4].args[1]").
/// `where` prefixes the location when the circuit sits inside a larger document.
Circuit circuit_from_json(const nlohmann::ordered_json& j, const std::string& where = "");

/// Compact, byte-stable text form.
std::string serialize(const Circuit& c);
Circuit parse_circuit(std::string_view text);

}  // namespace tfnp
