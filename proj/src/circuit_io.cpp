#include "tfnp/circuit_io.hpp"

#include "tfnp/errors.hpp"

namespace tfnp {

using json = nlohmann::ordered_json;

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  const auto& gs = c.gates();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    json args = json::array();
    const std::size_t arity = op_arity(gs[i].op);
    if (arity >= 1) args.push_back(gs[i].a);
    if (arity == 2) args.push_back(gs[i].b);
    json g;
    g["id"] = i;
    g["op"] = std::string(op_name(gs[i].op));
    g["args"] = std::move(args);
    gates.push_back(std::move(g));
  }
  json out;
  out["inputs"] = c.num_inputs();
  out["gates"] = std::move(gates);
  out["outputs"] = c.outputs();
  return out;
}

namespace {

std::string at(const std::string& where, const std::string& field) {
  return where.empty() ? field : where + "." + field;
}

std::uint64_t unsigned_field(const json& j, const std::string& loc) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw ParseError(loc, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

Circuit circuit_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) throw ParseError(where.empty() ? "circuit" : where, "expected an object");
  for (const char* key : {"inputs", "gates", "outputs"}) {
    if (!j.contains(key)) throw ParseError(at(where, key), "missing field");
  }
  const std::uint64_t n = unsigned_field(j["inputs"], at(where, "inputs"));
  if (n == 0) throw ParseError(at(where, "inputs"), "circuit needs at least one input");
  const json& gates = j["gates"];
  if (!gates.is_array()) throw ParseError(at(where, "gates"), "expected an array");
  std::vector<Gate> gs;
  gs.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string loc = at(where, "gates[" + std::to_string(i) + "]");
    const json& g = gates[i];
    if (!g.is_object()) throw ParseError(loc, "expected an object");
    if (!g.contains("id") || !g.contains("op") || !g.contains("args")) {
      throw ParseError(loc, "gate needs id, op and args");
    }
    if (unsigned_field(g["id"], loc + ".id") != i) throw ParseError(loc + ".id", "gate ids must be 0, 1, 2, ... in order");
    if (!g["op"].is_string()) throw ParseError(loc + ".op", "expected a string");
    Op op;
    try {
      op = op_from_name(g["op"].get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(loc + ".op", e.what());
    }
    if ((i < n) != (op == Op::Input)) {
      throw ParseError(loc + ".op", i < n ? "the first 'inputs' gates must be INPUT" : "INPUT gate after the input block");
    }
    const json& args = g["args"];
    if (!args.is_array() || args.size() != op_arity(op)) {
      throw ParseError(loc + ".args", "expected " + std::to_string(op_arity(op)) + " argument(s)");
    }
    Gate gate{op, 0, 0};
    for (std::size_t a = 0; a < args.size(); ++a) {
      const std::string aloc = loc + ".args[" + std::to_string(a) + "]";
      const std::uint64_t w = unsigned_field(args[a], aloc);
      if (w >= i) throw ParseError(aloc, "wire " + std::to_string(w) + " is not defined before gate " + std::to_string(i));
      (a == 0 ? gate.a : gate.b) = static_cast<Wire>(w);
    }
    gs.push_back(gate);
  }
  if (gs.size() < n) throw ParseError(at(where, "gates"), "fewer gates than inputs");
  const json& outs = j["outputs"];
  if (!outs.is_array() || outs.empty()) throw ParseError(at(where, "outputs"), "expected a nonempty array");
  Wires ws;
  for (std::size_t k = 0; k < outs.size(); ++k) {
    const std::string loc = at(where, "outputs[" + std::to_string(k) + "]");
    const std::uint64_t w = unsigned_field(outs[k], loc);
    if (w >= gs.size()) throw ParseError(loc, "references undefined wire " + std::to_string(w));
    ws.push_back(static_cast<Wire>(w));
  }
  try {
    return Circuit(n, std::move(gs), std::move(ws));
  } catch (const StructuralError& e) {
    throw ParseError(where.empty() ? "circuit" : where, e.what());
  }
}

std::string serialize(const Circuit& c) { return circuit_to_json(c).dump(); }

Circuit parse_circuit(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  return circuit_from_json(j);
}

}  // namespace tfnp
