#include "tfnp/instance_io.hpp"

#include "tfnp/circuit_io.hpp"
#include "tfnp/errors.hpp"

namespace tfnp {

using json = nlohmann::ordered_json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(key, "missing field");
  return j[key];
}

std::uint64_t uint_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) throw ParseError(key, "expected a nonnegative integer");
  return v.get<std::uint64_t>();
}

json rep_fields(const char* name, const GroupoidRep& rep) {
  json j;
  j["problem"] = name;
  j["s"] = rep.s;
  j["f"] = circuit_to_json(rep.f);
  j["id"] = rep.id;
  j["g"] = rep.g;
  j["t"] = rep.t;
  return j;
}

GroupoidRep rep_from(const json& j) {
  GroupoidRep rep;
  rep.s = uint_field(j, "s");
  rep.f = circuit_from_json(field(j, "f"), "f");
  rep.id = uint_field(j, "id");
  rep.g = uint_field(j, "g");
  rep.t = uint_field(j, "t");
  return rep;
}

}  // namespace

json instance_to_json(const Instance& inst) {
  const std::string name(problem_name(problem_of(inst)));
  return std::visit(
      [&](const auto& in) -> json {
        using T = std::decay_t<decltype(in)>;
        json j;
        if constexpr (std::is_same_v<T, DLogInstance> || std::is_same_v<T, IndexInstance>) {
          return rep_fields(name.c_str(), in.rep);
        } else {
          j["problem"] = name;
          if constexpr (std::is_same_v<T, ClawInstance> || std::is_same_v<T, GeneralClawInstance>) {
            j["sigma0"] = circuit_to_json(in.sigma0);
            j["sigma1"] = circuit_to_json(in.sigma1);
            if constexpr (std::is_same_v<T, GeneralClawInstance>) j["s"] = in.s;
          } else if constexpr (std::is_same_v<T, DLogPInstance>) {
            j["p"] = in.p;
            json fs = json::array();
            for (const auto& [q, k] : in.factors) fs.push_back(json::array({q, k}));
            j["factors"] = fs;
            j["g"] = in.g;
            j["y"] = in.y;
          } else if constexpr (std::is_same_v<T, BlichfeldtInstance>) {
            json rows = json::array();
            for (std::size_t r = 0; r < in.basis.n; ++r) {
              json row = json::array();
              for (std::size_t c = 0; c < in.basis.n; ++c) row.push_back(in.basis.at(r, c));
              rows.push_back(row);
            }
            j["basis"] = rows;
            j["s"] = in.s;
            j["circuit"] = circuit_to_json(in.v);
            j["coord_width"] = in.coord_width;
          } else {
            j["circuit"] = circuit_to_json(in.c);
          }
          return j;
        }
      },
      inst);
}

Instance instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance", "expected an object");
  const json& pj = field(j, "problem");
  if (!pj.is_string()) throw ParseError("problem", "expected a string");
  const Problem p = problem_from_name(pj.get<std::string>());
  switch (p) {
    case Problem::Pigeon: return PigeonInstance{circuit_from_json(field(j, "circuit"), "circuit")};
    case Problem::Collision: return CollisionInstance{circuit_from_json(field(j, "circuit"), "circuit")};
    case Problem::PrefixCollision: return PrefixCollisionInstance{circuit_from_json(field(j, "circuit"), "circuit")};
    case Problem::Dove: return DoveInstance{circuit_from_json(field(j, "circuit"), "circuit")};
    case Problem::Claw:
      return ClawInstance{circuit_from_json(field(j, "sigma0"), "sigma0"),
                          circuit_from_json(field(j, "sigma1"), "sigma1")};
    case Problem::GeneralClaw:
      return GeneralClawInstance{circuit_from_json(field(j, "sigma0"), "sigma0"),
                                 circuit_from_json(field(j, "sigma1"), "sigma1"), uint_field(j, "s")};
    case Problem::DLog: return DLogInstance{rep_from(j)};
    case Problem::Index: return IndexInstance{rep_from(j)};
    case Problem::DLogP: {
      DLogPInstance in;
      in.p = uint_field(j, "p");
      const json& fs = field(j, "factors");
      if (!fs.is_array()) throw ParseError("factors", "expected an array");
      for (std::size_t i = 0; i < fs.size(); ++i) {
        const std::string loc = "factors[" + std::to_string(i) + "]";
        if (!fs[i].is_array() || fs[i].size() != 2 || !fs[i][0].is_number_unsigned() || !fs[i][1].is_number_unsigned()) {
          throw ParseError(loc, "expected [prime, exponent]");
        }
        in.factors.emplace_back(fs[i][0].get<std::uint64_t>(), fs[i][1].get<std::uint64_t>());
      }
      in.g = uint_field(j, "g");
      in.y = uint_field(j, "y");
      return in;
    }
    case Problem::Blichfeldt: {
      BlichfeldtInstance in;
      const json& rows = field(j, "basis");
      if (!rows.is_array() || rows.empty()) throw ParseError("basis", "expected a nonempty array of rows");
      const std::size_t n = rows.size();
      std::vector<std::int64_t> entries;
      for (std::size_t r = 0; r < n; ++r) {
        const std::string loc = "basis[" + std::to_string(r) + "]";
        if (!rows[r].is_array() || rows[r].size() != n) throw ParseError(loc, "basis must be square");
        for (std::size_t c = 0; c < n; ++c) {
          if (!rows[r][c].is_number_integer()) throw ParseError(loc + "[" + std::to_string(c) + "]", "expected an integer");
          entries.push_back(rows[r][c].get<std::int64_t>());
        }
      }
      in.basis = IntMatrix(n, std::move(entries));
      in.s = uint_field(j, "s");
      in.v = circuit_from_json(field(j, "circuit"), "circuit");
      in.coord_width = uint_field(j, "coord_width");
      return in;
    }
  }
  throw ParseError("problem", "unhandled problem");
}

json solution_to_json(const Solution& sol) {
  json j;
  j["problem"] = std::string(problem_name(sol.problem));
  j["case"] = sol.case_no;
  json ws = json::array();
  for (const auto& w : sol.witnesses) {
    if (const auto* b = std::get_if<Bitstring>(&w)) {
      ws.push_back(b->str());
    } else {
      ws.push_back(std::get<std::uint64_t>(w));
    }
  }
  j["witnesses"] = ws;
  return j;
}

Solution solution_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("solution", "expected an object");
  const json& pj = field(j, "problem");
  if (!pj.is_string()) throw ParseError("problem", "expected a string");
  Solution sol;
  sol.problem = problem_from_name(pj.get<std::string>());
  const json& c = field(j, "case");
  if (!c.is_number_integer()) throw ParseError("case", "expected an integer");
  sol.case_no = c.get<int>();
  const json& ws = field(j, "witnesses");
  if (!ws.is_array()) throw ParseError("witnesses", "expected an array");
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const std::string loc = "witnesses[" + std::to_string(i) + "]";
    if (ws[i].is_string()) {
      try {
        sol.witnesses.emplace_back(Bitstring::parse(ws[i].get<std::string>()));
      } catch (const Error& e) {
        throw ParseError(loc, e.what());
      }
    } else if (ws[i].is_number_unsigned()) {
      sol.witnesses.emplace_back(ws[i].get<std::uint64_t>());
    } else {
      throw ParseError(loc, "expected a bitstring or a nonnegative integer");
    }
  }
  return sol;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
}

}  // namespace tfnp
