#include "tfnp/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>
#include <tuple>

#include "tfnp/errors.hpp"
#include "tfnp/generators.hpp"
#include "tfnp/instance_io.hpp"
#include "tfnp/oracles.hpp"

namespace tfnp {

using nlohmann::ordered_json;

std::vector<std::string> default_fuzz_reductions() {
  std::vector<std::string> out;
  for (const auto& r : reductions()) out.push_back(r.id);
  out.emplace_back(kCycleChain);
  return out;
}

ReductionDef resolve_reduction(const std::string& spec) {
  std::vector<ReductionDef> steps;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t plus = spec.find('+', pos);
    steps.push_back(find_reduction(spec.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos)));
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  if (steps.size() == 1) return steps.front();
  return chain(steps);
}

namespace {

struct Failure {
  std::size_t item = 0;
  std::string kind;
  std::string message;
  ordered_json solution;     // target solution, or the direct source solution
  ordered_json pulled_back;  // null unless a pull-back produced a solution
};

struct ItemResult {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  bool direct = false;
  bool truncated = false;
  std::size_t source_gates = 0;
  std::size_t target_gates = 0;
  std::size_t target_solutions = 0;
  std::size_t verified = 0;
  std::size_t equal_index_operands = 0;
  std::map<int, std::size_t> target_cases;
  std::map<int, std::size_t> source_cases;
  std::vector<Failure> failures;
  ordered_json source;  // serialized only when there are failures
};

bool equal_index_operands(const Solution& s) {
  return s.problem == Problem::Index && s.case_no == 2 && s.witnesses.size() == 2 && s.witnesses[0] == s.witnesses[1];
}

ItemResult run_item(const ReductionDef& def, const CampaignConfig& cfg, std::uint64_t stream, std::size_t item) {
  ItemResult res;
  res.seed = mix_seed(stream, item);
  Rng rng(res.seed);
  res.n = cfg.n_min + rng.below(cfg.n_max - cfg.n_min + 1);
  GenOptions gen{res.n, cfg.gates, cfg.depth};
  const Instance source = generate_instance(def.source, rng, gen);
  res.source_gates = instance_gates(source);

  auto fail = [&](std::string kind, std::string message, const Solution* sol, const Solution* back = nullptr) {
    res.failures.push_back({item, std::move(kind), std::move(message), sol ? solution_to_json(*sol) : ordered_json(),
                            back ? solution_to_json(*back) : ordered_json()});
  };
  auto check_source = [&](const Solution& from, const Solution& back) {
    if (equal_index_operands(back)) ++res.equal_index_operands;
    Verdict v = verify(source, back, cfg.verify);
    if (!v) {
      fail("pullback_rejected", describe(back) + ": " + v.reason, &from, &back);
      return;
    }
    ++res.verified;
    ++res.source_cases[back.case_no];
  };

  try {
    Reduction red = def.apply(source);
    if (red.direct) {
      res.direct = true;
      check_source(*red.direct, *red.direct);
    } else {
      const Instance& target = *red.target_instance;
      res.target_gates = instance_gates(target);
      for (int c = 1; c <= case_count(def.target); ++c) {
        EnumerateOptions eo;
        eo.verify = cfg.verify;
        eo.only_case = c;
        if (cfg.case_limit != 0) eo.limit = cfg.case_limit;
        const auto sols = enumerate_solutions(target, eo);
        if (cfg.case_limit != 0 && sols.size() >= cfg.case_limit) res.truncated = true;
        const bool impossible =
            std::find(def.impossible_cases.begin(), def.impossible_cases.end(), c) != def.impossible_cases.end();
        for (const auto& sol : sols) {
          ++res.target_solutions;
          ++res.target_cases[c];
          if (impossible) {
            fail("impossible_case", "target case " + std::to_string(c) + " occurred: " + describe(sol), &sol);
            continue;
          }
          try {
            check_source(sol, red.pull(sol));
          } catch (const Error& e) {
            fail("pullback_error", e.what(), &sol);
          }
        }
      }
    }
  } catch (const Error& e) {
    fail("error", e.what(), nullptr);
  }
  if (!res.failures.empty()) res.source = instance_to_json(source);
  return res;
}

ordered_json tally(const std::map<int, std::size_t>& m) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : m) j[std::to_string(k)] = v;
  return j;
}

}  // namespace

ordered_json run_roundtrip(const std::string& reduction, const CampaignConfig& cfg) {
  const ReductionDef def = resolve_reduction(reduction);
  if (cfg.n_min == 0 || cfg.n_max < cfg.n_min) throw ValidationError("size range must satisfy 1 <= n_min <= n_max");
  std::uint64_t stream = cfg.seed;
  for (char ch : def.id) stream = mix_seed(stream, static_cast<unsigned char>(ch));

  std::vector<ItemResult> results(cfg.count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cfg.count; i = next++) results[i] = run_item(def, cfg, stream, i);
  };
  const std::size_t jobs = std::clamp<std::size_t>(cfg.jobs, 1, std::max<std::size_t>(cfg.count, 1));
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::size_t direct = 0, truncated = 0, target_solutions = 0, verified = 0, equal_ops = 0;
  std::size_t src_total = 0, tgt_total = 0, src_max = 0, tgt_max = 0;
  std::map<int, std::size_t> target_cases, source_cases;
  ordered_json failures = ordered_json::array();
  for (const auto& r : results) {
    direct += r.direct;
    truncated += r.truncated;
    target_solutions += r.target_solutions;
    verified += r.verified;
    equal_ops += r.equal_index_operands;
    src_total += r.source_gates;
    tgt_total += r.target_gates;
    src_max = std::max(src_max, r.source_gates);
    tgt_max = std::max(tgt_max, r.target_gates);
    for (const auto& [k, v] : r.target_cases) target_cases[k] += v;
    for (const auto& [k, v] : r.source_cases) source_cases[k] += v;
    for (const auto& f : r.failures) {
      ordered_json e;
      e["reduction"] = def.id;
      e["item"] = f.item;
      e["item_seed"] = r.seed;
      e["n"] = r.n;
      e["kind"] = f.kind;
      e["message"] = f.message;
      e["source_instance"] = r.source;
      e["solution"] = f.solution;
      e["pulled_back"] = f.pulled_back;
      failures.push_back(std::move(e));
    }
  }

  ordered_json impossible = ordered_json::object();
  for (int c : def.impossible_cases) {
    impossible[std::to_string(c)] = target_cases.count(c) ? target_cases.at(c) : 0;
  }

  ordered_json rep;
  rep["reduction"] = def.id;
  rep["source"] = problem_name(def.source);
  rep["target"] = problem_name(def.target);
  rep["instances"] = cfg.count;
  rep["direct_solutions"] = direct;
  rep["target_solutions"] = target_solutions;
  rep["pullbacks_verified"] = verified;
  rep["truncated_instances"] = truncated;
  rep["target_cases"] = tally(target_cases);
  rep["source_cases"] = tally(source_cases);
  rep["impossible_case_occurrences"] = impossible;
  rep["index_case2_equal_operands"] = equal_ops;
  rep["size"] = {{"source_gates_total", src_total},
                 {"source_gates_max", src_max},
                 {"target_gates_total", tgt_total},
                 {"target_gates_max", tgt_max}};
  rep["failures"] = std::move(failures);
  return rep;
}

ordered_json run_fuzz(const CampaignConfig& cfg) {
  ordered_json report;
  report["campaign"] = cfg.id;
  report["seed"] = cfg.seed;
  ordered_json conf;
  conf["count"] = cfg.count;
  conf["n_min"] = cfg.n_min;
  conf["n_max"] = cfg.n_max;
  conf["case_limit"] = cfg.case_limit;
  conf["gates"] = cfg.gates;
  conf["depth"] = cfg.depth;
  conf["strict_index_distinct"] = cfg.verify.strict_index_distinct;
  conf["reductions"] = cfg.reductions;
  report["config"] = conf;

  ordered_json per = ordered_json::array();
  ordered_json failures = ordered_json::array();
  std::size_t instances = 0, verified = 0;
  for (const auto& id : cfg.reductions) {
    ordered_json r = run_roundtrip(id, cfg);
    instances += r["instances"].get<std::size_t>();
    verified += r["pullbacks_verified"].get<std::size_t>();
    for (auto& f : r["failures"]) failures.push_back(f);
    r.erase("failures");
    per.push_back(std::move(r));
  }
  std::stable_sort(failures.begin(), failures.end(), [](const ordered_json& a, const ordered_json& b) {
    return std::make_tuple(a["reduction"].get<std::string>(), a["item"].get<std::size_t>()) <
           std::make_tuple(b["reduction"].get<std::string>(), b["item"].get<std::size_t>());
  });
  report["totals"] = {{"instances", instances}, {"pullbacks_verified", verified}, {"failures", failures.size()}};
  report["reductions"] = std::move(per);
  report["failures"] = std::move(failures);
  return report;
}

std::size_t report_failures(const ordered_json& report) {
  if (report.contains("failures")) return report["failures"].size();
  return 0;
}

}  // namespace tfnp
