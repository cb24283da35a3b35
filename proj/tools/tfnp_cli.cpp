// tfnp: generate instances, apply reductions, solve, verify, and run
// round-trip soundness campaigns. Documents are JSON.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "tfnp/campaign.hpp"
#include "tfnp/errors.hpp"
#include "tfnp/generators.hpp"
#include "tfnp/instance_io.hpp"
#include "tfnp/oracles.hpp"

using nlohmann::ordered_json;
using namespace tfnp;

namespace {

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_text(const std::string& path) {
  if (path.empty() || path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_json(const ordered_json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

// Accepts either a bare instance document or {"instance": ...}.
Instance read_instance(const std::string& path) {
  ordered_json j = parse_json(read_text(path));
  if (j.contains("instance")) j = j["instance"];
  return instance_from_json(j);
}

Solution read_solution(const std::string& path) {
  ordered_json j = parse_json(read_text(path));
  if (j.contains("solution")) j = j["solution"];
  return solution_from_json(j);
}

ReductionDef resolve_or_usage(const std::vector<std::string>& ids) {
  if (ids.empty()) throw UsageError("--reduction is required");
  std::string joined;
  for (const auto& id : ids) joined += (joined.empty() ? "" : "+") + id;
  try {
    return resolve_reduction(joined);
  } catch (const ValidationError& e) {
    throw UsageError(e.what());
  } catch (const StructuralError& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Total search problems, reductions between them, and soundness campaigns"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::size_t count = 100;
  std::size_t n = 3;
  std::size_t n_min = 1;
  std::size_t jobs = 1;
  std::size_t case_limit = 0;
  std::size_t gates = 0;
  std::size_t depth = 8;
  std::vector<std::string> reduction_ids;
  std::string in_path, out_path, solution_path, problem_name_arg, campaign_id = "campaign";
  bool strict = false;
  bool all = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--strict-index-distinct", strict, "Index case 2 requires distinct witnesses");
    sub->add_option("--out", out_path, "Output file (default stdout)");
  };
  auto add_campaign = [&](CLI::App* sub) {
    sub->add_option("--seed", seed, "Campaign seed");
    sub->add_option("--count", count, "Source instances per reduction");
    sub->add_option("--n", n, "Largest size parameter (fuzz default 4, otherwise 3)");
    sub->add_option("--n-min", n_min, "Smallest size parameter");
    sub->add_option("--jobs", jobs, "Worker threads");
    sub->add_option("--case-limit", case_limit, "Cap on target solutions per case and instance (0 = all)");
    sub->add_option("--gates", gates, "Gate budget of random circuits (0 = automatic)");
    sub->add_option("--depth", depth, "Depth bound of random circuits");
    sub->add_option("--id", campaign_id, "Campaign id recorded in the report");
    add_common(sub);
  };

  auto* gen = app.add_subcommand("gen", "Generate a random valid instance");
  gen->add_option("--problem", problem_name_arg, "Problem name")->required();
  gen->add_option("--n", n, "Size parameter");
  gen->add_option("--seed", seed, "Seed");
  gen->add_option("--gates", gates, "Gate budget (0 = automatic)");
  gen->add_option("--depth", depth, "Depth bound");
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction, or pull a target solution back");
  reduce->add_option("--reduction", reduction_ids, "Reduction id (repeat to chain)");
  reduce->add_option("--in", in_path, "Source instance")->required();
  reduce->add_option("--pull", solution_path, "Target solution to pull back");
  add_common(reduce);

  auto* solve = app.add_subcommand("solve", "Brute-force a solution");
  solve->add_option("--in", in_path, "Instance")->required();
  solve->add_flag("--all", all, "Enumerate every solution");
  add_common(solve);

  auto* verify_cmd = app.add_subcommand("verify", "Check a candidate solution");
  verify_cmd->add_option("--in", in_path, "Instance")->required();
  verify_cmd->add_option("--solution", solution_path, "Candidate solution")->required();
  add_common(verify_cmd);

  auto* roundtrip = app.add_subcommand("roundtrip", "Round-trip soundness campaign for one reduction");
  roundtrip->add_option("--reduction", reduction_ids, "Reduction id (repeat to chain)");
  add_campaign(roundtrip);

  auto* fuzz = app.add_subcommand("fuzz", "Randomized campaign over many reductions and the cycle chain");
  fuzz->add_option("--reduction", reduction_ids, "Reduction ids or a+b chains (default: all)");
  add_campaign(fuzz);

  auto* chain_cmd = app.add_subcommand("chain", "Compose reductions; solve and pull back one instance or run a campaign");
  chain_cmd->add_option("--reduction", reduction_ids, "Reduction ids in order")->required();
  chain_cmd->add_option("--in", in_path, "Source instance (omit to run a campaign)");
  add_campaign(chain_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  }

  VerifyOptions vopts{strict};
  auto campaign_config = [&] {
    CampaignConfig cfg;
    cfg.id = campaign_id;
    cfg.seed = seed;
    cfg.count = count;
    cfg.n_min = std::min(n_min, n);
    cfg.n_max = n;
    cfg.verify = vopts;
    cfg.case_limit = case_limit;
    cfg.gates = gates;
    cfg.depth = depth;
    cfg.jobs = jobs;
    return cfg;
  };

  try {
    if (*gen) {
      Problem p;
      try {
        p = problem_from_name(problem_name_arg);
      } catch (const ParseError& e) {
        throw UsageError(e.what());
      }
      Rng rng(seed);
      write_json(instance_to_json(generate_instance(p, rng, GenOptions{n, gates, depth})), out_path);
      return 0;
    }
    if (*reduce) {
      const ReductionDef def = resolve_or_usage(reduction_ids);
      const Instance source = read_instance(in_path);
      const Reduction red = def.apply(source);
      ordered_json out;
      out["reduction"] = def.id;
      if (red.direct) {
        out["direct_solution"] = solution_to_json(*red.direct);
      } else if (!solution_path.empty()) {
        const Solution back = red.pull(read_solution(solution_path));
        const Verdict v = verify(source, back, vopts);
        out["solution"] = solution_to_json(back);
        out["accepted"] = v.accepted;
        if (!v) out["reason"] = v.reason;
        write_json(out, out_path);
        return v ? 0 : 1;
      } else {
        out["instance"] = instance_to_json(*red.target_instance);
      }
      write_json(out, out_path);
      return 0;
    }
    if (*solve) {
      const Instance inst = read_instance(in_path);
      if (all) {
        ordered_json arr = ordered_json::array();
        EnumerateOptions eo;
        eo.verify = vopts;
        for (const auto& s : enumerate_solutions(inst, eo)) arr.push_back(solution_to_json(s));
        write_json({{"solutions", arr}}, out_path);
      } else {
        write_json({{"solution", solution_to_json(brute_force(inst, vopts))}}, out_path);
      }
      return 0;
    }
    if (*verify_cmd) {
      const Instance inst = read_instance(in_path);
      const Verdict v = verify(inst, read_solution(solution_path), vopts);
      ordered_json out{{"accepted", v.accepted}, {"case", v.case_no}};
      if (!v) out["reason"] = v.reason;
      write_json(out, out_path);
      return v ? 0 : 1;
    }
    if (*roundtrip) {
      const ReductionDef def = resolve_or_usage(reduction_ids);
      CampaignConfig cfg = campaign_config();
      cfg.reductions = {def.id};
      const ordered_json rep = run_fuzz(cfg);
      write_json(rep, out_path);
      return report_failures(rep) == 0 ? 0 : 1;
    }
    if (*fuzz) {
      if (fuzz->count("--n") == 0) n = 4;
      CampaignConfig cfg = campaign_config();
      if (reduction_ids.empty()) {
        cfg.reductions = default_fuzz_reductions();
      } else {
        for (const auto& id : reduction_ids) cfg.reductions.push_back(resolve_or_usage({id}).id);
      }
      const ordered_json rep = run_fuzz(cfg);
      write_json(rep, out_path);
      return report_failures(rep) == 0 ? 0 : 1;
    }
    if (*chain_cmd) {
      const ReductionDef def = resolve_or_usage(reduction_ids);
      if (in_path.empty()) {
        CampaignConfig cfg = campaign_config();
        cfg.reductions = {def.id};
        const ordered_json rep = run_fuzz(cfg);
        write_json(rep, out_path);
        return report_failures(rep) == 0 ? 0 : 1;
      }
      const Instance source = read_instance(in_path);
      const Reduction red = def.apply(source);
      ordered_json out;
      out["reduction"] = def.id;
      Solution back;
      if (red.direct) {
        back = *red.direct;
      } else {
        const Solution target_sol = brute_force(*red.target_instance, vopts);
        out["instance"] = instance_to_json(*red.target_instance);
        out["target_solution"] = solution_to_json(target_sol);
        back = red.pull(target_sol);
      }
      const Verdict v = verify(source, back, vopts);
      out["solution"] = solution_to_json(back);
      out["accepted"] = v.accepted;
      if (!v) out["reason"] = v.reason;
      write_json(out, out_path);
      return v ? 0 : 1;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}
