#include "tfnp/reductions.hpp"

#include <memory>

#include "tfnp/errors.hpp"

namespace tfnp {

Solution Reduction::pull(const Solution& target_solution) const {
  if (target_solution.problem != target) {
    throw StructuralError("pull-back expects a " + std::string(problem_name(target)) + " solution, got " +
                          std::string(problem_name(target_solution.problem)));
  }
  if (!pull_back) throw StructuralError("reduction has no pull-back (solved directly)");
  return pull_back(target_solution);
}

namespace {

template <class T>
const T& expect(const Instance& inst) {
  const auto* p = std::get_if<T>(&inst);
  if (p == nullptr) throw StructuralError("reduction applied to a " + std::string(problem_name(problem_of(inst))) + " instance");
  auto violations = validate_instance(inst);
  if (!violations.empty()) throw ValidationError("invalid source instance: " + violations.front());
  return *p;
}

template <class T>
ReductionDef make(std::string id, Problem src, Problem dst, std::vector<int> impossible, Reduction (*fn)(const T&)) {
  return ReductionDef{std::move(id), src, dst, std::move(impossible),
                      [fn](const Instance& inst) { return fn(expect<T>(inst)); }};
}

}  // namespace

const std::vector<ReductionDef>& reductions() {
  static const std::vector<ReductionDef> all = {
      make("collision_to_dove", Problem::Collision, Problem::Dove, {1, 2, 4}, &red_collision_to_dove),
      make("dove_to_dlog", Problem::Dove, Problem::DLog, {2}, &red_dove_to_dlog),
      make("dlog_to_general_claw", Problem::DLog, Problem::GeneralClaw, {}, &red_dlog_to_general_claw),
      make("general_claw_to_collision", Problem::GeneralClaw, Problem::Collision, {}, &red_general_claw_to_collision),
      make("collision_to_claw", Problem::Collision, Problem::Claw, {1}, &red_collision_to_claw),
      make("claw_to_general_claw", Problem::Claw, Problem::GeneralClaw, {4, 5}, &red_claw_to_general_claw),
      make("collision_to_prefix", Problem::Collision, Problem::PrefixCollision, {}, &red_collision_to_prefix),
      make("prefix_to_collision", Problem::PrefixCollision, Problem::Collision, {}, &red_prefix_to_collision),
      make("pigeon_to_index", Problem::Pigeon, Problem::Index, {2}, &red_pigeon_to_index),
      make("index_to_pigeon", Problem::Index, Problem::Pigeon, {}, &red_index_to_pigeon),
      make("dlogp_to_dlog", Problem::DLogP, Problem::DLog, {2, 3, 4, 5}, &red_dlogp_to_dlog),
      make("pigeon_to_blichfeldt", Problem::Pigeon, Problem::Blichfeldt, {2, 3}, &red_pigeon_to_blichfeldt),
  };
  return all;
}

const ReductionDef& find_reduction(std::string_view id) {
  for (const auto& r : reductions()) {
    if (r.id == id) return r;
  }
  throw ValidationError("unknown reduction '" + std::string(id) + "'");
}

ReductionDef chain(const ReductionDef& r1, const ReductionDef& r2) {
  if (r1.target != r2.source) {
    throw StructuralError("cannot chain " + r1.id + " (to " + std::string(problem_name(r1.target)) + ") with " + r2.id +
                          " (from " + std::string(problem_name(r2.source)) + ")");
  }
  ReductionDef out;
  out.id = r1.id + "+" + r2.id;
  out.source = r1.source;
  out.target = r2.target;
  out.impossible_cases = r2.impossible_cases;
  out.apply = [a1 = r1.apply, a2 = r2.apply, src = r1.source, dst = r2.target](const Instance& inst) {
    auto first = std::make_shared<Reduction>(a1(inst));
    Reduction result;
    result.source = src;
    result.target = dst;
    if (first->direct) {
      result.direct = first->direct;
      return result;
    }
    Reduction second = a2(*first->target_instance);
    if (second.direct) {
      result.direct = first->pull(*second.direct);
      return result;
    }
    result.target_instance = std::move(second.target_instance);
    result.pull_back = [first, back = second.pull_back](const Solution& sol) { return first->pull(back(sol)); };
    return result;
  };
  return out;
}

ReductionDef chain(std::span<const ReductionDef> steps) {
  if (steps.empty()) throw StructuralError("empty reduction chain");
  ReductionDef acc = steps[0];
  for (std::size_t i = 1; i < steps.size(); ++i) acc = chain(acc, steps[i]);
  return acc;
}

}  // namespace tfnp
