#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "tfnp/campaign.hpp"
#include "tfnp/errors.hpp"
#include "tfnp/generators.hpp"
#include "tfnp/oracles.hpp"
#include "tfnp/reductions.hpp"

using namespace tfnp;
using namespace tfnp::testing;

namespace {

Witness idx(std::uint64_t a) { return Witness{a}; }

// Pulls back every target solution and checks it against the source.
// Returns the number of target solutions seen.
std::size_t check_all(const ReductionDef& def, const Instance& source, VerifyOptions opts = {}) {
  Reduction red = def.apply(source);
  if (red.direct) {
    REQUIRE(verify(source, *red.direct, opts).accepted);
    return 0;
  }
  EnumerateOptions eo;
  eo.verify = opts;
  const auto sols = enumerate_solutions(*red.target_instance, eo);
  for (const auto& sol : sols) {
    INFO(def.id, " target ", describe(sol));
    const bool impossible = std::count(def.impossible_cases.begin(), def.impossible_cases.end(), sol.case_no) > 0;
    REQUIRE_FALSE(impossible);
    Solution back = red.pull(sol);
    Verdict v = verify(source, back, opts);
    INFO("pulled back ", describe(back), ": ", v.reason);
    REQUIRE(v.accepted);
  }
  return sols.size();
}

}  // namespace

TEST_CASE("registry") {
  CHECK(reductions().size() == 12);
  std::set<std::string> ids;
  for (const auto& r : reductions()) ids.insert(r.id);
  CHECK(ids.size() == 12);
  CHECK(find_reduction("collision_to_dove").target == Problem::Dove);
  CHECK_THROWS_AS(find_reduction("collision_to_nowhere"), ValidationError);
  CHECK_THROWS_AS(find_reduction("dove_to_dlog").apply(PigeonInstance{identity_circuit(2)}), StructuralError);
  CHECK_THROWS_AS(find_reduction("collision_to_dove").apply(CollisionInstance{identity_circuit(2)}), ValidationError);
}

TEST_CASE("Collision to Dove") {
  Reduction r = red_collision_to_dove(CollisionInstance{constant_circuit(2, 1, 0)});
  const auto& dove = std::get<DoveInstance>(*r.target_instance);
  CHECK(dove.c.num_inputs() == 4);
  CHECK(dove.c.num_outputs() == 4);
  Solution back = r.pull(make_solution(Problem::Dove, 3, {B("0000"), B("0001")}));
  CHECK(back == make_solution(Problem::Collision, 1, {B("00"), B("01")}));
  CHECK_THROWS_AS(r.pull(make_solution(Problem::Dove, 1, {B("0000")})), SoundnessViolation);
  CHECK_THROWS_AS(r.pull(make_solution(Problem::Collision, 1, {B("00"), B("01")})), StructuralError);

  // m = n - 2: one padding zero before embedding.
  Circuit c = table_circuit(3, 1, [](std::uint64_t x) { return x & 1; });
  Reduction r3 = red_collision_to_dove(CollisionInstance{c});
  const Circuit& v = std::get<DoveInstance>(*r3.target_instance).c;
  CHECK(v.num_outputs() == 6);
  for (std::uint64_t x = 0; x < 64; ++x) {
    REQUIRE(v.evaluate_word(x) == (((x >> 3) & 1) << 5 | (x & 1) << 3 | 3));
  }
}

TEST_CASE("Dove to DLog") {
  Rng rng(5);
  const auto& def = find_reduction("dove_to_dlog");
  std::size_t seen_case1 = 0, seen_case5 = 0;
  for (int trial = 0; trial < 60; ++trial) {
    Circuit c = random_table_circuit(rng, 3, 3);
    Reduction r = def.apply(DoveInstance{c});
    const auto& rep = std::get<DLogInstance>(*r.target_instance).rep;
    CHECK(rep.s == 8);
    CHECK(rep.g == 0);
    CHECK(rep.id == 1);
    CHECK(rep.t == 1);
    for (const auto& sol : enumerate_solutions(*r.target_instance)) {
      Solution back = r.pull(sol);
      REQUIRE(verify(DoveInstance{c}, back).accepted);
      if (sol.case_no == 1) {
        ++seen_case1;
        REQUIRE(back.case_no == 2);
        REQUIRE(c.evaluate(bits_witness(back, 0)) == Bitstring::unit(3));
      }
      if (sol.case_no == 5 && index_function(rep, int_witness(sol, 1)) != rep.t) {
        ++seen_case5;
        REQUIRE(back.case_no == 4);
      }
    }
  }
  CHECK(seen_case1 > 0);
  CHECK(seen_case5 > 0);
}

TEST_CASE("Dove to DLog: planted collisions pull back to Dove solutions") {
  // Permutations with one planted collision, exhaustive over the planted pair.
  Rng rng(8);
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = a + 1; b < 8; ++b) {
      std::vector<std::uint64_t> perm(8);
      for (std::uint64_t i = 0; i < 8; ++i) perm[i] = i;
      for (std::size_t i = 8; i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
      perm[b] = perm[a];
      Circuit c = table_circuit(3, 3, [&](std::uint64_t x) { return perm[x]; });
      check_all(find_reduction("dove_to_dlog"), DoveInstance{c});
    }
  }
}

TEST_CASE("DLog to General-Claw") {
  GroupoidRep rep = shifted_identity_groupoid(3, 0, 0);
  const auto& def = find_reduction("dlog_to_general_claw");
  Reduction r = def.apply(DLogInstance{rep});
  for (const auto& sol : enumerate_solutions(*r.target_instance)) {
    REQUIRE(sol.case_no == 1);
    Solution back = r.pull(sol);
    REQUIRE(back.case_no == 1);
    const std::uint64_t x = bit_compose(bits_witness(sol, 0)), y = bit_compose(bits_witness(sol, 1));
    REQUIRE(int_witness(back, 0) == (x + 8 - y) % 8);
  }

  // Case 4: sigma0 leaves [s] at u = 0 because f(id, id) = 3 >= s = 3.
  GroupoidRep over{3, constant_circuit(4, 2, 3), 0, 1, 2};
  Reduction ro = def.apply(DLogInstance{over});
  const auto& gc = std::get<GeneralClawInstance>(*ro.target_instance);
  CHECK(gc.s == 3);
  Solution back = ro.pull(make_solution(Problem::GeneralClaw, 4, {B("00")}));
  CHECK(back == make_solution(Problem::DLog, 2, {idx(0), idx(0)}));
  CHECK(verify(DLogInstance{over}, back).accepted);
}

TEST_CASE("General-Claw to Collision") {
  const std::size_t n = 3;
  GeneralClawInstance ids{identity_circuit(n), identity_circuit(n), 7};
  Reduction r = red_general_claw_to_collision(ids);
  const auto& col = std::get<CollisionInstance>(*r.target_instance);
  CHECK(col.c.num_inputs() == 4);
  CHECK(col.c.num_outputs() == 3);
  Solution back = r.pull(make_solution(Problem::Collision, 1, {B("0000"), B("1000")}));
  CHECK(back == make_solution(Problem::GeneralClaw, 1, {B("000"), B("000")}));

  // Planted claw sigma0(a) = sigma1(b) between two permutations.
  for (std::uint64_t a = 0; a < 8; ++a) {
    for (std::uint64_t b = 0; b < 8; ++b) {
      Circuit s0 = table_circuit(n, n, [](std::uint64_t x) { return (x + 3) % 8; });
      Circuit s1 = table_circuit(n, n, [&](std::uint64_t x) {
        // A permutation with sigma1(b) = sigma0(a).
        const std::uint64_t target = (a + 3) % 8;
        const std::uint64_t base = (5 * x + 1) % 8;
        const std::uint64_t at_b = (5 * b + 1) % 8;
        if (x == b) return target;
        return base == target ? at_b : base;
      });
      GeneralClawInstance inst{s0, s1, 7};
      check_all(find_reduction("general_claw_to_collision"), inst);
    }
  }

  // sigma0 maps 0 to 7 >= s: the chain leaves [s] and case 4 comes back.
  Circuit s0 = table_circuit(n, n, [](std::uint64_t x) { return x == 0 ? 7 : x; });
  GeneralClawInstance over{s0, identity_circuit(n), 7};
  Reduction ro = red_general_claw_to_collision(over);
  Solution b4 = ro.pull(make_solution(Problem::Collision, 1, {B("0001"), B("0011")}));
  CHECK(b4.case_no == 4);
  CHECK(bits_witness(b4, 0) == B("000"));
  CHECK(verify(over, b4).accepted);
}

TEST_CASE("Collision to Claw") {
  Reduction r = red_collision_to_claw(CollisionInstance{constant_circuit(3, 2, 1)});
  CHECK(r.pull(make_solution(Problem::Claw, 2, {B("000"), B("001")})) ==
        make_solution(Problem::Collision, 1, {B("000"), B("001")}));
  CHECK_THROWS_AS(r.pull(make_solution(Problem::Claw, 1, {B("000"), B("001")})), SoundnessViolation);

  // Every collision comes back unchanged.
  Circuit c = table_circuit(3, 2, [](std::uint64_t x) { return x == 3 ? 1 : x % 2 == 0 ? x / 2 : (x == 1 ? 1 : 3); });
  check_all(find_reduction("collision_to_claw"), CollisionInstance{c});
}

TEST_CASE("Claw to General-Claw") {
  Circuit s0 = table_circuit(3, 3, [](std::uint64_t x) { return (x + 1) % 8; });
  Circuit s1 = table_circuit(3, 3, [](std::uint64_t x) { return (3 * x) % 8; });
  Reduction r = red_claw_to_general_claw(ClawInstance{s0, s1});
  const auto& gc = std::get<GeneralClawInstance>(*r.target_instance);
  CHECK(gc.s == 8);
  // sigma0(2) = 3 = sigma1(1)
  CHECK(r.pull(make_solution(Problem::GeneralClaw, 1, {B("0010"), B("0001")})) ==
        make_solution(Problem::Claw, 1, {B("010"), B("001")}));
  CHECK_THROWS_AS(r.pull(make_solution(Problem::GeneralClaw, 4, {B("0000")})), SoundnessViolation);
  // Lifted outputs of 0u and 1v differ in the first bit.
  for (std::uint64_t u = 0; u < 8; ++u) {
    for (std::uint64_t v = 8; v < 16; ++v) {
      REQUIRE(gc.sigma0.evaluate_word(u) != gc.sigma0.evaluate_word(v));
      REQUIRE(gc.sigma1.evaluate_word(u) != gc.sigma1.evaluate_word(v));
    }
  }
  check_all(find_reduction("claw_to_general_claw"), ClawInstance{s0, s1});
}

TEST_CASE("Collision and Prefix-Collision") {
  Reduction r = red_collision_to_prefix(CollisionInstance{constant_circuit(3, 2, 2)});
  CHECK(std::get<PrefixCollisionInstance>(*r.target_instance).c.num_outputs() == 3);
  CHECK(r.pull(make_solution(Problem::PrefixCollision, 1, {B("000"), B("001")})) ==
        make_solution(Problem::Collision, 1, {B("000"), B("001")}));

  // C(u) = z || 0, C(v) = z || 1 collide after the projection.
  Circuit c = table_circuit(3, 3, [](std::uint64_t x) { return x == 5 ? 6 : x == 2 ? 7 : x; });
  Reduction rp = red_prefix_to_collision(PrefixCollisionInstance{c});
  const Circuit& proj = std::get<CollisionInstance>(*rp.target_instance).c;
  CHECK(proj.evaluate(B("101")) == proj.evaluate(B("010")));
  CHECK(rp.pull(make_solution(Problem::Collision, 1, {B("101"), B("010")})) ==
        make_solution(Problem::PrefixCollision, 1, {B("101"), B("010")}));
  check_all(find_reduction("prefix_to_collision"), PrefixCollisionInstance{c});
}

TEST_CASE("Pigeon to Index") {
  Reduction r = red_pigeon_to_index(PigeonInstance{identity_circuit(2)});
  const Instance& target = *r.target_instance;
  auto case1 = enumerate_solutions(target, EnumerateOptions{{}, 100, 1});
  REQUIRE(case1.size() == 1);
  CHECK(int_witness(case1[0], 0) == 9);
  CHECK(r.pull(case1[0]) == make_solution(Problem::Pigeon, 1, {B("00")}));

  Reduction rc = red_pigeon_to_index(PigeonInstance{constant_circuit(2, 2, 1)});
  std::set<std::uint64_t> members;
  for (const auto& sol : enumerate_solutions(*rc.target_instance, EnumerateOptions{{}, 1000, 3})) {
    members.insert(int_witness(sol, 0));
    members.insert(int_witness(sol, 1));
  }
  CHECK(members == std::set<std::uint64_t>{9, 11, 13, 15});
  CHECK(rc.pull(make_solution(Problem::Index, 3, {idx(9), idx(11)})) ==
        make_solution(Problem::Pigeon, 2, {B("00"), B("01")}));
  CHECK_THROWS_AS(rc.pull(make_solution(Problem::Index, 3, {idx(8), idx(11)})), SoundnessViolation);
  CHECK_THROWS_AS(rc.pull(make_solution(Problem::Index, 2, {idx(1), idx(1)})), SoundnessViolation);
}

TEST_CASE("Index to Pigeon") {
  Reduction r = red_index_to_pigeon(IndexInstance{shifted_identity_groupoid(4, 0, 5)});
  const auto sols = enumerate_solutions(*r.target_instance);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == make_solution(Problem::Pigeon, 1, {B("0101")}));
  CHECK(r.pull(sols[0]) == make_solution(Problem::Index, 1, {idx(5)}));

  // s = 5: the inputs 5, 6, 7 are fixed points, so collisions stay below 5.
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> table(64);
    for (auto& v : table) v = rng.below(8);
    GroupoidRep rep{5, from_truth_table(6, 3, table), rng.below(5), rng.below(5), rng.below(5)};
    Reduction ri = red_index_to_pigeon(IndexInstance{rep});
    const Circuit& c = std::get<PigeonInstance>(*ri.target_instance).c;
    for (std::uint64_t x = 5; x < 8; ++x) REQUIRE(c.evaluate_word(x) == x);
    for (const auto& sol : enumerate_solutions(*ri.target_instance)) {
      for (const auto& w : sol.witnesses) REQUIRE(bit_compose(std::get<Bitstring>(w)) < 5);
    }
    check_all(find_reduction("index_to_pigeon"), IndexInstance{rep});
  }

  // Overflow at the first squaring gives the operands (id, id).
  GroupoidRep over{3, constant_circuit(4, 2, 3), 1, 2, 0};
  Reduction ro = red_index_to_pigeon(IndexInstance{over});
  Solution back = ro.pull(brute_force(*ro.target_instance));
  CHECK(back == make_solution(Problem::Index, 2, {idx(1), idx(1)}));
  CHECK(verify(IndexInstance{over}, back).accepted);
  CHECK_FALSE(verify(IndexInstance{over}, back, VerifyOptions{true}).accepted);
}

TEST_CASE("DLog_p to DLog") {
  Reduction r = red_dlogp_to_dlog(make_dlogp(7, 3, 6));
  const GroupoidRep& rep = std::get<DLogInstance>(*r.target_instance).rep;
  CHECK(rep.s == 6);
  CHECK(rep.f == build_modmul(7));
  CHECK(rep.id == 0);
  CHECK(rep.g == 2);
  CHECK(rep.t == 5);
  Solution back = r.pull(brute_force(*r.target_instance));
  CHECK(back == make_solution(Problem::DLogP, 1, {idx(3)}));

  Reduction r5 = red_dlogp_to_dlog(make_dlogp(5, 2, 1));
  CHECK(r5.pull(brute_force(*r5.target_instance)) == make_solution(Problem::DLogP, 1, {idx(0)}));
  CHECK_THROWS_AS(r5.pull(make_solution(Problem::DLog, 3, {idx(0), idx(1)})), SoundnessViolation);
  CHECK_THROWS_AS(find_reduction("dlogp_to_dlog").apply(make_dlogp(7, 2, 3)), ValidationError);
}

TEST_CASE("Pigeon to Blichfeldt") {
  Reduction r = red_pigeon_to_blichfeldt(PigeonInstance{not_circuit(2)});
  const auto& bl = std::get<BlichfeldtInstance>(*r.target_instance);
  CHECK(bl.basis == IntMatrix::identity(2, 2));
  CHECK(bl.s == 4);
  CHECK(bl.coord_width == 1);
  Solution first = brute_force(*r.target_instance);
  CHECK(first == make_solution(Problem::Blichfeldt, 1, {B("00"), B("11")}));
  CHECK(r.pull(first) == make_solution(Problem::Pigeon, 1, {B("11")}));
  CHECK_THROWS_AS(r.pull(make_solution(Problem::Blichfeldt, 2, {idx(0)})), SoundnessViolation);

  Reduction rz = red_pigeon_to_blichfeldt(PigeonInstance{identity_circuit(3)});
  CHECK_FALSE(rz.target_instance.has_value());
  REQUIRE(rz.direct);
  CHECK(*rz.direct == make_solution(Problem::Pigeon, 1, {B("000")}));

  Reduction rc = red_pigeon_to_blichfeldt(PigeonInstance{constant_circuit(2, 2, 2)});
  Solution c1 = brute_force(*rc.target_instance);
  CHECK(c1 == make_solution(Problem::Blichfeldt, 1, {B("00"), B("01")}));
  CHECK(rc.pull(c1) == make_solution(Problem::Pigeon, 2, {B("00"), B("01")}));
}

TEST_CASE("chain") {
  ReductionDef two = chain(find_reduction("collision_to_dove"), find_reduction("dove_to_dlog"));
  CHECK(two.source == Problem::Collision);
  CHECK(two.target == Problem::DLog);
  Instance src = CollisionInstance{constant_circuit(2, 1, 0)};
  Reduction r = two.apply(src);
  Solution back = r.pull(brute_force(*r.target_instance));
  CHECK(back.problem == Problem::Collision);
  CHECK(verify(src, back).accepted);
  CHECK_THROWS_AS(chain(find_reduction("collision_to_dove"), find_reduction("pigeon_to_index")), StructuralError);

  ReductionDef cycle = resolve_reduction(kCycleChain);
  CHECK(cycle.source == Problem::Collision);
  CHECK(cycle.target == Problem::Collision);
  Reduction rc = cycle.apply(src);
  const auto& out = std::get<CollisionInstance>(*rc.target_instance);
  CHECK(out.c.num_inputs() > 2);
  Solution cb = rc.pull(brute_force(*rc.target_instance));
  CHECK(verify(src, cb).accepted);

  // Direct answers pass through a chain.
  ReductionDef pb = chain(std::vector<ReductionDef>{find_reduction("index_to_pigeon"), find_reduction("pigeon_to_blichfeldt")});
  Reduction rd = pb.apply(IndexInstance{shifted_identity_groupoid(3, 0, 0)});
  REQUIRE(rd.direct);
  CHECK(*rd.direct == make_solution(Problem::Index, 1, {idx(0)}));
}

TEST_CASE("soundness over seeded corpora for every reduction") {
  for (const auto& def : reductions()) {
    std::size_t total = 0;
    for (std::uint64_t i = 0; i < 40; ++i) {
      Rng rng(mix_seed(1234, i));
      Instance src = generate_instance(def.source, rng, GenOptions{1 + rng.below(3)});
      INFO(def.id, " item ", i);
      total += check_all(def, src);
    }
    CHECK(total > 0);
  }
}
