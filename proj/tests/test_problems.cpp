#include <map>

#include "doctest.h"
#include "helpers.hpp"
#include "tfnp/errors.hpp"
#include "tfnp/generators.hpp"
#include "tfnp/instance_io.hpp"
#include "tfnp/numtheory.hpp"
#include "tfnp/oracles.hpp"
#include "tfnp/reductions.hpp"

using namespace tfnp;
using namespace tfnp::testing;

TEST_CASE("groupoid_op on the Dove groupoid") {
  Circuit c = table_circuit(3, 3, [](std::uint64_t x) { return (3 * x + 5) % 8; });
  GroupoidRep rep = dove_groupoid(c);
  CHECK(groupoid_op(rep, 2, 2) == bit_compose(c.evaluate(B("010"))));
  CHECK(groupoid_op(rep, 0, 5) == bit_compose(c.evaluate(B("100"))));
  CHECK(groupoid_op(rep, 3, 5) == 6);
  CHECK_THROWS_AS(groupoid_op(rep, 8, 1), RangeError);
}

TEST_CASE("index function on the identity construction") {
  GroupoidRep rep = shifted_identity_groupoid(4, 0);
  CHECK(index_function(rep, 13) == 13);
  for (std::uint64_t a = 0; a < 16; ++a) CHECK(index_function(rep, a) == a);
  for (std::size_t n = 1; n <= 8; ++n) {
    GroupoidRep r = shifted_identity_groupoid(n, 0);
    const auto table = index_table(r);
    for (std::uint64_t a = 0; a < r.s; ++a) {
      REQUIRE(table[a] == a);
      REQUIRE(index_function(r, a) == a);
    }
  }
}

TEST_CASE("shifted identity construction adds w") {
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t s = std::uint64_t{1} << n;
    for (std::uint64_t w = 0; w < s; ++w) {
      GroupoidRep r = shifted_identity_groupoid(n, w);
      for (std::uint64_t a = 0; a < s; ++a) REQUIRE(index_function(r, a) == (a + w) % s);
    }
  }
}

TEST_CASE("index function on the Pigeon construction") {
  Circuit c = table_circuit(2, 2, [](std::uint64_t x) { return (x * 3 + 2) % 4; });
  GroupoidRep rep = pigeon_index_groupoid(c);
  CHECK(rep.s == 16);
  CHECK(rep.id == 4);
  CHECK(rep.g == 15);
  CHECK(rep.t == 0);
  CHECK(index_function(rep, 3) == 7);
  CHECK(index_function(rep, 9) == bit_compose(c.evaluate(B("00"))));
  CHECK(index_function(rep, 11) == bit_compose(c.evaluate(B("01"))));
  CHECK(index_function(rep, 13) == bit_compose(c.evaluate(B("10"))));
  CHECK(index_function(rep, 15) == bit_compose(c.evaluate(B("11"))));
}

TEST_CASE("Pigeon construction: bijection off A_o, images of A_o below 2^n") {
  Rng rng(17);
  for (std::size_t n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      Circuit c = random_table_circuit(rng, n, n);
      GroupoidRep rep = pigeon_index_groupoid(c);
      const std::uint64_t s = rep.s, low = std::uint64_t{1} << n;
      std::vector<int> hit(s, 0);
      for (std::uint64_t a = 0; a < s; ++a) {
        const std::uint64_t v = index_function(rep, a);
        const bool in_ao = a >= 2 * low && a % 2 == 1;
        if (in_ao) {
          REQUIRE(v < low);
        } else {
          REQUIRE(v >= low);
          REQUIRE(v < s);
          ++hit[v];
        }
      }
      for (std::uint64_t v = low; v < s; ++v) REQUIRE(hit[v] == 1);
    }
  }
}

TEST_CASE("trace length law") {
  Rng rng(23);
  for (int trial = 0; trial < 3; ++trial) {
    GroupoidRep rep{1024, random_circuit(rng, CircuitSpec{20, 10, 60, 8}), rng.below(1024), rng.below(1024), 0};
    for (std::uint64_t x = 0; x < 1024; ++x) {
      const IndexTrace t = index_trace(rep, x);
      const Bitstring b = bit_decompose_minimal(x);
      REQUIRE(t.bits == b);
      REQUIRE(t.steps.size() == b.width() + b.popcount());
    }
  }
}

TEST_CASE("index_table agrees with the traced computation") {
  Rng rng(29);
  for (int trial = 0; trial < 30; ++trial) {
    Instance inst = generate_instance(Problem::DLog, rng, GenOptions{1 + rng.below(5)});
    const GroupoidRep& rep = std::get<DLogInstance>(inst).rep;
    const auto table = index_table(rep);
    for (std::uint64_t x = 0; x < rep.s; ++x) REQUIRE(table[x] == index_function(rep, x));
  }
}

TEST_CASE("verify examples") {
  Instance pig = PigeonInstance{identity_circuit(2)};
  CHECK(verify(pig, make_solution(Problem::Pigeon, 1, {B("00")})).accepted);
  CHECK(verify(pig, make_solution(Problem::Pigeon, 1, {B("00")})).case_no == 1);
  CHECK_FALSE(verify(pig, make_solution(Problem::Pigeon, 1, {B("01")})).accepted);
  CHECK_FALSE(verify(pig, make_solution(Problem::Pigeon, 2, {B("01"), B("01")})).accepted);

  Instance dlog = DLogInstance{shifted_identity_groupoid(4, 0, 5)};
  CHECK(verify(dlog, make_solution(Problem::DLog, 1, {std::uint64_t{5}})).accepted);
  CHECK_FALSE(verify(dlog, make_solution(Problem::DLog, 1, {std::uint64_t{6}})).accepted);

  Instance dove = DoveInstance{constant_circuit(3, 3, 2)};
  Verdict v = verify(dove, make_solution(Problem::Dove, 3, {B("000"), B("000")}));
  CHECK_FALSE(v.accepted);
  CHECK_FALSE(v.reason.empty());
  CHECK(verify(dove, make_solution(Problem::Dove, 3, {B("000"), B("001")})).accepted);

  CHECK_THROWS_AS(verify(pig, make_solution(Problem::Dove, 1, {B("00")})), StructuralError);
}

TEST_CASE("Index case 2 distinctness modes") {
  // f emits 3 >= s = 3 on every input, so (0, 0) overflows.
  GroupoidRep rep{3, constant_circuit(4, 2, 3), 0, 1, 2};
  Instance idx = IndexInstance{rep};
  Solution same = make_solution(Problem::Index, 2, {std::uint64_t{0}, std::uint64_t{0}});
  CHECK(verify(idx, same).accepted);
  CHECK_FALSE(verify(idx, same, VerifyOptions{true}).accepted);
  CHECK(verify(idx, make_solution(Problem::Index, 2, {std::uint64_t{0}, std::uint64_t{1}}), VerifyOptions{true}).accepted);
  Instance dlog = DLogInstance{rep};
  CHECK(verify(dlog, make_solution(Problem::DLog, 2, {std::uint64_t{0}, std::uint64_t{0}}), VerifyOptions{true}).accepted);
}

TEST_CASE("brute_force examples") {
  Solution col = brute_force(CollisionInstance{constant_circuit(3, 2, 1)});
  CHECK(col == make_solution(Problem::Collision, 1, {B("000"), B("001")}));

  Solution dl = brute_force(make_dlogp(7, 3, 6));
  CHECK(dl.case_no == 1);
  CHECK(int_witness(dl, 0) == 3);

  Solution pig = brute_force(PigeonInstance{not_circuit(2)});
  CHECK(pig == make_solution(Problem::Pigeon, 1, {B("11")}));
}

TEST_CASE("enumeration lists every solution in canonical order") {
  auto sols = enumerate_solutions(CollisionInstance{constant_circuit(2, 1, 0)});
  CHECK(sols.size() == 12);
  CHECK(sols.front() == make_solution(Problem::Collision, 1, {B("00"), B("01")}));
  CHECK(sols.back() == make_solution(Problem::Collision, 1, {B("11"), B("10")}));
  for (std::size_t i = 1; i < sols.size(); ++i) {
    CHECK(bits_witness(sols[i - 1], 0) <= bits_witness(sols[i], 0));
  }
  EnumerateOptions only;
  only.only_case = 2;
  CHECK(enumerate_solutions(PigeonInstance{constant_circuit(2, 2, 0)}, only).size() == 12);
  only.limit = 3;
  CHECK(enumerate_solutions(PigeonInstance{constant_circuit(2, 2, 0)}, only).size() == 3);
}

TEST_CASE("validate_instance examples") {
  CHECK(validate_instance(make_dlogp(7, 3, 6)).empty());
  CHECK_FALSE(validate_instance(make_dlogp(7, 2, 3)).empty());
  CHECK_FALSE(validate_instance(DLogPInstance{9, {{2, 3}}, 2, 1}).empty());
  CHECK_FALSE(validate_instance(DLogPInstance{7, {{2, 1}, {3, 2}}, 3, 1}).empty());

  BlichfeldtInstance ok{IntMatrix::identity(3, 2), 8, constant_circuit(3, 3, 0), 1};
  CHECK(validate_instance(ok).empty());
  BlichfeldtInstance small = ok;
  small.s = 7;
  small.v = constant_circuit(3, 3, 0);
  CHECK_FALSE(validate_instance(small).empty());
  BlichfeldtInstance singular{IntMatrix(2, {1, 2, 2, 4}), 4, constant_circuit(2, 2, 0), 1};
  CHECK_FALSE(validate_instance(singular).empty());

  CHECK_FALSE(validate_instance(CollisionInstance{identity_circuit(2)}).empty());
  CHECK_FALSE(validate_instance(GeneralClawInstance{identity_circuit(2), identity_circuit(2), 4}).empty());
  CHECK(validate_instance(GeneralClawInstance{identity_circuit(2), identity_circuit(2), 3}).empty());
}

TEST_CASE("DLog_p has exactly one discrete logarithm for p <= 31") {
  for (std::uint64_t p = 3; p <= 31; ++p) {
    if (!is_prime(p)) continue;
    for (std::uint64_t g = 1; g < p; ++g) {
      if (generator_witness(p, factorize(p - 1), g)) continue;
      for (std::uint64_t y = 1; y < p; ++y) {
        DLogPInstance inst = make_dlogp(p, g, y);
        REQUIRE(validate_instance(inst).empty());
        REQUIRE(enumerate_solutions(inst).size() == 1);
      }
    }
  }
}

TEST_CASE("totality and verification of brute-force answers") {
  for (Problem p : kAllProblems) {
    const std::size_t n_max = (p == Problem::DLog || p == Problem::Index) ? 4 : 6;
    for (std::uint64_t i = 0; i < 200; ++i) {
      Rng rng(mix_seed(99, i * 16 + static_cast<std::uint64_t>(p)));
      const std::size_t n = 1 + rng.below(n_max);
      Instance inst = generate_instance(p, rng, GenOptions{n});
      INFO(problem_name(p), " item ", i);
      REQUIRE(validate_instance(inst).empty());
      Solution sol = brute_force(inst);
      REQUIRE(verify(inst, sol).accepted);
    }
  }
}

TEST_CASE("instances and solutions serialize losslessly") {
  Rng rng(41);
  for (Problem p : kAllProblems) {
    for (int i = 0; i < 10; ++i) {
      Instance inst = generate_instance(p, rng, GenOptions{3});
      Instance back = instance_from_json(parse_json(instance_to_json(inst).dump()));
      REQUIRE(back == inst);
      Solution sol = brute_force(inst);
      REQUIRE(solution_from_json(parse_json(solution_to_json(sol).dump())) == sol);
    }
  }
  CHECK_THROWS_AS(instance_from_json(parse_json(R"({"problem":"nope"})")), ParseError);
}
