#include "doctest.h"
#include "tfnp/errors.hpp"
#include "tfnp/generators.hpp"
#include "tfnp/lattice.hpp"
#include "tfnp/oracles.hpp"

using namespace tfnp;

TEST_CASE("det_exact") {
  CHECK(det_exact(IntMatrix::identity(4, 2)) == 16);
  CHECK(det_exact(IntMatrix(2, {2, 1, 0, 3})) == 6);
  CHECK(det_exact(IntMatrix(2, {1, 2, 2, 4})) == 0);
  CHECK(det_exact(IntMatrix(3, {0, 1, 0, 1, 0, 0, 0, 0, 1})) == -1);
}

TEST_CASE("lattice_member") {
  auto z = lattice_member(IntMatrix::identity(3, 2), {2, 0, -2});
  REQUIRE(z);
  CHECK((*z == std::vector<std::int64_t>{1, 0, -1}));
  CHECK_FALSE(lattice_member(IntMatrix::identity(2, 2), {1, 0}));
  auto zero = lattice_member(IntMatrix::identity(2, 2), {0, 0});
  REQUIRE(zero);
  CHECK((*zero == std::vector<std::int64_t>{0, 0}));
  CHECK_THROWS_AS(lattice_member(IntMatrix(2, {1, 2, 2, 4}), {0, 0}), ValidationError);
}

TEST_CASE("membership and determinant under unimodular transforms") {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + rng.below(6);
    IntMatrix d = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i) d.at(i, i) = static_cast<std::int64_t>(rng.between(1, 10));
    // Unimodular U as a product of elementary column operations.
    IntMatrix u = IntMatrix::identity(n);
    for (int k = 0; k < 6 && n > 1; ++k) {
      const std::size_t i = rng.below(n), j = rng.below(n);
      if (i == j) continue;
      const auto c = static_cast<std::int64_t>(rng.below(5)) - 2;
      for (std::size_t r = 0; r < n; ++r) u.at(r, j) += c * u.at(r, i);
    }
    IntMatrix b = multiply(d, u);
    REQUIRE(std::llabs(det_exact(b)) == std::llabs(det_exact(d)));
    for (int k = 0; k < 30; ++k) {
      std::vector<std::int64_t> z(n);
      for (auto& e : z) e = static_cast<std::int64_t>(rng.below(7)) - 3;
      auto back = lattice_member(b, tfnp::apply(b, z));
      REQUIRE(back);
      REQUIRE((*back == z));
    }
  }
}

TEST_CASE("only the zero {-1,0,1}-vector lies in L(2I)") {
  for (std::size_t n = 1; n <= 4; ++n) {
    IntMatrix b = IntMatrix::identity(n, 2);
    std::size_t members = 0, total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::int64_t> x(n);
      std::size_t c = code;
      for (auto& e : x) {
        e = static_cast<std::int64_t>(c % 3) - 1;
        c /= 3;
      }
      if (lattice_member(b, x)) ++members;
    }
    CHECK(members == 1);
  }
}

TEST_CASE("adjugate") {
  IntMatrix b(2, {2, 1, 0, 3});
  IntMatrix adj = adjugate(b);
  CHECK(multiply(adj, b) == IntMatrix::identity(2, 6));
}
