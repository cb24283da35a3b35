#include "doctest.h"
#include "helpers.hpp"
#include "tfnp/errors.hpp"

using namespace tfnp;
using tfnp::testing::B;

TEST_CASE("bit_compose reads the leftmost bit as most significant") {
  CHECK(bit_compose(B("101")) == 5);
  CHECK(bit_compose(B("0000")) == 0);
  CHECK(bit_compose(B("0011")) == 3);
}

TEST_CASE("bit_decompose pads with leading zeroes") {
  CHECK(bit_decompose(5, 4) == B("0101"));
  CHECK(bit_decompose(0, 3) == B("000"));
  CHECK(bit_decompose(6, 3) == B("110"));
  CHECK_THROWS_AS(bit_decompose(8, 3), RangeError);
}

TEST_CASE("bit_decompose_minimal") {
  CHECK(bit_decompose_minimal(5) == B("101"));
  CHECK(bit_decompose_minimal(12) == B("1100"));
  CHECK(bit_decompose_minimal(0) == B("0"));
  for (std::uint64_t a = 1; a < 5000; ++a) {
    Bitstring x = bit_decompose_minimal(a);
    REQUIRE(x[0]);
    REQUIRE(x.width() == bit_length(a));
    REQUIRE(bit_compose(x) == a);
  }
}

TEST_CASE("mod_shift drops the carry") {
  CHECK(mod_shift(B("0101"), B("0100"), Shift::Add) == B("1001"));
  CHECK(mod_shift(B("1101"), B("0100"), Shift::Add) == B("0001"));
  CHECK(mod_shift(B("0001"), B("0100"), Shift::Subtract) == B("1101"));
  CHECK_THROWS_AS(mod_shift(B("01"), B("010"), Shift::Add), StructuralError);
}

TEST_CASE("compose and decompose are inverse") {
  for (std::size_t k = 1; k <= 10; ++k) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); ++a) {
      REQUIRE(bit_compose(bit_decompose(a, k)) == a);
    }
  }
  for (std::size_t k : {11, 13, 16}) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << k); a += 7) REQUIRE(bit_compose(bit_decompose(a, k)) == a);
  }
}

TEST_CASE("mod_shift add then subtract is the identity") {
  for (std::uint64_t u = 0; u < 32; ++u) {
    for (std::uint64_t w = 0; w < 32; ++w) {
      Bitstring bu = bit_decompose(u, 5), bw = bit_decompose(w, 5);
      REQUIRE(mod_shift(mod_shift(bu, bw, Shift::Add), bw, Shift::Subtract) == bu);
    }
  }
}

TEST_CASE("Bitstring helpers") {
  CHECK(Bitstring::unit(4) == B("0001"));
  CHECK(concat(B("10"), B("01")) == B("1001"));
  CHECK((B("1100") ^ B("1010")) == B("0110"));
  CHECK(B("0110").slice(1, 2) == B("11"));
  CHECK(B("0110").popcount() == 2);
  CHECK(B("0000").is_zero());
  CHECK(B("011") < B("100"));
  CHECK_THROWS(Bitstring::parse("012"));
  CHECK(ceil_log2(1) == 0);
  CHECK(ceil_log2(16) == 4);
  CHECK(ceil_log2(17) == 5);
}
