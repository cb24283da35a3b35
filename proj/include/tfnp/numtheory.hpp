#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tfnp {

/// Trial division.
bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// First listed prime factor q of p - 1 with g^((p-1)/q) = 1, if any.
std::optional<std::uint64_t> generator_witness(std::uint64_t p,
                                               const std::vector<std::pair<std::uint64_t, std::uint64_t>>& factors,
                                               std::uint64_t g);

}  // namespace tfnp
