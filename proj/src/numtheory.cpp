#include "tfnp/numtheory.hpp"

#include "tfnp/errors.hpp"

namespace tfnp {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> factorize(std::uint64_t n) {
  if (n == 0) throw RangeError("cannot factorize 0");
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    std::uint64_t k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k > 0) out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::optional<std::uint64_t> generator_witness(std::uint64_t p,
                                               const std::vector<std::pair<std::uint64_t, std::uint64_t>>& factors,
                                               std::uint64_t g) {
  for (const auto& [q, k] : factors) {
    (void)k;
    if (q == 0 || (p - 1) % q != 0) return q;
    if (pow_mod(g, (p - 1) / q, p) == 1) return q;
  }
  return std::nullopt;
}

}  // namespace tfnp
