#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "tfnp/bitstring.hpp"
#include "tfnp/builder.hpp"
#include "tfnp/circuit.hpp"
#include "tfnp/synthesis.hpp"

namespace tfnp::testing {

inline Circuit table_circuit(std::size_t n, std::size_t m, const std::function<std::uint64_t(std::uint64_t)>& fn) {
  std::vector<std::uint64_t> table(std::size_t{1} << n);
  for (std::uint64_t x = 0; x < table.size(); ++x) table[x] = fn(x);
  return from_truth_table(n, m, table);
}

inline Circuit identity_circuit(std::size_t n) {
  return table_circuit(n, n, [](std::uint64_t x) { return x; });
}

inline Circuit constant_circuit(std::size_t n, std::size_t m, std::uint64_t value) {
  return table_circuit(n, m, [value](std::uint64_t) { return value; });
}

inline Circuit not_circuit(std::size_t n) {
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return table_circuit(n, n, [mask](std::uint64_t x) { return x ^ mask; });
}

inline Circuit xor2() {
  CircuitBuilder b(2);
  Wire out = b.lxor(b.input(0), b.input(1));
  return b.finish(std::vector<Wire>{out});
}

inline Bitstring B(const char* s) { return Bitstring::parse(s); }

}  // namespace tfnp::testing
