#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tfnp {

/// Fixed-width bit vector. Index 0 is the leftmost, most significant bit,
/// so "0011" composes to 3.
class Bitstring {
 public:
  /// Empty placeholder; every value produced by the library has width >= 1.
  Bitstring() = default;
  explicit Bitstring(std::size_t width, bool fill = false);
  explicit Bitstring(std::vector<std::uint8_t> bits);

  /// Parses an ASCII '0'/'1' string, most significant bit first.
  static Bitstring parse(std::string_view text);
  static Bitstring zeros(std::size_t width) { return Bitstring(width, false); }
  static Bitstring ones(std::size_t width) { return Bitstring(width, true); }
  /// 0^{k-1}1
  static Bitstring unit(std::size_t width);

  std::size_t width() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  bool is_zero() const noexcept;
  std::size_t popcount() const noexcept;

  Bitstring slice(std::size_t pos, std::size_t len) const;
  Bitstring with_bit(std::size_t i, bool value) const;

  std::string str() const;

  friend Bitstring concat(const Bitstring& a, const Bitstring& b);
  friend Bitstring operator^(const Bitstring& a, const Bitstring& b);
  friend bool operator==(const Bitstring&, const Bitstring&) = default;
  /// Orders by width, then lexicographically (numeric order for equal widths).
  friend std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b);

 private:
  std::vector<std::uint8_t> bits_;
};

struct BitstringHash {
  std::size_t operator()(const Bitstring& b) const noexcept;
};

enum class Shift { Add, Subtract };

/// bc^k(x) = sum_i x_{k-i} 2^i. Widths above 64 are rejected.
std::uint64_t bit_compose(const Bitstring& x);

/// bd^k(a): the k-bit representation with leading zeroes. Throws RangeError
/// when a >= 2^k.
Bitstring bit_decompose(std::uint64_t a, std::size_t k);

/// bd_0(a): binary representation without leading zeroes; bd_0(0) = "0".
Bitstring bit_decompose_minimal(std::uint64_t a);

/// bd(bc(u) +/- bc(w) mod 2^k).
Bitstring mod_shift(const Bitstring& u, const Bitstring& w, Shift sign);

/// Number of bits of a (0 for a = 0).
std::size_t bit_length(std::uint64_t a) noexcept;

/// ceil(log2 a) for a >= 1.
std::size_t ceil_log2(std::uint64_t a);

}  // namespace tfnp

template <>
struct std::hash<tfnp::Bitstring> : tfnp::BitstringHash {};
