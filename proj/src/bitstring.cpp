#include "tfnp/bitstring.hpp"

#include <algorithm>
#include <bit>

#include "tfnp/errors.hpp"

namespace tfnp {

Bitstring::Bitstring(std::size_t width, bool fill) : bits_(width, fill ? 1 : 0) {
  if (width == 0) throw StructuralError("bitstring width must be at least 1");
}

Bitstring::Bitstring(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  if (bits_.empty()) throw StructuralError("bitstring width must be at least 1");
  for (auto& b : bits_) {
    if (b > 1) throw StructuralError("bitstring elements must be 0 or 1");
  }
}

Bitstring Bitstring::parse(std::string_view text) {
  if (text.empty()) throw ParseError("", "empty bitstring");
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c != '0' && c != '1') {
      throw ParseError("offset " + std::to_string(i), std::string("invalid bit character '") + c + "'");
    }
    bits.push_back(c == '1' ? 1 : 0);
  }
  return Bitstring(std::move(bits));
}

Bitstring Bitstring::unit(std::size_t width) {
  Bitstring out(width);
  out.set(width - 1, true);
  return out;
}

bool Bitstring::is_zero() const noexcept {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

std::size_t Bitstring::popcount() const noexcept {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Bitstring Bitstring::slice(std::size_t pos, std::size_t len) const {
  if (pos + len > bits_.size()) throw StructuralError("bitstring slice out of range");
  return Bitstring(std::vector<std::uint8_t>(bits_.begin() + pos, bits_.begin() + pos + len));
}

Bitstring Bitstring::with_bit(std::size_t i, bool value) const {
  Bitstring out = *this;
  out.set(i, value);
  return out;
}

std::string Bitstring::str() const {
  std::string s(bits_.size(), '0');
  for (std::size_t i = 0; i < bits_.size(); ++i) {
    if (bits_[i]) s[i] = '1';
  }
  return s;
}

Bitstring concat(const Bitstring& a, const Bitstring& b) {
  std::vector<std::uint8_t> bits;
  bits.reserve(a.width() + b.width());
  bits.insert(bits.end(), a.bits_.begin(), a.bits_.end());
  bits.insert(bits.end(), b.bits_.begin(), b.bits_.end());
  return Bitstring(std::move(bits));
}

Bitstring operator^(const Bitstring& a, const Bitstring& b) {
  if (a.width() != b.width()) throw StructuralError("xor of bitstrings with different widths");
  Bitstring out = a;
  for (std::size_t i = 0; i < a.width(); ++i) out.bits_[i] ^= b.bits_[i];
  return out;
}

std::strong_ordering operator<=>(const Bitstring& a, const Bitstring& b) {
  if (auto c = a.width() <=> b.width(); c != 0) return c;
  return a.bits_ <=> b.bits_;
}

std::size_t BitstringHash::operator()(const Bitstring& b) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL ^ b.width();
  for (auto bit : b.bits()) {
    h ^= bit;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t bit_compose(const Bitstring& x) {
  if (x.width() > 64) throw RangeError("bit_compose supports widths up to 64");
  std::uint64_t value = 0;
  for (auto bit : x.bits()) value = (value << 1) | bit;
  return value;
}

Bitstring bit_decompose(std::uint64_t a, std::size_t k) {
  if (k == 0) throw StructuralError("bit_decompose width must be at least 1");
  if (k < 64 && (a >> k) != 0) {
    throw RangeError("value " + std::to_string(a) + " does not fit in " + std::to_string(k) + " bits");
  }
  Bitstring out(k);
  for (std::size_t i = 0; i < k && i < 64; ++i) out.set(k - 1 - i, ((a >> i) & 1U) != 0);
  return out;
}

Bitstring bit_decompose_minimal(std::uint64_t a) {
  return bit_decompose(a, a == 0 ? 1 : bit_length(a));
}

Bitstring mod_shift(const Bitstring& u, const Bitstring& w, Shift sign) {
  if (u.width() != w.width()) throw StructuralError("mod_shift operands have different widths");
  // Ripple over the bits so widths beyond 64 work too.
  Bitstring out(u.width());
  unsigned carry = 0;
  for (std::size_t i = u.width(); i-- > 0;) {
    int a = u[i] ? 1 : 0;
    int b = w[i] ? 1 : 0;
    int r = 0;
    if (sign == Shift::Add) {
      r = a + b + static_cast<int>(carry);
      carry = r >= 2 ? 1 : 0;
      r &= 1;
    } else {
      r = a - b - static_cast<int>(carry);
      carry = r < 0 ? 1 : 0;
      r = (r + 2) & 1;
    }
    out.set(i, r != 0);
  }
  return out;
}

std::size_t bit_length(std::uint64_t a) noexcept { return static_cast<std::size_t>(std::bit_width(a)); }

std::size_t ceil_log2(std::uint64_t a) {
  if (a == 0) throw RangeError("ceil_log2 of 0");
  return a == 1 ? 0 : bit_length(a - 1);
}

}  // namespace tfnp
