#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "asysig/errors.hpp"

namespace asysig {

/// Fixed-width vector over {0,1}, width 1..64. Coordinate i is bit i;
/// the text form lists coordinate 0 first ("10" has coordinate 0 set).
class word {
 public:
  word() : width_(1), bits_(0) {}
  word(int width, std::uint64_t bits) : width_(width), bits_(bits & mask(width)) {
    if (width < 1 || width > 64) fail(errc::bad_parameter, "word width out of range");
  }

  static word zeros(int width) { return word(width, 0); }
  static word ones(int width) { return word(width, ~0ull); }

  int width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool bit(int i) const { return (bits_ >> i) & 1u; }

  word operator~() const { return word(width_, ~bits_); }
  friend word operator&(const word& a, const word& b) { return word(a.checked(b), a.bits_ & b.bits_); }
  friend word operator|(const word& a, const word& b) { return word(a.checked(b), a.bits_ | b.bits_); }
  friend word operator^(const word& a, const word& b) { return word(a.checked(b), a.bits_ ^ b.bits_); }

  /// Pointwise order: a <= b in every coordinate.
  friend bool leq(const word& a, const word& b) { return (a.checked(b), (a.bits_ & ~b.bits_) == 0); }

  friend bool operator==(const word& a, const word& b) {
    return a.width_ == b.width_ && a.bits_ == b.bits_;
  }
  friend bool operator!=(const word& a, const word& b) { return !(a == b); }
  friend bool operator<(const word& a, const word& b) {
    return a.width_ != b.width_ ? a.width_ < b.width_ : a.bits_ < b.bits_;
  }

  bool any() const { return bits_ != 0; }

  std::string str() const {
    std::string s(std::size_t(width_), '0');
    for (int i = 0; i < width_; ++i)
      if (bit(i)) s[std::size_t(i)] = '1';
    return s;
  }

 private:
  int checked(const word& other) const {
    if (width_ != other.width_) fail(errc::width_mismatch, "word widths differ");
    return width_;
  }
  static std::uint64_t mask(int w) { return w >= 64 ? ~0ull : ((1ull << w) - 1); }

  int width_;
  std::uint64_t bits_;
};

/// Parses a {0,1} string; coordinate 0 is the first character.
inline word parse_word(const std::string& s) {
  if (s.empty() || s.size() > 64) fail(errc::syntax_error, "bad bit string '" + s + "'");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') bits |= 1ull << i;
    else if (s[i] != '0') fail(errc::syntax_error, "bad bit '" + std::string(1, s[i]) + "'");
  }
  return word(int(s.size()), bits);
}

/// All 2^width words, in increasing bits order.
inline std::vector<word> all_words(int width) {
  if (width < 1 || width > 20) fail(errc::budget_exceeded, "word enumeration width too large");
  std::vector<word> out;
  out.reserve(1u << width);
  for (std::uint64_t b = 0; b < (1ull << width); ++b) out.emplace_back(width, b);
  return out;
}

}  // namespace asysig
