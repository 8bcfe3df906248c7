#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>

#include "asysig/errors.hpp"

namespace asysig {

/// Exact rational time value, always kept in canonical reduced form
/// (gcd(num,den) == 1, den > 0) so equal values compare equal bit for bit.
/// Intermediate products are taken in 128 bits and reduced back; magnitudes
/// that do not fit 64 bits after reduction are rejected.
class rat {
 public:
  constexpr rat() : num_(0), den_(1) {}
  rat(std::int64_t n) : num_(n), den_(1) {}  // NOLINT: implicit by design
  rat(std::int64_t n, std::int64_t d) { init(n, d); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  friend rat operator-(const rat& x) { return rat(-x.num_, x.den_); }
  friend rat operator+(const rat& a, const rat& b) {
    return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend rat operator-(const rat& a, const rat& b) { return a + (-b); }
  friend rat operator*(const rat& a, const rat& b) {
    return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend rat operator/(const rat& a, const rat& b) {
    if (b.num_ == 0) fail(errc::bad_parameter, "division by zero rational");
    return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  rat& operator+=(const rat& o) { return *this = *this + o; }
  rat& operator-=(const rat& o) { return *this = *this - o; }

  friend bool operator==(const rat& a, const rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const rat& a, const rat& b) { return !(a == b); }
  friend bool operator<(const rat& a, const rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }
  friend bool operator>(const rat& a, const rat& b) { return b < a; }
  friend bool operator<=(const rat& a, const rat& b) { return !(b < a); }
  friend bool operator>=(const rat& a, const rat& b) { return !(a < b); }

  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  friend std::ostream& operator<<(std::ostream& os, const rat& x) { return os << x.str(); }

  double to_double() const { return double(num_) / double(den_); }

  /// Midpoint of two values, exact.
  static rat mid(const rat& a, const rat& b) { return (a + b) / rat(2); }

  std::size_t hash() const {
    std::size_t h = std::hash<std::int64_t>()(num_);
    return h * 1000003u ^ std::hash<std::int64_t>()(den_);
  }

 private:
  using i128 = __int128;

  void init(std::int64_t n, std::int64_t d) {
    if (d == 0) fail(errc::bad_parameter, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    num_ = g ? n / g : n;
    den_ = g ? d / g : d;
  }

  static rat from128(i128 n, i128 d) {
    if (d == 0) fail(errc::bad_parameter, "zero denominator");
    if (d < 0) { n = -n; d = -d; }
    i128 a = n < 0 ? -n : n;
    i128 b = d;
    while (b) { i128 t = a % b; a = b; b = t; }  // gcd
    if (a) { n /= a; d /= a; }
    if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
      fail(errc::bad_parameter, "rational overflow");
    rat r;
    r.num_ = std::int64_t(n);
    r.den_ = std::int64_t(d);
    return r;
  }

  std::int64_t num_;
  std::int64_t den_;
};

/// Parses "p" or "p/q" with optional sign; throws SyntaxError otherwise.
inline rat parse_rat(const std::string& text) {
  std::size_t slash = text.find('/');
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) fail(errc::syntax_error, "empty number in '" + text + "'");
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      fail(errc::syntax_error, "bad number '" + s + "'");
    }
    if (pos != s.size()) fail(errc::syntax_error, "trailing junk in number '" + s + "'");
    return v;
  };
  if (slash == std::string::npos) return rat(parse_int(text));
  return rat(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace asysig
