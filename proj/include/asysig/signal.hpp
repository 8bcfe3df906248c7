#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "asysig/bitword.hpp"
#include "asysig/errors.hpp"
#include "asysig/rational.hpp"

namespace asysig {

/// An n-dimensional eventually-constant piecewise-constant function of exact
/// rational time: the value before the first switch plus a finite, strictly
/// increasing list of (time, new value) switches. Canonical form drops no-op
/// switches, so structural equality coincides with functional equality.
/// Pieces are left-closed, right-open: the value on [t_k, t_{k+1}) is the
/// word listed at t_k.
class signal {
 public:
  using step = std::pair<rat, word>;

  explicit signal(word initial) : initial_(initial) {}

  signal(word initial, std::vector<step> steps) : initial_(initial) {
    std::sort(steps.begin(), steps.end(),
              [](const step& a, const step& b) { return a.first < b.first; });
    word prev = initial_;
    for (auto& s : steps) {
      if (!switches_.empty() && switches_.back().first == s.first)
        fail(errc::non_increasing_times, "duplicate switch time " + s.first.str());
      if (s.second.width() != initial_.width())
        fail(errc::width_mismatch, "switch word width differs from initial");
      if (s.second == prev) continue;  // canonicalize: drop no-op
      switches_.push_back(s);
      prev = s.second;
    }
  }

  static signal constant(word w) { return signal(w); }

  int width() const { return initial_.width(); }
  const word& initial() const { return initial_; }
  const std::vector<step>& switches() const { return switches_; }
  bool is_constant() const { return switches_.empty(); }

  /// Final value x(inf-0); exists because the switch list is finite.
  const word& final_value() const {
    return switches_.empty() ? initial_ : switches_.back().second;
  }

  /// Value of the piece containing t (pieces are [t_k, t_{k+1})).
  word value_at(const rat& t) const {
    word v = initial_;
    for (const auto& s : switches_) {
      if (s.first > t) break;
      v = s.second;
    }
    return v;
  }

  /// Left limit x(t-0): the value just before t.
  word left_limit(const rat& t) const {
    word v = initial_;
    for (const auto& s : switches_) {
      if (s.first >= t) break;
      v = s.second;
    }
    return v;
  }

  /// Support of the left derivative Dx: exactly the switch times. Reported
  /// as a set because t -> Dx(t) is nonzero only at isolated points and is
  /// not itself a signal.
  std::vector<rat> derivative_support() const {
    std::vector<rat> out;
    out.reserve(switches_.size());
    for (const auto& s : switches_) out.push_back(s.first);
    return out;
  }

  /// Dx(t) = x(t-0) xor x(t).
  word derivative_at(const rat& t) const { return left_limit(t) ^ value_at(t); }

  /// min{t | x(t-0) != x(t)}; requires a variable signal.
  rat first_switch() const {
    if (switches_.empty()) fail(errc::constant_signal, "first_switch of a constant signal");
    return switches_.front().first;
  }

  /// x o tau^d: every switch time shifted by +d, initial word unchanged.
  signal translate(const rat& d) const {
    std::vector<step> steps = switches_;
    for (auto& s : steps) s.first += d;
    return signal(initial_, std::move(steps));
  }

  /// True iff every switch time is >= 0 (membership in S0).
  bool is_in_s0() const { return switches_.empty() || !(switches_.front().first < rat(0)); }

  friend bool operator==(const signal& a, const signal& b) {
    return a.initial_ == b.initial_ && a.switches_ == b.switches_;
  }
  friend bool operator!=(const signal& a, const signal& b) { return !(a == b); }
  friend bool operator<(const signal& a, const signal& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    if (a.initial_ != b.initial_) return a.initial_ < b.initial_;
    return std::lexicographical_compare(
        a.switches_.begin(), a.switches_.end(), b.switches_.begin(), b.switches_.end(),
        [](const step& x, const step& y) {
          return x.first != y.first ? x.first < y.first : x.second < y.second;
        });
  }

 private:
  word initial_;
  std::vector<step> switches_;
};

/// chi_[a,b) as a width-1 signal (requires a < b).
inline signal chi(const rat& a, const rat& b) {
  if (!(a < b)) fail(errc::bad_window, "chi interval empty");
  return signal(word(1, 0), {{a, word(1, 1)}, {b, word(1, 0)}});
}

/// chi_[a,inf) as a width-1 signal.
inline signal chi_from(const rat& a) { return signal(word(1, 0), {{a, word(1, 1)}}); }

namespace detail {

/// Merged, deduplicated switch times of several signals.
inline std::vector<rat> merged_times(const std::vector<const signal*>& xs) {
  std::vector<rat> ts;
  for (const signal* x : xs)
    for (const auto& s : x->switches()) ts.push_back(s.first);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  return ts;
}

}  // namespace detail

enum class bool_op { NOT, OR, AND, XOR };

/// Pointwise Boolean combination; the result's switch set is contained in
/// the union of the operand switch sets and is re-canonicalized.
inline signal pointwise(bool_op op, const signal& x, const signal* y = nullptr) {
  if (op == bool_op::NOT) {
    std::vector<signal::step> steps;
    for (const auto& s : x.switches()) steps.emplace_back(s.first, ~s.second);
    return signal(~x.initial(), std::move(steps));
  }
  if (y == nullptr) fail(errc::bad_parameter, "binary op needs two signals");
  if (x.width() != y->width()) fail(errc::width_mismatch, "pointwise operand widths differ");
  auto apply = [op](const word& a, const word& b) {
    switch (op) {
      case bool_op::OR: return a | b;
      case bool_op::AND: return a & b;
      case bool_op::XOR: return a ^ b;
      default: return a;
    }
  };
  std::vector<signal::step> steps;
  for (const rat& t : detail::merged_times({&x, y}))
    steps.emplace_back(t, apply(x.value_at(t), y->value_at(t)));
  return signal(apply(x.initial(), y->initial()), std::move(steps));
}

inline signal s_not(const signal& x) { return pointwise(bool_op::NOT, x); }
inline signal s_or(const signal& x, const signal& y) { return pointwise(bool_op::OR, x, &y); }
inline signal s_and(const signal& x, const signal& y) { return pointwise(bool_op::AND, x, &y); }
inline signal s_xor(const signal& x, const signal& y) { return pointwise(bool_op::XOR, x, &y); }

/// u.chi_(-inf,t) xor v.chi_[t,inf): agrees with u strictly before t and
/// with v from t on.
inline signal concat(const signal& u, const signal& v, const rat& t) {
  if (u.width() != v.width()) fail(errc::width_mismatch, "concat operand widths differ");
  std::vector<signal::step> steps;
  for (const auto& s : u.switches())
    if (s.first < t) steps.push_back(s);
  steps.emplace_back(t, v.value_at(t));
  for (const auto& s : v.switches())
    if (s.first > t) steps.push_back(s);
  return signal(u.initial(), std::move(steps));
}

/// 1 iff the number of switch times <= t is odd (0 counts as even).
inline word parity_integral(const signal& u, const rat& t) {
  if (u.width() != 1) fail(errc::width_mismatch, "parity integral expects width 1");
  int count = 0;
  for (const auto& s : u.switches())
    if (s.first <= t) ++count;
  return word(1, std::uint64_t(count & 1));
}

/// phi(u): 0 for constant u, otherwise |first switch| = max(-m, m).
inline rat phi(const signal& u) {
  if (u.is_constant()) return rat(0);
  const rat m = u.first_switch();
  const rat neg = -m;
  return neg > m ? neg : m;
}

}  // namespace asysig
