#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "asysig/signal.hpp"

namespace asysig {

/// Time domain of a restriction: a half-line or a window.
///   past_open   (-inf, t)       past_closed (-inf, t]
///   future      [t, inf)
///   window_closed [a, b]        window_ropen [a, b)
struct interval {
  enum class kind { past_open, past_closed, future, window_closed, window_ropen };

  kind k;
  rat a;  // lower bound (windows, future)
  rat b;  // upper bound (windows, past)

  static interval past_open(const rat& t) { return {kind::past_open, rat(0), t}; }
  static interval past_closed(const rat& t) { return {kind::past_closed, rat(0), t}; }
  static interval future(const rat& t) { return {kind::future, t, rat(0)}; }
  static interval window_closed(const rat& lo, const rat& hi) {
    if (hi < lo) fail(errc::bad_window, "window bounds reversed");
    return {kind::window_closed, lo, hi};
  }
  static interval window_ropen(const rat& lo, const rat& hi) {
    if (!(lo < hi)) fail(errc::bad_window, "empty right-open window");
    return {kind::window_ropen, lo, hi};
  }

  bool contains(const rat& t) const {
    switch (k) {
      case kind::past_open: return t < b;
      case kind::past_closed: return t <= b;
      case kind::future: return t >= a;
      case kind::window_closed: return a <= t && t <= b;
      case kind::window_ropen: return a <= t && t < b;
    }
    return false;
  }

  friend bool operator==(const interval& x, const interval& y) {
    if (x.k != y.k) return false;
    switch (x.k) {
      case kind::past_open:
      case kind::past_closed: return x.b == y.b;
      case kind::future: return x.a == y.a;
      default: return x.a == y.a && x.b == y.b;
    }
  }
  friend bool operator!=(const interval& x, const interval& y) { return !(x == y); }
  friend bool operator<(const interval& x, const interval& y) {
    if (x.k != y.k) return int(x.k) < int(y.k);
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
  }

  std::string str() const {
    switch (k) {
      case kind::past_open: return "(-inf," + b.str() + ")";
      case kind::past_closed: return "(-inf," + b.str() + "]";
      case kind::future: return "[" + a.str() + ",inf)";
      case kind::window_closed: return "[" + a.str() + "," + b.str() + "]";
      case kind::window_ropen: return "[" + a.str() + "," + b.str() + ")";
    }
    return "?";
  }
};

/// Canonical trace of a signal on a domain. Two restrictions compare equal
/// iff the domains coincide and the underlying functions agree on every
/// point of the domain.
struct restriction {
  interval dom;
  word start;                       // value at -inf (pasts) or at the left bound
  std::vector<signal::step> steps;  // observable switches inside the domain

  friend bool operator==(const restriction& x, const restriction& y) {
    return x.dom == y.dom && x.start == y.start && x.steps == y.steps;
  }
  friend bool operator!=(const restriction& x, const restriction& y) { return !(x == y); }
  friend bool operator<(const restriction& x, const restriction& y) {
    if (x.dom != y.dom) return x.dom < y.dom;
    if (x.start != y.start) return x.start < y.start;
    return std::lexicographical_compare(
        x.steps.begin(), x.steps.end(), y.steps.begin(), y.steps.end(),
        [](const signal::step& p, const signal::step& q) {
          return p.first != q.first ? p.first < q.first : p.second < q.second;
        });
  }

  std::string str() const {
    std::string s = dom.str() + " " + start.str();
    for (const auto& st : steps) s += " " + st.first.str() + ":" + st.second.str();
    return s;
  }
};

/// x restricted to the given domain, in canonical comparable form.
inline restriction restrict(const signal& x, const interval& dom) {
  restriction r{dom, x.initial(), {}};
  switch (dom.k) {
    case interval::kind::past_open:
      for (const auto& s : x.switches())
        if (s.first < dom.b) r.steps.push_back(s);
      break;
    case interval::kind::past_closed:
      for (const auto& s : x.switches())
        if (s.first <= dom.b) r.steps.push_back(s);
      break;
    case interval::kind::future:
      r.start = x.value_at(dom.a);
      for (const auto& s : x.switches())
        if (s.first > dom.a) r.steps.push_back(s);
      break;
    case interval::kind::window_closed:
      r.start = x.value_at(dom.a);
      for (const auto& s : x.switches())
        if (s.first > dom.a && s.first <= dom.b) r.steps.push_back(s);
      break;
    case interval::kind::window_ropen:
      r.start = x.value_at(dom.a);
      for (const auto& s : x.switches())
        if (s.first > dom.a && s.first < dom.b) r.steps.push_back(s);
      break;
  }
  return r;
}

/// True iff x and y agree on every point of the domain.
inline bool agree_on(const signal& x, const signal& y, const interval& dom) {
  return restrict(x, dom) == restrict(y, dom);
}

namespace detail {

/// Representative points of a window: the left bound, every switch of u
/// inside, and the right bound when closed. Every piece of u intersecting
/// the window has its value at one of these points.
inline std::vector<rat> window_points(const signal& u, const interval& w) {
  if (w.k != interval::kind::window_closed && w.k != interval::kind::window_ropen)
    fail(errc::bad_window, "meet/join expects a window domain");
  std::vector<rat> pts{w.a};
  for (const auto& s : u.switches())
    if (s.first > w.a && (w.k == interval::kind::window_closed ? s.first <= w.b : s.first < w.b))
      pts.push_back(s.first);
  return pts;
}

}  // namespace detail

/// Per-coordinate AND of u over the window, exact (no sampling).
inline word window_meet(const signal& u, const interval& w) {
  word acc = word::ones(u.width());
  for (const rat& t : detail::window_points(u, w)) acc = acc & u.value_at(t);
  return acc;
}

/// Per-coordinate OR of u over the window, exact.
inline word window_join(const signal& u, const interval& w) {
  word acc = word::zeros(u.width());
  for (const rat& t : detail::window_points(u, w)) acc = acc | u.value_at(t);
  return acc;
}

/// Finite strictly-increasing list of candidate switch instants used when
/// enumerating state sets.
struct time_grid {
  std::vector<rat> points;

  explicit time_grid(std::vector<rat> pts) : points(std::move(pts)) {
    if (points.empty()) fail(errc::bad_parameter, "empty time grid");
    for (std::size_t i = 1; i < points.size(); ++i)
      if (!(points[i - 1] < points[i]))
        fail(errc::non_increasing_times, "grid points not strictly increasing");
  }

  time_grid translated(const rat& d) const {
    std::vector<rat> pts = points;
    for (rat& p : pts) p += d;
    return time_grid(pts);
  }

  bool contains(const rat& t) const {
    return std::binary_search(points.begin(), points.end(), t);
  }

  std::string str() const {
    std::string s;
    for (std::size_t i = 0; i < points.size(); ++i) {
      if (i) s += ",";
      s += points[i].str();
    }
    return s;
  }

  friend bool operator==(const time_grid& a, const time_grid& b) { return a.points == b.points; }
};

/// Sorted deduplicated union of rational lists.
inline std::vector<rat> merge_times(std::vector<rat> a, const std::vector<rat>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

/// A finite probe set sufficient for "for all t" quantification over the
/// given base times: the base points themselves, midpoints of consecutive
/// base points, and one point strictly below / above everything. Extras are
/// taken as already-representative and merged in unchanged, which makes the
/// construction idempotent. An empty base yields the two sentinels {-1, 1}.
inline std::vector<rat> representative_times(std::vector<rat> base, const std::vector<rat>& extras = {}) {
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  std::vector<rat> out = base;
  if (base.empty()) {
    out = {rat(-1), rat(1)};
  } else {
    for (std::size_t i = 1; i < base.size(); ++i)
      out.push_back(rat::mid(base[i - 1], base[i]));
    out.push_back(base.front() - rat(1));
    out.push_back(base.back() + rat(1));
  }
  out = merge_times(std::move(out), extras);
  // keep the below-all / above-all sentinels valid in the merged set
  if (!base.empty()) {
    if (!(out.front() < base.front())) out.insert(out.begin(), base.front() - rat(1));
    if (!(out.back() > base.back())) out.push_back(base.back() + rat(1));
  }
  return out;
}

/// Representative times for a pair of signals and a grid (all switch times,
/// all grid points, midpoints, sentinels, plus caller extras).
inline std::vector<rat> representative_times(const signal& u, const signal& v,
                                             const std::vector<rat>& grid_points,
                                             const std::vector<rat>& extras = {}) {
  std::vector<rat> base = detail::merged_times({&u, &v});
  base = merge_times(std::move(base), grid_points);
  return representative_times(std::move(base), extras);
}

}  // namespace asysig
