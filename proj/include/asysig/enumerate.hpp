#pragma once

#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asysig/system.hpp"

namespace asysig {

using state_set = std::set<signal>;

/// Candidate budget for brute-force enumeration; override with ASYSIG_BUDGET.
inline long long enumeration_budget() {
  if (const char* env = std::getenv("ASYSIG_BUDGET")) {
    const long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 4'000'000;
}

namespace detail {

/// Probe points of a domain piece against a set of breakpoints: included
/// endpoints, breakpoints strictly inside, midpoints of consecutive probes,
/// and sentinels standing in for the unbounded ends.
inline std::vector<rat> piece_probes(const interval& piece, std::vector<rat> breaks) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<rat> pts;
  const bool left_infinite = piece.k == interval::kind::past_open;
  const bool right_infinite = piece.k == interval::kind::future;
  for (const rat& c : breaks)
    if (piece.contains(c)) pts.push_back(c);
  if (!left_infinite) pts.insert(pts.begin(), piece.a);  // windows/future start closed
  else {
    const rat anchor = pts.empty() ? piece.b : pts.front();
    pts.insert(pts.begin(), anchor - rat(1));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<rat> out = pts;
  for (std::size_t i = 1; i < pts.size(); ++i) out.push_back(rat::mid(pts[i - 1], pts[i]));
  if (right_infinite) out.push_back(pts.back() + rat(1));
  else if (piece.k == interval::kind::window_ropen || piece.k == interval::kind::past_open) {
    if (pts.back() < piece.b) out.push_back(rat::mid(pts.back(), piece.b));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// The grid's pieces: (-inf, g1), [g1, g2), ..., [gk, inf).
inline std::vector<interval> grid_pieces(const time_grid& grid) {
  std::vector<interval> out;
  out.push_back(interval::past_open(grid.points.front()));
  for (std::size_t i = 0; i + 1 < grid.points.size(); ++i)
    out.push_back(interval::window_ropen(grid.points[i], grid.points[i + 1]));
  out.push_back(interval::future(grid.points.back()));
  return out;
}

/// Words w with lo <= w <= hi per coordinate.
inline std::vector<word> words_between(const word& lo, const word& hi) {
  std::vector<word> out;
  if (!leq(lo, hi)) return out;
  const std::uint64_t free_bits = hi.bits() & ~lo.bits();
  // iterate subsets of the free coordinates
  std::uint64_t sub = 0;
  while (true) {
    out.emplace_back(lo.width(), lo.bits() | sub);
    if (sub == free_bits) break;
    sub = (sub - free_bits) & free_bits;
  }
  return out;
}

}  // namespace detail

/// All grid signals (initial word plus one word per grid point, canonical),
/// filtered by membership: the definitional oracle.
inline state_set brute_force_states(const system_model& f, const signal& u, const time_grid& grid) {
  if (!f.admissible(u)) fail(errc::inadmissible_input, "input not admissible for " + f.name());
  const int n = f.state_width();
  const std::size_t slots = grid.points.size() + 1;
  double candidates = 1.0;
  for (std::size_t i = 0; i < slots; ++i) candidates *= double(1ull << n);
  if (candidates > double(enumeration_budget()))
    fail(errc::budget_exceeded, "brute force would try " + std::to_string(candidates) +
                                    " candidates (budget " + std::to_string(enumeration_budget()) + ")");

  const std::vector<word> words = all_words(n);
  state_set out;
  std::vector<std::size_t> choice(slots, 0);
  while (true) {
    std::vector<signal::step> steps;
    for (std::size_t i = 0; i + 1 < slots; ++i)
      steps.emplace_back(grid.points[i], words[choice[i + 1]]);
    signal x(words[choice[0]], std::move(steps));
    if (membership(f, u, x)) out.insert(std::move(x));
    std::size_t i = 0;
    for (; i < slots; ++i) {
      if (++choice[i] < words.size()) break;
      choice[i] = 0;
    }
    if (i == slots) break;
  }
  return out;
}

/// Exactly { x | switches(x) within the grid and x in f(u) }, computed
/// without scanning the full candidate space: deterministic kinds evaluate
/// directly, tabulated kinds filter the listed set, bound-constrained kinds
/// enumerate admissible words piece by piece.
inline state_set enumerate_states(const system_model& f, const signal& u, const time_grid& grid) {
  if (!f.admissible(u)) fail(errc::inadmissible_input, "input not admissible for " + f.name());

  if (f.deterministic()) {
    signal x = eval_deterministic(f, u);
    for (const auto& s : x.switches())
      if (!grid.contains(s.first))
        fail(errc::grid_too_coarse, f.name() + ": deterministic state switches at " +
                                        s.first.str() + " which is not a grid point");
    return {x};
  }
  if (const auto* t = f.as<tabulated>()) {
    state_set out;
    for (const auto& e : t->map)
      if (e.first == u)
        for (const auto& x : e.second) {
          bool on_grid = true;
          for (const auto& s : x.switches())
            if (!grid.contains(s.first)) { on_grid = false; break; }
          if (on_grid) out.insert(x);
        }
    return out;
  }

  // bound-constrained kinds: per-piece interval arithmetic
  const std::vector<rat> breaks = detail::bound_breakpoints(f, u);
  std::vector<std::vector<word>> piece_words;
  for (const interval& piece : detail::grid_pieces(grid)) {
    word lo = word::zeros(f.state_width());
    word hi = word::ones(f.state_width());
    for (const rat& t : detail::piece_probes(piece, breaks)) {
      lo = lo | detail::lower_at(f, u, t);
      hi = hi & detail::upper_at(f, u, t);
    }
    piece_words.push_back(detail::words_between(lo, hi));
  }

  double count = 1.0;
  for (const auto& ws : piece_words) count *= double(ws.empty() ? 0 : ws.size());
  if (count > double(enumeration_budget()))
    fail(errc::budget_exceeded, "state set would have " + std::to_string(count) + " members");

  state_set out;
  if (count == 0) return out;
  std::vector<std::size_t> choice(piece_words.size(), 0);
  while (true) {
    std::vector<signal::step> steps;
    for (std::size_t i = 0; i + 1 < piece_words.size(); ++i)
      steps.emplace_back(grid.points[i], piece_words[i + 1][choice[i + 1]]);
    out.insert(signal(piece_words[0][choice[0]], std::move(steps)));
    std::size_t i = 0;
    for (; i < piece_words.size(); ++i) {
      if (++choice[i] < piece_words[i].size()) break;
      choice[i] = 0;
    }
    if (i == piece_words.size()) break;
  }
  return out;
}

// --- relations between systems ----------------------------------------------

struct subsystem_report {
  bool ok = true;
  std::optional<signal> bad_input;   // on failure: the offending u
  std::optional<signal> bad_state;   // on failure: x in f(u) missing from g(u)
  std::string reason;
};

/// Verifies U_f within U_g and f(u) within g(u) for every corpus input, by
/// enumeration on the grid.
inline subsystem_report subsystem_check(const system_model& f, const system_model& g,
                                        const std::vector<signal>& corpus, const time_grid& grid) {
  subsystem_report rep;
  if (f.input_width() != g.input_width() || f.state_width() != g.state_width()) {
    rep.ok = false;
    rep.reason = "widths differ";
    return rep;
  }
  for (const signal& u : corpus) {
    if (!f.admissible(u)) continue;  // not in U_f
    if (!g.admissible(u)) {
      rep.ok = false;
      rep.bad_input = u;
      rep.reason = "input admissible for f but not for g";
      return rep;
    }
    const state_set fu = enumerate_states(f, u, grid);
    const state_set gu = enumerate_states(g, u, grid);
    for (const signal& x : fu)
      if (!gu.count(x)) {
        rep.ok = false;
        rep.bad_input = u;
        rep.bad_state = x;
        rep.reason = "state of f(u) not in g(u)";
        return rep;
      }
  }
  return rep;
}

struct invariance_report {
  bool ok = true;
  std::optional<signal> input;
  std::optional<rat> shift;
  std::optional<signal> state;
  std::string reason;
};

/// Checks u o tau^d admissible and {x o tau^d | x in f(u)} within
/// f(u o tau^d) for every corpus input and listed shift; the state sets of
/// the translated input are enumerated on the translated grid (merged with
/// the original so that states that do not move stay representable).
inline invariance_report time_invariance_check(const system_model& f,
                                               const std::vector<signal>& corpus,
                                               const std::vector<rat>& shifts,
                                               const time_grid& grid) {
  invariance_report rep;
  for (const signal& u : corpus) {
    if (!f.admissible(u)) fail(errc::inadmissible_input, "corpus input not admissible");
    const state_set fu = enumerate_states(f, u, grid);
    for (const rat& d : shifts) {
      const signal ud = u.translate(d);
      if (!f.admissible(ud)) {
        rep.ok = false;
        rep.input = u;
        rep.shift = d;
        rep.reason = "translated input not admissible";
        return rep;
      }
      const time_grid shifted(merge_times(grid.points, grid.translated(d).points));
      const state_set fud = enumerate_states(f, ud, shifted);
      for (const signal& x : fu) {
        if (!fud.count(x.translate(d))) {
          rep.ok = false;
          rep.input = u;
          rep.shift = d;
          rep.state = x;
          rep.reason = "translated state missing from f(u o tau^d)";
          return rep;
        }
      }
    }
  }
  return rep;
}

}  // namespace asysig
