#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "asysig/na.hpp"

namespace asysig {

// --- initial-time-0 normalization -----------------------------------------------

/// The hat construction: the base system restricted to inputs with no switch
/// before 0, every state set intersected with the same class. Carrier data is
/// explicit; entries remember the grid their states were enumerated on.
struct normalized_system {
  system_model base;

  struct entry {
    signal input;
    time_grid grid;
    state_set states;
  };
  std::vector<entry> entries;

  const entry* lookup(const signal& u) const {
    for (const entry& e : entries)
      if (e.input == u) return &e;
    return nullptr;
  }

  std::vector<signal> inputs() const {
    std::vector<signal> out;
    for (const entry& e : entries) out.push_back(e.input);
    return out;
  }
};

/// Builds the normalized system over the corpus: members already free of
/// negative switches are kept, the others are translated right so their first
/// switch lands at 0 (the move the underlying proof makes). Preconditions
/// (def31, and time invariance along the applied translations) are verified
/// on the carrier.
inline normalized_system restrict_to_zero(const system_model& f, const std::vector<signal>& corpus,
                                          const time_grid& grid) {
  const na_verdict d31 = check_def31(f, corpus, grid);
  if (!d31.pass)
    fail(errc::precondition_failed, f.name() + " fails def31 on this carrier");

  normalized_system out{f, {}};
  for (const signal& u : corpus) {
    signal cand = u;
    time_grid cand_grid = grid;
    if (!u.is_in_s0()) {
      const rat shift = -u.first_switch();
      const auto inv = time_invariance_check(f, {u}, {shift}, grid);
      if (!inv.ok)
        fail(errc::precondition_failed,
             f.name() + " is not time invariant along the normalizing translation: " + inv.reason);
      cand = u.translate(shift);
      cand_grid = time_grid(merge_times(grid.points, grid.translated(shift).points));
    }
    if (out.lookup(cand)) continue;
    if (!f.admissible(cand)) continue;
    state_set states;
    for (const signal& x : enumerate_states(f, cand, cand_grid))
      if (x.is_in_s0()) states.insert(x);
    if (states.empty()) continue;
    out.entries.push_back({cand, cand_grid, std::move(states)});
  }
  if (out.entries.empty())
    fail(errc::empty_normalized_domain,
         "no corpus member reaches the normalized domain, even after translation");

  // property iii) on the carrier: translates within the domain carry states along
  for (const auto& e1 : out.entries) {
    if (e1.input.is_constant()) {
      for (const signal& x : e1.states)
        if (!x.is_constant())
          fail(errc::precondition_failed,
               "variable state on a constant input violates translation compatibility");
      continue;
    }
    for (const auto& e2 : out.entries) {
      if (e2.input.is_constant()) continue;
      const rat d = e2.input.first_switch() - e1.input.first_switch();
      if (e1.input.translate(d) != e2.input) continue;
      for (const signal& x : e1.states)
        if (!e2.states.count(x.translate(d)))
          fail(errc::precondition_failed,
               "translation compatibility fails between normalized entries");
    }
  }
  return out;
}

/// Spreads the normalized system back out along a shift list,
/// realized as an explicit tabulated system. Equal translates of different
/// entries must produce equal state sets; a collision signals a carrier
/// violation of translation compatibility.
inline system_model extend_by_translation(const normalized_system& fhat,
                                          const std::vector<rat>& shifts) {
  tabulated tab;
  for (const auto& e : fhat.entries)
    for (const rat& d : shifts) {
      const signal input = e.input.translate(d);
      std::vector<signal> states;
      for (const signal& x : e.states) states.push_back(x.translate(d));
      std::sort(states.begin(), states.end());
      bool merged = false;
      for (auto& [in, st] : tab.map)
        if (in == input) {
          if (st != states)
            fail(errc::ill_defined_extension,
                 "translates of " + print_signal(e.input) + " collide with differing state sets");
          merged = true;
          break;
        }
      if (!merged) tab.map.emplace_back(input, std::move(states));
    }
  return system_model(fhat.base.name() + "_ext", std::move(tab));
}

// --- transfer composition ---------------------------------------------------------

/// Data of a two-step transfer: f(u0) transfers mu to mu' synchronously at
/// t1, f(u1) holds mu' at t2 and reaches mu'' later.
struct transfer_spec {
  rat t1, t2;
  signal u0, u1;
  word mu, mu_prime, mu_dprime;
};

struct state_access {
  signal state;
  rat time;
};

struct transfer_report {
  rat d;
  signal u_tilde;
  std::vector<state_access> eq3, eq6;        // hypothesis e) witnesses
  std::vector<state_access> concl8, concl9;  // conclusion witnesses
  bool tna5 = false, tna11 = false;          // structural prefix/tail identities
  bool b_spot = false;  // history sets of f(u~) and f(u0) match at t1
  bool c_spot = false;  // tail sets of f(u~) and f(u1 o tau^d) match from t1
  bool d_spot = false;  // translated states of f(u1) equal f(u1 o tau^d)
};

namespace detail {

/// A time t0 < before with x(t0) = target, preferring the latest switch piece.
inline std::optional<rat> access_before(const signal& x, const word& target, const rat& before) {
  const auto& sw = x.switches();
  for (auto it = sw.rbegin(); it != sw.rend(); ++it)
    if (it->first < before && it->second == target) return it->first;
  if (x.initial() == target) {
    rat first = before;
    if (!x.is_constant() && x.first_switch() < first) first = x.first_switch();
    return first - rat(1);
  }
  return std::nullopt;
}

/// A time t3 > after with x(t3) = target, preferring the earliest access.
inline std::optional<rat> access_after(const signal& x, const word& target, const rat& after) {
  std::optional<rat> next;
  for (const auto& s : x.switches())
    if (s.first > after) { next = s.first; break; }
  if (x.value_at(after) == target) return next ? rat::mid(after, *next) : after + rat(1);
  for (const auto& s : x.switches())
    if (s.first > after && s.second == target) return s.first;
  return std::nullopt;
}

}  // namespace detail

/// Composes the two transfers: verifies hypothesis e) by enumeration,
/// builds u~ = u0.chi_(-inf,t1) xor (u1 o tau^d).chi_[t1,inf) with d = t1-t2,
/// and verifies the conclusions; the report carries per-state witness times
/// and the spot-check results for hypotheses b), c), d) on this carrier.
inline transfer_report compose_transfer(const system_model& f, const transfer_spec& spec,
                                        const time_grid& grid) {
  transfer_report rep{spec.t1 - spec.t2, spec.u0, {}, {}, {}, {}};
  const rat d = rep.d;

  // one finite carrier for every enumeration in this run
  const time_grid grid_d(merge_times(grid.points, grid.translated(d).points));
  const state_set e0 = enumerate_states(f, spec.u0, grid_d);
  const state_set e1 = enumerate_states(f, spec.u1, grid_d);
  if (e0.empty() || e1.empty())
    fail(errc::grid_too_coarse, "empty state set for a transfer input on this grid");

  for (const signal& x : e0) {
    const auto t0 = detail::access_before(x, spec.mu, spec.t1);
    if (!t0)
      fail(errc::hypothesis_e_failed,
           "eq (3): state " + print_signal(x) + " never takes mu before t1");
    rep.eq3.push_back({x, *t0});
    if (x.value_at(spec.t1) != spec.mu_prime)
      fail(errc::hypothesis_e_failed,
           "eq (4): state " + print_signal(x) + " is not mu' at t1");
  }
  for (const signal& x : e1) {
    if (x.value_at(spec.t2) != spec.mu_prime)
      fail(errc::hypothesis_e_failed,
           "eq (5): state " + print_signal(x) + " is not mu' at t2");
    const auto t3 = detail::access_after(x, spec.mu_dprime, spec.t2);
    if (!t3)
      fail(errc::hypothesis_e_failed,
           "eq (6): state " + print_signal(x) + " never takes mu'' after t2");
    rep.eq6.push_back({x, *t3});
  }

  const signal u1d = spec.u1.translate(d);
  rep.u_tilde = concat(spec.u0, u1d, spec.t1);
  rep.tna5 = agree_on(rep.u_tilde, spec.u0, interval::past_open(spec.t1));
  rep.tna11 = agree_on(rep.u_tilde, u1d, interval::future(spec.t1));

  const state_set e1d = enumerate_states(f, u1d, grid_d);
  const state_set et = enumerate_states(f, rep.u_tilde, grid_d);

  rep.d_spot = time_invariance_check(f, {spec.u1}, {d}, grid_d).ok;
  {
    std::set<restriction> lhs, rhs;
    for (const signal& x : et) lhs.insert(restrict(x, interval::past_closed(spec.t1)));
    for (const signal& x : e0) rhs.insert(restrict(x, interval::past_closed(spec.t1)));
    rep.b_spot = lhs == rhs;
  }
  {
    std::set<word> lv, rv;
    for (const signal& x : et) lv.insert(x.value_at(spec.t1));
    for (const signal& x : e1d) rv.insert(x.value_at(spec.t1));
    std::set<restriction> lt, rt;
    for (const signal& x : et) lt.insert(restrict(x, interval::future(spec.t1)));
    for (const signal& x : e1d) rt.insert(restrict(x, interval::future(spec.t1)));
    rep.c_spot = lv == rv && lt == rt;
  }

  auto hypothesis_blame = [&]() {
    std::string blame;
    if (!rep.b_spot) blame += " b)";
    if (!rep.c_spot) blame += " c)";
    if (!rep.d_spot) blame += " d)";
    return blame.empty() ? std::string(" (spot checks inconclusive)")
                         : " (hypothesis" + blame + " fails on this carrier)";
  };
  for (const signal& x : et) {
    const auto t0 = detail::access_before(x, spec.mu, spec.t1);
    if (!t0)
      fail(errc::conclusion_failed,
           "eq (8): state " + print_signal(x) + " never takes mu before t1" + hypothesis_blame());
    rep.concl8.push_back({x, *t0});
    const auto t3 = detail::access_after(x, spec.mu_dprime, spec.t1);
    if (!t3)
      fail(errc::conclusion_failed,
           "eq (9): state " + print_signal(x) + " never takes mu'' after t1" + hypothesis_blame());
    rep.concl9.push_back({x, *t3});
  }
  return rep;
}

// --- fundamental mode ----------------------------------------------------------------

/// A desk-scale prefix of a fundamental operating mode: k inputs, k+1 state
/// words, k+1 strictly increasing times, plus the mode input itself.
struct fm_spec {
  signal u;
  std::vector<rat> times;
  std::vector<signal> inputs;
  std::vector<word> states;

  void validate() const {
    if (times.empty() || states.size() != times.size() || inputs.size() + 1 != times.size())
      fail(errc::bad_parameter, "fundamental mode lists are incoherent in length");
    for (std::size_t i = 1; i < times.size(); ++i)
      if (!(times[i - 1] < times[i]))
        fail(errc::non_increasing_times, "fundamental mode times must increase");
  }
};

struct fm_clause {
  std::string name;
  bool pass;
  std::string detail;
};

struct fm_report {
  std::vector<fm_clause> clauses;
  bool all_pass = true;

  void add(std::string name, bool pass, std::string detail = "") {
    all_pass &= pass;
    clauses.push_back({std::move(name), pass, std::move(detail)});
  }
};

namespace detail {

inline bool constant_before(const signal& x, const word& mu, const rat& t) {
  return x.initial() == mu && (x.is_constant() || x.first_switch() >= t);
}

inline bool constant_from(const signal& x, const word& mu, const rat& t) {
  if (x.value_at(t) != mu) return false;
  return x.is_constant() || x.switches().back().first <= t;
}

}  // namespace detail

/// Checks every fundamental-mode clause by enumeration and reports each
/// one's status; def51, which a fundamental mode presupposes, is included
/// as a report clause.
inline fm_report verify_fundamental_mode(const system_model& f, const fm_spec& spec,
                                         const time_grid& grid) {
  spec.validate();
  fm_report rep;

  std::vector<signal> corpus{spec.u};
  for (const signal& v : spec.inputs)
    if (std::find(corpus.begin(), corpus.end(), v) == corpus.end()) corpus.push_back(v);
  rep.add("def51-precondition", check_def51(f, corpus, grid).pass);

  const signal& first_input = spec.inputs.empty() ? spec.u : spec.inputs.front();
  for (const signal& x : enumerate_states(f, first_input, grid))
    if (!detail::constant_before(x, spec.states.front(), spec.times.front())) {
      rep.add("initial-settle", false, "state " + print_signal(x) + " is not mu^0 before t_0");
      break;
    }
  if (rep.clauses.size() == 1) rep.add("initial-settle", true);

  for (std::size_t j = 0; j < spec.inputs.size(); ++j) {
    const rat& t_next = spec.times[j + 1];
    bool ok = true;
    std::string detail_text;
    for (const signal& x : enumerate_states(f, spec.inputs[j], grid))
      if (!detail::constant_from(x, spec.states[j + 1], t_next)) {
        ok = false;
        detail_text = "state " + print_signal(x) + " has not settled to mu^" +
                      std::to_string(j + 1) + " from t_" + std::to_string(j + 1) + " on";
        break;
      }
    rep.add("settle[" + std::to_string(j) + "]", ok, detail_text);

    const bool prefix_ok = agree_on(spec.u, spec.inputs[j], interval::past_open(t_next));
    rep.add("prefix[" + std::to_string(j) + "]", prefix_ok,
            prefix_ok ? "" : "mode input disagrees with u^" + std::to_string(j) + " before t_" +
                                 std::to_string(j + 1));
  }
  return rep;
}

/// Emits the synchronous discrete-time view mu^0 -(u^0)-> mu^1 -> ... ;
/// a stabilized tail (repeated input and repeated next state) is truncated.
inline std::vector<std::pair<word, std::string>> next_state_trace(const fm_spec& spec) {
  spec.validate();
  std::size_t k = spec.inputs.size();
  while (k >= 2 && spec.inputs[k - 1] == spec.inputs[k - 2] &&
         spec.states[k] == spec.states[k - 1])
    --k;
  std::vector<std::pair<word, std::string>> out;
  for (std::size_t j = 0; j <= k; ++j)
    out.emplace_back(spec.states[j], j < k ? "u" + std::to_string(j) : "");
  return out;
}

// --- accessibility-driven synthesis ---------------------------------------------------

/// Caller-supplied accessibility oracle: given a target word, an input and a
/// time t, returns (v, t') with v identical to the input before t, t' > t,
/// and every state of f(v) equal to the target from t' on.
using accessibility_oracle =
    std::function<std::pair<signal, rat>(const word& mu, const signal& u, const rat& t)>;

/// The stock oracle for the windowed bounded-delay model: clamp the input to
/// the target from t on; all states settle within max(dr, df).
inline accessibility_oracle make_bounded_delay_oracle(const rat& dr, const rat& df,
                                                      const rat& delta) {
  const rat settle = (dr > df ? dr : df) + delta;
  return [settle](const word& mu, const signal& u, const rat& t) {
    return std::make_pair(concat(u, signal::constant(mu), t), t + settle);
  };
}

/// Synthesizes a fundamental mode from accessibility: find race-free
/// initial data (mu^0, t_0) on the seed input by enumeration, then fetch each
/// u^k, t_{k+1} from the oracle with spacing > delta, checking the oracle's
/// contract before use. The assembled spec must then pass
/// verify_fundamental_mode on the same carriers.
inline fm_spec synthesize_fundamental_mode(const system_model& f, const signal& seed,
                                           const accessibility_oracle& oracle,
                                           const std::vector<word>& mu_seq, const rat& delta,
                                           const time_grid& grid) {
  if (!(delta > rat(0))) fail(errc::bad_parameter, "delta must be positive");

  const state_set seed_states = enumerate_states(f, seed, grid);
  if (seed_states.empty()) fail(errc::grid_too_coarse, "seed input has no states on this grid");
  const word mu0 = seed_states.begin()->initial();
  std::optional<rat> t0;
  for (const signal& x : seed_states) {
    if (x.initial() != mu0)
      fail(errc::race_detected, "seed states disagree on the initial word");
    if (!x.is_constant() && (!t0 || x.first_switch() < *t0)) t0 = x.first_switch();
  }

  fm_spec spec{seed, {t0 ? *t0 : rat(0)}, {}, {mu0}};
  signal u_prev = seed;
  rat t_prev = spec.times.front();
  for (const word& mu : mu_seq) {
    const rat ask = t_prev + delta;
    const auto [v, t_next] = oracle(mu, u_prev, ask);
    if (!(t_next > ask))
      fail(errc::oracle_contract_violation, "oracle returned t' <= t");
    if (!agree_on(v, u_prev, interval::past_open(ask)))
      fail(errc::oracle_contract_violation, "oracle changed the input before t");
    for (const signal& y : enumerate_states(f, v, grid))
      if (!detail::constant_from(y, mu, t_next))
        fail(errc::oracle_contract_violation,
             "state " + print_signal(y) + " does not hold the target from t' on");
    spec.inputs.push_back(v);
    spec.times.push_back(t_next);
    spec.states.push_back(mu);
    u_prev = v;
    t_prev = t_next;
  }

  if (!spec.inputs.empty()) {
    signal mode = spec.inputs.front();
    for (std::size_t j = 1; j < spec.inputs.size(); ++j)
      mode = concat(mode, spec.inputs[j], spec.times[j]);
    spec.u = mode;
  }
  spec.validate();
  return spec;
}

}  // namespace asysig
