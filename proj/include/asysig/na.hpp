#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "asysig/enumerate.hpp"
#include "asysig/textio.hpp"

namespace asysig {

// --- properties ---------------------------------------------------------------

enum class na_property {
  def31,
  def51,
  c_i, c_ii, c_iii, c_iv, c_v, c_vi, c_vii, c_viii, c_ix,
  star_i, star_ii, star_iii,
};

inline const char* property_tag(na_property p) {
  switch (p) {
    case na_property::def31: return "DEF3_1";
    case na_property::def51: return "DEF5_1";
    case na_property::c_i: return "C_I";
    case na_property::c_ii: return "C_II";
    case na_property::c_iii: return "C_III";
    case na_property::c_iv: return "C_IV";
    case na_property::c_v: return "C_V";
    case na_property::c_vi: return "C_VI";
    case na_property::c_vii: return "C_VII";
    case na_property::c_viii: return "C_VIII";
    case na_property::c_ix: return "C_IX";
    case na_property::star_i: return "STAR_I";
    case na_property::star_ii: return "STAR_II";
    case na_property::star_iii: return "STAR_III";
  }
  return "?";
}

inline std::optional<na_property> parse_property(const std::string& s) {
  static const std::map<std::string, na_property> names = {
      {"def31", na_property::def31},   {"def51", na_property::def51},
      {"i", na_property::c_i},         {"ii", na_property::c_ii},
      {"iii", na_property::c_iii},     {"iv", na_property::c_iv},
      {"v", na_property::c_v},         {"vi", na_property::c_vi},
      {"vii", na_property::c_vii},     {"viii", na_property::c_viii},
      {"ix", na_property::c_ix},       {"star1", na_property::star_i},
      {"star2", na_property::star_ii}, {"star3", na_property::star_iii},
  };
  auto it = names.find(s);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

inline bool needs_bounds(na_property p) {
  switch (p) {
    case na_property::c_ii:
    case na_property::c_iii:
    case na_property::c_iv:
    case na_property::c_vii:
    case na_property::c_viii:
    case na_property::c_ix: return true;
    default: return false;
  }
}

// --- search bounds --------------------------------------------------------------

/// Candidate delays for the existentially quantified conditions. Defaults:
/// pairwise gaps between representative times plus the model's own delay
/// parameters (and, for the phi-window system, the per-input phi values).
struct search_bounds {
  std::vector<rat> d_candidates;                  // d > 0
  std::vector<std::pair<rat, rat>> dd_candidates;  // 0 <= d <= d'
  std::vector<rat> t_extra;

  static search_bounds defaults(const system_model& f, const std::vector<signal>& corpus,
                                const time_grid& grid) {
    std::vector<rat> base = grid.points;
    for (const signal& u : corpus) base = merge_times(std::move(base), u.derivative_support());
    const std::vector<rat> reps = representative_times(base);

    std::set<rat> gaps_base, gaps_all;
    for (std::size_t i = 0; i < base.size(); ++i)
      for (std::size_t j = i + 1; j < base.size(); ++j) gaps_base.insert(base[j] - base[i]);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) gaps_all.insert(reps[j] - reps[i]);

    search_bounds out;
    std::set<rat> seen_d;
    auto push_d = [&](const rat& d) {
      if (d > rat(0) && seen_d.insert(d).second) out.d_candidates.push_back(d);
    };
    std::set<std::pair<rat, rat>> seen_dd;
    auto push_dd = [&](const rat& d, const rat& dp) {
      if (d >= rat(0) && dp >= d && seen_dd.insert({d, dp}).second)
        out.dd_candidates.emplace_back(d, dp);
    };

    // model parameters first so the natural candidate is tried early
    for (const rat& d : f.delay_parameters()) push_d(d);
    if (const auto* k = f.as<bounded_delay_closed>()) push_dd(k->d, k->dprime);
    if (const auto* k = f.as<bounded_delay_window>()) {
      const rat mx = k->dr > k->df ? k->dr : k->df;
      push_dd(rat(0), k->dr);
      push_dd(rat(0), k->df);
      push_dd(rat(0), mx);
      push_dd(k->dr, k->dr);
    }
    for (const rat& d : f.delay_parameters()) {
      push_dd(d, d);
      push_dd(rat(0), d);
    }
    if (f.as<phi_window>())
      for (const signal& u : corpus) {
        const rat p = phi(u);
        if (p > rat(0)) {
          push_d(p);
          push_d(p + p);
          push_dd(p, p + p);
          push_dd(rat(0), p + p);
        }
      }

    for (const rat& g : gaps_all) push_d(g);
    push_dd(rat(0), rat(0));
    for (const rat& g : gaps_all) push_dd(g, g);
    for (const rat& g : gaps_base) push_dd(rat(0), g);
    for (auto i = gaps_base.begin(); i != gaps_base.end(); ++i)
      for (auto j = std::next(i); j != gaps_base.end(); ++j) push_dd(*i, *j);
    return out;
  }

  std::string str() const {
    std::string s = "d={";
    for (std::size_t i = 0; i < d_candidates.size(); ++i)
      s += (i ? "," : "") + d_candidates[i].str();
    s += "} dd={";
    for (std::size_t i = 0; i < dd_candidates.size(); ++i)
      s += (i ? "," : "") + dd_candidates[i].first.str() + ":" + dd_candidates[i].second.str();
    s += "} t_extra={";
    for (std::size_t i = 0; i < t_extra.size(); ++i) s += (i ? "," : "") + t_extra[i].str();
    return s + "}";
  }
};

// --- verdicts ---------------------------------------------------------------------

struct na_witness {
  std::optional<rat> t, d, d_prime;
  std::optional<signal> u, v;
  std::vector<std::string> lhs_set, rhs_set;
};

struct carriers {
  std::string corpus_hash;
  std::string grid;
  std::string bounds;

  friend bool operator==(const carriers& a, const carriers& b) {
    return a.corpus_hash == b.corpus_hash && a.grid == b.grid && a.bounds == b.bounds;
  }
};

/// Outcome of a corpus-relative check: a Fail witness re-checks as a genuine
/// violation over the enumerated state sets; a Pass is relative to the exact
/// corpus, grid and bounds it carries.
struct na_verdict {
  na_property property;
  bool pass = true;  // PassCorpusRelative when true, Fail otherwise
  bool vacuous = false;
  std::optional<na_witness> witness;
  carriers carrier;
  std::string note;
};

inline std::string corpus_fingerprint(const std::vector<signal>& corpus) {
  const std::string text = print_corpus(corpus);
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// --- the checker -------------------------------------------------------------------

class na_checker {
 public:
  na_checker(system_model f, std::vector<signal> corpus, time_grid grid, search_bounds bounds)
      : f_(std::move(f)), corpus_(std::move(corpus)), grid_(std::move(grid)),
        bounds_(std::move(bounds)) {
    states_.resize(corpus_.size());
    carrier_.corpus_hash = corpus_fingerprint(corpus_);
    carrier_.grid = grid_.str();
    carrier_.bounds = bounds_.str();
    if (const auto* k = f_.as<bounded_delay_closed>())
      if (k->d == rat(0)) model_flag_ = "closed window with d=0 references u(t) itself";
  }

  na_checker(const system_model& f, const std::vector<signal>& corpus, const time_grid& grid)
      : na_checker(f, corpus, grid, search_bounds::defaults(f, corpus, grid)) {}

  const carriers& carrier() const { return carrier_; }
  const std::vector<signal>& corpus() const { return corpus_; }

  na_verdict check(na_property p) {
    if (needs_bounds(p)) {
      const bool dd = p == na_property::c_vii || p == na_property::c_viii || p == na_property::c_ix;
      if (!dd && bounds_.d_candidates.empty())
        fail(errc::missing_bounds, std::string(property_tag(p)) + " needs d candidates");
      if (dd && bounds_.dd_candidates.empty())
        fail(errc::missing_bounds, std::string(property_tag(p)) + " needs (d,d') candidates");
    }
    switch (p) {
      case na_property::def31: return check_def31();
      case na_property::def51: return pairwise_check(p);
      case na_property::c_i: return pairwise_check(p);
      case na_property::c_v: return pairwise_check(p);
      case na_property::c_vi: return pairwise_check(p);
      case na_property::c_ii: return check_c2();
      case na_property::c_iii: return check_c3();
      case na_property::c_iv: return check_c4();
      case na_property::c_vii: return check_c7();
      case na_property::c_viii: return check_c8();
      case na_property::c_ix: return check_c9();
      case na_property::star_i: return check_star1();
      case na_property::star_ii: return check_star2();
      case na_property::star_iii: return check_star3();
    }
    fail(errc::bad_parameter, "unknown property");
  }

  // Instance predicates, usable to replay witnesses through the same
  // signal-core comparisons the checker ran.

  bool def51_instance_holds(const signal& u, const signal& v, const rat& t) {
    return condition_instance_holds(na_property::def51, u, v, t);
  }

  /// One (u, v, t) instance of a universally quantified pair condition,
  /// evaluated through the same signal-core comparisons the checker ran.
  bool condition_instance_holds(na_property p, const signal& u, const signal& v, const rat& t) {
    switch (p) {
      case na_property::def51:
        if (!agree_on(u, v, interval::past_open(t))) return true;
        return restr_set(u, interval::past_closed(t)) == restr_set(v, interval::past_closed(t));
      case na_property::c_i:
        if (!agree_on(u, v, interval::past_open(t))) return true;
        return value_set(u, t) == value_set(v, t);
      case na_property::c_v:
        if (!agree_on(u, v, interval::past_closed(t))) return true;
        return restr_set(u, interval::past_closed(t)) == restr_set(v, interval::past_closed(t));
      case na_property::c_vi:
        if (!agree_on(u, v, interval::past_closed(t))) return true;
        return value_set(u, t) == value_set(v, t);
      case na_property::star_i:
        if (!agree_on(u, v, interval::future(t)) || value_set(u, t) != value_set(v, t))
          return true;
        return restr_set(u, interval::future(t)) == restr_set(v, interval::future(t));
      default:
        fail(errc::bad_parameter, "no single-instance form for this property");
    }
  }

  bool value_sets_equal(const signal& u, const signal& v, const rat& t) {
    return value_set(u, t) == value_set(v, t);
  }

  const state_set& states_of(const signal& u) { return states(index_of(u)); }

 private:
  // --- carriers and caches ---

  std::size_t index_of(const signal& u) {
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      if (corpus_[i] == u) return i;
    fail(errc::inadmissible_input, "signal not in corpus");
  }

  const state_set& states(std::size_t i) {
    if (!states_[i]) states_[i] = enumerate_states(f_, corpus_[i], grid_);
    return *states_[i];
  }

  std::set<word> value_set(const signal& u, const rat& t) { return value_set_idx(index_of(u), t); }

  std::set<word> value_set_idx(std::size_t i, const rat& t) {
    const auto key = std::make_pair(i, t);
    auto it = vs_cache_.find(key);
    if (it != vs_cache_.end()) return it->second;
    std::set<word> out;
    for (const signal& x : states(i)) out.insert(x.value_at(t));
    vs_cache_.emplace(key, out);
    return out;
  }

  std::set<restriction> restr_set(const signal& u, const interval& dom) {
    return restr_set_idx(index_of(u), dom);
  }

  std::set<restriction> restr_set_idx(std::size_t i, const interval& dom) {
    std::set<restriction> out;
    for (const signal& x : states(i)) out.insert(restrict(x, dom));
    return out;
  }

  std::vector<rat> model_offsets(std::size_t i, std::size_t j) const {
    std::vector<rat> extra = bounds_.t_extra;
    for (const rat& d : f_.delay_parameters())
      for (const signal* u : {&corpus_[i], &corpus_[j]})
        for (const auto& s : u->switches()) extra.push_back(s.first + d);
    return extra;
  }

  std::vector<rat> pair_reps(std::size_t i, std::size_t j) const {
    return representative_times(corpus_[i], corpus_[j], grid_.points, model_offsets(i, j));
  }

  std::vector<rat> corpus_reps() const {
    std::vector<rat> base = grid_.points;
    std::vector<rat> extra = bounds_.t_extra;
    for (const signal& u : corpus_) {
      base = merge_times(std::move(base), u.derivative_support());
      for (const rat& d : f_.delay_parameters())
        for (const auto& s : u.switches()) extra.push_back(s.first + d);
    }
    return representative_times(std::move(base), extra);
  }

  static std::vector<std::string> render_words(const std::set<word>& ws) {
    std::vector<std::string> out;
    for (const word& w : ws) out.push_back(w.str());
    return out;
  }
  static std::vector<std::string> render_restrictions(const std::set<restriction>& rs) {
    std::vector<std::string> out;
    for (const restriction& r : rs) out.push_back(r.str());
    return out;
  }

  na_verdict make_pass(na_property p, bool any_hyp, const std::string& note = "") const {
    na_verdict v;
    v.property = p;
    v.pass = true;
    v.vacuous = !any_hyp;
    v.carrier = carrier_;
    v.note = with_flag(note);
    return v;
  }

  na_verdict make_fail(na_property p, na_witness w) const {
    na_verdict v;
    v.property = p;
    v.pass = false;
    v.witness = std::move(w);
    v.carrier = carrier_;
    v.note = with_flag("");
    return v;
  }

  std::string with_flag(const std::string& note) const {
    if (model_flag_.empty()) return note;
    return note.empty() ? model_flag_ : note + "; " + model_flag_;
  }

  // --- def31: a variable state needs a variable input that switched no later ---

  na_verdict check_def31() {
    for (std::size_t i = 0; i < corpus_.size(); ++i) {
      const signal& u = corpus_[i];
      for (const signal& x : states(i)) {
        if (x.is_constant()) continue;
        na_witness w;
        w.u = u;
        w.v = x;
        w.rhs_set = {x.first_switch().str()};
        if (u.is_constant()) {
          w.t = x.first_switch();
          return make_fail(na_property::def31, std::move(w));
        }
        if (!(u.first_switch() <= x.first_switch())) {
          w.t = u.first_switch();
          w.lhs_set = {u.first_switch().str()};
          return make_fail(na_property::def31, std::move(w));
        }
      }
    }
    return make_pass(na_property::def31, true);
  }

  // --- def51 and conditions i), v), vi): universally quantified pairs ---

  na_verdict pairwise_check(na_property p) {
    bool any_hyp = false;
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      for (std::size_t j = i; j < corpus_.size(); ++j)
        for (const rat& t : pair_reps(i, j)) {
          const bool hyp =
              (p == na_property::def51 || p == na_property::c_i)
                  ? agree_on(corpus_[i], corpus_[j], interval::past_open(t))
                  : agree_on(corpus_[i], corpus_[j], interval::past_closed(t));
          if (!hyp) continue;
          if (i != j) any_hyp = true;
          if (p == na_property::c_i || p == na_property::c_vi) {
            const auto lhs = value_set_idx(i, t), rhs = value_set_idx(j, t);
            if (lhs != rhs) {
              na_witness w;
              w.t = t;
              w.u = corpus_[i];
              w.v = corpus_[j];
              w.lhs_set = render_words(lhs);
              w.rhs_set = render_words(rhs);
              return make_fail(p, std::move(w));
            }
          } else {
            const auto dom = interval::past_closed(t);
            const auto lhs = restr_set_idx(i, dom), rhs = restr_set_idx(j, dom);
            if (lhs != rhs) {
              na_witness w;
              w.t = t;
              w.u = corpus_[i];
              w.v = corpus_[j];
              w.lhs_set = render_restrictions(lhs);
              w.rhs_set = render_restrictions(rhs);
              return make_fail(p, std::move(w));
            }
          }
        }
    return make_pass(p, any_hyp);
  }

  // --- conditions ii)-iv): half-open memory windows [t-d, t) ---

  bool window_hyp(std::size_t i, std::size_t j, const rat& t, const rat& d) const {
    return agree_on(corpus_[i], corpus_[j], interval::window_ropen(t - d, t));
  }

  na_verdict check_c2() {
    bool any_hyp = false;
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      for (std::size_t j = i; j < corpus_.size(); ++j)
        for (const rat& t : pair_reps(i, j)) {
          bool hyp_somewhere = false;
          for (const rat& d : bounds_.d_candidates) hyp_somewhere |= window_hyp(i, j, t, d);
          if (hyp_somewhere && i != j) any_hyp = true;
          if (value_set_idx(i, t) == value_set_idx(j, t)) continue;  // any d witnesses the implication
          bool found = false;
          for (const rat& d : bounds_.d_candidates)
            if (!window_hyp(i, j, t, d)) { found = true; break; }
          if (!found) {
            na_witness w;
            w.t = t;
            w.d = bounds_.d_candidates.front();
            w.u = corpus_[i];
            w.v = corpus_[j];
            w.lhs_set = render_words(value_set_idx(i, t));
            w.rhs_set = render_words(value_set_idx(j, t));
            return make_fail(na_property::c_ii, std::move(w));
          }
        }
    return make_pass(na_property::c_ii, any_hyp);
  }

  na_verdict check_c3() {
    bool any_hyp = false;
    std::string note;
    for (const rat& t : corpus_reps()) {
      std::optional<na_witness> last_violation;
      bool found = false;
      for (const rat& d : bounds_.d_candidates) {
        bool ok = true;
        for (std::size_t i = 0; i < corpus_.size() && ok; ++i)
          for (std::size_t j = i; j < corpus_.size() && ok; ++j) {
            if (!window_hyp(i, j, t, d)) continue;
            if (i != j) any_hyp = true;
            if (value_set_idx(i, t) != value_set_idx(j, t)) {
              ok = false;
              na_witness w;
              w.t = t;
              w.d = d;
              w.u = corpus_[i];
              w.v = corpus_[j];
              w.lhs_set = render_words(value_set_idx(i, t));
              w.rhs_set = render_words(value_set_idx(j, t));
              last_violation = std::move(w);
            }
          }
        if (ok) { found = true; break; }
      }
      if (!found) return make_fail(na_property::c_iii, std::move(*last_violation));
    }
    return make_pass(na_property::c_iii, any_hyp, note);
  }

  na_verdict check_c4() {
    bool any_hyp = false;
    std::optional<na_witness> last_violation;
    for (const rat& d : bounds_.d_candidates) {
      bool ok = true;
      for (const rat& t : corpus_reps()) {
        for (std::size_t i = 0; i < corpus_.size() && ok; ++i)
          for (std::size_t j = i; j < corpus_.size() && ok; ++j) {
            if (!window_hyp(i, j, t, d)) continue;
            if (i != j) any_hyp = true;
            if (value_set_idx(i, t) != value_set_idx(j, t)) {
              ok = false;
              na_witness w;
              w.t = t;
              w.d = d;
              w.u = corpus_[i];
              w.v = corpus_[j];
              w.lhs_set = render_words(value_set_idx(i, t));
              w.rhs_set = render_words(value_set_idx(j, t));
              last_violation = std::move(w);
            }
          }
        if (!ok) break;
      }
      if (ok)
        return make_pass(na_property::c_iv, any_hyp, "d=" + d.str());
    }
    return make_fail(na_property::c_iv, std::move(*last_violation));
  }

  // --- conditions vii)-ix): closed memory windows [t-d', t-d] ---

  bool closed_hyp(std::size_t i, std::size_t j, const rat& t, const rat& d, const rat& dp) const {
    return agree_on(corpus_[i], corpus_[j], interval::window_closed(t - dp, t - d));
  }

  na_verdict check_c7() {
    bool any_hyp = false;
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      for (std::size_t j = i; j < corpus_.size(); ++j)
        for (const rat& t : pair_reps(i, j)) {
          bool hyp_somewhere = false;
          for (const auto& [d, dp] : bounds_.dd_candidates)
            hyp_somewhere |= closed_hyp(i, j, t, d, dp);
          if (hyp_somewhere && i != j) any_hyp = true;
          if (value_set_idx(i, t) == value_set_idx(j, t)) continue;
          bool found = false;
          for (const auto& [d, dp] : bounds_.dd_candidates)
            if (!closed_hyp(i, j, t, d, dp)) { found = true; break; }
          if (!found) {
            na_witness w;
            w.t = t;
            w.d = bounds_.dd_candidates.front().first;
            w.d_prime = bounds_.dd_candidates.front().second;
            w.u = corpus_[i];
            w.v = corpus_[j];
            w.lhs_set = render_words(value_set_idx(i, t));
            w.rhs_set = render_words(value_set_idx(j, t));
            return make_fail(na_property::c_vii, std::move(w));
          }
        }
    return make_pass(na_property::c_vii, any_hyp);
  }

  na_verdict check_c8() {
    bool any_hyp = false;
    for (const rat& t : corpus_reps()) {
      std::optional<na_witness> last_violation;
      bool found = false;
      for (const auto& [d, dp] : bounds_.dd_candidates) {
        bool ok = true;
        for (std::size_t i = 0; i < corpus_.size() && ok; ++i)
          for (std::size_t j = i; j < corpus_.size() && ok; ++j) {
            if (!closed_hyp(i, j, t, d, dp)) continue;
            if (i != j) any_hyp = true;
            if (value_set_idx(i, t) != value_set_idx(j, t)) {
              ok = false;
              na_witness w;
              w.t = t;
              w.d = d;
              w.d_prime = dp;
              w.u = corpus_[i];
              w.v = corpus_[j];
              w.lhs_set = render_words(value_set_idx(i, t));
              w.rhs_set = render_words(value_set_idx(j, t));
              last_violation = std::move(w);
            }
          }
        if (ok) { found = true; break; }
      }
      if (!found) return make_fail(na_property::c_viii, std::move(*last_violation));
    }
    return make_pass(na_property::c_viii, any_hyp);
  }

  na_verdict check_c9() {
    bool any_hyp = false;
    std::optional<na_witness> last_violation;
    for (const auto& [d, dp] : bounds_.dd_candidates) {
      bool ok = true;
      for (const rat& t : corpus_reps()) {
        for (std::size_t i = 0; i < corpus_.size() && ok; ++i)
          for (std::size_t j = i; j < corpus_.size() && ok; ++j) {
            if (!closed_hyp(i, j, t, d, dp)) continue;
            if (i != j) any_hyp = true;
            if (value_set_idx(i, t) != value_set_idx(j, t)) {
              ok = false;
              na_witness w;
              w.t = t;
              w.d = d;
              w.d_prime = dp;
              w.u = corpus_[i];
              w.v = corpus_[j];
              w.lhs_set = render_words(value_set_idx(i, t));
              w.rhs_set = render_words(value_set_idx(j, t));
              last_violation = std::move(w);
            }
          }
        if (!ok) break;
      }
      if (ok)
        return make_pass(na_property::c_ix, any_hyp, "d=" + d.str() + " d'=" + dp.str());
    }
    return make_fail(na_property::c_ix, std::move(*last_violation));
  }

  // --- the starred conditions: futures given matched presents ---

  na_verdict check_star1() {
    bool any_hyp = false;
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      for (std::size_t j = i; j < corpus_.size(); ++j)
        for (const rat& t : pair_reps(i, j)) {
          if (!agree_on(corpus_[i], corpus_[j], interval::future(t))) continue;
          if (value_set_idx(i, t) != value_set_idx(j, t)) continue;
          if (i != j) any_hyp = true;
          const auto dom = interval::future(t);
          const auto lhs = restr_set_idx(i, dom), rhs = restr_set_idx(j, dom);
          if (lhs != rhs) {
            na_witness w;
            w.t = t;
            w.u = corpus_[i];
            w.v = corpus_[j];
            w.lhs_set = render_restrictions(lhs);
            w.rhs_set = render_restrictions(rhs);
            return make_fail(na_property::star_i, std::move(w));
          }
        }
    return make_pass(na_property::star_i, any_hyp);
  }

  /// The tail-set map forgets as t' grows, so searching t' over the
  /// representative times >= t (the top sentinel included) is exhaustive.
  bool tails_eventually_agree(std::size_t i, std::size_t j, const rat& t,
                              const std::vector<rat>& reps) {
    for (const rat& tp : reps) {
      if (tp < t) continue;
      if (restr_set_idx(i, interval::future(tp)) == restr_set_idx(j, interval::future(tp)))
        return true;
    }
    return false;
  }

  na_verdict check_star2() {
    bool any_hyp = false;
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      for (std::size_t j = i; j < corpus_.size(); ++j) {
        const auto reps = pair_reps(i, j);
        for (const rat& t : reps) {
          if (!agree_on(corpus_[i], corpus_[j], interval::future(t))) continue;
          if (i != j) any_hyp = true;
          if (!tails_eventually_agree(i, j, t, reps)) {
            na_witness w;
            w.t = t;
            w.u = corpus_[i];
            w.v = corpus_[j];
            w.lhs_set = render_restrictions(restr_set_idx(i, interval::future(reps.back())));
            w.rhs_set = render_restrictions(restr_set_idx(j, interval::future(reps.back())));
            return make_fail(na_property::star_ii, std::move(w));
          }
        }
      }
    return make_pass(na_property::star_ii, any_hyp);
  }

  na_verdict check_star3() {
    bool any_hyp = false;
    for (std::size_t i = 0; i < corpus_.size(); ++i)
      for (std::size_t j = i; j < corpus_.size(); ++j) {
        const auto reps = pair_reps(i, j);
        for (const rat& t : reps) {
          if (!agree_on(corpus_[i], corpus_[j], interval::future(t))) continue;
          const auto dom = interval::past_closed(t);
          if (restr_set_idx(i, dom) != restr_set_idx(j, dom)) continue;
          if (i != j) any_hyp = true;
          if (!tails_eventually_agree(i, j, t, reps)) {
            na_witness w;
            w.t = t;
            w.u = corpus_[i];
            w.v = corpus_[j];
            w.lhs_set = render_restrictions(restr_set_idx(i, interval::future(reps.back())));
            w.rhs_set = render_restrictions(restr_set_idx(j, interval::future(reps.back())));
            return make_fail(na_property::star_iii, std::move(w));
          }
        }
      }
    return make_pass(na_property::star_iii, any_hyp);
  }

  system_model f_;
  std::vector<signal> corpus_;
  time_grid grid_;
  search_bounds bounds_;
  carriers carrier_;
  std::string model_flag_;
  std::vector<std::optional<state_set>> states_;
  std::map<std::pair<std::size_t, rat>, std::set<word>> vs_cache_;
};

// --- free functions matching the operation map -------------------------------------

inline na_verdict check_def31(const system_model& f, const std::vector<signal>& corpus,
                              const time_grid& grid) {
  return na_checker(f, corpus, grid).check(na_property::def31);
}

inline na_verdict check_def51(const system_model& f, const std::vector<signal>& corpus,
                              const time_grid& grid) {
  return na_checker(f, corpus, grid).check(na_property::def51);
}

inline na_verdict check_condition(const system_model& f, na_property p,
                                  const std::vector<signal>& corpus, const time_grid& grid,
                                  const search_bounds& bounds) {
  return na_checker(f, corpus, grid, bounds).check(p);
}

inline na_verdict check_star(const system_model& f, na_property p,
                             const std::vector<signal>& corpus, const time_grid& grid) {
  return na_checker(f, corpus, grid).check(p);
}

// --- the implication lattice between the conditions ---------------------------------

struct implication_edge {
  na_property stronger;
  na_property weaker;
};

inline const std::vector<implication_edge>& implication_lattice() {
  static const std::vector<implication_edge> edges = {
      {na_property::c_iv, na_property::c_iii},   {na_property::c_iii, na_property::c_ii},
      {na_property::c_ii, na_property::c_i},     {na_property::def51, na_property::c_i},
      {na_property::c_i, na_property::c_vi},     {na_property::def51, na_property::c_v},
      {na_property::c_ix, na_property::c_viii},  {na_property::c_viii, na_property::c_vii},
      {na_property::c_vii, na_property::c_vi},   {na_property::c_v, na_property::c_vi},
  };
  return edges;
}

/// Flags every lattice edge whose stronger side passed while the weaker side
/// failed on identical carriers: since Fail witnesses are definitive over the
/// enumerated sets, such a pair is an implementation bug.
inline std::vector<implication_edge> implication_audit(
    const std::map<na_property, na_verdict>& verdicts) {
  std::vector<implication_edge> out;
  for (const implication_edge& e : implication_lattice()) {
    auto s = verdicts.find(e.stronger);
    auto w = verdicts.find(e.weaker);
    if (s == verdicts.end() || w == verdicts.end()) continue;
    if (!(s->second.carrier == w->second.carrier)) continue;
    if (s->second.pass && !w->second.pass) out.push_back(e);
  }
  return out;
}

/// A subsystem of a non-anticipatory system is non-anticipatory: requires
/// f within g, then asserts def31(g) Pass implies def31(f) Pass on the same
/// carriers.
inline na_verdict check_lemma35(const system_model& g, const system_model& f,
                                const std::vector<signal>& corpus, const time_grid& grid) {
  if (!subsystem_check(f, g, corpus, grid).ok)
    fail(errc::not_a_subsystem, f.name() + " is not a subsystem of " + g.name());
  std::vector<signal> corpus_f;  // subsystems may restrict the input set
  for (const signal& u : corpus)
    if (f.admissible(u)) corpus_f.push_back(u);
  const na_verdict vg = check_def31(g, corpus, grid);
  na_verdict vf = check_def31(f, corpus_f, grid);
  if (!vg.pass) {
    vf.pass = true;
    vf.vacuous = true;
    vf.witness.reset();
    vf.note = "g fails def31 on this carrier; the implication is vacuous";
    return vf;
  }
  if (!vf.pass) {
    vf.note = "g passes def31 but the subsystem does not";
    return vf;
  }
  vf.note = "g and f both pass def31";
  return vf;
}

}  // namespace asysig
