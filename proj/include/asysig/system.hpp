#pragma once

#include <string>
#include <variant>
#include <vector>

#include "asysig/interval.hpp"
#include "asysig/signal.hpp"

namespace asysig {

/// Total Boolean function B^m -> B^n as an explicit table indexed by the
/// input word's bits.
struct truth_table {
  int inputs = 1;
  int outputs = 1;
  std::vector<word> rows;  // size 2^inputs, rows[w.bits()] = F(w)

  truth_table() = default;
  truth_table(int m, int n, std::vector<word> r) : inputs(m), outputs(n), rows(std::move(r)) {
    if (m < 1 || m > 16) fail(errc::bad_parameter, "truth table input count out of range");
    if (rows.size() != (std::size_t(1) << m))
      fail(errc::bad_parameter, "truth table must have 2^m rows");
    for (const word& w : rows)
      if (w.width() != n) fail(errc::bad_parameter, "truth table row width mismatch");
  }

  word apply(const word& in) const {
    if (in.width() != inputs) fail(errc::width_mismatch, "truth table input width");
    return rows[in.bits()];
  }
};

// --- model kinds ------------------------------------------------------------

/// x(t) = F(u(t-d)), the "ideal combinational" system.
struct ideal_combinational {
  truth_table table;
  rat d;
};

/// x(t) = u(t-d), d > 0.
struct pure_delay {
  rat d;
  int width = 1;
};

/// Dx(t) = (x(t-0) xor u(t-0)) & not(OR of Du over (t-d, t)), x(-inf+0) = u(-inf+0).
struct inertial_delay {
  rat d;
};

/// meet of u over [t-dr, t)  <=  x(t)  <=  join of u over [t-df, t).
struct bounded_delay_window {
  rat dr, df;
  int width = 1;
};

/// meet of u over [t-d', t-d]  <=  x(t)  <=  join of u over [t-d', t-d],
/// 0 <= d <= d'. With d = 0 the window reaches t itself.
struct bounded_delay_closed {
  rat d, dprime;
  int width = 1;
};

/// parity of |supp Du ∩ (-inf, t]|  <=  x(t), width 1.
struct parity_lower {};

/// x(t) = meet of u over [t - 2 phi(u), t - phi(u)], width 1.
struct phi_window {};

/// f(u) = {state} regardless of u.
struct const_state {
  signal state;
  int input_width = 1;
};

/// f(u) = { x | x(t) >= u(t-0) for all t }, per coordinate.
struct monotone_cover {
  int width = 1;
};

/// Explicit finite map input -> state set; admissible inputs are the keys.
struct tabulated {
  std::vector<std::pair<signal, std::vector<signal>>> map;
};

/// A multi-valued map from admissible input signals to non-empty state-signal
/// sets, given by a membership predicate plus exact grid enumeration.
class system_model {
 public:
  using kind_variant =
      std::variant<ideal_combinational, pure_delay, inertial_delay, bounded_delay_window,
                   bounded_delay_closed, parity_lower, phi_window, const_state, monotone_cover,
                   tabulated>;

  system_model(std::string name, kind_variant kind) : name_(std::move(name)), kind_(std::move(kind)) {
    validate();
  }

  const std::string& name() const { return name_; }
  const kind_variant& kind() const { return kind_; }

  template <typename T>
  const T* as() const {
    return std::get_if<T>(&kind_);
  }

  int input_width() const { return input_width_; }
  int state_width() const { return state_width_; }

  bool admissible(const signal& u) const {
    if (u.width() != input_width_) return false;
    if (const auto* t = as<tabulated>()) {
      for (const auto& e : t->map)
        if (e.first == u) return true;
      return false;
    }
    return true;
  }

  /// Exactly one state per admissible input.
  bool deterministic() const {
    return as<ideal_combinational>() || as<pure_delay>() || as<inertial_delay>() ||
           as<phi_window>() || as<const_state>();
  }

  std::string kind_name() const {
    if (as<ideal_combinational>()) return "combinational";
    if (as<pure_delay>()) return "pure_delay";
    if (as<inertial_delay>()) return "inertial_delay";
    if (as<bounded_delay_window>()) return "bounded_delay";
    if (as<bounded_delay_closed>()) return "bounded_delay_closed";
    if (as<parity_lower>()) return "parity_lower";
    if (as<phi_window>()) return "phi_window";
    if (as<const_state>()) return "const_state";
    if (as<monotone_cover>()) return "monotone_cover";
    return "tabulated";
  }

  /// Delay parameters of the model, used to seed default search bounds.
  std::vector<rat> delay_parameters() const {
    if (const auto* k = as<ideal_combinational>()) return {k->d};
    if (const auto* k = as<pure_delay>()) return {k->d};
    if (const auto* k = as<inertial_delay>()) return {k->d};
    if (const auto* k = as<bounded_delay_window>()) return {k->dr, k->df};
    if (const auto* k = as<bounded_delay_closed>()) return {k->d, k->dprime};
    return {};
  }

 private:
  void validate() {
    if (const auto* k = as<ideal_combinational>()) {
      if (k->d < rat(0)) fail(errc::bad_parameter, "combinational d must be >= 0");
      input_width_ = k->table.inputs;
      state_width_ = k->table.outputs;
    } else if (const auto* k2 = as<pure_delay>()) {
      if (!(k2->d > rat(0))) fail(errc::bad_parameter, "pure_delay d must be > 0");
      input_width_ = state_width_ = k2->width;
    } else if (const auto* k3 = as<inertial_delay>()) {
      if (!(k3->d > rat(0))) fail(errc::bad_parameter, "inertial_delay d must be > 0");
      input_width_ = state_width_ = 1;
    } else if (const auto* k4 = as<bounded_delay_window>()) {
      if (!(k4->dr > rat(0)) || !(k4->df > rat(0)))
        fail(errc::bad_parameter, "bounded_delay dr, df must be > 0");
      input_width_ = state_width_ = k4->width;
    } else if (const auto* k5 = as<bounded_delay_closed>()) {
      if (k5->d < rat(0) || k5->dprime < k5->d)
        fail(errc::bad_parameter, "bounded_delay_closed needs 0 <= d <= d'");
      input_width_ = state_width_ = k5->width;
    } else if (as<parity_lower>()) {
      input_width_ = state_width_ = 1;
    } else if (as<phi_window>()) {
      input_width_ = state_width_ = 1;
    } else if (const auto* k6 = as<const_state>()) {
      input_width_ = k6->input_width;
      state_width_ = k6->state.width();
    } else if (const auto* k7 = as<monotone_cover>()) {
      input_width_ = state_width_ = k7->width;
    } else if (const auto* k8 = as<tabulated>()) {
      if (k8->map.empty()) fail(errc::bad_parameter, "tabulated map must be non-empty");
      input_width_ = k8->map.front().first.width();
      state_width_ = -1;
      for (const auto& e : k8->map) {
        if (e.first.width() != input_width_)
          fail(errc::bad_parameter, "tabulated input widths differ");
        if (e.second.empty())
          fail(errc::bad_parameter, "tabulated state set must be non-empty");
        for (const auto& x : e.second) {
          if (state_width_ < 0) state_width_ = x.width();
          if (x.width() != state_width_)
            fail(errc::bad_parameter, "tabulated state widths differ");
        }
      }
      for (std::size_t i = 0; i < k8->map.size(); ++i)
        for (std::size_t j = i + 1; j < k8->map.size(); ++j)
          if (k8->map[i].first == k8->map[j].first)
            fail(errc::bad_parameter, "tabulated map lists an input twice");
    }
  }

  std::string name_;
  kind_variant kind_;
  int input_width_ = 1;
  int state_width_ = 1;
};

// --- pointwise bounds -------------------------------------------------------

namespace detail {

/// Breakpoints of t -> (lower(t), upper(t)) for the bound-constrained kinds,
/// and of the defining-equation terms for the others.
inline std::vector<rat> bound_breakpoints(const system_model& f, const signal& u) {
  std::vector<rat> out;
  auto add_shifted = [&](const rat& d) {
    for (const auto& s : u.switches()) out.push_back(s.first + d);
  };
  if (const auto* k = f.as<bounded_delay_window>()) {
    add_shifted(rat(0));
    add_shifted(k->dr);
    add_shifted(k->df);
  } else if (const auto* k2 = f.as<bounded_delay_closed>()) {
    add_shifted(k2->d);
    add_shifted(k2->dprime);
  } else if (f.as<parity_lower>() || f.as<monotone_cover>()) {
    add_shifted(rat(0));
  } else if (const auto* k3 = f.as<inertial_delay>()) {
    add_shifted(rat(0));
    add_shifted(k3->d);
  } else if (f.as<phi_window>()) {
    const rat p = phi(u);
    add_shifted(p);
    add_shifted(p + p);
  } else if (const auto* k5 = f.as<ideal_combinational>()) {
    add_shifted(k5->d);
  } else if (const auto* k6 = f.as<pure_delay>()) {
    add_shifted(k6->d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline bool is_bound_constrained(const system_model& f) {
  return f.as<bounded_delay_window>() || f.as<bounded_delay_closed>() || f.as<parity_lower>() ||
         f.as<monotone_cover>();
}

/// Pointwise lower bound on x(t) for the bound-constrained kinds.
inline word lower_at(const system_model& f, const signal& u, const rat& t) {
  if (const auto* k = f.as<bounded_delay_window>())
    return window_meet(u, interval::window_ropen(t - k->dr, t));
  if (const auto* k = f.as<bounded_delay_closed>())
    return window_meet(u, interval::window_closed(t - k->dprime, t - k->d));
  if (f.as<parity_lower>()) return parity_integral(u, t);
  if (f.as<monotone_cover>()) return u.left_limit(t);
  fail(errc::bad_parameter, "model has no pointwise lower bound");
}

/// Pointwise upper bound on x(t) for the bound-constrained kinds.
inline word upper_at(const system_model& f, const signal& u, const rat& t) {
  if (const auto* k = f.as<bounded_delay_window>())
    return window_join(u, interval::window_ropen(t - k->df, t));
  if (const auto* k = f.as<bounded_delay_closed>())
    return window_join(u, interval::window_closed(t - k->dprime, t - k->d));
  if (f.as<parity_lower>() || f.as<monotone_cover>()) return word::ones(f.state_width());
  fail(errc::bad_parameter, "model has no pointwise upper bound");
}

/// OR of Du over the open interval (lo, hi): 1 iff u switches strictly inside.
inline bool has_switch_inside(const signal& u, const rat& lo, const rat& hi) {
  for (const auto& s : u.switches())
    if (lo < s.first && s.first < hi) return true;
  return false;
}

}  // namespace detail

// --- deterministic evaluation -----------------------------------------------

/// Unique solution of the inertial-delay equation for d > 0:
/// x switches at t iff x(t-0) != u(t-0) and u has no switch in (t-d, t).
/// The candidate instants are the input switch times s and their shifts s+d;
/// a left-to-right scan over them reaches the fixed point in one pass.
inline signal eval_inertial(const rat& d, const signal& u) {
  if (!(d > rat(0))) fail(errc::bad_parameter, "inertial delay needs d > 0");
  if (u.width() != 1) fail(errc::width_mismatch, "inertial delay expects width 1");
  std::vector<rat> candidates;
  for (const auto& s : u.switches()) {
    candidates.push_back(s.first);
    candidates.push_back(s.first + d);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  word cur = u.initial();
  std::vector<signal::step> steps;
  for (const rat& t : candidates) {
    if (cur != u.left_limit(t) && !detail::has_switch_inside(u, t - d, t)) {
      cur = ~cur;
      steps.emplace_back(t, cur);
    }
  }
  return signal(u.initial(), std::move(steps));
}

/// x(t) = meet of u over [t - 2 phi(u), t - phi(u)]; equals u when u is
/// constant (degenerate one-point window).
inline signal eval_phi_window(const signal& u) {
  if (u.width() != 1) fail(errc::width_mismatch, "phi window expects width 1");
  const rat p = phi(u);
  if (p == rat(0)) return u;
  auto meet_at = [&](const rat& t) { return window_meet(u, interval::window_closed(t - p - p, t - p)); };
  std::vector<rat> breaks;
  for (const auto& s : u.switches()) {
    breaks.push_back(s.first + p);
    breaks.push_back(s.first + p + p);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  std::vector<signal::step> steps;
  for (const rat& b : breaks) steps.emplace_back(b, meet_at(b));
  return signal(u.initial(), std::move(steps));
}

/// The unique state of a deterministic model.
inline signal eval_deterministic(const system_model& f, const signal& u) {
  if (!f.admissible(u)) fail(errc::inadmissible_input, "input not admissible for " + f.name());
  if (const auto* k = f.as<pure_delay>()) return u.translate(k->d);
  if (const auto* k = f.as<inertial_delay>()) return eval_inertial(k->d, u);
  if (f.as<phi_window>()) return eval_phi_window(u);
  if (const auto* k = f.as<const_state>()) return k->state;
  if (const auto* k = f.as<ideal_combinational>()) {
    const signal shifted = u.translate(k->d);
    std::vector<signal::step> steps;
    for (const auto& s : shifted.switches()) steps.emplace_back(s.first, k->table.apply(s.second));
    return signal(k->table.apply(shifted.initial()), std::move(steps));
  }
  fail(errc::not_deterministic, f.name() + " is not a deterministic model");
}

// --- membership -------------------------------------------------------------

/// Decides x in f(u) exactly, checking the defining equation/inequalities at
/// all critical times (switch times of u and x, those shifted by the model's
/// delays, window endpoints, plus one point below and above all of them).
inline bool membership(const system_model& f, const signal& u, const signal& x) {
  if (!f.admissible(u)) fail(errc::inadmissible_input, "input not admissible for " + f.name());
  if (x.width() != f.state_width()) fail(errc::width_mismatch, "state width mismatch");

  if (const auto* t = f.as<tabulated>()) {
    for (const auto& e : t->map)
      if (e.first == u) {
        for (const auto& s : e.second)
          if (s == x) return true;
        return false;
      }
    return false;
  }
  if (const auto* c = f.as<const_state>()) return x == c->state;

  std::vector<rat> base = detail::bound_breakpoints(f, u);
  base = merge_times(std::move(base), x.derivative_support());
  base = merge_times(std::move(base), u.derivative_support());
  const std::vector<rat> probes = representative_times(std::move(base));

  if (detail::is_bound_constrained(f)) {
    for (const rat& t : probes) {
      const word v = x.value_at(t);
      if (!leq(detail::lower_at(f, u, t), v) || !leq(v, detail::upper_at(f, u, t))) return false;
    }
    return true;
  }
  if (const auto* k = f.as<inertial_delay>()) {
    if (x.initial() != u.initial()) return false;
    for (const rat& t : probes) {
      const bool lhs = x.derivative_at(t).any();
      const bool rhs =
          (x.left_limit(t) != u.left_limit(t)) && !detail::has_switch_inside(u, t - k->d, t);
      if (lhs != rhs) return false;
    }
    return true;
  }
  if (const auto* k = f.as<pure_delay>()) {
    for (const rat& t : probes)
      if (x.value_at(t) != u.value_at(t - k->d)) return false;
    return true;
  }
  if (const auto* k = f.as<ideal_combinational>()) {
    for (const rat& t : probes)
      if (x.value_at(t) != k->table.apply(u.value_at(t - k->d))) return false;
    return true;
  }
  if (f.as<phi_window>()) {
    const rat p = phi(u);
    for (const rat& t : probes)
      if (x.value_at(t) != window_meet(u, interval::window_closed(t - p - p, t - p))) return false;
    return true;
  }
  fail(errc::bad_parameter, "membership: unhandled model kind");
}

}  // namespace asysig
