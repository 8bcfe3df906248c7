#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "asysig/interval.hpp"
#include "asysig/signal.hpp"
#include "helpers.hpp"

using namespace asysig;
using testhelp::probe_times;
using testhelp::random_signal;

namespace {
const word b0(1, 0);
const word b1(1, 1);
}  // namespace

TEST_CASE("value_at follows left-closed right-open pieces") {
  const signal x = chi(rat(0), rat(2));
  CHECK(x.value_at(rat(0)) == b1);
  CHECK(x.value_at(rat(2)) == b0);
  CHECK(x.value_at(rat(1)) == b1);
  CHECK(chi_from(rat(0)).value_at(rat(-5)) == b0);
}

TEST_CASE("left limit takes the earlier value at a switch") {
  const signal u = chi_from(rat(0));
  CHECK(u.left_limit(rat(0)) == b0);
  CHECK(u.left_limit(rat(1)) == b1);
  CHECK(chi(rat(0), rat(2)).left_limit(rat(2)) == b1);
}

TEST_CASE("derivative support is the switch set") {
  CHECK(signal::constant(b0).derivative_support().empty());
  CHECK(chi(rat(0), rat(2)).derivative_support() == std::vector<rat>{rat(0), rat(2)});
  const signal x(b0, {{rat(1, 2), b1}, {rat(3, 2), b0}, {rat(9, 4), b1}});
  CHECK(x.derivative_support() == std::vector<rat>{rat(1, 2), rat(3, 2), rat(9, 4)});
}

TEST_CASE("first switch") {
  CHECK(chi_from(rat(2)).first_switch() == rat(2));
  CHECK_THROWS_AS(signal::constant(b0).first_switch(), error);
  CHECK(s_xor(chi(rat(0), rat(1)), chi(rat(2), rat(3))).first_switch() == rat(0));
}

TEST_CASE("translate shifts switch times") {
  CHECK(chi_from(rat(0)).translate(rat(2)) == chi_from(rat(2)));
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const signal x = random_signal(rng, 2);
    CHECK(x.translate(rat(0)) == x);
    CHECK(x.translate(rat(3, 2)).translate(rat(-3, 2)) == x);
    const rat d1(1, 4), d2(5, 2);
    CHECK(x.translate(d1 + d2) == x.translate(d1).translate(d2));
    if (!x.is_constant())
      CHECK(x.translate(d1).first_switch() == x.first_switch() + d1);
  }
}

TEST_CASE("pointwise ops, fixed examples") {
  const signal x = chi(rat(0), rat(2));
  CHECK(s_xor(x, x) == signal::constant(b0));
  CHECK(s_and(chi(rat(0), rat(2)), chi(rat(1), rat(3))) == chi(rat(1), rat(2)));
  CHECK(s_or(chi(rat(0), rat(1)), chi(rat(1), rat(2))) == chi(rat(0), rat(2)));
  CHECK_THROWS_AS(s_or(x, signal::constant(word(2, 0))), error);
}

TEST_CASE("pointwise ops agree with a sample-based oracle") {
  std::mt19937 rng(11);
  for (int i = 0; i < 100; ++i) {
    const signal x = random_signal(rng, 2);
    const signal y = random_signal(rng, 2);
    const signal o = s_or(x, y), a = s_and(x, y), xo = s_xor(x, y), n = s_not(x);
    for (const rat& t : probe_times({&x, &y})) {
      CHECK(o.value_at(t) == (x.value_at(t) | y.value_at(t)));
      CHECK(a.value_at(t) == (x.value_at(t) & y.value_at(t)));
      CHECK(xo.value_at(t) == (x.value_at(t) ^ y.value_at(t)));
      CHECK(n.value_at(t) == ~x.value_at(t));
    }
    // involution, idempotence, De Morgan
    CHECK(s_xor(xo, y) == x);
    CHECK(s_or(x, x) == x);
    CHECK(s_and(x, x) == x);
    CHECK(s_not(s_or(x, y)) == s_and(s_not(x), s_not(y)));
  }
}

TEST_CASE("canonical reconstruction is the identity") {
  std::mt19937 rng(13);
  for (int i = 0; i < 100; ++i) {
    const signal x = random_signal(rng, 2);
    CHECK(signal(x.initial(), x.switches()) == x);
    // Dx characterization at probes
    for (const rat& t : probe_times({&x})) {
      const bool is_switch = x.value_at(t) != x.left_limit(t);
      const auto supp = x.derivative_support();
      const bool in_supp = std::find(supp.begin(), supp.end(), t) != supp.end();
      CHECK(is_switch == in_supp);
    }
  }
}

TEST_CASE("concat") {
  CHECK(concat(signal::constant(b0), signal::constant(b1), rat(0)) == chi_from(rat(0)));
  CHECK(concat(chi_from(rat(0)), chi_from(rat(0)), rat(2)) == chi_from(rat(0)));
  std::mt19937 rng(17);
  for (int i = 0; i < 100; ++i) {
    const signal u = random_signal(rng);
    const signal v = random_signal(rng);
    const rat t(std::uniform_int_distribution<int>(-4, 8)(rng), 2);
    const signal c = concat(u, v, t);
    CHECK(concat(u, u, t) == u);
    CHECK(restrict(c, interval::past_open(t)) == restrict(u, interval::past_open(t)));
    CHECK(restrict(c, interval::future(t)) == restrict(v, interval::future(t)));
  }
}

TEST_CASE("parity integral counts switches up to t") {
  CHECK(parity_integral(signal::constant(b1), rat(5)) == b0);
  CHECK(parity_integral(chi(rat(0), rat(2)), rat(1)) == b1);
  CHECK(parity_integral(chi(rat(0), rat(2)), rat(3)) == b0);
  CHECK(parity_integral(chi(rat(0), rat(2)), rat(2)) == b0);  // switch at t counts
}

TEST_CASE("phi") {
  CHECK(phi(signal::constant(b0)) == rat(0));
  CHECK(phi(chi_from(rat(2))) == rat(2));
  CHECK(phi(chi_from(rat(-3))) == rat(3));
}

TEST_CASE("membership in S0") {
  CHECK(signal::constant(b1).is_in_s0());
  CHECK(chi_from(rat(0)).is_in_s0());
  CHECK_FALSE(chi_from(rat(-1)).is_in_s0());
}

TEST_CASE("window meet and join, fixed examples") {
  const signal u = chi_from(rat(0));
  CHECK(window_meet(u, interval::window_ropen(rat(0), rat(1))) == b1);
  CHECK(window_join(u, interval::window_ropen(rat(0), rat(1))) == b1);
  CHECK(window_meet(u, interval::window_ropen(rat(-1), rat(1))) == b0);
  CHECK(window_join(u, interval::window_ropen(rat(-1), rat(1))) == b1);
  CHECK(window_meet(u, interval::window_closed(rat(-2), rat(-1))) == b0);
  CHECK(window_join(u, interval::window_closed(rat(-2), rat(-1))) == b0);
  CHECK_THROWS_AS(window_meet(u, interval::window_ropen(rat(1), rat(1))), error);
}

TEST_CASE("window meet/join agree with brute-force evaluation") {
  std::mt19937 rng(19);
  for (int i = 0; i < 100; ++i) {
    const signal u = random_signal(rng, 2);
    std::uniform_int_distribution<int> pick(-6, 12);
    rat a(pick(rng), 2), b(pick(rng), 2);
    if (b < a) std::swap(a, b);
    for (bool closed : {true, false}) {
      if (!closed && a == b) continue;
      const interval w = closed ? interval::window_closed(a, b) : interval::window_ropen(a, b);
      // oracle: evaluate at endpoint(s), interior switch times, and midpoints
      word meet = word::ones(2), join = word::zeros(2);
      std::vector<rat> pts{a};
      for (const auto& s : u.switches())
        if (w.contains(s.first)) pts.push_back(s.first);
      if (closed) pts.push_back(b);
      std::sort(pts.begin(), pts.end());
      std::vector<rat> all = pts;
      for (std::size_t k = 1; k < pts.size(); ++k) all.push_back(rat::mid(pts[k - 1], pts[k]));
      if (!closed && pts.back() < b) all.push_back(rat::mid(pts.back(), b));
      for (const rat& t : all) {
        meet = meet & u.value_at(t);
        join = join | u.value_at(t);
      }
      CHECK(window_meet(u, w) == meet);
      CHECK(window_join(u, w) == join);
    }
  }
}
