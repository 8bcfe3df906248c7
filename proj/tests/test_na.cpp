#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "asysig/na.hpp"
#include "helpers.hpp"

using namespace asysig;
using testhelp::exhaustive_corpus;

namespace {
const word b0(1, 0);
const word b1(1, 1);

// e53: x = chi[0,1) xor (u o tau^1) . chi[1,inf), tabulated over a corpus.
signal e53_state(const signal& u) {
  return s_xor(chi(rat(0), rat(1)), s_and(u.translate(rat(1)), chi_from(rat(1))));
}

system_model make_e53(const std::vector<signal>& corpus) {
  tabulated t;
  for (const signal& u : corpus) t.map.emplace_back(u, std::vector<signal>{e53_state(u)});
  return system_model("e53", std::move(t));
}

// e54: f(u) = 1 if u = chi[0,inf), else u.
system_model make_e54(const std::vector<signal>& corpus) {
  tabulated t;
  for (const signal& u : corpus) {
    const signal x = (u == chi_from(rat(0))) ? signal::constant(b1) : u;
    t.map.emplace_back(u, std::vector<signal>{x});
  }
  return system_model("e54", std::move(t));
}

// e55: f(u) = 1 if u = chi[0,inf), else u o tau^-1.
system_model make_e55(const std::vector<signal>& corpus) {
  tabulated t;
  for (const signal& u : corpus) {
    const signal x = (u == chi_from(rat(0))) ? signal::constant(b1) : u.translate(rat(-1));
    t.map.emplace_back(u, std::vector<signal>{x});
  }
  return system_model("e55", std::move(t));
}

const std::vector<na_property> all_nine = {
    na_property::c_i,  na_property::c_ii,  na_property::c_iii,
    na_property::c_iv, na_property::c_v,   na_property::c_vi,
    na_property::c_vii, na_property::c_viii, na_property::c_ix};
}  // namespace

TEST_CASE("def31: a constant-state system is anticipatory") {
  const system_model f("f", const_state{chi_from(rat(0)), 1});
  const na_verdict v = check_def31(f, {signal::constant(b0)}, time_grid({rat(0)}));
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  REQUIRE(v.witness->u.has_value());
  CHECK(v.witness->u->is_constant());
  CHECK(*v.witness->v == chi_from(rat(0)));
}

TEST_CASE("def31: pure delay passes") {
  const system_model p("p", pure_delay{rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const na_verdict v = check_def31(p, corpus, time_grid({rat(0), rat(1), rat(2)}));
  CHECK(v.pass);
}

TEST_CASE("def31: e53 fails with witness 2 > 0") {
  auto corpus = exhaustive_corpus(1, {rat(2), rat(3)});
  // put the interesting input first so the verdict reports it
  std::rotate(corpus.begin(), std::find(corpus.begin(), corpus.end(), chi_from(rat(2))),
              corpus.end());
  const system_model f = make_e53(corpus);
  const time_grid grid({rat(0), rat(1), rat(2), rat(3), rat(4)});
  const na_verdict v = check_def31(f, corpus, grid);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness->t == rat(2));
  CHECK(v.witness->lhs_set == std::vector<std::string>{"2"});
  CHECK(v.witness->rhs_set == std::vector<std::string>{"0"});
  // ... while def51 passes on the same carrier
  CHECK(check_def51(f, corpus, grid).pass);
}

TEST_CASE("def51: e54 fails, def31 passes") {
  const std::vector<signal> corpus = {chi_from(rat(0)), chi(rat(0), rat(2)),
                                      signal::constant(b0), signal::constant(b1)};
  const system_model f = make_e54(corpus);
  const time_grid grid({rat(0), rat(1), rat(2)});
  const na_verdict v = check_def51(f, corpus, grid);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  CHECK(*v.witness->u == chi_from(rat(0)));
  CHECK(*v.witness->v == chi(rat(0), rat(2)));
  // the canonical instance: t=1, pasts agree on (-inf,1), state histories differ
  na_checker chk(f, corpus, grid);
  CHECK_FALSE(chk.def51_instance_holds(chi_from(rat(0)), chi(rat(0), rat(2)), rat(1)));
  CHECK(check_def31(f, corpus, grid).pass);
}

TEST_CASE("e55 fails def31 and def51") {
  const std::vector<signal> corpus = {chi_from(rat(0)), chi(rat(0), rat(2)), chi_from(rat(2)),
                                      signal::constant(b0)};
  const system_model f = make_e55(corpus);
  const time_grid grid({rat(-1), rat(0), rat(1), rat(2)});
  CHECK_FALSE(check_def31(f, corpus, grid).pass);
  CHECK_FALSE(check_def51(f, corpus, grid).pass);
}

TEST_CASE("def51: inertial delay passes on a small corpus") {
  const system_model f("i", inertial_delay{rat(1)});
  const std::vector<signal> corpus = {signal::constant(b0), chi_from(rat(0)), chi(rat(0), rat(1)),
                                      chi_from(rat(1))};
  const time_grid grid({rat(0), rat(1), rat(2)});
  CHECK(check_def51(f, corpus, grid).pass);
  CHECK(check_def31(f, corpus, grid).pass);
}

TEST_CASE("pure delay satisfies all nine conditions") {
  const system_model p("p", pure_delay{rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  na_checker chk(p, corpus, grid);
  for (na_property prop : all_nine) {
    const na_verdict v = chk.check(prop);
    INFO(property_tag(prop));
    CHECK(v.pass);
    CHECK_FALSE(v.vacuous);
  }
}

TEST_CASE("bounded delay window satisfies all nine conditions") {
  const system_model b("b", bounded_delay_window{rat(1), rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  na_checker chk(b, corpus, grid);
  for (na_property prop : all_nine) {
    const na_verdict v = chk.check(prop);
    INFO(property_tag(prop));
    CHECK(v.pass);
  }
}

TEST_CASE("closed bounded delay satisfies v) through ix)") {
  const system_model b("bc", bounded_delay_closed{rat(1), rat(2), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2), rat(3)});
  na_checker chk(b, corpus, grid);
  for (na_property prop : {na_property::c_v, na_property::c_vi, na_property::c_vii,
                           na_property::c_viii, na_property::c_ix}) {
    INFO(property_tag(prop));
    CHECK(chk.check(prop).pass);
  }
}

TEST_CASE("parity-integral system satisfies v) and vi)") {
  const system_model q("q", parity_lower{});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  na_checker chk(q, corpus, grid);
  CHECK(chk.check(na_property::c_v).pass);
  CHECK(chk.check(na_property::c_vi).pass);
  // ... and genuinely fails i): a switch exactly at t is visible to the
  // integral but not to the open past
  CHECK_FALSE(chk.check(na_property::c_i).pass);
}

TEST_CASE("phi-window system satisfies vii)") {
  const system_model f("ph", phi_window{});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2), rat(3)});
  na_checker chk(f, corpus, grid);
  CHECK(chk.check(na_property::c_vii).pass);
}

TEST_CASE("deterministic systems: v) agrees with vi), def51 with i)") {
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  std::vector<system_model> models;
  models.emplace_back("p", pure_delay{rat(1), 1});
  models.emplace_back("i", inertial_delay{rat(1)});
  models.emplace_back("ph", phi_window{});
  models.emplace_back("k", const_state{signal::constant(b1), 1});
  const time_grid grid({rat(0), rat(1), rat(2), rat(3)});
  for (const system_model& f : models) {
    REQUIRE(f.deterministic());
    na_checker chk(f, corpus, grid);
    INFO(f.name());
    CHECK(chk.check(na_property::c_v).pass == chk.check(na_property::c_vi).pass);
    CHECK(chk.check(na_property::def51).pass == chk.check(na_property::c_i).pass);
  }
}

TEST_CASE("value sets can agree while restriction sets differ (r63)") {
  const signal falling(b1, {{rat(0), b0}});  // chi_(-inf,0)
  const system_model f(
      "r63", tabulated{{{signal::constant(b0), {signal::constant(b0), signal::constant(b1)}},
                        {chi_from(rat(2)), {falling, chi_from(rat(0))}}}});
  const std::vector<signal> corpus = {signal::constant(b0), chi_from(rat(2))};
  const time_grid grid({rat(0), rat(1), rat(2)});
  na_checker chk(f, corpus, grid);
  std::map<na_property, na_verdict> verdicts;
  verdicts.emplace(na_property::c_v, chk.check(na_property::c_v));
  verdicts.emplace(na_property::c_vi, chk.check(na_property::c_vi));
  verdicts.emplace(na_property::def51, chk.check(na_property::def51));
  verdicts.emplace(na_property::c_i, chk.check(na_property::c_i));
  CHECK_FALSE(verdicts.at(na_property::c_v).pass);
  CHECK(verdicts.at(na_property::c_vi).pass);
  CHECK(verdicts.at(na_property::c_i).pass);
  CHECK(implication_audit(verdicts).empty());
}

TEST_CASE("implication audit flags an injected inconsistency") {
  const system_model p("p", pure_delay{rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0)});
  const time_grid grid({rat(0), rat(1)});
  na_checker chk(p, corpus, grid);
  std::map<na_property, na_verdict> verdicts;
  verdicts.emplace(na_property::c_iv, chk.check(na_property::c_iv));
  na_verdict bad = chk.check(na_property::c_iii);
  bad.pass = false;
  verdicts.emplace(na_property::c_iii, bad);
  const auto flags = implication_audit(verdicts);
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].stronger == na_property::c_iv);
  CHECK(flags[0].weaker == na_property::c_iii);
}

TEST_CASE("pure delay full run: no lattice inconsistencies") {
  const system_model p("p", pure_delay{rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  na_checker chk(p, corpus, grid);
  std::map<na_property, na_verdict> verdicts;
  for (na_property prop : all_nine) verdicts.emplace(prop, chk.check(prop));
  verdicts.emplace(na_property::def51, chk.check(na_property::def51));
  CHECK(implication_audit(verdicts).empty());
}

TEST_CASE("condition iv) passes upward in d") {
  const system_model p("p", pure_delay{rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  const std::vector<rat> ds = {rat(1, 2), rat(1), rat(3, 2), rat(2), rat(3)};
  std::vector<bool> passes;
  for (const rat& d : ds) {
    search_bounds b;
    b.d_candidates = {d};
    passes.push_back(check_condition(p, na_property::c_iv, corpus, grid, b).pass);
  }
  for (std::size_t i = 0; i + 1 < ds.size(); ++i)
    if (passes[i]) CHECK(passes[i + 1]);
  CHECK(passes[1]);  // the model's own delay works
}

TEST_CASE("missing bounds are rejected") {
  const system_model p("p", pure_delay{rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0)});
  search_bounds empty;
  CHECK_THROWS_AS(check_condition(p, na_property::c_ii, corpus, time_grid({rat(0)}), empty),
                  error);
}

TEST_CASE("vacuous pass carries the flag") {
  // constants with different initial values never share a past
  const system_model p("p", pure_delay{rat(1), 1});
  const std::vector<signal> corpus = {signal::constant(b0), signal::constant(b1)};
  const na_verdict v = check_def51(p, corpus, time_grid({rat(0)}));
  CHECK(v.pass);
  CHECK(v.vacuous);
}

TEST_CASE("star i): monotone cover passes") {
  const system_model m("m", monotone_cover{1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  CHECK(check_star(m, na_property::star_i, corpus, grid).pass);
}

TEST_CASE("star i): pure delay fails on a pair with equal tails and matched present") {
  const signal u = chi_from(rat(0));
  const signal v = s_xor(chi_from(rat(0)), chi(rat(3, 2), rat(7, 4)));
  const system_model p("p", pure_delay{rat(1), 1});
  const time_grid grid({rat(1), rat(2), rat(5, 2), rat(11, 4)});
  na_checker chk(p, {u, v}, grid);
  const na_verdict verdict = chk.check(na_property::star_i);
  CHECK_FALSE(verdict.pass);
  REQUIRE(verdict.witness.has_value());
  const rat t = *verdict.witness->t;
  // replay: equal input tails, equal value sets at t, different state tails
  CHECK(agree_on(u, v, interval::future(t)));
  CHECK(chk.value_sets_equal(u, v, t));
  const signal x = u.translate(rat(1)), y = v.translate(rat(1));
  CHECK(restrict(x, interval::future(t)) != restrict(y, interval::future(t)));
  // the same violation seen at t=2
  CHECK(agree_on(u, v, interval::future(rat(2))));
  CHECK(chk.value_sets_equal(u, v, rat(2)));
  CHECK(restrict(x, interval::future(rat(2))) != restrict(y, interval::future(rat(2))));
  // star ii) recovers: far enough right the tails agree
  CHECK(chk.check(na_property::star_ii).pass);
}

TEST_CASE("star conditions hold trivially for const_state") {
  const system_model k("k", const_state{chi_from(rat(0)), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  na_checker chk(k, corpus, grid);
  CHECK(chk.check(na_property::star_i).pass);
  CHECK(chk.check(na_property::star_ii).pass);
  CHECK(chk.check(na_property::star_iii).pass);
}

TEST_CASE("subsystems of a def31-passing system pass def31") {
  const system_model g("g", bounded_delay_window{rat(1), rat(1), 1});
  const auto corpus = exhaustive_corpus(1, {rat(0), rat(1)});
  const time_grid grid({rat(0), rat(1), rat(2)});
  // f = g is trivially consistent
  CHECK(check_lemma35(g, g, corpus, grid).pass);

  std::mt19937 rng(47);
  for (int k = 0; k < 20; ++k) {
    tabulated t;
    for (const signal& u : corpus) {
      if (rng() % 4 == 0) continue;  // drop some inputs: U_f subset of U_g
      const state_set su = enumerate_states(g, u, grid);
      std::vector<signal> keep;
      for (const signal& x : su)
        if (rng() % 2 == 0) keep.push_back(x);
      if (keep.empty()) keep.push_back(*su.begin());
      t.map.emplace_back(u, std::move(keep));
    }
    if (t.map.empty()) continue;
    const system_model f("f", std::move(t));
    const na_verdict v = check_lemma35(g, f, corpus, grid);
    CHECK(v.pass);
    CHECK_FALSE(v.vacuous);
  }

  // a non-subsystem is rejected
  const system_model k1("k1", const_state{chi_from(rat(-5)), 1});
  CHECK_THROWS_AS(check_lemma35(g, k1, corpus, grid), error);
}

TEST_CASE("fail witnesses replay as genuine violations") {
  // def51 on e54
  {
    const std::vector<signal> corpus = {chi_from(rat(0)), chi(rat(0), rat(2)),
                                        signal::constant(b0), signal::constant(b1)};
    const system_model f = make_e54(corpus);
    na_checker chk(f, corpus, time_grid({rat(0), rat(1), rat(2)}));
    const na_verdict v = chk.check(na_property::def51);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(chk.condition_instance_holds(na_property::def51, *v.witness->u, *v.witness->v,
                                             *v.witness->t));
  }
  // c_v on the value/restriction separation model
  {
    const signal falling(b1, {{rat(0), b0}});
    const system_model f(
        "r63", tabulated{{{signal::constant(b0), {signal::constant(b0), signal::constant(b1)}},
                          {chi_from(rat(2)), {falling, chi_from(rat(0))}}}});
    const std::vector<signal> corpus = {signal::constant(b0), chi_from(rat(2))};
    na_checker chk(f, corpus, time_grid({rat(0), rat(1), rat(2)}));
    const na_verdict v = chk.check(na_property::c_v);
    REQUIRE_FALSE(v.pass);
    REQUIRE(v.witness.has_value());
    CHECK_FALSE(chk.condition_instance_holds(na_property::c_v, *v.witness->u, *v.witness->v,
                                             *v.witness->t));
    // ... and the weaker value-set instance holds at the same point
    CHECK(chk.condition_instance_holds(na_property::c_vi, *v.witness->u, *v.witness->v,
                                       *v.witness->t));
  }
  // def31 witnesses carry the two first-switch times directly
  {
    auto corpus = exhaustive_corpus(1, {rat(2), rat(3)});
    const system_model f = make_e53(corpus);
    const na_verdict v = check_def31(f, corpus, time_grid({rat(0), rat(1), rat(2), rat(3), rat(4)}));
    REQUIRE_FALSE(v.pass);
    REQUIRE(v.witness.has_value());
    const signal& u = *v.witness->u;
    const signal& x = *v.witness->v;
    CHECK_FALSE(x.is_constant());
    if (!u.is_constant()) CHECK(u.first_switch() > x.first_switch());
  }
}

TEST_CASE("property names parse") {
  CHECK(parse_property("def31") == na_property::def31);
  CHECK(parse_property("ix") == na_property::c_ix);
  CHECK(parse_property("star1") == na_property::star_i);
  CHECK_FALSE(parse_property("x").has_value());
  CHECK_FALSE(parse_property("").has_value());
}

TEST_CASE("combinational systems pass def31 for any table and delay") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 1 + int(rng() % 2);
    std::vector<word> rows;
    for (std::size_t r = 0; r < (std::size_t(1) << m); ++r)
      rows.emplace_back(1, rng() % 2);
    const system_model f("c", ideal_combinational{truth_table(m, 1, rows), rat(rng() % 2)});
    std::vector<signal> corpus;
    std::vector<rat> grid_pts{rat(0), rat(1), rat(2)};
    for (int i = 0; i < 4; ++i)
      corpus.push_back(testhelp::random_signal(rng, m, 2));
    std::vector<rat> pts = grid_pts;
    for (const signal& u : corpus)
      for (const auto& s : u.switches())
        for (const rat& d : f.delay_parameters()) {
          pts.push_back(s.first);
          pts.push_back(s.first + d);
        }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    CHECK(check_def31(f, corpus, time_grid(pts)).pass);
  }
}

TEST_CASE("a zero-delay table reads the present: def51 fails, def31 still passes") {
  // identity table, d = 0: the state copies u(t) at t itself
  const truth_table ident(1, 1, {word(1, 0), word(1, 1)});
  const system_model f0("c0", ideal_combinational{ident, rat(0)});
  const std::vector<signal> corpus = {signal::constant(b0), chi_from(rat(0))};
  const time_grid grid({rat(0), rat(1)});
  CHECK(check_def31(f0, corpus, grid).pass);
  const na_verdict v = check_def51(f0, corpus, grid);
  CHECK_FALSE(v.pass);
  REQUIRE(v.witness.has_value());
  // pasts agree strictly before 0, values at 0 already differ
  CHECK(*v.witness->t <= rat(0));
  // with any positive delay the dependence is strictly past
  const system_model f1("c1", ideal_combinational{ident, rat(1)});
  CHECK(check_def51(f1, corpus, time_grid({rat(0), rat(1), rat(2)})).pass);
}
