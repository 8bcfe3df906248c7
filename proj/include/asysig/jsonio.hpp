#pragma once

#include <json.hpp>

#include "asysig/constructions.hpp"
#include "asysig/na.hpp"

namespace asysig {

using json = nlohmann::json;

// --- verdicts ------------------------------------------------------------------

inline json to_json(const na_witness& w) {
  json j;
  if (w.t) j["t"] = w.t->str();
  if (w.d) j["d"] = w.d->str();
  if (w.d_prime) j["dPrime"] = w.d_prime->str();
  if (w.u) j["u"] = print_signal(*w.u);
  if (w.v) j["v"] = print_signal(*w.v);
  j["lhsSet"] = w.lhs_set;
  j["rhsSet"] = w.rhs_set;
  return j;
}

inline json to_json(const na_verdict& v) {
  json j;
  j["property"] = property_tag(v.property);
  j["outcome"] = v.pass ? "PassCorpusRelative" : "Fail";
  if (v.vacuous) j["vacuous"] = true;
  if (v.witness) j["witness"] = to_json(*v.witness);
  j["carriers"] = {{"corpusHash", v.carrier.corpus_hash},
                   {"grid", v.carrier.grid},
                   {"bounds", v.carrier.bounds}};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline std::string verdict_text(const na_verdict& v) {
  std::string s = std::string(property_tag(v.property)) + ": " +
                  (v.pass ? "PassCorpusRelative" : "Fail");
  if (v.vacuous) s += " (vacuous)";
  if (!v.note.empty()) s += " [" + v.note + "]";
  if (v.witness) {
    s += "\n  witness:";
    if (v.witness->t) s += " t=" + v.witness->t->str();
    if (v.witness->d) s += " d=" + v.witness->d->str();
    if (v.witness->d_prime) s += " d'=" + v.witness->d_prime->str();
    if (v.witness->u) s += "\n    u: " + print_signal(*v.witness->u);
    if (v.witness->v) s += "\n    v: " + print_signal(*v.witness->v);
    s += "\n    lhs:";
    for (const auto& e : v.witness->lhs_set) s += " {" + e + "}";
    s += "\n    rhs:";
    for (const auto& e : v.witness->rhs_set) s += " {" + e + "}";
  }
  return s;
}

// --- transfer specs and reports --------------------------------------------------

inline transfer_spec transfer_spec_from_json(const json& j) {
  return transfer_spec{parse_rat(j.at("t1").get<std::string>()),
                       parse_rat(j.at("t2").get<std::string>()),
                       parse_signal(j.at("u0").get<std::string>()),
                       parse_signal(j.at("u1").get<std::string>()),
                       parse_word(j.at("mu").get<std::string>()),
                       parse_word(j.at("muPrime").get<std::string>()),
                       parse_word(j.at("muDoublePrime").get<std::string>())};
}

inline json to_json(const std::vector<state_access>& accesses) {
  json arr = json::array();
  for (const auto& a : accesses)
    arr.push_back({{"state", print_signal(a.state)}, {"t", a.time.str()}});
  return arr;
}

inline json to_json(const transfer_report& r) {
  json j;
  j["d"] = r.d.str();
  j["uTilde"] = print_signal(r.u_tilde);
  j["eq3"] = to_json(r.eq3);
  j["eq6"] = to_json(r.eq6);
  j["conclusions8"] = to_json(r.concl8);
  j["conclusions9"] = to_json(r.concl9);
  j["tna5"] = r.tna5;
  j["tna11"] = r.tna11;
  j["bSpot"] = r.b_spot;
  j["cSpot"] = r.c_spot;
  j["dSpot"] = r.d_spot;
  return j;
}

// --- fundamental-mode specs and reports -------------------------------------------

inline fm_spec fm_spec_from_json(const json& j) {
  fm_spec spec{parse_signal(j.at("u").get<std::string>()), {}, {}, {}};
  for (const auto& t : j.at("times")) spec.times.push_back(parse_rat(t.get<std::string>()));
  for (const auto& u : j.at("inputs")) spec.inputs.push_back(parse_signal(u.get<std::string>()));
  for (const auto& s : j.at("states")) spec.states.push_back(parse_word(s.get<std::string>()));
  spec.validate();
  return spec;
}

inline json to_json(const fm_spec& spec) {
  json j;
  j["u"] = print_signal(spec.u);
  j["times"] = json::array();
  for (const rat& t : spec.times) j["times"].push_back(t.str());
  j["inputs"] = json::array();
  for (const signal& u : spec.inputs) j["inputs"].push_back(print_signal(u));
  j["states"] = json::array();
  for (const word& w : spec.states) j["states"].push_back(w.str());
  return j;
}

inline json to_json(const fm_report& r) {
  json j;
  j["allPass"] = r.all_pass;
  j["clauses"] = json::array();
  for (const auto& c : r.clauses) {
    json cj = {{"name", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    j["clauses"].push_back(cj);
  }
  return j;
}

inline json trace_to_json(const std::vector<std::pair<word, std::string>>& trace) {
  json arr = json::array();
  for (const auto& [state, label] : trace) {
    json e = {{"state", state.str()}};
    if (!label.empty()) e["input"] = label;
    arr.push_back(e);
  }
  return arr;
}

}  // namespace asysig
