#pragma once

#include <string>

#include <json.hpp>

#include "hollow/catalog.hpp"
#include "hollow/graph6.hpp"
#include "hollow/search.hpp"

namespace hollow {

using Json = nlohmann::ordered_json;

inline Json to_json(const HollowMatrix& m) {
  return Json{{"n", m.order()},
              {"pattern", graph6_encode(m.pattern())},
              {"entries", m.entries()}};
}

inline HollowMatrix matrix_from_json(const Json& j) {
  Graph pattern = graph6_decode(j.at("pattern").get<std::string>());
  if (j.at("n").get<int>() != pattern.order())
    throw ParseError("matrix order disagrees with its pattern", 0);
  auto entries = j.at("entries").get<std::vector<double>>();
  return HollowMatrix::from_dense(pattern, entries);
}

inline Json to_json(const Spectrum& s) {
  Json values = Json::array();
  for (auto& [v, m] : s.values) values.push_back(Json::array({v, m}));
  return Json{{"values", values}, {"tol", s.tol}};
}

inline Json to_json(const OrderedMultiplicityList& l) {
  return Json(l.m);
}

inline Json to_json(const RealizationResult& r) {
  return Json{{"matrix", to_json(r.matrix)},
              {"achieved", to_json(r.achieved)},
              {"residual", r.residual},
              {"seed", r.seed}};
}

inline Json to_json(const ObstructionCertificate& c) {
  Json facts = Json::array();
  for (auto& [name, value] : c.facts)
    facts.push_back(Json::array({name, value}));
  return Json{{"graph", c.graph6},
              {"target", c.target},
              {"rule", c.rule},
              {"facts", facts},
              {"verdict", "refuted"}};
}

inline Json to_json(const SearchOutcome& o) {
  Json certs = Json::array();
  for (auto& c : o.bound_certificates) certs.push_back(to_json(c));
  Json j{{"status", to_string(o.status)},
         {"bound_certificates", certs},
         {"evals", o.evals},
         {"restarts_used", o.restarts_used}};
  j["best"] = o.best ? to_json(*o.best) : Json(nullptr);
  return j;
}

inline Json to_json(const CatalogBracket& b) {
  Json j = Json::object();
  if (b.lo) j["lo"] = *b.lo;
  if (b.hi) j["hi"] = *b.hi;
  return j;
}

inline Json to_json(const CatalogEntry& e) {
  Json values = Json::object();
  for (auto& [field, bracket] : e.values) values[field] = to_json(bracket);
  Json omls = Json::array();
  for (auto& l : e.oml_set) omls.push_back(to_json(l));
  Json j{{"name", e.name},
         {"match", e.match_key},
         {"params", e.params},
         {"values", values},
         {"anchors", e.anchors}};
  if (!e.oml_set.empty()) {
    j["oml_set"] = omls;
    j["oml_set_exact"] = e.oml_set_exact;
  }
  if (!e.spectra_law.empty()) j["spectra_law"] = e.spectra_law;
  if (!e.notes.empty()) j["notes"] = e.notes;
  return j;
}

inline Json to_json(const ParameterEstimate& p) {
  Json j{{"lo", p.lo}, {"hi", p.hi}};
  if (p.witness) {
    j["witness"] = to_json(*p.witness);
    j["witness_from"] = p.witness_what;
  }
  return j;
}

inline Json to_json(const ExtremalEstimates& e) {
  Json facts = Json::array();
  for (auto& [name, value] : e.facts)
    facts.push_back(Json::array({name, value}));
  return Json{{"q0", to_json(e.q0)},
              {"M0", to_json(e.M0)},
              {"MM0", to_json(e.MM0)},
              {"facts", facts}};
}

}  // namespace hollow
