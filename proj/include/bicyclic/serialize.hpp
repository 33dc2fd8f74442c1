#pragma once

// JSON forms shared by the reports and the CLI. Elements are [i, j] pairs,
// the zero is the string "0".

#include <json.hpp>

#include "bicyclic/continuity.hpp"
#include "bicyclic/element.hpp"
#include "bicyclic/topology.hpp"

namespace bicyclic {

inline void to_json(nlohmann::json& j, BicyclicElem const& x) {
  j = nlohmann::json::array({x.i, x.j});
}

inline void to_json(nlohmann::json& j, ExtElem const& x) {
  if (x.is_zero()) {
    j = "0";
  } else {
    to_json(j, x.elem());
  }
}

inline void to_json(nlohmann::json& j, BasicNbhd const& b) {
  j = {{"family", family_tag_name(b.family.tag())},
       {"carrier", carrier_name(b.family.carrier())},
       {"center", b.center},
       {"n", b.n}};
  if (auto p = b.family.prime()) {
    j["p"] = *p;
  }
}

inline void to_json(nlohmann::json& j, ShiftSpec const& s) {
  j = {{"side", side_name(s.side)},
       {"s", s.s},
       {"family", s.family.name()},
       {"point", s.point}};
}

inline nlohmann::json table_json(std::vector<WitnessEntry> const& table) {
  auto out = nlohmann::json::array();
  for (auto const& e : table) {
    out.push_back({e.n, e.m});
  }
  return out;
}

inline void to_json(nlohmann::json& j, ContinuityVerdict const& v) {
  j = {{"kind", verdict_kind(v)}};
  if (auto const* ce = std::get_if<ContinuousExact>(&v)) {
    j["rule"] = ce->rule;
    j["table"] = table_json(ce->table);
  } else if (auto const* cb = std::get_if<ContinuousUpToBound>(&v)) {
    j["bound"] = cb->bound;
    j["table"] = table_json(cb->table);
  } else if (auto const* d = std::get_if<Discontinuous>(&v)) {
    j["offending"] = d->offending;
    j["rule"] = d->rule;
    j["bound"] = d->bound;
    auto esc = nlohmann::json::array();
    for (auto const& e : d->escapes) {
      esc.push_back({{"m", e.m}, {"u", e.u}, {"image", e.image}});
    }
    j["escapes"] = esc;
  } else if (auto const* inc = std::get_if<Inconclusive>(&v)) {
    j["n"] = inc->n;
    j["reason"] = inc->reason;
  }
}

inline void to_json(nlohmann::json& j, SeparationVerdict const& v) {
  if (auto const* s = std::get_if<SeparatedBy>(&v)) {
    j = {{"kind", "SeparatedBy"}, {"at_x", s->at_x}, {"at_y", s->at_y}};
  } else {
    auto const& ns = std::get<NotSeparatedWithinBound>(v);
    j = {{"kind", "NotSeparatedWithinBound"},
         {"bound", ns.bound},
         {"reason", ns.reason}};
  }
}

inline void to_json(nlohmann::json& j, CompactnessVerdict const& v) {
  if (auto const* c = std::get_if<CompactByCofinite>(&v)) {
    j = {{"kind", "CompactByCofinite"},
         {"anchor", c->anchor},
         {"complement", c->complement_formula},
         {"inspected", c->inspected}};
  } else {
    j = {{"kind", "NoCertificate"},
         {"reason", std::get<NoCertificate>(v).reason}};
  }
}

inline void to_json(nlohmann::json& j, CofinitenessVerdict const& v) {
  if (auto const* c = std::get_if<Cofinite>(&v)) {
    j = {{"kind", "Cofinite"}, {"complement", c->complement}};
  } else {
    auto const& nc = std::get<NotCofinite>(v);
    j = {{"kind", "NotCofinite"}, {"reason", nc.reason}, {"missed", nc.missed}};
  }
}

}  // namespace bicyclic
