#pragma once

// Canonical JSON forms for the structures the CLI exchanges.  Field order is
// fixed and collections are sorted, so serialization is byte-stable.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "tiered/cnat.hpp"
#include "tiered/polynomial.hpp"
#include "tiered/trees.hpp"

namespace tiered {

using ordered_json = nlohmann::ordered_json;

// {"n": int, "tiers": [t_1..t_n], "edges": [[u,v]...]} with u < v, sorted.
inline ordered_json tree_to_json(const TieredTree& t) {
  ordered_json j;
  j["n"] = t.n;
  j["tiers"] = t.tiers;
  ordered_json edges = ordered_json::array();
  for (const auto& [u, v] : t.edges) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

inline TieredTree tree_from_json(const ordered_json& j) {
  TieredTree t;
  try {
    t.n = j.at("n").get<int>();
    t.tiers = j.at("tiers").get<std::vector<int>>();
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::domain_error("edge must be a pair");
      t.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("malformed tree JSON: ") + e.what());
  }
  t.normalize();
  require_valid(t);
  return t;
}

// {"k": int, "points": [[x,y]...]} sorted lexicographically.
inline ordered_json cnat_to_json(const Cnat& a) {
  ordered_json j;
  j["k"] = a.internal_count();
  ordered_json pts = ordered_json::array();
  for (const auto& [x, y] : a.points) pts.push_back({x, y});
  j["points"] = std::move(pts);
  return j;
}

inline Cnat cnat_from_json(const ordered_json& j) {
  Cnat a;
  try {
    for (const auto& p : j.at("points")) {
      if (!p.is_array() || p.size() != 2) throw std::domain_error("point must be a pair");
      a.points.emplace_back(p[0].get<int>(), p[1].get<int>());
    }
    a.normalize();
    if (j.contains("k") && j.at("k").get<int>() != a.internal_count())
      throw std::domain_error("stated k does not match the point count");
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("malformed CNAT JSON: ") + e.what());
  }
  if (auto why = validate_cnat(a))
    throw std::domain_error("invalid complete nonambiguous tree: " + *why);
  return a;
}

// {"var_order": ["x","q"], "terms": [[dx,dq,"coeff"]...]} sorted by (dx,dq).
inline ordered_json bivar_to_json(const BivarPoly& p) {
  ordered_json j;
  j["var_order"] = {"x", "q"};
  ordered_json terms = ordered_json::array();
  for (const auto& [key, c] : p.terms()) terms.push_back({key.first, key.second, c.str()});
  j["terms"] = std::move(terms);
  return j;
}

inline BivarPoly bivar_from_json(const ordered_json& j) {
  BivarPoly p;
  try {
    for (const auto& t : j.at("terms")) {
      if (!t.is_array() || t.size() != 3) throw std::domain_error("term must be a triple");
      p.add_term(t[0].get<int>(), t[1].get<int>(), Int(t[2].get<std::string>()));
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::domain_error(std::string("malformed polynomial JSON: ") + e.what());
  }
  return p;
}

}  // namespace tiered
