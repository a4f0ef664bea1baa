// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "gammoid/certificate.hpp"
#include "gammoid/error.hpp"
#include "gammoid/linkage.hpp"
#include "json.hpp"

// JSON forms of presentations and certificates. Parsing is strict: every
// object must carry exactly the documented keys, and any structural problem
// surfaces as ErrorKind::kParseError.
namespace gammoid {

using Json = nlohmann::json;

inline constexpr std::string_view kCertificateFormat =
    "gammoid-excluded-minor-certificate/1";

namespace detail {

[[noreturn]] inline void parse_error(const std::string& where,
                                     const std::string& what) {
  throw Error(ErrorKind::kParseError, where + ": " + what);
}

inline void expect_keys(const Json& j, std::initializer_list<const char*> keys,
                        const std::string& where) {
  if (!j.is_object()) parse_error(where, "expected an object");
  for (const char* key : keys) {
    if (!j.contains(key)) parse_error(where, std::string("missing key '") + key + "'");
  }
  if (j.size() != keys.size()) parse_error(where, "unexpected extra keys");
}

template <typename T>
T get_as(const Json& j, const std::string& where) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    parse_error(where, e.what());
  }
}

inline std::vector<std::string> strings(const Json& j, const std::string& where) {
  return get_as<std::vector<std::string>>(j, where);
}

}  // namespace detail

inline Json to_json(const Presentation& p) {
  Json arcs = Json::array();
  for (const auto& [from, to] : p.graph.arcs()) arcs.push_back({from, to});
  return {{"vertices", p.graph.vertices()},
          {"arcs", arcs},
          {"ground", p.ground},
          {"targets", p.targets}};
}

inline Presentation presentation_from_json(const Json& j,
                                           const std::string& where = "presentation") {
  detail::expect_keys(j, {"vertices", "arcs", "ground", "targets"}, where);
  Presentation p;
  try {
    std::vector<Digraph::Arc> arcs;
    for (const auto& arc : detail::get_as<std::vector<std::vector<std::string>>>(
             j.at("arcs"), where + ".arcs")) {
      if (arc.size() != 2) detail::parse_error(where + ".arcs", "arc is not a pair");
      arcs.emplace_back(arc[0], arc[1]);
    }
    p.graph = Digraph(detail::strings(j.at("vertices"), where + ".vertices"), arcs);
    p.ground = detail::strings(j.at("ground"), where + ".ground");
    p.targets = detail::strings(j.at("targets"), where + ".targets");
    validate(p);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    detail::parse_error(where, e.what());
  }
  return p;
}

// An input document: a presentation with a nonempty ground set.
inline Presentation parse_input_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    detail::parse_error("input", e.what());
  }
  Presentation p = presentation_from_json(j, "input");
  if (p.ground.empty()) detail::parse_error("input", "ground set is empty");
  return p;
}

inline Json to_json(const MatroidRecord& m) {
  return {{"ground", m.ground}, {"bases", m.bases}};
}

inline MatroidRecord matroid_record_from_json(const Json& j,
                                              const std::string& where) {
  detail::expect_keys(j, {"ground", "bases"}, where);
  return {detail::strings(j.at("ground"), where + ".ground"),
          detail::get_as<std::vector<std::vector<std::string>>>(
              j.at("bases"), where + ".bases")};
}

inline Json to_json(const RecipeStep& step) {
  return {{"op", step.op == RecipeStep::Op::kDelete ? "delete" : "contract"},
          {"elements", step.elements}};
}

inline Json to_json(const Certificate& c) {
  Json claims = Json::array();
  for (const auto& claim : c.claims) {
    claims.push_back(
        {{"name", claim.name}, {"ok", claim.ok}, {"detail", claim.detail}});
  }
  Json minors = Json::array();
  for (const auto& rec : c.minors) {
    minors.push_back({{"element", rec.element},
                      {"deletion",
                       {{"route", rec.deletion_route},
                        {"presentation", to_json(rec.deletion)},
                        {"verified", rec.deletion_verified}}},
                      {"contraction",
                       {{"route", rec.contraction_route},
                        {"presentation", to_json(rec.contraction)},
                        {"verified", rec.contraction_verified}}}});
  }
  Json recipe = Json::array();
  for (const auto& step : c.recipe) recipe.push_back(to_json(step));
  return {
      {"format", kCertificateFormat},
      {"input", to_json(c.input)},
      {"construction",
       {{"r", c.r},
        {"S1", c.s1},
        {"S2", c.s2},
        {"C", c.c},
        {"D", c.d},
        {"v1", c.v1},
        {"v2", c.v2},
        {"M_prime", to_json(c.m_prime)}}},
      {"matroid", to_json(c.m)},
      {"claims", claims},
      {"ingleton",
       {{"A", c.ingleton.a},
        {"B", c.ingleton.b},
        {"C", c.ingleton.c},
        {"D", c.ingleton.d},
        {"lhs", c.ingleton.lhs},
        {"rhs", c.ingleton.rhs},
        {"violated", c.ingleton.violated}}},
      {"minors", minors},
      {"recipe", recipe},
      {"notes", c.notes},
  };
}

inline Certificate certificate_from_json(const Json& j) {
  using detail::get_as;
  using detail::strings;
  detail::expect_keys(j, {"format", "input", "construction", "matroid", "claims",
                          "ingleton", "minors", "recipe", "notes"},
                      "certificate");
  if (get_as<std::string>(j.at("format"), "format") != kCertificateFormat) {
    detail::parse_error("format", "unsupported certificate format");
  }
  Certificate c;
  c.input = presentation_from_json(j.at("input"), "input");

  const Json& k = j.at("construction");
  detail::expect_keys(k, {"r", "S1", "S2", "C", "D", "v1", "v2", "M_prime"},
                      "construction");
  c.r = get_as<int>(k.at("r"), "construction.r");
  c.s1 = strings(k.at("S1"), "construction.S1");
  c.s2 = strings(k.at("S2"), "construction.S2");
  c.c = strings(k.at("C"), "construction.C");
  c.d = strings(k.at("D"), "construction.D");
  c.v1 = get_as<std::string>(k.at("v1"), "construction.v1");
  c.v2 = get_as<std::string>(k.at("v2"), "construction.v2");
  c.m_prime = matroid_record_from_json(k.at("M_prime"), "construction.M_prime");
  c.m = matroid_record_from_json(j.at("matroid"), "matroid");

  const Json& claims = j.at("claims");
  if (!claims.is_array()) detail::parse_error("claims", "expected an array");
  for (std::size_t n = 0; n < claims.size(); ++n) {
    const std::string where = "claims[" + std::to_string(n) + "]";
    detail::expect_keys(claims[n], {"name", "ok", "detail"}, where);
    c.claims.push_back({get_as<std::string>(claims[n].at("name"), where),
                        get_as<bool>(claims[n].at("ok"), where),
                        get_as<std::string>(claims[n].at("detail"), where)});
  }

  const Json& ing = j.at("ingleton");
  detail::expect_keys(ing, {"A", "B", "C", "D", "lhs", "rhs", "violated"},
                      "ingleton");
  c.ingleton = {strings(ing.at("A"), "ingleton.A"),
                strings(ing.at("B"), "ingleton.B"),
                strings(ing.at("C"), "ingleton.C"),
                strings(ing.at("D"), "ingleton.D"),
                get_as<int>(ing.at("lhs"), "ingleton.lhs"),
                get_as<int>(ing.at("rhs"), "ingleton.rhs"),
                get_as<bool>(ing.at("violated"), "ingleton.violated")};

  const Json& minors = j.at("minors");
  if (!minors.is_array()) detail::parse_error("minors", "expected an array");
  for (std::size_t n = 0; n < minors.size(); ++n) {
    const std::string where = "minors[" + std::to_string(n) + "]";
    detail::expect_keys(minors[n], {"element", "deletion", "contraction"}, where);
    MinorCertificate rec;
    rec.element = get_as<std::string>(minors[n].at("element"), where + ".element");
    for (const char* side : {"deletion", "contraction"}) {
      const std::string at = where + "." + side;
      const Json& s = minors[n].at(side);
      detail::expect_keys(s, {"route", "presentation", "verified"}, at);
      auto route = get_as<std::string>(s.at("route"), at + ".route");
      auto pres = presentation_from_json(s.at("presentation"), at + ".presentation");
      const bool verified = get_as<bool>(s.at("verified"), at + ".verified");
      if (std::string(side) == "deletion") {
        rec.deletion_route = std::move(route);
        rec.deletion = std::move(pres);
        rec.deletion_verified = verified;
      } else {
        rec.contraction_route = std::move(route);
        rec.contraction = std::move(pres);
        rec.contraction_verified = verified;
      }
    }
    c.minors.push_back(std::move(rec));
  }

  const Json& recipe = j.at("recipe");
  if (!recipe.is_array()) detail::parse_error("recipe", "expected an array");
  for (std::size_t n = 0; n < recipe.size(); ++n) {
    const std::string where = "recipe[" + std::to_string(n) + "]";
    detail::expect_keys(recipe[n], {"op", "elements"}, where);
    const auto op = get_as<std::string>(recipe[n].at("op"), where + ".op");
    if (op != "delete" && op != "contract") {
      detail::parse_error(where + ".op", "unknown operation '" + op + "'");
    }
    c.recipe.push_back({op == "delete" ? RecipeStep::Op::kDelete
                                       : RecipeStep::Op::kContract,
                        strings(recipe[n].at("elements"), where + ".elements")});
  }
  c.notes = strings(j.at("notes"), "notes");
  return c;
}

inline std::string serialize(const Certificate& c) {
  return to_json(c).dump(2) + "\n";
}

inline Certificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::exception& e) {
    detail::parse_error("certificate", e.what());
  }
  return certificate_from_json(j);
}

}  // namespace gammoid
