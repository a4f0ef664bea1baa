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

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "gammoid/certificate.hpp"
#include "gammoid/error.hpp"
#include "gammoid/linkage.hpp"
#include "gammoid/matroid.hpp"

// Independent re-check of a certificate. Nothing here rebuilds the
// construction: every presentation is re-materialized and every recorded
// equality and rank count is recomputed from the certificate alone.
namespace gammoid {

namespace detail {

[[noreturn]] inline void reverify_failed(const std::string& where,
                                         const std::string& what) {
  throw Error(ErrorKind::kReverifyFailed, where + ": " + what);
}

// Runs `check`, turning any library error into a failure at `where`.
inline void at(const std::string& where, const std::function<void()>& check) {
  try {
    check();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kReverifyFailed) throw;
    reverify_failed(where, e.what());
  }
}

inline bool same_members(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

inline Matroid canonical_matroid(const MatroidRecord& record,
                                 const std::string& where) {
  Matroid m;
  at(where, [&] { m = materialize(record); });
  if (to_record(m) != record) {
    reverify_failed(where, "basis list is not the canonical basis family");
  }
  return m;
}

}  // namespace detail

inline void reverify(const Certificate& c) {
  using detail::at;
  using detail::reverify_failed;
  using detail::same_members;

  // Shape of the construction.
  const int r = c.r;
  if (r < 1 || static_cast<int>(c.s1.size()) != r ||
      static_cast<int>(c.s2.size()) != r || c.c.size() != 2 ||
      static_cast<int>(c.d.size()) != r + 1) {
    reverify_failed("construction", "set sizes do not match r = " + std::to_string(r));
  }
  const auto ground = detail::concat({c.s1, c.s2, {c.v1, c.v2}, c.c, c.d});
  const Matroid m = detail::canonical_matroid(c.m, "matroid");
  if (!same_members(m.ground(), ground) || m.size() != 3 * r + 5) {
    reverify_failed("matroid", "ground set is not S1∪S2∪{v1,v2}∪C∪D");
  }
  if (m.rank() != r + 3) reverify_failed("matroid", "rank is not r+3");

  // M is the relaxation of M' at C∪D.
  const Matroid m_prime =
      detail::canonical_matroid(c.m_prime, "construction.M_prime");
  at("construction.M_prime", [&] {
    const auto cd = detail::concat({c.c, c.d});
    if (!equals(relax(m_prime, m_prime.subset_of(cd)), m)) {
      reverify_failed("construction.M_prime",
                      "relaxing C∪D does not give the recorded M");
    }
  });

  // Ingleton violation.
  at("ingleton", [&] {
    const auto& w = c.ingleton;
    if (!same_members(w.a, detail::concat({c.s1, {c.v1}})) ||
        !same_members(w.b, detail::concat({c.s2, {c.v2}})) ||
        !same_members(w.c, c.c) || !same_members(w.d, c.d)) {
      reverify_failed("ingleton", "witness sets differ from A=S1∪v1, "
                                  "B=S2∪v2, C, D");
    }
    const auto result = ingleton_check(m, m.subset_of(w.a), m.subset_of(w.b),
                                       m.subset_of(w.c), m.subset_of(w.d));
    if (result.lhs != w.lhs || result.rhs != w.rhs ||
        result.holds == w.violated) {
      reverify_failed("ingleton", "recomputed " + std::to_string(result.lhs) +
                                      " vs " + std::to_string(result.rhs) +
                                      " differs from the record");
    }
    if (!w.violated || w.lhs != 5 * r + 11 || w.rhs != 5 * r + 10) {
      reverify_failed("ingleton", "inequality is not violated as 5r+11 > 5r+10");
    }
  });

  // One verified pair of presentations per element.
  if (c.minors.size() != ground.size()) {
    reverify_failed("minors", "expected one record per element of M");
  }
  std::vector<std::string> covered;
  for (std::size_t k = 0; k < c.minors.size(); ++k) {
    const auto& rec = c.minors[k];
    const std::string where =
        "minors[" + std::to_string(k) + "] (" + rec.element + ")";
    covered.push_back(rec.element);
    at(where, [&] {
      const Subset x = m.subset_of({rec.element});
      if (!rec.deletion_verified ||
          !equals(linkage_matroid(rec.deletion), delete_elements(m, x))) {
        reverify_failed(where + ".deletion", "presentation does not give M\\x");
      }
      if (!rec.contraction_verified ||
          !equals(linkage_matroid(rec.contraction), contract_elements(m, x))) {
        reverify_failed(where + ".contraction", "presentation does not give M/x");
      }
    });
  }
  if (!same_members(covered, ground)) {
    reverify_failed("minors", "records do not cover every element exactly once");
  }

  // The recipe reaches the input matroid.
  at("recipe", [&] {
    Matroid current = m;
    for (const auto& step : c.recipe) {
      const Subset x = current.subset_of(step.elements);
      if (x.size() != static_cast<int>(step.elements.size())) {
        reverify_failed("recipe", "repeated element in a step");
      }
      current = step.op == RecipeStep::Op::kDelete
                    ? delete_elements(current, x)
                    : contract_elements(current, x);
    }
    if (!equals(current, linkage_matroid(c.input))) {
      reverify_failed("recipe", "result is not the input matroid");
    }
  });

  // Claim verdicts.
  for (const auto& name : required_claims()) {
    const bool present = std::any_of(c.claims.begin(), c.claims.end(),
                                     [&](const auto& v) { return v.name == name; });
    if (!present) reverify_failed("claims", "missing claim '" + name + "'");
  }
  for (std::size_t k = 0; k < c.claims.size(); ++k) {
    if (!c.claims[k].ok) {
      reverify_failed("claims[" + std::to_string(k) + "]",
                      "claim '" + c.claims[k].name + "' is not established");
    }
  }
}

}  // namespace gammoid
