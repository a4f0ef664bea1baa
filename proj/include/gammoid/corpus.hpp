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

#include <random>
#include <string>
#include <vector>

#include "gammoid/linkage.hpp"

// Built-in instances used by the demos, the acceptance suite and the tests.
namespace gammoid::corpus {

// U_{2,4} = L(G, {a,b,c,d}, {a,b}) with c and d pointing at both targets.
inline Presentation u24() {
  return {Digraph({"a", "b", "c", "d"},
                  {{"c", "a"}, {"c", "b"}, {"d", "a"}, {"d", "b"}}),
          {"a", "b", "c", "d"},
          {"a", "b"}};
}

// A rank-3 strict gammoid on six elements whose ground set splits into the
// bases {a,b,c} and {d,e,f}; {a,b,d}, {b,c,e} and {a,c,f} are circuits.
inline Presentation rank3_gammoid() {
  return {Digraph({"a", "b", "c", "d", "e", "f"},
                  {{"d", "a"}, {"d", "b"}, {"e", "b"}, {"e", "c"},
                   {"f", "a"}, {"f", "c"}}),
          {"a", "b", "c", "d", "e", "f"},
          {"a", "b", "c"}};
}

// Random presentation on `vertices` labeled vertices v0, v1, ...: each arc
// is present with probability `arc_density`, S and T are random subsets
// (S is the whole vertex set when `strict`).
inline Presentation random_presentation(std::mt19937& rng, int vertices,
                                        double arc_density, bool strict) {
  std::bernoulli_distribution arc(arc_density), coin(0.5);
  std::vector<std::string> labels;
  for (int v = 0; v < vertices; ++v) labels.push_back("v" + std::to_string(v));
  std::vector<Digraph::Arc> arcs;
  for (int u = 0; u < vertices; ++u) {
    for (int v = 0; v < vertices; ++v) {
      if (u != v && arc(rng)) arcs.emplace_back(labels[u], labels[v]);
    }
  }
  Presentation p{Digraph(labels, arcs), {}, {}};
  for (const auto& v : labels) {
    if (strict || coin(rng)) p.ground.push_back(v);
    if (coin(rng)) p.targets.push_back(v);
  }
  return p;
}

}  // namespace gammoid::corpus
