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
#include <string>
#include <unordered_set>
#include <vector>

#include "gammoid/digraph.hpp"
#include "gammoid/error.hpp"
#include "gammoid/linking.hpp"
#include "gammoid/matroid.hpp"

namespace gammoid {

// A gammoid presentation (G, S, T): the matroid on S whose independent sets
// are the subsets linked to T in G. The order of `ground` is the element
// order of the presented matroid.
struct Presentation {
  Digraph graph;
  std::vector<std::string> ground;   // S
  std::vector<std::string> targets;  // T

  bool operator==(const Presentation&) const = default;
};

// Throws kInvalidGraph unless S and T are duplicate-free vertex subsets.
inline void validate(const Presentation& p) {
  for (const auto* list : {&p.ground, &p.targets}) {
    std::unordered_set<std::string> seen;
    for (const auto& label : *list) {
      if (!p.graph.has_vertex(label)) {
        throw Error(ErrorKind::kInvalidGraph,
                    "'" + label + "' is not a vertex of the graph");
      }
      if (!seen.insert(label).second) {
        throw Error(ErrorKind::kInvalidGraph,
                    "'" + label + "' listed twice");
      }
    }
  }
}

inline bool contains_label(const std::vector<std::string>& list,
                           std::string_view label) {
  return std::find(list.begin(), list.end(), label) != list.end();
}

inline bool is_strict(const Presentation& p) {
  if (p.ground.size() != static_cast<std::size_t>(p.graph.vertex_count())) {
    return false;
  }
  return std::all_of(p.graph.vertices().begin(), p.graph.vertices().end(),
                     [&](const std::string& v) {
                       return contains_label(p.ground, v);
                     });
}

// Independence of a subset of the ground set (as a mask over p.ground).
class LinkageOracle {
 public:
  explicit LinkageOracle(const Presentation& p)
      : graph_(&p.graph),
        targets_(detail::vertex_flags(p.graph, p.targets)) {
    for (const auto& label : p.ground) {
      ground_vertex_.push_back(p.graph.index_of(label));
    }
  }

  bool independent(Subset x) const {
    std::vector<char> sources(targets_.size(), 0);
    for (int k : x.members()) sources[ground_vertex_[k]] = 1;
    return max_linking_size(*graph_, sources, targets_) == x.size();
  }

 private:
  const Digraph* graph_;
  std::vector<char> targets_;
  std::vector<int> ground_vertex_;
};

// L(G, S, T), materialized and axiom-checked.
inline Matroid linkage_matroid(const Presentation& p) {
  validate(p);
  if (p.ground.size() > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(ErrorKind::kGroundSetTooLarge,
                std::to_string(p.ground.size()) + " ground elements");
  }
  LinkageOracle oracle(p);
  return Matroid::from_independence_oracle(
      p.ground, [&](Subset x) { return oracle.independent(x); });
}

// Transversal matroid of the set system `sets` (each a list of element
// indices into `ground`): independent sets are the partial transversals.
// Matching is by simple augmenting paths, independent of the flow engine.
inline Matroid transversal_matroid(std::vector<std::string> ground,
                                   const std::vector<std::vector<int>>& sets) {
  const int n = static_cast<int>(ground.size());
  std::vector<std::vector<int>> meets(static_cast<std::size_t>(n));
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
    for (int e : sets[s]) meets[e].push_back(s);
  }
  auto matchable = [&](Subset x) {
    std::vector<int> owner(sets.size(), -1);
    for (int e : x.members()) {
      std::vector<char> seen(sets.size(), 0);
      auto augment = [&](auto&& self, int elem) -> bool {
        for (int s : meets[elem]) {
          if (seen[s]) continue;
          seen[s] = 1;
          if (owner[s] == -1 || self(self, owner[s])) {
            owner[s] = elem;
            return true;
          }
        }
        return false;
      };
      if (!augment(augment, e)) return false;
    }
    return true;
  };
  return Matroid::from_independence_oracle(std::move(ground), matchable);
}

// The transversal system whose transversal matroid is dual to the strict
// gammoid L(G, V, T): one set {v} ∪ N+(v) for each vertex v outside T.
inline std::vector<std::vector<int>> dual_transversal_system(
    const Presentation& p, const std::vector<std::string>& order) {
  std::vector<int> position(static_cast<std::size_t>(p.graph.vertex_count()));
  for (int k = 0; k < static_cast<int>(order.size()); ++k) {
    position[p.graph.index_of(order[k])] = k;
  }
  const auto in_t = detail::vertex_flags(p.graph, p.targets);
  std::vector<std::vector<int>> sets;
  for (int v = 0; v < p.graph.vertex_count(); ++v) {
    if (in_t[v]) continue;
    std::vector<int> set{position[v]};
    for (int w : p.graph.successors(v)) set.push_back(position[w]);
    sets.push_back(std::move(set));
  }
  return sets;
}

// Strict gammoids are exactly the duals of transversal matroids; checks the
// presented strict gammoid against the dual of its transversal counterpart.
inline bool transversal_duality_check(const Presentation& p) {
  validate(p);
  if (!is_strict(p)) {
    throw Error(ErrorKind::kNotStrict, "ground set is not the vertex set");
  }
  const Matroid transversal =
      transversal_matroid(p.ground, dual_transversal_system(p, p.ground));
  return equals(dual(transversal), linkage_matroid(p));
}

}  // namespace gammoid
