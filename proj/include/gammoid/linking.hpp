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
#include <queue>
#include <string>
#include <vector>

#include "gammoid/digraph.hpp"
#include "gammoid/error.hpp"

namespace gammoid {

// A family of pairwise vertex-disjoint directed paths. A path may be a
// single vertex when it is both a source and a target.
struct Linking {
  std::vector<std::vector<std::string>> paths;

  std::size_t size() const { return paths.size(); }
};

namespace detail {

// Unit-vertex-capacity flow network: vertex v becomes in(v) = 2v and
// out(v) = 2v + 1 joined by a capacity-1 arc; graph arcs join out(u) to
// in(w) with capacity |V|. Augmentation is breadth-first with edges
// scanned in insertion order, which is ascending vertex index, so the
// extracted paths are reproducible.
class SplitFlow {
 public:
  SplitFlow(const Digraph& g, const std::vector<char>& is_source,
            const std::vector<char>& is_target)
      : n_(g.vertex_count()),
        source_(2 * n_),
        sink_(2 * n_ + 1),
        adjacency_(static_cast<std::size_t>(2 * n_ + 2)) {
    for (int v = 0; v < n_; ++v) {
      if (is_source[v]) add_edge(source_, 2 * v, 1);
    }
    for (int v = 0; v < n_; ++v) {
      add_edge(2 * v, 2 * v + 1, 1);
      for (int w : g.successors(v)) add_edge(2 * v + 1, 2 * w, n_);
      if (is_target[v]) add_edge(2 * v + 1, sink_, 1);
    }
  }

  int run() {
    int flow = 0;
    std::vector<int> via(adjacency_.size());
    while (true) {
      std::fill(via.begin(), via.end(), -1);
      std::queue<int> frontier;
      frontier.push(source_);
      via[source_] = -2;
      while (!frontier.empty() && via[sink_] == -1) {
        const int node = frontier.front();
        frontier.pop();
        for (int e : adjacency_[node]) {
          const Edge& edge = edges_[e];
          if (edge.cap > 0 && via[edge.to] == -1) {
            via[edge.to] = e;
            frontier.push(edge.to);
          }
        }
      }
      if (via[sink_] == -1) return flow;
      for (int node = sink_; node != source_;) {
        const int e = via[node];
        edges_[e].cap -= 1;
        edges_[e ^ 1].cap += 1;
        node = edges_[e ^ 1].to;
      }
      ++flow;
    }
  }

  // Vertex sequences of the flow paths, in ascending order of first vertex.
  std::vector<std::vector<int>> paths() const {
    std::vector<std::vector<int>> out;
    for (int e : adjacency_[source_]) {
      if (!carries_flow(e)) continue;
      std::vector<int> path;
      int node = edges_[e].to;  // in(v)
      while (true) {
        const int v = node / 2;
        path.push_back(v);
        const int out_node = 2 * v + 1;
        int next = -1;
        for (int f : adjacency_[out_node]) {
          if ((f & 1) == 0 && carries_flow(f)) {
            next = edges_[f].to;
            break;
          }
        }
        if (next == sink_) break;
        node = next;
      }
      out.push_back(std::move(path));
    }
    return out;
  }

 private:
  struct Edge {
    int to;
    int cap;
    int original;
  };

  void add_edge(int from, int to, int cap) {
    adjacency_[from].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({to, cap, cap});
    adjacency_[to].push_back(static_cast<int>(edges_.size()));
    edges_.push_back({from, 0, 0});
  }

  // Forward edges have even ids; flow is the consumed capacity.
  bool carries_flow(int e) const {
    return (e & 1) == 0 && edges_[e].cap < edges_[e].original;
  }

  int n_;
  int source_;
  int sink_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<Edge> edges_;
};

template <typename Range>
std::vector<char> vertex_flags(const Digraph& g, const Range& labels) {
  std::vector<char> flags(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& label : labels) flags[g.index_of(label)] = 1;
  return flags;
}

}  // namespace detail

// Size of a maximum linking from the flagged sources to the flagged targets.
inline int max_linking_size(const Digraph& g, const std::vector<char>& sources,
                            const std::vector<char>& targets) {
  return detail::SplitFlow(g, sources, targets).run();
}

// A maximum linking from X to T.
template <typename RangeX, typename RangeT>
Linking max_linking(const Digraph& g, const RangeX& x, const RangeT& t) {
  detail::SplitFlow flow(g, detail::vertex_flags(g, x),
                         detail::vertex_flags(g, t));
  flow.run();
  Linking out;
  for (const auto& path : flow.paths()) {
    std::vector<std::string> labels;
    for (int v : path) labels.push_back(g.label(v));
    out.paths.push_back(std::move(labels));
  }
  return out;
}

// True iff all of X can be linked to T.
template <typename RangeX, typename RangeT>
bool is_linked(const Digraph& g, const RangeX& x, const RangeT& t) {
  const auto sources = detail::vertex_flags(g, x);
  const auto count = std::count(sources.begin(), sources.end(), 1);
  return max_linking_size(g, sources, detail::vertex_flags(g, t)) == count;
}

// Checks that `linking` is a genuine linking from a subset of X into T in g.
template <typename RangeX, typename RangeT>
bool is_valid_linking(const Digraph& g, const Linking& linking,
                      const RangeX& x, const RangeT& t) {
  const auto in_x = detail::vertex_flags(g, x);
  const auto in_t = detail::vertex_flags(g, t);
  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const auto& path : linking.paths) {
    if (path.empty()) return false;
    for (std::size_t k = 0; k < path.size(); ++k) {
      auto v = g.find(path[k]);
      if (!v || used[*v]) return false;
      used[*v] = 1;
      if (k > 0 && !g.has_arc(path[k - 1], path[k])) return false;
    }
    if (!in_x[g.index_of(path.front())] || !in_t[g.index_of(path.back())]) {
      return false;
    }
  }
  return true;
}

inline constexpr int kBruteForceVertexLimit = 10;

// Maximum linking size by exhaustive search over families of vertex-disjoint
// simple paths. Shares nothing with the flow engine; used as a test oracle.
template <typename RangeX, typename RangeT>
int brute_force_linking_oracle(const Digraph& g, const RangeX& x,
                               const RangeT& t) {
  if (g.vertex_count() > kBruteForceVertexLimit) {
    throw Error(ErrorKind::kGraphTooLarge,
                std::to_string(g.vertex_count()) + " vertices (limit " +
                    std::to_string(kBruteForceVertexLimit) + ")");
  }
  const auto in_t = detail::vertex_flags(g, t);
  std::vector<int> starts;
  for (const auto& label : x) starts.push_back(g.index_of(label));
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<char> used(static_cast<std::size_t>(g.vertex_count()), 0);
  int best = 0;

  // Route source k onward, given the vertices already consumed.
  auto place = [&](auto&& self, std::size_t k, int linked) -> void {
    best = std::max(best, linked);
    if (k == starts.size()) return;
    if (linked + static_cast<int>(starts.size() - k) <= best) return;
    self(self, k + 1, linked);  // leave starts[k] unlinked
    const int s = starts[k];
    if (used[s]) return;
    // Depth-first over simple paths from s; each time the walk sits on a
    // target, the path may stop there.
    auto walk = [&](auto&& walk_self, int v) -> void {
      if (in_t[v]) self(self, k + 1, linked + 1);
      for (int w : g.successors(v)) {
        if (used[w]) continue;
        used[w] = 1;
        walk_self(walk_self, w);
        used[w] = 0;
      }
    };
    used[s] = 1;
    walk(walk, s);
    used[s] = 0;
  };
  place(place, 0, 0);
  return best;
}

}  // namespace gammoid
