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
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gammoid/error.hpp"

namespace gammoid {

// A finite simple digraph on labeled vertices. Vertex order is the order of
// insertion and drives every deterministic choice made downstream.
class Digraph {
 public:
  using Arc = std::pair<std::string, std::string>;

  Digraph() = default;

  Digraph(std::vector<std::string> vertices, const std::vector<Arc>& arcs) {
    for (auto& v : vertices) add_vertex(std::move(v));
    for (const auto& [from, to] : arcs) add_arc(from, to);
  }

  int vertex_count() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& vertices() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }

  std::optional<int> find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool has_vertex(std::string_view label) const {
    return find(label).has_value();
  }
  int index_of(std::string_view label) const {
    if (auto v = find(label)) return *v;
    throw Error(ErrorKind::kInvalidGraph,
                "unknown vertex '" + std::string(label) + "'");
  }

  // Successors of v in ascending index order.
  const std::vector<int>& successors(int v) const { return out_[v]; }

  int add_vertex(std::string label) {
    if (has_vertex(label)) {
      throw Error(ErrorKind::kLabelCollision,
                  "vertex '" + label + "' already exists");
    }
    const int v = vertex_count();
    index_.emplace(label, v);
    labels_.push_back(std::move(label));
    out_.emplace_back();
    return v;
  }

  bool has_arc(std::string_view from, std::string_view to) const {
    auto u = find(from), v = find(to);
    return u && v && std::binary_search(out_[*u].begin(), out_[*u].end(), *v);
  }

  void add_arc(std::string_view from, std::string_view to) {
    const int u = index_of(from), v = index_of(to);
    if (u == v) {
      throw Error(ErrorKind::kInvalidGraph,
                  "self-loop at '" + std::string(from) + "'");
    }
    auto& succ = out_[u];
    auto it = std::lower_bound(succ.begin(), succ.end(), v);
    if (it != succ.end() && *it == v) {
      throw Error(ErrorKind::kInvalidGraph, "duplicate arc " +
                                                std::string(from) + "->" +
                                                std::string(to));
    }
    succ.insert(it, v);
  }

  void remove_arc(std::string_view from, std::string_view to) {
    const int u = index_of(from), v = index_of(to);
    auto& succ = out_[u];
    auto it = std::lower_bound(succ.begin(), succ.end(), v);
    if (it == succ.end() || *it != v) {
      throw Error(ErrorKind::kInvalidGraph, "no arc " + std::string(from) +
                                                "->" + std::string(to));
    }
    succ.erase(it);
  }

  // Removes the vertex and every incident arc; later vertices shift down.
  void remove_vertex(std::string_view label) {
    const int gone = index_of(label);
    std::vector<std::string> labels;
    std::vector<std::vector<int>> out;
    for (int v = 0; v < vertex_count(); ++v) {
      if (v == gone) continue;
      labels.push_back(labels_[v]);
      std::vector<int> succ;
      for (int w : out_[v]) {
        if (w != gone) succ.push_back(w > gone ? w - 1 : w);
      }
      out.push_back(std::move(succ));
    }
    labels_ = std::move(labels);
    out_ = std::move(out);
    reindex();
  }

  void rename_vertex(std::string_view from, std::string to) {
    const int v = index_of(from);
    if (has_vertex(to)) {
      throw Error(ErrorKind::kLabelCollision,
                  "vertex '" + to + "' already exists");
    }
    index_.erase(labels_[v]);
    index_.emplace(to, v);
    labels_[v] = std::move(to);
  }

  // Arcs ordered by (tail index, head index).
  std::vector<Arc> arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < vertex_count(); ++u) {
      for (int v : out_[u]) out.emplace_back(labels_[u], labels_[v]);
    }
    return out;
  }

  std::size_t arc_count() const {
    std::size_t n = 0;
    for (const auto& succ : out_) n += succ.size();
    return n;
  }

  bool operator==(const Digraph& other) const {
    return labels_ == other.labels_ && out_ == other.out_;
  }

 private:
  void reindex() {
    index_.clear();
    for (int v = 0; v < vertex_count(); ++v) index_.emplace(labels_[v], v);
  }

  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> out_;
};

}  // namespace gammoid
