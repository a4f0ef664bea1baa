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
#include <vector>

#include "gammoid/error.hpp"
#include "gammoid/linkage.hpp"
#include "gammoid/linking.hpp"
#include "gammoid/matroid.hpp"

// Surgeries on gammoid presentations. Each one states the
// matroid identity it realizes and checks it on the full rank table before
// returning; a mismatch is an engine bug and is reported, never ignored.
namespace gammoid {

namespace detail {

inline void require_same(const Matroid& got, const Matroid& want,
                         ErrorKind kind, const std::string& what) {
  if (!equals(got, want)) {
    throw Error(kind, what + ": presented matroid differs from the expected minor");
  }
}

inline std::vector<std::string> without(std::vector<std::string> list,
                                        std::string_view label) {
  list.erase(std::remove(list.begin(), list.end(), label), list.end());
  return list;
}

inline bool same_set(std::vector<std::string> a, std::vector<std::string> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

// Greedy basis in ground order, starting from `seed`.
inline Subset greedy_basis(const Matroid& m, Subset seed = Subset()) {
  Subset basis = seed;
  for (int e = 0; e < m.size(); ++e) {
    if (!basis.contains(e) && m.is_independent(basis.with(e))) {
      basis = basis.with(e);
    }
  }
  return basis;
}

}  // namespace detail

// N/t = L(G - t, S - t, T - t) for t in S ∩ T.
inline Presentation contract_target(const Presentation& p,
                                    std::string_view t) {
  validate(p);
  if (!contains_label(p.ground, t) || !contains_label(p.targets, t)) {
    throw Error(ErrorKind::kNotInSAndT,
                "'" + std::string(t) + "' is not in both S and T");
  }
  Presentation out{p.graph, detail::without(p.ground, t),
                   detail::without(p.targets, t)};
  out.graph.remove_vertex(t);
  const Matroid before = linkage_matroid(p);
  detail::require_same(linkage_matroid(out),
                       contract_elements(before, before.subset_of({t})),
                       ErrorKind::kVerificationFailed, "contract_target");
  return out;
}

// N\x = L(G, S - x, T).
inline Presentation delete_element(const Presentation& p,
                                   std::string_view x) {
  validate(p);
  if (!contains_label(p.ground, x)) {
    throw Error(ErrorKind::kNotInGround,
                "'" + std::string(x) + "' is not a ground element");
  }
  Presentation out{p.graph, detail::without(p.ground, x), p.targets};
  const Matroid before = linkage_matroid(p);
  detail::require_same(linkage_matroid(out),
                       delete_elements(before, before.subset_of({x})),
                       ErrorKind::kVerificationFailed, "delete_element");
  return out;
}

// Re-presents L(G,S,T) with the basis B as its target set.
//
// The basis is extended greedily (vertex order) to a basis B' of the strict
// gammoid L(G,V,T) and a maximum linking from B' to T is computed. The
// strict gammoid is the dual of the transversal matroid of the sets
// A_v = {v} ∪ N+(v), v outside T. Along each linking path v_0 -> ... -> v_k
// the set A_{v_i} is handed to v_{i+1}, giving a matching of those sets
// onto V - B'; the new graph has an arc from each set's owner to the rest of
// its set, which presents the same strict gammoid with targets B'. Finally
// the vertices of B' - B, which lie outside S, are contracted away by
// deleting them.
inline Presentation retarget(const Presentation& p,
                             const std::vector<std::string>& basis) {
  validate(p);
  const Matroid n = linkage_matroid(p);
  for (const auto& b : basis) {
    if (!contains_label(p.ground, b)) {
      throw Error(ErrorKind::kNotABasis,
                  "'" + b + "' is not a ground element");
    }
  }
  if (!n.is_basis(n.subset_of(basis))) {
    throw Error(ErrorKind::kNotABasis, describe(n, n.subset_of(basis)));
  }
  if (detail::same_set(basis, p.targets)) return p;

  const Digraph& g = p.graph;
  std::vector<std::string> extended = basis;
  const auto strict_rank = static_cast<std::size_t>(max_linking_size(
      g, std::vector<char>(static_cast<std::size_t>(g.vertex_count()), 1),
      detail::vertex_flags(g, p.targets)));
  for (const auto& v : g.vertices()) {
    if (extended.size() == strict_rank) break;
    if (contains_label(extended, v)) continue;
    extended.push_back(v);
    if (!is_linked(g, extended, p.targets)) extended.pop_back();
  }
  const Linking linking = max_linking(g, extended, p.targets);
  if (linking.size() != strict_rank || extended.size() != strict_rank) {
    throw Error(ErrorKind::kRetargetFailed,
                "could not extend the basis to the strict lift");
  }

  std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 0; v < g.vertex_count(); ++v) owner[v] = v;
  for (const auto& path : linking.paths) {
    for (std::size_t k = 1; k < path.size(); ++k) {
      owner[g.index_of(path[k - 1])] = g.index_of(path[k]);
    }
  }
  const auto in_t = detail::vertex_flags(g, p.targets);
  Presentation out{Digraph(g.vertices(), {}), p.ground, basis};
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (in_t[v]) continue;
    const std::string& holder = g.label(owner[v]);
    auto hand_over = [&](int w) {
      if (w != owner[v] && !out.graph.has_arc(holder, g.label(w))) {
        out.graph.add_arc(holder, g.label(w));
      }
    };
    hand_over(v);
    for (int w : g.successors(v)) hand_over(w);
  }
  for (const auto& z : extended) {
    if (!contains_label(basis, z)) out.graph.remove_vertex(z);
  }
  detail::require_same(linkage_matroid(out), n, ErrorKind::kRetargetFailed,
                       "retarget");
  return out;
}

// Re-presents with a greedy basis (ground order) as targets, unless the
// current targets already form a basis inside the ground set.
inline Presentation with_basis_targets(const Presentation& p) {
  const Matroid n = linkage_matroid(p);
  bool ok = std::all_of(p.targets.begin(), p.targets.end(),
                        [&](const auto& t) { return contains_label(p.ground, t); });
  if (ok && n.is_basis(n.subset_of(p.targets))) return p;
  return retarget(p, n.labels(detail::greedy_basis(n)));
}

// N/x for any non-loop x: retarget to a basis through x, then contract it
// as a target.
inline Presentation contract_any(const Presentation& p, std::string_view x) {
  validate(p);
  const Matroid n = linkage_matroid(p);
  const int ix = n.index_of(x);
  if (n.is_loop(ix)) {
    throw Error(ErrorKind::kIsLoop, "'" + std::string(x) +
                                        "' is a loop; delete it instead");
  }
  const Subset basis = detail::greedy_basis(n, Subset::singleton(ix));
  Presentation out = contract_target(retarget(p, n.labels(basis)), x);
  detail::require_same(linkage_matroid(out),
                       contract_elements(n, Subset::singleton(ix)),
                       ErrorKind::kVerificationFailed, "contract_any");
  return out;
}

enum class ExtensionKind {
  kFree,    // x lies in no non-spanning circuit and the rank is unchanged
  kColoop,  // x is added as a coloop
};

inline constexpr const char* kColoopTarget = "tstar";

// Adds a freely placed element x. For kFree the targets are first brought
// onto a basis, then x gets an arc to every target; for kColoop a fresh
// target "tstar" is added with the single arc x -> tstar.
inline Presentation free_extension(const Presentation& p, const std::string& x,
                                   ExtensionKind kind = ExtensionKind::kFree) {
  validate(p);
  if (p.graph.has_vertex(x)) {
    throw Error(ErrorKind::kLabelCollision,
                "vertex '" + x + "' already exists");
  }
  const Matroid n = linkage_matroid(p);
  Presentation out;
  if (kind == ExtensionKind::kColoop) {
    out = p;
    out.graph.add_vertex(x);
    out.graph.add_vertex(kColoopTarget);
    out.graph.add_arc(x, kColoopTarget);
    out.targets.push_back(kColoopTarget);
  } else {
    out = with_basis_targets(p);
    out.graph.add_vertex(x);
    for (const auto& t : out.targets) out.graph.add_arc(x, t);
  }
  out.ground.push_back(x);

  const Matroid extended = linkage_matroid(out);
  const int ix = extended.index_of(x);
  const bool shape_ok = kind == ExtensionKind::kColoop
                            ? extended.is_coloop(ix)
                            : extended.rank() == n.rank();
  if (!shape_ok || !is_freely_placed(extended, ix)) {
    throw Error(ErrorKind::kVerificationFailed,
                "free_extension: '" + x + "' is not freely placed");
  }
  detail::require_same(delete_elements(extended, Subset::singleton(ix)), n,
                       ErrorKind::kVerificationFailed, "free_extension");
  return out;
}

struct TwoBasesEmbedding {
  Presentation presentation;               // presents N'
  std::vector<std::string> delete_back;    // u_1..u_n
  std::vector<std::string> contract_back;  // t_1..t_m
  std::vector<std::string> first_basis;    // T ∪ (S - X)
  std::vector<std::string> second_basis;   // X ∪ {t_k} ∪ {u_k}
};

// Embeds N = L(G, S ∪ T, T) (T a basis inside the ground set) as a minor of
// a gammoid N' whose ground set splits into two disjoint bases. N is
// recovered from N' by deleting the u's and contracting the t's.
inline TwoBasesEmbedding two_bases_embedding(const Presentation& p) {
  validate(p);
  const Matroid n = linkage_matroid(p);
  for (const auto& t : p.targets) {
    if (!contains_label(p.ground, t)) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "target '" + t + "' is not a ground element");
    }
  }
  const Subset targets = n.subset_of(p.targets);
  if (!n.is_basis(targets)) {
    throw Error(ErrorKind::kPreconditionViolated,
                "targets are not a basis of the presented matroid");
  }
  // X: greedy maximum independent subset of the non-target elements.
  const Subset rest = n.full() - targets;
  Subset independent;
  for (int e : rest.members()) {
    if (n.is_independent(independent.with(e))) independent = independent.with(e);
  }
  const auto unlinked = n.labels(rest - independent);  // v_1..v_m
  const int u_count = n.rank() - independent.size();   // n = |T| - |X|
  const std::size_t total = p.ground.size() + unlinked.size() +
                            static_cast<std::size_t>(u_count);
  if (total > static_cast<std::size_t>(kMaxGroundSize)) {
    throw Error(ErrorKind::kGroundSetTooLarge,
                "embedding needs " + std::to_string(total) + " elements");
  }

  TwoBasesEmbedding out;
  Presentation& q = out.presentation;
  q = p;
  for (std::size_t k = 0; k < unlinked.size(); ++k) {
    const std::string t = "t#" + std::to_string(k + 1);
    q.graph.add_vertex(t);
    q.graph.add_arc(unlinked[k], t);
    q.ground.push_back(t);
    q.targets.push_back(t);
    out.contract_back.push_back(t);
  }
  for (int k = 0; k < u_count; ++k) {
    const std::string u = "u#" + std::to_string(k + 1);
    q.graph.add_vertex(u);
    for (const auto& t : p.targets) q.graph.add_arc(u, t);
    q.ground.push_back(u);
    out.delete_back.push_back(u);
  }
  out.first_basis = p.targets;
  for (const auto& v : unlinked) out.first_basis.push_back(v);
  out.second_basis = n.labels(independent);
  for (const auto& t : out.contract_back) out.second_basis.push_back(t);
  for (const auto& u : out.delete_back) out.second_basis.push_back(u);

  // |X| + (|S| - |X|) + (|T| - |X|) = |T| + |S| - |X| = |T ∪ {t_k}|
  const Matroid embedded = linkage_matroid(q);
  const Subset first = embedded.subset_of(out.first_basis);
  const Subset second = embedded.subset_of(out.second_basis);
  if (out.second_basis.size() != q.targets.size() ||
      (first & second) != Subset() || (first | second) != embedded.full() ||
      !embedded.is_basis(first) || !embedded.is_basis(second)) {
    throw Error(ErrorKind::kVerificationFailed,
                "two_bases_embedding: ground set is not split into two bases");
  }

  Presentation recovered = q;
  for (const auto& t : out.contract_back) recovered = contract_target(recovered, t);
  for (const auto& u : out.delete_back) recovered = delete_element(recovered, u);
  detail::require_same(linkage_matroid(recovered), n,
                       ErrorKind::kVerificationFailed,
                       "two_bases_embedding recovery");
  const Matroid trimmed =
      delete_elements(embedded, embedded.subset_of(out.delete_back));
  detail::require_same(
      contract_elements(trimmed, trimmed.subset_of(out.contract_back)), n,
      ErrorKind::kVerificationFailed, "two_bases_embedding minor");
  return out;
}

}  // namespace gammoid
