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
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "gammoid/error.hpp"
#include "gammoid/linkage.hpp"
#include "gammoid/matroid.hpp"
#include "gammoid/surgery.hpp"

namespace gammoid {

// Which of the two symmetric branches (i = 1, i = 2) drive the checks that
// are stated per branch. Both branches are always built.
enum class BranchChoice { kFirst, kSecond, kBoth };

struct ClaimVerdict {
  std::string name;
  bool ok = false;
  std::string detail;

  bool operator==(const ClaimVerdict&) const = default;
};

// The graphs and matroids of one branch i (with j the other index).
struct Branch {
  int i = 1;
  Presentation a;                  // A_i: presents N with targets S_i
  Digraph b, c, d;                 // B_i, C_i, D_i
  std::vector<std::string> primed; // T_i
  std::string w, c_hub, d_hub;     // w_i, c_i, d_i
  Matroid n_i;                     // L(B_i, S1∪S2∪{v1,v2}, T_i∪{v1,v2})
  Matroid m_prime_i;               // M_i'
  Matroid m_dprime_i;              // M_i''

  // The element set of M and the target sets used with C_i and D_i.
  Presentation c_presentation(const std::vector<std::string>& ground) const {
    return {c, ground, targets()};
  }
  Presentation d_presentation(const std::vector<std::string>& ground) const {
    return {d, ground, targets()};
  }
  std::vector<std::string> targets() const {
    auto t = primed;
    t.push_back("v1");
    t.push_back("v2");
    t.push_back(w);
    return t;
  }
};

struct ConstructionBundle {
  Presentation input;       // as given
  Matroid input_matroid;    // L(input)
  TwoBasesEmbedding embedding;
  Matroid n;                // ground S1 ∪ S2, both bases
  int r = 0;
  std::vector<std::string> s1, s2, c, d;
  std::string v1 = "v1", v2 = "v2";
  std::array<Branch, 2> branches;
  Matroid n_prime, m_prime, m;
  IngletonResult ingleton;
  std::vector<ClaimVerdict> claims;

  const std::vector<std::string>& s(int i) const { return i == 1 ? s1 : s2; }
  const std::string& v(int i) const { return i == 1 ? v1 : v2; }
  const Branch& branch(int i) const { return branches[i - 1]; }

  // S1, S2, v1, v2: the ground set of N'.
  std::vector<std::string> n_prime_ground() const {
    auto g = s1;
    g.insert(g.end(), s2.begin(), s2.end());
    g.push_back(v1);
    g.push_back(v2);
    return g;
  }
  // S1, S2, v1, v2, C, D: the ground set of M.
  std::vector<std::string> ground() const {
    auto g = n_prime_ground();
    g.insert(g.end(), c.begin(), c.end());
    g.insert(g.end(), d.begin(), d.end());
    return g;
  }
  std::vector<std::string> c_union_d() const {
    auto out = c;
    out.insert(out.end(), d.begin(), d.end());
    return out;
  }
};

namespace detail {

inline std::vector<std::string> concat(
    std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  return out;
}

[[noreturn]] inline void claim_failed(const std::string& claim,
                                      const std::string& why) {
  throw Error(ErrorKind::kClaimFailed, claim + ": " + why);
}

// All k-subsets of `family` (a subset of m's ground set) meeting `meet`.
inline void add_k_subsets(Subset family, int k, Subset meet,
                          std::vector<Subset>& out) {
  const auto members = family.members();
  const int n = static_cast<int>(members.size());
  if (k > n) return;
  for (Subset::Mask pick = 0; pick < (Subset::Mask{1} << n); ++pick) {
    if (std::popcount(pick) != k) continue;
    Subset x;
    for (int b = 0; b < n; ++b) {
      if ((pick >> b) & 1U) x = x.with(members[b]);
    }
    if (!(x & meet).empty()) out.push_back(x);
  }
}

inline std::vector<Subset> sorted_unique(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

// The (r+3)-subsets of the listed families that meet C ∪ D, as subsets of
// m's ground set. This is the combinatorial prediction the non-spanning
// circuit characterizations are checked against.
inline std::vector<Subset> predicted_circuits(
    const Matroid& m, const ConstructionBundle& bundle,
    const std::vector<std::vector<std::string>>& families) {
  const Subset meet = m.subset_of(bundle.c_union_d());
  std::vector<Subset> out;
  for (const auto& family : families) {
    detail::add_k_subsets(m.subset_of(family), bundle.r + 3, meet, out);
  }
  return detail::sorted_unique(std::move(out));
}

// Non-spanning circuits of m that meet C ∪ D, ascending mask order.
inline std::vector<Subset> enumerated_circuits_meeting_cd(
    const Matroid& m, const ConstructionBundle& bundle) {
  const Subset meet = m.subset_of(bundle.c_union_d());
  std::vector<Subset> out;
  for (Subset x : m.nonspanning_circuits()) {
    if (!(x & meet).empty()) out.push_back(x);
  }
  return out;
}

// C∪D, S_i∪C∪v_i, S_i∪D∪v_i, S_j∪C∪v_j, S_j∪D∪v_j.
inline std::vector<std::vector<std::string>> frypan_families(
    const ConstructionBundle& b, int i) {
  const int j = 3 - i;
  return {b.c_union_d(),
          detail::concat({b.s(i), b.c, {b.v(i)}}),
          detail::concat({b.s(i), b.d, {b.v(i)}}),
          detail::concat({b.s(j), b.c, {b.v(j)}}),
          detail::concat({b.s(j), b.d, {b.v(j)}})};
}

// S_j∪C∪v_j, S_i∪D∪v_i, S_j∪D∪v_j.
inline std::vector<std::vector<std::string>> cutter_families(
    const ConstructionBundle& b, int i) {
  const int j = 3 - i;
  return {detail::concat({b.s(j), b.c, {b.v(j)}}),
          detail::concat({b.s(i), b.d, {b.v(i)}}),
          detail::concat({b.s(j), b.d, {b.v(j)}})};
}

// B_i from A_i: every x in S_i is renamed x' (these form T_i), a fresh x
// with the single arc x -> x' takes its place, and v_1, v_2 are added with
// arcs S_i -> v_i and S_j -> v_j.
inline void build_b(ConstructionBundle& bundle, int i) {
  Branch& br = bundle.branches[i - 1];
  const int j = 3 - i;
  br.i = i;
  br.b = br.a.graph;
  br.primed.clear();
  for (const auto& x : bundle.s(i)) {
    const std::string primed = x + "'";
    br.b.rename_vertex(x, primed);
    br.b.add_vertex(x);
    br.b.add_arc(x, primed);
    br.primed.push_back(primed);
  }
  br.b.add_vertex(bundle.v1);
  br.b.add_vertex(bundle.v2);
  for (const auto& x : bundle.s(i)) br.b.add_arc(x, bundle.v(i));
  for (const auto& x : bundle.s(j)) br.b.add_arc(x, bundle.v(j));
  auto targets = br.primed;
  targets.push_back(bundle.v1);
  targets.push_back(bundle.v2);
  br.n_i = linkage_matroid({br.b, bundle.n_prime_ground(), targets});
}

// C_i from B_i: hubs w_i, c_i, d_i with arcs c_i -> w_i, v_j and
// d_i -> w_i, v_i; the two C vertices point at c_i and all of T_i, the
// r+1 D vertices at d_i and all of T_i.
inline void build_c(ConstructionBundle& bundle, int i) {
  Branch& br = bundle.branches[i - 1];
  const int j = 3 - i;
  const std::string idx = std::to_string(i);
  br.w = "w" + idx;
  br.c_hub = "c" + idx;
  br.d_hub = "d" + idx;
  br.c = br.b;
  for (const auto& hub : {br.w, br.c_hub, br.d_hub}) br.c.add_vertex(hub);
  br.c.add_arc(br.c_hub, br.w);
  br.c.add_arc(br.c_hub, bundle.v(j));
  br.c.add_arc(br.d_hub, br.w);
  br.c.add_arc(br.d_hub, bundle.v(i));
  for (const auto& x : bundle.c) {
    br.c.add_vertex(x);
    br.c.add_arc(x, br.c_hub);
    for (const auto& t : br.primed) br.c.add_arc(x, t);
  }
  for (const auto& x : bundle.d) {
    br.c.add_vertex(x);
    br.c.add_arc(x, br.d_hub);
    for (const auto& t : br.primed) br.c.add_arc(x, t);
  }
  br.m_prime_i = linkage_matroid(br.c_presentation(bundle.ground()));
}

// D_i from C_i: arcs from each C vertex to v_j.
inline void build_d(ConstructionBundle& bundle, int i) {
  Branch& br = bundle.branches[i - 1];
  br.d = br.c;
  for (const auto& x : bundle.c) br.d.add_arc(x, bundle.v(3 - i));
  br.m_dprime_i = linkage_matroid(br.d_presentation(bundle.ground()));
}

inline ClaimVerdict verify_decade(ConstructionBundle& b) {
  const Matroid& n1 = b.branch(1).n_i;
  const Matroid& n2 = b.branch(2).n_i;
  for (int i : {1, 2}) {
    const Matroid& ni = b.branch(i).n_i;
    if (!ni.is_basis(ni.subset_of(detail::concat({b.s(i), {b.v1, b.v2}})))) {
      detail::claim_failed("decade", "S_" + std::to_string(i) +
                                         "∪{v1,v2} is not a basis of N_" +
                                         std::to_string(i));
    }
  }
  if (!equals(n1, n2)) detail::claim_failed("decade", "N_1 != N_2");
  b.n_prime = n1;
  return {"decade", true,
          "N_1 = N_2 on all " + std::to_string(1u << n1.size()) + " subsets"};
}

inline ClaimVerdict verify_gelato(const ConstructionBundle& b) {
  const Matroid recovered =
      contract_elements(b.n_prime, b.n_prime.subset_of({b.v1, b.v2}));
  if (!equals(recovered, b.n)) detail::claim_failed("gelato", "N'/{v1,v2} != N");
  return {"gelato", true, "N'/{v1,v2} = N"};
}

// Both directions of the non-spanning circuit characterization of M_i'.
inline ClaimVerdict verify_frypan(const ConstructionBundle& b, int i) {
  const Matroid& mi = b.branch(i).m_prime_i;
  const auto found = enumerated_circuits_meeting_cd(mi, b);
  const auto expected = predicted_circuits(mi, b, frypan_families(b, i));
  if (found != expected) {
    detail::claim_failed("frypan", "branch " + std::to_string(i) + ": " +
                                       std::to_string(found.size()) +
                                       " circuits found, " +
                                       std::to_string(expected.size()) +
                                       " predicted");
  }
  return {"frypan", true,
          "branch " + std::to_string(i) + ": " + std::to_string(found.size()) +
              " non-spanning circuits meet C∪D, all predicted"};
}

inline ClaimVerdict verify_blouse(ConstructionBundle& b) {
  const Matroid& m1 = b.branch(1).m_prime_i;
  const Matroid& m2 = b.branch(2).m_prime_i;
  for (const Matroid* mi : {&m1, &m2}) {
    if (mi->rank() != b.r + 3) detail::claim_failed("blouse", "rank is not r+3");
    if (!equals(restrict_to(*mi, mi->subset_of(b.n_prime_ground())),
                b.n_prime)) {
      detail::claim_failed("blouse", "restriction to S1∪S2∪{v1,v2} is not N'");
    }
  }
  if (!equals(m1, m2)) detail::claim_failed("blouse", "M_1' != M_2'");
  b.m_prime = m1;
  return {"blouse", true, "M_1' = M_2', rank " + std::to_string(m1.rank())};
}

inline ClaimVerdict verify_cutter(const ConstructionBundle& b, int i) {
  const Matroid& mi = b.branch(i).m_dprime_i;
  const auto label = "branch " + std::to_string(i);
  if (!mi.is_independent(mi.subset_of(b.c_union_d())) ||
      !mi.is_independent(
          mi.subset_of(detail::concat({b.s(i), b.c, {b.v(i)}})))) {
    detail::claim_failed("cutter", label + ": C∪D or S_i∪C∪v_i is dependent");
  }
  const auto found = enumerated_circuits_meeting_cd(mi, b);
  const auto expected = predicted_circuits(mi, b, cutter_families(b, i));
  if (found != expected) {
    detail::claim_failed("cutter", label + ": " + std::to_string(found.size()) +
                                       " circuits found, " +
                                       std::to_string(expected.size()) +
                                       " predicted");
  }
  return {"cutter", true,
          label + ": " + std::to_string(found.size()) +
              " non-spanning circuits meet C∪D, all predicted"};
}

inline ClaimVerdict relax_and_define_m(ConstructionBundle& b) {
  const Subset cd = b.m_prime.subset_of(b.c_union_d());
  if (!is_circuit_hyperplane(b.m_prime, cd)) {
    detail::claim_failed("velcro", "C∪D is not a circuit-hyperplane of M'");
  }
  b.m = relax(b.m_prime, cd);
  return {"velcro", true, "C∪D is a circuit-hyperplane of M'; M = relaxation"};
}

inline ClaimVerdict verify_skewer(const ConstructionBundle& b) {
  const Subset cd = b.m.subset_of(b.c_union_d());
  const Matroid trimmed = delete_elements(b.m, cd);
  if (!equals(trimmed, delete_elements(b.m_prime, cd)) ||
      !equals(trimmed, b.n_prime)) {
    detail::claim_failed("skewer", "M\\(C∪D) != N'");
  }
  const Matroid minor =
      contract_elements(trimmed, trimmed.subset_of({b.v1, b.v2}));
  if (!equals(minor, b.n)) detail::claim_failed("skewer", "M\\(C∪D)/{v1,v2} != N");
  // Continue to the matroid the input presented.
  const Matroid no_u =
      delete_elements(minor, minor.subset_of(b.embedding.delete_back));
  const Matroid original =
      contract_elements(no_u, no_u.subset_of(b.embedding.contract_back));
  if (!equals(original, b.input_matroid)) {
    detail::claim_failed("skewer", "recipe does not reach the input matroid");
  }
  return {"skewer", true, "M\\(C∪D)/{v1,v2} = N; N-minor recipe recorded"};
}

inline ClaimVerdict verify_mohawk(ConstructionBundle& b) {
  const Matroid& m = b.m;
  const int r = b.r;
  const Subset a = m.subset_of(detail::concat({b.s1, {b.v1}}));
  const Subset bb = m.subset_of(detail::concat({b.s2, {b.v2}}));
  const Subset c = m.subset_of(b.c);
  const Subset d = m.subset_of(b.d);
  const bool ranks_ok =
      m.rank(a) == r + 1 && m.rank(bb) == r + 1 &&
      m.rank(a | bb | c) == r + 3 && m.rank(a | bb | d) == r + 3 &&
      m.rank(c | d) == r + 3 && m.rank(a | bb) == r + 2 &&
      m.rank(a | c) == r + 2 && m.rank(a | d) == r + 2 &&
      m.rank(bb | c) == r + 2 && m.rank(bb | d) == r + 2;
  b.ingleton = ingleton_check(m, a, bb, c, d);
  if (!ranks_ok || b.ingleton.lhs != 5 * r + 11 ||
      b.ingleton.rhs != 5 * r + 10 || b.ingleton.holds) {
    detail::claim_failed("mohawk",
                         "Ingleton ranks " + std::to_string(b.ingleton.lhs) +
                             " vs " + std::to_string(b.ingleton.rhs));
  }
  return {"mohawk", true,
          "Ingleton violated: " + std::to_string(b.ingleton.lhs) + " > " +
              std::to_string(b.ingleton.rhs)};
}

inline constexpr int kMaxRank = 6;  // 3r + 5 <= 24

// Normalizes the input (basis targets, two-bases embedding), builds every
// graph and matroid of the construction and checks the claims about them.
// Per-element minor certification is separate (see certificate.hpp).
inline ConstructionBundle build_construction(
    const Presentation& input, BranchChoice branches = BranchChoice::kBoth,
    int max_elements = kMaxGroundSize) {
  validate(input);
  if (input.ground.empty()) {
    throw Error(ErrorKind::kPreconditionViolated, "empty ground set");
  }
  // |E(M)| = 3r + 5 and r is at least the input rank.
  const int max_rank = std::min(kMaxRank, (max_elements - 5) / 3);
  ConstructionBundle b;
  b.input = input;
  b.input_matroid = linkage_matroid(input);
  if (b.input_matroid.rank() > max_rank) {
    throw Error(ErrorKind::kTooLarge,
                "input rank " + std::to_string(b.input_matroid.rank()) +
                    " exceeds " + std::to_string(max_rank));
  }
  b.embedding = two_bases_embedding(with_basis_targets(input));
  const Presentation& embedded = b.embedding.presentation;
  b.s1 = b.embedding.first_basis;
  b.s2 = b.embedding.second_basis;
  b.r = static_cast<int>(b.s1.size());
  if (b.r > max_rank) {
    throw Error(ErrorKind::kTooLarge,
                "normalized rank " + std::to_string(b.r) + " exceeds " +
                    std::to_string(max_rank));
  }
  if (b.r == 0) {
    throw Error(ErrorKind::kPreconditionViolated,
                "input matroid has rank 0");
  }
  // Ground of N in the order S1, S2.
  const Presentation ordered{embedded.graph, detail::concat({b.s1, b.s2}),
                             embedded.targets};
  b.n = linkage_matroid(ordered);
  b.c = {"C1", "C2"};
  for (int k = 1; k <= b.r + 1; ++k) b.d.push_back("D" + std::to_string(k));

  b.branches[0].a = retarget(ordered, b.s1);
  b.branches[1].a = retarget(ordered, b.s2);
  for (int i : {1, 2}) build_b(b, i);
  b.claims.push_back(verify_decade(b));
  b.claims.push_back(verify_gelato(b));
  for (int i : {1, 2}) build_c(b, i);
  for (int i : {1, 2}) {
    if (branches == BranchChoice::kBoth || (i == 1) == (branches == BranchChoice::kFirst)) {
      b.claims.push_back(verify_frypan(b, i));
    }
  }
  b.claims.push_back(verify_blouse(b));
  for (int i : {1, 2}) build_d(b, i);
  for (int i : {1, 2}) {
    if (branches == BranchChoice::kBoth || (i == 1) == (branches == BranchChoice::kFirst)) {
      b.claims.push_back(verify_cutter(b, i));
    }
  }
  b.claims.push_back(relax_and_define_m(b));
  b.claims.push_back(verify_skewer(b));
  b.claims.push_back(verify_mohawk(b));
  return b;
}

}  // namespace gammoid
