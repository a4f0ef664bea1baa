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
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gammoid/error.hpp"
#include "gammoid/subset.hpp"

namespace gammoid {

inline constexpr int kMaxGroundSize = 24;

// A finite matroid on a labeled, ordered ground set, stored as its complete
// rank table (one entry per subset, indexed by mask). Values are immutable
// once built; every factory re-checks the matroid axioms on the table.
class Matroid {
 public:
  // The empty matroid.
  Matroid() : rank_table_(1, 0) {}

  // Materializes the matroid whose independent sets are exactly the subsets
  // accepted by `oracle`. The oracle is evaluated on every subset and the
  // result is checked for downward closure and augmentation.
  static Matroid from_independence_oracle(
      std::vector<std::string> ground,
      const std::function<bool(Subset)>& oracle) {
    check_ground(ground);
    const int n = static_cast<int>(ground.size());
    const Subset::Mask count = Subset::Mask{1} << n;
    std::vector<std::uint8_t> independent(count);
    for (Subset::Mask m = 0; m < count; ++m) {
      independent[m] = oracle(Subset(m)) ? 1 : 0;
    }
    return from_independence_table(std::move(ground), independent);
  }

  // Materializes the matroid with the given basis family.
  static Matroid from_bases(std::vector<std::string> ground,
                            std::span<const Subset> bases) {
    check_ground(ground);
    if (bases.empty()) {
      throw Error(ErrorKind::kAxiomViolation, "basis family is empty");
    }
    const int n = static_cast<int>(ground.size());
    const Subset::Mask count = Subset::Mask{1} << n;
    const int r = bases.front().size();
    std::vector<std::uint8_t> independent(count, 0);
    for (Subset b : bases) {
      if (!b.is_subset_of(Subset::full(n))) {
        throw Error(ErrorKind::kAxiomViolation,
                    "basis refers to an element outside the ground set");
      }
      if (b.size() != r) {
        throw Error(ErrorKind::kAxiomViolation, "bases differ in size");
      }
      independent[b.mask()] = 1;
    }
    // Subsets of bases are independent; sweep from large masks down.
    for (Subset::Mask m = count; m-- > 0;) {
      if (independent[m]) continue;
      for (int e = 0; e < n && !independent[m]; ++e) {
        if (!Subset(m).contains(e) &&
            independent[Subset(m).with(e).mask()]) {
          independent[m] = 1;
        }
      }
    }
    return from_independence_table(std::move(ground), independent);
  }

  // Builds directly from a rank table; checks the rank axioms.
  static Matroid from_rank_table(std::vector<std::string> ground,
                                 std::vector<std::uint8_t> table) {
    check_ground(ground);
    if (table.size() != (std::size_t{1} << ground.size())) {
      throw Error(ErrorKind::kAxiomViolation, "rank table has wrong size");
    }
    Matroid m(std::move(ground), std::move(table));
    certify_axioms(m, "");
    return m;
  }

  const std::vector<std::string>& ground() const { return ground_; }
  int size() const { return static_cast<int>(ground_.size()); }
  Subset full() const { return Subset::full(size()); }
  int rank() const { return rank_table_.back(); }
  int rank(Subset x) const { return rank_table_[x.mask()]; }
  bool is_independent(Subset x) const { return rank(x) == x.size(); }
  bool is_spanning(Subset x) const { return rank(x) == rank(); }
  bool is_basis(Subset x) const {
    return x.size() == rank() && is_independent(x);
  }

  std::optional<int> find(std::string_view label) const {
    for (int i = 0; i < size(); ++i) {
      if (ground_[i] == label) return i;
    }
    return std::nullopt;
  }

  int index_of(std::string_view label) const {
    if (auto i = find(label)) return *i;
    throw Error(ErrorKind::kNotInGround,
                "no element labeled '" + std::string(label) + "'");
  }

  template <typename Range>
  Subset subset_of(const Range& labels) const {
    Subset out;
    for (const auto& label : labels) out = out.with(index_of(label));
    return out;
  }
  Subset subset_of(std::initializer_list<std::string_view> labels) const {
    Subset out;
    for (auto label : labels) out = out.with(index_of(label));
    return out;
  }

  std::vector<std::string> labels(Subset x) const {
    std::vector<std::string> out;
    for (int i : x.members()) out.push_back(ground_[i]);
    return out;
  }

  // All lists below are in ascending mask order.
  std::vector<Subset> bases() const {
    std::vector<Subset> out;
    for_each_subset([&](Subset x) {
      if (is_basis(x)) out.push_back(x);
    });
    return out;
  }

  std::vector<Subset> circuits() const {
    std::vector<Subset> out;
    for_each_subset([&](Subset x) {
      if (is_circuit(x)) out.push_back(x);
    });
    return out;
  }

  std::vector<Subset> nonspanning_circuits() const {
    std::vector<Subset> out;
    for_each_subset([&](Subset x) {
      if (rank(x) < rank() && is_circuit(x)) out.push_back(x);
    });
    return out;
  }

  bool is_circuit(Subset x) const {
    if (x.empty() || is_independent(x)) return false;
    for (int e : x.members()) {
      if (!is_independent(x.without(e))) return false;
    }
    return true;
  }

  bool is_loop(int e) const { return rank(Subset::singleton(e)) == 0; }
  bool is_coloop(int e) const { return rank(full().without(e)) < rank(); }

  // Returns a description of the first rank-axiom violation, if any.
  // Normalization, unit increase and local submodularity are checked on
  // every subset (together they imply the full axioms). Full pairwise
  // submodularity is additionally checked exhaustively up to 12 elements
  // and on a fixed pseudo-random sample of pairs beyond that.
  std::optional<std::string> rank_axiom_violation() const {
    const int n = size();
    const Subset::Mask count = Subset::Mask{1} << n;
    if (rank_table_[0] != 0) return "rank of the empty set is nonzero";
    for (Subset::Mask m = 0; m < count; ++m) {
      const Subset x(m);
      for (int e = 0; e < n; ++e) {
        if (x.contains(e)) continue;
        const int step = rank(x.with(e)) - rank(x);
        if (step < 0 || step > 1) {
          return "rank is not unit-increasing at mask " + std::to_string(m);
        }
        for (int f = e + 1; f < n; ++f) {
          if (x.contains(f)) continue;
          if (rank(x) + rank(x.with(e).with(f)) >
              rank(x.with(e)) + rank(x.with(f))) {
            return "rank is not submodular at mask " + std::to_string(m);
          }
        }
      }
    }
    auto pair_ok = [&](Subset a, Subset b) {
      return rank(a | b) + rank(a & b) <= rank(a) + rank(b);
    };
    if (n <= 12) {
      for (Subset::Mask a = 0; a < count; ++a) {
        for (Subset::Mask b = a + 1; b < count; ++b) {
          if (!pair_ok(Subset(a), Subset(b))) {
            return "submodularity fails on a pair at mask " +
                   std::to_string(a);
          }
        }
      }
    } else {
      std::mt19937 rng(0x5eed);
      std::uniform_int_distribution<Subset::Mask> pick(0, count - 1);
      for (int k = 0; k < 200000; ++k) {
        const Subset a(pick(rng)), b(pick(rng));
        if (!pair_ok(a, b)) {
          return "submodularity fails on a sampled pair at mask " +
                 std::to_string(a.mask());
        }
      }
    }
    return std::nullopt;
  }

  template <typename F>
  void for_each_subset(F&& f) const {
    const Subset::Mask count = Subset::Mask{1} << size();
    for (Subset::Mask m = 0; m < count; ++m) f(Subset(m));
  }

  // Process-wide tallies of axiom checks run by the factories.
  struct AxiomStats {
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
  };
  static AxiomStats axiom_stats() {
    return {checked_counter().load(), passed_counter().load()};
  }

  // Rank table in mask order; exposed for tests and serialization.
  const std::vector<std::uint8_t>& rank_table() const { return rank_table_; }

 private:
  Matroid(std::vector<std::string> ground, std::vector<std::uint8_t> table)
      : ground_(std::move(ground)), rank_table_(std::move(table)) {}

  static std::atomic<std::uint64_t>& checked_counter() {
    static std::atomic<std::uint64_t> n{0};
    return n;
  }
  static std::atomic<std::uint64_t>& passed_counter() {
    static std::atomic<std::uint64_t> n{0};
    return n;
  }

  // Runs the full rank-axiom check and records the outcome.
  static void certify_axioms(const Matroid& m, const char* context) {
    ++checked_counter();
    if (auto violation = m.rank_axiom_violation()) {
      throw Error(ErrorKind::kAxiomViolation, context + *violation);
    }
    ++passed_counter();
  }

  static void check_ground(const std::vector<std::string>& ground) {
    if (ground.size() > static_cast<std::size_t>(kMaxGroundSize)) {
      throw Error(ErrorKind::kGroundSetTooLarge,
                  std::to_string(ground.size()) + " elements (limit " +
                      std::to_string(kMaxGroundSize) + ")");
    }
    std::unordered_set<std::string> seen;
    for (const auto& label : ground) {
      if (!seen.insert(label).second) {
        throw Error(ErrorKind::kPreconditionViolated,
                    "duplicate element label '" + label + "'");
      }
    }
  }

  static Matroid from_independence_table(
      std::vector<std::string> ground,
      const std::vector<std::uint8_t>& independent) {
    const int n = static_cast<int>(ground.size());
    const Subset::Mask count = Subset::Mask{1} << n;
    if (!independent[0]) {
      throw Error(ErrorKind::kAxiomViolation, "empty set is dependent");
    }
    std::vector<std::uint8_t> table(count, 0);
    for (Subset::Mask m = 1; m < count; ++m) {
      const Subset x(m);
      if (independent[m]) {
        for (int e : x.members()) {
          if (!independent[x.without(e).mask()]) {
            throw Error(ErrorKind::kAxiomViolation,
                        "independent sets are not closed under subsets");
          }
        }
        table[m] = static_cast<std::uint8_t>(x.size());
      } else {
        std::uint8_t best = 0;
        for (int e : x.members()) {
          best = std::max(best, table[x.without(e).mask()]);
        }
        table[m] = best;
      }
    }
    // With downward closure in place, the oracle defines a matroid exactly
    // when its induced rank function is submodular (augmentation).
    Matroid m(std::move(ground), std::move(table));
    certify_axioms(m, "augmentation fails: ");
    return m;
  }

  std::vector<std::string> ground_;
  std::vector<std::uint8_t> rank_table_;
};

namespace detail {

// Spreads the bits of `compact` onto the positions listed in `positions`.
inline Subset expand(Subset compact, std::span<const int> positions) {
  Subset out;
  for (int k : compact.members()) out = out.with(positions[k]);
  return out;
}

inline std::vector<int> complement_positions(const Matroid& m, Subset x) {
  std::vector<int> keep;
  for (int i = 0; i < m.size(); ++i) {
    if (!x.contains(i)) keep.push_back(i);
  }
  return keep;
}

template <typename RankOf>
Matroid minor_on(const Matroid& m, std::span<const int> keep, RankOf rank_of) {
  std::vector<std::string> ground;
  for (int i : keep) ground.push_back(m.ground()[i]);
  const Subset::Mask count = Subset::Mask{1} << keep.size();
  std::vector<std::uint8_t> table(count);
  for (Subset::Mask y = 0; y < count; ++y) {
    table[y] = static_cast<std::uint8_t>(rank_of(expand(Subset(y), keep)));
  }
  return Matroid::from_rank_table(std::move(ground), std::move(table));
}

}  // namespace detail

// M \ X. Surviving elements keep their relative order.
inline Matroid delete_elements(const Matroid& m, Subset x) {
  const auto keep = detail::complement_positions(m, x);
  return detail::minor_on(m, keep, [&](Subset y) { return m.rank(y); });
}

// M / X.
inline Matroid contract_elements(const Matroid& m, Subset x) {
  const auto keep = detail::complement_positions(m, x);
  const int rx = m.rank(x);
  return detail::minor_on(m, keep,
                          [&](Subset y) { return m.rank(y | x) - rx; });
}

// M | X.
inline Matroid restrict_to(const Matroid& m, Subset x) {
  return delete_elements(m, m.full() - x);
}

inline Matroid dual(const Matroid& m) {
  std::vector<int> all(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) all[i] = i;
  const Subset e = m.full();
  return detail::minor_on(m, all, [&](Subset y) {
    return y.size() + m.rank(e - y) - m.rank();
  });
}

// Labeled equality: same label set and the same rank on every subset, with
// elements matched by label rather than by position.
inline bool equals(const Matroid& a, const Matroid& b) {
  if (a.size() != b.size() || a.rank() != b.rank()) return false;
  std::vector<int> to_b(static_cast<std::size_t>(a.size()));
  for (int i = 0; i < a.size(); ++i) {
    auto j = b.find(a.ground()[i]);
    if (!j) return false;
    to_b[i] = *j;
  }
  bool same = true;
  a.for_each_subset([&](Subset x) {
    if (same && a.rank(x) != b.rank(detail::expand(x, to_b))) same = false;
  });
  return same;
}

// "{a,b,c}" rendering of a subset, for messages.
inline std::string describe(const Matroid& m, Subset x) {
  std::string out = "{";
  for (const auto& label : m.labels(x)) {
    if (out.size() > 1) out += ",";
    out += label;
  }
  return out + "}";
}

inline bool is_hyperplane(const Matroid& m, Subset x) {
  if (m.rank(x) != m.rank() - 1) return false;
  for (int e = 0; e < m.size(); ++e) {
    if (!x.contains(e) && m.rank(x.with(e)) != m.rank()) return false;
  }
  return true;
}

inline bool is_circuit_hyperplane(const Matroid& m, Subset x) {
  return m.is_circuit(x) && is_hyperplane(m, x);
}

// Declares the circuit-hyperplane X a basis. The result is rebuilt from the
// enlarged basis family.
inline Matroid relax(const Matroid& m, Subset x) {
  if (!is_circuit_hyperplane(m, x)) {
    throw Error(ErrorKind::kNotACircuitHyperplane, describe(m, x));
  }
  auto bases = m.bases();
  bases.insert(std::lower_bound(bases.begin(), bases.end(), x), x);
  return Matroid::from_bases(m.ground(), bases);
}

// True iff element x lies in no non-spanning circuit.
inline bool is_freely_placed(const Matroid& m, int x) {
  for (Subset c : m.nonspanning_circuits()) {
    if (c.contains(x)) return false;
  }
  return true;
}

struct IngletonResult {
  int lhs = 0;
  int rhs = 0;
  bool holds = true;
};

// r(A)+r(B)+r(A∪B∪C)+r(A∪B∪D)+r(C∪D) <= r(A∪B)+r(A∪C)+r(A∪D)+r(B∪C)+r(B∪D)
inline IngletonResult ingleton_check(const Matroid& m, Subset a, Subset b,
                                     Subset c, Subset d) {
  IngletonResult out;
  out.lhs = m.rank(a) + m.rank(b) + m.rank(a | b | c) + m.rank(a | b | d) +
            m.rank(c | d);
  out.rhs = m.rank(a | b) + m.rank(a | c) + m.rank(a | d) + m.rank(b | c) +
            m.rank(b | d);
  out.holds = out.lhs <= out.rhs;
  return out;
}

// Named constructors used throughout the tests and demos.
inline Matroid uniform_matroid(int rank, std::vector<std::string> ground) {
  return Matroid::from_independence_oracle(
      std::move(ground), [rank](Subset x) { return x.size() <= rank; });
}

}  // namespace gammoid
