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

#include "gammoid/matroid.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "test_support.hpp"

namespace gammoid {
namespace {

using testing::labels;
using testing::random_matroid;
using testing::random_subset;

Matroid U(int rank, int n) { return uniform_matroid(rank, labels(n)); }

// Rank 2 on {a,b,c,d} with {a,b} a parallel pair.
Matroid parallel_pair() {
  const std::vector<std::string> ground = {"a", "b", "c", "d"};
  const std::vector<Subset> bases = {Subset(0b0101), Subset(0b0110),
                                     Subset(0b1001), Subset(0b1010),
                                     Subset(0b1100)};
  return Matroid::from_bases(ground, bases);
}

TEST(MatroidTest, FreeMatroidOnOneElement) {
  const Matroid m =
      Matroid::from_independence_oracle({"a"}, [](Subset) { return true; });
  EXPECT_EQ(m.rank(Subset(1)), 1);
  EXPECT_EQ(m.rank(), 1);
}

TEST(MatroidTest, UniformFromCardinalityOracle) {
  const Matroid m = Matroid::from_independence_oracle(
      {"a", "b", "c", "d"}, [](Subset x) { return x.size() <= 2; });
  EXPECT_EQ(m.rank(), 2);
  EXPECT_EQ(m.rank(Subset()), 0);
  EXPECT_EQ(m.rank(m.subset_of({"a", "b", "c"})), 2);
  EXPECT_EQ(m.bases().size(), 6u);
}

TEST(MatroidTest, EmptyGroundSetIsRankZero) {
  const Matroid m;
  EXPECT_EQ(m.size(), 0);
  EXPECT_EQ(m.rank(), 0);
  EXPECT_EQ(m.bases(), std::vector<Subset>{Subset()});
}

TEST(MatroidTest, RejectsOracleThatIsNotDownwardClosed) {
  auto oracle = [](Subset x) { return x.size() != 1; };
  try {
    Matroid::from_independence_oracle({"a", "b"}, oracle);
    FAIL() << "expected AxiomViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
  }
}

TEST(MatroidTest, RejectsOracleWithoutAugmentation) {
  // {a,b} and {c} are maximal, so {c} cannot be augmented from {a,b}.
  auto oracle = [](Subset x) { return x.mask() != 0b101 && x.mask() != 0b110 && x.size() <= 2; };
  try {
    Matroid::from_independence_oracle({"a", "b", "c"}, oracle);
    FAIL() << "expected AxiomViolation";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kAxiomViolation);
  }
}

TEST(MatroidTest, RejectsOversizedGroundSet) {
  bool called = false;
  try {
    Matroid::from_independence_oracle(labels(25), [&](Subset) {
      called = true;
      return true;
    });
    FAIL() << "expected GroundSetTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGroundSetTooLarge);
  }
  EXPECT_FALSE(called);
}

TEST(MatroidTest, RejectsDuplicateLabels) {
  EXPECT_THROW(uniform_matroid(1, {"a", "a"}), Error);
}

TEST(MatroidTest, RejectsCorruptRankTable) {
  // r({a}) = 1, r({b}) = 1, r({a,b}) = 0 is not monotone.
  EXPECT_THROW(Matroid::from_rank_table({"a", "b"}, {0, 1, 1, 0}), Error);
  // r({a,b,c}) = 3 while every pair has rank 1: not unit-increasing.
  EXPECT_THROW(Matroid::from_rank_table({"a", "b", "c"},
                                        {0, 1, 1, 1, 1, 1, 1, 3}),
               Error);
}

TEST(MatroidTest, CircuitsOfU24AreTheTriples) {
  const Matroid m = U(2, 4);
  const auto circuits = m.circuits();
  ASSERT_EQ(circuits.size(), 4u);
  for (Subset c : circuits) EXPECT_EQ(c.size(), 3);
  EXPECT_TRUE(std::is_sorted(circuits.begin(), circuits.end()));
  // All triples are spanning in U_{2,4}.
  EXPECT_TRUE(m.nonspanning_circuits().empty());
}

TEST(MatroidTest, FreeMatroidHasNoNonSpanningCircuits) {
  EXPECT_TRUE(U(5, 5).nonspanning_circuits().empty());
  EXPECT_TRUE(U(5, 5).circuits().empty());
}

TEST(MatroidTest, ParallelPairIsNonSpanningCircuit) {
  const Matroid m = parallel_pair();
  EXPECT_EQ(m.nonspanning_circuits(), std::vector<Subset>{Subset(0b0011)});
}

TEST(MatroidTest, ContractingNothingIsIdentity) {
  std::mt19937 rng(1);
  for (int k = 0; k < 20; ++k) {
    const Matroid m = random_matroid(rng);
    EXPECT_TRUE(equals(contract_elements(m, Subset()), m));
    EXPECT_TRUE(equals(delete_elements(m, Subset()), m));
  }
}

TEST(MatroidTest, DualIsAnInvolution) {
  std::mt19937 rng(2);
  for (int k = 0; k < 50; ++k) {
    const Matroid m = random_matroid(rng);
    const Matroid d = dual(m);
    EXPECT_EQ(d.rank(), m.size() - m.rank());
    EXPECT_TRUE(equals(dual(d), m));
  }
}

TEST(MatroidTest, DeleteAndContractCommuteOnDisjointSets) {
  std::mt19937 rng(3);
  for (int k = 0; k < 100; ++k) {
    const Matroid m = random_matroid(rng);
    const Subset x = random_subset(rng, m.size());
    const Subset y = random_subset(rng, m.size()) - x;
    const Matroid del_then_con = [&] {
      const Matroid d = delete_elements(m, x);
      return contract_elements(d, d.subset_of(m.labels(y)));
    }();
    const Matroid con_then_del = [&] {
      const Matroid c = contract_elements(m, y);
      return delete_elements(c, c.subset_of(m.labels(x)));
    }();
    EXPECT_TRUE(equals(del_then_con, con_then_del));
  }
}

TEST(MatroidTest, DualOfDeletionIsContractionOfDual) {
  std::mt19937 rng(4);
  for (int k = 0; k < 100; ++k) {
    const Matroid m = random_matroid(rng);
    const Subset x = random_subset(rng, m.size());
    EXPECT_TRUE(equals(dual(delete_elements(m, x)),
                       contract_elements(dual(m), x)));
  }
}

TEST(MatroidTest, MinorsKeepSurvivorOrder) {
  const Matroid m = U(2, 5);
  const Matroid d = delete_elements(m, m.subset_of({"e1", "e3"}));
  EXPECT_EQ(d.ground(), (std::vector<std::string>{"e0", "e2", "e4"}));
}

TEST(MatroidTest, EqualityMatchesLabelsNotPositions) {
  const Matroid a = parallel_pair();
  const std::vector<std::string> reordered = {"d", "c", "b", "a"};
  const Matroid b = Matroid::from_independence_oracle(reordered, [&](Subset x) {
    std::vector<std::string> names;
    for (int i : x.members()) names.push_back(reordered[i]);
    return a.is_independent(a.subset_of(names));
  });
  EXPECT_TRUE(equals(a, b));
  EXPECT_TRUE(equals(a, a));
  // Same structure on different labels is not equal.
  const Matroid renamed = Matroid::from_bases({"a", "b", "c", "e"}, a.bases());
  EXPECT_FALSE(equals(a, renamed));
}

TEST(MatroidTest, EqualityDetectsRankDifference) {
  EXPECT_FALSE(equals(uniform_matroid(1, {"a", "b"}),
                      uniform_matroid(2, {"a", "b"})));
}

TEST(MatroidTest, RelaxingParallelPairGivesU24) {
  const Matroid m = parallel_pair();
  const Subset ab = m.subset_of({"a", "b"});
  ASSERT_TRUE(is_circuit_hyperplane(m, ab));
  const Matroid relaxed = relax(m, ab);
  // Bases before: the five pairs other than {a,b}; after: all six pairs.
  EXPECT_EQ(m.bases().size(), 5u);
  EXPECT_EQ(relaxed.bases().size(), 6u);
  EXPECT_TRUE(equals(relaxed, uniform_matroid(2, {"a", "b", "c", "d"})));
}

TEST(MatroidTest, RelaxRejectsNonCircuitHyperplane) {
  const Matroid m = uniform_matroid(2, {"a", "b", "c", "d"});
  try {
    relax(m, m.subset_of({"a", "b"}));
    FAIL() << "expected NotACircuitHyperplane";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNotACircuitHyperplane);
  }
}

// Every circuit-hyperplane of random matroids: relaxation adds exactly one
// basis, changes only the rank of X itself, and is invisible after deleting
// any element of X.
TEST(MatroidTest, RelaxationProperties) {
  std::mt19937 rng(5);
  int relaxed_count = 0;
  for (int k = 0; k < 300; ++k) {
    const Matroid m = random_matroid(rng);
    for (Subset x : m.circuits()) {
      if (!is_circuit_hyperplane(m, x)) continue;
      ++relaxed_count;
      const Matroid r = relax(m, x);
      EXPECT_EQ(r.bases().size(), m.bases().size() + 1);
      m.for_each_subset([&](Subset y) {
        EXPECT_EQ(r.rank(y), y == x ? m.rank(y) + 1 : m.rank(y));
      });
      for (int e : x.members()) {
        EXPECT_TRUE(equals(delete_elements(r, Subset::singleton(e)),
                           delete_elements(m, Subset::singleton(e))));
      }
    }
  }
  EXPECT_GT(relaxed_count, 0);
}

TEST(MatroidTest, FreelyPlaced) {
  const Matroid with_coloop = Matroid::from_bases(
      {"a", "b", "c"}, std::vector<Subset>{Subset(0b101), Subset(0b110)});
  EXPECT_TRUE(with_coloop.is_coloop(2));
  EXPECT_TRUE(is_freely_placed(with_coloop, 2));
  EXPECT_FALSE(is_freely_placed(parallel_pair(), 0));
  EXPECT_TRUE(is_freely_placed(parallel_pair(), 2));
}

TEST(MatroidTest, IngletonOnEmptySets) {
  const auto result = ingleton_check(U(2, 4), Subset(), Subset(), Subset(), Subset());
  EXPECT_EQ(result.lhs, 0);
  EXPECT_EQ(result.rhs, 0);
  EXPECT_TRUE(result.holds);
}

TEST(MatroidTest, IngletonHoldsEverywhereOnU24) {
  const Matroid m = U(2, 4);
  for (Subset::Mask a = 0; a < 16; ++a)
    for (Subset::Mask b = 0; b < 16; ++b)
      for (Subset::Mask c = 0; c < 16; ++c)
        for (Subset::Mask d = 0; d < 16; ++d) {
          ASSERT_TRUE(ingleton_check(m, Subset(a), Subset(b), Subset(c), Subset(d)).holds);
        }
}

TEST(MatroidTest, IngletonIsSymmetricInAbAndCd) {
  std::mt19937 rng(6);
  for (int k = 0; k < 200; ++k) {
    const Matroid m = random_matroid(rng);
    const int n = m.size();
    const Subset a = random_subset(rng, n), b = random_subset(rng, n),
                 c = random_subset(rng, n), d = random_subset(rng, n);
    const bool holds = ingleton_check(m, a, b, c, d).holds;
    EXPECT_EQ(ingleton_check(m, b, a, c, d).holds, holds);
    EXPECT_EQ(ingleton_check(m, a, b, d, c).holds, holds);
    EXPECT_EQ(ingleton_check(m, b, a, d, c).holds, holds);
  }
}

TEST(MatroidTest, RankAxiomsHoldOnRandomMatroids) {
  std::mt19937 rng(7);
  for (int k = 0; k < 100; ++k) {
    const Matroid m = random_matroid(rng, 10);
    EXPECT_FALSE(m.rank_axiom_violation().has_value());
    EXPECT_FALSE(dual(m).rank_axiom_violation().has_value());
  }
}

TEST(MatroidTest, AxiomStatsCountChecks) {
  const auto before = Matroid::axiom_stats();
  (void)U(2, 4);
  const auto after = Matroid::axiom_stats();
  EXPECT_EQ(after.checked, before.checked + 1);
  EXPECT_EQ(after.passed, before.passed + 1);
}

}  // namespace
}  // namespace gammoid
