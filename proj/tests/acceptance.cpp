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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit status if
// any criterion fails. Expected quantities are recomputed here from first
// principles wherever the library also computes them.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gammoid/certificate.hpp"
#include "gammoid/certificate_io.hpp"
#include "gammoid/cli.hpp"
#include "gammoid/construction.hpp"
#include "gammoid/corpus.hpp"
#include "gammoid/linkage.hpp"
#include "gammoid/linking.hpp"
#include "gammoid/surgery.hpp"
#include "gammoid/verify.hpp"
#include "mutations.hpp"

namespace {

using namespace gammoid;
using Labels = std::vector<std::string>;
using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int number, bool ok, const std::string& title, std::string detail) {
  if (!ok) ++failures;
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) detail.pop_back();
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << "  " << title
            << "\n      " << detail << std::endl;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fixed(double value) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << value;
  return out.str();
}

struct Run {
  ConstructionBundle bundle;
  Certificate certificate;
  double seconds = 0;
};

Run end_to_end(const Presentation& input) {
  const auto start = Clock::now();
  Run run;
  run.bundle = build_construction(input);
  run.certificate = certify_excluded_minor(run.bundle);
  run.seconds = seconds_since(start);
  return run;
}

int verified_minors(const Certificate& c) {
  int n = 0;
  for (const auto& rec : c.minors) n += rec.deletion_verified + rec.contraction_verified;
  return n;
}

bool check_end_to_end(int number, const Run& run, int r, double limit) {
  const auto& b = run.bundle;
  const auto& c = run.certificate;
  const int expected_minors = 2 * (3 * r + 5);
  const bool ok = b.r == r && b.m.size() == 3 * r + 5 && b.m.rank() == r + 3 &&
                  b.ingleton.lhs == 5 * r + 11 && b.ingleton.rhs == 5 * r + 10 &&
                  !b.ingleton.holds && verified_minors(c) == expected_minors &&
                  c.complete() && run.seconds < limit;
  report(number, ok, "end-to-end r=" + std::to_string(r) + " reproduction",
         "|E(M)|=" + std::to_string(b.m.size()) + " rank=" + std::to_string(b.m.rank()) +
             " Ingleton " + std::to_string(b.ingleton.lhs) + ">" +
             std::to_string(b.ingleton.rhs) + ", " + std::to_string(verified_minors(c)) +
             "/" + std::to_string(expected_minors) + " minors verified, certificate " +
             (c.complete() ? "complete" : "INCOMPLETE") + ", " + fixed(run.seconds) +
             " s (limit " + fixed(limit) + " s)");
  return ok;
}

// Label sets of the (r+3)-subsets of the families meeting C∪D, enumerated
// directly from the labels.
std::set<Labels> family_subsets(const std::vector<Labels>& families, int k,
                                const Labels& cd) {
  std::set<Labels> out;
  for (const auto& family : families) {
    const int n = static_cast<int>(family.size());
    if (k > n) continue;
    std::vector<bool> chosen(static_cast<std::size_t>(n), false);
    std::fill(chosen.begin(), chosen.begin() + k, true);
    do {
      Labels pick;
      bool meets = false;
      for (int e = 0; e < n; ++e) {
        if (!chosen[e]) continue;
        pick.push_back(family[e]);
        meets = meets || std::find(cd.begin(), cd.end(), family[e]) != cd.end();
      }
      std::sort(pick.begin(), pick.end());
      if (meets) out.insert(pick);
    } while (std::prev_permutation(chosen.begin(), chosen.end()));
  }
  return out;
}

// Non-spanning circuits meeting C∪D found by testing minimality of every
// dependent non-spanning set.
std::set<Labels> circuits_meeting(const Matroid& m, const Labels& cd) {
  const Subset meet = m.subset_of(cd);
  std::set<Labels> out;
  m.for_each_subset([&](Subset x) {
    if ((x & meet).empty() || m.is_independent(x) || m.rank(x) == m.rank()) return;
    for (int e : x.members()) {
      if (!m.is_independent(x.without(e))) return;
    }
    auto labels = m.labels(x);
    std::sort(labels.begin(), labels.end());
    out.insert(labels);
  });
  return out;
}

bool characterizations_hold(const ConstructionBundle& b, std::string& detail) {
  const auto cd = b.c_union_d();
  bool ok = true;
  for (int i : {1, 2}) {
    const int j = 3 - i;
    const Labels si_v = [&] { auto s = b.s(i); s.push_back(b.v(i)); return s; }();
    const Labels sj_v = [&] { auto s = b.s(j); s.push_back(b.v(j)); return s; }();
    auto with = [](Labels base, const Labels& more) {
      base.insert(base.end(), more.begin(), more.end());
      return base;
    };
    const auto frypan = family_subsets(
        {cd, with(si_v, b.c), with(si_v, b.d), with(sj_v, b.c), with(sj_v, b.d)},
        b.r + 3, cd);
    const auto cutter =
        family_subsets({with(sj_v, b.c), with(si_v, b.d), with(sj_v, b.d)}, b.r + 3, cd);
    const auto found_prime = circuits_meeting(b.branch(i).m_prime_i, cd);
    const auto found_dprime = circuits_meeting(b.branch(i).m_dprime_i, cd);
    ok = ok && found_prime == frypan && found_dprime == cutter;
    detail += "r=" + std::to_string(b.r) + " i=" + std::to_string(i) + ": M' " +
              std::to_string(found_prime.size()) + "/" + std::to_string(frypan.size()) +
              ", M'' " + std::to_string(found_dprime.size()) + "/" +
              std::to_string(cutter.size()) + "; ";
  }
  return ok;
}

Presentation random_nonempty(std::mt19937& rng, int max_vertices) {
  std::uniform_int_distribution<int> size(1, max_vertices);
  std::uniform_real_distribution<double> density(0.1, 0.5);
  for (;;) {
    Presentation p = corpus::random_presentation(rng, size(rng), density(rng), false);
    if (!p.ground.empty()) return p;
  }
}

// Runs `trial` on random presentations until `count` of them apply; returns
// the number of mismatches (including thrown errors).
int surgery_trials(std::uint32_t seed, int count,
                   const std::function<int(const Presentation&)>& trial) {
  std::mt19937 rng(seed);
  int applied = 0, mismatches = 0;
  while (applied < count) {
    const Presentation p = random_nonempty(rng, 8);
    int outcome;
    try {
      outcome = trial(p);
    } catch (const Error& e) {
      std::cerr << "      surgery error: " << e.what() << "\n";
      outcome = 1;
    }
    if (outcome < 0) continue;  // not applicable to this presentation
    mismatches += outcome;
    ++applied;
  }
  return mismatches;
}

int mismatch(bool same) { return same ? 0 : 1; }

}  // namespace

int main() {
  const auto stats_before = Matroid::axiom_stats();

  // 1, 2: end-to-end runs.
  const Run rank2 = end_to_end(corpus::u24());
  check_end_to_end(1, rank2, 2, 10.0);
  const Run rank3 = end_to_end(corpus::rank3_gammoid());
  check_end_to_end(2, rank3, 3, 120.0);

  // 3: circuit characterizations, both directions.
  {
    std::string detail;
    const bool ok = characterizations_hold(rank2.bundle, detail) &&
                    characterizations_hold(rank3.bundle, detail);
    report(3, ok, "non-spanning circuits of M' and M_i'' meeting C∪D", detail);
  }

  // 4: flow engine against exhaustive search.
  {
    std::mt19937 rng(404);
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> density(0.05, 0.6);
    int discrepancies = 0;
    for (int k = 0; k < 500; ++k) {
      const Presentation p =
          corpus::random_presentation(rng, size(rng), density(rng), false);
      const Linking l = max_linking(p.graph, p.ground, p.targets);
      if (static_cast<int>(l.size()) !=
              brute_force_linking_oracle(p.graph, p.ground, p.targets) ||
          !is_valid_linking(p.graph, l, p.ground, p.targets)) {
        ++discrepancies;
      }
    }
    report(4, discrepancies == 0, "max_linking agrees with brute force",
           "500 random digraphs (<= 8 vertices), " + std::to_string(discrepancies) +
               " discrepancies");
  }

  // 5: every matroid built so far passed the axioms, and random gammoids do.
  {
    const auto stats = Matroid::axiom_stats();
    const auto checked = stats.checked - stats_before.checked;
    const auto passed = stats.passed - stats_before.passed;
    std::mt19937 rng(505);
    int violations = 0;
    for (int k = 0; k < 200; ++k) {
      try {
        if (linkage_matroid(random_nonempty(rng, 8)).rank_axiom_violation()) ++violations;
      } catch (const Error&) {
        ++violations;
      }
    }
    report(5, checked > 0 && checked == passed && violations == 0,
           "rank axioms hold on every materialized matroid",
           std::to_string(passed) + "/" + std::to_string(checked) +
               " matroids from criteria 1-4 passed; 200 random gammoids, " +
               std::to_string(violations) + " violations");
  }

  // 6: surgeries against matroid minors.
  {
    const int contract_t = surgery_trials(601, 200, [](const Presentation& p) {
      for (const auto& t : p.targets) {
        if (!contains_label(p.ground, t)) continue;
        const Matroid n = linkage_matroid(p);
        return mismatch(equals(linkage_matroid(contract_target(p, t)),
                               contract_elements(n, n.subset_of({t}))));
      }
      return -1;
    });
    const int del = surgery_trials(602, 200, [](const Presentation& p) {
      const Matroid n = linkage_matroid(p);
      const auto& x = p.ground.back();
      return mismatch(equals(linkage_matroid(delete_element(p, x)),
                             delete_elements(n, n.subset_of({x}))));
    });
    const int contract = surgery_trials(603, 200, [](const Presentation& p) {
      const Matroid n = linkage_matroid(p);
      for (int e = n.size() - 1; e >= 0; --e) {
        if (n.is_loop(e)) continue;
        return mismatch(equals(linkage_matroid(contract_any(p, n.ground()[e])),
                               contract_elements(n, Subset::singleton(e))));
      }
      return -1;
    });
    const int free = surgery_trials(604, 200, [](const Presentation& p) {
      const Matroid n = linkage_matroid(p);
      const Matroid m = linkage_matroid(free_extension(p, "x"));
      const int x = m.index_of("x");
      bool ok = m.rank() == n.rank() && equals(delete_elements(m, Subset::singleton(x)), n);
      n.for_each_subset([&](Subset s) {
        const Subset lifted = m.subset_of(n.labels(s)).with(x);
        ok = ok && m.is_independent(lifted) ==
                       (n.is_independent(s) && s.size() < n.rank());
      });
      return mismatch(ok);
    });
    const int embed = surgery_trials(605, 200, [](const Presentation& p) {
      const Presentation q = with_basis_targets(p);
      const Matroid n = linkage_matroid(q);
      const TwoBasesEmbedding e = two_bases_embedding(q);
      const Matroid big = linkage_matroid(e.presentation);
      const Matroid trimmed = delete_elements(big, big.subset_of(e.delete_back));
      return mismatch(
          big.is_basis(big.subset_of(e.first_basis)) &&
          big.is_basis(big.subset_of(e.second_basis)) && big.size() == 2 * big.rank() &&
          equals(contract_elements(trimmed, trimmed.subset_of(e.contract_back)), n));
    });
    const int total = contract_t + del + contract + free + embed;
    report(6, total == 0, "surgery identities on random presentations",
           "200 each; mismatches: contract_target " + std::to_string(contract_t) +
               ", delete_element " + std::to_string(del) + ", contract_any " +
               std::to_string(contract) + ", free_extension " + std::to_string(free) +
               ", two_bases_embedding " + std::to_string(embed));
  }

  // 7: strict gammoids are duals of transversal matroids.
  {
    std::mt19937 rng(707);
    int passed = 0;
    for (int k = 0; k < 100; ++k) {
      passed += transversal_duality_check(corpus::random_presentation(rng, 6, 0.3, true));
    }
    report(7, passed == 100, "transversal duality on strict presentations",
           std::to_string(passed) + "/100 random strict presentations");
  }

  // 8: relaxation adds exactly C∪D as a basis.
  {
    bool ok = true;
    std::string detail;
    for (const Run* run : {&rank2, &rank3}) {
      const auto& b = run->bundle;
      auto expected = b.m_prime.bases();
      const Subset cd = b.m_prime.subset_of(b.c_union_d());
      const bool was_basis = b.m_prime.is_basis(cd);
      expected.push_back(cd);
      std::sort(expected.begin(), expected.end());
      const bool same_bases = !was_basis && b.m.bases() == expected;
      const bool same_deletion =
          equals(delete_elements(b.m, b.m.subset_of(b.c_union_d())),
                 delete_elements(b.m_prime, cd));
      ok = ok && same_bases && same_deletion;
      detail += "r=" + std::to_string(b.r) + ": |bases(M)|=" +
                std::to_string(b.m.bases().size()) + " = " +
                std::to_string(b.m_prime.bases().size()) + "+1, M\\(C∪D) " +
                (same_deletion ? "=" : "!=") + " M'\\(C∪D); ";
    }
    report(8, ok, "relaxation contract", detail);
  }

  // 9: the verifier accepts built certificates and rejects tampered ones.
  {
    const auto dir = std::filesystem::temp_directory_path();
    std::ostringstream sink;
    int accepted = 0;
    for (const Run* run : {&rank2, &rank3}) {
      const auto path = dir / ("gammoid-acceptance-r" + std::to_string(run->bundle.r) + ".json");
      std::ofstream(path) << serialize(run->certificate);
      accepted += cli::cmd_verify(path.string(), sink) == cli::kOk;
      std::filesystem::remove(path);
    }
    const Json base = to_json(rank2.certificate);
    int detected = 0;
    const auto mutants = testing::mutants(base, 50, 909);
    for (const auto& [name, mutant] : mutants) {
      if (cli::verify_text(mutant.dump(), sink) != cli::kOk) {
        ++detected;
      } else {
        std::cerr << "      undetected mutation: " << name << "\n";
      }
    }
    report(9, accepted == 2 && detected == static_cast<int>(mutants.size()),
           "certificate verification and tamper detection",
           std::to_string(accepted) + "/2 built certificates verify (exit 0); " +
               std::to_string(detected) + "/" + std::to_string(mutants.size()) +
               " mutants rejected");
  }

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
