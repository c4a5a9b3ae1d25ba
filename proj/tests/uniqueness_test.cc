// Copyright 2026 The Nevan Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "nevan/uniqueness.h"

#include <gtest/gtest.h>

#include "nevan/error.h"
#include "nevan/search.h"
#include "testing.h"

namespace nevan {
namespace {

using testing::C;
using testing::Inf;
using testing::Z;

std::vector<Level> Infinite(int q) {
  return std::vector<Level>(static_cast<std::size_t>(q), Level::Infinite());
}

std::vector<Level> Levels(const std::vector<int>& ks) {
  std::vector<Level> out;
  for (int k : ks) out.emplace_back(k);
  return out;
}

// f and g = f + (f - g0) style pair: every member f + c(f - g) is shared
// with all multiplicities because f - a and g - a are multiples of f - g.
struct SharedPair {
  RationalFunction f = Z() * Z() * Z() - C(2) * Z();
  RationalFunction g = Z() * Z() + C(1);
  SmallFunctionFamily family{{Inf(), f + C(1) * (f - g), f + C(2) * (f - g),
                              f + C(-2) * (f - g), f + C(1, 2) * (f - g)}};
};

TEST(SharingTest, Examples) {
  const RationalFunction f = Z() * Z() * (Z() - C(1));
  const RationalFunction g = Z() * (Z() - C(1)) * (Z() - C(1));
  EXPECT_TRUE(sharing_set_equal(f, g, {C(0), Level::Infinite()}).equal);

  const SharingWitness w = sharing_set_equal(f, g, {C(0), Level(1)});
  EXPECT_FALSE(w.equal);
  EXPECT_EQ(w.f_only, testing::Root(1));
  EXPECT_EQ(w.g_only, testing::Root(0));

  EXPECT_TRUE(sharing_set_equal(f, f, {C(5), Level(2)}).equal);
  EXPECT_THROW(sharing_set_equal(C(3), Z(), {C(3), Level::Infinite()}),
               DomainError);
}

TEST(SharingTest, PolesAtInfinityTarget) {
  const RationalFunction f = C(1) / (Z() * Z());
  const RationalFunction g = C(1) / Z();
  EXPECT_TRUE(sharing_set_equal(f, g, {Inf(), Level::Infinite()}).equal);
  EXPECT_FALSE(sharing_set_equal(f, g, {Inf(), Level(1)}).equal);
}

TEST(SharingTest, Properties) {
  testing::Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f = rng.Nonconstant(3);
    const RationalFunction g = rng.Nonconstant(3);
    const RationalFunction a = rng.Function(1);
    if (f == a || g == a) continue;
    const SharingSpec spec{a, Level(rng.Int(1, 3))};
    const bool fg = sharing_set_equal(f, g, spec).equal;
    EXPECT_TRUE(sharing_set_equal(f, f, spec).equal);
    EXPECT_EQ(fg, sharing_set_equal(g, f, spec).equal);
    // a + c(h - a) has the same a-points with the same multiplicities.
    const RationalFunction c = C(rng.Int(1, 5), rng.Int(1, 5));
    const RationalFunction f2 = a + c * (f - a);
    EXPECT_EQ(SharingRadical(f, spec), SharingRadical(f2, spec));
  }
}

TEST(SharingTest, MoebiusPreservesSharingOfConstants) {
  testing::Rng rng(12);
  const std::vector<Target> constants{Inf(), C(0), C(1), C(-1), C(2), C(1, 2)};
  for (int i = 0; i < 60; ++i) {
    const RationalFunction f = rng.Nonconstant(3);
    const RationalFunction g = rng.Nonconstant(3);
    const MoebiusTransform L = moebius_L(C(0), C(1), Inf());
    for (const auto& a : constants) {
      for (const Level& k : {Level(1), Level(2), Level::Infinite()}) {
        if (!a.is_infinity() && (f == a.function() || g == a.function())) {
          continue;
        }
        const bool before = sharing_set_equal(f, g, {a, k}).equal;
        const bool after =
            sharing_set_equal(L.Apply(f), L.Apply(g), {L.Apply(a), k}).equal;
        EXPECT_EQ(before, after) << ToString(f) << " " << ToString(g) << " a = "
                                 << ToString(a);
      }
    }
  }
}

TEST(MoebiusLTest, SendsTargets) {
  const MoebiusTransform L = moebius_L(C(2), C(-1), Z());
  EXPECT_EQ(L.Apply(Target(C(2))), Target(C(0)));
  EXPECT_TRUE(L.Apply(Target(C(-1))).is_infinity());
  EXPECT_EQ(L.Apply(Target(Z())), Target(C(1)));
  const MoebiusTransform M = moebius_L(Inf(), C(0), C(1));
  EXPECT_TRUE(M.Apply(Target(C(0))).is_infinity());
  EXPECT_EQ(M.Apply(Inf()), Target(C(0)));
}

TEST(AuxTTest, FormsAgree) {
  testing::Rng rng(13);
  int checked = 0;
  while (checked < 100) {
    const RationalFunction f = rng.Nonconstant(2);
    const RationalFunction g = rng.Nonconstant(2);
    const RationalFunction a = rng.Function(1);
    RationalFunction aux;
    try {
      aux = build_aux_T(f, g, a);
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    EXPECT_EQ(aux, build_aux_T_from_Q(f, g, a));
    EXPECT_EQ(aux, build_aux_T_regrouped(f, g, a));
    EXPECT_EQ(build_Q(f, g, a), build_Q_expanded(f, g, a));
  }
}

TEST(AuxTTest, Examples) {
  EXPECT_FALSE(build_aux_T(Z(), Z() + C(1), Z() * Z()).IsZero());
  EXPECT_TRUE(build_aux_T(Z() * Z(), Z() * Z(), Z()).IsZero());
  EXPECT_THROW(build_aux_T(C(2), Z(), Z()), DomainError);
  EXPECT_THROW(build_aux_T(Z(), Z() * Z(), C(1)), DomainError);
  EXPECT_THROW(build_aux_T(Z(), Z() * Z(), Z()), DomainError);
}

TEST(AuxTTest, ConstantTargetQ) {
  testing::Rng rng(14);
  for (int i = 0; i < 50; ++i) {
    const RationalFunction f = rng.Nonconstant(3);
    const RationalFunction g = rng.Nonconstant(3);
    const RationalFunction a = C(rng.Int(4, 12), 3);
    if (f == a || g == a || f == C(1) || g == C(1)) continue;
    // a' = 0 leaves Q = -a f'g'[(f-a)(g-1) - (g-a)(f-1)].
    const RationalFunction expected =
        -a * f.Derivative() * g.Derivative() *
        ((f - a) * (g - C(1)) - (g - a) * (f - C(1)));
    EXPECT_EQ(build_Q(f, g, a), expected);
  }
}

TEST(AuxMTest, Examples) {
  const RationalFunction f = Z() * Z() * Z();
  const RationalFunction g = f + Z();
  for (const auto& a : {Z(), C(2)}) {
    const InequalityCertificate cert = aux_m_small_check(f, g, a, Prime(5));
    EXPECT_TRUE(cert.lhs.IsZero());
    EXPECT_EQ(cert.verdict.kind, VerdictKind::kHoldsExactly);
  }
  EXPECT_THROW(aux_m_small_check(f, f, C(2), Prime(5)), DomainError);
}

TEST(AuxMTest, NeverViolatedOnRandomInputs) {
  testing::Rng rng(15);
  int checked = 0;
  while (checked < 60) {
    const RationalFunction f = rng.Nonconstant(3);
    const RationalFunction g = rng.Nonconstant(3);
    const RationalFunction a = rng.Function(1);
    const Prime p(rng.Pick(std::vector<unsigned long>{2, 3, 5}));
    try {
      if (build_aux_T(f, g, a).IsZero()) continue;
    } catch (const DomainError&) {
      continue;
    }
    ++checked;
    const InequalityCertificate cert = aux_m_small_check(f, g, a, p);
    EXPECT_NE(cert.verdict.kind, VerdictKind::kViolated)
        << ToString(f) << " " << ToString(g) << " " << ToString(a);
  }
}

TEST(AuxNTest, ComputesWithoutSharing) {
  // Sharing does not hold here, so the bound need not hold; the
  // certificate must still be produced.
  const std::vector<SharingSpec> specs{{C(0), Level::Infinite()},
                                       {Inf(), Level::Infinite()},
                                       {C(1), Level::Infinite()},
                                       {C(2), Level::Infinite()}};
  const InequalityCertificate cert =
      aux_N_bound_check(Z() * Z(), Z() * Z() * Z(), specs, Prime(3));
  EXPECT_EQ(cert.lhs.final_slope(), 8);
  EXPECT_EQ(cert.verdict.kind, VerdictKind::kViolated);
}

TEST(Lemma2Test, SharedPair) {
  const SharedPair pair;
  for (const Subset& subset : Subsets(5, 4)) {
    const Lemma2Report report = lemma2_check(pair.f, pair.g, pair.family,
                                             Infinite(5), subset, Prime(3));
    EXPECT_EQ(report.subset, subset);
    EXPECT_NE(report.f_version.verdict.kind, VerdictKind::kViolated);
    EXPECT_NE(report.g_version.verdict.kind, VerdictKind::kViolated);
    // Here the normalized F is constant, so AuxT is not available.
    if (!report.aux_N) {
      bool noted = false;
      for (const auto& n : report.f_version.notes) {
        noted = noted || n.starts_with("auxiliary function:");
      }
      EXPECT_TRUE(noted);
    }
  }
}

TEST(Lemma2Test, Preconditions) {
  const SmallFunctionFamily constants({Inf(), C(0), C(1), C(2), C(3)});
  try {
    lemma2_check(Z(), Z() + C(1), constants, Infinite(5), {0, 1, 2, 3},
                 Prime(2));
    FAIL() << "expected SharingHypothesisFailed";
  } catch (const SharingHypothesisFailed& e) {
    EXPECT_EQ(e.index(), 1u);
    EXPECT_FALSE(e.witness().equal);
  }
  EXPECT_THROW(lemma2_check(Z(), Z(), constants, Infinite(5), {0, 1, 2, 3},
                            Prime(2)),
               DomainError);
  EXPECT_THROW(lemma2_check(Z(), Z() + C(1), constants, Infinite(4),
                            {0, 1, 2, 3}, Prime(2)),
               DomainError);
}

TEST(Theorem2Test, Applicability) {
  const Applicability all_inf = theorem2_applicable(Infinite(5));
  EXPECT_TRUE(all_inf.applicable);
  EXPECT_EQ(all_inf.margin, Ratio(2, 9));

  EXPECT_FALSE(theorem2_applicable(Levels({4, 4, 4, 4, 4})).applicable);

  const Applicability q7 = theorem2_applicable(Levels({13, 13, 13, 13, 13, 13, 13}));
  EXPECT_TRUE(q7.applicable);
  // 2*7*3/(5*11) - 7/14
  EXPECT_EQ(q7.margin, Ratio(29, 110));

  EXPECT_THROW(theorem2_applicable(Infinite(4)), DomainError);
}

TEST(Theorem2Test, MarginMatchesDefinition) {
  testing::Rng rng(16);
  for (int i = 0; i < 100; ++i) {
    const int q = rng.Int(5, 9);
    std::vector<Level> levels;
    Rational lhs = 0;
    for (int j = 0; j < q; ++j) {
      const int k = rng.Int(0, 20);
      levels.push_back(k == 0 ? Level::Infinite() : Level(k));
      lhs += levels.back().InverseSucc();
    }
    const Rational rhs = Ratio(2L * q * (q - 4), 5L * (q + 4));
    const Applicability a = theorem2_applicable(levels);
    EXPECT_EQ(a.margin, Rational(rhs - lhs));
    EXPECT_EQ(a.applicable, lhs < rhs);
  }
}

TEST(Theorem3Test, Threshold) {
  EXPECT_EQ(theorem3_threshold(5), Ratio(27, 2));
  EXPECT_EQ(theorem3_minimal_k(5), 14);
  EXPECT_EQ(theorem3_threshold(28), 2);
  EXPECT_EQ(theorem3_minimal_k(28), 3);
  EXPECT_EQ(theorem3_minimal_k(1000), 2);
  EXPECT_THROW(theorem3_threshold(4), DomainError);
  for (int q = 5; q < 50; ++q) {
    EXPECT_GT(theorem3_threshold(q), theorem3_threshold(q + 1));
    EXPECT_GT(theorem3_minimal_k(q), theorem3_threshold(q));
  }
}

TEST(Lemma3Test, Examples) {
  const RationalFunction f = Pow(Z(), 2) * Pow(Z() - C(1), 2);
  const SmallFunctionFamily zero({C(0)});
  const InequalityCertificate cert = lemma3_check(f, zero, Level(1), Prime(2));
  EXPECT_EQ(cert.lhs, PLFunction::Linear(2, 0));
  EXPECT_EQ(cert.rhs, PLFunction::Linear(Ratio(12, 5), 0));
  EXPECT_TRUE(cert.verdict.holds());
  EXPECT_FALSE(cert.notes.empty());

  const SmallFunctionFamily five({Inf(), C(0), C(1), C(2), C(3)});
  const InequalityCertificate inf =
      lemma3_check(f, five, Level::Infinite(), Prime(2));
  EXPECT_TRUE(inf.lhs.IsZero());
  EXPECT_EQ(inf.verdict.kind, VerdictKind::kHoldsExactly);
  EXPECT_THROW(lemma3_check(C(1), five, Level(2), Prime(2)), DomainError);
}

TEST(Lemma3Test, HoldsForConstantsOnRandomFunctions) {
  testing::Rng rng(17);
  const SmallFunctionFamily five({Inf(), C(0), C(1), C(-1), C(2)});
  for (int i = 0; i < 60; ++i) {
    RationalFunction f = rng.Nonconstant(2);
    f = f * f * f;  // plenty of multiple points
    bool ok = true;
    for (const auto& a : five.members()) {
      ok = ok && (a.is_infinity() || !(f == a.function()));
    }
    if (!ok) continue;
    const Level k(rng.Int(1, 3));
    const Prime p(rng.Pick(std::vector<unsigned long>{2, 3, 5}));
    EXPECT_NE(lemma3_check(f, five, k, p).verdict.kind, VerdictKind::kViolated)
        << ToString(f) << " k = " << ToString(k);
  }
}

TEST(Theorem2Test, SharedPairChain) {
  const SharedPair pair;
  const Theorem2Report report =
      theorem2_check(pair.f, pair.g, pair.family, Infinite(5), Prime(3));
  EXPECT_EQ(report.per_index_count, Binomial(4, 3));
  EXPECT_EQ(report.subsets.size(), 5u);
  EXPECT_NE(report.averaged_f.verdict.kind, VerdictKind::kViolated);
  EXPECT_NE(report.averaged_g.verdict.kind, VerdictKind::kViolated);
  EXPECT_NE(report.combined.verdict.kind, VerdictKind::kViolated);
  EXPECT_EQ(report.level_bound.verdict.kind, VerdictKind::kHoldsExactly);
}

TEST(UniquenessDecideTest, Verdicts) {
  const SmallFunctionFamily five({Inf(), C(0), C(1), C(2), C(3)});
  const RationalFunction f = Z() * Z() + Z();
  EXPECT_EQ(uniqueness_decide(f, f, five, Infinite(5)).verdict,
            UniquenessVerdict::kIdentical);

  const UniquenessDecision failed =
      uniqueness_decide(f, f + C(1), five, Infinite(5));
  EXPECT_EQ(failed.verdict, UniquenessVerdict::kHypothesisFailed);
  EXPECT_FALSE(failed.sharing.empty());

  const SharedPair pair;
  const UniquenessDecision nonconstant =
      uniqueness_decide(pair.f, pair.g, pair.family, Infinite(5));
  EXPECT_EQ(nonconstant.verdict, UniquenessVerdict::kInconclusive);
}

TEST(UniquenessDecideTest, FewTargetsInconclusive) {
  // z and 2 - z share inf and 1 with all multiplicities.
  const UniquenessDecision d = uniqueness_decide(
      Z(), C(2) - Z(), SmallFunctionFamily({Inf(), C(1)}), Infinite(2));
  EXPECT_EQ(d.verdict, UniquenessVerdict::kInconclusive);
}

TEST(SearchTest, DeterministicAndClean) {
  SearchConfig config;
  config.seed = 7;
  config.trials = 300;
  config.max_degree = 3;
  config.primes = {Prime(2), Prime(3)};
  config.threads = 4;
  const SearchReport a = counterexample_search(config);
  config.threads = 1;
  const SearchReport b = counterexample_search(config);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    EXPECT_EQ(a.records[i].f, b.records[i].f);
    EXPECT_EQ(a.records[i].g, b.records[i].g);
    EXPECT_EQ(a.records[i].shared, b.records[i].shared);
  }
  EXPECT_EQ(a.summary.theorem_contradictions, 0);
  EXPECT_EQ(a.summary.five_sharing_pairs, 0);
  for (const auto& r : a.records) {
    EXPECT_NE(r.smt_verdict, VerdictKind::kViolated);
    EXPECT_NE(r.theorem1_verdict, VerdictKind::kViolated);
  }
}

TEST(SearchTest, PlantedRunsShareTwoConstants) {
  SearchConfig config;
  config.seed = 3;
  config.trials = 100;
  config.plant_shared_radical = true;
  const SearchReport report = counterexample_search(config);
  int at_least_two = 0;
  for (const auto& r : report.records) {
    EXPECT_EQ(r.strategy, SearchStrategy::kSharedRadical);
    if (!r.identical && r.shared.size() >= 2) ++at_least_two;
  }
  EXPECT_EQ(report.summary.theorem_contradictions, 0);
  EXPECT_GT(at_least_two, 50);
}

}  // namespace
}  // namespace nevan
