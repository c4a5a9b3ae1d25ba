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

#include "nevan/pl_function.h"

#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "nevan/certificate.h"
#include "nevan/error.h"
#include "testing.h"

namespace nevan {
namespace {

using Piece = PLFunction::Piece;

PLFunction RandomPL(testing::Rng& rng, bool finite) {
  std::vector<Piece> pieces{{0, rng.SmallRational(4)}};
  Rational at = 0;
  for (int i = rng.Int(0, 4); i > 0; --i) {
    at += Ratio(rng.Int(1, 6), rng.Int(1, 3));
    pieces.push_back({at, rng.SmallRational(4)});
  }
  std::optional<Rational> end;
  if (finite) end = at + rng.Int(1, 4);
  return PLFunction::FromPieces(rng.SmallRational(5), pieces, end);
}

// Breakpoints of both functions, midpoints between them and points past the
// last one.
std::vector<Rational> Grid(const PLFunction& f, const PLFunction& g) {
  std::set<Rational> points;
  for (const auto& v : f.Vertices()) points.insert(v);
  for (const auto& v : g.Vertices()) points.insert(v);
  std::vector<Rational> sorted(points.begin(), points.end());
  std::vector<Rational> out = sorted;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    out.push_back((sorted[i] + sorted[i + 1]) / 2);
  }
  out.push_back(sorted.back() + Ratio(1, 3));
  out.push_back(sorted.back() + 7);
  return out;
}

bool InDomain(const PLFunction& f, const PLFunction& g, const Rational& s) {
  return f.Contains(s) && g.Contains(s);
}

TEST(PLFunctionTest, ArithmeticExamples) {
  const PLFunction s = PLFunction::Linear(1, 0);
  EXPECT_EQ(PLFunction::Linear(2, 0) + PLFunction::Constant(3),
            PLFunction::Linear(2, 3));
  EXPECT_EQ(s + PLFunction(), s);
  const PLFunction f = Pos(PLFunction::Linear(1, -1));
  const PLFunction g = Min(s, PLFunction::Constant(2));
  EXPECT_EQ((f + g).Eval(3), 4);
  EXPECT_EQ(Ratio(2, 5) * PLFunction::Linear(5, 0), PLFunction::Linear(2, 0));
  EXPECT_EQ(Max(f, f), f);
}

TEST(PLFunctionTest, PositivePart) {
  const PLFunction f = Pos(PLFunction::Linear(1, -1));
  EXPECT_EQ(f, PLFunction::FromPieces(0, {{0, 0}, {1, 1}}));
  EXPECT_EQ(f.Eval(Ratio(1, 2)), 0);
  EXPECT_EQ(PLFunction::Linear(2, 1).Eval(3), 7);
}

TEST(PLFunctionTest, ExactCrossings) {
  // 3s - 1 crosses 1/2 at s = 1/2.
  const PLFunction f =
      Max(PLFunction::Linear(3, -1), PLFunction::Constant(Ratio(1, 2)));
  ASSERT_EQ(f.pieces().size(), 2u);
  EXPECT_EQ(f.pieces()[1].start, Ratio(1, 2));
}

TEST(PLFunctionTest, CanonicalForm) {
  const PLFunction merged =
      PLFunction::FromPieces(1, {{0, 2}, {1, 2}, {3, 2}});
  EXPECT_EQ(merged, PLFunction::Linear(2, 1));
  EXPECT_THROW(PLFunction::FromPieces(0, {{1, 0}}), DomainError);
  EXPECT_THROW(PLFunction::FromPieces(0, {{0, 0}, {0, 1}}), DomainError);
  EXPECT_THROW(PLFunction::Constant(1, Rational(0)), DomainError);
}

TEST(PLFunctionTest, OutOfDomainEvaluation) {
  const PLFunction f = PLFunction::Linear(1, 0, Rational(2));
  EXPECT_EQ(f.Eval(2), 2);
  EXPECT_THROW(f.Eval(3), OutOfDomain);
  EXPECT_EQ((f + PLFunction::Linear(1, 0)).domain_end(), Rational(2));
}

TEST(PLFunctionTest, SelfDifferenceIsZero) {
  testing::Rng rng(21);
  for (int i = 0; i < 200; ++i) {
    const PLFunction f = RandomPL(rng, i % 3 == 0);
    const PLFunction d = f - f;
    EXPECT_TRUE(d.IsZero());
    EXPECT_EQ(d.pieces().size(), 1u);
  }
}

TEST(PLFunctionTest, LatticeOperationsArePointwise) {
  testing::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    const PLFunction f = RandomPL(rng, i % 4 == 0);
    const PLFunction g = RandomPL(rng, i % 5 == 0);
    const Rational c = rng.SmallRational(5);
    const PLFunction mx = Max(f, g);
    const PLFunction mn = Min(f, g);
    const PLFunction sum = f + g;
    const PLFunction diff = f - g;
    const PLFunction scaled = c * f;
    const PLFunction pos = Pos(f);
    for (const auto& s : Grid(f, g)) {
      if (!InDomain(f, g, s)) continue;
      const Rational fs = f.Eval(s);
      const Rational gs = g.Eval(s);
      EXPECT_EQ(mx.Eval(s), std::max(fs, gs));
      EXPECT_EQ(mn.Eval(s), std::min(fs, gs));
      EXPECT_EQ(sum.Eval(s), fs + gs);
      EXPECT_EQ(diff.Eval(s), fs - gs);
      EXPECT_EQ(scaled.Eval(s), c * fs);
      EXPECT_EQ(pos.Eval(s), std::max(fs, Rational(0)));
    }
  }
}

TEST(PLFunctionTest, InfimumAndSupremum) {
  const PLFunction v = PLFunction::FromPieces(2, {{0, -1}, {3, 2}});
  EXPECT_EQ(v.Infimum(), Rational(-1));
  EXPECT_EQ(v.ArgInfimum(), Rational(3));
  EXPECT_FALSE(v.Supremum().has_value());
  EXPECT_EQ(v.Restrict(5).Supremum(), Rational(3));
  EXPECT_FALSE(PLFunction::Linear(-1, 0).Infimum().has_value());
  EXPECT_TRUE(v.IsConvex());
  EXPECT_FALSE(v.IsNondecreasing());
}

TEST(CertificateTest, Examples) {
  const PLFunction s = PLFunction::Linear(1, 0);
  const auto exact =
      Compare(PLFunction::Linear(2, 0), PLFunction::Linear(3, 0), {});
  EXPECT_EQ(exact.verdict.kind, VerdictKind::kHoldsExactly);

  const auto constant =
      Compare(PLFunction::Linear(2, 5), PLFunction::Linear(2, 0), {});
  EXPECT_EQ(constant.verdict,
            (Verdict{VerdictKind::kHoldsUpToConstant, Rational(5)}));
  EXPECT_EQ(constant.final_slope_gap, 0);

  const auto budget = Compare(PLFunction::Linear(3, 0), PLFunction::Linear(2, 0), s);
  EXPECT_EQ(budget.verdict,
            (Verdict{VerdictKind::kHoldsWithinSmallBudget, Rational(1)}));

  const auto violated =
      Compare(PLFunction::Linear(3, 0), PLFunction::Linear(2, 0), {});
  EXPECT_EQ(violated.verdict.kind, VerdictKind::kViolated);
  const Rational w = violated.verdict.value;
  EXPECT_LT(violated.slack.Eval(w), -violated.small_budget.Eval(w));
}

// Minimal rho with f + rho g >= 0, computed at the breakpoints of both
// functions and on the tail.
std::optional<Rational> BruteRatio(const PLFunction& f, const PLFunction& g) {
  Rational rho = 0;
  std::set<Rational> points;
  for (const auto& v : f.Vertices()) points.insert(v);
  for (const auto& v : g.Vertices()) points.insert(v);
  for (const auto& s : points) {
    if (!f.Contains(s) || !g.Contains(s)) continue;
    const Rational fs = f.Eval(s);
    if (fs >= 0) continue;
    const Rational gs = g.Eval(s);
    if (gs <= 0) return std::nullopt;
    rho = std::max(rho, Rational(-fs / gs));
  }
  if (!f.domain_end() && !g.domain_end() && f.final_slope() < 0) {
    if (g.final_slope() <= 0) return std::nullopt;
    rho = std::max(rho, Rational(-f.final_slope() / g.final_slope()));
  }
  return rho;
}

int Rank(VerdictKind k) { return static_cast<int>(k); }

TEST(CertificateTest, RatioMatchesBruteForce) {
  testing::Rng rng(23);
  for (int i = 0; i < 400; ++i) {
    const bool finite = i % 3 == 0;
    const PLFunction lhs = RandomPL(rng, finite);
    const PLFunction rhs = RandomPL(rng, finite);
    const PLFunction budget = Pos(RandomPL(rng, finite));
    const auto cert = Compare(lhs, rhs, budget);
    EXPECT_EQ(cert.slack, rhs - lhs);
    EXPECT_EQ(cert.min_budget_ratio, BruteRatio(cert.slack, budget));
    if (cert.verdict.kind == VerdictKind::kViolated) {
      const Rational w = cert.verdict.value;
      EXPECT_LT(cert.slack.Eval(w), -budget.Eval(w));
    }
  }
}

TEST(CertificateTest, VerdictMonotoneInBudget) {
  testing::Rng rng(24);
  for (int i = 0; i < 300; ++i) {
    const PLFunction lhs = RandomPL(rng, false);
    const PLFunction rhs = RandomPL(rng, false);
    const PLFunction small = Pos(RandomPL(rng, false));
    const PLFunction large = small + Pos(RandomPL(rng, false));
    const auto a = Compare(lhs, rhs, small);
    const auto b = Compare(lhs, rhs, large);
    EXPECT_LE(Rank(b.verdict.kind), Rank(a.verdict.kind));
    if (a.verdict.kind == VerdictKind::kHoldsWithinSmallBudget &&
        b.verdict.kind == VerdictKind::kHoldsWithinSmallBudget) {
      EXPECT_LE(b.verdict.value, a.verdict.value);
    }
  }
}

TEST(CertificateTest, VerdictNames) {
  for (auto k : {VerdictKind::kHoldsExactly, VerdictKind::kHoldsUpToConstant,
                 VerdictKind::kHoldsWithinSmallBudget, VerdictKind::kViolated}) {
    EXPECT_EQ(ParseVerdictKind(ToString(k)), k);
  }
}

}  // namespace
}  // namespace nevan
