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

#include "nevan/smt_engine.h"

#include <array>
#include <stdexcept>

#include "nevan/parallel.h"

namespace nevan {
namespace {

using RF = RationalFunction;

RF Const(const Rational& c) { return RF::Constant(c); }

RF Det3(const std::array<std::array<RF, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

std::array<RF, 3> SmallRow(const RF& a) {
  const RF da = a.Derivative();
  return {a * da, da, a * (a - Const(1))};
}

void RequireDeterminantInputs(const RF& f, const RF& a4, const RF& a5) {
  if (f.IsConstant()) throw DomainError("f must be nonconstant");
  for (const RF* a : {&a4, &a5}) {
    if (a->IsZero() || *a == Const(1)) {
      throw DomainError("a4, a5 must differ from 0 and 1, got " + ToString(*a));
    }
  }
  if (a4 == a5) throw DomainError("a4 and a5 coincide");
}

// a'/a - b'/b and a'/(a-1) - b'/(b-1).
RF LogDerivativeGap(const RF& a, const RF& b) {
  return a.Derivative() / a - b.Derivative() / b;
}

RF ShiftedLogDerivativeGap(const RF& a, const RF& b) {
  return a.Derivative() / (a - Const(1)) - b.Derivative() / (b - Const(1));
}

DegeneracyVerdict Classify(const RF& H, const RF& a4, const RF& a5) {
  if (!H.IsZero()) return {DegeneracyCase::kNonDegenerate, "H = " + ToString(H)};
  const RF gap = LogDerivativeGap(a4, a5);
  const RF shifted = ShiftedLogDerivativeGap(a4, a5);
  if (gap.IsZero()) return {DegeneracyCase::kCase1, "a4'/a4 == a5'/a5"};
  if (shifted.IsZero()) {
    return {DegeneracyCase::kCase2, "a4'/(a4-1) == a5'/(a5-1)"};
  }
  if (gap == shifted) {
    return {DegeneracyCase::kCase3,
            "a4'/a4 - a5'/a5 == a4'/(a4-1) - a5'/(a5-1) = " + ToString(gap)};
  }
  return {DegeneracyCase::kCase4Consistent,
          "H == 0 with a4'/a4 - a5'/a5 = " + ToString(gap) +
              " and a4'/(a4-1) - a5'/(a5-1) = " + ToString(shifted)};
}

PLFunction SumReducedN(const RF& f, const std::vector<Target>& targets,
                       Prime p) {
  std::vector<PLFunction> terms;
  terms.reserve(targets.size());
  for (const auto& a : targets) terms.push_back(reduced_N(f, a, p));
  return Sum(terms);
}

}  // namespace

SmallFunctionFamily::SmallFunctionFamily(std::vector<Target> members)
    : members_(std::move(members)) {
  RequireDistinct(members_);
}

std::vector<Rational> SmallFunctionFamily::SmallnessRatios(
    const RationalFunction& f) const {
  if (f.IsConstant()) throw DomainError("smallness relative to a constant");
  std::vector<Rational> out;
  out.reserve(members_.size());
  for (const auto& a : members_) {
    out.push_back(Ratio(a.is_infinity() ? 0 : a.function().Degree(), f.Degree()));
  }
  return out;
}

bool SmallFunctionFamily::AllConstant() const {
  for (const auto& a : members_) {
    if (!a.IsConstant()) return false;
  }
  return true;
}

SmallFunctionFamily SmallFunctionFamily::Select(const Subset& subset) const {
  std::vector<Target> out;
  out.reserve(subset.size());
  for (int i : subset) out.push_back(members_.at(static_cast<std::size_t>(i)));
  return SmallFunctionFamily(std::move(out));
}

std::string ToString(const SmallFunctionFamily& family) {
  std::string out = "{";
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(family[i]);
  }
  return out + "}";
}

MoebiusTransform::MoebiusTransform()
    : MoebiusTransform(Target::Infinity(), Target::Constant(0),
                       Target::Constant(1)) {}

MoebiusTransform::MoebiusTransform(Target a1, Target a2, Target a3)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)) {
  RequireDistinct({a1_, a2_, a3_});
}

bool MoebiusTransform::IsIdentity() const {
  return a1_.is_infinity() && a2_ == Target::Constant(0) &&
         a3_ == Target::Constant(1);
}

Target MoebiusTransform::Apply(const Target& w) const {
  if (w == a1_) return Target::Infinity();
  if (w.is_infinity()) {
    if (a2_.is_infinity()) return Target::Constant(0);
    if (a3_.is_infinity()) return Target::Constant(1);
    return Target((a3_.function() - a1_.function()) /
                  (a3_.function() - a2_.function()));
  }
  return Target(Apply(w.function()));
}

RationalFunction MoebiusTransform::Apply(const RationalFunction& w) const {
  if (!a1_.is_infinity() && w == a1_.function()) {
    throw DomainError("Moebius image of a1 is infinity");
  }
  if (a1_.is_infinity()) {
    return (w - a2_.function()) / (a3_.function() - a2_.function());
  }
  if (a2_.is_infinity()) {
    return (a3_.function() - a1_.function()) / (w - a1_.function());
  }
  if (a3_.is_infinity()) {
    return (w - a2_.function()) / (w - a1_.function());
  }
  return (w - a2_.function()) / (w - a1_.function()) *
         ((a3_.function() - a1_.function()) /
          (a3_.function() - a2_.function()));
}

Target MoebiusTransform::Invert(const Target& w) const {
  if (w.is_infinity()) return a1_;
  const RF& W = w.function();
  if (a1_.is_infinity()) {
    return Target(a2_.function() + W * (a3_.function() - a2_.function()));
  }
  if (a2_.is_infinity()) {
    if (W.IsZero()) return a2_;
    return Target(a1_.function() + (a3_.function() - a1_.function()) / W);
  }
  if (a3_.is_infinity()) {
    if (W == Const(1)) return a3_;
    return Target((W * a1_.function() - a2_.function()) / (W - Const(1)));
  }
  const RF c = (a3_.function() - a1_.function()) /
               (a3_.function() - a2_.function());
  if (W == c) return Target::Infinity();
  return Target((W * a1_.function() - c * a2_.function()) / (W - c));
}

MoebiusNormalization moebius_normalize(const RationalFunction& f,
                                       const Target& a1, const Target& a2,
                                       const Target& a3) {
  MoebiusTransform transform(a1, a2, a3);
  RF F = transform.Apply(f);
  return {std::move(F), std::move(transform)};
}

RationalFunction build_H(const RationalFunction& f, const RationalFunction& a4,
                         const RationalFunction& a5) {
  RequireDeterminantInputs(f, a4, a5);
  return Det3({SmallRow(f), SmallRow(a4), SmallRow(a5)});
}

RationalFunction factored_bracket(const RationalFunction& f,
                                  const RationalFunction& a4,
                                  const RationalFunction& a5) {
  RequireDeterminantInputs(f, a4, a5);
  const RF one = Const(1);
  const RF df = f.Derivative();
  const RF d5 = a5.Derivative();
  return LogDerivativeGap(a4, a5) * (df / (f - one) - d5 / (a5 - one)) -
         ShiftedLogDerivativeGap(a4, a5) * (df / f - d5 / a5);
}

RationalFunction build_H_factored(const RationalFunction& f,
                                  const RationalFunction& a4,
                                  const RationalFunction& a5) {
  const RF one = Const(1);
  return -(f * (f - one) * a4 * (a4 - one) * a5 * (a5 - one)) *
         factored_bracket(f, a4, a5);
}

RationalFunction build_H_row_rewrite(const RationalFunction& f,
                                     const RationalFunction& a4,
                                     const RationalFunction& a5, int i) {
  RequireDeterminantInputs(f, a4, a5);
  RF ai;
  switch (i) {
    case 2: ai = Const(0); break;
    case 3: ai = Const(1); break;
    case 4: ai = a4; break;
    case 5: ai = a5; break;
    default: throw DomainError("row rewrite index must be in 2..5");
  }
  const RF dai = ai.Derivative();
  const RF u = f - ai;
  const RF du = f.Derivative() - dai;
  const RF g = u * du + dai * u + ai * du;
  const RF h = u * u + (Const(2) * ai - Const(1)) * u;
  return Det3({std::array<RF, 3>{g, du, h}, SmallRow(a4), SmallRow(a5)});
}

std::string ToString(DegeneracyCase c) {
  switch (c) {
    case DegeneracyCase::kNonDegenerate: return "NonDegenerate";
    case DegeneracyCase::kCase1: return "Case1";
    case DegeneracyCase::kCase2: return "Case2";
    case DegeneracyCase::kCase3: return "Case3";
    case DegeneracyCase::kCase4Consistent: return "Case4Consistent";
  }
  return "?";
}

DegeneracyVerdict degeneracy_case(const RationalFunction& f,
                                  const RationalFunction& a4,
                                  const RationalFunction& a5) {
  return Classify(build_H(f, a4, a5), a4, a5);
}

PLFunction delta_r(const RationalFunction& a4, const RationalFunction& a5,
                   Prime p) {
  const RF one = Const(1);
  PLFunction out;
  for (const RF& x : {a4, a5, a4 - one, a5 - one, a4 - a5}) {
    if (x.IsZero()) {
      throw DomainError("delta(r) needs a4, a5 distinct and outside {0, 1}");
    }
    out = Min(out, log_norm(x, p));
  }
  return out;
}

InequalityCertificate delta_bound_check(const RationalFunction& a4,
                                        const RationalFunction& a5, Prime p) {
  const RF one = Const(1);
  const PLFunction lhs = Pos(-delta_r(a4, a5, p));
  std::vector<PLFunction> terms;
  for (const RF& x : {a4, a5, a4 - one, a5 - one, a4 - a5}) {
    terms.push_back(proximity_m(x.Reciprocal(), p));
  }
  return Compare(lhs, Sum(terms), PLFunction(),
                 "log^+(1/delta) <= sum of m(r, 1/a) over the five functions");
}

DegenerateFamily::DegenerateFamily(DegeneracyVerdict verdict)
    : Error("degenerate family: " + ToString(verdict.kind) + " (" +
            verdict.witness + ")"),
      verdict_(std::move(verdict)) {}

Lemma1Report lemma1_analyze(const RationalFunction& f,
                            const SmallFunctionFamily& family, Prime p) {
  if (family.size() != 5) throw DomainError("the lemma needs 5 functions");
  if (f.IsConstant()) throw DomainError("f must be nonconstant");
  const auto& a = family.members();
  Lemma1Report report;
  report.certificate =
      Compare(Rational(2) * characteristic_T(f, p), SumReducedN(f, a, p),
              SmallBudget(a, p), "2T(r,f) <= sum_{i=1}^5 Nbar(r,1/(f-a_i)) + S");
  report.normalization = moebius_normalize(f, a[0], a[1], a[2]);
  report.smallness = family.SmallnessRatios(f);
  const MoebiusTransform& L = report.normalization.transform;
  const RF& F = report.normalization.F;
  report.A4 = L.Apply(a[3]);
  report.A5 = L.Apply(a[4]);
  if (F.IsConstant()) {
    report.degeneracy.witness = "not analyzed: normalized F is constant";
    report.certificate.notes.push_back(report.degeneracy.witness);
    return report;
  }
  const RF& A4 = report.A4.function();
  const RF& A5 = report.A5.function();
  if (A4.IsConstant() || A5.IsConstant()) {
    std::vector<Target> constants{Target::Infinity(), Target::Constant(0),
                                  Target::Constant(1)};
    for (const RF* x : {&A4, &A5}) {
      if (x->IsConstant()) constants.emplace_back(*x);
    }
    report.constant_fallback = smt_constants_check(F, constants, p);
    report.degeneracy.witness = "not analyzed: constant normalized target";
    report.certificate.notes.push_back(
        "normalized a4 or a5 is constant; constants instance used");
    return report;
  }
  RF H = build_H(F, A4, A5);
  report.degeneracy = Classify(H, A4, A5);
  report.delta_bound = delta_bound_check(A4, A5, p);
  if (report.degeneracy.kind != DegeneracyCase::kNonDegenerate) {
    report.certificate.notes.push_back("degenerate family: " +
                                       ToString(report.degeneracy.kind));
    return report;
  }
  const PLFunction budget = SmallBudget({report.A4, report.A5}, p);
  const PLFunction TF = characteristic_T(F, p);
  const PLFunction TH = characteristic_T(H, p);
  report.four_t_bound = Compare(
      Rational(4) * TF,
      SumReducedN(F, {Target::Constant(0), Target::Constant(1), report.A4,
                      report.A5},
                  p) +
          TH,
      budget, "4T(r,F) <= sum_{j=2}^5 Nbar(r,1/(F-A_j)) + T(r,H) + S");
  report.h_bound =
      Compare(TH, Rational(2) * TF + reduced_N(F, Target::Infinity(), p),
              budget, "T(r,H) <= 2T(r,F) + Nbar(r,F) + S");
  report.H = std::move(H);
  return report;
}

Lemma1Report lemma1_check(const RationalFunction& f,
                          const SmallFunctionFamily& family, Prime p) {
  Lemma1Report report = lemma1_analyze(f, family, p);
  if (report.degeneracy.kind != DegeneracyCase::kNonDegenerate) {
    throw DegenerateFamily(report.degeneracy);
  }
  return report;
}

std::string ToString(AveragingMode mode) {
  return mode == AveragingMode::kDirect ? "direct" : "averaged";
}

AveragingMode ParseAveragingMode(const std::string& name) {
  if (name == "direct") return AveragingMode::kDirect;
  if (name == "averaged") return AveragingMode::kAveraged;
  throw DomainError("unknown mode '" + name + "'");
}

Theorem1Report theorem1_check(const RationalFunction& f,
                              const SmallFunctionFamily& family,
                              AveragingMode mode, Prime p) {
  const int q = static_cast<int>(family.size());
  if (q < 5) throw DomainError("need q >= 5 functions");
  if (f.IsConstant()) throw DomainError("f must be nonconstant");
  Theorem1Report report;
  report.mode = mode;
  report.per_index_count = Binomial(q - 1, 4);
  const std::string label =
      "(2q/5)T(r,f) <= sum_{i=1}^q Nbar(r,1/(f-a_i)) + S, q = " +
      std::to_string(q);
  const PLFunction T = characteristic_T(f, p);
  const PLFunction nbar_sum = SumReducedN(f, family.members(), p);
  if (mode == AveragingMode::kDirect) {
    report.certificate = Compare(Ratio(2 * q, 5) * T, nbar_sum,
                                 SmallBudget(family.members(), p), label);
    return report;
  }

  report.subsets = Subsets(q, 5);
  for (const Integer& c : IndexOccurrences(report.subsets, q)) {
    if (c != report.per_index_count) {
      throw std::logic_error("subset occurrence count != C(q-1,4)");
    }
  }
  std::vector<Lemma1Report> lemmas =
      ParallelMap(report.subsets.size(), [&](std::size_t i) {
        return lemma1_analyze(f, family.Select(report.subsets[i]), p);
      });
  std::vector<PLFunction> lhs, rhs, budget, slack;
  for (auto& lemma : lemmas) {
    lhs.push_back(lemma.certificate.lhs);
    rhs.push_back(lemma.certificate.rhs);
    budget.push_back(lemma.certificate.small_budget);
    slack.push_back(lemma.certificate.slack);
    report.subset_degeneracy.push_back(lemma.degeneracy);
    report.subset_certificates.push_back(std::move(lemma.certificate));
  }
  const Rational count(report.per_index_count);
  const Rational subsets_count(Binomial(q, 5));
  const PLFunction lhs_total = Sum(lhs);
  const PLFunction rhs_total = Sum(rhs);
  if (!(lhs_total == Rational(2) * subsets_count * T) ||
      !(rhs_total == count * nbar_sum)) {
    throw std::logic_error("subset sums disagree with the counting identity");
  }
  const Rational inv = 1 / count;
  report.certificate = Compare(inv * lhs_total, inv * rhs_total,
                               inv * Sum(budget), label + " (averaged)");
  if (!(count * report.certificate.slack == Sum(slack))) {
    throw std::logic_error("averaged slack != sum of subset slacks / C(q-1,4)");
  }
  for (std::size_t i = 0; i < report.subsets.size(); ++i) {
    if (report.subset_degeneracy[i].kind != DegeneracyCase::kNonDegenerate) {
      report.certificate.notes.push_back(
          "subset " + std::to_string(i) + " degenerate: " +
          ToString(report.subset_degeneracy[i].kind));
    }
  }
  return report;
}

}  // namespace nevan
