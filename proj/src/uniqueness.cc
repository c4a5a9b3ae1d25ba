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

#include <stdexcept>

#include "nevan/error.h"
#include "nevan/parallel.h"

namespace nevan {
namespace {

using RF = RationalFunction;

RF Const(const Rational& c) { return RF::Constant(c); }

void RequireAuxInputs(const RF& f, const RF& g, const RF& a) {
  if (f.IsConstant() || g.IsConstant()) {
    throw DomainError("f and g must be nonconstant");
  }
  if (a.IsZero() || a == Const(1)) {
    throw DomainError("a must differ from 0 and 1, got " + ToString(a));
  }
  for (const RF* h : {&f, &g}) {
    if (h->IsZero() || *h == Const(1) || *h == a) {
      throw DomainError("degenerate denominator: " + ToString(*h) +
                        " coincides with 0, 1 or a");
    }
  }
}

// F = L(f), G = L(g) and the images of the four targets under moebius_L.
struct NormalizedPair {
  RF F;
  RF G;
  std::vector<Target> images;
};

NormalizedPair Normalize(const RF& f, const RF& g,
                         const std::vector<SharingSpec>& specs) {
  if (specs.size() != 4) throw DomainError("need exactly four sharing specs");
  const MoebiusTransform L = moebius_L(specs[0].a, specs[1].a, specs[2].a);
  NormalizedPair out{L.Apply(f), L.Apply(g), {}};
  for (const auto& s : specs) out.images.push_back(L.Apply(s.a));
  return out;
}

PLFunction SumTruncatedGe(const RF& f, const std::vector<Target>& targets,
                          const std::vector<Level>& levels, const Subset& idx,
                          Prime p) {
  std::vector<PLFunction> terms;
  for (int i : idx) {
    const auto j = static_cast<std::size_t>(i);
    terms.push_back(truncated_N_ge(f, targets[j], levels[j], p));
  }
  return Sum(terms);
}

PLFunction SumTruncatedLe(const RF& f, const std::vector<Target>& targets,
                          const std::vector<Level>& levels, const Subset& idx,
                          Prime p) {
  std::vector<PLFunction> terms;
  for (int i : idx) {
    const auto j = static_cast<std::size_t>(i);
    terms.push_back(truncated_N_le(f, targets[j], levels[j], p));
  }
  return Sum(terms);
}

Subset AllIndices(int q) {
  Subset out;
  for (int i = 0; i < q; ++i) out.push_back(i);
  return out;
}

Subset Complement(const Subset& s, int q) {
  Subset out;
  std::size_t k = 0;
  for (int i = 0; i < q; ++i) {
    if (k < s.size() && s[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

void RequireSharing(const RF& f, const RF& g,
                    const SmallFunctionFamily& family,
                    const std::vector<Level>& levels) {
  if (levels.size() != family.size()) {
    throw DomainError("need one truncation level per family member");
  }
  for (std::size_t j = 0; j < family.size(); ++j) {
    SharingWitness w = sharing_set_equal(f, g, {family[j], levels[j]});
    if (!w.equal) throw SharingHypothesisFailed(j, std::move(w));
  }
}

struct Lemma2Sides {
  InequalityCertificate f_version;
  InequalityCertificate g_version;
};

Lemma2Sides Lemma2Certificates(const RF& f, const RF& g,
                               const SmallFunctionFamily& family,
                               const std::vector<Level>& levels,
                               const Subset& subset, const PLFunction& budget,
                               Prime p) {
  const int q = static_cast<int>(family.size());
  const auto& a = family.members();
  const Subset rest = Complement(subset, q);
  const PLFunction rhs = SumTruncatedGe(f, a, levels, subset, p) +
                         SumTruncatedGe(g, a, levels, subset, p);
  const std::string label =
      "sum_{j not in I} Nbar_{k_j)}(r,1/(h-a_j)) <= sum_{j in I} "
      "(Nbar_{(k_j+1}(r,1/(f-a_j)) + Nbar_{(k_j+1}(r,1/(g-a_j))) + S";
  return {Compare(SumTruncatedLe(f, a, levels, rest, p), rhs, budget,
                  label + ", h = f"),
          Compare(SumTruncatedLe(g, a, levels, rest, p), rhs, budget,
                  label + ", h = g")};
}

}  // namespace

std::string ToString(const SharingSpec& spec) {
  return "(" + ToString(spec.a) + ", " + ToString(spec.k) + ")";
}

Polynomial SharingRadical(const RationalFunction& f, const SharingSpec& spec) {
  Polynomial h;
  if (spec.a.is_infinity()) {
    h = f.den();
  } else {
    const RF diff = f - spec.a.function();
    if (diff.IsZero()) {
      throw DomainError("f coincides with the shared function " +
                        ToString(spec.a));
    }
    h = diff.num();
  }
  Polynomial out = Polynomial::Constant(1);
  for (const auto& factor : SquarefreeDecompose(h)) {
    if (spec.k.is_infinite() || factor.multiplicity <= spec.k.value()) {
      out *= factor.factor;
    }
  }
  return out.Monic();
}

SharingWitness sharing_set_equal(const RationalFunction& f,
                                 const RationalFunction& g,
                                 const SharingSpec& spec) {
  const Polynomial rf = SharingRadical(f, spec);
  const Polynomial rg = SharingRadical(g, spec);
  SharingWitness out;
  if (rf == rg) {
    out.f_only = out.g_only = Polynomial::Constant(1);
    return out;
  }
  const Polynomial common = Gcd(rf, rg);
  out.equal = false;
  out.f_only = ExactDiv(rf, common).Monic();
  out.g_only = ExactDiv(rg, common).Monic();
  return out;
}

MoebiusTransform moebius_L(const Target& a1, const Target& a2,
                           const Target& a3) {
  // MoebiusTransform(b1, b2, b3) sends b1, b2, b3 to infinity, 0, 1.
  return MoebiusTransform(a2, a1, a3);
}

RationalFunction build_aux_T(const RationalFunction& f,
                             const RationalFunction& g,
                             const RationalFunction& a) {
  RequireAuxInputs(f, g, a);
  const RF one = Const(1);
  const RF df = f.Derivative();
  const RF dg = g.Derivative();
  const RF da = a.Derivative();
  const RF diff = f - g;
  return df * (da * g - a * dg) * diff / (f * (f - one) * g * (g - a)) -
         dg * (da * f - a * df) * diff / (g * (g - one) * f * (f - a));
}

RationalFunction build_Q(const RationalFunction& f, const RationalFunction& g,
                         const RationalFunction& a) {
  RequireAuxInputs(f, g, a);
  const RF one = Const(1);
  const RF df = f.Derivative();
  const RF dg = g.Derivative();
  const RF da = a.Derivative();
  return df * (da * g - a * dg) * (f - a) * (g - one) -
         dg * (da * f - a * df) * (g - a) * (f - one);
}

RationalFunction build_Q_expanded(const RationalFunction& f,
                                  const RationalFunction& g,
                                  const RationalFunction& a) {
  RequireAuxInputs(f, g, a);
  const RF df = f.Derivative();
  const RF dg = g.Derivative();
  const RF da = a.Derivative();
  const RF aa1 = a * (a - Const(1));
  const RF ada = a * da;
  return da * f * df * g * g - da * f * df * g - aa1 * f * df * dg -
         ada * df * g * g + ada * df * g - da * f * f * g * dg +
         da * f * g * dg + aa1 * df * g * dg + ada * f * f * dg -
         ada * f * dg;
}

RationalFunction build_aux_T_from_Q(const RationalFunction& f,
                                    const RationalFunction& g,
                                    const RationalFunction& a) {
  const RF one = Const(1);
  return (f - g) * build_Q(f, g, a) /
         (f * (f - one) * (f - a) * g * (g - one) * (g - a));
}

RationalFunction build_aux_T_regrouped(const RationalFunction& f,
                                       const RationalFunction& g,
                                       const RationalFunction& a) {
  RequireAuxInputs(f, g, a);
  const RF one = Const(1);
  const RF df = f.Derivative();
  const RF dg = g.Derivative();
  const RF da = a.Derivative();
  const RF f1 = df / (f - one);
  const RF g1 = dg / (g - one);
  const RF f0 = df / f;
  const RF g0 = dg / g;
  const RF fa = (df - da) / (f - a);
  const RF ga = (dg - da) / (g - a);
  return f1 * (g0 - ga) - (f1 - f0) * (da - a * ga) + g1 * (f0 - fa) -
         (g1 - g0) * (da - a * fa);
}

InequalityCertificate aux_m_small_check(const RationalFunction& f,
                                        const RationalFunction& g,
                                        const RationalFunction& a, Prime p) {
  const RF aux = build_aux_T(f, g, a);
  if (aux.IsZero()) throw DomainError("AuxT vanishes identically");
  if (!(build_aux_T_regrouped(f, g, a) == aux)) {
    throw std::logic_error("logarithmic-derivative regrouping of AuxT differs");
  }
  InequalityCertificate cert =
      Compare(proximity_m(aux, p), PLFunction(), SmallBudget({Target(a)}, p),
              "m(r,AuxT) <= S(r,f) + S(r,g)");
  cert.notes.push_back("AuxT equals its logarithmic-derivative regrouping");
  return cert;
}

InequalityCertificate aux_N_bound_check(const RationalFunction& f,
                                        const RationalFunction& g,
                                        const std::vector<SharingSpec>& specs,
                                        Prime p) {
  const NormalizedPair n = Normalize(f, g, specs);
  const RF aux = build_aux_T(n.F, n.G, n.images[3].function());
  if (aux.IsZero()) throw DomainError("AuxT vanishes identically");
  std::vector<Level> levels;
  for (const auto& s : specs) levels.push_back(s.k);
  const Subset all = AllIndices(4);
  return Compare(valence_N(aux, Target::Infinity(), p),
                 SumTruncatedGe(n.F, n.images, levels, all, p) +
                     SumTruncatedGe(n.G, n.images, levels, all, p),
                 SmallBudget(n.images, p),
                 "N(r,AuxT) <= sum_{j=1}^4 (Nbar_{(k_j+1}(r,1/(f-a_j)) + "
                 "Nbar_{(k_j+1}(r,1/(g-a_j))) + S");
}

SharingHypothesisFailed::SharingHypothesisFailed(std::size_t index,
                                                 SharingWitness witness)
    : Error("sharing hypothesis fails for member " + std::to_string(index) +
            ": f-only " + ToString(witness.f_only) + ", g-only " +
            ToString(witness.g_only)),
      index_(index),
      witness_(std::move(witness)) {}

Lemma2Report lemma2_check(const RationalFunction& f, const RationalFunction& g,
                          const SmallFunctionFamily& family,
                          const std::vector<Level>& levels,
                          const Subset& subset, Prime p) {
  if (f == g) throw DomainError("f and g coincide");
  const int q = static_cast<int>(family.size());
  if (subset.size() != 4) throw DomainError("subset must have 4 indices");
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= q || (i > 0 && subset[i] <= subset[i - 1])) {
      throw DomainError("subset indices must be increasing and in range");
    }
  }
  RequireSharing(f, g, family, levels);
  Lemma2Sides sides = Lemma2Certificates(f, g, family, levels, subset,
                                         SmallBudget(family.members(), p), p);
  Lemma2Report report{subset, std::move(sides.f_version),
                      std::move(sides.g_version), std::nullopt, std::nullopt};
  std::vector<SharingSpec> specs;
  for (int i : subset) {
    const auto j = static_cast<std::size_t>(i);
    specs.push_back({family[j], levels[j]});
  }
  try {
    const NormalizedPair n = Normalize(f, g, specs);
    report.aux_m = aux_m_small_check(n.F, n.G, n.images[3].function(), p);
    report.aux_N = aux_N_bound_check(f, g, specs, p);
  } catch (const DomainError& e) {
    report.f_version.notes.push_back(std::string("auxiliary function: ") +
                                     e.what());
  }
  return report;
}

Applicability theorem2_applicable(const std::vector<Level>& levels) {
  const auto q = static_cast<long>(levels.size());
  if (q < 5) throw DomainError("need q >= 5");
  Rational lhs = 0;
  for (const auto& k : levels) lhs += k.InverseSucc();
  const Rational rhs = Ratio(2 * q * (q - 4), 5 * (q + 4));
  Rational margin = rhs - lhs;
  return {margin > 0, margin};
}

Rational theorem3_threshold(int q) {
  if (q < 5) throw DomainError("need q >= 5");
  return Ratio(3 * (q + 4), 2 * (q - 4));
}

int theorem3_minimal_k(int q) {
  return static_cast<int>(Floor(theorem3_threshold(q)).get_num().get_si()) + 1;
}

InequalityCertificate lemma3_check(const RationalFunction& f,
                                   const SmallFunctionFamily& family, Level k,
                                   Prime p) {
  if (f.IsConstant()) throw DomainError("f must be nonconstant");
  const auto q = static_cast<long>(family.size());
  std::vector<PLFunction> terms;
  for (const auto& a : family.members()) {
    terms.push_back(truncated_N_ge(f, a, k, p));
  }
  const Rational coefficient =
      k.is_infinite() ? Rational(0) : Ratio(3 * q, 5L * k.value());
  InequalityCertificate cert =
      Compare(Sum(terms), coefficient * characteristic_T(f, p),
              SmallBudget(family.members(), p),
              "sum_i Nbar_{(k+1}(r,1/(f-a_i)) <= (3q/(5k)) T(r,f) + S, k = " +
                  ToString(k));
  if (q < 5) {
    cert.notes.push_back("q < 5: the averaged second main theorem step "
                         "requires q >= 5");
  }
  return cert;
}

Theorem2Report theorem2_check(const RationalFunction& f,
                              const RationalFunction& g,
                              const SmallFunctionFamily& family,
                              const std::vector<Level>& levels, Prime p) {
  if (f == g) throw DomainError("f and g coincide");
  if (f.IsConstant() || g.IsConstant()) {
    throw DomainError("f and g must be nonconstant");
  }
  const int q = static_cast<int>(family.size());
  Theorem2Report report;
  report.applicability = theorem2_applicable(levels);
  RequireSharing(f, g, family, levels);
  report.subsets = Subsets(q, 4);
  report.per_index_count = Binomial(q - 1, 3);
  for (const Integer& c : IndexOccurrences(report.subsets, q)) {
    if (c != report.per_index_count) {
      throw std::logic_error("subset occurrence count != C(q-1,3)");
    }
  }
  const auto& a = family.members();
  const PLFunction budget = SmallBudget(a, p);
  const std::vector<Lemma2Sides> sides =
      ParallelMap(report.subsets.size(), [&](std::size_t i) {
        return Lemma2Certificates(f, g, family, levels, report.subsets[i],
                                  budget, p);
      });

  const Subset all = AllIndices(q);
  const PLFunction ge_sum = SumTruncatedGe(f, a, levels, all, p) +
                            SumTruncatedGe(g, a, levels, all, p);
  const Rational scale = Rational(4) / Rational(report.per_index_count);
  const Rational outside_count(Binomial(q - 1, 4));
  auto average = [&](bool use_f) {
    std::vector<PLFunction> lhs, rhs, budgets;
    for (const auto& s : sides) {
      const InequalityCertificate& c = use_f ? s.f_version : s.g_version;
      lhs.push_back(c.lhs);
      rhs.push_back(c.rhs);
      budgets.push_back(c.small_budget);
    }
    const PLFunction le_sum =
        SumTruncatedLe(use_f ? f : g, a, levels, all, p);
    const PLFunction lhs_total = Sum(lhs);
    const PLFunction rhs_total = Sum(rhs);
    if (!(lhs_total == outside_count * le_sum) ||
        !(rhs_total == Rational(report.per_index_count) * ge_sum)) {
      throw std::logic_error("subset sums disagree with the counting identity");
    }
    return Compare(scale * lhs_total, scale * rhs_total, scale * Sum(budgets),
                   std::string("(q-4) sum_j Nbar_{k_j)}(r,1/(") +
                       (use_f ? "f" : "g") +
                       "-a_j)) <= 4 sum_j (Nbar_{(k_j+1}(f) + "
                       "Nbar_{(k_j+1}(g)) + S (averaged)");
  };
  report.averaged_f = average(true);
  report.averaged_g = average(false);

  std::vector<PLFunction> nbar;
  for (const auto& t : a) {
    nbar.push_back(reduced_N(f, t, p));
    nbar.push_back(reduced_N(g, t, p));
  }
  const Rational qq(q);
  report.combined =
      Compare((qq - 4) * Sum(nbar), (qq + 4) * ge_sum, Rational(2) * budget,
              "(q-4) sum_j (Nbar(f) + Nbar(g)) <= (q+4) sum_j "
              "(Nbar_{(k_j+1}(f) + Nbar_{(k_j+1}(g)) + S");
  Rational inverse_sum = 0;
  for (const auto& k : levels) inverse_sum += k.InverseSucc();
  const PLFunction t_sum = characteristic_T(f, p) + characteristic_T(g, p);
  report.level_bound =
      Compare(ge_sum, inverse_sum * t_sum, Rational(2) * budget,
              "sum_j (Nbar_{(k_j+1}(f) + Nbar_{(k_j+1}(g)) <= "
              "sum_j 1/(k_j+1) (T(f) + T(g)) + S");
  report.conclusion =
      Compare(report.applicability.margin * t_sum, PLFunction(),
              Rational(2) * budget, "margin * (T(f) + T(g)) <= S");
  return report;
}

std::string ToString(UniquenessVerdict v) {
  switch (v) {
    case UniquenessVerdict::kIdentical: return "Identical";
    case UniquenessVerdict::kHypothesisFailed: return "HypothesisFailed";
    case UniquenessVerdict::kInconclusive: return "Inconclusive";
    case UniquenessVerdict::kTheoremContradiction: return "TheoremContradiction";
  }
  return "?";
}

UniquenessDecision uniqueness_decide(const RationalFunction& f,
                                     const RationalFunction& g,
                                     const SmallFunctionFamily& family,
                                     const std::vector<Level>& levels) {
  if (f.IsConstant() || g.IsConstant()) {
    throw DomainError("f and g must be nonconstant");
  }
  if (levels.size() != family.size()) {
    throw DomainError("need one truncation level per family member");
  }
  UniquenessDecision out;
  if (f == g) {
    out.verdict = UniquenessVerdict::kIdentical;
    out.reason = "f == g";
    return out;
  }
  bool shared = true;
  for (std::size_t j = 0; j < family.size(); ++j) {
    try {
      out.sharing.push_back(sharing_set_equal(f, g, {family[j], levels[j]}));
    } catch (const DomainError& e) {
      out.verdict = UniquenessVerdict::kHypothesisFailed;
      out.reason = "member " + std::to_string(j) + ": " + e.what();
      return out;
    }
    if (!out.sharing.back().equal && shared) {
      shared = false;
      out.reason = "E(a_" + std::to_string(j + 1) + ") differs";
    }
  }
  if (!shared) {
    out.verdict = UniquenessVerdict::kHypothesisFailed;
    return out;
  }
  const int q = static_cast<int>(family.size());
  if (q < 5) {
    out.reason = "q = " + std::to_string(q) + " < 5";
    return out;
  }
  out.theorem2 = theorem2_applicable(levels);
  bool equal_levels = true;
  for (const auto& k : levels) equal_levels = equal_levels && k == levels[0];
  out.theorem3_applies =
      equal_levels && (levels[0].is_infinite() ||
                       Rational(levels[0].value()) > theorem3_threshold(q));
  if (!out.theorem2->applicable && !out.theorem3_applies) {
    out.reason = "level hypothesis fails (margin " +
                 ToString(out.theorem2->margin) + ")";
    return out;
  }
  if (!family.AllConstant()) {
    out.reason = "smallness of nonconstant members is not verifiable";
    return out;
  }
  out.verdict = UniquenessVerdict::kTheoremContradiction;
  out.reason = "all hypotheses verified but f != g";
  return out;
}

}  // namespace nevan
