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

// Uniqueness of functions sharing small functions: sharing sets, the
// auxiliary function AuxT of two functions f, g and a small function a, and
// the verifiers for the truncated-count lemmas and the uniqueness theorems.
//
// AuxT is the auxiliary function
//
//   AuxT = f'(a'g - a g')(f-g) / (f(f-1) g(g-a))
//        - g'(a'f - a f')(f-g) / (g(g-1) f(f-a));
//
// it is named AuxT to keep it apart from the characteristic function T(r,f).

#ifndef NEVAN_UNIQUENESS_H_
#define NEVAN_UNIQUENESS_H_

#include <optional>
#include <string>
#include <vector>

#include "nevan/certificate.h"
#include "nevan/combinatorics.h"
#include "nevan/nevanlinna.h"
#include "nevan/rational_function.h"
#include "nevan/smt_engine.h"

namespace nevan {

// E(a, k, f): distinct zeros of f - a of multiplicity <= k (poles for
// a = infinity).
struct SharingSpec {
  Target a = Target::Infinity();
  Level k = Level::Infinite();
};

std::string ToString(const SharingSpec& spec);

// Monic product of the squarefree factors of multiplicity <= k of the
// polynomial whose zeros are the a-points of f. Its zero set in the
// algebraic closure is exactly E(a, k, f). Throws DomainError if f == a.
Polynomial SharingRadical(const RationalFunction& f, const SharingSpec& spec);

struct SharingWitness {
  bool equal = true;
  // When unequal: the part of each radical missing from the other, i.e.
  // points of E(a,k,f) \ E(a,k,g) and of E(a,k,g) \ E(a,k,f).
  Polynomial f_only;
  Polynomial g_only;
};

SharingWitness sharing_set_equal(const RationalFunction& f,
                                 const RationalFunction& g,
                                 const SharingSpec& spec);

// L(w) = (w - a1)/(w - a2) * (a3 - a2)/(a3 - a1): a1, a2, a3 go to
// 0, infinity, 1.
MoebiusTransform moebius_L(const Target& a1, const Target& a2,
                           const Target& a3);

// AuxT(f, g, a) as defined above. Requires f, g nonconstant, a not in
// {0, 1}, and none of f, f-1, f-a, g, g-1, g-a identically zero.
RationalFunction build_aux_T(const RationalFunction& f,
                             const RationalFunction& g,
                             const RationalFunction& a);

// Q = f'(a'g - a g')(f-a)(g-1) - g'(a'f - a f')(g-a)(f-1), so that
// AuxT = (f-g) Q / (f(f-1)(f-a) g(g-1)(g-a)).
RationalFunction build_Q(const RationalFunction& f, const RationalFunction& g,
                         const RationalFunction& a);

// Q through its ten-term expansion
//   a'ff'g^2 - a'ff'g - a(a-1)ff'g' - aa'f'g^2 + aa'f'g - a'f^2gg'
//   + a'fgg' + a(a-1)f'gg' + aa'f^2g' - aa'fg'.
RationalFunction build_Q_expanded(const RationalFunction& f,
                                  const RationalFunction& g,
                                  const RationalFunction& a);

// AuxT through (f-g) Q / (f(f-1)(f-a) g(g-1)(g-a)).
RationalFunction build_aux_T_from_Q(const RationalFunction& f,
                                    const RationalFunction& g,
                                    const RationalFunction& a);

// AuxT regrouped into logarithmic derivatives:
//   f'/(f-1) (g'/g - (g'-a')/(g-a)) - (f'/(f-1) - f'/f)(a' - a(g'-a')/(g-a))
// + g'/(g-1) (f'/f - (f'-a')/(f-a)) - (g'/(g-1) - g'/g)(a' - a(f'-a')/(f-a)).
RationalFunction build_aux_T_regrouped(const RationalFunction& f,
                                       const RationalFunction& g,
                                       const RationalFunction& a);

// m(r, AuxT) <= budget with budget = T(r, a) + 1. Throws DomainError when
// AuxT == 0.
InequalityCertificate aux_m_small_check(const RationalFunction& f,
                                        const RationalFunction& g,
                                        const RationalFunction& a, Prime p);

// N(r, AuxT) <= sum_{j=1}^4 (Nbar_{(k_j+1}(r, 1/(f-a_j))
//                            + Nbar_{(k_j+1}(r, 1/(g-a_j))) + budget,
// after moving a_1, a_2, a_3 to 0, infinity, 1 with moebius_L; AuxT is
// built with a = L(a_4). Throws DomainError when AuxT == 0.
InequalityCertificate aux_N_bound_check(const RationalFunction& f,
                                        const RationalFunction& g,
                                        const std::vector<SharingSpec>& specs,
                                        Prime p);

// A sharing hypothesis E(a_j,k_j,f) = E(a_j,k_j,g) does not hold.
class SharingHypothesisFailed : public Error {
 public:
  SharingHypothesisFailed(std::size_t index, SharingWitness witness);
  std::size_t index() const { return index_; }
  const SharingWitness& witness() const { return witness_; }

 private:
  std::size_t index_;
  SharingWitness witness_;
};

struct Lemma2Report {
  Subset subset;  // the four indices i_1..i_4
  // sum_{j not in subset} Nbar_{k_j)}(r, 1/(h-a_j))
  //   <= sum_{s} (Nbar_{(k+1}(r,1/(f-a_is)) + Nbar_{(k+1}(r,1/(g-a_is)))
  //      + budget,
  // for h = f and for h = g.
  InequalityCertificate f_version;
  InequalityCertificate g_version;
  // Auxiliary-function certificates on the four subset members, when
  // AuxT != 0.
  std::optional<InequalityCertificate> aux_m;
  std::optional<InequalityCertificate> aux_N;
};

// Requires f != g, levels.size() == family.size() and every sharing
// hypothesis verified (throws SharingHypothesisFailed otherwise).
Lemma2Report lemma2_check(const RationalFunction& f, const RationalFunction& g,
                          const SmallFunctionFamily& family,
                          const std::vector<Level>& levels,
                          const Subset& subset, Prime p);

struct Applicability {
  bool applicable = false;
  Rational margin;  // rhs - lhs of the hypothesis inequality
};

// sum_j 1/(k_j+1) < 2q(q-4)/(5(q+4)); margin = rhs - lhs. Requires q >= 5.
Applicability theorem2_applicable(const std::vector<Level>& levels);

// 3(q+4)/(2(q-4)); the hypothesis of the equal-level theorem is k > it.
// Requires q >= 5.
Rational theorem3_threshold(int q);
// floor(threshold) + 1.
int theorem3_minimal_k(int q);

// sum_i Nbar_{(k+1}(r, 1/(f-a_i)) <= (3q/(5k)) T(r,f) + budget.
// For q < 5 the certificate is computed and a note flags that the
// averaged second main theorem behind the lemma needs q >= 5.
InequalityCertificate lemma3_check(const RationalFunction& f,
                                   const SmallFunctionFamily& family, Level k,
                                   Prime p);

struct Theorem2Report {
  Applicability applicability;
  std::vector<Subset> subsets;  // all 4-subsets
  Integer per_index_count;      // C(q-1, 3)
  // (q-4) sum_j Nbar_{k_j)}(h) <= 4 sum_j (Nbar_{(k_j+1}(f) + Nbar_{(k_j+1}(g))
  // obtained by summing the lemma over all 4-subsets, h = f and h = g.
  InequalityCertificate averaged_f;
  InequalityCertificate averaged_g;
  // (q-4) sum_j (Nbar(f) + Nbar(g)) <= (q+4) sum_j (Nbar_{(k_j+1}(f) + ...)
  InequalityCertificate combined;
  // sum_j (Nbar_{(k_j+1}(f) + Nbar_{(k_j+1}(g))
  //   <= sum_j 1/(k_j+1) (T(f) + T(g))
  InequalityCertificate level_bound;
  // margin * (T(f) + T(g)) <= budget: expected to fail when f != g.
  InequalityCertificate conclusion;
};

// Runs the averaged lemma chain for f != g under verified sharing.
Theorem2Report theorem2_check(const RationalFunction& f,
                              const RationalFunction& g,
                              const SmallFunctionFamily& family,
                              const std::vector<Level>& levels, Prime p);

enum class UniquenessVerdict {
  kIdentical,
  kHypothesisFailed,
  kInconclusive,
  kTheoremContradiction,
};

std::string ToString(UniquenessVerdict v);

struct UniquenessDecision {
  UniquenessVerdict verdict = UniquenessVerdict::kInconclusive;
  std::string reason;
  std::vector<SharingWitness> sharing;
  std::optional<Applicability> theorem2;
  bool theorem3_applies = false;
};

// Decides whether the uniqueness theorems force f == g. Smallness can only
// be verified for families of constants (and infinity); other families are
// Inconclusive. TheoremContradiction means every hypothesis holds, a theorem
// applies and still f != g.
UniquenessDecision uniqueness_decide(const RationalFunction& f,
                                     const RationalFunction& g,
                                     const SmallFunctionFamily& family,
                                     const std::vector<Level>& levels);

}  // namespace nevan

#endif  // NEVAN_UNIQUENESS_H_
