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

// Second main theorem for small functions: Moebius normalization, the
// Wronskian-type determinant H, degeneracy analysis and the five-function
// lemma with its averaged q-function consequence
//
//   (2q/5) T(r,f) <= sum_{i=1}^q Nbar(r, 1/(f-a_i)) + S(r,f).

#ifndef NEVAN_SMT_ENGINE_H_
#define NEVAN_SMT_ENGINE_H_

#include <optional>
#include <string>
#include <vector>

#include "nevan/certificate.h"
#include "nevan/combinatorics.h"
#include "nevan/error.h"
#include "nevan/nevanlinna.h"
#include "nevan/pl_function.h"
#include "nevan/rational_function.h"

namespace nevan {

// Pairwise distinct targets a_1..a_q playing the role of small functions.
// Smallness is not enforced; it is measured by SmallnessRatios and absorbed
// into certificates through SmallBudget.
class SmallFunctionFamily {
 public:
  // Throws DomainError on duplicates.
  explicit SmallFunctionFamily(std::vector<Target> members);

  const std::vector<Target>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const Target& operator[](std::size_t i) const { return members_[i]; }

  // sigma_i = final slope of T(r, a_i) / final slope of T(r, f).
  std::vector<Rational> SmallnessRatios(const RationalFunction& f) const;
  bool AllConstant() const;
  // The members indexed by `subset`.
  SmallFunctionFamily Select(const Subset& subset) const;

 private:
  std::vector<Target> members_;
};

std::string ToString(const SmallFunctionFamily& family);

// The Moebius map L(w) = (w - a2)/(w - a1) * (a3 - a1)/(a3 - a2), with the
// usual limits when one of a1, a2, a3 is infinity. L sends a1, a2, a3 to
// infinity, 0, 1.
class MoebiusTransform {
 public:
  // The identity: (a1, a2, a3) = (infinity, 0, 1).
  MoebiusTransform();
  // Throws DomainError unless a1, a2, a3 are pairwise distinct.
  MoebiusTransform(Target a1, Target a2, Target a3);

  Target Apply(const Target& w) const;
  RationalFunction Apply(const RationalFunction& w) const;
  // L^{-1}.
  Target Invert(const Target& w) const;

  const Target& a1() const { return a1_; }
  const Target& a2() const { return a2_; }
  const Target& a3() const { return a3_; }
  bool IsIdentity() const;

 private:
  Target a1_;
  Target a2_;
  Target a3_;
};

struct MoebiusNormalization {
  RationalFunction F;
  MoebiusTransform transform;
};

// F = L(f) with a1, a2, a3 sent to infinity, 0, 1.
MoebiusNormalization moebius_normalize(const RationalFunction& f,
                                       const Target& a1, const Target& a2,
                                       const Target& a3);

// H = det | f f'      f'    f (f-1)     |
//          | a4 a4'    a4'   a4 (a4-1)   |
//          | a5 a5'    a5'   a5 (a5-1)   |
// Requires f nonconstant, a4, a5 not in {0, 1} and a4 != a5.
RationalFunction build_H(const RationalFunction& f, const RationalFunction& a4,
                         const RationalFunction& a5);

// The bracket
//   (a4'/a4 - a5'/a5)(f'/(f-1) - a5'/(a5-1))
//     - (a4'/(a4-1) - a5'/(a5-1))(f'/f - a5'/a5),
// which satisfies H = -f(f-1) a4(a4-1) a5(a5-1) * bracket.
RationalFunction factored_bracket(const RationalFunction& f,
                                  const RationalFunction& a4,
                                  const RationalFunction& a5);

// H through the factored form above.
RationalFunction build_H_factored(const RationalFunction& f,
                                  const RationalFunction& a4,
                                  const RationalFunction& a5);

// H with the first row rewritten around a_i, i in {2, 3, 4, 5} where
// a_2 = 0, a_3 = 1:
//   (g_i, f' - a_i', h_i),
//   g_i = (f-a_i)(f'-a_i') + a_i'(f-a_i) + a_i(f'-a_i'),
//   h_i = (f-a_i)^2 + (2a_i - 1)(f-a_i).
RationalFunction build_H_row_rewrite(const RationalFunction& f,
                                     const RationalFunction& a4,
                                     const RationalFunction& a5, int i);

enum class DegeneracyCase {
  kNonDegenerate,
  kCase1,  // a4'/a4 == a5'/a5
  kCase2,  // a4'/(a4-1) == a5'/(a5-1)
  kCase3,  // a4'/a4 - a5'/a5 == a4'/(a4-1) - a5'/(a5-1), both nonzero
  kCase4Consistent,  // H == 0 although none of the identities above holds
};

std::string ToString(DegeneracyCase c);

struct DegeneracyVerdict {
  DegeneracyCase kind = DegeneracyCase::kNonDegenerate;
  // The identity that was verified exactly, or a description.
  std::string witness;
};

// NonDegenerate iff H != 0; otherwise the first of Cases 1-3 whose identity
// holds, else Case4Consistent.
DegeneracyVerdict degeneracy_case(const RationalFunction& f,
                                  const RationalFunction& a4,
                                  const RationalFunction& a5);

// log_p delta(r), delta = min{1, |a4|, |a5|, |a4-1|, |a5-1|, |a4-a5|}.
PLFunction delta_r(const RationalFunction& a4, const RationalFunction& a5,
                   Prime p);

// log^+ (1/delta) <= m(1/a4) + m(1/a5) + m(1/(a4-1)) + m(1/(a5-1))
//                     + m(1/(a4-a5)).
// Ultrametrically the additive constant is 0.
InequalityCertificate delta_bound_check(const RationalFunction& a4,
                                        const RationalFunction& a5, Prime p);

// Raised when the normalized family makes H vanish identically.
class DegenerateFamily : public Error {
 public:
  explicit DegenerateFamily(DegeneracyVerdict verdict);
  const DegeneracyVerdict& verdict() const { return verdict_; }

 private:
  DegeneracyVerdict verdict_;
};

struct Lemma1Report {
  // 2T(r,f) <= sum_i Nbar(r, 1/(f-a_i)) + budget, on the original f.
  InequalityCertificate certificate;
  MoebiusNormalization normalization;
  // Images of a4, a5 under the normalization.
  Target A4 = Target::Infinity();
  Target A5 = Target::Infinity();
  DegeneracyVerdict degeneracy;
  // Set when A4 or A5 is constant: the constants instance that replaces the
  // determinant argument.
  std::optional<InequalityCertificate> constant_fallback;
  // On the normalized F, when the determinant route is taken:
  //   4T(F) <= Nbar(1/F) + Nbar(1/(F-1)) + Nbar(1/(F-A4)) + Nbar(1/(F-A5))
  //            + T(H) + budget
  std::optional<InequalityCertificate> four_t_bound;
  //   T(H) <= 2T(F) + Nbar(F) + budget
  std::optional<InequalityCertificate> h_bound;
  std::optional<InequalityCertificate> delta_bound;
  std::optional<RationalFunction> H;
  std::vector<Rational> smallness;
};

// Full analysis; never throws for degenerate families (see degeneracy).
// Requires exactly 5 members and f nonconstant.
Lemma1Report lemma1_analyze(const RationalFunction& f,
                            const SmallFunctionFamily& family, Prime p);

// As lemma1_analyze, but throws DegenerateFamily when H == 0.
Lemma1Report lemma1_check(const RationalFunction& f,
                          const SmallFunctionFamily& family, Prime p);

enum class AveragingMode { kDirect, kAveraged };

std::string ToString(AveragingMode mode);
AveragingMode ParseAveragingMode(const std::string& name);

struct Theorem1Report {
  AveragingMode mode = AveragingMode::kDirect;
  // (2q/5) T(r,f) <= sum_i Nbar(r, 1/(f-a_i)) + budget.
  InequalityCertificate certificate;
  // Averaged mode only.
  std::vector<Subset> subsets;
  std::vector<InequalityCertificate> subset_certificates;
  std::vector<DegeneracyVerdict> subset_degeneracy;
  Integer per_index_count;  // C(q-1, 4)
};

// Direct mode compares both sides at once. Averaged mode runs the lemma on
// every 5-subset, sums the certificates, checks that each index occurs
// C(q-1,4) times and divides by C(q-1,4); its slack times C(q-1,4) equals
// the sum of the subset slacks exactly. Requires q >= 5.
Theorem1Report theorem1_check(const RationalFunction& f,
                              const SmallFunctionFamily& family,
                              AveragingMode mode, Prime p);

}  // namespace nevan

#endif  // NEVAN_SMT_ENGINE_H_
