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

// Nevanlinna functionals of rational functions over (Q, v_p) as exact
// piecewise-linear functions of s = log_p r, r >= 1.
//
// Counting is normalized at r = 1:
//
//   N(s, 1/h) = integral_1^r n(t, 1/h) dt/t
//             = sum over zeros z of m(z) * max(0, s - max(0, log_p|z|)),
//
// so N(0) = 0, a zero at the origin (or anywhere in the closed unit disk)
// contributes m*s, and by Jensen N(s, 1/h) = log_p|h|_r - log_p|h|_1. The
// difference from counting normalized at r = 0 is a constant, invisible to
// every O(1) / S(r,f) statement.
//
//   m(r,f) = log^+ |f|_r,  T(r,f) = m(r,f) + N(r,f).

#ifndef NEVAN_NEVANLINNA_H_
#define NEVAN_NEVANLINNA_H_

#include <optional>
#include <string>
#include <vector>

#include "nevan/certificate.h"
#include "nevan/newton.h"
#include "nevan/pl_function.h"
#include "nevan/rational_function.h"

namespace nevan {

// A truncation level k: a positive integer or +infinity.
class Level {
 public:
  static Level Infinite() { return Level(); }
  explicit Level(int k);

  bool is_infinite() const { return !k_.has_value(); }
  // Requires !is_infinite().
  int value() const;
  // 1/(k+1), zero for k = infinity.
  Rational InverseSucc() const;

  friend bool operator==(const Level&, const Level&) = default;

 private:
  Level() = default;
  std::optional<int> k_;
};

std::string ToString(const Level& k);
// "inf" or a positive integer.
Level ParseLevel(const std::string& text);

enum class CountWeight { kWithMultiplicity, kDistinct };

// Which zeros to count: multiplicity in [min_multiplicity, max_multiplicity].
struct MultiplicityWindow {
  int min_multiplicity = 1;
  std::optional<int> max_multiplicity;  // nullopt: unbounded

  bool Admits(int m) const {
    return m >= min_multiplicity && (!max_multiplicity || m <= *max_multiplicity);
  }
};

// Counting function of the zeros described by `profile`.
PLFunction CountingFunction(const MultiplicityProfile& profile,
                            CountWeight weight,
                            const MultiplicityWindow& window = {});

// Profile of the zeros of f - a (the poles of f when a is infinity).
// Throws DomainError when f - a vanishes identically.
MultiplicityProfile TargetProfile(const RationalFunction& f, const Target& a,
                                  Prime p);

// N(r, 1/(f-a)).
PLFunction valence_N(const RationalFunction& f, const Target& a, Prime p);
// Nbar(r, 1/(f-a)): distinct zeros.
PLFunction reduced_N(const RationalFunction& f, const Target& a, Prime p);
// Nbar_{k)}: distinct zeros of multiplicity <= k.
PLFunction truncated_N_le(const RationalFunction& f, const Target& a, Level k,
                          Prime p);
// Nbar_{(k+1}: distinct zeros of multiplicity >= k+1 (zero for k = inf).
PLFunction truncated_N_ge(const RationalFunction& f, const Target& a, Level k,
                          Prime p);

// log_p |f|_r; requires f != 0.
PLFunction log_norm(const RationalFunction& f, Prime p);
// m(r, f) = log^+ |f|_r (zero for f == 0).
PLFunction proximity_m(const RationalFunction& f, Prime p);
// T(r, f) = m(r, f) + N(r, f); its final slope is max(deg num, deg den).
PLFunction characteristic_T(const RationalFunction& f, Prime p);
// T(r, a) for a target; zero for infinity.
PLFunction characteristic_T(const Target& a, Prime p);

// The function whose poles are the a-points of f: 1/(f-a), or f itself for
// a = infinity.
RationalFunction InvertAt(const RationalFunction& f, const Target& a);

struct NevanlinnaReport {
  Target target = Target::Infinity();
  PLFunction m;     // m(r, 1/(f-a))
  PLFunction N;     // N(r, 1/(f-a))
  PLFunction Nbar;  // Nbar(r, 1/(f-a))
  PLFunction T;     // T(r, 1/(f-a)) == m + N
};

NevanlinnaReport MakeReport(const RationalFunction& f, const Target& a,
                            Prime p);

// Budget standing in for S(r,f) given small functions a_1..a_q:
// sum_i T(r, a_i) + 1.
PLFunction SmallBudget(const std::vector<Target>& family, Prime p);

// First Main Theorem: |T(r, 1/(f-c)) - T(r, f)| bounded. The certificate
// compares lhs = T(r, 1/(f-c)) with rhs = T(r, f); the verdict is two-sided:
// HoldsUpToConstant(C) with C = sup |slack| when the final slopes agree.
InequalityCertificate fmt_check(const RationalFunction& f, const Target& c,
                                Prime p);

// Logarithmic derivative lemma in its exact ultrametric form:
// m(r, f^(k)/f) == 0 on r >= 1. Throws DomainError for constant f.
InequalityCertificate ldl_check(const RationalFunction& f, int k, Prime p);

// Second main theorem for constants:
//   (q-2) T(r,f) <= sum_j Nbar(r, 1/(f-a_j)) - s + C.
// Targets must be q >= 3 pairwise distinct constants or infinity.
InequalityCertificate smt_constants_check(const RationalFunction& f,
                                          const std::vector<Target>& targets,
                                          Prime p);

// Throws DomainError unless the targets are pairwise distinct.
void RequireDistinct(const std::vector<Target>& targets);

}  // namespace nevan

#endif  // NEVAN_NEVANLINNA_H_
