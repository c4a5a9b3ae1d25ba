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

// Exact certificates for inequalities lhs(s) <= rhs(s) + "small" between
// piecewise-linear functions.
//
// The error term S(r,f) of an asymptotic inequality is never left
// unquantified: a certificate carries an explicit small_budget function and
// reports the least ratio rho >= 0 with slack + rho * small_budget >= 0 on
// the whole domain.

#ifndef NEVAN_CERTIFICATE_H_
#define NEVAN_CERTIFICATE_H_

#include <optional>
#include <string>
#include <vector>

#include "nevan/pl_function.h"

namespace nevan {

enum class VerdictKind {
  kHoldsExactly,
  kHoldsUpToConstant,
  kHoldsWithinSmallBudget,
  kViolated,
};

std::string ToString(VerdictKind kind);
// Inverse of ToString; throws DomainError on unknown names.
VerdictKind ParseVerdictKind(const std::string& name);

struct Verdict {
  VerdictKind kind = VerdictKind::kHoldsExactly;
  // kHoldsUpToConstant: C = -inf slack. kHoldsWithinSmallBudget: the ratio.
  // kViolated: a witness s with slack(s) < -small_budget(s). Zero otherwise.
  Rational value;

  bool holds() const { return kind != VerdictKind::kViolated; }
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct InequalityCertificate {
  std::string label;
  PLFunction lhs;
  PLFunction rhs;
  PLFunction slack;  // rhs - lhs
  PLFunction small_budget;
  // inf of slack over the domain; std::nullopt when unbounded below.
  std::optional<Rational> min_slack;
  // final_slope(rhs) - final_slope(lhs).
  Rational final_slope_gap;
  // Least rho >= 0 with slack + rho * small_budget >= 0 everywhere;
  // std::nullopt when no such rho exists.
  std::optional<Rational> min_budget_ratio;
  Verdict verdict;
  std::vector<std::string> notes;

  friend bool operator==(const InequalityCertificate&,
                         const InequalityCertificate&) = default;
};

// Builds the certificate for lhs <= rhs (+ small_budget) on the common
// domain. The verdict is the first that applies of
//   HoldsExactly            slack >= 0 everywhere;
//   HoldsUpToConstant(C)    slack bounded below and final_slope_gap >= 0;
//   HoldsWithinSmallBudget  some finite rho >= 0 exists (value = least rho);
//   Violated(s)             otherwise, with a witness s.
InequalityCertificate Compare(const PLFunction& lhs, const PLFunction& rhs,
                              const PLFunction& small_budget,
                              std::string label = "");

// Least rho >= 0 with f + rho * g >= 0 on the common domain, if any.
std::optional<Rational> MinimalRatio(const PLFunction& f, const PLFunction& g);

}  // namespace nevan

#endif  // NEVAN_CERTIFICATE_H_
