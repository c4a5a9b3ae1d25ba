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

#include "nevan/certificate.h"

#include <algorithm>

#include "nevan/error.h"

namespace nevan {

std::string ToString(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::kHoldsExactly:
      return "HoldsExactly";
    case VerdictKind::kHoldsUpToConstant:
      return "HoldsUpToConstant";
    case VerdictKind::kHoldsWithinSmallBudget:
      return "HoldsWithinSmallBudget";
    case VerdictKind::kViolated:
      return "Violated";
  }
  return "?";
}

VerdictKind ParseVerdictKind(const std::string& name) {
  for (VerdictKind k :
       {VerdictKind::kHoldsExactly, VerdictKind::kHoldsUpToConstant,
        VerdictKind::kHoldsWithinSmallBudget, VerdictKind::kViolated}) {
    if (ToString(k) == name) return k;
  }
  throw DomainError("unknown verdict '" + name + "'");
}

std::optional<Rational> MinimalRatio(const PLFunction& f, const PLFunction& g) {
  // f + rho*g is piecewise linear with vertices among those of f and g, so
  // it is nonnegative iff it is at every vertex and, on an unbounded domain,
  // its final slope is nonnegative. Each such condition is a half-line in rho.
  const PLFunction sum = f + g;  // only used for its vertex set
  Rational lower = 0;
  std::optional<Rational> upper;
  auto constrain = [&](const Rational& a, const Rational& b) -> bool {
    // a + rho*b >= 0
    if (b > 0) {
      lower = std::max(lower, Rational(-a / b));
    } else if (b < 0) {
      const Rational bound = a / -b;
      upper = upper ? std::min(*upper, bound) : bound;
    } else if (a < 0) {
      return false;
    }
    return true;
  };
  std::vector<Rational> points;
  for (const auto& p : f.pieces()) points.push_back(p.start);
  for (const auto& p : g.pieces()) points.push_back(p.start);
  if (sum.domain_end()) points.push_back(*sum.domain_end());
  for (const Rational& s : points) {
    if (!sum.Contains(s)) continue;
    if (!constrain(f.Eval(s), g.Eval(s))) return std::nullopt;
  }
  if (!sum.has_finite_domain() &&
      !constrain(f.final_slope(), g.final_slope())) {
    return std::nullopt;
  }
  if (upper && *upper < lower) return std::nullopt;
  return lower;
}

namespace {

// A point where f + g < 0, given that one exists.
Rational NegativeWitness(const PLFunction& f, const PLFunction& g) {
  const PLFunction sum = f + g;
  for (const Rational& s : sum.Vertices()) {
    if (sum.Eval(s) < 0) return s;
  }
  // Unbounded domain with negative final slope: walk past the last vertex.
  const Rational& b = sum.last_breakpoint();
  const Rational v = sum.Eval(b);
  return b + Floor(v / -sum.final_slope()) + 1;
}

}  // namespace

InequalityCertificate Compare(const PLFunction& lhs, const PLFunction& rhs,
                              const PLFunction& small_budget,
                              std::string label) {
  InequalityCertificate cert;
  cert.label = std::move(label);
  cert.lhs = lhs;
  cert.rhs = rhs;
  cert.slack = rhs - lhs;
  cert.small_budget = small_budget;
  cert.min_slack = cert.slack.Infimum();
  cert.final_slope_gap = cert.slack.final_slope();
  cert.min_budget_ratio = MinimalRatio(cert.slack, small_budget);

  if (cert.min_slack && *cert.min_slack >= 0) {
    cert.verdict = {VerdictKind::kHoldsExactly, 0};
  } else if (cert.min_slack && cert.final_slope_gap >= 0) {
    cert.verdict = {VerdictKind::kHoldsUpToConstant, -*cert.min_slack};
  } else if (cert.min_budget_ratio) {
    cert.verdict = {VerdictKind::kHoldsWithinSmallBudget,
                    *cert.min_budget_ratio};
  } else {
    cert.verdict = {VerdictKind::kViolated,
                    NegativeWitness(cert.slack, small_budget)};
  }
  return cert;
}

}  // namespace nevan
