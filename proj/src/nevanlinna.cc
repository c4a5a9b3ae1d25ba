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

#include "nevan/nevanlinna.h"

#include <map>
#include <stdexcept>

#include "nevan/error.h"

namespace nevan {

Level::Level(int k) : k_(k) {
  if (k < 1) throw DomainError("truncation level must be >= 1");
}

int Level::value() const {
  if (!k_) throw DomainError("value() of infinite level");
  return *k_;
}

Rational Level::InverseSucc() const {
  return k_ ? Ratio(1, *k_ + 1) : Rational(0);
}

std::string ToString(const Level& k) {
  return k.is_infinite() ? "inf" : std::to_string(k.value());
}

Level ParseLevel(const std::string& text) {
  if (text == "inf") return Level::Infinite();
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw DomainError("bad truncation level '" + text + "'");
  }
  if (used != text.size()) throw DomainError("bad truncation level '" + text + "'");
  return Level(k);
}

PLFunction CountingFunction(const MultiplicityProfile& profile,
                            CountWeight weight,
                            const MultiplicityWindow& window) {
  auto weight_of = [weight](int multiplicity, int count) {
    return weight == CountWeight::kWithMultiplicity ? multiplicity * count
                                                    : count;
  };
  // Zeros in the closed unit disk count from s = 0; a zero of absolute
  // value p^t > 1 starts counting at s = t.
  Rational initial_slope = 0;
  std::map<Rational, Rational> increments;
  if (profile.ord_0 > 0 && window.Admits(profile.ord_0)) {
    initial_slope += weight_of(profile.ord_0, 1);
  }
  for (const auto& e : profile.entries) {
    if (!window.Admits(e.multiplicity)) continue;
    const int w = weight_of(e.multiplicity, e.count);
    if (e.valuation >= 0) {
      initial_slope += w;
    } else {
      increments[-e.valuation] += w;
    }
  }
  std::vector<PLFunction::Piece> pieces{{Rational(0), initial_slope}};
  Rational slope = initial_slope;
  for (const auto& [at, inc] : increments) {
    slope += inc;
    pieces.push_back({at, slope});
  }
  return PLFunction::FromPieces(0, std::move(pieces));
}

RationalFunction InvertAt(const RationalFunction& f, const Target& a) {
  if (a.is_infinity()) return f;
  return (f - a.function()).Reciprocal();
}

MultiplicityProfile TargetProfile(const RationalFunction& f, const Target& a,
                                  Prime p) {
  if (a.is_infinity()) return zeros_profile(f.den(), p);
  const RationalFunction diff = f - a.function();
  if (diff.IsZero()) {
    throw DomainError("f - a vanishes identically for a = " + ToString(a));
  }
  return zeros_profile(diff.num(), p);
}

PLFunction valence_N(const RationalFunction& f, const Target& a, Prime p) {
  return CountingFunction(TargetProfile(f, a, p),
                          CountWeight::kWithMultiplicity);
}

PLFunction reduced_N(const RationalFunction& f, const Target& a, Prime p) {
  return CountingFunction(TargetProfile(f, a, p), CountWeight::kDistinct);
}

PLFunction truncated_N_le(const RationalFunction& f, const Target& a, Level k,
                          Prime p) {
  MultiplicityWindow window;
  if (!k.is_infinite()) window.max_multiplicity = k.value();
  return CountingFunction(TargetProfile(f, a, p), CountWeight::kDistinct,
                          window);
}

PLFunction truncated_N_ge(const RationalFunction& f, const Target& a, Level k,
                          Prime p) {
  const MultiplicityProfile profile = TargetProfile(f, a, p);
  if (k.is_infinite()) return PLFunction();
  return CountingFunction(profile, CountWeight::kDistinct,
                          {k.value() + 1, std::nullopt});
}

PLFunction log_norm(const RationalFunction& f, Prime p) {
  if (f.IsZero()) throw DomainError("log norm of the zero function");
  return norm_log(f.num(), p) - norm_log(f.den(), p);
}

PLFunction proximity_m(const RationalFunction& f, Prime p) {
  if (f.IsZero()) return PLFunction();
  return Pos(log_norm(f, p));
}

PLFunction characteristic_T(const RationalFunction& f, Prime p) {
  PLFunction t = proximity_m(f, p) + valence_N(f, Target::Infinity(), p);
  if (!f.IsZero() && t.final_slope() != f.Degree()) {
    throw std::logic_error("characteristic final slope != degree for " +
                           ToString(f));
  }
  return t;
}

PLFunction characteristic_T(const Target& a, Prime p) {
  if (a.is_infinity()) return PLFunction();
  return characteristic_T(a.function(), p);
}

NevanlinnaReport MakeReport(const RationalFunction& f, const Target& a,
                            Prime p) {
  NevanlinnaReport report;
  report.target = a;
  const RationalFunction inverted = InvertAt(f, a);
  const MultiplicityProfile profile = TargetProfile(f, a, p);
  report.m = proximity_m(inverted, p);
  report.N = CountingFunction(profile, CountWeight::kWithMultiplicity);
  report.Nbar = CountingFunction(profile, CountWeight::kDistinct);
  report.T = characteristic_T(inverted, p);
  if (!(report.T == report.m + report.N)) {
    throw std::logic_error("T != m + N for " + ToString(f));
  }
  return report;
}

PLFunction SmallBudget(const std::vector<Target>& family, Prime p) {
  PLFunction budget = PLFunction::Constant(1);
  for (const auto& a : family) budget = budget + characteristic_T(a, p);
  return budget;
}

void RequireDistinct(const std::vector<Target>& targets) {
  for (std::size_t i = 0; i < targets.size(); ++i) {
    for (std::size_t j = i + 1; j < targets.size(); ++j) {
      if (targets[i] == targets[j]) {
        throw DomainError("duplicate target " + ToString(targets[i]));
      }
    }
  }
}

InequalityCertificate fmt_check(const RationalFunction& f, const Target& c,
                                Prime p) {
  const PLFunction lhs = characteristic_T(InvertAt(f, c), p);
  const PLFunction rhs = characteristic_T(f, p);
  InequalityCertificate cert =
      Compare(lhs, rhs, PLFunction(), "T(r,1/(f-c)) = T(r,f) + O(1)");
  const auto sup = cert.slack.Supremum();
  if (cert.final_slope_gap == 0 && sup && cert.min_slack) {
    const Rational bound = std::max(*sup, Rational(-*cert.min_slack));
    cert.verdict = {VerdictKind::kHoldsUpToConstant, bound};
    cert.notes.push_back("two-sided bound |T(r,1/(f-c)) - T(r,f)| <= " +
                         ToString(bound));
  } else if (cert.verdict.holds()) {
    // Slack bounded below but growing: the upper side fails.
    cert.verdict = {VerdictKind::kViolated, cert.slack.last_breakpoint() + 1};
    cert.notes.push_back("final slopes differ");
  }
  return cert;
}

InequalityCertificate ldl_check(const RationalFunction& f, int k, Prime p) {
  if (k < 1) throw DomainError("derivative order must be >= 1");
  if (f.IsConstant()) throw DomainError("logarithmic derivative of a constant");
  const RationalFunction fk = f.Derivative(k);
  InequalityCertificate cert =
      Compare(proximity_m(fk / f, p), PLFunction(), PLFunction(),
              "m(r,f^(" + std::to_string(k) + ")/f) = 0");
  if (fk.IsZero()) {
    cert.notes.push_back("degenerate numerator: f^(" + std::to_string(k) +
                         ") vanishes identically");
  }
  return cert;
}

InequalityCertificate smt_constants_check(const RationalFunction& f,
                                          const std::vector<Target>& targets,
                                          Prime p) {
  if (targets.size() < 3) throw DomainError("need at least 3 targets");
  for (const auto& a : targets) {
    if (!a.IsConstant()) {
      throw DomainError("target " + ToString(a) + " is not constant");
    }
  }
  RequireDistinct(targets);
  const auto q = static_cast<long>(targets.size());
  const PLFunction lhs = Rational(q - 2) * characteristic_T(f, p);
  PLFunction rhs = -PLFunction::Linear(1, 0);
  for (const auto& a : targets) rhs = rhs + reduced_N(f, a, p);
  return Compare(lhs, rhs, PLFunction(),
                 "(q-2)T(r,f) <= sum Nbar(r,1/(f-a_j)) - s + O(1)");
}

}  // namespace nevan
