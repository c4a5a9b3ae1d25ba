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

// JSON encoding of PL functions, certificates and reports (schema 1).
//
// Rationals are "num/den" strings. A PLFunction is
//
//   {"domain_end": "inf" | "a/b", "value_at_0": "a/b",
//    "pieces": [["start", "slope"], ...]}
//
// Functions and targets are written in the expression language and read
// back through the parser, so every *FromJson is an exact inverse.

#ifndef NEVAN_SERIALIZE_H_
#define NEVAN_SERIALIZE_H_

#include <string>

#include <nlohmann/json.hpp>

#include "nevan/certificate.h"
#include "nevan/nevanlinna.h"
#include "nevan/search.h"
#include "nevan/smt_engine.h"
#include "nevan/uniqueness.h"

namespace nevan {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json ToJson(const Rational& q);
Rational RationalFromJson(const Json& j);

Json ToJson(const PLFunction& f);
PLFunction PLFunctionFromJson(const Json& j);

Json ToJson(const RationalFunction& f);
RationalFunction RationalFunctionFromJson(const Json& j);

Json ToJson(const Target& a);
Target TargetFromJson(const Json& j);

Json ToJson(const Verdict& v);
Verdict VerdictFromJson(const Json& j);

// Includes a derived "slack_table" of [s, slack(s)] at every vertex; it is
// ignored when reading.
Json ToJson(const InequalityCertificate& c);
InequalityCertificate CertificateFromJson(const Json& j);

Json ToJson(const NevanlinnaReport& r);
NevanlinnaReport ReportFromJson(const Json& j);

Json ToJson(const DegeneracyVerdict& d);
Json ToJson(const Lemma1Report& r);
Json ToJson(const Theorem1Report& r);
Json ToJson(const Lemma2Report& r);
Json ToJson(const Applicability& a);
Json ToJson(const Theorem2Report& r);
Json ToJson(const SharingWitness& w);
Json ToJson(const UniquenessDecision& d);

Json ToJson(const TrialRecord& r);
Json ToJson(const SearchSummary& s);
Json ToJson(const SearchConfig& c);
// One record per line followed by a {"summary": ...} footer line.
std::string ToJsonLines(const SearchReport& report);

// Recompares lhs, rhs and budget on [0, s_max]; keeps label and notes.
InequalityCertificate RestrictCertificate(const InequalityCertificate& c,
                                          const Rational& s_max);

// One row per (target, functional, breakpoint):
// target,functional,s,value,slope_right.
std::string ReportsToCsv(const std::vector<NevanlinnaReport>& reports);

}  // namespace nevan

#endif  // NEVAN_SERIALIZE_H_
