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

#include "nevan/serialize.h"

#include <sstream>

#include "nevan/dsl.h"
#include "nevan/error.h"

namespace nevan {
namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

template <typename T, typename Fn>
Json Array(const std::vector<T>& items, Fn fn) {
  Json out = Json::array();
  for (const auto& x : items) out.push_back(fn(x));
  return out;
}

template <typename T>
Json Optional(const std::optional<T>& x) {
  return x ? ToJson(*x) : Json(nullptr);
}

Json SubsetJson(const Subset& s) {
  Json out = Json::array();
  for (int i : s) out.push_back(i);
  return out;
}

Json CertificateOrNull(const std::optional<InequalityCertificate>& c) {
  return c ? ToJson(*c) : Json(nullptr);
}

}  // namespace

Json ToJson(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational RationalFromJson(const Json& j) {
  if (!j.is_string()) throw DomainError("rational must be a string");
  return ParseRational(j.get<std::string>());
}

Json ToJson(const PLFunction& f) {
  Json pieces = Json::array();
  for (const auto& piece : f.pieces()) {
    pieces.push_back({ToJson(piece.start), ToJson(piece.slope)});
  }
  return {{"domain_end", f.domain_end() ? ToJson(*f.domain_end()) : "inf"},
          {"value_at_0", ToJson(f.value_at_0())},
          {"pieces", pieces}};
}

PLFunction PLFunctionFromJson(const Json& j) {
  const Json& end = Field(j, "domain_end");
  std::optional<Rational> domain_end;
  if (!(end.is_string() && end.get<std::string>() == "inf")) {
    domain_end = RationalFromJson(end);
  }
  std::vector<PLFunction::Piece> pieces;
  for (const auto& p : Field(j, "pieces")) {
    if (!p.is_array() || p.size() != 2) {
      throw DomainError("PL piece must be a [start, slope] pair");
    }
    pieces.push_back({RationalFromJson(p[0]), RationalFromJson(p[1])});
  }
  return PLFunction::FromPieces(RationalFromJson(Field(j, "value_at_0")),
                                std::move(pieces), domain_end);
}

Json ToJson(const RationalFunction& f) { return ToString(f); }

RationalFunction RationalFunctionFromJson(const Json& j) {
  if (!j.is_string()) throw DomainError("function must be a string");
  const auto e = dsl::Parse(j.get<std::string>());
  return dsl::ElaborateFunction(*e, Prime(2), {});
}

Json ToJson(const Target& a) { return ToString(a); }

Target TargetFromJson(const Json& j) {
  if (!j.is_string()) throw DomainError("target must be a string");
  return dsl::Elaborate(*dsl::Parse(j.get<std::string>()), Prime(2), {});
}

Json ToJson(const Verdict& v) {
  return {{"kind", ToString(v.kind)}, {"value", ToJson(v.value)}};
}

Verdict VerdictFromJson(const Json& j) {
  return {ParseVerdictKind(Field(j, "kind").get<std::string>()),
          RationalFromJson(Field(j, "value"))};
}

Json ToJson(const InequalityCertificate& c) {
  Json table = Json::array();
  for (const auto& s : c.slack.Vertices()) {
    table.push_back({ToJson(s), ToJson(c.slack.Eval(s))});
  }
  return {{"schema", kSchemaVersion},
          {"label", c.label},
          {"verdict", ToJson(c.verdict)},
          {"min_slack", Optional(c.min_slack)},
          {"final_slope_gap", ToJson(c.final_slope_gap)},
          {"min_budget_ratio", Optional(c.min_budget_ratio)},
          {"lhs", ToJson(c.lhs)},
          {"rhs", ToJson(c.rhs)},
          {"slack", ToJson(c.slack)},
          {"small_budget", ToJson(c.small_budget)},
          {"slack_table", table},
          {"notes", c.notes}};
}

InequalityCertificate CertificateFromJson(const Json& j) {
  if (Field(j, "schema").get<int>() != kSchemaVersion) {
    throw DomainError("unsupported certificate schema");
  }
  auto optional_rational = [&](const char* key) -> std::optional<Rational> {
    const Json& v = Field(j, key);
    if (v.is_null()) return std::nullopt;
    return RationalFromJson(v);
  };
  InequalityCertificate c;
  c.label = Field(j, "label").get<std::string>();
  c.lhs = PLFunctionFromJson(Field(j, "lhs"));
  c.rhs = PLFunctionFromJson(Field(j, "rhs"));
  c.slack = PLFunctionFromJson(Field(j, "slack"));
  c.small_budget = PLFunctionFromJson(Field(j, "small_budget"));
  c.min_slack = optional_rational("min_slack");
  c.final_slope_gap = RationalFromJson(Field(j, "final_slope_gap"));
  c.min_budget_ratio = optional_rational("min_budget_ratio");
  c.verdict = VerdictFromJson(Field(j, "verdict"));
  c.notes = Field(j, "notes").get<std::vector<std::string>>();
  return c;
}

Json ToJson(const NevanlinnaReport& r) {
  return {{"schema", kSchemaVersion},
          {"target", ToJson(r.target)},
          {"m", ToJson(r.m)},
          {"N", ToJson(r.N)},
          {"Nbar", ToJson(r.Nbar)},
          {"T", ToJson(r.T)}};
}

NevanlinnaReport ReportFromJson(const Json& j) {
  NevanlinnaReport r;
  r.target = TargetFromJson(Field(j, "target"));
  r.m = PLFunctionFromJson(Field(j, "m"));
  r.N = PLFunctionFromJson(Field(j, "N"));
  r.Nbar = PLFunctionFromJson(Field(j, "Nbar"));
  r.T = PLFunctionFromJson(Field(j, "T"));
  return r;
}

Json ToJson(const DegeneracyVerdict& d) {
  return {{"case", ToString(d.kind)}, {"witness", d.witness}};
}

Json ToJson(const Lemma1Report& r) {
  const MoebiusTransform& t = r.normalization.transform;
  return {{"certificate", ToJson(r.certificate)},
          {"normalization",
           {{"F", ToJson(r.normalization.F)},
            {"a1", ToJson(t.a1())},
            {"a2", ToJson(t.a2())},
            {"a3", ToJson(t.a3())}}},
          {"A4", ToJson(r.A4)},
          {"A5", ToJson(r.A5)},
          {"degeneracy", ToJson(r.degeneracy)},
          {"constant_fallback", CertificateOrNull(r.constant_fallback)},
          {"four_t_bound", CertificateOrNull(r.four_t_bound)},
          {"h_bound", CertificateOrNull(r.h_bound)},
          {"delta_bound", CertificateOrNull(r.delta_bound)},
          {"H", Optional(r.H)},
          {"smallness", Array(r.smallness, [](const Rational& q) {
             return ToJson(q);
           })}};
}

Json ToJson(const Theorem1Report& r) {
  Json subsets = Json::array();
  for (std::size_t i = 0; i < r.subsets.size(); ++i) {
    subsets.push_back({{"subset", SubsetJson(r.subsets[i])},
                       {"degeneracy", ToJson(r.subset_degeneracy[i])},
                       {"certificate", ToJson(r.subset_certificates[i])}});
  }
  return {{"mode", ToString(r.mode)},
          {"certificate", ToJson(r.certificate)},
          {"per_index_count", r.per_index_count.get_str()},
          {"subsets", subsets}};
}

Json ToJson(const Lemma2Report& r) {
  return {{"subset", SubsetJson(r.subset)},
          {"f_version", ToJson(r.f_version)},
          {"g_version", ToJson(r.g_version)},
          {"aux_m", CertificateOrNull(r.aux_m)},
          {"aux_N", CertificateOrNull(r.aux_N)}};
}

Json ToJson(const Applicability& a) {
  return {{"applicable", a.applicable}, {"margin", ToJson(a.margin)}};
}

Json ToJson(const Theorem2Report& r) {
  return {{"applicability", ToJson(r.applicability)},
          {"per_index_count", r.per_index_count.get_str()},
          {"subsets", Array(r.subsets, SubsetJson)},
          {"averaged_f", ToJson(r.averaged_f)},
          {"averaged_g", ToJson(r.averaged_g)},
          {"combined", ToJson(r.combined)},
          {"level_bound", ToJson(r.level_bound)},
          {"conclusion", ToJson(r.conclusion)}};
}

Json ToJson(const SharingWitness& w) {
  return {{"equal", w.equal},
          {"f_only", ToString(w.f_only)},
          {"g_only", ToString(w.g_only)}};
}

Json ToJson(const UniquenessDecision& d) {
  return {{"verdict", ToString(d.verdict)},
          {"reason", d.reason},
          {"sharing", Array(d.sharing, [](const SharingWitness& w) {
             return ToJson(w);
           })},
          {"theorem2", Optional(d.theorem2)},
          {"theorem3_applies", d.theorem3_applies}};
}

Json ToJson(const TrialRecord& r) {
  auto targets = [](const std::vector<Target>& ts) {
    return Array(ts, [](const Target& a) { return ToJson(a); });
  };
  return {{"index", r.index},
          {"strategy", ToString(r.strategy)},
          {"prime", r.prime},
          {"f", ToJson(r.f)},
          {"g", ToJson(r.g)},
          {"identical", r.identical},
          {"shared", targets(r.shared)},
          {"uniqueness", ToString(r.uniqueness)},
          {"reason", r.reason},
          {"smt_targets", targets(r.smt_targets)},
          {"smt_verdict", ToString(r.smt_verdict)},
          {"theorem1_verdict", ToString(r.theorem1_verdict)},
          {"theorem_contradiction", r.theorem_contradiction()}};
}

Json ToJson(const SearchSummary& s) {
  Json by_sharing = Json::object();
  for (const auto& [k, n] : s.by_sharing) by_sharing[std::to_string(k)] = n;
  return {{"trials", s.trials},
          {"identical_excluded", s.identical_excluded},
          {"by_sharing", by_sharing},
          {"five_sharing_pairs", s.five_sharing_pairs},
          {"near_misses", s.near_misses},
          {"theorem_contradictions", s.theorem_contradictions}};
}

Json ToJson(const SearchConfig& c) {
  Json primes = Json::array();
  for (const auto& p : c.primes) primes.push_back(p.value());
  return {{"seed", c.seed},
          {"trials", c.trials},
          {"max_degree", c.max_degree},
          {"primes", primes},
          {"plant_shared_radical", c.plant_shared_radical}};
}

std::string ToJsonLines(const SearchReport& report) {
  std::string out;
  for (const auto& r : report.records) out += ToJson(r).dump() + "\n";
  Json footer = {{"schema", kSchemaVersion},
                 {"config", ToJson(report.config)},
                 {"summary", ToJson(report.summary)}};
  out += footer.dump() + "\n";
  return out;
}

InequalityCertificate RestrictCertificate(const InequalityCertificate& c,
                                          const Rational& s_max) {
  InequalityCertificate out =
      Compare(c.lhs.Restrict(s_max), c.rhs.Restrict(s_max),
              c.small_budget.Restrict(s_max), c.label);
  out.notes = c.notes;
  out.notes.push_back("restricted to s in [0, " + ToString(s_max) + "]");
  return out;
}

std::string ReportsToCsv(const std::vector<NevanlinnaReport>& reports) {
  std::ostringstream out;
  out << "target,functional,s,value,slope_right\n";
  for (const auto& r : reports) {
    const std::pair<const char*, const PLFunction*> rows[] = {
        {"m", &r.m}, {"N", &r.N}, {"Nbar", &r.Nbar}, {"T", &r.T}};
    for (const auto& [name, f] : rows) {
      for (const auto& piece : f->pieces()) {
        out << '"' << ToString(r.target) << "\"," << name << ','
            << ToString(piece.start) << ',' << ToString(f->Eval(piece.start))
            << ',' << ToString(piece.slope) << '\n';
      }
      if (f->domain_end()) {
        out << '"' << ToString(r.target) << "\"," << name << ','
            << ToString(*f->domain_end()) << ','
            << ToString(f->Eval(*f->domain_end())) << ",\n";
      }
    }
  }
  return out.str();
}

}  // namespace nevan
