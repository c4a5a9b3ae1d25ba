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

#include <gtest/gtest.h>

#include <sstream>

#include "nevan/error.h"
#include "testing.h"

namespace nevan {
namespace {

using testing::C;
using testing::Inf;
using testing::Z;

// Text round trip, so the checks cover dump and parse as well.
Json Reparse(const Json& j) { return Json::parse(j.dump()); }

TEST(SerializeTest, Rationals) {
  EXPECT_EQ(ToJson(Rational(3)), "3/1");
  EXPECT_EQ(ToJson(Ratio(-2, 6)), "-1/3");
  EXPECT_EQ(RationalFromJson("6/4"), Ratio(3, 2));
  EXPECT_EQ(RationalFromJson("5"), 5);
  EXPECT_THROW(RationalFromJson("x"), DomainError);
  EXPECT_THROW(RationalFromJson(1.5), Error);
}

TEST(SerializeTest, PLFunctionExample) {
  const PLFunction f = PLFunction::FromPieces(
      Ratio(1, 2), {{Rational(0), Rational(0)}, {Rational(1), Ratio(3, 2)}});
  const Json j = ToJson(f);
  EXPECT_EQ(j.dump(),
            R"({"domain_end":"inf","value_at_0":"1/2","pieces":[["0/1","0/1"],["1/1","3/2"]]})");
  EXPECT_EQ(PLFunctionFromJson(Reparse(j)), f);
  EXPECT_THROW(PLFunctionFromJson(Json::object()), Error);
}

TEST(SerializeTest, TargetsAndFunctions) {
  for (const Target& a :
       {Inf(), Target(C(0)), Target(C(-7, 3)),
        Target(C(1, 2) * Z() * Z() - Z() / (Z() + C(3)))}) {
    EXPECT_EQ(TargetFromJson(Reparse(ToJson(a))), a) << ToString(a);
  }
  testing::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const RationalFunction f = rng.Function(4, 9);
    EXPECT_EQ(RationalFunctionFromJson(Reparse(ToJson(f))), f) << ToString(f);
  }
}

TEST(SerializeTest, ReportsRoundTrip) {
  testing::Rng rng(32);
  const std::vector<Target> targets{Inf(), C(0), C(1), C(1, 3)};
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f = rng.Nonconstant(3);
    const Prime p(rng.Pick(std::vector<unsigned long>{2, 3, 5}));
    for (const auto& a : targets) {
      if (!a.is_infinity() && f == a.function()) continue;
      const NevanlinnaReport r = MakeReport(f, a, p);
      const NevanlinnaReport back = ReportFromJson(Reparse(ToJson(r)));
      EXPECT_EQ(back.target, r.target);
      EXPECT_EQ(back.m, r.m);
      EXPECT_EQ(back.N, r.N);
      EXPECT_EQ(back.Nbar, r.Nbar);
      EXPECT_EQ(back.T, r.T);
    }
  }
}

TEST(SerializeTest, CertificatesRoundTrip) {
  testing::Rng rng(33);
  for (int i = 0; i < 100; ++i) {
    const RationalFunction f = rng.Nonconstant(3);
    const Prime p(rng.Pick(std::vector<unsigned long>{2, 3, 5}));
    std::vector<InequalityCertificate> certs;
    certs.push_back(fmt_check(f, C(rng.Int(-3, 3)), p));
    certs.push_back(ldl_check(f, rng.Int(1, 3), p));
    try {
      certs.push_back(smt_constants_check(f, {Inf(), C(0), C(1), C(2)}, p));
    } catch (const DomainError&) {
    }
    for (const auto& c : certs) {
      const Json j = ToJson(c);
      EXPECT_EQ(CertificateFromJson(Reparse(j)), c) << j.dump();
      EXPECT_EQ(j["slack_table"].size(), c.slack.Vertices().size());
    }
  }
}

TEST(SerializeTest, CertificateSchemaChecked) {
  Json j = ToJson(fmt_check(Z() * Z(), C(1), Prime(2)));
  j["schema"] = 2;
  EXPECT_THROW(CertificateFromJson(j), DomainError);
}

TEST(SerializeTest, RestrictCertificate) {
  // 3s <= 2s + 10 holds on [0, 10] and fails beyond.
  const InequalityCertificate c =
      Compare(PLFunction::Linear(3, 0), PLFunction::Linear(2, 10),
              PLFunction(), "example");
  EXPECT_EQ(c.verdict.kind, VerdictKind::kViolated);
  const InequalityCertificate r = RestrictCertificate(c, 10);
  EXPECT_TRUE(r.verdict.holds());
  EXPECT_EQ(r.label, "example");
  EXPECT_EQ(r.lhs.domain_end(), std::optional<Rational>(10));
  EXPECT_EQ(r.notes.back(), "restricted to s in [0, 10]");
  EXPECT_EQ(RestrictCertificate(c, 11).verdict.kind, VerdictKind::kViolated);
  EXPECT_EQ(CertificateFromJson(Reparse(ToJson(r))), r);
}

TEST(SerializeTest, Csv) {
  const NevanlinnaReport r = MakeReport(Z() * Z() - C(2), C(0), Prime(2));
  const std::string csv = ReportsToCsv({r});
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "target,functional,s,value,slope_right");
  int rows = 0;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
    EXPECT_EQ(line.rfind("\"0\",", 0), 0u) << line;
  }
  EXPECT_GE(rows, 4);
}

TEST(SerializeTest, SearchJsonLinesDeterministic) {
  SearchConfig config;
  config.seed = 5;
  config.trials = 50;
  config.primes = {Prime(2), Prime(3)};
  config.threads = 3;
  const std::string a = ToJsonLines(counterexample_search(config));
  config.threads = 1;
  const std::string b = ToJsonLines(counterexample_search(config));
  EXPECT_EQ(a, b);
  std::istringstream in(a);
  std::string line;
  int lines = 0;
  Json last;
  while (std::getline(in, line)) {
    last = Json::parse(line);
    ++lines;
  }
  EXPECT_EQ(lines, 51);
  EXPECT_TRUE(last.contains("summary"));
  EXPECT_EQ(last["summary"]["trials"], 50);
}

TEST(SerializeTest, UniquenessObjects) {
  const SmallFunctionFamily five({Inf(), C(0), C(1), C(2), C(3)});
  const std::vector<Level> levels(5, Level::Infinite());
  const UniquenessDecision d = uniqueness_decide(Z(), Z() + C(1), five, levels);
  const Json j = Reparse(ToJson(d));
  EXPECT_EQ(j["verdict"], ToString(d.verdict));
  EXPECT_EQ(Reparse(ToJson(theorem2_applicable(levels)))["margin"], "2/9");

  const Theorem1Report t1 = theorem1_check(
      Pow(Z(), 3) + Z(), five, AveragingMode::kDirect, Prime(2));
  const Json tj = Reparse(ToJson(t1));
  EXPECT_EQ(CertificateFromJson(tj["certificate"]), t1.certificate);
}

}  // namespace
}  // namespace nevan
