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

// nevan: Nevanlinna reports, theorem-instance verifiers and the
// counterexample search from the command line.
//
// Exit status: 0 when every certificate holds, 1 on input errors, 2 on a
// violated certificate or a theorem contradiction.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nevan/dsl.h"
#include "nevan/error.h"
#include "nevan/nevanlinna.h"
#include "nevan/search.h"
#include "nevan/serialize.h"
#include "nevan/smt_engine.h"
#include "nevan/uniqueness.h"

namespace nevan {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Common {
  unsigned long prime = 2;
  std::string smax;
  std::string fixture;
  std::string out;
};

// Splits at commas outside parentheses.
std::vector<std::string> SplitTopLevel(const std::string& text) {
  std::vector<std::string> out;
  std::string current;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty() || !out.empty()) out.push_back(current);
  return out;
}

class Session {
 public:
  explicit Session(const Common& common) : prime_(common.prime) {
    if (!common.smax.empty()) {
      smax_ = ParseRational(common.smax);
      if (*smax_ <= 0) throw UsageError("--smax must be positive");
    }
    if (!common.fixture.empty()) {
      fixture_ = dsl::Fixture::Load(common.fixture);
      bindings_ = fixture_->Elaborate(prime_);
    }
  }

  Prime prime() const { return prime_; }
  const std::optional<Rational>& smax() const { return smax_; }

  // A fixture name or an expression over the fixture names.
  Target Resolve(const std::string& text) const {
    dsl::ParseOptions options;
    if (fixture_) {
      options.names.insert(fixture_->names().begin(), fixture_->names().end());
    }
    return dsl::Elaborate(*dsl::Parse(text, options), prime_, bindings_);
  }

  RationalFunction ResolveFunction(const std::string& text) const {
    const Target t = Resolve(text);
    if (t.is_infinity()) throw UsageError("'" + text + "' is not a function");
    return t.function();
  }

  // Comma list; an item "a1..a6" expands to a1, a2, ..., a6.
  std::vector<Target> ResolveList(const std::string& text) const {
    static const std::regex range(R"(^\s*([A-Za-z_]\w*?)(\d+)\.\.([A-Za-z_]\w*?)(\d+)\s*$)");
    std::vector<Target> out;
    for (const auto& item : SplitTopLevel(text)) {
      std::smatch m;
      if (std::regex_match(item, m, range) && m[1] == m[3]) {
        const int lo = std::stoi(m[2]);
        const int hi = std::stoi(m[4]);
        if (lo > hi) throw UsageError("empty range '" + item + "'");
        for (int i = lo; i <= hi; ++i) {
          out.push_back(Resolve(m[1].str() + std::to_string(i)));
        }
      } else {
        out.push_back(Resolve(item));
      }
    }
    return out;
  }

  InequalityCertificate Window(const InequalityCertificate& c) const {
    return smax_ ? RestrictCertificate(c, *smax_) : c;
  }

  PLFunction Window(const PLFunction& f) const {
    return smax_ ? f.Restrict(*smax_) : f;
  }

 private:
  Prime prime_;
  std::optional<Rational> smax_;
  std::optional<dsl::Fixture> fixture_;
  dsl::Bindings bindings_;
};

void Emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

Json Header(const char* command, const Session& s) {
  return {{"schema", kSchemaVersion},
          {"command", command},
          {"prime", s.prime().value()},
          {"smax", s.smax() ? ToJson(*s.smax()) : Json(nullptr)}};
}

std::vector<Level> ParseLevels(const std::string& text, std::size_t q) {
  std::vector<Level> out;
  for (const auto& item : SplitTopLevel(text)) out.push_back(ParseLevel(item));
  if (out.size() == 1 && q > 1) out.assign(q, out.front());
  if (out.size() != q) {
    throw UsageError("--k needs 1 or " + std::to_string(q) + " levels, got " +
                     std::to_string(out.size()));
  }
  return out;
}

Subset ParseSubset(const std::string& text) {
  Subset out;
  for (const auto& item : SplitTopLevel(text)) out.push_back(std::stoi(item));
  return out;
}

// ---- report ----------------------------------------------------------------

struct ReportArgs {
  std::string fn;
  std::string targets = "0,1,inf";
  std::string format = "json";
};

int RunReport(const Common& common, const ReportArgs& args) {
  const Session s(common);
  const RationalFunction f = s.ResolveFunction(args.fn);
  std::vector<NevanlinnaReport> reports;
  for (const auto& a : s.ResolveList(args.targets)) {
    NevanlinnaReport r = MakeReport(f, a, s.prime());
    r.m = s.Window(r.m);
    r.N = s.Window(r.N);
    r.Nbar = s.Window(r.Nbar);
    r.T = s.Window(r.T);
    if (!(r.T == r.m + r.N)) throw std::logic_error("T != m + N on output");
    reports.push_back(std::move(r));
  }
  if (args.format == "csv") {
    Emit(ReportsToCsv(reports), common.out);
    return kExitOk;
  }
  Json doc = Header("report", s);
  doc["function"] = ToJson(f);
  doc["targets"] = Json::array();
  for (const auto& r : reports) doc["targets"].push_back(ToJson(r));
  Emit(doc.dump(2) + "\n", common.out);
  return kExitOk;
}

// ---- verify ----------------------------------------------------------------

struct VerifyArgs {
  std::string theorem;
  std::string fn;
  std::string g;
  std::string family;
  std::string k;
  std::string mode = "direct";
  std::string subset = "0,1,2,3";
  std::string c = "0";
  int order = 1;
};

class Verifier {
 public:
  Verifier(const Common& common, const VerifyArgs& args)
      : args_(args), s_(common), doc_(Header("verify", s_)) {
    doc_["theorem"] = args.theorem;
  }

  int Run() {
    const std::string& t = args_.theorem;
    if (t == "smt") Smt();
    else if (t == "lemma1") Lemma1();
    else if (t == "theorem1") Theorem1();
    else if (t == "lemma2") Lemma2();
    else if (t == "theorem2") Uniqueness(false);
    else if (t == "lemma3") Lemma3();
    else if (t == "theorem3") Uniqueness(true);
    else if (t == "cor1") Cor1();
    else if (t == "fmt") Fmt();
    else if (t == "ldl") Ldl();
    doc_["status"] = violated_ ? "violated" : "holds";
    return violated_ ? kExitViolation : kExitOk;
  }

  const Json& doc() const { return doc_; }

 private:
  RationalFunction F() {
    if (args_.fn.empty()) throw UsageError("--fn is required");
    const RationalFunction f = s_.ResolveFunction(args_.fn);
    doc_["f"] = ToJson(f);
    return f;
  }

  RationalFunction G() {
    if (args_.g.empty()) throw UsageError("--g is required");
    const RationalFunction g = s_.ResolveFunction(args_.g);
    doc_["g"] = ToJson(g);
    return g;
  }

  SmallFunctionFamily Family(std::size_t min_size, std::size_t exact = 0) {
    if (args_.family.empty()) throw UsageError("--family is required");
    SmallFunctionFamily family(s_.ResolveList(args_.family));
    if (family.size() < min_size || (exact != 0 && family.size() != exact)) {
      throw UsageError(args_.theorem + " needs " +
                       (exact != 0 ? std::to_string(exact)
                                   : "at least " + std::to_string(min_size)) +
                       " family members, got " + std::to_string(family.size()));
    }
    doc_["family"] = Json::array();
    for (const auto& a : family.members()) doc_["family"].push_back(ToJson(a));
    return family;
  }

  Json Cert(const InequalityCertificate& c) {
    InequalityCertificate w = s_.Window(c);
    violated_ = violated_ || !w.verdict.holds();
    return ToJson(w);
  }

  Json Cert(const std::optional<InequalityCertificate>& c) {
    return c ? Cert(*c) : Json(nullptr);
  }

  void Smt() {
    const RationalFunction f = F();
    const SmallFunctionFamily family = Family(3);
    if (!family.AllConstant()) {
      throw UsageError("smt takes constant targets; use theorem1 otherwise");
    }
    doc_["certificate"] =
        Cert(smt_constants_check(f, family.members(), s_.prime()));
  }

  Json Lemma1Json(const Lemma1Report& r) {
    Json j = ToJson(r);
    j["certificate"] = Cert(r.certificate);
    j["constant_fallback"] = Cert(r.constant_fallback);
    j["four_t_bound"] = Cert(r.four_t_bound);
    j["h_bound"] = Cert(r.h_bound);
    j["delta_bound"] = Cert(r.delta_bound);
    return j;
  }

  void Lemma1() {
    const RationalFunction f = F();
    const SmallFunctionFamily family = Family(5, 5);
    doc_["report"] = Lemma1Json(lemma1_analyze(f, family, s_.prime()));
  }

  void Theorem1() {
    const RationalFunction f = F();
    const SmallFunctionFamily family = Family(5);
    const Theorem1Report r = theorem1_check(
        f, family, ParseAveragingMode(args_.mode), s_.prime());
    Json j = ToJson(r);
    j["certificate"] = Cert(r.certificate);
    for (std::size_t i = 0; i < r.subset_certificates.size(); ++i) {
      j["subsets"][i]["certificate"] = Cert(r.subset_certificates[i]);
    }
    doc_["report"] = j;
  }

  void Lemma2() {
    const RationalFunction f = F();
    const RationalFunction g = G();
    const SmallFunctionFamily family = Family(5);
    const auto levels = ParseLevels(args_.k.empty() ? "inf" : args_.k,
                                    family.size());
    const Lemma2Report r = lemma2_check(f, g, family, levels,
                                        ParseSubset(args_.subset), s_.prime());
    Json j = ToJson(r);
    j["f_version"] = Cert(r.f_version);
    j["g_version"] = Cert(r.g_version);
    j["aux_m"] = Cert(r.aux_m);
    j["aux_N"] = Cert(r.aux_N);
    doc_["report"] = j;
  }

  void Lemma3() {
    const RationalFunction f = F();
    const SmallFunctionFamily family = Family(1);
    if (args_.k.empty()) throw UsageError("--k is required");
    doc_["certificate"] =
        Cert(lemma3_check(f, family, ParseLevel(args_.k), s_.prime()));
  }

  // theorem2 / theorem3: applicability arithmetic, then, given f and g,
  // the uniqueness decision and the averaged certificates.
  void Uniqueness(bool equal_levels) {
    std::vector<Level> levels;
    std::size_t q = 0;
    if (!args_.family.empty()) {
      q = s_.ResolveList(args_.family).size();
    } else if (equal_levels) {
      throw UsageError("theorem3 needs --family");
    } else {
      q = SplitTopLevel(args_.k).size();
    }
    if (args_.k.empty()) throw UsageError("--k is required");
    if (equal_levels && SplitTopLevel(args_.k).size() != 1) {
      throw UsageError("theorem3 takes a single level --k");
    }
    if (q < 5) throw UsageError(args_.theorem + " needs q >= 5");
    levels = ParseLevels(args_.k, q);
    doc_["levels"] = Json::array();
    for (const auto& k : levels) doc_["levels"].push_back(ToString(k));
    doc_["applicability"] = ToJson(theorem2_applicable(levels));
    if (equal_levels) {
      const int qi = static_cast<int>(q);
      doc_["threshold"] = ToJson(theorem3_threshold(qi));
      doc_["minimal_k"] = theorem3_minimal_k(qi);
      doc_["applies"] = levels[0].is_infinite() ||
                        Rational(levels[0].value()) > theorem3_threshold(qi);
    }
    if (args_.fn.empty()) return;
    Decide(levels);
  }

  void Cor1() {
    Family(5);
    Decide(ParseLevels("inf", s_.ResolveList(args_.family).size()));
  }

  void Decide(const std::vector<Level>& levels) {
    const RationalFunction f = F();
    const RationalFunction g = G();
    const SmallFunctionFamily family = Family(5);
    const UniquenessDecision d = uniqueness_decide(f, g, family, levels);
    doc_["decision"] = ToJson(d);
    violated_ = violated_ || d.verdict == UniquenessVerdict::kTheoremContradiction;
    if (f == g) return;
    bool shared = true;
    for (const auto& w : d.sharing) shared = shared && w.equal;
    if (!shared) return;
    const Theorem2Report r = theorem2_check(f, g, family, levels, s_.prime());
    Json j = ToJson(r);
    j["averaged_f"] = Cert(r.averaged_f);
    j["averaged_g"] = Cert(r.averaged_g);
    j["combined"] = Cert(r.combined);
    j["level_bound"] = Cert(r.level_bound);
    // The conclusion is the contradiction the proof derives; it failing
    // means f == g is forced, which the decision above already reports.
    j["conclusion"] = ToJson(s_.Window(r.conclusion));
    doc_["report"] = j;
  }

  void Fmt() {
    const RationalFunction f = F();
    const Target c = s_.Resolve(args_.c);
    doc_["c"] = ToJson(c);
    doc_["certificate"] = Cert(fmt_check(f, c, s_.prime()));
  }

  void Ldl() {
    const RationalFunction f = F();
    doc_["order"] = args_.order;
    doc_["certificate"] = Cert(ldl_check(f, args_.order, s_.prime()));
  }

  const VerifyArgs& args_;
  Session s_;
  Json doc_;
  bool violated_ = false;
};

int RunVerify(const Common& common, const VerifyArgs& args) {
  Verifier v(common, args);
  const int status = v.Run();
  Emit(v.doc().dump(2) + "\n", common.out);
  if (!common.out.empty() && common.out != "-") {
    std::cout << args.theorem << ": " << v.doc().at("status").get<std::string>()
              << "\n";
  }
  return status;
}

// ---- search ----------------------------------------------------------------

struct SearchArgs {
  std::uint64_t seed = 1;
  int trials = 1000;
  int max_degree = 3;
  std::vector<unsigned long> primes;
  std::string plant;
  unsigned threads = 0;
};

int RunSearch(const Common& common, const SearchArgs& args) {
  SearchConfig config;
  config.seed = args.seed;
  config.trials = args.trials;
  config.max_degree = args.max_degree;
  config.threads = args.threads;
  if (args.trials < 0) throw UsageError("--trials must be >= 0");
  if (args.max_degree < 1) throw UsageError("--max-deg must be >= 1");
  if (args.plant == "shared-radical") {
    config.plant_shared_radical = true;
  } else if (!args.plant.empty()) {
    throw UsageError("unknown --plant '" + args.plant + "'");
  }
  config.primes.clear();
  if (args.primes.empty()) config.primes.emplace_back(common.prime);
  for (unsigned long p : args.primes) config.primes.emplace_back(p);
  const SearchReport report = counterexample_search(config);
  Emit(ToJsonLines(report), common.out);
  if (!common.out.empty() && common.out != "-") {
    std::cout << ToJson(report.summary).dump() << "\n";
  }
  return report.summary.theorem_contradictions > 0 ? kExitViolation : kExitOk;
}

unsigned long DefaultPrime() {
  const char* env = std::getenv("NEVAN_PRIME");
  if (env == nullptr || *env == '\0') return 2;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad NEVAN_PRIME '") + env + "'");
  }
}

int Main(int argc, char** argv) {
  CLI::App app{"Exact non-Archimedean Nevanlinna theory over (Q, v_p)"};
  app.require_subcommand(1);
  Common common;
  common.prime = DefaultPrime();

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out,-o", common.out, "output file (default stdout)");
  };
  auto add_window = [&](CLI::App* cmd) {
    cmd->add_option("--prime", common.prime, "prime p (default $NEVAN_PRIME or 2)");
    cmd->add_option("--smax", common.smax, "restrict to s = log_p r in [0, smax]");
    cmd->add_option("-f,--fixture", common.fixture, "fixture file");
  };

  ReportArgs report;
  CLI::App* report_cmd = app.add_subcommand("report", "m, N, Nbar, T per target");
  add_common(report_cmd);
  add_window(report_cmd);
  report_cmd->add_option("--fn", report.fn, "function name or expression")
      ->required();
  report_cmd->add_option("--targets", report.targets, "comma list of targets");
  report_cmd->add_option("--format", report.format)
      ->check(CLI::IsMember({"json", "csv"}));

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "check a theorem instance");
  add_common(verify_cmd);
  add_window(verify_cmd);
  verify_cmd->add_option("theorem", verify.theorem)
      ->required()
      ->check(CLI::IsMember({"smt", "lemma1", "theorem1", "lemma2", "theorem2",
                             "lemma3", "theorem3", "cor1", "fmt", "ldl"}));
  verify_cmd->add_option("--fn", verify.fn, "f: name or expression");
  verify_cmd->add_option("--g", verify.g, "g: name or expression");
  verify_cmd->add_option("--family", verify.family,
                         "comma list of targets; a1..a6 expands a range");
  verify_cmd->add_option("--k", verify.k, "truncation level(s): n or inf");
  verify_cmd->add_option("--mode", verify.mode)
      ->check(CLI::IsMember({"direct", "averaged"}));
  verify_cmd->add_option("--subset", verify.subset, "four indices for lemma2");
  verify_cmd->add_option("--c", verify.c, "target for fmt");
  verify_cmd->add_option("--order", verify.order, "derivative order for ldl");

  SearchArgs search;
  std::string primes;
  CLI::App* search_cmd = app.add_subcommand("search", "counterexample search");
  add_common(search_cmd);
  search_cmd->add_option("--seed", search.seed);
  search_cmd->add_option("--trials", search.trials);
  search_cmd->add_option("--max-deg", search.max_degree);
  search_cmd->add_option("--prime", primes,
                         "comma list of primes (default $NEVAN_PRIME or 2)");
  search_cmd->add_option("--plant", search.plant)
      ->check(CLI::IsMember({"shared-radical"}));
  search_cmd->add_option("--threads", search.threads, "0: all cores");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*report_cmd) return RunReport(common, report);
    if (*verify_cmd) return RunVerify(common, verify);
    for (const auto& item : SplitTopLevel(primes)) {
      search.primes.push_back(std::stoul(item));
    }
    return RunSearch(common, search);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: malformed number\n";
    return kExitInput;
  } catch (const std::logic_error& e) {
    std::cerr << "internal identity check failed: " << e.what() << "\n";
    return kExitViolation;
  }
}

}  // namespace
}  // namespace nevan

int main(int argc, char** argv) { return nevan::Main(argc, argv); }
