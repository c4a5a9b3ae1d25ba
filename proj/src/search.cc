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

#include "nevan/search.h"

#include <algorithm>
#include <random>

#include "nevan/nevanlinna.h"
#include "nevan/parallel.h"
#include "nevan/smt_engine.h"

namespace nevan {
namespace {

using RF = RationalFunction;

class TrialRng {
 public:
  TrialRng(std::uint64_t seed, int index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index)};
    engine_.seed(seq);
  }

  int Uniform(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  Rational NonzeroCoefficient() {
    int c = 0;
    while (c == 0) c = Uniform(-3, 3);
    return c;
  }

  Polynomial Poly(int degree) {
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
    for (int i = 0; i < degree; ++i) c[static_cast<std::size_t>(i)] = Uniform(-3, 3);
    c.back() = NonzeroCoefficient();
    return Polynomial(std::move(c));
  }

  RF Function(int max_degree) {
    while (true) {
      const int dn = Uniform(0, max_degree);
      const int dd = Uniform(0, max_degree);
      RF f(Poly(dn), Poly(dd));
      if (!f.IsConstant()) return f;
    }
  }

  Rational Scale() {
    static const Rational kScales[] = {1, -1, 2, Ratio(1, 2), -2, 3};
    return kScales[Uniform(0, 5)];
  }

  template <typename T>
  const T& Pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(Uniform(0, static_cast<int>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 engine_;
};

void Draw(TrialRng& rng, const SearchConfig& config, TrialRecord& r) {
  const int d = std::max(1, config.max_degree);
  if (config.plant_shared_radical) {
    r.strategy = SearchStrategy::kSharedRadical;
  } else {
    r.strategy = static_cast<SearchStrategy>(rng.Uniform(0, 3));
  }
  switch (r.strategy) {
    case SearchStrategy::kIndependent:
      r.f = rng.Function(d);
      r.g = rng.Function(d);
      break;
    case SearchStrategy::kScaled:
      r.f = rng.Function(d);
      r.g = RF::Constant(rng.Scale()) * r.f;
      break;
    case SearchStrategy::kAffine:
      r.f = rng.Function(d);
      r.g = RF::Constant(rng.Scale()) * r.f +
            RF::Constant(rng.NonzeroCoefficient());
      break;
    case SearchStrategy::kReciprocal:
      r.f = rng.Function(d);
      r.g = r.f.Reciprocal();
      break;
    case SearchStrategy::kSharedRadical: {
      Polynomial A = rng.Poly(1);
      Polynomial B = rng.Poly(1);
      while (!Gcd(A, B).IsConstant()) B = rng.Poly(1);
      const int e = std::max(1, d - 1);
      auto power = [&](const Polynomial& h) {
        return Pow(h, rng.Uniform(1, e));
      };
      r.f = RF::Constant(rng.Scale()) * RF(power(A), power(B));
      r.g = RF::Constant(rng.Scale()) * RF(power(A), power(B));
      break;
    }
  }
}

}  // namespace

std::string ToString(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::kIndependent: return "independent";
    case SearchStrategy::kScaled: return "scaled";
    case SearchStrategy::kAffine: return "affine";
    case SearchStrategy::kReciprocal: return "reciprocal";
    case SearchStrategy::kSharedRadical: return "shared-radical";
  }
  return "?";
}

const std::vector<Target>& SearchCandidates() {
  static const std::vector<Target> candidates{
      Target::Constant(0),  Target::Infinity(),          Target::Constant(1),
      Target::Constant(-1), Target::Constant(2),         Target::Constant(Ratio(1, 2)),
      Target::Constant(-2), Target::Constant(3)};
  return candidates;
}

bool TrialRecord::theorem_contradiction() const {
  return uniqueness == UniquenessVerdict::kTheoremContradiction ||
         smt_verdict == VerdictKind::kViolated ||
         theorem1_verdict == VerdictKind::kViolated;
}

TrialRecord RunTrial(const SearchConfig& config, int index) {
  TrialRng rng(config.seed, index);
  TrialRecord r;
  r.index = index;
  r.prime = config.primes.empty() ? 2 : rng.Pick(config.primes).value();
  Draw(rng, config, r);
  const Prime p(r.prime);
  const auto& candidates = SearchCandidates();

  r.identical = r.f == r.g;
  std::vector<Target> unshared;
  for (const auto& c : candidates) {
    if (sharing_set_equal(r.f, r.g, {c, Level::Infinite()}).equal) {
      r.shared.push_back(c);
    } else {
      unshared.push_back(c);
    }
  }
  // Family: the shared candidates, topped up to five.
  std::vector<Target> family = r.shared;
  for (std::size_t i = 0; family.size() < 5 && i < unshared.size(); ++i) {
    family.push_back(unshared[i]);
  }
  const UniquenessDecision decision = uniqueness_decide(
      r.f, r.g, SmallFunctionFamily(family),
      std::vector<Level>(family.size(), Level::Infinite()));
  r.uniqueness = decision.verdict;
  r.reason = decision.reason;

  const int q = rng.Uniform(3, 6);
  std::vector<Target> pool = candidates;
  std::shuffle(pool.begin(), pool.end(), std::mt19937_64(rng.Uniform(0, 1 << 30)));
  r.smt_targets.assign(pool.begin(), pool.begin() + q);
  r.smt_verdict = smt_constants_check(r.f, r.smt_targets, p).verdict.kind;
  const std::vector<Target> five(candidates.begin(), candidates.begin() + 5);
  r.theorem1_verdict =
      theorem1_check(r.f, SmallFunctionFamily(five), AveragingMode::kDirect, p)
          .certificate.verdict.kind;
  return r;
}

SearchReport counterexample_search(const SearchConfig& config) {
  SearchReport report;
  report.config = config;
  report.records = ParallelMap(
      static_cast<std::size_t>(std::max(0, config.trials)),
      [&](std::size_t i) { return RunTrial(config, static_cast<int>(i)); },
      config.threads);
  SearchSummary& s = report.summary;
  s.trials = config.trials;
  for (const auto& r : report.records) {
    if (r.theorem_contradiction()) ++s.theorem_contradictions;
    if (r.identical) {
      ++s.identical_excluded;
      continue;
    }
    const int n = static_cast<int>(r.shared.size());
    ++s.by_sharing[n];
    if (n >= 5) ++s.five_sharing_pairs;
    if (n == 4) ++s.near_misses;
  }
  return report;
}

}  // namespace nevan
