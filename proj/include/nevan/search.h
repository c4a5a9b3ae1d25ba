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

// Seeded randomized search for pairs f != g sharing many constants, run
// against the uniqueness decision and the constants second main theorem.
// Trial i draws from a generator seeded by (seed, i) alone, so results do not
// depend on scheduling.

#ifndef NEVAN_SEARCH_H_
#define NEVAN_SEARCH_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nevan/certificate.h"
#include "nevan/rational_function.h"
#include "nevan/uniqueness.h"

namespace nevan {

enum class SearchStrategy {
  kIndependent,    // f, g drawn independently
  kScaled,         // g = c f
  kAffine,         // g = c f + d
  kReciprocal,     // g = 1/f
  kSharedRadical,  // f = c A^i / B^j, g = d A^k / B^l with A, B coprime
};

std::string ToString(SearchStrategy s);

struct SearchConfig {
  std::uint64_t seed = 1;
  int trials = 1000;
  int max_degree = 3;
  std::vector<Prime> primes{Prime(2)};
  // Use only the planted shared-radical construction.
  bool plant_shared_radical = false;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Constants tested for sharing: 0, inf, 1, -1, 2, 1/2, -2, 3.
const std::vector<Target>& SearchCandidates();

struct TrialRecord {
  int index = 0;
  SearchStrategy strategy = SearchStrategy::kIndependent;
  unsigned long prime = 2;
  RationalFunction f;
  RationalFunction g;
  bool identical = false;
  // Candidates shared ignoring multiplicities.
  std::vector<Target> shared;
  UniquenessVerdict uniqueness = UniquenessVerdict::kInconclusive;
  std::string reason;
  // Constants second main theorem on f with smt_targets.
  std::vector<Target> smt_targets;
  VerdictKind smt_verdict = VerdictKind::kHoldsExactly;
  // Five-constant lemma (direct) on f with the first five candidates.
  VerdictKind theorem1_verdict = VerdictKind::kHoldsExactly;

  bool theorem_contradiction() const;
};

struct SearchSummary {
  int trials = 0;
  int identical_excluded = 0;
  // number of shared candidates -> trials (identical pairs excluded)
  std::map<int, int> by_sharing;
  int five_sharing_pairs = 0;  // f != g sharing >= 5 candidates
  int near_misses = 0;         // f != g sharing exactly 4
  int theorem_contradictions = 0;
};

struct SearchReport {
  SearchConfig config;
  std::vector<TrialRecord> records;
  SearchSummary summary;
};

TrialRecord RunTrial(const SearchConfig& config, int index);
SearchReport counterexample_search(const SearchConfig& config);

}  // namespace nevan

#endif  // NEVAN_SEARCH_H_
