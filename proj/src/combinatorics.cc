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

#include "nevan/combinatorics.h"

#include "nevan/error.h"

namespace nevan {

Integer Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

std::vector<Subset> Subsets(int n, int k) {
  if (n < 0 || k < 0) throw DomainError("negative subset parameters");
  std::vector<Subset> out;
  if (k > n) return out;
  Subset current(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) current[static_cast<std::size_t>(i)] = i;
  while (true) {
    out.push_back(current);
    int i = k - 1;
    while (i >= 0 && current[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++current[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      current[static_cast<std::size_t>(j)] =
          current[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

std::vector<Integer> IndexOccurrences(const std::vector<Subset>& subsets,
                                      int n) {
  std::vector<Integer> out(static_cast<std::size_t>(n), Integer(0));
  for (const auto& s : subsets) {
    for (int i : s) {
      if (i < 0 || i >= n) throw DomainError("subset index out of range");
      ++out[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

}  // namespace nevan
