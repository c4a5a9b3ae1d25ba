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

// Subset enumeration and binomial coefficients for the averaging arguments.

#ifndef NEVAN_COMBINATORICS_H_
#define NEVAN_COMBINATORICS_H_

#include <vector>

#include "nevan/valued.h"

namespace nevan {

using Subset = std::vector<int>;  // strictly increasing indices

// C(n, k); zero when k < 0 or k > n.
Integer Binomial(int n, int k);

// All k-element subsets of {0, ..., n-1} in lexicographic order.
std::vector<Subset> Subsets(int n, int k);

// occurrences[i] = number of subsets containing index i.
std::vector<Integer> IndexOccurrences(const std::vector<Subset>& subsets,
                                      int n);

}  // namespace nevan

#endif  // NEVAN_COMBINATORICS_H_
