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

// Newton polygons of polynomials over (Q, v_p) and everything read off them.
//
// Sign convention: a side of the polygon with slope lambda and horizontal
// length l accounts for l zeros (with multiplicity) of valuation -lambda,
// i.e. of absolute value p^lambda. Such zeros make the Gauss-norm function
// log_p |h|_r gain slope l at s = lambda.

#ifndef NEVAN_NEWTON_H_
#define NEVAN_NEWTON_H_

#include <functional>
#include <vector>

#include "nevan/pl_function.h"
#include "nevan/polynomial.h"
#include "nevan/valued.h"

namespace nevan {

struct PolygonVertex {
  int index;            // j
  Rational valuation;   // v_p(a_j)
  friend bool operator==(const PolygonVertex&, const PolygonVertex&) = default;
};

struct PolygonSide {
  Rational slope;
  int length;
  friend bool operator==(const PolygonSide&, const PolygonSide&) = default;
};

class NewtonPolygon {
 public:
  explicit NewtonPolygon(std::vector<PolygonVertex> vertices);

  const std::vector<PolygonVertex>& vertices() const { return vertices_; }
  std::vector<PolygonSide> Sides() const;

  friend bool operator==(const NewtonPolygon&, const NewtonPolygon&) = default;

 private:
  std::vector<PolygonVertex> vertices_;
};

// Lower convex hull of {(j, v_p(a_j)) : a_j != 0}. Throws DomainError for 0.
NewtonPolygon newton_polygon(const Polynomial& h, Prime p);

// Zeros grouped by (valuation, multiplicity): `count` distinct zeros, each of
// p-adic valuation `valuation` and multiplicity `multiplicity`. The zero at
// z = 0 is kept apart in ord_0.
struct ProfileEntry {
  Rational valuation;
  int multiplicity;
  int count;
  friend bool operator==(const ProfileEntry&, const ProfileEntry&) = default;
};

struct MultiplicityProfile {
  int ord_0 = 0;
  // Sorted by (valuation, multiplicity).
  std::vector<ProfileEntry> entries;

  // sum m*l + ord_0, i.e. the degree of the polynomial profiled.
  int TotalWithMultiplicity() const;
  friend bool operator==(const MultiplicityProfile&,
                         const MultiplicityProfile&) = default;
};

// Requires h != 0. Multiplicities come from SquarefreeDecompose; valuations
// from the Newton polygon of each squarefree factor.
MultiplicityProfile zeros_profile(const Polynomial& h, Prime p);

// s -> log_p |h|_r = max_j (j*s - v_p(a_j)) on s >= 0. Convex with integer
// slopes. Throws DomainError for h == 0 (the norm is -infinity).
PLFunction norm_log(const Polynomial& h, Prime p);

// prod_{k=1..count} factor(k), expanded.
Polynomial window_product(const std::function<Polynomial(int)>& factor,
                          int count);
// The standard window product prod_{k=1..count} (1 - p^k z): zeros of
// valuation -1..-count, exact for norm and counting queries on
// s in [0, count].
Polynomial window_product(int count, Prime p);

}  // namespace nevan

#endif  // NEVAN_NEWTON_H_
