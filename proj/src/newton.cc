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

#include "nevan/newton.h"

#include <algorithm>
#include <map>
#include <utility>

#include "nevan/error.h"

namespace nevan {
namespace {

Rational SideSlope(const PolygonVertex& a, const PolygonVertex& b) {
  return (b.valuation - a.valuation) / (b.index - a.index);
}

}  // namespace

NewtonPolygon::NewtonPolygon(std::vector<PolygonVertex> vertices)
    : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw DomainError("empty Newton polygon");
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    if (vertices_[i].index <= vertices_[i - 1].index) {
      throw DomainError("Newton polygon indices must increase");
    }
    if (i >= 2 && SideSlope(vertices_[i - 1], vertices_[i]) <=
                      SideSlope(vertices_[i - 2], vertices_[i - 1])) {
      throw DomainError("Newton polygon must be strictly convex");
    }
  }
}

std::vector<PolygonSide> NewtonPolygon::Sides() const {
  std::vector<PolygonSide> out;
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    out.push_back({SideSlope(vertices_[i - 1], vertices_[i]),
                   vertices_[i].index - vertices_[i - 1].index});
  }
  return out;
}

NewtonPolygon newton_polygon(const Polynomial& h, Prime p) {
  if (h.IsZero()) throw DomainError("Newton polygon of the zero polynomial");
  // Monotone chain, lower hull only; collinear points are dropped.
  std::vector<PolygonVertex> hull;
  for (int j = 0; j <= h.degree(); ++j) {
    if (h[j] == 0) continue;
    PolygonVertex pt{j, Rational(valuation(h[j], p).value())};
    while (hull.size() >= 2 &&
           SideSlope(hull[hull.size() - 2], hull.back()) >=
               SideSlope(hull.back(), pt)) {
      hull.pop_back();
    }
    hull.push_back(std::move(pt));
  }
  return NewtonPolygon(std::move(hull));
}

int MultiplicityProfile::TotalWithMultiplicity() const {
  int total = ord_0;
  for (const auto& e : entries) total += e.multiplicity * e.count;
  return total;
}

MultiplicityProfile zeros_profile(const Polynomial& h, Prime p) {
  if (h.IsZero()) throw DomainError("zero profile of the zero polynomial");
  MultiplicityProfile profile;
  profile.ord_0 = h.LowestDegree();
  std::map<std::pair<Rational, int>, int> counts;
  for (const auto& [factor, multiplicity] : SquarefreeDecompose(h.StripZ())) {
    for (const auto& side : newton_polygon(factor, p).Sides()) {
      counts[{-side.slope, multiplicity}] += side.length;
    }
  }
  for (const auto& [key, count] : counts) {
    profile.entries.push_back({key.first, key.second, count});
  }
  return profile;
}

PLFunction norm_log(const Polynomial& h, Prime p) {
  if (h.IsZero()) throw DomainError("norm of the zero polynomial");
  const NewtonPolygon polygon = newton_polygon(h, p);
  const auto& vertices = polygon.vertices();
  const auto sides = polygon.Sides();
  // Vertex t is the dominant monomial for s between the slopes of the sides
  // adjacent to it.
  std::size_t active = 0;
  while (active < sides.size() && sides[active].slope <= 0) ++active;
  std::vector<PLFunction::Piece> pieces;
  pieces.push_back({Rational(0), Rational(vertices[active].index)});
  for (std::size_t t = active; t < sides.size(); ++t) {
    pieces.push_back({sides[t].slope, Rational(vertices[t + 1].index)});
  }
  return PLFunction::FromPieces(-vertices[active].valuation, std::move(pieces));
}

Polynomial window_product(const std::function<Polynomial(int)>& factor,
                          int count) {
  if (count < 1) throw DomainError("window product needs count >= 1");
  Polynomial out = Polynomial::Constant(1);
  for (int k = 1; k <= count; ++k) out *= factor(k);
  return out;
}

Polynomial window_product(int count, Prime p) {
  return window_product(
      [p](int k) {
        Integer pk;
        mpz_pow_ui(pk.get_mpz_t(), p.AsInteger().get_mpz_t(),
                   static_cast<unsigned long>(k));
        return Polynomial({Rational(1), Rational(-pk)});
      },
      count);
}

}  // namespace nevan
