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

// Continuous piecewise-linear functions of the log-radius s on [0, s_max]
// (s_max possibly +infinity) with exact rational breakpoints and slopes.
//
// Every proximity, counting and characteristic function in the library is a
// PLFunction; e.g. log_p |h|_r for h = sum a_j z^j is max_j (j*s - v(a_j)).
//
// Representation: value at s = 0 plus an ordered list of pieces
// (start, slope). The first piece starts at 0, starts are strictly
// increasing and lie strictly inside the domain, and adjacent pieces have
// distinct slopes. Equal functions therefore have identical representations
// and operator== is structural.

#ifndef NEVAN_PL_FUNCTION_H_
#define NEVAN_PL_FUNCTION_H_

#include <optional>
#include <string>
#include <vector>

#include "nevan/valued.h"

namespace nevan {

class PLFunction {
 public:
  struct Piece {
    Rational start;
    Rational slope;
    friend bool operator==(const Piece&, const Piece&) = default;
  };

  // The zero function on [0, +infinity).
  PLFunction();

  static PLFunction Constant(const Rational& c,
                             std::optional<Rational> domain_end = {});
  // slope * s + intercept.
  static PLFunction Linear(const Rational& slope, const Rational& intercept,
                           std::optional<Rational> domain_end = {});
  // Canonicalizes the input. Throws DomainError if starts are not strictly
  // increasing from 0, fall outside the domain, or domain_end <= 0.
  static PLFunction FromPieces(const Rational& value_at_0,
                               std::vector<Piece> pieces,
                               std::optional<Rational> domain_end = {});

  const Rational& value_at_0() const { return value_at_0_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  // std::nullopt means +infinity.
  const std::optional<Rational>& domain_end() const { return domain_end_; }
  bool has_finite_domain() const { return domain_end_.has_value(); }

  // Throws OutOfDomain when s > s_max.
  Rational Eval(const LogRadius& s) const;
  bool Contains(const Rational& s) const;

  // Slope of the last piece: the exact asymptotic growth rate.
  const Rational& final_slope() const { return pieces_.back().slope; }
  const Rational& last_breakpoint() const { return pieces_.back().start; }

  // Piece starts together with the finite right end of the domain.
  std::vector<Rational> Vertices() const;

  // Infimum over the domain; std::nullopt when unbounded below.
  std::optional<Rational> Infimum() const;
  // Supremum over the domain; std::nullopt when unbounded above.
  std::optional<Rational> Supremum() const;
  // Leftmost point realizing Infimum(); requires a finite infimum.
  Rational ArgInfimum() const;

  bool IsZero() const;
  bool IsConvex() const;
  bool IsNondecreasing() const;

  // Same function on [0, min(s_max, end)].
  PLFunction Restrict(const Rational& end) const;

  friend bool operator==(const PLFunction&, const PLFunction&) = default;

 private:
  Rational value_at_0_;
  std::vector<Piece> pieces_;
  std::optional<Rational> domain_end_;
  // Value at each piece start; derived from the fields above.
  std::vector<Rational> start_values_;
};

// Pointwise operations. Binary operations act on the intersection of the two
// domains (always nonempty here since every domain contains [0, s) for some
// s > 0). Results are canonical; every crossing point of max/min is exact.
PLFunction operator+(const PLFunction& f, const PLFunction& g);
PLFunction operator-(const PLFunction& f, const PLFunction& g);
PLFunction operator-(const PLFunction& f);
PLFunction operator*(const Rational& c, const PLFunction& f);
PLFunction Max(const PLFunction& f, const PLFunction& g);
PLFunction Min(const PLFunction& f, const PLFunction& g);
// max(f, 0): realizes log^+.
PLFunction Pos(const PLFunction& f);

// Sum of a possibly empty list; the empty sum is the zero function.
PLFunction Sum(const std::vector<PLFunction>& terms);

// Human-readable rendering: "[0, s_max] v0=...; {s: slope, ...}".
std::string ToString(const PLFunction& f);

}  // namespace nevan

#endif  // NEVAN_PL_FUNCTION_H_
