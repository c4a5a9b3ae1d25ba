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

// Reduced quotients num/den of coprime polynomials over Q with monic den;
// the concrete meromorphic functions of the library. The normal form makes
// operator== decide identity of functions.

#ifndef NEVAN_RATIONAL_FUNCTION_H_
#define NEVAN_RATIONAL_FUNCTION_H_

#include <optional>
#include <string>

#include "nevan/polynomial.h"

namespace nevan {

class RationalFunction {
 public:
  // The zero function.
  RationalFunction();
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  // Reduces to lowest terms. Throws DomainError if den is zero.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction Constant(const Rational& c);
  static RationalFunction Z();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool IsZero() const { return num_.IsZero(); }
  bool IsConstant() const { return num_.IsConstant() && den_.IsConstant(); }
  bool IsPolynomial() const { return den_.IsConstant(); }
  // Value of a constant function; requires IsConstant().
  Rational ConstantValue() const;
  // max(deg num, deg den).
  int Degree() const;

  RationalFunction Derivative() const;
  // k-th derivative.
  RationalFunction Derivative(int k) const;
  // Throws DomainError for the zero function.
  RationalFunction Reciprocal() const;

  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);

  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction& b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction& b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a,
                                    const RationalFunction& b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction& b) {
    return a /= b;
  }
  friend RationalFunction operator-(const RationalFunction& a);

  friend bool operator==(const RationalFunction&,
                         const RationalFunction&) = default;

 private:
  struct Reduced {};
  RationalFunction(Reduced, Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

RationalFunction Pow(const RationalFunction& f, int exponent);

// "(num)/(den)" in the expression syntax (just "num" for polynomials).
std::string ToString(const RationalFunction& f);

// A value or small function f may take: a rational function or infinity.
// A zero of f - infinity is a pole of f.
class Target {
 public:
  static Target Infinity() { return Target(); }
  Target(RationalFunction a)  // NOLINT(google-explicit-constructor)
      : function_(std::move(a)) {}
  static Target Constant(const Rational& c) {
    return Target(RationalFunction::Constant(c));
  }

  bool is_infinity() const { return !function_.has_value(); }
  // Requires !is_infinity().
  const RationalFunction& function() const;
  bool IsConstant() const { return is_infinity() || function_->IsConstant(); }

  friend bool operator==(const Target&, const Target&) = default;

 private:
  Target() = default;
  std::optional<RationalFunction> function_;
};

std::string ToString(const Target& t);

}  // namespace nevan

#endif  // NEVAN_RATIONAL_FUNCTION_H_
