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

// Dense univariate polynomials over Q in the variable z.

#ifndef NEVAN_POLYNOMIAL_H_
#define NEVAN_POLYNOMIAL_H_

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "nevan/valued.h"

namespace nevan {

class Polynomial {
 public:
  // The zero polynomial.
  Polynomial() = default;
  // Coefficients a_0, a_1, ... (trailing zeros are dropped).
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial Constant(const Rational& c);
  // c * z^n.
  static Polynomial Monomial(const Rational& c, int n);
  static Polynomial Z() { return Monomial(1, 1); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  bool IsZero() const { return coeffs_.empty(); }
  bool IsConstant() const { return coeffs_.size() <= 1; }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of z^j (0 beyond the degree).
  Rational operator[](int j) const;
  // Requires !IsZero().
  const Rational& leading() const { return coeffs_.back(); }
  // Order of vanishing at z = 0. Requires !IsZero().
  int LowestDegree() const;

  Rational Evaluate(const Rational& z) const;
  Polynomial Derivative() const;
  Polynomial Monic() const;
  // Divides by z^LowestDegree().
  Polynomial StripZ() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& a);
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void Trim();
  std::vector<Rational> coeffs_;
};

Polynomial Pow(const Polynomial& base, int exponent);

// Euclidean division over Q: a = q*b + r with deg r < deg b.
// Throws DomainError if b is zero.
std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                         const Polynomial& b);
// a / b, requiring the division to be exact.
Polynomial ExactDiv(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero only when both inputs are zero).
Polynomial Gcd(const Polynomial& a, const Polynomial& b);

// Integer content-free representative: a = c * P with P in Z[z] primitive,
// positive leading coefficient. Returns {c, P}. Requires !a.IsZero().
std::pair<Rational, Polynomial> PrimitivePart(const Polynomial& a);

// Squarefree factorization F = c * prod F_i^i with monic, squarefree,
// pairwise coprime F_i (Yun). Only factors of positive degree are listed,
// ordered by multiplicity. Throws DomainError for F == 0.
struct SquarefreeFactor {
  Polynomial factor;
  int multiplicity;
  friend bool operator==(const SquarefreeFactor&,
                         const SquarefreeFactor&) = default;
};
std::vector<SquarefreeFactor> SquarefreeDecompose(const Polynomial& f);

// Product of the squarefree parts, i.e. the monic radical.
Polynomial Radical(const Polynomial& f);

// Renders in the expression syntax, e.g. "3*z^2 - 1/2*z + 7".
std::string ToString(const Polynomial& p);

}  // namespace nevan

#endif  // NEVAN_POLYNOMIAL_H_
