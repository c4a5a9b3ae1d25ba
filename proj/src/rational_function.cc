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

#include "nevan/rational_function.h"

#include <algorithm>
#include <cstdlib>

#include "nevan/error.h"

namespace nevan {

RationalFunction::RationalFunction()
    : num_(), den_(Polynomial::Constant(1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Polynomial::Constant(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.IsZero()) throw DomainError("rational function with zero denominator");
  if (num.IsZero()) {
    den_ = Polynomial::Constant(1);
    return;
  }
  const Polynomial g = Gcd(num, den);
  if (!g.IsConstant()) {
    num = ExactDiv(num, g);
    den = ExactDiv(den, g);
  }
  const Rational inv = 1 / den.leading();
  num_ = inv * num;
  den_ = inv * den;
}

RationalFunction::RationalFunction(Reduced, Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {}

RationalFunction RationalFunction::Constant(const Rational& c) {
  return RationalFunction(Polynomial::Constant(c));
}

RationalFunction RationalFunction::Z() {
  return RationalFunction(Polynomial::Z());
}

Rational RationalFunction::ConstantValue() const {
  if (!IsConstant()) throw DomainError("function is not constant");
  return num_[0];
}

int RationalFunction::Degree() const {
  return std::max(num_.degree(), den_.degree());
}

RationalFunction RationalFunction::Derivative() const {
  if (IsPolynomial()) return RationalFunction(num_.Derivative());
  return RationalFunction(num_.Derivative() * den_ - num_ * den_.Derivative(),
                          den_ * den_);
}

RationalFunction RationalFunction::Derivative(int k) const {
  if (k < 0) throw DomainError("negative derivative order");
  RationalFunction out = *this;
  for (int i = 0; i < k; ++i) out = out.Derivative();
  return out;
}

RationalFunction RationalFunction::Reciprocal() const {
  if (IsZero()) throw DomainError("reciprocal of the zero function");
  const Rational inv = 1 / num_.leading();
  return RationalFunction(Reduced{}, inv * den_, inv * num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (IsZero() || o.IsZero()) {
    *this = RationalFunction();
    return *this;
  }
  // Cross cancellation keeps both gcds small and the result reduced.
  const Polynomial g1 = Gcd(num_, o.den_);
  const Polynomial g2 = Gcd(o.num_, den_);
  Polynomial num = ExactDiv(num_, g1) * ExactDiv(o.num_, g2);
  Polynomial den = ExactDiv(den_, g2) * ExactDiv(o.den_, g1);
  const Rational inv = 1 / den.leading();
  *this = RationalFunction(Reduced{}, inv * num, inv * den);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  if (o.IsZero()) throw DomainError("division by the zero function");
  return *this *= o.Reciprocal();
}

RationalFunction operator-(const RationalFunction& a) {
  return RationalFunction(RationalFunction::Reduced{}, -a.num_, a.den_);
}

RationalFunction Pow(const RationalFunction& f, int exponent) {
  if (exponent < 0) return Pow(f.Reciprocal(), -exponent);
  // Powers of coprime polynomials stay coprime.
  return RationalFunction(Pow(f.num(), exponent), Pow(f.den(), exponent));
}

std::string ToString(const RationalFunction& f) {
  if (f.IsPolynomial()) return ToString(f.num());
  return "(" + ToString(f.num()) + ")/(" + ToString(f.den()) + ")";
}

const RationalFunction& Target::function() const {
  if (!function_) throw DomainError("infinity target has no function");
  return *function_;
}

std::string ToString(const Target& t) {
  return t.is_infinity() ? "inf" : ToString(t.function());
}

}  // namespace nevan
