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

// Exact arithmetic of the base field: the rationals together with the p-adic
// valuation v_p and the absolute value |x| = p^{-v_p(x)}.
//
// Every "log" quantity in the library is a base-p logarithm, so log_p|x| is
// the integer -v_p(x) and the log-radius s = log_p r is an exact rational.

#ifndef NEVAN_VALUED_H_
#define NEVAN_VALUED_H_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace nevan {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical "a/b" (or "a" when b == 1) form.
std::string ToString(const Rational& q);
std::string ToString(const Integer& n);

// Parses "a", "-a" or "a/b". Throws DomainError on malformed text or b == 0.
Rational ParseRational(std::string_view text);

Rational Floor(const Rational& q);
// num/den in canonical form; den != 0.
Rational Ratio(long num, long den);

// A rational prime p >= 2. Primality is checked at construction.
class Prime {
 public:
  explicit Prime(unsigned long p);

  unsigned long value() const { return p_; }
  Integer AsInteger() const { return Integer(p_); }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  unsigned long p_;
};

// v_p(x) for x in Q: an integer, or +infinity for x == 0.
class Valuation {
 public:
  static Valuation Infinite() { return Valuation(); }
  explicit Valuation(std::int64_t v) : finite_(true), value_(v) {}

  bool is_infinite() const { return !finite_; }
  // Requires !is_infinite().
  std::int64_t value() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;
  friend std::strong_ordering operator<=>(const Valuation& a,
                                          const Valuation& b);
  friend Valuation operator+(const Valuation& a, const Valuation& b);

 private:
  Valuation() = default;
  bool finite_ = false;
  std::int64_t value_ = 0;
};

std::string ToString(const Valuation& v);

// An exact rational together with its cached p-adic valuation.
class ValuedScalar {
 public:
  ValuedScalar(Rational value, Prime p);

  const Rational& value() const { return value_; }
  const Valuation& valuation() const { return valuation_; }
  Prime prime() const { return prime_; }

  friend ValuedScalar operator+(const ValuedScalar& a, const ValuedScalar& b);
  friend ValuedScalar operator*(const ValuedScalar& a, const ValuedScalar& b);

 private:
  Rational value_;
  Valuation valuation_;
  Prime prime_;
};

// The log-radius s = log_p r. The library works on r >= 1, i.e. s >= 0.
class LogRadius {
 public:
  LogRadius(Rational s);  // NOLINT(google-explicit-constructor)
  LogRadius(long s) : LogRadius(Rational(s)) {}  // NOLINT

  const Rational& value() const { return s_; }

 private:
  Rational s_;
};

// Multiplicity of p in an integer; n must be nonzero.
std::int64_t IntegerValuation(const Integer& n, Prime p);

// v_p(x); +infinity for x == 0.
Valuation valuation(const Rational& x, Prime p);

// log_p |x| = -v_p(x); std::nullopt stands for -infinity (x == 0).
std::optional<Rational> log_abs(const Rational& x, Prime p);

}  // namespace nevan

#endif  // NEVAN_VALUED_H_
