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

#include "nevan/valued.h"

#include <cctype>

#include "nevan/error.h"

namespace nevan {

std::string ToString(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ToString(const Integer& n) { return n.get_str(); }

namespace {

bool IsSignedDigits(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational ParseRational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!IsSignedDigits(num) || !IsSignedDigits(den)) {
    throw DomainError("malformed rational '" + std::string(text) + "'");
  }
  auto strip_plus = [](std::string_view s) {
    return std::string(!s.empty() && s.front() == '+' ? s.substr(1) : s);
  };
  Integer n(strip_plus(num));
  Integer d(strip_plus(den));
  if (d == 0) {
    throw DomainError("zero denominator in '" + std::string(text) + "'");
  }
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational Floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return Rational(out);
}

Rational Ratio(long num, long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Prime::Prime(unsigned long p) : p_(p) {
  if (p < 2 || mpz_probab_prime_p(Integer(p).get_mpz_t(), 25) == 0) {
    throw DomainError(std::to_string(p) + " is not prime");
  }
}

std::int64_t Valuation::value() const {
  if (!finite_) throw DomainError("value() of infinite valuation");
  return value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  // +infinity is the largest element.
  if (!a.finite_ || !b.finite_) {
    return static_cast<int>(b.finite_) <=> static_cast<int>(a.finite_);
  }
  return a.value_ <=> b.value_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::Infinite();
  return Valuation(a.value_ + b.value_);
}

std::string ToString(const Valuation& v) {
  return v.is_infinite() ? "inf" : std::to_string(v.value());
}

ValuedScalar::ValuedScalar(Rational value, Prime p)
    : value_(std::move(value)),
      valuation_(nevan::valuation(value_, p)),
      prime_(p) {}

ValuedScalar operator+(const ValuedScalar& a, const ValuedScalar& b) {
  if (!(a.prime_ == b.prime_)) throw DomainError("mixed primes");
  return ValuedScalar(a.value_ + b.value_, a.prime_);
}

ValuedScalar operator*(const ValuedScalar& a, const ValuedScalar& b) {
  if (!(a.prime_ == b.prime_)) throw DomainError("mixed primes");
  return ValuedScalar(a.value_ * b.value_, a.prime_);
}

LogRadius::LogRadius(Rational s) : s_(std::move(s)) {
  if (s_ < 0) throw OutOfDomain("log-radius must be >= 0, got " + ToString(s_));
}

std::int64_t IntegerValuation(const Integer& n, Prime p) {
  if (n == 0) throw DomainError("valuation of zero integer");
  Integer rest;
  const Integer prime = p.AsInteger();
  return static_cast<std::int64_t>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

Valuation valuation(const Rational& x, Prime p) {
  if (x == 0) return Valuation::Infinite();
  return Valuation(IntegerValuation(x.get_num(), p) -
                   IntegerValuation(x.get_den(), p));
}

std::optional<Rational> log_abs(const Rational& x, Prime p) {
  const Valuation v = valuation(x, p);
  if (v.is_infinite()) return std::nullopt;
  return Rational(-v.value());
}

}  // namespace nevan
