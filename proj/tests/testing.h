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

// Shared helpers for the test suites: shorthand constructors and a seeded
// generator of random polynomials and rational functions.

#ifndef NEVAN_TESTS_TESTING_H_
#define NEVAN_TESTS_TESTING_H_

#include <cstdint>
#include <ostream>
#include <random>
#include <vector>

#include "nevan/pl_function.h"
#include "nevan/polynomial.h"
#include "nevan/rational_function.h"
#include "nevan/valued.h"

namespace nevan {

inline void PrintTo(const PLFunction& f, std::ostream* os) { *os << ToString(f); }
inline void PrintTo(const Polynomial& f, std::ostream* os) { *os << ToString(f); }
inline void PrintTo(const RationalFunction& f, std::ostream* os) {
  *os << ToString(f);
}
inline void PrintTo(const Target& a, std::ostream* os) { *os << ToString(a); }

}  // namespace nevan

namespace nevan::testing {

inline RationalFunction Z() { return RationalFunction::Z(); }

inline RationalFunction C(long num, long den = 1) {
  return RationalFunction::Constant(Ratio(num, den));
}

inline Target Inf() { return Target::Infinity(); }

// z - c.
inline Polynomial Root(const Rational& c) {
  return Polynomial({Rational(-c), Rational(1)});
}

// p^k for any integer k.
inline Rational PrimePower(Prime p, int k) {
  Rational out = 1;
  for (int i = 0; i < (k < 0 ? -k : k); ++i) out *= p.value();
  return k < 0 ? Rational(1 / out) : out;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int Int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(engine_);
  }

  template <typename T>
  const T& Pick(const std::vector<T>& items) {
    return items[static_cast<std::size_t>(
        Int(0, static_cast<int>(items.size()) - 1))];
  }

  // num/den with |num| <= range, 1 <= den <= range.
  Rational SmallRational(int range = 6) {
    return Ratio(Int(-range, range), Int(1, range));
  }

  Rational NonzeroRational(int range = 6) {
    Rational q;
    do {
      q = SmallRational(range);
    } while (q == 0);
    return q;
  }

  // Degree exactly `degree`, coefficients small rationals.
  Polynomial Poly(int degree, int range = 6) {
    std::vector<Rational> c;
    for (int j = 0; j < degree; ++j) c.push_back(SmallRational(range));
    c.push_back(NonzeroRational(range));
    return Polynomial(std::move(c));
  }

  // Nonzero polynomial of degree in [0, max_degree] with integer
  // coefficients scaled by powers of p up to p^spread.
  Polynomial ValuedPoly(int max_degree, Prime p, int spread = 3) {
    std::vector<Rational> c;
    const int degree = Int(0, max_degree);
    for (int j = 0; j <= degree; ++j) {
      Rational a = Int(-5, 5);
      if (j == degree && a == 0) a = 1;
      const int e = Int(-spread, spread);
      Rational scale = 1;
      for (int i = 0; i < (e < 0 ? -e : e); ++i) scale *= p.value();
      c.push_back(e < 0 ? Rational(a / scale) : Rational(a * scale));
    }
    return Polynomial(std::move(c));
  }

  // A p-adic unit num/den.
  Rational Unit(Prime p) {
    const long prime = static_cast<long>(p.value());
    long num = 0;
    long den = 0;
    do {
      num = Int(-30, 30);
    } while (num == 0 || num % prime == 0);
    do {
      den = Int(1, 12);
    } while (den % prime == 0);
    return Ratio(num, den);
  }

  RationalFunction Function(int max_degree, int range = 4) {
    return RationalFunction(Poly(Int(0, max_degree), range),
                            Poly(Int(0, max_degree), range));
  }

  RationalFunction Nonconstant(int max_degree, int range = 4) {
    RationalFunction f;
    do {
      f = Function(max_degree, range);
    } while (f.IsConstant());
    return f;
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nevan::testing

#endif  // NEVAN_TESTS_TESTING_H_
