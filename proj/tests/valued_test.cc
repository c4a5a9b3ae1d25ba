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

#include <gtest/gtest.h>

#include "nevan/error.h"
#include "testing.h"

namespace nevan {
namespace {

// Valuation by repeated division, independent of mpz_remove.
std::int64_t SlowValuation(Integer n, unsigned long p) {
  std::int64_t v = 0;
  if (n < 0) n = -n;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

TEST(PrimeTest, RejectsComposites) {
  EXPECT_THROW(Prime(0), DomainError);
  EXPECT_THROW(Prime(1), DomainError);
  EXPECT_THROW(Prime(9), DomainError);
  EXPECT_EQ(Prime(7).value(), 7u);
}

TEST(ValuationTest, Examples) {
  EXPECT_EQ(valuation(12, Prime(2)), Valuation(2));
  EXPECT_TRUE(valuation(0, Prime(5)).is_infinite());
  EXPECT_EQ(valuation(Ratio(3, 4), Prime(2)), Valuation(-2));
}

TEST(ValuationTest, InfinityIsLargest) {
  EXPECT_LT(Valuation(1000000), Valuation::Infinite());
  EXPECT_LT(Valuation(-3), Valuation(2));
  EXPECT_TRUE((Valuation(4) + Valuation::Infinite()).is_infinite());
  EXPECT_THROW(Valuation::Infinite().value(), DomainError);
}

TEST(LogAbsTest, Examples) {
  EXPECT_EQ(log_abs(8, Prime(2)), Rational(-3));
  EXPECT_EQ(log_abs(1, Prime(7)), Rational(0));
  EXPECT_EQ(log_abs(Ratio(1, 9), Prime(3)), Rational(2));
  EXPECT_FALSE(log_abs(0, Prime(3)).has_value());
}

TEST(ValuationTest, MatchesRepeatedDivision) {
  testing::Rng rng(11);
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (int i = 0; i < 200; ++i) {
      Integer num = rng.Int(1, 5000);
      Integer den = rng.Int(1, 5000);
      for (int k = rng.Int(0, 4); k > 0; --k) num *= p;
      const Rational x = Rational(num) / Rational(den);
      EXPECT_EQ(valuation(x, Prime(p)).value(),
                SlowValuation(x.get_num(), p) -
                    SlowValuation(x.get_den(), p));
    }
  }
}

TEST(ValuationTest, UltrametricLaws) {
  testing::Rng rng(12);
  for (unsigned long pv : {2ul, 3ul, 5ul}) {
    const Prime p(pv);
    for (int i = 0; i < 300; ++i) {
      const Rational x = rng.NonzeroRational(40);
      const Rational y = rng.NonzeroRational(40);
      const Valuation vx = valuation(x, p);
      const Valuation vy = valuation(y, p);
      EXPECT_EQ(valuation(x * y, p), vx + vy);
      const Valuation vs = valuation(x + y, p);
      EXPECT_GE(vs, std::min(vx, vy));
      if (vx != vy) {
        EXPECT_EQ(vs, std::min(vx, vy));
      }
      // log_abs is a homomorphism.
      EXPECT_EQ(*log_abs(x * y, p), *log_abs(x, p) + *log_abs(y, p));
      EXPECT_EQ(*log_abs(1 / x, p), -*log_abs(x, p));
    }
  }
}

TEST(ValuedScalarTest, CachesValuation) {
  const ValuedScalar a(Ratio(9, 2), Prime(3));
  const ValuedScalar b(Ratio(1, 3), Prime(3));
  EXPECT_EQ(a.valuation(), Valuation(2));
  EXPECT_EQ((a * b).valuation(), Valuation(1));
  EXPECT_EQ((a + b).value(), Ratio(29, 6));
  EXPECT_EQ((a + b).valuation(), Valuation(-1));
  EXPECT_THROW(a + ValuedScalar(1, Prime(2)), DomainError);
}

TEST(LogRadiusTest, DomainIsNonnegative) {
  EXPECT_THROW(LogRadius(Rational(-1)), OutOfDomain);
  EXPECT_EQ(LogRadius(Ratio(5, 2)).value(), Ratio(5, 2));
}

TEST(RationalTest, ParseAndFloor) {
  EXPECT_EQ(ParseRational("-6/4"), Ratio(-3, 2));
  EXPECT_EQ(ParseRational("+7"), Rational(7));
  EXPECT_THROW(ParseRational("1/0"), DomainError);
  EXPECT_THROW(ParseRational("x"), DomainError);
  EXPECT_EQ(Floor(Ratio(-3, 2)), Rational(-2));
  EXPECT_EQ(Floor(Ratio(27, 2)), Rational(13));
  EXPECT_EQ(ToString(Ratio(10, 45)), "2/9");
}

}  // namespace
}  // namespace nevan
