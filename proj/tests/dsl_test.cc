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


#include "nevan/dsl.h"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>

#include "testing.h"

namespace nevan::dsl {
namespace {

using testing::C;
using testing::Z;

RationalFunction Eval(std::string_view text, unsigned long p = 2) {
  return ElaborateFunction(*Parse(text), Prime(p));
}

TEST(DslParseTest, Examples) {
  EXPECT_EQ(Eval("z^2 - 2"), Z() * Z() - C(2));
  EXPECT_EQ(Eval("(z^2-1)/(z-1)"), Z() + C(1));
  EXPECT_EQ(Eval("-z^2"), -(Z() * Z()));
  EXPECT_EQ(Eval("2^-2*z"), C(1, 4) * Z());
  EXPECT_EQ(Eval("p*z", 5), C(5) * Z());
  EXPECT_EQ(Eval("deriv(z^3 + 1/z)"), C(3) * Z() * Z() - C(1) / (Z() * Z()));
  EXPECT_EQ(Eval("prod(k = 1..3, 1 - p^k*z)"),
            (C(1) - C(2) * Z()) * (C(1) - C(4) * Z()) * (C(1) - C(8) * Z()));
  EXPECT_EQ(ToString(Eval("prod(k=1..3, 1 - p^k*z)")), "-64*z^3 + 56*z^2 - 14*z + 1");
  EXPECT_TRUE(Elaborate(*Parse("inf"), Prime(2)).is_infinity());
  EXPECT_EQ(Eval("1 - 2 - 3"), C(-4));
  EXPECT_EQ(Eval("12/4/3"), C(1));
  EXPECT_EQ(Eval("2^3^2"), C(512));
}

TEST(DslParseTest, Errors) {
  try {
    Parse("z +");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1);
    EXPECT_EQ(e.column(), 4);
    EXPECT_EQ(std::string(e.what()).rfind("1:4: unexpected end of input", 0), 0u)
        << e.what();
    EXPECT_FALSE(e.expected().empty());
  }
  EXPECT_THROW(Parse("z z"), ParseError);
  EXPECT_THROW(Parse("w + 1"), ParseError);
  EXPECT_THROW(Parse("(z"), ParseError);
  EXPECT_THROW(Parse("prod(k = 1..2 z)"), ParseError);
  EXPECT_THROW(Parse("z $ 1"), ParseError);
  EXPECT_NO_THROW(Parse("w + 1", {.names = {"w"}}));
  // The prod variable is not visible outside the product.
  EXPECT_THROW(Parse("prod(k = 1..2, z - k) + k"), ParseError);
}

TEST(DslElaborateTest, DomainErrors) {
  for (const char* text :
       {"1/(z - z)", "z^(1/2)", "0^-1", "z^5000", "prod(k = 3..1, z)",
        "prod(k = 1..9999, z)", "inf + 1", "z^z", "prod(k = 1/2..3, z)"}) {
    EXPECT_THROW(Elaborate(*Parse(text), Prime(2)), DomainError) << text;
  }
  EXPECT_THROW(ElaborateFunction(*Parse("inf"), Prime(2)), DomainError);
}

TEST(DslPrintTest, Examples) {
  EXPECT_EQ(Print(*Parse("(z + 1) * (z - 1)")), "(z + 1)*(z - 1)");
  EXPECT_EQ(Print(*Parse("((z))^2")), "z^2");
  EXPECT_EQ(Print(*Parse("1 - (2 - z)")), "1 - (2 - z)");
  EXPECT_EQ(Print(*Parse("(1 - 2) - z")), "1 - 2 - z");
}

// Random expression trees over the grammar, bounded so that elaboration
// stays cheap.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  ExprPtr Gen(int depth, const std::vector<std::string>& vars) {
    auto e = std::make_shared<Expr>();
    const int choice = depth <= 0 ? rng_.Int(0, 3) : rng_.Int(0, 12);
    switch (choice) {
      case 0:
        e->kind = ExprKind::kInteger;
        e->value = rng_.Int(0, 9);
        break;
      case 1:
        e->kind = ExprKind::kZ;
        break;
      case 2:
        e->kind = ExprKind::kP;
        break;
      case 3:
        if (vars.empty()) return Gen(0, vars);
        e->kind = ExprKind::kName;
        e->name = rng_.Pick(vars);
        break;
      case 4:
      case 5:
        e->kind = ExprKind::kAdd;
        break;
      case 6:
        e->kind = ExprKind::kSub;
        break;
      case 7:
        e->kind = ExprKind::kMul;
        break;
      case 8:
        e->kind = ExprKind::kDiv;
        break;
      case 9: {
        e->kind = ExprKind::kPow;
        e->args = {Gen(depth - 1, vars), Small()};
        return e;
      }
      case 10:
        e->kind = ExprKind::kNeg;
        e->args = {Gen(depth - 1, vars)};
        return e;
      case 11: {
        e->kind = ExprKind::kProd;
        e->name = "k" + std::to_string(depth);
        std::vector<std::string> inner = vars;
        inner.push_back(e->name);
        e->args = {Small(), Small(), Gen(depth - 1, inner)};
        return e;
      }
      default:
        e->kind = ExprKind::kDeriv;
        e->args = {Gen(depth - 1, vars)};
        return e;
    }
    if (choice >= 4) e->args = {Gen(depth - 1, vars), Gen(depth - 1, vars)};
    return e;
  }

 private:
  // A small integer, possibly negated.
  ExprPtr Small() {
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::kInteger;
    e->value = rng_.Int(0, 3);
    if (rng_.Int(0, 3) == 0) {
      auto neg = std::make_shared<Expr>();
      neg->kind = ExprKind::kNeg;
      neg->args = {e};
      return neg;
    }
    return e;
  }

  testing::Rng rng_;
};

TEST(DslPrintTest, RoundTripOnGeneratedTrees) {
  Generator gen(21);
  for (int i = 0; i < 2000; ++i) {
    const ExprPtr e = gen.Gen(4, {});
    const std::string text = Print(*e);
    ExprPtr back;
    ASSERT_NO_THROW(back = Parse(text)) << text;
    EXPECT_TRUE(Equal(*e, *back)) << text << " -> " << Print(*back);
    EXPECT_EQ(Print(*back), text);
  }
}

TEST(DslElaborateTest, TotalExceptDeclaredErrors) {
  Generator gen(22);
  int ok = 0;
  for (int i = 0; i < 2000; ++i) {
    const ExprPtr e = gen.Gen(4, {});
    try {
      const Target t = Elaborate(*e, Prime(3));
      if (!t.is_infinity()) {
        // Printing the value and reading it back gives the same function.
        EXPECT_EQ(ElaborateFunction(*Parse(ToString(t.function())), Prime(3)),
                  t.function());
      }
      ++ok;
    } catch (const DomainError&) {
    }
  }
  EXPECT_GT(ok, 1000);
}

TEST(DslFixtureTest, ParseAndElaborate) {
  const Fixture fx = Fixture::Parse(
      "# two functions\n"
      "f := z^2 - 1   # trailing comment\n"
      "\n"
      "g := f * (z + p)\n"
      "a5 := inf\n");
  EXPECT_EQ(fx.names(), (std::vector<std::string>{"f", "g", "a5"}));
  EXPECT_TRUE(fx.Has("g"));
  EXPECT_FALSE(fx.Has("h"));
  const Bindings b = fx.Elaborate(Prime(3));
  EXPECT_EQ(b.at("g").function(), (Z() * Z() - C(1)) * (Z() + C(3)));
  EXPECT_TRUE(b.at("a5").is_infinity());
  EXPECT_EQ(Print(fx.Definition("g")), "f*(z + p)");
  // Names resolve inside later expressions.
  EXPECT_EQ(ElaborateFunction(*Parse("g - f", {.names = {"f", "g"}}), Prime(3),
                              b),
            (Z() * Z() - C(1)) * (Z() + C(2)));
}

TEST(DslFixtureTest, Errors) {
  auto error_of = [](std::string_view text) -> std::string {
    try {
      Fixture::Parse(text);
    } catch (const Error& e) {
      return e.what();
    }
    return "";
  };
  EXPECT_EQ(error_of("f := z\ng := h + 1\n").rfind("2:6:", 0), 0u)
      << error_of("f := z\ng := h + 1\n");
  EXPECT_FALSE(error_of("f = z\n").empty());
  EXPECT_FALSE(error_of("f := z\nf := z^2\n").empty());
  EXPECT_FALSE(error_of("z := 1\n").empty());
  EXPECT_FALSE(error_of("f := (z\n").empty());
  EXPECT_THROW(Fixture::Parse("f := 1/(z-z)\n").Elaborate(Prime(2)),
               DomainError);
  EXPECT_THROW(Fixture::Load("/nonexistent/fixture.txt"), Error);
}

TEST(DslFixtureTest, Load) {
  const std::string path = ::testing::TempDir() + "nevan_fixture.txt";
  {
    std::ofstream out(path);
    out << "f := z^3\n";
  }
  const Fixture fx = Fixture::Load(path);
  EXPECT_EQ(fx.Elaborate(Prime(2)).at("f").function(), Z() * Z() * Z());
  std::remove(path.c_str());
}

}  // namespace
}  // namespace nevan::dsl
