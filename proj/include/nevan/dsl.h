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

// A small expression language for rational functions of z.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := INTEGER | 'z' | 'p' | 'inf' | IDENT
//            | '(' expr ')'
//            | 'prod' '(' IDENT '=' expr '..' expr ',' expr ')'
//            | 'deriv' '(' expr ')'
//
// `p` is bound to the session prime at elaboration. `inf` denotes the
// target infinity and may only appear as a whole expression. See
// docs/grammar.md for the fixture file format.

#ifndef NEVAN_DSL_H_
#define NEVAN_DSL_H_

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "nevan/error.h"
#include "nevan/rational_function.h"

namespace nevan::dsl {

enum class ExprKind {
  kInteger,
  kZ,
  kP,
  kInf,
  kName,  // bound variable or fixture name
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
  kNeg,
  kProd,   // args: lower, upper, body; name: bound variable
  kDeriv,
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  ExprKind kind = ExprKind::kInteger;
  Integer value;     // kInteger
  std::string name;  // kName, kProd
  std::vector<ExprPtr> args;
  int line = 1;
  int column = 1;
};

// Structural equality, ignoring positions.
bool Equal(const Expr& a, const Expr& b);

class ParseError : public Error {
 public:
  ParseError(int line, int column, std::string message,
             std::vector<std::string> expected = {});
  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

struct ParseOptions {
  // Identifiers accepted besides prod-bound variables.
  std::set<std::string> names;
  int first_line = 1;
  int first_column = 1;
};

ExprPtr Parse(std::string_view text, const ParseOptions& options = {});

// Minimal-parenthesis rendering; Parse(Print(e)) is structurally equal to e.
std::string Print(const Expr& e);

// Limits guarding elaboration.
inline constexpr long kMaxExponent = 4096;
inline constexpr long kMaxProductLength = 4096;

// Values of fixture names, already elaborated.
using Bindings = std::map<std::string, Target, std::less<>>;

// Evaluates e with p bound to `prime`. Throws DomainError on division by the
// zero function, non-integer exponents or bounds, oversize exponents or
// ranges, and `inf` inside arithmetic.
Target Elaborate(const Expr& e, Prime prime, const Bindings& bindings = {});
// As Elaborate, but rejects `inf`.
RationalFunction ElaborateFunction(const Expr& e, Prime prime,
                                   const Bindings& bindings = {});

// A fixture: ordered definitions `name := expr`, '#' starts a comment.
// Definitions may refer to earlier names.
class Fixture {
 public:
  static Fixture Parse(std::string_view text);
  static Fixture Load(const std::string& path);

  bool Has(std::string_view name) const;
  const std::vector<std::string>& names() const { return order_; }
  const Expr& Definition(std::string_view name) const;

  // All definitions elaborated under `prime`.
  Bindings Elaborate(Prime prime) const;

 private:
  std::vector<std::string> order_;
  std::map<std::string, ExprPtr, std::less<>> defs_;
};

}  // namespace nevan::dsl

#endif  // NEVAN_DSL_H_
