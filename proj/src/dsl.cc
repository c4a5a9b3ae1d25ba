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

#include <cctype>
#include <fstream>
#include <sstream>

namespace nevan::dsl {
namespace {

enum class Tok {
  kInt,
  kIdent,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kCaret,
  kLParen,
  kRParen,
  kComma,
  kEquals,
  kDotDot,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

const std::set<std::string>& Reserved() {
  static const std::set<std::string> words{"z", "p", "inf", "prod", "deriv"};
  return words;
}

std::string Describe(const Token& t) {
  return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
}

std::vector<Token> Lex(std::string_view text, int line, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, column});
    i += len;
    column += static_cast<int>(len);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++i;
      ++line;
      column = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t n = 0;
      while (i + n < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[i + n]))) {
        ++n;
      }
      push(Tok::kInt, n);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t n = 0;
      while (i + n < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[i + n])) ||
              text[i + n] == '_')) {
        ++n;
      }
      push(Tok::kIdent, n);
      continue;
    }
    if (c == '.' && i + 1 < text.size() && text[i + 1] == '.') {
      push(Tok::kDotDot, 2);
      continue;
    }
    switch (c) {
      case '+': push(Tok::kPlus, 1); continue;
      case '-': push(Tok::kMinus, 1); continue;
      case '*': push(Tok::kStar, 1); continue;
      case '/': push(Tok::kSlash, 1); continue;
      case '^': push(Tok::kCaret, 1); continue;
      case '(': push(Tok::kLParen, 1); continue;
      case ')': push(Tok::kRParen, 1); continue;
      case ',': push(Tok::kComma, 1); continue;
      case '=': push(Tok::kEquals, 1); continue;
      default:
        throw ParseError(line, column,
                         std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, const ParseOptions& options)
      : tokens_(std::move(tokens)), options_(options) {}

  ExprPtr Run() {
    ExprPtr e = ParseExpr();
    if (Peek().kind != Tok::kEnd) {
      Fail("unexpected " + Describe(Peek()),
           {"+", "-", "*", "/", "^", "end of input"});
    }
    return e;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  Token Next() { return tokens_[pos_++]; }

  [[noreturn]] void Fail(const std::string& message,
                         std::vector<std::string> expected) const {
    throw ParseError(Peek().line, Peek().column, message, std::move(expected));
  }

  Token Expect(Tok kind, const std::string& spelling) {
    if (Peek().kind != kind) {
      Fail("expected '" + spelling + "', found " + Describe(Peek()),
           {spelling});
    }
    return Next();
  }

  static ExprPtr Make(ExprKind kind, const Token& at,
                      std::vector<ExprPtr> args = {}) {
    auto e = std::make_shared<Expr>();
    e->kind = kind;
    e->args = std::move(args);
    e->line = at.line;
    e->column = at.column;
    return e;
  }

  ExprPtr ParseExpr() {
    ExprPtr left = ParseTerm();
    while (Peek().kind == Tok::kPlus || Peek().kind == Tok::kMinus) {
      const Token op = Next();
      ExprPtr right = ParseTerm();
      left = Make(op.kind == Tok::kPlus ? ExprKind::kAdd : ExprKind::kSub, op,
                  {left, right});
    }
    return left;
  }

  ExprPtr ParseTerm() {
    ExprPtr left = ParseUnary();
    while (Peek().kind == Tok::kStar || Peek().kind == Tok::kSlash) {
      const Token op = Next();
      ExprPtr right = ParseUnary();
      left = Make(op.kind == Tok::kStar ? ExprKind::kMul : ExprKind::kDiv, op,
                  {left, right});
    }
    return left;
  }

  ExprPtr ParseUnary() {
    if (Peek().kind == Tok::kMinus) {
      const Token op = Next();
      return Make(ExprKind::kNeg, op, {ParseUnary()});
    }
    return ParsePower();
  }

  ExprPtr ParsePower() {
    ExprPtr base = ParsePrimary();
    if (Peek().kind == Tok::kCaret) {
      const Token op = Next();
      return Make(ExprKind::kPow, op, {base, ParseUnary()});
    }
    return base;
  }

  ExprPtr ParsePrimary() {
    const Token t = Peek();
    switch (t.kind) {
      case Tok::kInt: {
        Next();
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::kInteger;
        e->value = Integer(t.text);
        e->line = t.line;
        e->column = t.column;
        return e;
      }
      case Tok::kLParen: {
        Next();
        ExprPtr e = ParseExpr();
        Expect(Tok::kRParen, ")");
        return e;
      }
      case Tok::kIdent:
        return ParseIdentifier();
      default:
        Fail(t.kind == Tok::kEnd ? "unexpected end of input"
                                 : "unexpected " + Describe(t),
             {"(", "-", "deriv", "identifier", "inf", "integer", "p", "prod",
              "z"});
    }
  }

  ExprPtr ParseIdentifier() {
    const Token t = Next();
    if (t.text == "z") return Make(ExprKind::kZ, t);
    if (t.text == "p") return Make(ExprKind::kP, t);
    if (t.text == "inf") return Make(ExprKind::kInf, t);
    if (t.text == "deriv") {
      Expect(Tok::kLParen, "(");
      ExprPtr body = ParseExpr();
      Expect(Tok::kRParen, ")");
      return Make(ExprKind::kDeriv, t, {body});
    }
    if (t.text == "prod") {
      Expect(Tok::kLParen, "(");
      if (Peek().kind != Tok::kIdent || Reserved().count(Peek().text) > 0) {
        Fail("expected a bound variable name", {"identifier"});
      }
      const std::string var = Next().text;
      Expect(Tok::kEquals, "=");
      ExprPtr lo = ParseExpr();
      Expect(Tok::kDotDot, "..");
      ExprPtr hi = ParseExpr();
      Expect(Tok::kComma, ",");
      scope_.push_back(var);
      ExprPtr body = ParseExpr();
      scope_.pop_back();
      Expect(Tok::kRParen, ")");
      auto e = std::const_pointer_cast<Expr>(Make(ExprKind::kProd, t, {lo, hi, body}));
      e->name = var;
      return e;
    }
    bool known = options_.names.count(t.text) > 0;
    for (const auto& v : scope_) known = known || v == t.text;
    if (!known) {
      throw ParseError(t.line, t.column,
                       "unknown identifier '" + t.text + "'");
    }
    auto e = std::const_pointer_cast<Expr>(Make(ExprKind::kName, t));
    e->name = t.text;
    return e;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const ParseOptions& options_;
  std::vector<std::string> scope_;
};

int Precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::kAdd:
    case ExprKind::kSub:
      return 1;
    case ExprKind::kMul:
    case ExprKind::kDiv:
      return 2;
    case ExprKind::kNeg:
      return 3;
    case ExprKind::kPow:
      return 4;
    case ExprKind::kInteger:
      return e.value < 0 ? 3 : 5;
    default:
      return 5;
  }
}

std::string PrintAt(const Expr& e, int min_precedence) {
  std::string s;
  switch (e.kind) {
    case ExprKind::kInteger:
      s = e.value < 0 ? "-" + Integer(-e.value).get_str() : e.value.get_str();
      break;
    case ExprKind::kZ: s = "z"; break;
    case ExprKind::kP: s = "p"; break;
    case ExprKind::kInf: s = "inf"; break;
    case ExprKind::kName: s = e.name; break;
    case ExprKind::kAdd:
      s = PrintAt(*e.args[0], 1) + " + " + PrintAt(*e.args[1], 2);
      break;
    case ExprKind::kSub:
      s = PrintAt(*e.args[0], 1) + " - " + PrintAt(*e.args[1], 2);
      break;
    case ExprKind::kMul:
      s = PrintAt(*e.args[0], 2) + "*" + PrintAt(*e.args[1], 3);
      break;
    case ExprKind::kDiv:
      s = PrintAt(*e.args[0], 2) + "/" + PrintAt(*e.args[1], 3);
      break;
    case ExprKind::kNeg:
      s = "-" + PrintAt(*e.args[0], 3);
      break;
    case ExprKind::kPow:
      s = PrintAt(*e.args[0], 5) + "^" + PrintAt(*e.args[1], 3);
      break;
    case ExprKind::kProd:
      s = "prod(" + e.name + "=" + PrintAt(*e.args[0], 1) + ".." +
          PrintAt(*e.args[1], 1) + ", " + PrintAt(*e.args[2], 1) + ")";
      break;
    case ExprKind::kDeriv:
      s = "deriv(" + PrintAt(*e.args[0], 1) + ")";
      break;
  }
  return Precedence(e) < min_precedence ? "(" + s + ")" : s;
}

class Elaborator {
 public:
  Elaborator(Prime prime, const Bindings& bindings)
      : prime_(prime), bindings_(bindings) {}

  Target Top(const Expr& e) {
    if (e.kind == ExprKind::kInf) return Target::Infinity();
    if (e.kind == ExprKind::kName && !IsBound(e.name)) {
      return Lookup(e);
    }
    return Target(Eval(e));
  }

 private:
  [[noreturn]] static void Fail(const Expr& e, const std::string& message) {
    throw DomainError(std::to_string(e.line) + ":" + std::to_string(e.column) +
                      ": " + message);
  }

  bool IsBound(const std::string& name) const {
    for (const auto& [v, value] : scope_) {
      if (v == name) return true;
    }
    return false;
  }

  Target Lookup(const Expr& e) const {
    auto it = bindings_.find(e.name);
    if (it == bindings_.end()) Fail(e, "unknown identifier '" + e.name + "'");
    return it->second;
  }

  long IntegerValue(const Expr& e, const std::string& what) {
    const RationalFunction v = Eval(e);
    if (!v.IsConstant() || v.ConstantValue().get_den() != 1) {
      Fail(e, what + " must be an integer constant");
    }
    const Integer n = v.ConstantValue().get_num();
    if (!n.fits_slong_p()) Fail(e, what + " out of range");
    return n.get_si();
  }

  RationalFunction Eval(const Expr& e) {
    switch (e.kind) {
      case ExprKind::kInteger:
        return RationalFunction::Constant(Rational(e.value));
      case ExprKind::kZ:
        return RationalFunction::Z();
      case ExprKind::kP:
        return RationalFunction::Constant(Rational(prime_.AsInteger()));
      case ExprKind::kInf:
        Fail(e, "inf cannot be used inside an expression");
      case ExprKind::kName: {
        for (auto it = scope_.rbegin(); it != scope_.rend(); ++it) {
          if (it->first == e.name) return RationalFunction::Constant(it->second);
        }
        const Target t = Lookup(e);
        if (t.is_infinity()) Fail(e, "'" + e.name + "' is inf");
        return t.function();
      }
      case ExprKind::kAdd: return Eval(*e.args[0]) + Eval(*e.args[1]);
      case ExprKind::kSub: return Eval(*e.args[0]) - Eval(*e.args[1]);
      case ExprKind::kMul: return Eval(*e.args[0]) * Eval(*e.args[1]);
      case ExprKind::kDiv: {
        const RationalFunction den = Eval(*e.args[1]);
        if (den.IsZero()) Fail(e, "division by zero");
        return Eval(*e.args[0]) / den;
      }
      case ExprKind::kNeg: return -Eval(*e.args[0]);
      case ExprKind::kPow: {
        const long n = IntegerValue(*e.args[1], "exponent");
        if (n > kMaxExponent || n < -kMaxExponent) {
          Fail(e, "exponent " + std::to_string(n) + " exceeds the limit");
        }
        const RationalFunction base = Eval(*e.args[0]);
        if (n < 0 && base.IsZero()) Fail(e, "zero to a negative power");
        return Pow(base, static_cast<int>(n));
      }
      case ExprKind::kProd: {
        const long lo = IntegerValue(*e.args[0], "lower bound");
        const long hi = IntegerValue(*e.args[1], "upper bound");
        if (lo > hi) Fail(e, "empty product range");
        if (hi - lo + 1 > kMaxProductLength) Fail(e, "product range too long");
        RationalFunction out = RationalFunction::Constant(1);
        for (long k = lo; k <= hi; ++k) {
          scope_.emplace_back(e.name, Rational(k));
          out *= Eval(*e.args[2]);
          scope_.pop_back();
        }
        return out;
      }
      case ExprKind::kDeriv:
        return Eval(*e.args[0]).Derivative();
    }
    Fail(e, "malformed expression");
  }

  Prime prime_;
  const Bindings& bindings_;
  std::vector<std::pair<std::string, Rational>> scope_;
};

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

bool IsIdentifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
    return false;
  }
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

bool Equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name ||
      a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!Equal(*a.args[i], *b.args[i])) return false;
  }
  return true;
}

ParseError::ParseError(int line, int column, std::string message,
                       std::vector<std::string> expected)
    : Error([&] {
        std::string m = std::to_string(line) + ":" + std::to_string(column) +
                        ": " + message;
        if (!expected.empty()) {
          m += " (expected one of:";
          for (const auto& e : expected) m += " " + e;
          m += ")";
        }
        return m;
      }()),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

ExprPtr Parse(std::string_view text, const ParseOptions& options) {
  return Parser(Lex(text, options.first_line, options.first_column), options)
      .Run();
}

std::string Print(const Expr& e) { return PrintAt(e, 0); }

Target Elaborate(const Expr& e, Prime prime, const Bindings& bindings) {
  return Elaborator(prime, bindings).Top(e);
}

RationalFunction ElaborateFunction(const Expr& e, Prime prime,
                                   const Bindings& bindings) {
  const Target t = Elaborate(e, prime, bindings);
  if (t.is_infinity()) {
    throw DomainError(std::to_string(e.line) + ":" + std::to_string(e.column) +
                      ": expected a function, got inf");
  }
  return t.function();
}

Fixture Fixture::Parse(std::string_view text) {
  Fixture out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (Trim(line).empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto def = line.find(":=");
    if (def == std::string_view::npos) {
      const auto first = line.find_first_not_of(" \t\r");
      throw ParseError(line_no, static_cast<int>(first) + 1,
                       "expected 'name := expr'", {":="});
    }
    const std::string name(Trim(line.substr(0, def)));
    const auto name_col = line.find_first_not_of(" \t\r") + 1;
    if (!IsIdentifier(name) || Reserved().count(name) > 0) {
      throw ParseError(line_no, static_cast<int>(name_col),
                       "invalid definition name '" + name + "'");
    }
    if (out.defs_.count(name) > 0) {
      throw ParseError(line_no, static_cast<int>(name_col),
                       "duplicate definition of '" + name + "'");
    }
    ParseOptions options;
    options.names.insert(out.order_.begin(), out.order_.end());
    options.first_line = line_no;
    options.first_column = static_cast<int>(def) + 3;
    out.defs_[name] = dsl::Parse(line.substr(def + 2), options);
    out.order_.push_back(name);
    if (end == text.size()) break;
  }
  return out;
}

Fixture Fixture::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read fixture file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return Parse(buffer.str());
}

bool Fixture::Has(std::string_view name) const {
  return defs_.find(name) != defs_.end();
}

const Expr& Fixture::Definition(std::string_view name) const {
  auto it = defs_.find(name);
  if (it == defs_.end()) {
    throw DomainError("no definition named '" + std::string(name) + "'");
  }
  return *it->second;
}

Bindings Fixture::Elaborate(Prime prime) const {
  Bindings out;
  for (const auto& name : order_) {
    out.emplace(name, dsl::Elaborate(*defs_.at(name), prime, out));
  }
  return out;
}

}  // namespace nevan::dsl
