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

#include "nevan/polynomial.h"

#include <algorithm>
#include <cstdint>
#include <optional>

#include "nevan/error.h"

namespace nevan {
namespace {

using IntPoly = std::vector<Integer>;  // low to high, no trailing zeros

void TrimInt(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer Content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void MakePrimitive(IntPoly& p) {
  if (p.empty()) return;
  Integer g = Content(p);
  if (p.back() < 0) g = -g;
  if (g != 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

// Clears denominators: returns a primitive integer polynomial proportional
// to `a`, with positive leading coefficient.
IntPoly ToPrimitiveInt(const Polynomial& a) {
  Integer lcm = 1;
  for (const auto& c : a.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly out;
  out.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) {
    Integer v = lcm / c.get_den();
    out.push_back(v * c.get_num());
  }
  MakePrimitive(out);
  return out;
}

Polynomial FromInt(const IntPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) coeffs.emplace_back(c);
  return Polynomial(std::move(coeffs));
}

// Pseudo-remainder of a by b (b nonzero), made primitive.
IntPoly PrimitivePseudoRemainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (a.size() >= b.size()) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    TrimInt(a);
    // Keep coefficient growth in check between steps.
    MakePrimitive(a);
  }
  return a;
}

// a = scale * prim with prim primitive over Z; a nonzero.
struct ScaledIntPoly {
  Rational scale;
  IntPoly prim;
};

ScaledIntPoly Split(const Polynomial& a) {
  Integer lcm = 1;
  for (const auto& c : a.coefficients()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  IntPoly ints;
  ints.reserve(a.coefficients().size());
  for (const auto& c : a.coefficients()) {
    Integer v = lcm / c.get_den();
    ints.push_back(v * c.get_num());
  }
  Integer g = Content(ints);
  if (g != 1) {
    for (auto& c : ints) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  Rational scale(g, lcm);
  scale.canonicalize();
  return {std::move(scale), std::move(ints)};
}

Polynomial Join(const Rational& scale, const IntPoly& p) {
  std::vector<Rational> coeffs;
  coeffs.reserve(p.size());
  for (const auto& c : p) {
    Rational q(c);
    q *= scale;
    coeffs.push_back(std::move(q));
  }
  return Polynomial(std::move(coeffs));
}

IntPoly MulInt(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

// Quotient a / b over Z when b divides a exactly; b primitive, nonzero.
std::optional<IntPoly> ExactDivInt(IntPoly a, const IntPoly& b) {
  TrimInt(a);
  if (a.empty()) return IntPoly{};
  if (a.size() < b.size()) return std::nullopt;
  const std::size_t db = b.size() - 1;
  IntPoly quot(a.size() - db, Integer(0));
  Integer q;
  while (!a.empty()) {
    if (a.size() < b.size()) return std::nullopt;
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) {
      return std::nullopt;
    }
    mpz_divexact(q.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    const std::size_t shift = a.size() - 1 - db;
    quot[shift] = q;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(a[shift + j].get_mpz_t(), q.get_mpz_t(), b[j].get_mpz_t());
    }
    TrimInt(a);
  }
  return quot;
}

// ---------------------------------------------------------------------------
// Modular gcd: gcds modulo word-size primes, lifted by CRT until a candidate
// divides both inputs. Unlucky primes give too large a degree and are
// discarded.

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using ModPoly = std::vector<u64>;

u64 MulMod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 PowMod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  while (e > 0) {
    if (e & 1U) r = MulMod(r, a, m);
    a = MulMod(a, a, m);
    e >>= 1U;
  }
  return r;
}

u64 InvMod(u64 a, u64 m) { return PowMod(a, m - 2, m); }

const std::vector<u64>& GcdPrimes() {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    Integer candidate = Integer(1) << 62;
    for (int i = 0; i < 256; ++i) {
      mpz_nextprime(candidate.get_mpz_t(), candidate.get_mpz_t());
      out.push_back(candidate.get_ui());
    }
    return out;
  }();
  return primes;
}

ModPoly Reduce(const IntPoly& a, u64 m) {
  ModPoly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = mpz_fdiv_ui(a[i].get_mpz_t(), m);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Monic gcd over Z/m.
ModPoly GcdMod(ModPoly a, ModPoly b, u64 m) {
  while (!b.empty()) {
    const u64 inv = InvMod(b.back(), m);
    const std::size_t db = b.size() - 1;
    while (a.size() >= b.size()) {
      const u64 q = MulMod(a.back(), inv, m);
      const std::size_t shift = a.size() - 1 - db;
      for (std::size_t j = 0; j <= db; ++j) {
        const u64 t = MulMod(q, b[j], m);
        u64& x = a[shift + j];
        x = x >= t ? x - t : x + (m - t);
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const u64 inv = InvMod(a.back(), m);
    for (auto& c : a) c = MulMod(c, inv, m);
  }
  return a;
}

bool Divides(const IntPoly& g, const IntPoly& a) {
  return ExactDivInt(a, g).has_value();
}

// Both inputs primitive with positive leading coefficient, degree >= 1.
IntPoly GcdPrimitivePrs(IntPoly x, IntPoly y) {
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return {1};
    IntPoly r = PrimitivePseudoRemainder(std::move(x), y);
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

IntPoly GcdModular(const IntPoly& a, const IntPoly& b) {
  Integer lc_gcd;
  mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
  std::size_t best_degree = std::min(a.size(), b.size());
  Integer modulus = 1;
  IntPoly lifted;
  IntPoly previous;
  for (u64 m : GcdPrimes()) {
    if (mpz_fdiv_ui(a.back().get_mpz_t(), m) == 0 ||
        mpz_fdiv_ui(b.back().get_mpz_t(), m) == 0) {
      continue;
    }
    ModPoly g = GcdMod(Reduce(a, m), Reduce(b, m), m);
    const std::size_t degree = g.size() - 1;
    if (degree == 0) return {1};
    if (degree > best_degree) continue;
    if (degree < best_degree) {
      // Every earlier prime was unlucky.
      best_degree = degree;
      modulus = 1;
      lifted.clear();
      previous.clear();
    }
    // Scale so the leading coefficient is lc_gcd, which the true gcd's
    // multiple lc_gcd/lc(G) * G also has.
    const u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), m);
    for (auto& c : g) c = MulMod(c, scale, m);
    if (lifted.empty()) {
      lifted.assign(g.size(), Integer(0));
      for (std::size_t i = 0; i < g.size(); ++i) lifted[i] = g[i];
      modulus = m;
    } else {
      // CRT: x = r (mod M), x = g (mod m).
      const Integer mz(static_cast<unsigned long>(m));
      const u64 m_inv = InvMod(mpz_fdiv_ui(modulus.get_mpz_t(), m), m);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const u64 r_mod = mpz_fdiv_ui(lifted[i].get_mpz_t(), m);
        const u64 diff = g[i] >= r_mod ? g[i] - r_mod : g[i] + (m - r_mod);
        const u64 t = MulMod(diff, m_inv, m);
        lifted[i] += modulus * Integer(static_cast<unsigned long>(t));
      }
      modulus *= mz;
    }
    // Symmetric representatives.
    IntPoly candidate = lifted;
    const Integer half = modulus / 2;
    for (auto& c : candidate) {
      if (c > half) c -= modulus;
    }
    if (candidate == previous) {
      IntPoly pp = candidate;
      MakePrimitive(pp);
      if (Divides(pp, a) && Divides(pp, b)) return pp;
    }
    previous = std::move(candidate);
  }
  return GcdPrimitivePrs(a, b);
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  Trim();
}

Polynomial Polynomial::Constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::Monomial(const Rational& c, int n) {
  if (n < 0) throw DomainError("negative monomial degree");
  std::vector<Rational> coeffs(static_cast<std::size_t>(n) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::operator[](int j) const {
  if (j < 0 || j > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(j)];
}

int Polynomial::LowestDegree() const {
  if (IsZero()) throw DomainError("order at 0 of the zero polynomial");
  int j = 0;
  while (coeffs_[static_cast<std::size_t>(j)] == 0) ++j;
  return j;
}

Rational Polynomial::Evaluate(const Rational& z) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

Polynomial Polynomial::Derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    out[j - 1] = coeffs_[j] * static_cast<unsigned long>(j);
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::Monic() const {
  if (IsZero()) return {};
  const Rational inv = 1 / leading();
  return inv * *this;
}

Polynomial Polynomial::StripZ() const {
  if (IsZero()) return {};
  const int k = LowestDegree();
  return Polynomial(std::vector<Rational>(coeffs_.begin() + k, coeffs_.end()));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t j = 0; j < o.coeffs_.size(); ++j) coeffs_[j] -= o.coeffs_[j];
  Trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.IsZero() || b.IsZero()) return {};
  if (a.IsConstant()) return a[0] * b;
  if (b.IsConstant()) return b[0] * a;
  // Integer products avoid a gcd per coefficient operation.
  const ScaledIntPoly x = Split(a);
  const ScaledIntPoly y = Split(b);
  return Join(x.scale * y.scale, MulInt(x.prim, y.prim));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
  if (c == 0) return {};
  std::vector<Rational> out = a.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a) { return Rational(-1) * a; }

Polynomial Pow(const Polynomial& base, int exponent) {
  if (exponent < 0) throw DomainError("negative polynomial exponent");
  Polynomial result = Polynomial::Constant(1);
  Polynomial square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

std::pair<Polynomial, Polynomial> DivMod(const Polynomial& a,
                                         const Polynomial& b) {
  if (b.IsZero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const int db = b.degree();
  const Rational inv_lead = 1 / b.leading();
  std::vector<Rational> quot(static_cast<std::size_t>(a.degree() - db) + 1);
  for (int k = a.degree() - db; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + db)] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial ExactDiv(const Polynomial& a, const Polynomial& b) {
  if (b.IsZero()) throw DomainError("polynomial division by zero");
  if (a.IsZero()) return {};
  if (b.IsConstant()) return (1 / b[0]) * a;
  // By Gauss's lemma the quotient of primitive parts is integral.
  const ScaledIntPoly x = Split(a);
  const ScaledIntPoly y = Split(b);
  const std::optional<IntPoly> q = ExactDivInt(x.prim, y.prim);
  if (!q) throw DomainError("inexact polynomial division");
  return Join(x.scale / y.scale, *q);
}

std::pair<Rational, Polynomial> PrimitivePart(const Polynomial& a) {
  if (a.IsZero()) throw DomainError("primitive part of zero polynomial");
  Polynomial prim = FromInt(ToPrimitiveInt(a));
  return {a.leading() / prim.leading(), std::move(prim)};
}

Polynomial Gcd(const Polynomial& a, const Polynomial& b) {
  if (a.IsZero()) return b.Monic();
  if (b.IsZero()) return a.Monic();
  if (a.IsConstant() || b.IsConstant()) return Polynomial::Constant(1);
  // Common power of z first; it is cheap and frequent.
  const int k = std::min(a.LowestDegree(), b.LowestDegree());
  const IntPoly x = ToPrimitiveInt(a.StripZ());
  const IntPoly y = ToPrimitiveInt(b.StripZ());
  const IntPoly g_int = x.size() == 1 || y.size() == 1 ? IntPoly{1}
                                                        : GcdModular(x, y);
  Polynomial g = FromInt(g_int).Monic();
  return k > 0 ? Polynomial::Monomial(1, k) * g : g;
}

std::vector<SquarefreeFactor> SquarefreeDecompose(const Polynomial& f) {
  if (f.IsZero()) throw DomainError("squarefree decomposition of zero");
  std::vector<SquarefreeFactor> out;
  if (f.IsConstant()) return out;
  // Yun: with a0 = gcd(f, f'), b = f/a0, d = f'/a0 - b', each step peels
  // off the product of the factors of multiplicity i.
  const Polynomial fm = f.Monic();
  const Polynomial df = fm.Derivative();
  const Polynomial a0 = Gcd(fm, df);
  Polynomial b = ExactDiv(fm, a0);
  Polynomial c = ExactDiv(df, a0);
  Polynomial d = c - b.Derivative();
  for (int i = 1; !b.IsConstant(); ++i) {
    const Polynomial a = Gcd(b, d);
    if (!a.IsConstant()) out.push_back({a, i});
    b = ExactDiv(b, a);
    c = ExactDiv(d, a);
    d = c - b.Derivative();
  }
  return out;
}

Polynomial Radical(const Polynomial& f) {
  Polynomial out = Polynomial::Constant(1);
  for (const auto& [factor, multiplicity] : SquarefreeDecompose(f)) {
    out *= factor;
  }
  return out;
}

std::string ToString(const Polynomial& p) {
  if (p.IsZero()) return "0";
  std::string out;
  for (int j = p.degree(); j >= 0; --j) {
    Rational c = p[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const bool unit = c == 1 && j > 0;
    if (!unit) out += ToString(c);
    if (j > 0) {
      if (!unit) out += "*";
      out += "z";
      if (j > 1) out += "^" + std::to_string(j);
    }
  }
  return out;
}

}  // namespace nevan
