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

#include "nevan/pl_function.h"

#include <algorithm>
#include <utility>

#include "nevan/error.h"

namespace nevan {
namespace {

std::optional<Rational> MinEnd(const std::optional<Rational>& a,
                               const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Index of the piece containing s (the last piece whose start is <= s).
std::size_t PieceIndex(const std::vector<PLFunction::Piece>& pieces,
                       const Rational& s) {
  auto it = std::upper_bound(
      pieces.begin(), pieces.end(), s,
      [](const Rational& x, const PLFunction::Piece& p) { return x < p.start; });
  return static_cast<std::size_t>(it - pieces.begin()) - 1;
}

struct LocalLine {
  Rational value;
  Rational slope;
};

LocalLine LineAt(const PLFunction& f, const Rational& s) {
  const auto& pieces = f.pieces();
  const std::size_t i = PieceIndex(pieces, s);
  return {f.Eval(s), pieces[i].slope};
}

// Sorted union of the piece starts of f and g that lie before `end`.
std::vector<Rational> MergedStarts(const PLFunction& f, const PLFunction& g,
                                   const std::optional<Rational>& end) {
  std::vector<Rational> out;
  out.reserve(f.pieces().size() + g.pieces().size());
  for (const auto& p : f.pieces()) out.push_back(p.start);
  for (const auto& p : g.pieces()) out.push_back(p.start);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (end) {
    out.erase(std::remove_if(out.begin(), out.end(),
                             [&](const Rational& s) { return s >= *end; }),
              out.end());
  }
  return out;
}

enum class LatticeOp { kMax, kMin };

PLFunction Lattice(const PLFunction& f, const PLFunction& g, LatticeOp op) {
  const auto end = MinEnd(f.domain_end(), g.domain_end());
  const std::vector<Rational> starts = MergedStarts(f, g, end);
  auto pick_f = [op](const Rational& diff) {
    return op == LatticeOp::kMax ? diff >= 0 : diff <= 0;
  };
  std::vector<PLFunction::Piece> pieces;
  Rational value_at_0;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const Rational& left = starts[i];
    const std::optional<Rational> right =
        i + 1 < starts.size() ? std::optional<Rational>(starts[i + 1]) : end;
    const LocalLine lf = LineAt(f, left);
    const LocalLine lg = LineAt(g, left);
    const Rational diff = lf.value - lg.value;
    const Rational dslope = lf.slope - lg.slope;
    if (i == 0) value_at_0 = pick_f(diff) ? lf.value : lg.value;
    // Choose by the sign just to the right of `left`.
    const bool f_first = diff != 0 ? pick_f(diff) : pick_f(dslope);
    pieces.push_back({left, f_first ? lf.slope : lg.slope});
    if (diff != 0 && dslope != 0) {
      const Rational crossing = left - diff / dslope;
      if (crossing > left && (!right || crossing < *right)) {
        pieces.push_back({crossing, f_first ? lg.slope : lf.slope});
      }
    }
  }
  return PLFunction::FromPieces(value_at_0, std::move(pieces), end);
}

template <typename Op>
PLFunction Pointwise(const PLFunction& f, const PLFunction& g, Op op) {
  const auto end = MinEnd(f.domain_end(), g.domain_end());
  const std::vector<Rational> starts = MergedStarts(f, g, end);
  std::vector<PLFunction::Piece> pieces;
  pieces.reserve(starts.size());
  std::size_t fi = 0;
  std::size_t gi = 0;
  for (const Rational& s : starts) {
    while (fi + 1 < f.pieces().size() && f.pieces()[fi + 1].start <= s) ++fi;
    while (gi + 1 < g.pieces().size() && g.pieces()[gi + 1].start <= s) ++gi;
    pieces.push_back({s, op(f.pieces()[fi].slope, g.pieces()[gi].slope)});
  }
  return PLFunction::FromPieces(op(f.value_at_0(), g.value_at_0()),
                                std::move(pieces), end);
}

}  // namespace

PLFunction::PLFunction()
    : value_at_0_(0), pieces_{{Rational(0), Rational(0)}}, start_values_{0} {}

PLFunction PLFunction::Constant(const Rational& c,
                                std::optional<Rational> domain_end) {
  return FromPieces(c, {{Rational(0), Rational(0)}}, std::move(domain_end));
}

PLFunction PLFunction::Linear(const Rational& slope, const Rational& intercept,
                              std::optional<Rational> domain_end) {
  return FromPieces(intercept, {{Rational(0), slope}}, std::move(domain_end));
}

PLFunction PLFunction::FromPieces(const Rational& value_at_0,
                                  std::vector<Piece> pieces,
                                  std::optional<Rational> domain_end) {
  if (domain_end && *domain_end <= 0) {
    throw DomainError("PL domain end must be positive");
  }
  if (pieces.empty() || pieces.front().start != 0) {
    throw DomainError("PL pieces must start at 0");
  }
  PLFunction f;
  f.value_at_0_ = value_at_0;
  f.domain_end_ = std::move(domain_end);
  f.pieces_.clear();
  f.pieces_.reserve(pieces.size());
  for (auto& piece : pieces) {
    if (!f.pieces_.empty() && piece.start <= f.pieces_.back().start) {
      throw DomainError("PL breakpoints must be strictly increasing");
    }
    // Breakpoints at or past the end carry no information.
    if (f.domain_end_ && piece.start >= *f.domain_end_) break;
    if (!f.pieces_.empty() && f.pieces_.back().slope == piece.slope) continue;
    f.pieces_.push_back(std::move(piece));
  }
  f.start_values_.clear();
  f.start_values_.reserve(f.pieces_.size());
  Rational value = f.value_at_0_;
  for (std::size_t i = 0; i < f.pieces_.size(); ++i) {
    if (i > 0) {
      value += f.pieces_[i - 1].slope *
               (f.pieces_[i].start - f.pieces_[i - 1].start);
    }
    f.start_values_.push_back(value);
  }
  return f;
}

bool PLFunction::Contains(const Rational& s) const {
  return s >= 0 && (!domain_end_ || s <= *domain_end_);
}

Rational PLFunction::Eval(const LogRadius& radius) const {
  const Rational& s = radius.value();
  if (!Contains(s)) {
    throw OutOfDomain("s = " + ToString(s) + " outside PL domain");
  }
  const std::size_t i = PieceIndex(pieces_, s);
  return start_values_[i] + pieces_[i].slope * (s - pieces_[i].start);
}

std::vector<Rational> PLFunction::Vertices() const {
  std::vector<Rational> out;
  out.reserve(pieces_.size() + 1);
  for (const auto& p : pieces_) out.push_back(p.start);
  if (domain_end_) out.push_back(*domain_end_);
  return out;
}

std::optional<Rational> PLFunction::Infimum() const {
  if (!domain_end_ && final_slope() < 0) return std::nullopt;
  Rational best = start_values_.front();
  for (const auto& v : start_values_) best = std::min(best, v);
  if (domain_end_) best = std::min(best, Eval(*domain_end_));
  return best;
}

std::optional<Rational> PLFunction::Supremum() const {
  if (!domain_end_ && final_slope() > 0) return std::nullopt;
  Rational best = start_values_.front();
  for (const auto& v : start_values_) best = std::max(best, v);
  if (domain_end_) best = std::max(best, Eval(*domain_end_));
  return best;
}

Rational PLFunction::ArgInfimum() const {
  const auto inf = Infimum();
  if (!inf) throw DomainError("PL function unbounded below");
  for (const Rational& s : Vertices()) {
    if (Eval(s) == *inf) return s;
  }
  throw DomainError("infimum not attained");  // unreachable
}

bool PLFunction::IsZero() const {
  return value_at_0_ == 0 && pieces_.size() == 1 && pieces_[0].slope == 0;
}

bool PLFunction::IsConvex() const {
  for (std::size_t i = 1; i < pieces_.size(); ++i) {
    if (pieces_[i].slope < pieces_[i - 1].slope) return false;
  }
  return true;
}

bool PLFunction::IsNondecreasing() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const Piece& p) { return p.slope >= 0; });
}

PLFunction PLFunction::Restrict(const Rational& end) const {
  return FromPieces(value_at_0_, pieces_, MinEnd(domain_end_, end));
}

PLFunction operator+(const PLFunction& f, const PLFunction& g) {
  return Pointwise(f, g, [](const Rational& a, const Rational& b) {
    return Rational(a + b);
  });
}

PLFunction operator-(const PLFunction& f, const PLFunction& g) {
  return Pointwise(f, g, [](const Rational& a, const Rational& b) {
    return Rational(a - b);
  });
}

PLFunction operator-(const PLFunction& f) { return Rational(-1) * f; }

PLFunction operator*(const Rational& c, const PLFunction& f) {
  std::vector<PLFunction::Piece> pieces = f.pieces();
  for (auto& p : pieces) p.slope *= c;
  return PLFunction::FromPieces(c * f.value_at_0(), std::move(pieces),
                                f.domain_end());
}

PLFunction Max(const PLFunction& f, const PLFunction& g) {
  return Lattice(f, g, LatticeOp::kMax);
}

PLFunction Min(const PLFunction& f, const PLFunction& g) {
  return Lattice(f, g, LatticeOp::kMin);
}

PLFunction Pos(const PLFunction& f) {
  return Max(f, PLFunction::Constant(0, f.domain_end()));
}

PLFunction Sum(const std::vector<PLFunction>& terms) {
  PLFunction out;
  for (const auto& t : terms) out = out + t;
  return out;
}

std::string ToString(const PLFunction& f) {
  std::string out = "[0, ";
  out += f.domain_end() ? ToString(*f.domain_end()) : "inf";
  out += "] v0=" + ToString(f.value_at_0()) + "; {";
  for (std::size_t i = 0; i < f.pieces().size(); ++i) {
    if (i > 0) out += ", ";
    out += ToString(f.pieces()[i].start) + ": " +
           ToString(f.pieces()[i].slope);
  }
  return out + "}";
}

}  // namespace nevan
