// Copyright 2026 The Weierstrass Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weierstrass/poly_text.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "weierstrass/errors.h"

namespace weierstrass {

namespace {

constexpr std::uint64_t kMaxExponent = 1 << 12;

class Parser {
 public:
  Parser(const FiniteField& field, std::string_view text)
      : field_(field), original_(text) {
    for (char ch : text) {
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
    }
  }

  BiPoly ParseAll() {
    if (s_.empty()) Fail("empty polynomial");
    BiPoly out = Expr();
    if (pos_ != s_.size()) Fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void Fail(const std::string& why) const {
    throw InputError("cannot parse polynomial '" + std::string(original_) +
                     "': " + why + " at offset " + std::to_string(pos_));
  }

  bool Peek(char c) const { return pos_ < s_.size() && s_[pos_] == c; }

  bool StartsFactor() const {
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == 'X' || c == 'Y' || c == 'x' || c == 'y' || c == '(' ||
           c == '[' || std::isdigit(static_cast<unsigned char>(c));
  }

  BiPoly Expr() {
    BiPoly acc(field_);
    bool negative = false;
    if (Peek('+') || Peek('-')) negative = s_[pos_++] == '-';
    acc = Term();
    if (negative) acc = -acc;
    while (Peek('+') || Peek('-')) {
      const bool minus = s_[pos_++] == '-';
      BiPoly t = Term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  BiPoly Term() {
    BiPoly acc = Factor();
    for (;;) {
      if (Peek('*')) {
        ++pos_;
        acc = acc * Factor();
      } else if (StartsFactor() &&
                 !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        acc = acc * Factor();
      } else {
        return acc;
      }
    }
  }

  BiPoly Factor() {
    BiPoly base = Primary();
    if (Peek('^')) {
      ++pos_;
      const std::uint64_t e = Integer();
      if (e > kMaxExponent) Fail("exponent too large");
      base = base.pow(e);
    }
    return base;
  }

  std::uint64_t Integer() {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) Fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  BiPoly Primary() {
    if (pos_ >= s_.size()) Fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == 'X' || c == 'x') {
      ++pos_;
      return BiPoly::X(field_);
    }
    if (c == 'Y' || c == 'y') {
      ++pos_;
      return BiPoly::Y(field_);
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = Expr();
      if (!Peek(')')) Fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (c == '[') {
      const auto close = s_.find(']', pos_);
      if (close == std::string::npos) Fail("missing ']'");
      const auto body = std::string_view(s_).substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return BiPoly::Constant(field_, field_.parse_element(body));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::uint64_t v = Integer();
      return BiPoly::Constant(field_,
                              static_cast<FiniteField::Rep>(v % field_.characteristic()));
    }
    Fail("unexpected '" + std::string(1, c) + "'");
  }

  const FiniteField& field_;
  std::string_view original_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly ParseBiPoly(const FiniteField& field, std::string_view text) {
  return Parser(field, text).ParseAll();
}

RationalFunction ParseRational(const FiniteField& field, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == '/' && depth == 0) {
      if (slash != std::string_view::npos) {
        throw InputError("more than one '/' in '" + std::string(text) + "'");
      }
      slash = i;
    }
  }
  if (slash == std::string_view::npos) {
    return RationalFunction(ParseBiPoly(field, text));
  }
  BiPoly den = ParseBiPoly(field, text.substr(slash + 1));
  if (den.is_zero()) throw InputError("zero denominator in '" + std::string(text) + "'");
  return RationalFunction(ParseBiPoly(field, text.substr(0, slash)), std::move(den));
}

std::string FormatBiPoly(const BiPoly& p) {
  if (p.is_zero()) return "0";
  const FiniteField& f = p.field();
  std::vector<std::pair<Exponent, FiniteField::Rep>> terms(p.terms().begin(),
                                                          p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.y != b.first.y) return a.first.y > b.first.y;
    return a.first.x > b.first.x;
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    if (!out.empty()) out += " + ";
    std::string coeff = f.format(c);
    if (c >= f.characteristic()) coeff = "[" + coeff + "]";
    std::string mono;
    if (e.x > 0) mono += e.x == 1 ? "X" : "X^" + std::to_string(e.x);
    if (e.y > 0) {
      if (!mono.empty()) mono += '*';
      mono += e.y == 1 ? "Y" : "Y^" + std::to_string(e.y);
    }
    if (mono.empty()) {
      out += coeff;
    } else if (c == 1) {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

std::string BiPoly::to_string() const { return FormatBiPoly(*this); }

}  // namespace weierstrass
