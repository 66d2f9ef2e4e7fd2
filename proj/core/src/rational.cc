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

#include "weierstrass/rational.h"

#include <algorithm>
#include <limits>

#include "weierstrass/errors.h"
#include "weierstrass/poly_text.h"

namespace weierstrass {

namespace {

// gcd of the Y-coefficients, a polynomial in X.
UniPoly ContentX(const BiPoly& p) {
  UniPoly g(p.field());
  for (const auto& c : p.YCoeffs()) {
    if (c.is_zero()) continue;
    g = UniPoly::Gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly DivideByX(const BiPoly& p, const UniPoly& d) {
  auto coeffs = p.YCoeffs();
  for (auto& c : coeffs) c = UniPoly::ExactDiv(c, d);
  return BiPoly::FromYCoeffs(p.field(), coeffs);
}

}  // namespace

RationalFunction::RationalFunction(BiPoly numerator)
    : num_(std::move(numerator)), den_(BiPoly::Constant(num_.field(), 1)) {}

RationalFunction::RationalFunction(BiPoly numerator, BiPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (num_.field() != den_.field()) {
    throw InputError("rational function: field mismatch");
  }
  if (den_.is_zero()) throw PreconditionError("rational function with zero denominator");
  normalize();
}

RationalFunction RationalFunction::Constant(const FiniteField& field, Rep c) {
  return RationalFunction(BiPoly::Constant(field, c));
}

void RationalFunction::normalize() {
  const FiniteField& f = field();
  if (num_.is_zero()) {
    den_ = BiPoly::Constant(f, 1);
    return;
  }
  if (!den_.is_constant()) {
    // Common monomial factor.
    int mx = std::numeric_limits<int>::max();
    int my = std::numeric_limits<int>::max();
    for (const auto* p : {&num_, &den_}) {
      for (const auto& [e, c] : p->terms()) {
        mx = std::min(mx, e.x);
        my = std::min(my, e.y);
      }
    }
    if (mx > 0 || my > 0) {
      num_ = num_.shifted(-mx, -my);
      den_ = den_.shifted(-mx, -my);
    }
    // Common content in X, then in Y.
    for (int pass = 0; pass < 2; ++pass) {
      const UniPoly g = UniPoly::Gcd(ContentX(num_), ContentX(den_));
      if (g.degree() > 0) {
        num_ = DivideByX(num_, g);
        den_ = DivideByX(den_, g);
      }
      num_ = num_.swapped_xy();
      den_ = den_.swapped_xy();
    }
  }
  const Rep lead = den_.terms().rbegin()->second;
  if (lead != 1) {
    const Rep inv = f.inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RationalFunction RationalFunction::scaled(Rep c) const {
  RationalFunction out = *this;
  out.num_ = out.num_.scaled(c);
  out.normalize();
  return out;
}

RationalFunction RationalFunction::pow(unsigned e) const {
  RationalFunction out = *this;
  out.num_ = num_.pow(e);
  out.den_ = den_.pow(e);
  out.normalize();
  return out;
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction RationalFunction::substitute(const BiPoly& x_image,
                                              const BiPoly& y_image) const {
  return RationalFunction(num_.substitute(x_image, y_image),
                          den_.substitute(x_image, y_image));
}

std::string RationalFunction::to_string() const {
  if (is_polynomial() && den_.constant_term() == 1) return FormatBiPoly(num_);
  return "(" + FormatBiPoly(num_) + ") / (" + FormatBiPoly(den_) + ")";
}

}  // namespace weierstrass
