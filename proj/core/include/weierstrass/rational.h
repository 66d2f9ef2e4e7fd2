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

#ifndef WEIERSTRASS_RATIONAL_H_
#define WEIERSTRASS_RATIONAL_H_

#include <string>

#include "weierstrass/poly.h"

namespace weierstrass {

// A rational function on the curve, stored as a numerator/denominator pair
// of plane polynomials. No reduction modulo the curve equation is done; the
// pair is kept free of common X-content and common monomial factors and the
// denominator is normalized to leading coefficient one.
class RationalFunction {
 public:
  using Rep = FiniteField::Rep;

  explicit RationalFunction(BiPoly numerator);
  RationalFunction(BiPoly numerator, BiPoly denominator);

  static RationalFunction Constant(const FiniteField& field, Rep c);

  const FiniteField& field() const { return num_.field(); }
  const BiPoly& numerator() const { return num_; }
  const BiPoly& denominator() const { return den_; }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction scaled(Rep c) const;
  RationalFunction pow(unsigned e) const;
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  // Applies a polynomial substitution to numerator and denominator.
  RationalFunction substitute(const BiPoly& x_image, const BiPoly& y_image) const;

  std::string to_string() const;

 private:
  void normalize();

  BiPoly num_;
  BiPoly den_;
};

}  // namespace weierstrass

#endif  // WEIERSTRASS_RATIONAL_H_
