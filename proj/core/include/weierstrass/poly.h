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

#ifndef WEIERSTRASS_POLY_H_
#define WEIERSTRASS_POLY_H_

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "weierstrass/field.h"

namespace weierstrass {

// Dense univariate polynomial over a finite field. The zero polynomial has
// degree kZeroDegree, which stands for minus infinity.
class UniPoly {
 public:
  using Rep = FiniteField::Rep;
  static constexpr int kZeroDegree = -1;

  explicit UniPoly(FiniteField field, char var = 'X');
  UniPoly(FiniteField field, std::vector<Rep> coeffs, char var = 'X');

  static UniPoly Constant(const FiniteField& field, Rep c, char var = 'X');
  static UniPoly Monomial(const FiniteField& field, Rep c, int degree,
                          char var = 'X');

  const FiniteField& field() const { return field_; }
  char var() const { return var_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  Rep coeff(int i) const {
    return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : 0;
  }
  const std::vector<Rep>& coeffs() const { return coeffs_; }
  Rep leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& other);
  UniPoly& operator-=(const UniPoly& other);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
  }

  UniPoly scaled(Rep c) const;
  UniPoly monic() const;
  UniPoly pow(std::uint64_t e) const;
  UniPoly derivative() const;

  // Euclidean division; throws PreconditionError for a zero divisor.
  static std::pair<UniPoly, UniPoly> DivMod(const UniPoly& a, const UniPoly& b);
  // a / b when b divides a; throws InconsistencyError otherwise.
  static UniPoly ExactDiv(const UniPoly& a, const UniPoly& b);
  // Monic gcd (zero if both are zero).
  static UniPoly Gcd(UniPoly a, UniPoly b);

  Rep eval(Rep x) const;

  std::string to_string() const;

 private:
  void trim();

  FiniteField field_;
  std::vector<Rep> coeffs_;
  char var_;
};

struct Exponent {
  int x = 0;
  int y = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Sparse bivariate polynomial in X, Y. Zero coefficients are never stored.
// The view "polynomial in Y with coefficients in F[X]" is given by YCoeffs()
// and FromYCoeffs().
class BiPoly {
 public:
  using Rep = FiniteField::Rep;
  using Terms = std::map<Exponent, Rep>;

  explicit BiPoly(FiniteField field);
  BiPoly(FiniteField field, Terms terms);

  static BiPoly Constant(const FiniteField& field, Rep c);
  static BiPoly Monomial(const FiniteField& field, Rep c, int x_deg, int y_deg);
  static BiPoly X(const FiniteField& field) { return Monomial(field, 1, 1, 0); }
  static BiPoly Y(const FiniteField& field) { return Monomial(field, 1, 0, 1); }
  // sum_j coeffs[j](X) Y^j
  static BiPoly FromYCoeffs(const FiniteField& field,
                            const std::vector<UniPoly>& coeffs);
  // Embeds a univariate polynomial in X.
  static BiPoly FromX(const UniPoly& p);

  const FiniteField& field() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t term_count() const { return terms_.size(); }
  Rep coeff(int x_deg, int y_deg) const;
  // Coefficient of X^0 Y^0.
  Rep constant_term() const { return coeff(0, 0); }

  // UniPoly::kZeroDegree for the zero polynomial.
  int deg_x() const;
  int deg_y() const;
  int total_degree() const;
  int min_total_degree() const;

  // Index j holds the coefficient of Y^j, as a polynomial in X.
  std::vector<UniPoly> YCoeffs() const;
  UniPoly leading_y_coeff() const;
  bool is_monic_in_y() const;
  // Sum of the terms of total degree d.
  BiPoly homogeneous_part(int d) const;

  BiPoly operator-() const;
  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  BiPoly scaled(Rep c) const;
  BiPoly pow(std::uint64_t e) const;
  BiPoly derivative_x() const;
  BiPoly derivative_y() const;
  BiPoly swapped_xy() const;
  // Multiplies by X^dx Y^dy; negative shifts require divisibility.
  BiPoly shifted(int dx, int dy) const;

  // Ring homomorphism X -> x_image, Y -> y_image.
  BiPoly substitute(const BiPoly& x_image, const BiPoly& y_image) const;
  // X -> X + c*Y^k; the inverse is X -> X - c*Y^k.
  BiPoly substitute_x_plus_y_power(int k, Rep c = 1) const;

  // Evaluation at a point of `target`, into which field() must embed.
  Rep eval(const FiniteField& target, Rep x, Rep y) const;
  Rep eval(Rep x, Rep y) const { return eval(field_, x, y); }

  // Division by a divisor that is monic in Y: a = q*b + r, deg_Y r < deg_Y b.
  // Throws PreconditionError when b is not monic in Y.
  static std::pair<BiPoly, BiPoly> DivModMonicY(const BiPoly& a,
                                                const BiPoly& b);

  std::string to_string() const;

 private:
  FiniteField field_;
  Terms terms_;
};

// Res_Y(f, g) as a polynomial in X, computed with the subresultant
// pseudo-remainder sequence over F[X]. Zero exactly when f and g share a
// factor of positive Y-degree (or one of them is zero).
UniPoly ResultantY(const BiPoly& f, const BiPoly& g);

// deg_X Res_Y(f, g), with UniPoly::kZeroDegree standing for minus infinity.
int ResultantDegreeX(const BiPoly& f, const BiPoly& g);

}  // namespace weierstrass

#endif  // WEIERSTRASS_POLY_H_
