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

#ifndef WEIERSTRASS_POLY_TEXT_H_
#define WEIERSTRASS_POLY_TEXT_H_

#include <string>
#include <string_view>

#include "weierstrass/field.h"
#include "weierstrass/poly.h"
#include "weierstrass/rational.h"

namespace weierstrass {

// Polynomial text grammar:
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := factor (['*'] factor)*
//   factor  := primary ['^' integer]
//   primary := integer | '[' t-polynomial ']' | 'X' | 'Y' | '(' expr ')'
//
// Integer literals are reduced into the field; extension-field constants are
// written as bracketed t-polynomials, e.g. "[t^2+1]*X*Y^3". Whitespace is
// insignificant. Plain sums of monomials "c*X^a*Y^b" are the canonical form;
// products and parenthesized factors are accepted for convenience.
BiPoly ParseBiPoly(const FiniteField& field, std::string_view text);

// "numerator / denominator", or a bare polynomial (denominator 1).
RationalFunction ParseRational(const FiniteField& field, std::string_view text);

// Canonical text: terms by descending Y-degree then descending X-degree,
// joined with " + ", coefficients as integers (prime fields) or bracketed
// t-polynomials. The output parses back to the same polynomial.
std::string FormatBiPoly(const BiPoly& p);

}  // namespace weierstrass

#endif  // WEIERSTRASS_POLY_TEXT_H_
