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

#ifndef WEIERSTRASS_FIELD_H_
#define WEIERSTRASS_FIELD_H_

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace weierstrass {

class FieldElement;

// GF(p^k) in a polynomial basis over GF(p).
//
// An element is identified with the integer sum_i c_i p^i, where
// c_0 + c_1 t + ... + c_{k-1} t^{k-1} is its residue modulo the defining
// polynomial. In particular the elements of the prime subfield are exactly
// the integers 0..p-1 in every extension. Fields up to 2^16 elements use
// log/antilog tables for multiplication; larger fields (up to 2^20) reduce
// products directly.
//
// Copies share one immutable table set and are cheap to pass by value.
class FiniteField {
 public:
  using Rep = std::uint32_t;

  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

  // GF(p^k) with the lexicographically least monic irreducible modulus
  // (coefficients compared as the integer sum c_i p^i, constant term least
  // significant).
  static FiniteField Make(std::uint32_t p, std::uint32_t k = 1);

  // GF(p^k) with an explicit monic modulus given by ascending coefficients.
  static FiniteField WithModulus(std::uint32_t p,
                                 std::vector<std::uint32_t> modulus);

  // Parses "GF(p)", "GF(p^k)" or "GF(q)" for a prime power q.
  static FiniteField Parse(std::string_view text);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  bool is_prime_field() const { return degree() == 1; }
  // Ascending coefficients of the monic modulus, length degree()+1.
  const std::vector<std::uint32_t>& modulus() const;
  std::string name() const;

  static constexpr Rep zero() { return 0; }
  static constexpr Rep one() { return 1; }

  bool contains(Rep a) const { return a < order(); }
  Rep from_int(std::int64_t value) const;

  Rep add(Rep a, Rep b) const;
  Rep sub(Rep a, Rep b) const;
  Rep neg(Rep a) const;
  Rep mul(Rep a, Rep b) const;
  // Throws PreconditionError on zero.
  Rep inv(Rep a) const;
  Rep div(Rep a, Rep b) const { return mul(a, inv(b)); }
  Rep pow(Rep a, std::uint64_t e) const;
  // Unique b with b^p = a (Frobenius is bijective on a finite field).
  Rep pth_root(Rep a) const;

  // A generator of the multiplicative group.
  Rep primitive_element() const;

  // Base-p coordinates, length degree().
  std::vector<std::uint32_t> coordinates(Rep a) const;
  Rep from_coordinates(const std::vector<std::uint32_t>& coords) const;

  // Integers for prime fields, t-polynomials for extensions ("t^2+1").
  std::string format(Rep a) const;
  // Accepts an integer literal, or a t-polynomial such as "t^2+t+1".
  Rep parse_element(std::string_view text) const;

  FieldElement element(Rep a) const;
  FieldElement element_from_int(std::int64_t value) const;

  // True when every element of *this can be read in `larger` with the same
  // Rep: identical fields, or *this a prime field of the same characteristic.
  bool embeds_into(const FiniteField& larger) const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);
  friend bool operator!=(const FiniteField& a, const FiniteField& b) {
    return !(a == b);
  }

  // Opaque table set; defined in field.cc.
  struct Impl;

 private:
  explicit FiniteField(std::shared_ptr<const Impl> impl)
      : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// A value in a specific field. Mixing fields throws InputError.
class FieldElement {
 public:
  FieldElement(FiniteField field, FiniteField::Rep rep);

  const FiniteField& field() const { return field_; }
  FiniteField::Rep rep() const { return rep_; }
  bool is_zero() const { return rep_ == 0; }
  bool is_one() const { return rep_ == 1; }

  FieldElement operator-() const;
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b);
  friend bool operator!=(const FieldElement& a, const FieldElement& b) {
    return !(a == b);
  }

  std::string to_string() const { return field_.format(rep_); }

 private:
  FiniteField field_;
  FiniteField::Rep rep_;
};

// Primality and irreducibility helpers shared with the tests.
bool IsPrime(std::uint64_t n);
// `poly` holds ascending coefficients over GF(p) with a nonzero leading term.
bool IsIrreducibleModP(const std::vector<std::uint32_t>& poly, std::uint32_t p);

}  // namespace weierstrass

#endif  // WEIERSTRASS_FIELD_H_
