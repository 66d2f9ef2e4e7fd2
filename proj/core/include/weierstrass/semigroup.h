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

#ifndef WEIERSTRASS_SEMIGROUP_H_
#define WEIERSTRASS_SEMIGROUP_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace weierstrass {

using Value = std::int64_t;

// m = apery[i] + l * pivot.
struct AperyCoordinates {
  Value i = 0;
  Value l = 0;
  friend bool operator==(const AperyCoordinates&,
                         const AperyCoordinates&) = default;
};

// A numerical semigroup stored as its Apéry array relative to a pivot e:
// a_i is the least element congruent to i modulo e.
class NumericalSemigroup {
 public:
  // Throws InputError for an empty list or non-positive generators,
  // PreconditionError when gcd(gens) != 1 or the pivot is not in S \ {0}.
  // The pivot defaults to the multiplicity.
  static NumericalSemigroup FromGenerators(
      std::vector<Value> gens, std::optional<Value> pivot = std::nullopt);

  // Same semigroup described relative to another nonzero element.
  NumericalSemigroup WithPivot(Value pivot) const;

  const std::vector<Value>& generators() const { return gens_; }
  Value pivot() const { return e_; }
  const std::vector<Value>& apery() const { return apery_; }
  Value apery(Value i) const { return apery_[Mod(i)]; }

  Value genus() const { return genus_; }
  Value conductor() const { return conductor_; }
  // c - 1, which is -1 for the full semigroup N.
  Value last_gap() const { return conductor_ - 1; }
  Value multiplicity() const { return multiplicity_; }
  // Index of the largest Apéry element.
  Value max_index() const { return max_index_; }

  bool contains(Value m) const {
    return m >= 0 && m >= apery_[Mod(m)];
  }
  // Throws InputError when m is not in S.
  AperyCoordinates coordinates(Value m) const;
  // alpha with a_i + a_j = a_{i+j} + alpha * e.
  Value apery_relation(Value i, Value j) const;

  std::vector<Value> gaps() const;
  // Elements of S in [0, limit], ascending.
  std::vector<Value> elements_up_to(Value limit) const;
  // Least element of S that is >= x.
  Value least_element_at_least(Value x) const;
  // Least element of S that is > x.
  Value next_element(Value x) const { return least_element_at_least(x + 1); }
  // Minimal generating set, ascending.
  std::vector<Value> minimal_generators() const;

  // "<3,8>"
  std::string to_string() const;

  friend bool operator==(const NumericalSemigroup& a,
                         const NumericalSemigroup& b) {
    return a.e_ == b.e_ && a.apery_ == b.apery_;
  }

 private:
  NumericalSemigroup(std::vector<Value> gens, Value pivot,
                     std::vector<Value> apery);
  std::size_t Mod(Value m) const {
    const Value r = m % e_;
    return static_cast<std::size_t>(r < 0 ? r + e_ : r);
  }

  std::vector<Value> gens_;
  Value e_ = 1;
  std::vector<Value> apery_;
  Value genus_ = 0;
  Value conductor_ = 0;
  Value multiplicity_ = 1;
  Value max_index_ = 0;

  friend NumericalSemigroup adjoin(const NumericalSemigroup& s, Value b);
};

// Number of pairs (a, b) in S x S with a + b = m, from the Apéry relations:
// with m = a_i + l e, nu(m) = sum_{h=0..l} #{k : alpha_{k,i-k} <= h}.
// Throws InputError when m is not in S.
Value nu(const NumericalSemigroup& s, Value m);

// min{nu(r) : r >= m, r in S}, evaluated on the least element of each residue
// class that is at least m. Throws InputError when m is not in S.
Value feng_rao(const NumericalSemigroup& s, Value m);

// Ordered pairs of gaps (x, y) with x + y = m.
Value gap_pair_count(const NumericalSemigroup& s, Value m);

// a_i + a_{N-i} = a_N for all i. Throws InconsistencyError if this disagrees
// with c = 2g.
bool is_symmetric(const NumericalSemigroup& s);

// Feng-Rao distance on [c, 2c-2] for a symmetric semigroup via
// nu(m + t) = (n + t) + nu(q - t), n = m - c + 1, q = 2c - 2 - m.
// Throws PreconditionError when S is not symmetric or m is out of range.
Value feng_rao_symmetric(const NumericalSemigroup& s, Value m);

// Least delta >= 1 such that q - delta is a gap (negative integers count as
// gaps). Throws InputError when q is not in S.
Value delta_gap(const NumericalSemigroup& s, Value q);

// min{r in S : r >= m + 1 - 2g}.
Value minimum_formula(const NumericalSemigroup& s, Value m);

struct Q0Report {
  Value q0 = 0;
  // True when no q in S has nu(q) < delta(q) and q0 = c - 1 was used.
  bool q0_is_default = false;
  Value m0 = 0;
  bool m0_in_s = false;
  // The minimum formula fails at m0 according to the oracle.
  bool fails_at_m0 = false;
  // The minimum formula holds (oracle) for every m in S with m > m0.
  bool holds_above_m0 = false;
  // Least element of S above every m in S where the minimum formula fails
  // (oracle); 0 when it never fails.
  Value oracle_threshold = 0;
  // q0 >= e0 + 2.
  bool lower_bound_holds = false;
};

// Throws PreconditionError when S is not symmetric.
Q0Report q0_m0(const NumericalSemigroup& s);

// Semigroup generated by S and b. When b is not already in S the Apéry array
// is updated with the candidates a_j + lambda * b, 0 <= lambda < e.
NumericalSemigroup adjoin(const NumericalSemigroup& s, Value b);

// Generators delta_0..delta_h with d_i = gcd(delta_0..delta_{i-1}),
// n_i = d_i / d_{i+1}, d_{h+1} = 1 and n_i delta_i in <delta_0..delta_{i-1}>.
class TelescopicStructure {
 public:
  // Throws PreconditionError when the sequence is not telescopic.
  static TelescopicStructure FromGenerators(std::vector<Value> deltas);

  std::size_t h() const { return deltas_.size() - 1; }
  const std::vector<Value>& deltas() const { return deltas_; }
  // d_i for 1 <= i <= h + 1.
  Value d(std::size_t i) const { return d_[i - 1]; }
  // n_i for 1 <= i <= h.
  Value n(std::size_t i) const { return d(i) / d(i + 1); }

  NumericalSemigroup semigroup() const;

 private:
  std::vector<Value> deltas_;
  std::vector<Value> d_;
};

// True when delta_0..delta_h satisfies the telescopic conditions.
bool is_telescopic(const std::vector<Value>& deltas);

// Unique (lambda_0..lambda_h) with m = sum lambda_k delta_k, lambda_0 >= 0,
// 0 <= lambda_k < n_k. Throws InputError when m is not in S.
std::vector<Value> telescopic_repr(const TelescopicStructure& t, Value m);

// Apéry array relative to delta_0 from the elements with lambda_0 = 0.
std::vector<Value> telescopic_apery(const TelescopicStructure& t);

// prod_{k >= 1} (lambda_k + 1) for an Apéry element m (lambda_0 = 0): the
// pairs (a, b) with a + b = m whose representations add without carries.
// A lower bound for nu(m); equal to it on many small examples but not in
// general. Throws InputError when m is not an Apéry element.
Value telescopic_carry_free_pairs(const TelescopicStructure& t, Value m);

// Lexicographically least telescopic ordering of the distinct `gens`, with
// the largest generator last when `last_is_max`; nullopt when there is none.
// At most 9 generators.
std::optional<std::vector<Value>> telescopic_ordering(std::vector<Value> gens,
                                                      bool last_is_max = false);

}  // namespace weierstrass

#endif  // WEIERSTRASS_SEMIGROUP_H_
