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

#ifndef WEIERSTRASS_APPROX_ROOTS_H_
#define WEIERSTRASS_APPROX_ROOTS_H_

#include <optional>
#include <string>
#include <vector>

#include "weierstrass/field.h"
#include "weierstrass/poly.h"
#include "weierstrass/semigroup.h"

namespace weierstrass {

// A curve equation F monic in Y, possibly after X <- X + Y^k.
struct PlaneModel {
  FiniteField field;
  BiPoly original;
  BiPoly f;
  // deg_Y f and deg_X f.
  int m = 0;
  int n = 0;
  // The k of X <- X + Y^k, when a substitution was applied.
  std::optional<int> substitution_k;

  int e_p() const { return m - n; }
  // Rewrites a polynomial in the input coordinates into model coordinates.
  BiPoly to_model(const BiPoly& g) const;
  BiPoly to_original(const BiPoly& g) const;
  bool hypothesis_h() const;
};

// Unique monic G of degree deg_Y(F)/d with deg_Y(F - G^d) < deg_Y F - deg G.
// Throws PreconditionError when F is not monic in Y, d does not divide
// deg_Y F, or the characteristic divides d.
BiPoly approximate_root(const BiPoly& f, int d);

// Makes F monic in Y and, when the characteristic divides m = deg_Y F but not
// n = deg_X F, applies X <- X + Y^k for the least admissible k. Throws
// PreconditionError when the characteristic divides both m and n, or when
// the leading coefficient in Y is not a constant.
PlaneModel normalize_degree(const BiPoly& f);

struct AMSequence {
  int h = 0;
  std::vector<int> delta;  // delta_0..delta_h
  std::vector<int> d;      // d_1..d_{h+1}
  std::vector<int> nseq;   // n_1..n_h
  std::vector<BiPoly> roots;  // F_0 = X, F_1 = Y, F_i = app(d_i, F)
};

// Approximate-roots algorithm: d_1 = m, F_1 = Y, d_i = gcd(d_{i-1},
// delta_{i-1}), F_i = app(d_i, F), delta_i = deg_X Res_Y(F, F_i) until
// d_i = d_{i-1}. A vanishing resultant has degree -infinity and leaves the gcd
// unchanged. Throws PreconditionError when Y divides F or the characteristic
// divides m.
AMSequence am_sequence(const PlaneModel& model);

struct BranchVerdict {
  bool one_branch = false;
  std::string reason;  // empty for one_branch
};

// d_{h+1} = 1, delta_1 d_1 > ... > delta_h d_h and
// n_i delta_i in <delta_0, ..., delta_{i-1}>; only the first for h <= 1.
BranchVerdict one_branch_criterion(const AMSequence& seq);

struct SemigroupAtInfinity {
  std::vector<Value> generators;  // delta_0..delta_h
  TelescopicStructure telescopic;
  NumericalSemigroup semigroup;   // pivot delta_0
  std::vector<BiPoly> functions;  // F_0..F_h
};

// Throws PreconditionError when the criterion fails.
SemigroupAtInfinity semigroup_at_infinity(const AMSequence& seq);

}  // namespace weierstrass

#endif  // WEIERSTRASS_APPROX_ROOTS_H_
