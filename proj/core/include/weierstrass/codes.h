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

#ifndef WEIERSTRASS_CODES_H_
#define WEIERSTRASS_CODES_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "weierstrass/approx_roots.h"
#include "weierstrass/branch.h"
#include "weierstrass/field.h"
#include "weierstrass/rational.h"
#include "weierstrass/triangulation.h"

namespace weierstrass {

using Matrix = std::vector<std::vector<FiniteField::Rep>>;

struct Point {
  FiniteField::Rep x = 0;
  FiniteField::Rep y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

// Affine points of the model over an extension field K.
struct EvaluationSet {
  FiniteField field;
  std::vector<Point> points;
  // Points on the curve that were left out.
  std::size_t singular_excluded = 0;
  std::size_t pole_excluded = 0;
};

// Scans K^2 for zeros of F that are nonsingular (F_X, F_Y not both zero) and
// where no denominator in `functions` vanishes, in lexicographic order of
// (x, y). Throws InputError when the curve field does not embed into K.
EvaluationSet enumerate_points(const PlaneModel& model, const FiniteField& ext,
                               const std::vector<RationalFunction>& functions);

// Points for every code built on `table`: the denominators of the Apéry
// functions and the pivot function cover those of all products of them.
EvaluationSet enumerate_points(const PlaneModel& model,
                               const FunctionTable& table,
                               const FiniteField& ext);

// f(P) in K. Throws PreconditionError naming the point when the denominator
// vanishes there.
FiniteField::Rep evaluate_at(const RationalFunction& f, const FiniteField& ext, Point p);

struct CodeSpec {
  FiniteField field;
  Value m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t rank = 0;
  Value genus = 0;
  // Goppa designed distance m + 2 - 2g.
  Value d_star = 0;
  // Least element of the semigroup above m and the Feng-Rao bound there.
  Value m_prime = 0;
  Value feng_rao_bound = 0;
  bool improved = false;
  std::vector<Value> row_values;
  std::vector<RationalFunction> row_functions;
  // One row per basis function, one column per point. C(m) is the dual of
  // the row space.
  Matrix matrix;
};

// Evaluation code data for C(m). With `improved`, only values in S_P are
// used and the Feng-Rao bound is taken in S_P.
CodeSpec build_code(const FunctionTable& table, const EvaluationSet& points,
                    Value m, BranchParam& oracle, bool improved = false);

// s_i(y) = sum_k y_k f_i(P_k) for each row. Throws InputError on a length
// mismatch.
std::vector<FiniteField::Rep> known_syndromes(const CodeSpec& spec, const std::vector<FiniteField::Rep>& y);

// s_{i,j}(e) = sum_k e_k f_i(P_k) f_j(P_k) over the rows.
Matrix bidimensional_syndromes(const CodeSpec& spec, const std::vector<FiniteField::Rep>& e);

// True when every known syndrome of y vanishes.
bool is_codeword(const CodeSpec& spec, const std::vector<FiniteField::Rep>& y);

// Basis of C(m), the right nullspace of the evaluation matrix.
Matrix dual_basis(const CodeSpec& spec);

std::size_t matrix_rank(const FiniteField& field, Matrix m);

// Exact minimum distance by enumerating codewords; nullopt for k = 0.
// Throws PreconditionError when n > 24 or q^k > 2^20.
std::optional<std::size_t> minimum_distance(const CodeSpec& spec);

struct DistanceRow {
  Value m = 0;
  Value d_star_prev = 0;  // d*(m - 1) = m + 1 - 2g
  Value delta_fr = 0;     // Feng-Rao distance at m
  Value gain = 0;         // delta_fr - d_star_prev
  Value t_corr = 0;       // floor((delta_fr - 1) / 2) errors for C(m - 1)
};

// Rows for every m in the semigroup within [lo, hi].
std::vector<DistanceRow> distance_bound_table(const NumericalSemigroup& gamma,
                                              Value lo, Value hi);

}  // namespace weierstrass

#endif  // WEIERSTRASS_CODES_H_
