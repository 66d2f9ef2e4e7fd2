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

#include "weierstrass/codes.h"

#include <string>

#include "weierstrass/errors.h"

namespace weierstrass {

using Rep = FiniteField::Rep;

namespace {

constexpr std::size_t kMaxExactLength = 24;
constexpr std::uint64_t kMaxCodewords = std::uint64_t{1} << 20;

std::string PointText(const FiniteField& ext, Point p) {
  return "(" + ext.format(p.x) + ", " + ext.format(p.y) + ")";
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> RowReduce(const FiniteField& field, Matrix& a) {
  std::vector<std::size_t> pivots;
  if (a.empty()) return pivots;
  const std::size_t cols = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
    std::size_t sel = row;
    while (sel < a.size() && a[sel][col] == 0) ++sel;
    if (sel == a.size()) continue;
    std::swap(a[row], a[sel]);
    const Rep inv = field.inv(a[row][col]);
    for (Rep& v : a[row]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][col] == 0) continue;
      const Rep factor = a[r][col];
      for (std::size_t c = col; c < cols; ++c) {
        a[r][c] = field.sub(a[r][c], field.mul(factor, a[row][c]));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

EvaluationSet enumerate_points(const PlaneModel& model,
                               const FunctionTable& table,
                               const FiniteField& ext) {
  std::vector<RationalFunction> functions;
  for (const ValuedFunction& h : table.apery_functions()) {
    functions.push_back(h.f);
  }
  functions.push_back(table.pivot_function().f);
  return enumerate_points(model, ext, functions);
}

Rep evaluate_at(const RationalFunction& f, const FiniteField& ext, Point p) {
  const Rep den = f.denominator().eval(ext, p.x, p.y);
  if (den == 0) {
    throw PreconditionError("denominator of " + f.to_string() +
                            " vanishes at " + PointText(ext, p));
  }
  return ext.div(f.numerator().eval(ext, p.x, p.y), den);
}

EvaluationSet enumerate_points(const PlaneModel& model, const FiniteField& ext,
                               const std::vector<RationalFunction>& functions) {
  if (!model.field.embeds_into(ext)) {
    throw InputError("curve field " + model.field.name() +
                     " does not embed into " + ext.name());
  }
  const BiPoly fx = model.f.derivative_x();
  const BiPoly fy = model.f.derivative_y();
  EvaluationSet out{ext, {}, 0, 0};
  for (Rep x = 0; x < ext.order(); ++x) {
    for (Rep y = 0; y < ext.order(); ++y) {
      if (model.f.eval(ext, x, y) != 0) continue;
      if (fx.eval(ext, x, y) == 0 && fy.eval(ext, x, y) == 0) {
        ++out.singular_excluded;
        continue;
      }
      bool pole = false;
      for (const RationalFunction& f : functions) {
        if (f.denominator().eval(ext, x, y) == 0) {
          pole = true;
          break;
        }
      }
      if (pole) {
        ++out.pole_excluded;
        continue;
      }
      out.points.push_back({x, y});
    }
  }
  return out;
}

std::size_t matrix_rank(const FiniteField& field, Matrix m) {
  return RowReduce(field, m).size();
}

CodeSpec build_code(const FunctionTable& table, const EvaluationSet& points,
                    Value m, BranchParam& oracle, bool improved) {
  if (m < 0) throw InputError("m must be nonnegative");
  const FiniteField& ext = points.field;
  const NumericalSemigroup& gamma = table.semigroup();
  const NumericalSemigroup& sp = table.at_infinity().semigroup;
  CodeSpec spec{ext, m, points.points.size(), 0, 0, gamma.genus(),
                m + 2 - 2 * gamma.genus(), 0, 0, improved, {}, {}, {}};
  const NumericalSemigroup& bound_semigroup = improved ? sp : gamma;
  spec.m_prime = bound_semigroup.next_element(m);
  spec.feng_rao_bound = feng_rao(bound_semigroup, spec.m_prime);
  for (const ValuedFunction& f : l_basis(table, m, oracle)) {
    if (improved && !sp.contains(f.value)) continue;
    std::vector<Rep> row;
    row.reserve(points.points.size());
    for (Point p : points.points) row.push_back(evaluate_at(f.f, ext, p));
    spec.row_values.push_back(f.value);
    spec.row_functions.push_back(f.f);
    spec.matrix.push_back(std::move(row));
  }
  spec.rank = matrix_rank(ext, spec.matrix);
  spec.k = spec.n - spec.rank;
  return spec;
}

std::vector<Rep> known_syndromes(const CodeSpec& spec,
                                 const std::vector<Rep>& y) {
  if (y.size() != spec.n) {
    throw InputError("word length " + std::to_string(y.size()) +
                     " differs from n = " + std::to_string(spec.n));
  }
  std::vector<Rep> out;
  for (const auto& row : spec.matrix) {
    Rep acc = 0;
    for (std::size_t k = 0; k < spec.n; ++k) {
      acc = spec.field.add(acc, spec.field.mul(row[k], y[k]));
    }
    out.push_back(acc);
  }
  return out;
}

Matrix bidimensional_syndromes(const CodeSpec& spec, const std::vector<Rep>& e) {
  if (e.size() != spec.n) {
    throw InputError("word length " + std::to_string(e.size()) +
                     " differs from n = " + std::to_string(spec.n));
  }
  const FiniteField& f = spec.field;
  const std::size_t rows = spec.matrix.size();
  Matrix out(rows, std::vector<Rep>(rows, 0));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < rows; ++j) {
      Rep acc = 0;
      for (std::size_t k = 0; k < spec.n; ++k) {
        acc = f.add(acc, f.mul(e[k], f.mul(spec.matrix[i][k], spec.matrix[j][k])));
      }
      out[i][j] = acc;
    }
  }
  return out;
}

bool is_codeword(const CodeSpec& spec, const std::vector<Rep>& y) {
  for (Rep s : known_syndromes(spec, y)) {
    if (s != 0) return false;
  }
  return true;
}

Matrix dual_basis(const CodeSpec& spec) {
  const FiniteField& f = spec.field;
  Matrix a = spec.matrix;
  const std::vector<std::size_t> pivots = RowReduce(f, a);
  std::vector<bool> is_pivot(spec.n, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t free = 0; free < spec.n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rep> v(spec.n, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = f.neg(a[r][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::size_t> minimum_distance(const CodeSpec& spec) {
  const Matrix basis = dual_basis(spec);
  const std::size_t k = basis.size();
  if (k == 0) return std::nullopt;
  const std::uint64_t q = spec.field.order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    total *= q;
    if (total > kMaxCodewords) break;
  }
  if (spec.n > kMaxExactLength || total > kMaxCodewords) {
    throw PreconditionError("exact minimum distance limited to n <= 24 and at "
                            "most 2^20 codewords");
  }
  const FiniteField& f = spec.field;
  std::size_t best = spec.n;
  std::vector<Rep> coeffs(k, 0);
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = 0; i < k; ++i) {
      coeffs[i] = static_cast<Rep>(rest % q);
      rest /= q;
    }
    std::size_t weight = 0;
    for (std::size_t c = 0; c < spec.n; ++c) {
      Rep acc = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (coeffs[i] != 0) acc = f.add(acc, f.mul(coeffs[i], basis[i][c]));
      }
      if (acc != 0) ++weight;
    }
    best = std::min(best, weight);
  }
  return best;
}

std::vector<DistanceRow> distance_bound_table(const NumericalSemigroup& gamma,
                                              Value lo, Value hi) {
  std::vector<DistanceRow> rows;
  const Value g = gamma.genus();
  for (Value m = std::max<Value>(lo, 0); m <= hi; ++m) {
    if (!gamma.contains(m)) continue;
    DistanceRow row;
    row.m = m;
    row.d_star_prev = m + 1 - 2 * g;
    row.delta_fr = feng_rao(gamma, m);
    row.gain = row.delta_fr - row.d_star_prev;
    row.t_corr = (row.delta_fr - 1) / 2;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace weierstrass
