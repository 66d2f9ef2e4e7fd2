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

#include "weierstrass/semigroup.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "weierstrass/errors.h"
#include "weierstrass/semigroup_oracle.h"

namespace weierstrass {

namespace {

constexpr Value kInf = std::numeric_limits<Value>::max();

Value FloorDiv(Value a, Value b) {
  Value q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Value CeilDiv(Value a, Value b) { return -FloorDiv(-a, b); }

std::string NotInS(Value m) {
  return std::to_string(m) + " is not in the semigroup";
}

// Shortest paths from residue 0 with one edge of weight g per generator.
std::vector<Value> AperyByDijkstra(const std::vector<Value>& gens, Value e) {
  std::vector<Value> dist(static_cast<std::size_t>(e), kInf);
  using Item = std::pair<Value, Value>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [d, r] = queue.top();
    queue.pop();
    if (d != dist[static_cast<std::size_t>(r)]) continue;
    for (Value g : gens) {
      const Value nr = (r + g) % e;
      const Value nd = d + g;
      if (nd < dist[static_cast<std::size_t>(nr)]) {
        dist[static_cast<std::size_t>(nr)] = nd;
        queue.emplace(nd, nr);
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<Value> gens, Value pivot,
                                       std::vector<Value> apery)
    : gens_(std::move(gens)), e_(pivot), apery_(std::move(apery)) {
  Value sum = 0;
  max_index_ = 0;
  for (std::size_t i = 0; i < apery_.size(); ++i) {
    sum += (apery_[i] - static_cast<Value>(i)) / e_;
    if (apery_[i] > apery_[static_cast<std::size_t>(max_index_)]) {
      max_index_ = static_cast<Value>(i);
    }
  }
  genus_ = sum;
  conductor_ = apery_[static_cast<std::size_t>(max_index_)] - e_ + 1;
  multiplicity_ = *std::min_element(gens_.begin(), gens_.end());
}

NumericalSemigroup NumericalSemigroup::FromGenerators(
    std::vector<Value> gens, std::optional<Value> pivot) {
  if (gens.empty()) throw InputError("empty generator list");
  Value g = 0;
  for (Value x : gens) {
    if (x <= 0) throw InputError("generators must be positive integers");
    g = std::gcd(g, x);
  }
  if (g != 1) {
    throw PreconditionError("not a numerical semigroup: generators have gcd " +
                            std::to_string(g));
  }
  const Value smallest = *std::min_element(gens.begin(), gens.end());
  const Value e = pivot.value_or(smallest);
  if (e != smallest) {
    NumericalSemigroup base(gens, smallest, AperyByDijkstra(gens, smallest));
    if (e <= 0 || !base.contains(e)) {
      throw PreconditionError("pivot " + std::to_string(e) +
                              " is not a nonzero element of the semigroup");
    }
  }
  std::vector<Value> apery = AperyByDijkstra(gens, e);
  return NumericalSemigroup(std::move(gens), e, std::move(apery));
}

NumericalSemigroup NumericalSemigroup::WithPivot(Value pivot) const {
  return FromGenerators(gens_, pivot);
}

AperyCoordinates NumericalSemigroup::coordinates(Value m) const {
  if (!contains(m)) throw InputError(NotInS(m));
  const std::size_t i = Mod(m);
  return {static_cast<Value>(i), (m - apery_[i]) / e_};
}

Value NumericalSemigroup::apery_relation(Value i, Value j) const {
  return (apery(i) + apery(j) - apery(i + j)) / e_;
}

std::vector<Value> NumericalSemigroup::gaps() const {
  std::vector<Value> out;
  for (Value x = 1; x < conductor_; ++x) {
    if (!contains(x)) out.push_back(x);
  }
  return out;
}

std::vector<Value> NumericalSemigroup::elements_up_to(Value limit) const {
  std::vector<Value> out;
  for (Value x = 0; x <= limit; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

Value NumericalSemigroup::least_element_at_least(Value x) const {
  if (x <= 0) return 0;
  while (!contains(x)) ++x;
  return x;
}

std::vector<Value> NumericalSemigroup::minimal_generators() const {
  // An element is a minimal generator iff it is not a sum of two nonzero
  // elements; all of them lie below c + e0.
  std::vector<Value> out;
  const Value limit = conductor_ + multiplicity_;
  for (Value x = 1; x <= limit; ++x) {
    if (!contains(x)) continue;
    bool decomposable = false;
    for (Value y : out) {
      if (y < x && contains(x - y)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(x);
  }
  return out;
}

std::string NumericalSemigroup::to_string() const {
  std::string out = "<";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(gens_[i]);
  }
  return out + ">";
}

Value nu(const NumericalSemigroup& s, Value m) {
  const AperyCoordinates c = s.coordinates(m);
  // sum_{h=0..l} B^(h) counts each k once for every h in [alpha_k, l].
  Value total = 0;
  for (Value k = 0; k < s.pivot(); ++k) {
    const Value alpha = s.apery_relation(k, c.i - k);
    if (alpha <= c.l) total += c.l - alpha + 1;
  }
  return total;
}

Value feng_rao(const NumericalSemigroup& s, Value m) {
  const AperyCoordinates c = s.coordinates(m);
  const Value e = s.pivot();
  Value best = kInf;
  for (Value j = 0; j < e; ++j) {
    const Value t = std::max<Value>(CeilDiv(s.apery(c.i) - s.apery(j), e) + c.l, 0);
    best = std::min(best, nu(s, s.apery(j) + t * e));
  }
  return best;
}

Value gap_pair_count(const NumericalSemigroup& s, Value m) {
  Value count = 0;
  for (Value x = 0; x <= m; ++x) {
    if (!s.contains(x) && !s.contains(m - x)) ++count;
  }
  return count;
}

bool is_symmetric(const NumericalSemigroup& s) {
  const Value n = s.max_index();
  const Value top = s.apery(n);
  bool apery_test = true;
  for (Value i = 0; i < s.pivot(); ++i) {
    if (s.apery(i) + s.apery(n - i) != top) {
      apery_test = false;
      break;
    }
  }
  const bool counting_test = s.conductor() == 2 * s.genus();
  if (apery_test != counting_test) {
    throw InconsistencyError("symmetry tests disagree for " + s.to_string());
  }
  return apery_test;
}

Value feng_rao_symmetric(const NumericalSemigroup& s, Value m) {
  if (!is_symmetric(s)) {
    throw PreconditionError(s.to_string() + " is not symmetric");
  }
  const Value c = s.conductor();
  if (m < c || m > 2 * c - 2) {
    throw PreconditionError(std::to_string(m) + " is outside [c, 2c-2] = [" +
                            std::to_string(c) + ", " +
                            std::to_string(2 * c - 2) + "]");
  }
  const Value n = m - c + 1;
  const Value q = 2 * c - 2 - m;
  if (s.contains(n)) return n;
  const Value n_prime = s.next_element(n);
  const Value delta = n_prime - n;
  auto nu_or_zero = [&](Value x) { return s.contains(x) ? nu(s, x) : 0; };
  Value best = n_prime;
  for (Value t = 0; t <= delta - 3; ++t) {
    best = std::min(best, n + t + nu_or_zero(q - t));
  }
  return best;
}

Value delta_gap(const NumericalSemigroup& s, Value q) {
  if (!s.contains(q)) throw InputError(NotInS(q));
  Value delta = 1;
  while (s.contains(q - delta)) ++delta;
  return delta;
}

Value minimum_formula(const NumericalSemigroup& s, Value m) {
  return s.least_element_at_least(m + 1 - 2 * s.genus());
}

Q0Report q0_m0(const NumericalSemigroup& s) {
  if (!is_symmetric(s)) {
    throw PreconditionError(s.to_string() + " is not symmetric");
  }
  const Value c = s.conductor();
  const Value g = s.genus();
  Q0Report r;
  r.q0 = c - 1;
  r.q0_is_default = true;
  for (Value q = 0; q < c; ++q) {
    if (s.contains(q) && nu(s, q) < delta_gap(s, q)) {
      r.q0 = q;
      r.q0_is_default = false;
      break;
    }
  }
  r.m0 = 4 * g - 2 - r.q0;
  r.m0_in_s = s.contains(r.m0);
  r.lower_bound_holds = r.q0 >= s.multiplicity() + 2;

  BruteForceSemigroup oracle(s.generators());
  auto holds = [&](Value m) {
    return oracle.feng_rao(m) == minimum_formula(s, m);
  };
  // Beyond 4g - 1 the formula always holds.
  Value last_failure = -1;
  for (Value m = 0; m <= std::max<Value>(4 * g, 0); ++m) {
    if (s.contains(m) && !holds(m)) last_failure = m;
  }
  r.oracle_threshold = s.least_element_at_least(last_failure + 1);
  r.fails_at_m0 = r.m0_in_s && !holds(r.m0);
  r.holds_above_m0 = last_failure <= r.m0;
  return r;
}

NumericalSemigroup adjoin(const NumericalSemigroup& s, Value b) {
  if (b <= 0) throw InputError("adjoined value must be positive");
  const Value e = s.pivot();
  // b is in S iff (b - a_i) / e >= 0 for its class i.
  if (b >= s.apery(b % e)) return s;
  std::vector<Value> updated = s.apery();
  for (Value j = 0; j < e; ++j) {
    for (Value lambda = 1; lambda < e; ++lambda) {
      const Value cand = s.apery(j) + lambda * b;
      Value& slot = updated[static_cast<std::size_t>(cand % e)];
      slot = std::min(slot, cand);
    }
  }
  std::vector<Value> gens = s.generators();
  gens.push_back(b);
  return NumericalSemigroup(std::move(gens), e, std::move(updated));
}

bool is_telescopic(const std::vector<Value>& deltas) {
  if (deltas.empty()) return false;
  for (Value x : deltas) {
    if (x <= 0) return false;
  }
  Value d = deltas[0];
  for (std::size_t i = 1; i < deltas.size(); ++i) {
    const Value next = std::gcd(d, deltas[i]);
    // n_i delta_i lies in <delta_0..delta_{i-1}>, a semigroup with gcd d.
    const Value target = (d / next) * deltas[i] / d;
    std::vector<Value> scaled;
    for (std::size_t k = 0; k < i; ++k) scaled.push_back(deltas[k] / d);
    if (!NumericalSemigroup::FromGenerators(scaled).contains(target)) {
      return false;
    }
    d = next;
  }
  return d == 1;
}

TelescopicStructure TelescopicStructure::FromGenerators(
    std::vector<Value> deltas) {
  if (!is_telescopic(deltas)) {
    std::string text;
    for (Value x : deltas) text += (text.empty() ? "" : ",") + std::to_string(x);
    throw PreconditionError("sequence " + text + " is not telescopic");
  }
  TelescopicStructure t;
  t.deltas_ = std::move(deltas);
  Value d = 0;
  for (Value x : t.deltas_) {
    d = std::gcd(d, x);
    t.d_.push_back(d);
  }
  return t;
}

NumericalSemigroup TelescopicStructure::semigroup() const {
  return NumericalSemigroup::FromGenerators(deltas_, deltas_[0]);
}

std::vector<Value> telescopic_repr(const TelescopicStructure& t, Value m) {
  if (m < 0) throw InputError(NotInS(m));
  const std::size_t h = t.h();
  std::vector<Value> lambda(h + 1, 0);
  Value rest = m;
  for (std::size_t k = h; k >= 1; --k) {
    if (rest < 0) throw InputError(NotInS(m));
    const Value dk1 = t.d(k + 1);
    const Value nk = t.n(k);
    // rest is divisible by d_{k+1}; solve lambda_k (delta_k / d_{k+1}) =
    // rest / d_{k+1} modulo n_k.
    const Value unit = (t.deltas()[k] / dk1) % nk;
    const Value goal = (rest / dk1) % nk;
    Value lk = 0;
    while (lk < nk && (lk * unit) % nk != goal) ++lk;
    if (lk == nk) throw InconsistencyError("telescopic representation failed");
    lambda[k] = lk;
    rest -= lk * t.deltas()[k];
  }
  if (rest < 0 || rest % t.deltas()[0] != 0) throw InputError(NotInS(m));
  lambda[0] = rest / t.deltas()[0];
  return lambda;
}

std::vector<Value> telescopic_apery(const TelescopicStructure& t) {
  const Value e = t.deltas()[0];
  std::vector<Value> apery(static_cast<std::size_t>(e), -1);
  std::vector<Value> lambda(t.h() + 1, 0);
  // Odometer over 0 <= lambda_k < n_k.
  for (;;) {
    Value sum = 0;
    for (std::size_t k = 1; k <= t.h(); ++k) sum += lambda[k] * t.deltas()[k];
    Value& slot = apery[static_cast<std::size_t>(sum % e)];
    if (slot != -1) {
      throw InconsistencyError("two telescopic elements share a residue");
    }
    slot = sum;
    std::size_t k = 1;
    while (k <= t.h() && ++lambda[k] == t.n(k)) lambda[k++] = 0;
    if (k > t.h()) break;
  }
  return apery;
}

Value telescopic_carry_free_pairs(const TelescopicStructure& t, Value m) {
  const std::vector<Value> lambda = telescopic_repr(t, m);
  if (lambda[0] != 0) {
    throw InputError(std::to_string(m) + " is not an Apery element");
  }
  Value product = 1;
  for (std::size_t k = 1; k < lambda.size(); ++k) product *= lambda[k] + 1;
  return product;
}

std::optional<std::vector<Value>> telescopic_ordering(std::vector<Value> gens,
                                                      bool last_is_max) {
  if (gens.size() > 9) throw InputError("too many generators to permute");
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  if (gens.empty()) return std::nullopt;
  const Value top = gens.back();
  do {
    if (last_is_max && gens.back() != top) continue;
    if (is_telescopic(gens)) return gens;
  } while (std::next_permutation(gens.begin(), gens.end()));
  return std::nullopt;
}

}  // namespace weierstrass
