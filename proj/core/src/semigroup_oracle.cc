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

#include "weierstrass/semigroup_oracle.h"

#include <numeric>
#include <string>

#include "weierstrass/errors.h"

namespace weierstrass {

BruteForceSemigroup::BruteForceSemigroup(const std::vector<Value>& gens) {
  Value g = 0;
  Value smallest = 0;
  for (Value x : gens) {
    if (x <= 0) throw InputError("generators must be positive");
    g = std::gcd(g, x);
    smallest = smallest == 0 ? x : std::min(smallest, x);
  }
  if (g != 1) throw PreconditionError("generators have gcd != 1");
  // A run of `smallest` consecutive members means every larger integer is in.
  member_.push_back(true);
  Value run = smallest == 1 ? 1 : 0;
  Value x = 0;
  while (run < smallest) {
    ++x;
    bool in = false;
    for (Value gen : gens) {
      if (gen <= x && member_[static_cast<std::size_t>(x - gen)]) {
        in = true;
        break;
      }
    }
    member_.push_back(in);
    run = in ? run + 1 : 0;
    if (!in) ++genus_;
  }
  conductor_ = x - run + 1;
  if (genus_ == 0) conductor_ = 0;
}

Value BruteForceSemigroup::pair_count(Value m) const {
  if (!contains(m)) return 0;
  Value count = 0;
  for (Value a = 0; a <= m; ++a) {
    if (contains(a) && contains(m - a)) ++count;
  }
  return count;
}

Value BruteForceSemigroup::gap_pair_count(Value m) const {
  Value count = 0;
  for (Value a = 0; a <= m; ++a) {
    if (!contains(a) && !contains(m - a)) ++count;
  }
  return count;
}

Value BruteForceSemigroup::feng_rao(Value m) const {
  if (!contains(m)) {
    throw InputError(std::to_string(m) + " is not in the semigroup");
  }
  Value best = pair_count(m);
  for (Value r = m;; ++r) {
    if (!contains(r)) continue;
    const Value v = pair_count(r);
    best = std::min(best, v);
    if (v == r + 1 - 2 * genus_ && gap_pair_count(r) == 0) return best;
  }
}

Value nu_bruteforce(const NumericalSemigroup& s, Value m) {
  BruteForceSemigroup oracle(s.generators());
  if (!oracle.contains(m)) {
    throw InputError(std::to_string(m) + " is not in the semigroup");
  }
  return oracle.pair_count(m);
}

Value feng_rao_bruteforce(const NumericalSemigroup& s, Value m) {
  return BruteForceSemigroup(s.generators()).feng_rao(m);
}

}  // namespace weierstrass
