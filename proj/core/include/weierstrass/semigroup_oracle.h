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

#ifndef WEIERSTRASS_SEMIGROUP_ORACLE_H_
#define WEIERSTRASS_SEMIGROUP_ORACLE_H_

#include <vector>

#include "weierstrass/semigroup.h"

namespace weierstrass {

// Membership decided by a bitmap filled from the generators (x is in S when
// some x - g is), without Apéry sets. Used to cross-check the fast formulas.
class BruteForceSemigroup {
 public:
  // Throws PreconditionError when gcd(gens) != 1.
  explicit BruteForceSemigroup(const std::vector<Value>& gens);

  bool contains(Value m) const {
    if (m < 0) return false;
    return m >= conductor_ || member_[static_cast<std::size_t>(m)];
  }
  Value genus() const { return genus_; }
  Value conductor() const { return conductor_; }

  // #{(a, b) in S x S : a + b = m}; 0 for a gap.
  Value pair_count(Value m) const;
  // Ordered gap pairs summing to m.
  Value gap_pair_count(Value m) const;
  // Scans r = m, m + 1, ... and stops at the first r in S with
  // nu(r) = r + 1 - 2g and no gap pairs.
  Value feng_rao(Value m) const;

 private:
  std::vector<bool> member_;
  Value conductor_ = 0;
  Value genus_ = 0;
};

// Throw InputError when m is not in S.
Value nu_bruteforce(const NumericalSemigroup& s, Value m);
Value feng_rao_bruteforce(const NumericalSemigroup& s, Value m);

}  // namespace weierstrass

#endif  // WEIERSTRASS_SEMIGROUP_ORACLE_H_
