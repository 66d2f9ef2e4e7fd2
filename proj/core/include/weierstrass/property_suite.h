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

#ifndef WEIERSTRASS_PROPERTY_SUITE_H_
#define WEIERSTRASS_PROPERTY_SUITE_H_

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "weierstrass/semigroup.h"

namespace weierstrass {

// Seeded generators and checks shared by `selftest`, the acceptance runner
// and the unit tests. Draws use std::mt19937_64 with explicit reductions, so
// a seed gives the same instances on every platform.
using SuiteRng = std::mt19937_64;

// Uniform in [lo, hi].
Value Draw(SuiteRng& rng, Value lo, Value hi);

// Random semigroup with multiplicity in [2, max_e] and genus in [1, max_g],
// pivot at the multiplicity.
NumericalSemigroup RandomSemigroup(SuiteRng& rng, Value max_e, Value max_g);

// Random telescopic sequence delta_0..delta_h with delta_0 <= max_delta0 and
// h >= 1.
std::vector<Value> RandomTelescopic(SuiteRng& rng, Value max_delta0);

struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t symmetric_cases = 0;
  std::size_t checks = 0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

// Apéry formulas against the bitmap oracle on one semigroup: nu and
// feng_rao up to 4g + 2e, the four basic Feng-Rao facts, and for symmetric
// S the fast symmetric path on [c, 2c - 2] and delta_FR(2g - 1 + e) = e for
// e in S \ {0} up to 3c. Appends to `result`.
void CheckSemigroup(const NumericalSemigroup& s, SuiteResult& result);

// `count` random semigroups with e <= max_e, g <= max_g.
SuiteResult RunOracleSuite(std::uint64_t seed, int count = 50,
                           Value max_e = 12, Value max_g = 25);

// `count` random telescopic semigroups (Apéry sets, representation round
// trips, carry-free pair counts below nu) and `adjunctions` random
// adjunctions checked against recomputation from generators.
SuiteResult RunTelescopicSuite(std::uint64_t seed, int count = 20,
                               int adjunctions = 50);

}  // namespace weierstrass

#endif  // WEIERSTRASS_PROPERTY_SUITE_H_
