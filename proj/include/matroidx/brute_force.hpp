// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATROIDX_BRUTE_FORCE_HPP
#define MATROIDX_BRUTE_FORCE_HPP

#include "matroidx/duals.hpp"
#include "matroidx/instance.hpp"

namespace matroidx {

struct BruteForceResult {
  Rational weight;
  ElementSet set;
};

// Exhaustive maximum-weight common independent set; ties resolved to the
// lexicographically smallest member sequence. Supports up to 20 elements.
BruteForceResult brute_force_opt(const WeightedInstance& inst);

// Exhaustive maximum-cardinality common independent set over the common
// universe of the two oracles (same tie-break and budget).
BruteForceResult brute_force_max_cardinality(const MatroidOracle& m1,
                                             const MatroidOracle& m2);

struct ChainDualPair {
  ChainDual y;
  ChainDual z;
  int64_t objective = 0;
};

// Optimal integral chain-supported duals for the weighted LP, found by
// enumerating integral weight splittings w = w1 + w2 and taking level-set
// chains of the best split; strong duality (objective == brute-force
// optimum) certifies the search.
ChainDualPair brute_force_chain_duals(const IntegerWeightedInstance& inst);

}  // namespace matroidx

#endif  // MATROIDX_BRUTE_FORCE_HPP
