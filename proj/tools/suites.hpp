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

#ifndef MATROIDX_TOOLS_SUITES_HPP
#define MATROIDX_TOOLS_SUITES_HPP

#include <functional>
#include <string>
#include <vector>

#include "generator.hpp"
#include "matroidx/instance.hpp"

namespace matroidx {

struct SuiteResult {
  std::string suite;
  bool passed = true;
  uint64_t cases = 0;
  std::vector<std::string> notes;
  std::string failure;         // first violation
  std::string counterexample;  // minimized witness, when applicable

  std::string to_string() const;
};

// Property suites over seeded random instances. Budgets are instance (or
// configuration) counts; each suite fixes its own instance sizes so the
// brute-force oracles stay cheap.
//   axioms             exhaustive matroid axioms, base and unfolded oracles
//   unfold-equivalence brute-force weighted optimum == unfolded optimum,
//                      plus the <=W-underlying-calls-per-query assertion
//   duals              lifted duals feasible with f(y,z) == g(y',z')
//   charging           spanned-set circuit-union lower bound
//   merge              greedy merge loses at most a 4*eps fraction
//   auction            additive bound, invariants, query budget
//   pipeline           end-to-end reduction vs its printed bound
//   models             streaming and one-way communication wrappers
//   rounding           per-element rescale-round sandwich
SuiteResult run_suite(const std::string& name, uint64_t count, uint64_t seed,
                      bool corrupt_fixture = false);

const std::vector<std::string>& suite_names();

// Deliberately broken independence system (|S| != 2), used as the negative
// control for the axiom checker.
OraclePtr make_corrupt_oracle(size_t n);

// Greedy element-removal minimization: shrinks the support while the
// failing predicate keeps failing on the restricted instance.
ElementSet minimize_support(
    const WeightedInstance& inst,
    const std::function<bool(const WeightedInstance&)>& fails);

// Random integer-weighted instance: families cycled over all sixteen
// pairings, weights in [1, max_weight], total weight capped so unfolded
// grounds stay exhaustively checkable.
struct RandomInstance {
  InstanceSpec spec;
  WeightedInstance instance;
};
RandomInstance random_small_instance(Rng& rng, uint64_t pairing, size_t n_min,
                                     size_t n_max, int64_t max_weight,
                                     int64_t total_weight_cap);

}  // namespace matroidx

#endif  // MATROIDX_TOOLS_SUITES_HPP
