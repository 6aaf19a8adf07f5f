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

#include "matroidx/brute_force.hpp"

#include <algorithm>

#include "matroidx/solvers.hpp"

namespace matroidx {

namespace {

// Exhaustive scan over subsets of `ids`; weight_of(mask) must be monotone
// under no assumption, so every mask is visited, but oracle calls are only
// spent on candidates that could improve the incumbent.
BruteForceResult scan_subsets(const std::vector<ElementId>& ids,
                              const std::vector<Rational>& weights,
                              const MatroidOracle& m1, const MatroidOracle& m2,
                              size_t ground_size) {
  if (ids.size() > 20) {
    throw BudgetError("brute force enumeration limited to 20 elements, got " +
                      std::to_string(ids.size()));
  }
  BruteForceResult best{Rational(0), ElementSet(ground_size)};
  const uint32_t full =
      ids.empty() ? 0 : ((uint32_t{1} << ids.size()) - 1);
  for (uint32_t mask = 1; mask != 0 && mask <= full; ++mask) {
    Rational weight = 0;
    for (size_t i = 0; i < ids.size(); ++i) {
      if ((mask >> i) & 1u) weight += weights[ids[i]];
    }
    if (weight < best.weight) continue;
    ElementSet candidate(ground_size);
    for (size_t i = 0; i < ids.size(); ++i) {
      if ((mask >> i) & 1u) candidate.add(ids[i]);
    }
    if (weight == best.weight && !candidate.lexicographically_before(best.set)) {
      continue;
    }
    if (m1.is_independent(candidate) && m2.is_independent(candidate)) {
      best.weight = weight;
      best.set = candidate;
    }
  }
  return best;
}

}  // namespace

BruteForceResult brute_force_opt(const WeightedInstance& inst) {
  inst.validate();
  return scan_subsets(inst.support.to_vector(), inst.weights, *inst.m1,
                      *inst.m2, inst.ground_size());
}

BruteForceResult brute_force_max_cardinality(const MatroidOracle& m1,
                                             const MatroidOracle& m2) {
  ElementSet common = m1.universe().intersect(m2.universe());
  std::vector<Rational> unit(m1.ground_size(), Rational(1));
  return scan_subsets(common.to_vector(), unit, m1, m2, m1.ground_size());
}

ChainDualPair brute_force_chain_duals(const IntegerWeightedInstance& inst) {
  inst.validate();
  std::vector<ElementId> ids = inst.support.to_vector();
  uint64_t combinations = 1;
  for (ElementId id : ids) {
    combinations *= static_cast<uint64_t>(inst.weights[id]) + 1;
    if (combinations > 200000) {
      throw BudgetError("chain dual search space too large");
    }
  }

  int64_t opt = 0;
  {
    BruteForceResult r = brute_force_opt(inst.as_weighted());
    opt = static_cast<int64_t>(numerator(r.weight));
  }

  const size_t n = inst.ground_size();
  std::vector<int64_t> split(ids.size(), 0);
  std::vector<int64_t> best_split;
  int64_t best_value = -1;

  auto evaluate = [&]() {
    std::vector<int64_t> w1(n, 0), w2(n, 0);
    for (size_t i = 0; i < ids.size(); ++i) {
      w1[ids[i]] = split[i];
      w2[ids[i]] = inst.weights[ids[i]] - split[i];
    }
    int64_t value = max_weight_independent_value(*inst.m1, w1, inst.support) +
                    max_weight_independent_value(*inst.m2, w2, inst.support);
    if (best_value < 0 || value < best_value) {
      best_value = value;
      best_split = split;
    }
  };

  // Odometer over all integral splittings 0 <= w1(e) <= w(e); weak duality
  // bounds every value below by opt, so the first hit at opt is optimal.
  while (true) {
    evaluate();
    if (best_value == opt) break;
    size_t pos = 0;
    while (pos < ids.size() && split[pos] == inst.weights[ids[pos]]) {
      split[pos] = 0;
      ++pos;
    }
    if (pos == ids.size()) break;
    ++split[pos];
  }

  if (best_value != opt) {
    throw ContractError(
        "weight-splitting search did not reach the optimum: best " +
        std::to_string(best_value) + " vs opt " + std::to_string(opt));
  }

  std::vector<int64_t> amounts1(n, 0), amounts2(n, 0);
  for (size_t i = 0; i < ids.size(); ++i) {
    amounts1[ids[i]] = best_split[i];
    amounts2[ids[i]] = inst.weights[ids[i]] - best_split[i];
  }
  ChainDualPair out;
  out.y = chain_from_cover_amounts(amounts1, n);
  out.z = chain_from_cover_amounts(amounts2, n);
  out.objective = best_value;
  return out;
}

}  // namespace matroidx
