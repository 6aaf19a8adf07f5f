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

#ifndef MATROIDX_SOLVERS_HPP
#define MATROIDX_SOLVERS_HPP

#include <functional>

#include "matroidx/instance.hpp"

namespace matroidx {

// Greedy maximum-weight base of the positive-weight part: elements in
// descending weight, ties preferring members of `prefer` (when given) and
// then ascending id; zero or negative weights are excluded.
ElementSet max_weight_base(const MatroidOracle& m,
                           const std::vector<Rational>& weights,
                           const ElementSet& candidates,
                           const ElementSet* prefer = nullptr);

// Weight of the greedy maximum-weight independent set under integer
// weights; exact for a single matroid.
int64_t max_weight_independent_value(const MatroidOracle& m,
                                     const std::vector<int64_t>& weights,
                                     const ElementSet& candidates);

// Maximum-cardinality common independent set via shortest augmenting paths
// in the exchange graph. Deterministic: BFS in ascending id order.
ElementSet exact_mi(const MatroidOracle& m1, const MatroidOracle& m2);

// Single scan over `order`, keeping an element iff it stays independent in
// both matroids; a maximal common independent set, hence a 0.5-approximation.
ElementSet greedy_mi(const MatroidOracle& m1, const MatroidOracle& m2,
                     const std::vector<ElementId>& order);

// Pluggable cardinality solver with a declared approximation guarantee.
class UnweightedSolver {
 public:
  virtual ~UnweightedSolver() = default;
  virtual ElementSet solve(const MatroidOracle& m1,
                           const MatroidOracle& m2) const = 0;
  virtual Rational alpha() const = 0;
  virtual std::string name() const = 0;
};

class ExactSolver : public UnweightedSolver {
 public:
  ElementSet solve(const MatroidOracle& m1,
                   const MatroidOracle& m2) const override {
    return exact_mi(m1, m2);
  }
  Rational alpha() const override { return Rational(1); }
  std::string name() const override { return "exact"; }
};

class GreedySolver : public UnweightedSolver {
 public:
  ElementSet solve(const MatroidOracle& m1,
                   const MatroidOracle& m2) const override {
    return greedy_mi(m1, m2,
                     m1.universe().intersect(m2.universe()).to_vector());
  }
  Rational alpha() const override { return Rational(1, 2); }
  std::string name() const override { return "greedy"; }
};

}  // namespace matroidx

#endif  // MATROIDX_SOLVERS_HPP
