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

#include <doctest.h>

#include "fixtures.hpp"
#include "matroidx/brute_force.hpp"
#include "matroidx/pipeline.hpp"
#include "suites.hpp"

using namespace matroidx;
using matroidx::testing::e1_instance;

namespace {

// A deliberately broken solver for the contract check.
class LyingSolver : public UnweightedSolver {
 public:
  ElementSet solve(const MatroidOracle& m1,
                   const MatroidOracle&) const override {
    ElementSet everything(m1.ground_size());
    m1.universe().for_each([&](ElementId id) { everything.add(id); });
    return everything;
  }
  Rational alpha() const override { return Rational(1); }
  std::string name() const override { return "lying"; }
};

}  // namespace

TEST_CASE("pipeline recovers the optimum of e1 with the exact solver") {
  WeightedInstance inst = e1_instance();
  ExactSolver exact;
  PipelineReport report = weighted_mi_reduce(inst, Rational(1, 10), exact);
  CHECK(report.output_weight == Rational(4));
  CHECK(report.output == ElementSet(3, {0, 2}));
  CHECK(inst.is_common_independent(report.output));
  CHECK(report.bound_factor > 0);
  CHECK(report.output_weight >= report.bound_factor * Rational(4));
}

TEST_CASE("pipeline with the greedy solver clears its printed bound") {
  WeightedInstance inst = e1_instance();
  GreedySolver greedy;
  PipelineReport report = weighted_mi_reduce(inst, Rational(1, 10), greedy);
  CHECK(inst.is_common_independent(report.output));
  CHECK(report.alpha == Rational(1, 2));
  CHECK(report.output_weight >= report.bound_factor * Rational(4));
}

TEST_CASE("single-element instance returns that element") {
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(1, 1);
  inst.m2 = make_uniform_matroid(1, 1);
  inst.weights = {Rational(5, 2)};
  inst.support = ElementSet(1, {0});
  ExactSolver exact;
  PipelineReport report = weighted_mi_reduce(inst, Rational(1, 4), exact);
  CHECK(report.output == ElementSet(1, {0}));
  CHECK(report.output_weight == Rational(5, 2));
}

TEST_CASE("empty instance yields an empty output") {
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(0, 0);
  inst.m2 = make_uniform_matroid(0, 0);
  inst.support = ElementSet(0);
  ExactSolver exact;
  PipelineReport report = weighted_mi_reduce(inst, Rational(1, 10), exact);
  CHECK(report.output.empty());
  CHECK(report.output_weight == 0);
}

TEST_CASE("a dependent solver output is a contract violation") {
  WeightedInstance inst = e1_instance();
  LyingSolver lying;
  CHECK_THROWS_AS(weighted_mi_reduce(inst, Rational(1, 10), lying),
                  ContractError);
}

TEST_CASE("epsilon domain") {
  WeightedInstance inst = e1_instance();
  ExactSolver exact;
  CHECK_THROWS_AS(weighted_mi_reduce(inst, Rational(3, 4), exact), InputError);
  CHECK_THROWS_AS(weighted_mi_reduce(inst, Rational(0), exact), InputError);
}

TEST_CASE("exact extraction flag is differential-consistent") {
  Rng rng(97);
  ExactSolver exact;
  for (uint64_t c = 0; c < 10; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 2, 6, 4, 14);
    PipelineOptions with_auction;
    PipelineOptions with_exact;
    with_exact.exact_extraction = true;
    PipelineReport a =
        weighted_mi_reduce(ri.instance, Rational(1, 10), exact, with_auction);
    PipelineReport b =
        weighted_mi_reduce(ri.instance, Rational(1, 10), exact, with_exact);
    Rational opt = brute_force_opt(ri.instance).weight;
    CHECK(a.output_weight >= a.bound_factor * opt);
    CHECK(b.bound_factor >= a.bound_factor);
    CHECK(b.output_weight >= b.bound_factor * opt);
  }
}

TEST_CASE("per-class ledgers respect the metering inequality") {
  WeightedInstance inst = e1_instance();
  ExactSolver exact;
  PipelineReport report = weighted_mi_reduce(inst, Rational(1, 10), exact);
  for (const SolvedClass& cls : report.solved) {
    uint64_t bound = static_cast<uint64_t>(cls.w_int_max) *
                     (cls.solver_unfolded.independence_calls +
                      cls.solver_unfolded.rank_calls + 2);
    CHECK(cls.solver_original.independence_calls +
              cls.solver_original.rank_calls <=
          bound);
  }
}
