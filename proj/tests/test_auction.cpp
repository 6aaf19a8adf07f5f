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
#include "matroidx/auction.hpp"
#include "matroidx/brute_force.hpp"
#include "suites.hpp"

using namespace matroidx;
using matroidx::testing::e1_instance;

TEST_CASE("single free element is returned exactly") {
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(1, 1);
  inst.m2 = make_uniform_matroid(1, 1);
  inst.weights = {Rational(7)};
  inst.support = ElementSet(1, {0});
  AuctionResult result = auction_additive(inst, Rational(1, 10));
  CHECK(result.set == ElementSet(1, {0}));
}

TEST_CASE("additive bound on the e1 fixture") {
  WeightedInstance inst = e1_instance();
  AuctionOptions options;
  options.check_invariants = true;
  AuctionResult result = auction_additive(inst, Rational(1, 10), options);
  CHECK(inst.is_common_independent(result.set));
  // w(S) >= 4 - 3*3*(1/10)*3 = 13/10.
  CHECK(inst.weight_of(result.set) >= Rational(13, 10));
}

TEST_CASE("a large epsilon returns the initial intersection") {
  WeightedInstance inst = e1_instance();
  AuctionResult result = auction_additive(inst, Rational(9, 10));
  // eps*n = 27/10 >= any |X|, so the very first check returns S_a cap S_b
  // (the b side starts empty).
  CHECK(result.iterations == 0);
  CHECK(result.set.empty());
  Rational slack = Rational(3) * Rational(3) * Rational(9, 10) * Rational(3);
  CHECK(Rational(0) >= brute_force_opt(inst).weight - slack);
}

TEST_CASE("epsilon domain") {
  WeightedInstance inst = e1_instance();
  CHECK_THROWS_AS(auction_additive(inst, Rational(0)), InputError);
  CHECK_THROWS_AS(auction_additive(inst, Rational(1)), InputError);
}

TEST_CASE("splitting certificate bounds the optimum") {
  WeightedInstance inst = e1_instance();
  Rational eps(1, 20);
  AuctionResult result = auction_additive(inst, eps);
  CHECK(auction_splitting_bound(inst, eps, result) >=
        brute_force_opt(inst).weight);
}

TEST_CASE("event jump equals single-step execution") {
  Rng rng(83);
  for (uint64_t c = 0; c < 30; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 1, 7, 5, 0);
    for (const Rational& eps : {Rational(1, 7), Rational(1, 16)}) {
      AuctionOptions fast;
      AuctionOptions slow;
      slow.force_single_step = true;
      AuctionResult a = auction_additive(ri.instance, eps, fast);
      AuctionResult b = auction_additive(ri.instance, eps, slow);
      CHECK(a.set == b.set);
      CHECK(a.prices == b.prices);
      CHECK(a.iterations == b.iterations);
      CHECK(a.rounds <= b.rounds);
    }
  }
}

TEST_CASE("invariants hold under a fine precision") {
  WeightedInstance inst = e1_instance();
  AuctionOptions options;
  options.check_invariants = true;
  // delta = eps/W^2 as the pipeline would use it.
  Rational delta = Rational(1, 10) / Rational(9);
  AuctionResult result = auction_additive(inst, delta, options);
  CHECK(inst.is_common_independent(result.set));
  Rational slack = Rational(3) * Rational(3) * delta * Rational(3);
  CHECK(inst.weight_of(result.set) >= brute_force_opt(inst).weight - slack);
}
