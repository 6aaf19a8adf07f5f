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

#include "generator.hpp"
#include "matroidx/brute_force.hpp"
#include "suites.hpp"
#include "matroidx/rng.hpp"
#include "matroidx/spread.hpp"

using namespace matroidx;

namespace {

WeightedInstance weights_only(std::vector<Rational> weights) {
  WeightedInstance inst;
  size_t n = weights.size();
  inst.m1 = make_uniform_matroid(n, n);
  inst.m2 = make_uniform_matroid(n, n);
  inst.weights = std::move(weights);
  inst.support = ElementSet(n);
  for (size_t i = 0; i < n; ++i) inst.support.add(static_cast<ElementId>(i));
  return inst;
}

}  // namespace

TEST_CASE("spread classes for weights {1, 8, 64} at eps = 1/2") {
  SpreadDecomposition sd = spread_decompose(
      weights_only({Rational(1), Rational(8), Rational(64)}), Rational(1, 2));
  CHECK(sd.beta == 2);
  REQUIRE(sd.indices.size() == 2);

  // Index 1 keeps weights 1 and 64 in classes [1,2) and [64,128).
  const SpreadIndex& first = sd.indices[0];
  CHECK(first.kept == ElementSet(3, {0, 2}));
  REQUIRE(first.classes.size() == 2);
  CHECK(first.classes[0].lower == Rational(1));
  CHECK(first.classes[0].upper == Rational(2));
  CHECK(first.classes[0].members == ElementSet(3, {0}));
  CHECK(first.classes[1].lower == Rational(64));
  CHECK(first.classes[1].upper == Rational(128));
  CHECK(first.classes[1].members == ElementSet(3, {2}));

  // Index 2 keeps weight 8 in class [8,16).
  const SpreadIndex& second = sd.indices[1];
  CHECK(second.kept == ElementSet(3, {1}));
  REQUIRE(second.classes.size() == 1);
  CHECK(second.classes[0].lower == Rational(8));
  CHECK(second.classes[0].upper == Rational(16));
}

TEST_CASE("single element appears for all but one index") {
  SpreadDecomposition sd =
      spread_decompose(weights_only({Rational(5)}), Rational(1, 4));
  CHECK(sd.beta == 4);
  int kept = 0;
  for (const SpreadIndex& si : sd.indices) {
    if (!si.kept.empty()) {
      ++kept;
      REQUIRE(si.classes.size() == 1);
      CHECK(si.classes[0].members == ElementSet(1, {0}));
    }
  }
  CHECK(kept == sd.beta - 1);
}

TEST_CASE("weights within one interval give one class per index") {
  SpreadDecomposition sd = spread_decompose(
      weights_only({Rational(3), Rational(5, 2), Rational(2)}), Rational(1, 2));
  for (const SpreadIndex& si : sd.indices) {
    CHECK(si.classes.size() <= 1);
  }
}

TEST_CASE("spread structure properties on random weights") {
  Rng rng(41);
  for (int round = 0; round < 40; ++round) {
    size_t n = static_cast<size_t>(rng.range(1, 10));
    std::vector<Rational> weights;
    for (size_t i = 0; i < n; ++i) {
      weights.push_back(random_log_uniform_weight(rng, 200));
    }
    WeightedInstance inst = weights_only(weights);
    Rational eps(1, rng.range(2, 5));
    SpreadDecomposition sd = spread_decompose(inst, eps);
    Rational inv = Rational(1) / eps;
    CHECK(sd.indices.size() == static_cast<size_t>(sd.beta));

    std::vector<int> missing_count(n, 0);
    for (const SpreadIndex& si : sd.indices) {
      // Within an index: classes disjoint, gap between consecutive intervals
      // is at least the spread factor, members inside their interval.
      for (size_t c = 0; c < si.classes.size(); ++c) {
        const WeightClass& wc = si.classes[c];
        CHECK_FALSE(wc.members.empty());
        wc.members.for_each([&](ElementId e) {
          CHECK(inst.weights[e] >= wc.lower);
          CHECK(inst.weights[e] < wc.upper);
        });
        if (c > 0) {
          CHECK(wc.lower >= si.classes[c - 1].upper * inv);
          CHECK_FALSE(wc.members.intersects(si.classes[c - 1].members));
        }
      }
      inst.support.for_each([&](ElementId e) {
        if (!si.kept.contains(e)) ++missing_count[e];
      });
    }
    // The missing groups partition the ground set across indices.
    inst.support.for_each(
        [&](ElementId e) { CHECK(missing_count[e] == 1); });
  }
}

TEST_CASE("total class count grows as epsilon shrinks") {
  WeightedInstance inst =
      weights_only({Rational(1), Rational(8), Rational(64)});
  size_t coarse = 0, fine = 0;
  for (const SpreadIndex& si : spread_decompose(inst, Rational(1, 2)).indices) {
    coarse += si.classes.size();
  }
  for (const SpreadIndex& si : spread_decompose(inst, Rational(1, 4)).indices) {
    fine += si.classes.size();
  }
  CHECK(coarse == 3);
  CHECK(fine == 6);
  CHECK(fine >= coarse);
}

TEST_CASE("some spread index keeps a near-optimal solution") {
  Rng rng(137);
  for (uint64_t c = 0; c < 25; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 2, 7, 4, 0);
    Rational opt = brute_force_opt(ri.instance).weight;
    for (const Rational& eps : {Rational(1, 2), Rational(1, 3)}) {
      SpreadDecomposition sd = spread_decompose(ri.instance, eps);
      Rational best = 0;
      for (const SpreadIndex& si : sd.indices) {
        if (si.kept.empty()) continue;
        Rational value =
            brute_force_opt(ri.instance.restricted(si.kept)).weight;
        best = std::max(best, value);
      }
      CHECK(best >= (Rational(1) - eps) * opt);
    }
  }
}
