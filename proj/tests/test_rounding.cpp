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

#include "matroidx/rounding.hpp"
#include "matroidx/rng.hpp"

using namespace matroidx;

namespace {

WeightedInstance free_instance(std::vector<Rational> weights) {
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

TEST_CASE("rescale-round on weights {1, 10} at eps = 1/2") {
  // w_s = 2w/(eps*w_min) gives {4, 40}; bucket floors of 1.5^i are 3 and 38.
  RoundedInstance rounded =
      rescale_round(free_instance({Rational(1), Rational(10)}), Rational(1, 2));
  CHECK(rounded.instance.weights[0] == 3);
  CHECK(rounded.instance.weights[1] == 38);
  CHECK(rounded.instance.max_weight == 38);
  CHECK(rounded.params.scale == Rational(4));
  // 3 >= 4 / (3/2)^2 = 16/9.
  CHECK(Rational(3) >= Rational(4) / (Rational(3, 2) * Rational(3, 2)));
}

TEST_CASE("equal weights land in one bucket") {
  RoundedInstance rounded = rescale_round(
      free_instance({Rational(7, 3), Rational(7, 3), Rational(7, 3)}),
      Rational(1, 4));
  CHECK(rounded.instance.weights[0] == rounded.instance.weights[1]);
  CHECK(rounded.instance.weights[1] == rounded.instance.weights[2]);
}

TEST_CASE("rescale-round input validation") {
  CHECK_THROWS_AS(rescale_round(free_instance({Rational(1)}), Rational(0)),
                  InputError);
  CHECK_THROWS_AS(rescale_round(free_instance({Rational(1)}), Rational(2, 3)),
                  InputError);
  WeightedInstance bad = free_instance({Rational(0)});
  CHECK_THROWS_AS(rescale_round(bad, Rational(1, 2)), InputError);
}

TEST_CASE("sandwich property on random weights") {
  Rng rng(37);
  const Rational epsilons[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2)};
  for (int round = 0; round < 60; ++round) {
    size_t n = static_cast<size_t>(rng.range(1, 9));
    std::vector<Rational> weights;
    for (size_t i = 0; i < n; ++i) {
      weights.emplace_back(rng.range(1, 2000), rng.range(1, 32));
    }
    WeightedInstance inst = free_instance(weights);
    for (const Rational& eps : epsilons) {
      RoundedInstance rounded = rescale_round(inst, eps);
      Rational base = Rational(1) + eps;
      inst.support.for_each([&](ElementId e) {
        Rational w_s = rounded.params.scale * inst.weights[e];
        Rational w_r(rounded.instance.weights[e]);
        CHECK(w_r <= w_s);
        CHECK(w_r * base * base >= w_s);
      });
    }
  }
}

TEST_CASE("exact integerization") {
  auto rounded = exact_integerize(
      free_instance({Rational(3, 2), Rational(5, 2), Rational(4)}), 64);
  REQUIRE(rounded.has_value());
  CHECK(rounded->params.mode == RoundingMode::kExact);
  CHECK(rounded->instance.weights == std::vector<int64_t>{3, 5, 8});
  CHECK(rounded->params.loss_factor == 1);

  // gcd reduction shrinks common factors.
  auto reduced =
      exact_integerize(free_instance({Rational(10), Rational(20)}), 64);
  REQUIRE(reduced.has_value());
  CHECK(reduced->instance.weights == std::vector<int64_t>{1, 2});

  // Over the cap the exact route declines.
  CHECK_FALSE(
      exact_integerize(free_instance({Rational(1, 977), Rational(1)}), 64)
          .has_value());
}
