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

#include "matroidx/merge.hpp"

using namespace matroidx;

TEST_CASE("single class merges to itself") {
  auto m1 = make_uniform_matroid(3, 2);
  auto m2 = make_uniform_matroid(3, 2);
  std::vector<Rational> weights = {Rational(5), Rational(4), Rational(3)};
  std::vector<MergeClass> classes = {
      MergeClass{Rational(3), Rational(6), ElementSet(3, {0, 1})}};
  CHECK(greedy_merge(classes, *m1, *m2, weights) == ElementSet(3, {0, 1}));
}

TEST_CASE("heavy element excludes a spanned light one") {
  // x (weight 8) spans y (weight 1) in the first matroid; classes are
  // 1/eps-spread at eps = 1/8 with boundary equality.
  auto m1 = make_uniform_matroid(2, 1);
  auto m2 = make_uniform_matroid(2, 2);
  std::vector<Rational> weights = {Rational(8), Rational(1)};
  std::vector<MergeClass> classes = {
      MergeClass{Rational(8), Rational(9), ElementSet(2, {0})},
      MergeClass{Rational(1), Rational(2), ElementSet(2, {1})}};
  ElementSet merged = greedy_merge(classes, *m1, *m2, weights);
  CHECK(merged == ElementSet(2, {0}));
  // Lemma arithmetic: 8 >= (1 - 4/8) * 9.
  Rational eps(1, 8);
  CHECK(Rational(8) >= (Rational(1) - 4 * eps) * Rational(9));
}

TEST_CASE("disjoint-support classes merge without loss") {
  auto m1 = make_partition_matroid({0, 0, 1, 1}, {1, 1});
  auto m2 = make_uniform_matroid(4, 4);
  std::vector<Rational> weights = {Rational(40), Rational(39), Rational(2),
                                   Rational(1)};
  std::vector<MergeClass> classes = {
      MergeClass{Rational(39), Rational(41), ElementSet(4, {0})},
      MergeClass{Rational(1), Rational(3), ElementSet(4, {2})}};
  ElementSet merged = greedy_merge(classes, *m1, *m2, weights);
  CHECK(merged == ElementSet(4, {0, 2}));
}

TEST_CASE("dependent class sets are rejected") {
  auto m1 = make_uniform_matroid(2, 1);
  auto m2 = make_uniform_matroid(2, 2);
  std::vector<Rational> weights = {Rational(2), Rational(1)};
  std::vector<MergeClass> classes = {
      MergeClass{Rational(1), Rational(3), ElementSet(2, {0, 1})}};
  CHECK_THROWS_AS(greedy_merge(classes, *m1, *m2, weights), PreconditionError);
}

TEST_CASE("class order must descend") {
  auto m = make_uniform_matroid(2, 2);
  std::vector<Rational> weights = {Rational(1), Rational(10)};
  std::vector<MergeClass> classes = {
      MergeClass{Rational(1), Rational(2), ElementSet(2, {0})},
      MergeClass{Rational(10), Rational(11), ElementSet(2, {1})}};
  CHECK_THROWS_AS(greedy_merge(classes, *m, *m, weights), PreconditionError);
}

TEST_CASE("within a class heavier elements are kept first") {
  // One block of capacity 2: after the heavy element only one of {y, z}
  // fits, and the scan order keeps the heavier z.
  auto m1 = make_partition_matroid({0, 0, 0}, {2});
  auto m2 = make_uniform_matroid(3, 3);
  std::vector<Rational> weights = {Rational(40), Rational(2), Rational(3)};
  std::vector<MergeClass> classes = {
      MergeClass{Rational(40), Rational(41), ElementSet(3, {0})},
      MergeClass{Rational(2), Rational(4), ElementSet(3, {1, 2})}};
  ElementSet merged = greedy_merge(classes, *m1, *m2, weights);
  CHECK(merged == ElementSet(3, {0, 2}));
}
