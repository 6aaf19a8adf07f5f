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

#ifndef MATROIDX_TESTS_FIXTURES_HPP
#define MATROIDX_TESTS_FIXTURES_HPP

#include "matroidx/instance.hpp"

namespace matroidx::testing {

// Partition {a,b} cap 1 / {c} cap 1 versus uniform k=2, weights a:3 b:2 c:1.
// Optimum is {a, c} with weight 4.
inline WeightedInstance e1_instance() {
  WeightedInstance inst;
  inst.m1 = make_partition_matroid({0, 0, 1}, {1, 1});
  inst.m2 = make_uniform_matroid(3, 2);
  inst.weights = {Rational(3), Rational(2), Rational(1)};
  inst.support = ElementSet(3, {0, 1, 2});
  return inst;
}

inline IntegerWeightedInstance e1_integer() {
  IntegerWeightedInstance inst;
  inst.m1 = make_partition_matroid({0, 0, 1}, {1, 1});
  inst.m2 = make_uniform_matroid(3, 2);
  inst.weights = {3, 2, 1};
  inst.support = ElementSet(3, {0, 1, 2});
  inst.max_weight = 3;
  return inst;
}

// Two multigraphs over elements a=0, b=1, c=2, d=3 with weights 3,1,2,2:
// the first has edges a:0-2 b:0-1 c:1-2 d:0-2, the second two components
// {a,c} parallel and {b,d} parallel. Optimum weight is 4.
inline IntegerWeightedInstance paired_graphs_instance() {
  IntegerWeightedInstance inst;
  inst.m1 = make_graphic_matroid(3, {{0, 2}, {0, 1}, {1, 2}, {0, 2}});
  inst.m2 = make_graphic_matroid(4, {{0, 1}, {2, 3}, {0, 1}, {2, 3}});
  inst.weights = {3, 1, 2, 2};
  inst.support = ElementSet(4, {0, 1, 2, 3});
  inst.max_weight = 3;
  return inst;
}

// Triangle graph; elements 0=edge(0,1), 1=edge(1,2), 2=edge(0,2).
inline OraclePtr triangle_graphic() {
  return make_graphic_matroid(3, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace matroidx::testing

#endif  // MATROIDX_TESTS_FIXTURES_HPP
