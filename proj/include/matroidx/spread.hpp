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

#ifndef MATROIDX_SPREAD_HPP
#define MATROIDX_SPREAD_HPP

#include "matroidx/instance.hpp"

namespace matroidx {

struct WeightClass {
  int level = 0;      // l
  Rational lower;     // (1/eps)^(i + (l-1)*beta + 1)
  Rational upper;     // (1/eps)^(i + l*beta), exclusive
  ElementSet members;
};

struct SpreadIndex {
  int index = 0;                     // i in [beta]
  std::vector<WeightClass> classes;  // ascending by level, empty ones omitted
  ElementSet kept;                   // union of the classes
};

// For each i in [beta], the restriction to the kept elements is
// (1/eps)-spread: consecutive class intervals are separated by a factor of
// exactly 1/eps at the boundary.
struct SpreadDecomposition {
  Rational epsilon;
  int beta = 0;  // ceil(1/eps)
  std::vector<SpreadIndex> indices;
};

// Partition per Definition of spread matroids from arbitrary ones. Weights
// are first normalized by the minimum weight so every weight is >= 1;
// classes are expressed in normalized units.
SpreadDecomposition spread_decompose(const WeightedInstance& inst,
                                     const Rational& epsilon);

}  // namespace matroidx

#endif  // MATROIDX_SPREAD_HPP
