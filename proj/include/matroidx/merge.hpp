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

#ifndef MATROIDX_MERGE_HPP
#define MATROIDX_MERGE_HPP

#include "matroidx/instance.hpp"

namespace matroidx {

struct MergeClass {
  Rational lower;      // weight interval of the class
  Rational upper;      // exclusive
  ElementSet members;  // a common independent set within the class
};

// Greedy aggregation of per-class common independent sets, scanning classes
// in descending weight order (as given), within a class by descending weight
// then ascending id), keeping an element iff the merged set stays commonly
// independent. For (1/eps)-spread classes the merged weight is at least
// (1-4eps) of the summed class weights.
ElementSet greedy_merge(const std::vector<MergeClass>& descending_classes,
                        const MatroidOracle& m1, const MatroidOracle& m2,
                        const std::vector<Rational>& weights);

}  // namespace matroidx

#endif  // MATROIDX_MERGE_HPP
