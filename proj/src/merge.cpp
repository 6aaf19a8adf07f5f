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

#include "matroidx/merge.hpp"

#include <algorithm>

namespace matroidx {

ElementSet greedy_merge(const std::vector<MergeClass>& descending_classes,
                        const MatroidOracle& m1, const MatroidOracle& m2,
                        const std::vector<Rational>& weights) {
  for (size_t j = 0; j < descending_classes.size(); ++j) {
    const MergeClass& cls = descending_classes[j];
    if (!m1.is_independent(cls.members) || !m2.is_independent(cls.members)) {
      throw PreconditionError(
          "class set " + std::to_string(j) +
          " is not a common independent set of its restriction");
    }
    if (j > 0 && descending_classes[j - 1].lower < cls.upper) {
      throw PreconditionError("classes are not in descending weight order");
    }
  }

  ElementSet merged(m1.ground_size());
  auto ctx1 = m1.make_context();
  auto ctx2 = m2.make_context();
  for (const MergeClass& cls : descending_classes) {
    std::vector<ElementId> order = cls.members.to_vector();
    std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
      if (weights[a] != weights[b]) return weights[a] > weights[b];
      return a < b;
    });
    for (ElementId e : order) {
      if (merged.contains(e)) continue;
      merged.add(e);
      if (!ctx1->is_independent(merged) || !ctx2->is_independent(merged)) {
        merged.remove(e);
      }
    }
  }
  return merged;
}

}  // namespace matroidx
