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

#include "matroidx/spread.hpp"

#include <map>

namespace matroidx {

SpreadDecomposition spread_decompose(const WeightedInstance& inst,
                                     const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > Rational(1, 2)) {
    throw InputError("epsilon must lie in (0, 1/2]");
  }
  inst.validate();

  SpreadDecomposition out;
  out.epsilon = epsilon;
  Rational inv = Rational(1) / epsilon;
  out.beta = static_cast<int>(ceil_rational(inv));

  const size_t n = inst.ground_size();
  if (inst.support.empty()) {
    for (int i = 1; i <= out.beta; ++i) {
      out.indices.push_back(SpreadIndex{i, {}, ElementSet(n)});
    }
    return out;
  }

  // Normalize so the minimum weight is 1; group g holds weights in
  // [inv^g, inv^{g+1}).
  Rational w_min = inst.min_weight();
  std::vector<int> group(n, -1);
  inst.support.for_each([&](ElementId id) {
    group[id] = floor_log(inst.weights[id] / w_min, inv);
  });

  const int beta = out.beta;
  for (int i = 1; i <= beta; ++i) {
    SpreadIndex si;
    si.index = i;
    si.kept = ElementSet(n);
    std::map<int, ElementSet> classes;
    inst.support.for_each([&](ElementId id) {
      int g = group[id];
      if (g % beta == i % beta) return;  // missing group for this index
      // Class l covers groups i+(l-1)*beta+1 .. i+l*beta-1.
      int l = (g - i - 1 >= 0) ? (g - i - 1) / beta + 1 : 0;
      auto [it, inserted] = classes.try_emplace(l, ElementSet(n));
      it->second.add(id);
      si.kept.add(id);
    });
    for (auto& [l, members] : classes) {
      WeightClass wc;
      wc.level = l;
      wc.lower = rational_pow(inv, i + (l - 1) * beta + 1) * w_min;
      wc.upper = rational_pow(inv, i + l * beta) * w_min;
      wc.members = std::move(members);
      si.classes.push_back(std::move(wc));
    }
    out.indices.push_back(std::move(si));
  }
  return out;
}

}  // namespace matroidx
