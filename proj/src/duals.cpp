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

#include "matroidx/duals.hpp"

#include <algorithm>

namespace matroidx {

int64_t ChainDual::total_value() const {
  int64_t total = 0;
  for (const Entry& e : entries) total += e.value;
  return total;
}

int64_t ChainDual::coverage(ElementId id) const {
  int64_t total = 0;
  for (const Entry& e : entries) {
    if (e.set.contains(id)) total += e.value;
  }
  return total;
}

void ChainDual::validate(size_t ground_size) const {
  for (size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].set.capacity() != ground_size) {
      throw PreconditionError("chain dual set over wrong universe");
    }
    if (entries[i].value < 1) {
      throw PreconditionError("chain dual value below 1");
    }
    if (entries[i].set.empty()) {
      throw PreconditionError("chain dual contains an empty set");
    }
    if (i > 0) {
      if (!entries[i].set.is_subset_of(entries[i - 1].set) ||
          entries[i].set == entries[i - 1].set) {
        throw PreconditionError("chain dual support is not a strict chain");
      }
    }
  }
}

ChainDual chain_from_cover_amounts(const std::vector<int64_t>& amounts,
                                   size_t ground_size) {
  int64_t top = 0;
  for (int64_t a : amounts) top = std::max(top, a);
  ChainDual out;
  ElementSet prev(ground_size);
  for (int64_t t = 1; t <= top; ++t) {
    ElementSet level(ground_size);
    for (size_t e = 0; e < amounts.size(); ++e) {
      if (amounts[e] >= t) level.add(static_cast<ElementId>(e));
    }
    if (level.empty()) break;
    if (!out.entries.empty() && level == prev) {
      ++out.entries.back().value;
    } else {
      out.entries.push_back({level, 1});
      prev = level;
    }
  }
  return out;
}

int64_t weighted_dual_value(const ChainDual& yp, const ChainDual& zp,
                            const IntegerWeightedInstance& inst) {
  int64_t total = 0;
  for (const auto& e : yp.entries) {
    total += e.value * static_cast<int64_t>(inst.m1->rank(e.set));
  }
  for (const auto& e : zp.entries) {
    total += e.value * static_cast<int64_t>(inst.m2->rank(e.set));
  }
  return total;
}

bool weighted_dual_feasible(const ChainDual& yp, const ChainDual& zp,
                            const IntegerWeightedInstance& inst) {
  bool ok = true;
  inst.support.for_each([&](ElementId e) {
    if (yp.coverage(e) + zp.coverage(e) < inst.weights[e]) ok = false;
  });
  return ok;
}

namespace {

// One side of the lifting: walks the chain outward, spending one unit of
// dual value per copy level f.
void lift_side(const ChainDual& chain, const UnfoldedInstance& unfolded,
               bool reversed, std::vector<DualPair::Entry>* out) {
  const IntegerWeightedInstance& src = unfolded.source();
  int64_t f = 1;
  for (const auto& entry : chain.entries) {
    for (int64_t step = 0; step < entry.value; ++step, ++f) {
      ElementSet lifted(unfolded.copy_count());
      entry.set.for_each([&](ElementId e) {
        if (!src.support.contains(e) || src.weights[e] < f) return;
        int64_t index = reversed ? src.weights[e] + 1 - f : f;
        lifted.add(unfolded.copy_id(e, index));
      });
      if (!lifted.empty()) out->push_back({lifted, 1});
    }
  }
}

}  // namespace

DualPair unweighted_dual(const ChainDual& yp, const ChainDual& zp,
                         const UnfoldedInstance& unfolded) {
  const IntegerWeightedInstance& inst = unfolded.source();
  yp.validate(inst.ground_size());
  zp.validate(inst.ground_size());
  if (!weighted_dual_feasible(yp, zp, inst)) {
    throw PreconditionError("input duals are infeasible for the weighted LP");
  }
  DualPair out;
  lift_side(yp, unfolded, /*reversed=*/false, &out.y);
  lift_side(zp, unfolded, /*reversed=*/true, &out.z);
  return out;
}

bool unfolded_dual_feasible(const DualPair& duals,
                            const UnfoldedInstance& unfolded) {
  std::vector<int64_t> cover(unfolded.copy_count(), 0);
  for (const auto& e : duals.y) {
    e.set.for_each([&](ElementId c) { cover[c] += e.value; });
  }
  for (const auto& e : duals.z) {
    e.set.for_each([&](ElementId c) { cover[c] += e.value; });
  }
  for (int64_t c : cover) {
    if (c < 1) return false;
  }
  return true;
}

int64_t unfolded_dual_value(const DualPair& duals,
                            const UnfoldedInstance& unfolded) {
  int64_t total = 0;
  for (const auto& e : duals.y) {
    total += e.value * static_cast<int64_t>(unfolded.m1()->rank(e.set));
  }
  for (const auto& e : duals.z) {
    total += e.value * static_cast<int64_t>(unfolded.m2()->rank(e.set));
  }
  return total;
}

}  // namespace matroidx
