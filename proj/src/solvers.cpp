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

#include "matroidx/solvers.hpp"

#include <algorithm>
#include <deque>

namespace matroidx {

ElementSet max_weight_base(const MatroidOracle& m,
                           const std::vector<Rational>& weights,
                           const ElementSet& candidates,
                           const ElementSet* prefer) {
  std::vector<ElementId> order;
  candidates.for_each([&](ElementId id) {
    if (weights[id] > 0) order.push_back(id);
  });
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    bool pa = prefer != nullptr && prefer->contains(a);
    bool pb = prefer != nullptr && prefer->contains(b);
    if (pa != pb) return pa;
    return a < b;
  });
  ElementSet base(m.ground_size());
  for (ElementId id : order) {
    base.add(id);
    if (!m.is_independent(base)) base.remove(id);
  }
  return base;
}

int64_t max_weight_independent_value(const MatroidOracle& m,
                                     const std::vector<int64_t>& weights,
                                     const ElementSet& candidates) {
  std::vector<ElementId> order;
  candidates.for_each([&](ElementId id) {
    if (weights[id] > 0) order.push_back(id);
  });
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (weights[a] != weights[b]) return weights[a] > weights[b];
    return a < b;
  });
  ElementSet base(m.ground_size());
  int64_t total = 0;
  for (ElementId id : order) {
    base.add(id);
    if (m.is_independent(base)) {
      total += weights[id];
    } else {
      base.remove(id);
    }
  }
  return total;
}

ElementSet greedy_mi(const MatroidOracle& m1, const MatroidOracle& m2,
                     const std::vector<ElementId>& order) {
  ElementSet current(m1.ground_size());
  auto ctx1 = m1.make_context();
  auto ctx2 = m2.make_context();
  for (ElementId id : order) {
    if (!m1.universe().contains(id) || !m2.universe().contains(id)) {
      throw InputError("greedy order contains element outside the universe");
    }
    if (current.contains(id)) continue;
    current.add(id);
    if (!ctx1->is_independent(current) || !ctx2->is_independent(current)) {
      current.remove(id);
    }
  }
  return current;
}

namespace {

constexpr uint32_t kUnreached = ~uint32_t{0};

}  // namespace

ElementSet exact_mi(const MatroidOracle& m1, const MatroidOracle& m2) {
  const size_t n = m1.ground_size();
  std::vector<ElementId> ids =
      m1.universe().intersect(m2.universe()).to_vector();
  auto ctx1 = m1.make_context();
  auto ctx2 = m2.make_context();

  // Maximal warm start; augmenting paths work from any common independent set.
  ElementSet current(n);
  for (ElementId id : ids) {
    current.add(id);
    if (!ctx1->is_independent(current) || !ctx2->is_independent(current)) {
      current.remove(id);
    }
  }

  while (true) {
    std::vector<ElementId> outside;
    for (ElementId id : ids) {
      if (!current.contains(id)) outside.push_back(id);
    }
    if (outside.empty()) return current;

    // Free elements per side.
    ElementSet sources(n), sinks(n);
    {
      ElementSet probe = current;
      for (ElementId x : outside) {
        probe.add(x);
        if (ctx1->is_independent(probe)) sources.add(x);
        probe.remove(x);
      }
      for (ElementId x : outside) {
        probe.add(x);
        if (ctx2->is_independent(probe)) sinks.add(x);
        probe.remove(x);
      }
    }
    if (sources.empty()) return current;

    // BFS over the exchange graph. Arcs y->x (y in I, x outside) require
    // I - y + x independent in m1; arcs x->y require it in m2. A shortest
    // path from a source to a sink yields a valid augmentation.
    std::vector<uint32_t> parent(n, kUnreached);
    std::vector<char> reached(n, 0);
    std::deque<ElementId> queue;
    ElementId found = kUnreached;
    sources.for_each([&](ElementId x) {
      reached[x] = 1;
      if (sinks.contains(x)) {
        if (found == kUnreached) found = x;
      } else {
        queue.push_back(x);
      }
    });

    std::vector<ElementId> inside = current.to_vector();
    while (found == kUnreached && !queue.empty()) {
      ElementId u = queue.front();
      queue.pop_front();
      ElementSet probe = current;
      if (current.contains(u)) {
        probe.remove(u);
        for (ElementId x : outside) {
          if (reached[x]) continue;
          probe.add(x);
          bool arc = ctx1->is_independent(probe);
          probe.remove(x);
          if (!arc) continue;
          reached[x] = 1;
          parent[x] = u;
          if (sinks.contains(x)) {
            found = x;
            break;
          }
          queue.push_back(x);
        }
      } else {
        probe.add(u);
        for (ElementId y : inside) {
          if (reached[y]) continue;
          probe.remove(y);
          bool arc = ctx2->is_independent(probe);
          probe.add(y);
          if (!arc) continue;
          reached[y] = 1;
          parent[y] = u;
          queue.push_back(y);
        }
        probe.remove(u);
      }
    }

    if (found == kUnreached) return current;
    for (ElementId v = found; v != kUnreached; v = parent[v]) {
      if (current.contains(v)) {
        current.remove(v);
      } else {
        current.add(v);
      }
    }
  }
}

}  // namespace matroidx
