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

#ifndef MATROIDX_INSTANCE_HPP
#define MATROIDX_INSTANCE_HPP

#include <cstdint>
#include <vector>

#include "matroidx/errors.hpp"
#include "matroidx/matroid.hpp"
#include "matroidx/rational.hpp"

namespace matroidx {

// Two matroid oracles over a shared ground set plus a positive weight map.
// `support` carries the elements the instance is about; restrictions keep
// the global id space, so support may be a strict subset of [0, n).
struct WeightedInstance {
  OraclePtr m1;
  OraclePtr m2;
  std::vector<Rational> weights;  // indexed by element id; meaningful on support
  ElementSet support;

  size_t ground_size() const { return m1->ground_size(); }

  Rational weight_of(const ElementSet& set) const {
    Rational total = 0;
    set.for_each([&](ElementId id) { total += weights[id]; });
    return total;
  }

  Rational min_weight() const;
  Rational max_weight() const;
  Rational aspect_ratio() const;

  void validate() const;

  bool is_common_independent(const ElementSet& set) const {
    return set.is_subset_of(support) && m1->is_independent(set) &&
           m2->is_independent(set);
  }

  // Same matroids, weights multiplied by a positive factor.
  WeightedInstance scaled(const Rational& factor) const;

  // Both oracles restricted (masked) to the given elements.
  WeightedInstance restricted(const ElementSet& allowed) const;
};

// Weights are integers in {1, ..., W} on the support.
struct IntegerWeightedInstance {
  OraclePtr m1;
  OraclePtr m2;
  std::vector<int64_t> weights;
  ElementSet support;
  int64_t max_weight = 1;  // W

  size_t ground_size() const { return m1->ground_size(); }

  int64_t weight_of(const ElementSet& set) const {
    int64_t total = 0;
    set.for_each([&](ElementId id) { total += weights[id]; });
    return total;
  }

  int64_t total_weight() const { return weight_of(support); }

  void validate() const;

  bool is_common_independent(const ElementSet& set) const {
    return set.is_subset_of(support) && m1->is_independent(set) &&
           m2->is_independent(set);
  }

  WeightedInstance as_weighted() const;
};

inline void WeightedInstance::validate() const {
  if (m1->ground_size() != m2->ground_size() ||
      weights.size() != m1->ground_size() ||
      support.capacity() != m1->ground_size()) {
    throw InputError("instance parts disagree on ground size");
  }
  if (!support.is_subset_of(m1->universe()) ||
      !support.is_subset_of(m2->universe())) {
    throw InputError("instance support leaves an oracle universe");
  }
  support.for_each([&](ElementId id) {
    if (weights[id] <= 0) {
      throw InputError("weight of element " + std::to_string(id) +
                       " is not positive");
    }
  });
}

inline void IntegerWeightedInstance::validate() const {
  if (m1->ground_size() != m2->ground_size() ||
      weights.size() != m1->ground_size() ||
      support.capacity() != m1->ground_size()) {
    throw InputError("instance parts disagree on ground size");
  }
  support.for_each([&](ElementId id) {
    if (weights[id] < 1 || weights[id] > max_weight) {
      throw InputError("integer weight of element " + std::to_string(id) +
                       " outside {1,...,W}");
    }
  });
}

inline WeightedInstance IntegerWeightedInstance::as_weighted() const {
  WeightedInstance w{m1, m2, {}, support};
  w.weights.reserve(weights.size());
  for (int64_t v : weights) w.weights.emplace_back(v);
  return w;
}

inline Rational WeightedInstance::min_weight() const {
  Rational best = 0;
  bool found = false;
  support.for_each([&](ElementId id) {
    if (!found || weights[id] < best) {
      best = weights[id];
      found = true;
    }
  });
  if (!found) throw InputError("min_weight of an empty instance");
  return best;
}

inline Rational WeightedInstance::max_weight() const {
  Rational best = 0;
  support.for_each([&](ElementId id) {
    if (weights[id] > best) best = weights[id];
  });
  return best;
}

inline Rational WeightedInstance::aspect_ratio() const {
  return max_weight() / min_weight();
}

inline WeightedInstance WeightedInstance::scaled(const Rational& factor) const {
  if (factor <= 0) throw InputError("scale factor must be positive");
  WeightedInstance out = *this;
  for (Rational& w : out.weights) w *= factor;
  return out;
}

inline WeightedInstance WeightedInstance::restricted(
    const ElementSet& allowed) const {
  WeightedInstance out;
  out.m1 = restrict_matroid(m1, allowed);
  out.m2 = restrict_matroid(m2, allowed);
  out.weights = weights;
  out.support = support.intersect(allowed);
  return out;
}

}  // namespace matroidx

#endif  // MATROIDX_INSTANCE_HPP
