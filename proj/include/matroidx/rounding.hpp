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

#ifndef MATROIDX_ROUNDING_HPP
#define MATROIDX_ROUNDING_HPP

#include "matroidx/instance.hpp"

namespace matroidx {

enum class RoundingMode {
  kBucketed,  // rescale by 2/(eps * w_min), floor to geometric bucket bases
  kExact,     // weights share a small common denominator; lossless
};

struct RoundingParams {
  Rational epsilon;
  Rational w_min;
  Rational scale;        // integer weight ~= scale * original weight
  Rational bucket_base;  // 1 + eps (bucketed mode)
  RoundingMode mode = RoundingMode::kBucketed;

  // Guaranteed w_int >= loss_factor * scale * w; equals 1 in exact mode and
  // (1+eps)^-2 in bucketed mode.
  Rational loss_factor;
};

struct RoundedInstance {
  IntegerWeightedInstance instance;
  RoundingParams params;
};

// w_r for a single already-rescaled weight w_s: the floor of the geometric
// bucket base below w_s. Requires w_s >= 1.
int64_t bucket_floor(const Rational& w_s, const Rational& base);

// The two-step rescale-and-round transform: w_s = 2 w / (eps * w_min), then
// w_r = floor(base^i) for the bucket [base^i, base^{i+1}) containing w_s.
// Guarantees w_s / (1+eps)^2 <= w_r <= w_s per element.
RoundedInstance rescale_round(const WeightedInstance& inst,
                              const Rational& epsilon);

// Lossless integerization: multiply by the common denominator, divide by the
// gcd. Returns nothing when the resulting max weight would exceed `cap`.
std::optional<RoundedInstance> exact_integerize(const WeightedInstance& inst,
                                                int64_t cap);

// Integerization policy used by the reduction pipeline: exact when the
// weights are commensurable and small, bucketed otherwise.
RoundedInstance integerize_for_unfolding(const WeightedInstance& inst,
                                         const Rational& epsilon,
                                         int64_t exact_cap = 4096);

}  // namespace matroidx

#endif  // MATROIDX_ROUNDING_HPP
