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

#include "matroidx/rounding.hpp"

namespace matroidx {

namespace {

void check_epsilon(const Rational& epsilon) {
  if (epsilon <= 0 || epsilon > Rational(1, 2)) {
    throw InputError("epsilon must lie in (0, 1/2]");
  }
}

int64_t to_int64_weight(const BigInt& value) {
  if (value > BigInt(int64_t{1} << 62)) {
    throw BudgetError("rounded weight exceeds representable range");
  }
  return static_cast<int64_t>(value);
}

}  // namespace

int64_t bucket_floor(const Rational& w_s, const Rational& base) {
  int i = floor_log(w_s, base);
  return to_int64_weight(floor_rational(rational_pow(base, i)));
}

RoundedInstance rescale_round(const WeightedInstance& inst,
                              const Rational& epsilon) {
  check_epsilon(epsilon);
  inst.validate();
  RoundedInstance out;
  out.params.epsilon = epsilon;
  out.params.bucket_base = Rational(1) + epsilon;
  out.params.mode = RoundingMode::kBucketed;
  out.params.loss_factor =
      Rational(1) / (out.params.bucket_base * out.params.bucket_base);

  out.instance.m1 = inst.m1;
  out.instance.m2 = inst.m2;
  out.instance.support = inst.support;
  out.instance.weights.assign(inst.ground_size(), 0);
  out.instance.max_weight = 1;

  if (inst.support.empty()) {
    out.params.w_min = 1;
    out.params.scale = Rational(2) / epsilon;
    return out;
  }

  out.params.w_min = inst.min_weight();
  out.params.scale = Rational(2) / (epsilon * out.params.w_min);

  inst.support.for_each([&](ElementId id) {
    Rational w_s = out.params.scale * inst.weights[id];
    int64_t w_r = bucket_floor(w_s, out.params.bucket_base);
    out.instance.weights[id] = w_r;
    out.instance.max_weight = std::max(out.instance.max_weight, w_r);
  });
  out.instance.validate();
  return out;
}

std::optional<RoundedInstance> exact_integerize(const WeightedInstance& inst,
                                                int64_t cap) {
  inst.validate();
  std::vector<Rational> support_weights;
  inst.support.for_each(
      [&](ElementId id) { support_weights.push_back(inst.weights[id]); });

  BigInt denom = common_denominator(support_weights);
  BigInt g = 0;
  for (const Rational& w : support_weights) {
    BigInt scaled = numerator(w) * (denom / denominator(w));
    g = boost::multiprecision::gcd(g, scaled);
  }
  if (g == 0) g = 1;

  BigInt max_scaled = 0;
  for (const Rational& w : support_weights) {
    BigInt scaled = numerator(w) * (denom / denominator(w)) / g;
    max_scaled = std::max(max_scaled, scaled);
  }
  if (max_scaled > cap) return std::nullopt;

  RoundedInstance out;
  out.params.epsilon = 0;
  out.params.w_min = support_weights.empty() ? Rational(1) : inst.min_weight();
  out.params.scale = Rational(denom, g);
  out.params.bucket_base = 1;
  out.params.mode = RoundingMode::kExact;
  out.params.loss_factor = 1;

  out.instance.m1 = inst.m1;
  out.instance.m2 = inst.m2;
  out.instance.support = inst.support;
  out.instance.weights.assign(inst.ground_size(), 0);
  out.instance.max_weight = 1;
  inst.support.for_each([&](ElementId id) {
    BigInt scaled = numerator(inst.weights[id]) *
                    (denom / denominator(inst.weights[id])) / g;
    out.instance.weights[id] = to_int64_weight(scaled);
    out.instance.max_weight =
        std::max(out.instance.max_weight, out.instance.weights[id]);
  });
  out.instance.validate();
  return out;
}

RoundedInstance integerize_for_unfolding(const WeightedInstance& inst,
                                         const Rational& epsilon,
                                         int64_t exact_cap) {
  if (auto exact = exact_integerize(inst, exact_cap)) {
    return *std::move(exact);
  }
  return rescale_round(inst, epsilon);
}

}  // namespace matroidx
