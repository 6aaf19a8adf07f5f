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

#ifndef MATROIDX_TOOLS_GENERATOR_HPP
#define MATROIDX_TOOLS_GENERATOR_HPP

#include "instance_json.hpp"
#include "matroidx/rng.hpp"

namespace matroidx {

struct WeightDistribution {
  enum class Kind { kUniformInt, kLogUniform };
  Kind kind = Kind::kUniformInt;
  int64_t max_weight = 1;    // uniform-int [1, W]
  int64_t aspect_ratio = 1;  // log-uniform rational, ratio <= R
};

// "uniform:<W>" | "loguniform:<R>"
WeightDistribution parse_weight_distribution(const std::string& text);

struct GeneratorSpec {
  std::string family1 = "random";  // family name or "random"
  std::string family2 = "random";
  size_t n = 0;
  uint64_t seed = 0;
  WeightDistribution weights;
};

// Deterministic in (spec, seed).
InstanceSpec generate_instance(const GeneratorSpec& spec);

// Random structure for one family over n elements.
MatroidSpec random_matroid(Rng& rng, size_t n, const std::string& family);

// Integer weights in [1, W] drawn log-uniformly over octaves, with an
// optional small denominator; ratio stays <= R.
Rational random_log_uniform_weight(Rng& rng, int64_t aspect_ratio);

}  // namespace matroidx

#endif  // MATROIDX_TOOLS_GENERATOR_HPP
