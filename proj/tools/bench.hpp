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

#ifndef MATROIDX_TOOLS_BENCH_HPP
#define MATROIDX_TOOLS_BENCH_HPP

#include <string>
#include <vector>

#include "generator.hpp"

namespace matroidx {

struct BenchSpec {
  std::string family1 = "random";
  std::string family2 = "random";
  size_t n = 6;
  std::vector<int64_t> max_weights = {1, 2, 4, 8};
  std::vector<Rational> epsilons = {Rational(1, 10)};
  std::vector<std::string> solvers = {"exact"};
  uint64_t count = 3;  // instances per cell
  uint64_t seed = 1;
};

struct BenchOutput {
  std::string csv;      // fixed column order, one row per cell instance
  std::string summary;  // measured query-count growth versus W
};

BenchOutput run_bench(const BenchSpec& spec);

}  // namespace matroidx

#endif  // MATROIDX_TOOLS_BENCH_HPP
