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

#include "bench.hpp"

#include <chrono>
#include <map>
#include <sstream>

#include "matroidx/brute_force.hpp"
#include "matroidx/pipeline.hpp"

namespace matroidx {

BenchOutput run_bench(const BenchSpec& spec) {
  std::ostringstream csv;
  csv << "instance_id,n,W,epsilon,solver,output_weight,reference_weight,"
         "ratio,independence_calls,rank_calls,stored_peak,passes,"
         "message_elements,wall_ms\n";

  ExactSolver exact;
  GreedySolver greedy;
  // mean independence calls keyed by (epsilon, solver) -> W
  std::map<std::pair<std::string, std::string>, std::map<int64_t, double>>
      growth;

  uint64_t instance_id = 0;
  for (int64_t w : spec.max_weights) {
    for (const Rational& eps : spec.epsilons) {
      for (const std::string& solver_name : spec.solvers) {
        const UnweightedSolver& solver =
            solver_name == "exact"
                ? static_cast<const UnweightedSolver&>(exact)
                : static_cast<const UnweightedSolver&>(greedy);
        double total_calls = 0;
        for (uint64_t k = 0; k < spec.count; ++k) {
          GeneratorSpec gen;
          gen.family1 = spec.family1;
          gen.family2 = spec.family2;
          gen.n = spec.n;
          gen.seed = spec.seed + k;
          gen.weights.kind = WeightDistribution::Kind::kUniformInt;
          gen.weights.max_weight = w;
          WeightedInstance inst = generate_instance(gen).build();

          auto started = std::chrono::steady_clock::now();
          PipelineReport report = weighted_mi_reduce(inst, eps, solver);
          auto elapsed = std::chrono::duration_cast<std::chrono::microseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();

          std::string reference = "";
          std::string ratio = "";
          if (spec.n <= 16) {
            Rational opt = brute_force_opt(inst).weight;
            reference = to_fraction_string(opt);
            if (opt > 0) {
              Rational r = report.output_weight / opt;
              if (r > 1) {
                throw ContractError(
                    "bench ratio above 1 against a brute-force reference");
              }
              ratio = to_fraction_string(r);
            }
          }
          csv << instance_id++ << "," << spec.n << "," << w << ","
              << to_fraction_string(eps) << "," << solver_name << ","
              << to_fraction_string(report.output_weight) << "," << reference
              << "," << ratio << ","
              << report.total_original.independence_calls << ","
              << report.total_original.rank_calls << ",0,0,0,"
              << (elapsed / 1000.0) << "\n";
          total_calls +=
              static_cast<double>(report.total_original.independence_calls);
        }
        growth[{to_fraction_string(eps), solver_name}][w] =
            total_calls / static_cast<double>(spec.count);
      }
    }
  }

  std::ostringstream summary;
  summary << "query-count growth versus W (mean independence calls):\n";
  for (const auto& [key, by_w] : growth) {
    summary << "  eps=" << key.first << " solver=" << key.second << ":";
    bool monotone = true;
    double prev = -1;
    for (const auto& [w, calls] : by_w) {
      summary << " W=" << w << ":" << calls;
      if (calls + 1e-9 < prev) monotone = false;
      prev = calls;
    }
    summary << (monotone ? "  (non-decreasing)" : "  (NOT monotone)") << "\n";
  }
  return BenchOutput{csv.str(), summary.str()};
}

}  // namespace matroidx
