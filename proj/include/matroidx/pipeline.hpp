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

#ifndef MATROIDX_PIPELINE_HPP
#define MATROIDX_PIPELINE_HPP

#include <optional>

#include "matroidx/auction.hpp"
#include "matroidx/rounding.hpp"
#include "matroidx/solvers.hpp"
#include "matroidx/spread.hpp"

namespace matroidx {

struct PipelineOptions {
  // Offline extraction after refolding: the additive auction with precision
  // eps / W^2 (default), or exhaustive search for differential testing.
  bool exact_extraction = false;
  int64_t exact_integerize_cap = 4096;
  std::optional<uint64_t> copy_budget;
};

// One solved weight class. Classes with identical member sets are solved
// once and shared across spread indices.
struct SolvedClass {
  ElementSet members;
  RoundingMode rounding = RoundingMode::kExact;
  Rational rounding_loss = 1;  // lower bound on w_int / (scale * w)
  int64_t w_int_max = 1;
  size_t copies = 0;
  ElementSet solver_set;    // over unfolded copies
  ElementSet refolded;      // support handed to the extraction
  ElementSet chosen;        // extracted common independent set (originals)
  Rational chosen_weight;   // in original units
  LedgerCounts solver_unfolded;  // unfolded-level queries by the solver
  LedgerCounts solver_original;  // original-oracle delta during the solve
  LedgerCounts extract_original;
};

struct PipelineClassRef {
  int spread_index = 0;
  int level = 0;
  Rational lower;
  Rational upper;
  size_t solved_index = 0;  // into PipelineReport::solved
};

struct PipelineReport {
  ElementSet output;
  Rational output_weight;
  int chosen_spread_index = 0;
  Rational epsilon;
  Rational alpha;
  // Valid multiplicative guarantee: output_weight >= bound_factor * OPT'.
  Rational bound_factor;
  std::vector<SolvedClass> solved;
  std::vector<PipelineClassRef> classes;
  std::vector<Rational> merged_weights;  // by spread index (1-based -> [i-1])
  LedgerCounts total_original;
};

// The full weighted-to-unweighted reduction: spread decomposition, per-class
// integerization and unfolding, the unweighted solver, refolding, additive
// auction extraction, greedy merging per spread index, best index wins.
// The printed bound_factor composes the chained guarantees
// alpha * (1-eps) * (1-4eps) * min over classes of
// (rounding_loss * (1 - 3eps/W_class)).
PipelineReport weighted_mi_reduce(const WeightedInstance& inst,
                                  const Rational& epsilon,
                                  const UnweightedSolver& solver,
                                  const PipelineOptions& options = {});

}  // namespace matroidx

#endif  // MATROIDX_PIPELINE_HPP
