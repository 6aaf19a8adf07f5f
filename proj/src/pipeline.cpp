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

#include "matroidx/pipeline.hpp"

#include <map>

#include "matroidx/brute_force.hpp"
#include "matroidx/merge.hpp"
#include "matroidx/unfold.hpp"

namespace matroidx {

namespace {

LedgerCounts original_calls(const WeightedInstance& inst) {
  LedgerCounts a = inst.m1->ledger()->snapshot();
  LedgerCounts b = inst.m2->ledger()->snapshot();
  LedgerCounts total;
  total.independence_calls = a.independence_calls + b.independence_calls;
  total.rank_calls = a.rank_calls + b.rank_calls;
  return total;
}

SolvedClass solve_class(const WeightedInstance& inst, const ElementSet& members,
                        const Rational& epsilon, const UnweightedSolver& solver,
                        const PipelineOptions& options) {
  SolvedClass out;
  out.members = members;
  WeightedInstance cls = inst.restricted(members);

  RoundedInstance rounded =
      integerize_for_unfolding(cls, epsilon, options.exact_integerize_cap);
  out.rounding = rounded.params.mode;
  out.rounding_loss = rounded.params.loss_factor;
  out.w_int_max = rounded.instance.max_weight;

  UnfoldedInstance unfolded =
      UnfoldedInstance::build(rounded.instance, options.copy_budget);
  out.copies = unfolded.copy_count();

  LedgerCounts before = original_calls(inst);
  out.solver_set = solver.solve(*unfolded.m1(), *unfolded.m2());
  out.solver_original = original_calls(inst) - before;
  out.solver_unfolded = unfolded.unfolded_ledger()->snapshot();

  if (!unfolded.m1()->is_independent(out.solver_set) ||
      !unfolded.m2()->is_independent(out.solver_set)) {
    throw ContractError("solver " + solver.name() +
                        " returned a dependent set");
  }
  // Each unfolded query touches at most min(W, |query|) original slices.
  uint64_t budget = static_cast<uint64_t>(out.w_int_max) *
                    (out.solver_unfolded.independence_calls +
                     out.solver_unfolded.rank_calls + 2);
  if (out.solver_original.independence_calls +
          out.solver_original.rank_calls >
      budget) {
    throw ContractError("unfolded query cost exceeded the W-per-query bound");
  }

  out.refolded = unfolded.refold(out.solver_set);

  before = original_calls(inst);
  if (out.refolded.empty()) {
    out.chosen = inst.m1->empty_set();
  } else {
    WeightedInstance refolded_int{rounded.instance.m1, rounded.instance.m2,
                                  {}, out.refolded};
    refolded_int.weights.reserve(rounded.instance.weights.size());
    for (int64_t w : rounded.instance.weights) {
      refolded_int.weights.emplace_back(w);
    }
    refolded_int = refolded_int.restricted(out.refolded);
    if (options.exact_extraction) {
      out.chosen = brute_force_opt(refolded_int).set;
    } else {
      Rational delta = epsilon / Rational(out.w_int_max * out.w_int_max);
      out.chosen = auction_additive(refolded_int, delta).set;
    }
  }
  out.extract_original = original_calls(inst) - before;

  Rational weight = 0;
  out.chosen.for_each([&](ElementId e) { weight += inst.weights[e]; });
  out.chosen_weight = weight;
  return out;
}

}  // namespace

PipelineReport weighted_mi_reduce(const WeightedInstance& inst,
                                  const Rational& epsilon,
                                  const UnweightedSolver& solver,
                                  const PipelineOptions& options) {
  if (epsilon <= 0 || epsilon > Rational(1, 2)) {
    throw InputError("epsilon must lie in (0, 1/2]");
  }
  inst.validate();

  PipelineReport report;
  report.epsilon = epsilon;
  report.alpha = solver.alpha();
  report.output = inst.m1->empty_set();
  report.output_weight = 0;

  LedgerCounts run_start = original_calls(inst);

  SpreadDecomposition spread = spread_decompose(inst, epsilon);

  // Classes with the same member set occur under several spread indices;
  // solve each distinct set once.
  std::map<std::vector<uint64_t>, size_t> solved_by_members;
  for (const SpreadIndex& si : spread.indices) {
    for (const WeightClass& wc : si.classes) {
      auto key = wc.members.words();
      auto it = solved_by_members.find(key);
      size_t index;
      if (it == solved_by_members.end()) {
        report.solved.push_back(
            solve_class(inst, wc.members, epsilon, solver, options));
        index = report.solved.size() - 1;
        solved_by_members.emplace(std::move(key), index);
      } else {
        index = it->second;
      }
      report.classes.push_back(
          PipelineClassRef{si.index, wc.level, wc.lower, wc.upper, index});
    }
  }

  report.merged_weights.assign(spread.indices.size(), Rational(0));
  bool have_best = false;
  for (const SpreadIndex& si : spread.indices) {
    std::vector<MergeClass> descending;
    for (auto it = si.classes.rbegin(); it != si.classes.rend(); ++it) {
      for (const PipelineClassRef& ref : report.classes) {
        if (ref.spread_index == si.index && ref.level == it->level) {
          descending.push_back(
              MergeClass{it->lower, it->upper,
                         report.solved[ref.solved_index].chosen});
          break;
        }
      }
    }
    ElementSet merged =
        greedy_merge(descending, *inst.m1, *inst.m2, inst.weights);
    Rational weight = inst.weight_of(merged);
    report.merged_weights[si.index - 1] = weight;
    if (!have_best || weight > report.output_weight) {
      report.output = merged;
      report.output_weight = weight;
      report.chosen_spread_index = si.index;
      have_best = true;
    }
  }

  if (!inst.is_common_independent(report.output)) {
    throw ContractError("pipeline output is not a common independent set");
  }

  // Composed multiplicative guarantee from the chained bounds: best spread
  // index (1-eps), greedy merge (1-4eps), and per class the integerization
  // sandwich times the auction's relative loss 3*eps/W.
  Rational worst_class = 1;
  bool saw_class = false;
  for (const SolvedClass& sc : report.solved) {
    Rational auction_loss =
        options.exact_extraction
            ? Rational(1)
            : Rational(1) - Rational(3) * epsilon / Rational(sc.w_int_max);
    Rational factor = sc.rounding_loss * auction_loss;
    if (!saw_class || factor < worst_class) worst_class = factor;
    saw_class = true;
  }
  Rational one(1);
  report.bound_factor = report.alpha * (one - epsilon) *
                        (one - Rational(4) * epsilon) * worst_class;
  if (report.bound_factor < 0) report.bound_factor = 0;

  report.total_original = original_calls(inst) - run_start;
  return report;
}

}  // namespace matroidx
