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

#include "suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "matroidx/auction.hpp"
#include "matroidx/brute_force.hpp"
#include "matroidx/circuits.hpp"
#include "matroidx/comm.hpp"
#include "matroidx/duals.hpp"
#include "matroidx/merge.hpp"
#include "matroidx/pipeline.hpp"
#include "matroidx/rounding.hpp"
#include "matroidx/solvers.hpp"
#include "matroidx/spread.hpp"
#include "matroidx/streaming.hpp"
#include "matroidx/unfold.hpp"

namespace matroidx {

std::string SuiteResult::to_string() const {
  std::ostringstream os;
  os << suite << ": " << (passed ? "pass" : "FAIL") << " (" << cases
     << " cases)";
  for (const std::string& note : notes) os << "\n  " << note;
  if (!failure.empty()) os << "\n  violation: " << failure;
  if (!counterexample.empty()) os << "\n  witness: " << counterexample;
  return os.str();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "axioms",   "unfold-equivalence", "duals",    "charging", "merge",
      "auction",  "pipeline",           "models",   "rounding"};
  return names;
}

namespace {

class CorruptOracle : public MatroidOracle {
 public:
  explicit CorruptOracle(size_t n) : n_(n), universe_(n), ledger_(make_ledger()) {
    for (size_t i = 0; i < n; ++i) universe_.add(static_cast<ElementId>(i));
  }
  MatroidKind kind() const override { return MatroidKind::kCustom; }
  size_t ground_size() const override { return n_; }
  const ElementSet& universe() const override { return universe_; }
  LedgerPtr ledger() const override { return ledger_; }
  bool is_independent(const ElementSet& set) const override {
    ledger_->count_independence();
    return set.size() != 2;
  }
  size_t rank(const ElementSet& set) const override {
    ledger_->count_rank();
    return set.size();
  }

 private:
  size_t n_;
  ElementSet universe_;
  LedgerPtr ledger_;
};

const char* kFamilyTable[] = {"uniform", "partition", "graphic", "linear_gf2"};

// Asserts the per-query cost claims: every unfolded query may spend at most
// W underlying calls.
class CheckedOracle : public MatroidOracle {
 public:
  CheckedOracle(OraclePtr inner, std::vector<LedgerPtr> base_ledgers,
                uint64_t max_calls, std::string* violation)
      : inner_(std::move(inner)),
        base_ledgers_(std::move(base_ledgers)),
        max_calls_(max_calls),
        violation_(violation) {}

  MatroidKind kind() const override { return inner_->kind(); }
  size_t ground_size() const override { return inner_->ground_size(); }
  const ElementSet& universe() const override { return inner_->universe(); }
  LedgerPtr ledger() const override { return inner_->ledger(); }

  bool is_independent(const ElementSet& set) const override {
    uint64_t before = underlying_independence();
    bool result = inner_->is_independent(set);
    uint64_t spent = underlying_independence() - before;
    if (spent > max_calls_ && violation_->empty()) {
      *violation_ = "independence query spent " + std::to_string(spent) +
                    " underlying calls, bound " + std::to_string(max_calls_);
    }
    return result;
  }

  size_t rank(const ElementSet& set) const override {
    uint64_t before = underlying_rank();
    size_t result = inner_->rank(set);
    uint64_t spent = underlying_rank() - before;
    if (spent > max_calls_ && violation_->empty()) {
      *violation_ = "rank query spent " + std::to_string(spent) +
                    " underlying calls, bound " + std::to_string(max_calls_);
    }
    return result;
  }

 private:
  uint64_t underlying_independence() const {
    uint64_t total = 0;
    for (const LedgerPtr& l : base_ledgers_) {
      total += l->snapshot().independence_calls;
    }
    return total;
  }
  uint64_t underlying_rank() const {
    uint64_t total = 0;
    for (const LedgerPtr& l : base_ledgers_) total += l->snapshot().rank_calls;
    return total;
  }

  OraclePtr inner_;
  std::vector<LedgerPtr> base_ledgers_;
  uint64_t max_calls_;
  std::string* violation_;
};

int64_t int_value(const Rational& r) { return static_cast<int64_t>(numerator(r)); }

IntegerWeightedInstance to_integer(const WeightedInstance& inst) {
  IntegerWeightedInstance out;
  out.m1 = inst.m1;
  out.m2 = inst.m2;
  out.support = inst.support;
  out.weights.assign(inst.ground_size(), 0);
  out.max_weight = 1;
  inst.support.for_each([&](ElementId e) {
    out.weights[e] = int_value(inst.weights[e]);
    out.max_weight = std::max(out.max_weight, out.weights[e]);
  });
  return out;
}

}  // namespace

// Greedy element-removal minimization preserving failure.
ElementSet minimize_support(
    const WeightedInstance& inst,
    const std::function<bool(const WeightedInstance&)>& fails) {
  ElementSet support = inst.support;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (ElementId id : support.to_vector()) {
      ElementSet candidate = support;
      candidate.remove(id);
      WeightedInstance sub = inst.restricted(candidate);
      bool still_fails = false;
      try {
        still_fails = fails(sub);
      } catch (const std::exception&) {
        still_fails = true;
      }
      if (still_fails) {
        support = candidate;
        shrunk = true;
      }
    }
  }
  return support;
}

namespace {

std::string witness_string(const InstanceSpec& spec, const ElementSet& support) {
  return "support " + support.to_string() + " of instance " +
         serialize_instance(spec);
}

struct Failure {
  std::string what;
  std::string witness;
};

}  // namespace

OraclePtr make_corrupt_oracle(size_t n) {
  return std::make_shared<CorruptOracle>(n);
}

RandomInstance random_small_instance(Rng& rng, uint64_t pairing, size_t n_min,
                                     size_t n_max, int64_t max_weight,
                                     int64_t total_weight_cap) {
  RandomInstance out;
  size_t n = static_cast<size_t>(
      rng.range(static_cast<int64_t>(n_min), static_cast<int64_t>(n_max)));
  out.spec.n = n;
  out.spec.matroid1 = random_matroid(rng, n, kFamilyTable[pairing % 4]);
  out.spec.matroid2 = random_matroid(rng, n, kFamilyTable[(pairing / 4) % 4]);
  out.spec.weights.assign(n, Rational(1));
  for (int attempt = 0; attempt < 32; ++attempt) {
    int64_t total = 0;
    for (size_t i = 0; i < n; ++i) {
      int64_t w = rng.range(1, max_weight);
      out.spec.weights[i] = w;
      total += w;
    }
    if (total_weight_cap == 0 || total <= total_weight_cap) break;
    if (attempt == 31) {
      for (size_t i = 0; i < n; ++i) out.spec.weights[i] = 1;
    }
  }
  out.instance = out.spec.build();
  return out;
}

namespace {

SuiteResult suite_axioms(uint64_t count, uint64_t seed, bool corrupt) {
  SuiteResult result;
  result.suite = "axioms";
  if (corrupt) {
    AxiomReport report = verify_matroid_axioms(*make_corrupt_oracle(4));
    result.cases = 1;
    result.passed = false;
    result.failure = report.passed ? "corrupt oracle slipped through"
                                   : report.to_string();
    return result;
  }
  Rng rng(seed);
  for (uint64_t c = 0; c < count; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 2, 6, 4, 12);
    UnfoldedInstance unfolded = UnfoldedInstance::build(to_integer(ri.instance));
    for (const OraclePtr& m :
         {ri.instance.m1, ri.instance.m2, unfolded.m1(), unfolded.m2()}) {
      AxiomReport report = verify_matroid_axioms(*m);
      if (!report.passed) {
        result.passed = false;
        result.failure = kind_name(m->kind()) + " " + report.to_string();
        result.counterexample = serialize_instance(ri.spec);
        return result;
      }
    }
    ++result.cases;
  }
  return result;
}

SuiteResult suite_unfold_equivalence(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "unfold-equivalence";
  Rng rng(seed);
  std::string query_violation;
  for (uint64_t c = 0; c < count; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 2, 6, 4, 12);

    auto mismatch = [&query_violation](const WeightedInstance& inst) {
      IntegerWeightedInstance integer = to_integer(inst);
      int64_t weighted = int_value(brute_force_opt(inst).weight);
      UnfoldedInstance unfolded = UnfoldedInstance::build(integer);
      std::vector<LedgerPtr> bases = {inst.m1->ledger(), inst.m2->ledger()};
      uint64_t w_bound = static_cast<uint64_t>(integer.max_weight);
      CheckedOracle c1(unfolded.m1(), bases, w_bound, &query_violation);
      CheckedOracle c2(unfolded.m2(), bases, w_bound, &query_violation);
      int64_t unweighted = int_value(brute_force_max_cardinality(c1, c2).weight);
      return weighted != unweighted;
    };

    if (mismatch(ri.instance)) {
      result.passed = false;
      result.failure = "opt != opt' after unfolding";
      ElementSet minimized = minimize_support(ri.instance, mismatch);
      result.counterexample = witness_string(ri.spec, minimized);
      return result;
    }
    if (!query_violation.empty()) {
      result.passed = false;
      result.failure = query_violation;
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    ++result.cases;
  }
  return result;
}

SuiteResult suite_duals(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "duals";
  Rng rng(seed);
  for (uint64_t c = 0; c < count; ++c) {
    RandomInstance ri = random_small_instance(rng, c, c % 10 == 9 ? 0 : 1, 4,
                                              4, 0);
    IntegerWeightedInstance integer = to_integer(ri.instance);
    ChainDualPair duals = brute_force_chain_duals(integer);
    int64_t opt = int_value(brute_force_opt(ri.instance).weight);
    if (duals.objective != opt) {
      result.passed = false;
      result.failure = "chain dual objective " +
                       std::to_string(duals.objective) + " != opt " +
                       std::to_string(opt);
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    UnfoldedInstance unfolded = UnfoldedInstance::build(integer);
    DualPair lifted = unweighted_dual(duals.y, duals.z, unfolded);
    if (!unfolded_dual_feasible(lifted, unfolded)) {
      result.passed = false;
      result.failure = "lifted dual infeasible for the unfolded pair";
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    int64_t f = unfolded_dual_value(lifted, unfolded);
    if (f != duals.objective) {
      result.passed = false;
      result.failure = "f(y,z) = " + std::to_string(f) + " != g(y',z') = " +
                       std::to_string(duals.objective);
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    ++result.cases;
  }
  return result;
}

SuiteResult suite_charging(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "charging";
  Rng rng(seed);
  uint64_t attempts = 0;
  while (result.cases < count && attempts < count * 200) {
    ++attempts;
    size_t n = static_cast<size_t>(rng.range(3, 8));
    MatroidSpec mspec = random_matroid(rng, n, "random");
    OraclePtr m = mspec.build(n);

    // Random class partition (1..3 classes, ascending weight order) and an
    // independent set per class.
    size_t class_count = static_cast<size_t>(rng.range(1, 3));
    std::vector<ElementSet> classes(class_count, ElementSet(n));
    for (size_t e = 0; e < n; ++e) {
      classes[rng.below(class_count)].add(static_cast<ElementId>(e));
    }
    std::vector<ElementSet> independents;
    for (const ElementSet& cls : classes) {
      std::vector<ElementId> order = cls.to_vector();
      rng.shuffle(order);
      ElementSet ind(n);
      for (ElementId e : order) {
        ind.add(e);
        if (!m->is_independent(ind)) ind.remove(e);
      }
      independents.push_back(ind);
    }
    size_t j = rng.below(class_count);
    if (independents[j].empty()) continue;

    ElementSet pool(n);
    for (size_t t = j; t < class_count; ++t) {
      pool = pool.unite(independents[t]);
    }
    std::vector<ElementId> order = pool.to_vector();
    rng.shuffle(order);
    ElementSet chosen(n);
    for (ElementId e : order) {
      chosen.add(e);
      if (!m->is_independent(chosen)) chosen.remove(e);
    }

    ElementSet spanned(n);
    independents[j].minus(chosen).for_each([&](ElementId e) {
      ElementSet probe = chosen;
      probe.add(e);
      if (!m->is_independent(probe)) spanned.add(e);
    });
    if (spanned.empty()) continue;

    ElementSet circuit_union(n);
    spanned.for_each([&](ElementId e) {
      circuit_union = circuit_union.unite(fundamental_circuit(*m, chosen, e));
    });
    size_t charged = circuit_union.intersect(chosen.minus(independents[j])).size();
    if (charged < spanned.size()) {
      result.passed = false;
      result.failure = "circuit union charged " + std::to_string(charged) +
                       " elements for " + std::to_string(spanned.size()) +
                       " spanned ones";
      result.counterexample =
          "I'=" + chosen.to_string() + " S'_j=" + independents[j].to_string();
      return result;
    }
    ++result.cases;
  }
  if (result.cases < count) {
    result.notes.push_back("only " + std::to_string(result.cases) +
                           " non-vacuous configurations found");
  }
  return result;
}

SuiteResult suite_merge(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "merge";
  Rng rng(seed);
  const Rational epsilons[] = {Rational(1, 20), Rational(1, 10), Rational(1, 5)};
  for (const Rational& eps : epsilons) {
    Rational inv = Rational(1) / eps;
    for (uint64_t c = 0; c < count; ++c) {
      size_t n = static_cast<size_t>(rng.range(2, 8));
      InstanceSpec spec;
      spec.n = n;
      spec.matroid1 = random_matroid(rng, n, kFamilyTable[c % 4]);
      spec.matroid2 = random_matroid(rng, n, kFamilyTable[(c / 4) % 4]);

      size_t class_count = static_cast<size_t>(rng.range(1, 4));
      std::vector<Rational> lowers(class_count), uppers(class_count);
      Rational lo = 1;
      for (size_t t = 0; t < class_count; ++t) {
        lowers[t] = lo;
        uppers[t] = lo * 2;
        lo = uppers[t] * inv;  // boundary gap of exactly 1/eps
      }
      std::vector<size_t> assigned(n);
      spec.weights.assign(n, Rational(1));
      for (size_t e = 0; e < n; ++e) {
        size_t t = rng.below(class_count);
        assigned[e] = t;
        BigInt lo2 = numerator(lowers[t] * 2);
        BigInt hi2 = numerator(uppers[t] * 2) - 1;
        int64_t num = rng.range(static_cast<int64_t>(lo2),
                                static_cast<int64_t>(hi2));
        spec.weights[e] = Rational(num, 2);
      }
      WeightedInstance inst = spec.build();

      std::vector<MergeClass> descending;
      Rational sum = 0;
      for (size_t t = class_count; t-- > 0;) {
        ElementSet members(n);
        for (size_t e = 0; e < n; ++e) {
          if (assigned[e] == t) members.add(static_cast<ElementId>(e));
        }
        std::vector<ElementId> order = members.to_vector();
        rng.shuffle(order);
        ElementSet ind(n);
        for (ElementId e : order) {
          ind.add(e);
          if (!inst.m1->is_independent(ind) || !inst.m2->is_independent(ind)) {
            ind.remove(e);
          }
        }
        sum += inst.weight_of(ind);
        descending.push_back(MergeClass{lowers[t], uppers[t], ind});
      }
      ElementSet merged =
          greedy_merge(descending, *inst.m1, *inst.m2, inst.weights);
      Rational bound = (Rational(1) - Rational(4) * eps) * sum;
      if (inst.weight_of(merged) < bound) {
        result.passed = false;
        result.failure = "merged weight " +
                         to_fraction_string(inst.weight_of(merged)) +
                         " below (1-4eps) * " + to_fraction_string(sum);
        result.counterexample = serialize_instance(spec);
        return result;
      }
      ++result.cases;
    }
  }
  return result;
}

SuiteResult suite_auction(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "auction";
  Rng rng(seed);
  const Rational epsilons[] = {Rational(1, 20), Rational(1, 10)};
  Rational worst_c = 0;
  for (const Rational& eps : epsilons) {
    for (uint64_t c = 0; c < count; ++c) {
      RandomInstance ri = random_small_instance(rng, c, 1, 8, 5, 0);
      const WeightedInstance& inst = ri.instance;
      Rational opt = brute_force_opt(inst).weight;

      LedgerCounts before1 = inst.m1->ledger()->snapshot();
      LedgerCounts before2 = inst.m2->ledger()->snapshot();
      AuctionOptions options;
      options.check_invariants = true;
      AuctionResult res = auction_additive(inst, eps, options);
      uint64_t calls =
          (inst.m1->ledger()->snapshot().independence_calls -
           before1.independence_calls) +
          (inst.m2->ledger()->snapshot().independence_calls -
           before2.independence_calls);

      if (!inst.is_common_independent(res.set)) {
        result.passed = false;
        result.failure = "auction output not commonly independent";
        result.counterexample = serialize_instance(ri.spec);
        return result;
      }
      Rational n_count(inst.support.size());
      Rational slack = Rational(3) * inst.max_weight() * eps * n_count;
      if (inst.weight_of(res.set) < opt - slack) {
        result.passed = false;
        result.failure = "additive bound violated: weight " +
                         to_fraction_string(inst.weight_of(res.set)) +
                         " vs opt " + to_fraction_string(opt) + " - " +
                         to_fraction_string(slack);
        auto bound_fails = [&eps](const WeightedInstance& sub) {
          if (sub.support.empty()) return false;
          AuctionResult r = auction_additive(sub, eps);
          Rational s =
              Rational(3) * sub.max_weight() * eps * Rational(sub.support.size());
          return sub.weight_of(r.set) < brute_force_opt(sub).weight - s;
        };
        result.counterexample =
            witness_string(ri.spec, minimize_support(inst, bound_fails));
        return result;
      }
      if (auction_splitting_bound(inst, eps, res) < opt) {
        result.passed = false;
        result.failure = "weight-splitting certificate below the optimum";
        result.counterexample = serialize_instance(ri.spec);
        return result;
      }
      if (!inst.support.empty()) {
        Rational measured =
            Rational(calls) * eps * eps / Rational(inst.support.size());
        worst_c = std::max(worst_c, measured);
        if (measured > 8) {
          result.passed = false;
          result.failure = "query budget exceeded: C = " +
                           to_fraction_string(measured);
          result.counterexample = serialize_instance(ri.spec);
          return result;
        }
      }
      if (c % 5 == 0) {
        AuctionOptions slow;
        slow.force_single_step = true;
        AuctionResult res2 = auction_additive(inst, eps, slow);
        if (res2.set != res.set || res2.prices != res.prices) {
          result.passed = false;
          result.failure = "event jump diverged from single-step execution";
          result.counterexample = serialize_instance(ri.spec);
          return result;
        }
      }
      ++result.cases;
    }
  }
  result.notes.push_back("max measured C in calls <= C*n/eps^2: " +
                         to_fraction_string(worst_c));
  return result;
}

SuiteResult suite_pipeline(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "pipeline";
  Rng rng(seed);
  const Rational eps(1, 10);
  ExactSolver exact;
  GreedySolver greedy;
  for (uint64_t c = 0; c < count; ++c) {
    size_t n = static_cast<size_t>(rng.range(2, 8));
    InstanceSpec spec;
    spec.n = n;
    spec.matroid1 = random_matroid(rng, n, kFamilyTable[c % 4]);
    spec.matroid2 = random_matroid(rng, n, kFamilyTable[(c / 4) % 4]);
    spec.weights.assign(n, Rational(1));
    int kind = static_cast<int>(c % 3);
    const int64_t ratios[] = {2, 5, 10, 25, 50};
    int64_t ratio = ratios[rng.below(5)];
    for (size_t e = 0; e < n; ++e) {
      if (kind == 0) {
        spec.weights[e] = rng.range(1, ratio);
      } else if (kind == 1) {
        int64_t den = rng.chance(1, 2) ? 2 : 4;
        spec.weights[e] = Rational(rng.range(den, ratio * den), den);
      } else {
        spec.weights[e] = random_log_uniform_weight(rng, ratio);
      }
    }
    WeightedInstance inst = spec.build();
    Rational opt = brute_force_opt(inst).weight;

    for (const UnweightedSolver* solver :
         std::initializer_list<const UnweightedSolver*>{&exact, &greedy}) {
      PipelineReport report = weighted_mi_reduce(inst, eps, *solver);
      if (!inst.is_common_independent(report.output)) {
        result.passed = false;
        result.failure = "pipeline output not commonly independent";
        result.counterexample = serialize_instance(spec);
        return result;
      }
      if (report.output_weight > opt) {
        result.passed = false;
        result.failure = "pipeline output beats the brute-force optimum";
        result.counterexample = serialize_instance(spec);
        return result;
      }
      if (report.output_weight < report.bound_factor * opt) {
        result.passed = false;
        result.failure =
            "output " + to_fraction_string(report.output_weight) +
            " below composed bound " +
            to_fraction_string(report.bound_factor) + " * " +
            to_fraction_string(opt) + " with " + solver->name();
        auto bound_fails = [&eps, solver](const WeightedInstance& sub) {
          if (sub.support.empty()) return false;
          PipelineReport r = weighted_mi_reduce(sub, eps, *solver);
          return r.output_weight < r.bound_factor * brute_force_opt(sub).weight;
        };
        result.counterexample =
            witness_string(spec, minimize_support(inst, bound_fails));
        return result;
      }
    }
    ++result.cases;
  }
  return result;
}

SuiteResult suite_models(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "models";
  Rng rng(seed);
  const Rational eps(1, 10);
  GreedyBaselineProtocol baseline;
  for (uint64_t c = 0; c < count; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 2, 6, 4, 12);
    const WeightedInstance& inst = ri.instance;
    Rational opt = brute_force_opt(inst).weight;

    StreamOrder order;
    if (c % 3 == 1) {
      order.kind = StreamOrder::Kind::kRandom;
      order.seed = rng.next();
    } else if (c % 3 == 2) {
      order.kind = StreamOrder::Kind::kReverse;
    }

    OnePassGreedyWeighted one_pass(inst, eps);
    RunReport stream_report = run_stream(one_pass, inst, order, 1);
    if (!stream_report.common_independent || stream_report.passes != 1) {
      result.passed = false;
      result.failure = "one-pass run malformed";
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    Rational streaming_bound = (Rational(1, 2) - eps) * opt;
    if (stream_report.output_weight < streaming_bound) {
      result.passed = false;
      result.failure = "one-pass weight " +
                       to_fraction_string(stream_report.output_weight) +
                       " below (0.5-eps) * " + to_fraction_string(opt);
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }

    // The generic wrapper around streaming greedy must reproduce the direct
    // implementation exactly (same internal epsilon, same tie rules).
    StreamingWeightedWrapper wrapped(inst, one_pass.internal_epsilon(),
                                     greedy_streamer_factory());
    RunReport wrapped_report = run_stream(wrapped, inst, order, 1);
    if (wrapped_report.output != stream_report.output) {
      result.passed = false;
      result.failure = "wrapper(greedy) diverged from the one-pass algorithm";
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    if (wrapped.passes_needed() != 1 || wrapped_report.passes != 1) {
      result.passed = false;
      result.failure = "wrapper did not preserve the pass count";
      return result;
    }
    uint64_t space_bound = static_cast<uint64_t>(wrapped.class_count()) *
                           std::max<uint64_t>(wrapped.per_class_peak(), 1);
    if (wrapped_report.stored_peak > space_bound) {
      result.passed = false;
      result.failure = "wrapper peak " +
                       std::to_string(wrapped_report.stored_peak) +
                       " above classes*per-class bound " +
                       std::to_string(space_bound);
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }

    if (c % 4 == 0) {
      StreamingWeightedWrapper exact_wrap(inst, eps, store_all_exact_factory());
      RunReport exact_report = run_stream(exact_wrap, inst, order, 1);
      if (exact_report.output_weight < exact_wrap.bound_factor(1) * opt) {
        result.passed = false;
        result.failure = "exact-stub wrapper missed its printed bound";
        result.counterexample = serialize_instance(ri.spec);
        return result;
      }
    }

    // One-way communication wrapper over a random partition.
    PartitionSpec pspec;
    pspec.kind = PartitionSpec::Kind::kRandom;
    pspec.seed = rng.next();
    pspec.fraction = Rational(1, 2);
    ElementSet alice = resolve_partition(pspec, inst);
    CommWeightedWrapper comm(baseline, eps);
    RunReport comm_report = run_protocol(comm, inst, alice);
    if (!comm_report.common_independent) {
      result.passed = false;
      result.failure = "protocol output not commonly independent";
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    if (comm_report.output_weight < comm.bound_factor(inst) * opt) {
      result.passed = false;
      result.failure = "protocol weight " +
                       to_fraction_string(comm_report.output_weight) +
                       " below wrapped bound " +
                       to_fraction_string(comm.bound_factor(inst)) + " * opt";
      result.counterexample = serialize_instance(ri.spec);
      return result;
    }
    ++result.cases;
  }
  return result;
}

SuiteResult suite_rounding(uint64_t count, uint64_t seed) {
  SuiteResult result;
  result.suite = "rounding";
  Rng rng(seed);
  const Rational epsilons[] = {Rational(1, 10), Rational(1, 4), Rational(1, 2)};
  uint64_t weights_checked = 0;
  for (uint64_t c = 0; c < count; ++c) {
    size_t n = static_cast<size_t>(rng.range(4, 10));
    WeightedInstance inst;
    inst.m1 = make_uniform_matroid(n, n);
    inst.m2 = make_uniform_matroid(n, n);
    inst.support = ElementSet(n);
    inst.weights.assign(n, Rational(1));
    for (size_t e = 0; e < n; ++e) {
      inst.support.add(static_cast<ElementId>(e));
      inst.weights[e] =
          Rational(rng.range(1, 1000), rng.range(1, 16));
    }
    for (const Rational& eps : epsilons) {
      RoundedInstance rounded = rescale_round(inst, eps);
      Rational base = Rational(1) + eps;
      bool ok = true;
      inst.support.for_each([&](ElementId e) {
        Rational w_s = rounded.params.scale * inst.weights[e];
        Rational w_r(rounded.instance.weights[e]);
        if (w_r > w_s || w_r * base * base < w_s) ok = false;
        ++weights_checked;
      });
      if (!ok) {
        result.passed = false;
        result.failure = "sandwich w_s/(1+eps)^2 <= w_r <= w_s violated at eps " +
                         to_fraction_string(eps);
        return result;
      }
    }
    ++result.cases;
  }
  result.notes.push_back(std::to_string(weights_checked) + " weights checked");
  return result;
}

}  // namespace

SuiteResult run_suite(const std::string& name, uint64_t count, uint64_t seed,
                      bool corrupt_fixture) {
  if (name == "axioms") return suite_axioms(count, seed, corrupt_fixture);
  if (name == "unfold-equivalence") return suite_unfold_equivalence(count, seed);
  if (name == "duals") return suite_duals(count, seed);
  if (name == "charging") return suite_charging(count, seed);
  if (name == "merge") return suite_merge(count, seed);
  if (name == "auction") return suite_auction(count, seed);
  if (name == "pipeline") return suite_pipeline(count, seed);
  if (name == "models") return suite_models(count, seed);
  if (name == "rounding") return suite_rounding(count, seed);
  throw InputError("unknown suite: " + name);
}

}  // namespace matroidx
