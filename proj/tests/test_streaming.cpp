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

#include <doctest.h>

#include "fixtures.hpp"
#include "matroidx/brute_force.hpp"
#include "matroidx/streaming.hpp"
#include "suites.hpp"

using namespace matroidx;
using matroidx::testing::e1_instance;

namespace {

// Retains nothing; counts passes.
class PassCountingStub : public StreamingAlgorithm {
 public:
  explicit PassCountingStub(size_t n) : n_(n) {}
  void on_element(ElementId, const Rational&) override {}
  void on_pass_end() override { ++passes_seen_; }
  ElementSet finalize() override { return ElementSet(n_); }
  uint64_t passes_needed() const override { return 2; }
  uint64_t retained_count() const override { return 0; }
  uint64_t passes_seen() const { return passes_seen_; }

 private:
  size_t n_;
  uint64_t passes_seen_ = 0;
};

}  // namespace

TEST_CASE("stream order parsing") {
  CHECK(parse_stream_order("natural").kind == StreamOrder::Kind::kNatural);
  CHECK(parse_stream_order("reverse").kind == StreamOrder::Kind::kReverse);
  StreamOrder random = parse_stream_order("random:42");
  CHECK(random.kind == StreamOrder::Kind::kRandom);
  CHECK(random.seed == 42);
  CHECK_THROWS_AS(parse_stream_order("sideways"), ParseError);
}

TEST_CASE("two-pass stub sees two passes") {
  WeightedInstance inst = e1_instance();
  PassCountingStub stub(inst.ground_size());
  RunReport report = run_stream(stub, inst, StreamOrder{}, 2);
  CHECK(report.passes == 2);
  CHECK(stub.passes_seen() == 2);
  CHECK(report.output.empty());
}

TEST_CASE("empty instance streams to an empty output") {
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(0, 0);
  inst.m2 = make_uniform_matroid(0, 0);
  inst.support = ElementSet(0);
  OnePassGreedyWeighted alg(inst, Rational(1, 10));
  RunReport report = run_stream(alg, inst, StreamOrder{}, 1);
  CHECK(report.output.empty());
  CHECK(report.passes == 1);
}

TEST_CASE("one-pass greedy clears (0.5 - eps) on e1") {
  WeightedInstance inst = e1_instance();
  OnePassGreedyWeighted alg(inst, Rational(1, 10));
  RunReport report = run_stream(alg, inst, StreamOrder{}, 1);
  CHECK(report.common_independent);
  // (0.5 - 0.1) * 4 = 8/5.
  CHECK(report.output_weight >= Rational(8, 5));
  CHECK(report.passes == 1);
  CHECK(report.stored_peak > 0);
}

TEST_CASE("single element streams to itself") {
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(1, 1);
  inst.m2 = make_uniform_matroid(1, 1);
  inst.weights = {Rational(3)};
  inst.support = ElementSet(1, {0});
  OnePassGreedyWeighted alg(inst, Rational(1, 10));
  RunReport report = run_stream(alg, inst, StreamOrder{}, 1);
  CHECK(report.output == ElementSet(1, {0}));
}

TEST_CASE("wrapper around streaming greedy matches the direct algorithm") {
  Rng rng(101);
  for (uint64_t c = 0; c < 15; ++c) {
    RandomInstance ri = random_small_instance(rng, c, 2, 6, 4, 12);
    StreamOrder order;
    order.kind = StreamOrder::Kind::kRandom;
    order.seed = rng.next();

    OnePassGreedyWeighted direct(ri.instance, Rational(1, 10));
    StreamingWeightedWrapper wrapped(ri.instance, direct.internal_epsilon(),
                                     greedy_streamer_factory());
    RunReport a = run_stream(direct, ri.instance, order, 1);
    RunReport b = run_stream(wrapped, ri.instance, order, 1);
    CHECK(a.output == b.output);
  }
}

TEST_CASE("wrapper with a single class reduces to refold-extract") {
  // All weights inside one spread interval at eps = 1/2: one distinct class.
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(3, 2);
  inst.m2 = make_uniform_matroid(3, 2);
  inst.weights = {Rational(3), Rational(3), Rational(2)};
  inst.support = ElementSet(3, {0, 1, 2});
  StreamingWeightedWrapper wrapped(inst, Rational(1, 2),
                                   store_all_exact_factory());
  CHECK(wrapped.class_count() == 1);
  RunReport report = run_stream(wrapped, inst, StreamOrder{}, 1);
  CHECK(report.common_independent);
  CHECK(report.output_weight == Rational(6));
}

TEST_CASE("exact stub wrapper clears its printed factor on e1") {
  WeightedInstance inst = e1_instance();
  StreamingWeightedWrapper wrapped(inst, Rational(1, 10),
                                   store_all_exact_factory());
  RunReport report = run_stream(wrapped, inst, StreamOrder{}, 1);
  CHECK(report.output_weight >= wrapped.bound_factor(1) * Rational(4));
}

TEST_CASE("space cap violations are recorded, not fatal") {
  WeightedInstance inst = e1_instance();
  StreamingWeightedWrapper wrapped(inst, Rational(1, 10),
                                   store_all_exact_factory());
  RunReport report = run_stream(wrapped, inst, StreamOrder{}, 1, 1);
  CHECK(report.space_budget_violated);
  CHECK(report.common_independent);
}

namespace {

// Two-pass cardinality stub: ignores pass one, greedy on pass two.
class TwoPassStreamer : public CardinalityStreamer {
 public:
  TwoPassStreamer(const OraclePtr& m1, const OraclePtr& m2, size_t copies)
      : m1_(m1), m2_(m2), kept_(copies) {}
  void on_element(ElementId copy) override {
    if (pass_ == 0) return;
    if (kept_.contains(copy)) return;
    kept_.add(copy);
    if (!m1_->is_independent(kept_) || !m2_->is_independent(kept_)) {
      kept_.remove(copy);
    }
  }
  void on_pass_end() override { ++pass_; }
  ElementSet finalize() override { return kept_; }
  uint64_t passes_needed() const override { return 2; }
  uint64_t retained_count() const override { return kept_.size(); }

 private:
  OraclePtr m1_;
  OraclePtr m2_;
  ElementSet kept_;
  int pass_ = 0;
};

}  // namespace

TEST_CASE("wrapper preserves a wrapped two-pass algorithm's pass count") {
  WeightedInstance inst = e1_instance();
  StreamingWeightedWrapper wrapped(
      inst, Rational(1, 10),
      [](const OraclePtr& m1, const OraclePtr& m2, size_t copies) {
        return std::make_unique<TwoPassStreamer>(m1, m2, copies);
      });
  CHECK(wrapped.passes_needed() == 2);
  RunReport report = run_stream(wrapped, inst, StreamOrder{}, 2);
  CHECK(report.passes == 2);
  CHECK(report.common_independent);
  CHECK(report.output_weight > 0);
}

TEST_CASE("weighted wrapper clears the bound where plain greedy is tight") {
  // x blocks a in the first matroid and b in the second; unweighted greedy
  // in natural order keeps only x (half of {a, b}).
  WeightedInstance inst;
  inst.m1 = make_partition_matroid({0, 0, 1}, {1, 1});
  inst.m2 = make_partition_matroid({0, 1, 0}, {1, 1});
  inst.weights = {Rational(1), Rational(1), Rational(1)};
  inst.support = ElementSet(3, {0, 1, 2});
  OnePassGreedyWeighted alg(inst, Rational(1, 10));
  RunReport report = run_stream(alg, inst, StreamOrder{}, 1);
  CHECK(report.output == ElementSet(3, {0}));
  // (1/2 - 1/10) * OPT' = (2/5) * 2.
  CHECK(report.output_weight >= Rational(4, 5));
}
