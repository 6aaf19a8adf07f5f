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

#ifndef MATROIDX_STREAMING_HPP
#define MATROIDX_STREAMING_HPP

#include <functional>
#include <memory>
#include <optional>

#include "matroidx/instance.hpp"
#include "matroidx/unfold.hpp"

namespace matroidx {

struct StreamOrder {
  enum class Kind { kNatural, kReverse, kRandom };
  Kind kind = Kind::kNatural;
  uint64_t seed = 0;
};

// "natural" | "reverse" | "random:<seed>"
StreamOrder parse_stream_order(const std::string& text);

// Consumer of a weighted element stream. retained_count() is polled by the
// runner after every event to meter peak space in retained elements.
class StreamingAlgorithm {
 public:
  virtual ~StreamingAlgorithm() = default;
  virtual void on_element(ElementId id, const Rational& weight) = 0;
  virtual void on_pass_end() {}
  virtual ElementSet finalize() = 0;
  virtual uint64_t passes_needed() const { return 1; }
  virtual uint64_t retained_count() const = 0;
};

struct RunReport {
  ElementSet output;
  Rational output_weight;
  uint64_t passes = 0;
  uint64_t stored_peak = 0;
  uint64_t message_elements = 0;
  bool common_independent = false;
  bool space_budget_violated = false;
};

// Delivers each support element once per pass in the given order and
// meters peak retained elements. A space cap violation is recorded, not
// fatal.
RunReport run_stream(StreamingAlgorithm& alg, const WeightedInstance& inst,
                     const StreamOrder& order, uint64_t passes,
                     std::optional<uint64_t> space_cap = {});

// Cardinality streaming algorithm over the copies of one unfolded class.
class CardinalityStreamer {
 public:
  virtual ~CardinalityStreamer() = default;
  virtual void on_element(ElementId copy) = 0;
  virtual void on_pass_end() {}
  virtual ElementSet finalize() = 0;  // subset of the fed copies
  virtual uint64_t passes_needed() const { return 1; }
  virtual uint64_t retained_count() const = 0;
};

using StreamerFactory = std::function<std::unique_ptr<CardinalityStreamer>(
    const OraclePtr& m1, const OraclePtr& m2, size_t copy_count)>;

// Single-pass greedy: keeps a copy iff the retained set stays commonly
// independent; a maximal set, hence 0.5-approximate.
StreamerFactory greedy_streamer_factory();

// Test stub that stores every copy and solves exactly at the end.
StreamerFactory store_all_exact_factory();

// --- Shared class planning for the streaming and communication wrappers ---

// One distinct weight class of the spread decomposition, with an
// arrival-compatible integerization: scales depend only on the declared
// weight range and the class interval, never on unseen elements.
struct ModelClass {
  Rational lower;  // clipped to the declared weight range
  Rational upper;
  ElementSet members;
  bool declared_integer = false;
  Rational scale;          // w_int = round/scale of w per the mode
  int64_t w_cap = 1;       // a-priori bound on integer weights in the class
  Rational rounding_loss;  // 1 (integers) or (1+eps)^-2
  std::vector<int64_t> w_int;  // by element id, 0 outside the class
};

struct ModelClassRef {
  int spread_index = 0;
  int level = 0;
  size_t class_id = 0;  // into ModelPlan::classes
};

struct ModelPlan {
  Rational epsilon;
  int beta = 0;
  std::vector<ModelClass> classes;  // distinct member sets
  std::vector<ModelClassRef> refs;  // all (i, l) classes
};

ModelPlan plan_model_classes(const WeightedInstance& inst,
                             const Rational& epsilon);

// Class restriction with its integer weights, optionally narrowed to a part
// of the ground set (used by the communication wrapper for each party).
IntegerWeightedInstance model_class_instance(const WeightedInstance& inst,
                                             const ModelClass& cls,
                                             const ElementSet* part = nullptr);

// Offline extraction shared by the wrappers: the additive auction at
// precision eps / w_cap^2 over the refolded support, in class-integer
// weights (or exhaustive search when exact_extraction is set).
ElementSet extract_from_refolded(const WeightedInstance& inst,
                                 const ModelClass& cls,
                                 const ElementSet& refolded,
                                 const Rational& epsilon,
                                 bool exact_extraction = false);

ElementSet refold_and_extract(const WeightedInstance& inst,
                              const ModelClass& cls,
                              const UnfoldedInstance& unfolded,
                              const ElementSet& copies,
                              const Rational& epsilon,
                              bool exact_extraction = false);

// Greedy-merge the per-class extractions for every spread index; heaviest
// index wins, ties to the smaller index.
ElementSet best_merged(const WeightedInstance& inst, const ModelPlan& plan,
                       const std::vector<ElementSet>& extracted);

// Weighted one-pass wrapper around a cardinality streaming algorithm: one
// instance per distinct class fed the arriving element's copies, refolding
// and auction extraction at finalize, greedy merge per spread index, best
// index wins. Preserves the wrapped algorithm's pass count.
class StreamingWeightedWrapper : public StreamingAlgorithm {
 public:
  StreamingWeightedWrapper(const WeightedInstance& inst,
                           const Rational& epsilon, StreamerFactory factory,
                           bool exact_extraction = false);

  void on_element(ElementId id, const Rational& weight) override;
  void on_pass_end() override;
  ElementSet finalize() override;
  uint64_t passes_needed() const override;
  uint64_t retained_count() const override;

  // Valid multiplicative guarantee factor (relative to the wrapped
  // algorithm's alpha) once finalize has run.
  Rational bound_factor(const Rational& alpha) const;

  size_t class_count() const { return classes_.size(); }
  uint64_t per_class_peak() const { return per_class_peak_; }

 private:
  const WeightedInstance& inst_;
  Rational epsilon_;
  bool exact_extraction_;
  ModelPlan plan_;
  std::vector<UnfoldedInstance> classes_;  // parallel to plan_.classes
  std::vector<std::unique_ptr<CardinalityStreamer>> streamers_;
  uint64_t per_class_peak_ = 0;
  uint64_t finalize_retained_ = 0;
};

// Direct single-pass weighted greedy, the (0.5 - eps) algorithm: incremental
// per-slice bookkeeping instead of materialized unfoldings. Internally runs
// at eps/5 so the composed losses stay within the advertised eps.
class OnePassGreedyWeighted : public StreamingAlgorithm {
 public:
  OnePassGreedyWeighted(const WeightedInstance& inst, const Rational& epsilon,
                        bool exact_extraction = false);

  void on_element(ElementId id, const Rational& weight) override;
  ElementSet finalize() override;
  uint64_t retained_count() const override;

  Rational internal_epsilon() const { return internal_epsilon_; }

 private:
  struct ClassState {
    // Retained copies as (element, index) pairs plus per-slice sets.
    std::vector<std::pair<ElementId, int64_t>> kept;
    std::vector<ElementSet> slices1;
    std::vector<ElementSet> slices2;
  };

  const WeightedInstance& inst_;
  Rational internal_epsilon_;
  bool exact_extraction_;
  ModelPlan plan_;
  std::vector<ClassState> states_;
};

}  // namespace matroidx

#endif  // MATROIDX_STREAMING_HPP
