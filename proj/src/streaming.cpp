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

#include "matroidx/streaming.hpp"

#include <algorithm>
#include <map>

#include "matroidx/auction.hpp"
#include "matroidx/brute_force.hpp"
#include "matroidx/merge.hpp"
#include "matroidx/rng.hpp"
#include "matroidx/rounding.hpp"
#include "matroidx/solvers.hpp"
#include "matroidx/spread.hpp"

namespace matroidx {

StreamOrder parse_stream_order(const std::string& text) {
  StreamOrder order;
  if (text == "natural") {
    order.kind = StreamOrder::Kind::kNatural;
  } else if (text == "reverse") {
    order.kind = StreamOrder::Kind::kReverse;
  } else if (text.rfind("random:", 0) == 0) {
    order.kind = StreamOrder::Kind::kRandom;
    order.seed = std::strtoull(text.c_str() + 7, nullptr, 10);
  } else {
    throw ParseError("bad stream order: " + text);
  }
  return order;
}

RunReport run_stream(StreamingAlgorithm& alg, const WeightedInstance& inst,
                     const StreamOrder& order, uint64_t passes,
                     std::optional<uint64_t> space_cap) {
  if (passes < 1) throw InputError("at least one pass is required");
  inst.validate();
  std::vector<ElementId> sequence = inst.support.to_vector();
  switch (order.kind) {
    case StreamOrder::Kind::kNatural:
      break;
    case StreamOrder::Kind::kReverse:
      std::reverse(sequence.begin(), sequence.end());
      break;
    case StreamOrder::Kind::kRandom: {
      Rng rng(order.seed);
      rng.shuffle(sequence);
      break;
    }
  }

  RunReport report;
  for (uint64_t pass = 0; pass < passes; ++pass) {
    for (ElementId id : sequence) {
      alg.on_element(id, inst.weights[id]);
      uint64_t retained = alg.retained_count();
      report.stored_peak = std::max(report.stored_peak, retained);
      if (space_cap && retained > *space_cap) {
        report.space_budget_violated = true;
      }
    }
    alg.on_pass_end();
    ++report.passes;
  }
  report.output = alg.finalize();
  report.output_weight = inst.weight_of(report.output);
  report.common_independent = inst.is_common_independent(report.output);
  inst.m1->ledger()->record_stored(report.stored_peak);
  return report;
}

namespace {

class GreedyStreamer : public CardinalityStreamer {
 public:
  GreedyStreamer(const OraclePtr& m1, const OraclePtr& m2, size_t copies)
      : m1_(m1), m2_(m2), kept_(copies) {
    ctx1_ = m1_->make_context();
    ctx2_ = m2_->make_context();
  }

  void on_element(ElementId copy) override {
    if (kept_.contains(copy)) return;
    kept_.add(copy);
    if (!ctx1_->is_independent(kept_) || !ctx2_->is_independent(kept_)) {
      kept_.remove(copy);
    }
  }

  ElementSet finalize() override { return kept_; }
  uint64_t retained_count() const override { return kept_.size(); }

 private:
  OraclePtr m1_;
  OraclePtr m2_;
  std::unique_ptr<QueryContext> ctx1_;
  std::unique_ptr<QueryContext> ctx2_;
  ElementSet kept_;
};

class StoreAllStreamer : public CardinalityStreamer {
 public:
  StoreAllStreamer(const OraclePtr& m1, const OraclePtr& m2, size_t copies)
      : m1_(m1), m2_(m2), stored_(copies) {}

  void on_element(ElementId copy) override { stored_.add(copy); }

  ElementSet finalize() override {
    if (stored_.empty()) return stored_;
    return exact_mi(*restrict_matroid(m1_, stored_),
                    *restrict_matroid(m2_, stored_));
  }
  uint64_t retained_count() const override { return stored_.size(); }

 private:
  OraclePtr m1_;
  OraclePtr m2_;
  ElementSet stored_;
};

}  // namespace

StreamerFactory greedy_streamer_factory() {
  return [](const OraclePtr& m1, const OraclePtr& m2, size_t copies) {
    return std::make_unique<GreedyStreamer>(m1, m2, copies);
  };
}

StreamerFactory store_all_exact_factory() {
  return [](const OraclePtr& m1, const OraclePtr& m2, size_t copies) {
    return std::make_unique<StoreAllStreamer>(m1, m2, copies);
  };
}

ModelPlan plan_model_classes(const WeightedInstance& inst,
                             const Rational& epsilon) {
  ModelPlan plan;
  plan.epsilon = epsilon;
  SpreadDecomposition spread = spread_decompose(inst, epsilon);
  plan.beta = spread.beta;
  if (inst.support.empty()) return plan;

  // Declared a-priori range; class scales may depend on it but not on which
  // elements actually arrive.
  Rational declared_min = inst.min_weight();
  Rational declared_max = inst.max_weight();
  bool integral = true;
  inst.support.for_each([&](ElementId id) {
    if (denominator(inst.weights[id]) != 1) integral = false;
  });

  std::map<std::string, size_t> dedup;
  for (const SpreadIndex& si : spread.indices) {
    for (const WeightClass& wc : si.classes) {
      Rational lo = std::max(wc.lower, declared_min);
      Rational hi = std::min(wc.upper, Rational(declared_max + 1));
      std::string key = wc.members.to_string() + "|" +
                        to_fraction_string(lo) + "|" + to_fraction_string(hi);
      auto it = dedup.find(key);
      size_t id;
      if (it != dedup.end()) {
        id = it->second;
      } else {
        ModelClass cls;
        cls.lower = lo;
        cls.upper = hi;
        cls.members = wc.members;
        cls.w_int.assign(inst.ground_size(), 0);
        if (integral) {
          cls.declared_integer = true;
          cls.scale = 1;
          cls.rounding_loss = 1;
          Rational bound = std::min(wc.upper, Rational(declared_max + 1));
          cls.w_cap =
              std::max<int64_t>(1, static_cast<int64_t>(ceil_rational(bound)) - 1);
          wc.members.for_each([&](ElementId e) {
            cls.w_int[e] = static_cast<int64_t>(numerator(inst.weights[e]));
          });
        } else {
          cls.declared_integer = false;
          cls.scale = Rational(2) / (epsilon * lo);
          Rational base = Rational(1) + epsilon;
          cls.rounding_loss = Rational(1) / (base * base);
          Rational bound = std::min(wc.upper, declared_max);
          cls.w_cap = std::max<int64_t>(
              1, static_cast<int64_t>(floor_rational(cls.scale * bound)));
          wc.members.for_each([&](ElementId e) {
            cls.w_int[e] = bucket_floor(cls.scale * inst.weights[e], base);
          });
        }
        plan.classes.push_back(std::move(cls));
        id = plan.classes.size() - 1;
        dedup.emplace(std::move(key), id);
      }
      plan.refs.push_back(ModelClassRef{si.index, wc.level, id});
    }
  }
  return plan;
}

IntegerWeightedInstance model_class_instance(const WeightedInstance& inst,
                                             const ModelClass& cls,
                                             const ElementSet* part) {
  IntegerWeightedInstance out;
  ElementSet members =
      part == nullptr ? cls.members : cls.members.intersect(*part);
  out.m1 = restrict_matroid(inst.m1, members);
  out.m2 = restrict_matroid(inst.m2, members);
  out.weights = cls.w_int;
  out.support = members;
  out.max_weight = 1;
  members.for_each([&](ElementId e) {
    out.max_weight = std::max(out.max_weight, cls.w_int[e]);
  });
  return out;
}

ElementSet extract_from_refolded(const WeightedInstance& inst,
                                 const ModelClass& cls,
                                 const ElementSet& refolded,
                                 const Rational& epsilon,
                                 bool exact_extraction) {
  if (refolded.empty()) return ElementSet(inst.ground_size());
  WeightedInstance sub;
  sub.m1 = restrict_matroid(inst.m1, refolded);
  sub.m2 = restrict_matroid(inst.m2, refolded);
  sub.support = refolded;
  sub.weights.assign(inst.ground_size(), 0);
  refolded.for_each(
      [&](ElementId e) { sub.weights[e] = Rational(cls.w_int[e]); });
  if (exact_extraction) {
    return brute_force_opt(sub).set;
  }
  Rational delta = epsilon / Rational(cls.w_cap * cls.w_cap);
  return auction_additive(sub, delta).set;
}

ElementSet best_merged(const WeightedInstance& inst, const ModelPlan& plan,
                       const std::vector<ElementSet>& extracted) {
  ElementSet best(inst.ground_size());
  Rational best_weight = 0;
  bool have = false;
  for (int i = 1; i <= plan.beta; ++i) {
    std::vector<ModelClassRef> refs;
    for (const ModelClassRef& r : plan.refs) {
      if (r.spread_index == i) refs.push_back(r);
    }
    std::sort(refs.begin(), refs.end(),
              [](const ModelClassRef& a, const ModelClassRef& b) {
                return a.level > b.level;
              });
    std::vector<MergeClass> descending;
    for (const ModelClassRef& r : refs) {
      descending.push_back(MergeClass{plan.classes[r.class_id].lower,
                                      plan.classes[r.class_id].upper,
                                      extracted[r.class_id]});
    }
    ElementSet merged = greedy_merge(descending, *inst.m1, *inst.m2,
                                     inst.weights);
    Rational weight = inst.weight_of(merged);
    if (!have || weight > best_weight) {
      best = merged;
      best_weight = weight;
      have = true;
    }
  }
  return best;
}

ElementSet refold_and_extract(const WeightedInstance& inst,
                              const ModelClass& cls,
                              const UnfoldedInstance& unfolded,
                              const ElementSet& copies,
                              const Rational& epsilon,
                              bool exact_extraction) {
  return extract_from_refolded(inst, cls, unfolded.refold(copies), epsilon,
                               exact_extraction);
}

StreamingWeightedWrapper::StreamingWeightedWrapper(const WeightedInstance& inst,
                                                   const Rational& epsilon,
                                                   StreamerFactory factory,
                                                   bool exact_extraction)
    : inst_(inst),
      epsilon_(epsilon),
      exact_extraction_(exact_extraction),
      plan_(plan_model_classes(inst, epsilon)) {
  for (const ModelClass& cls : plan_.classes) {
    classes_.push_back(
        UnfoldedInstance::build(model_class_instance(inst, cls)));
    streamers_.push_back(factory(classes_.back().m1(), classes_.back().m2(),
                                 classes_.back().copy_count()));
  }
}

void StreamingWeightedWrapper::on_element(ElementId id, const Rational&) {
  for (size_t c = 0; c < plan_.classes.size(); ++c) {
    const ModelClass& cls = plan_.classes[c];
    if (!cls.members.contains(id)) continue;
    for (int64_t j = 1; j <= cls.w_int[id]; ++j) {
      streamers_[c]->on_element(classes_[c].copy_id(id, j));
    }
    per_class_peak_ =
        std::max(per_class_peak_, streamers_[c]->retained_count());
  }
}

void StreamingWeightedWrapper::on_pass_end() {
  for (auto& s : streamers_) s->on_pass_end();
}

uint64_t StreamingWeightedWrapper::passes_needed() const {
  uint64_t passes = 1;
  for (const auto& s : streamers_) {
    passes = std::max(passes, s->passes_needed());
  }
  return passes;
}

uint64_t StreamingWeightedWrapper::retained_count() const {
  uint64_t total = finalize_retained_;
  for (const auto& s : streamers_) total += s->retained_count();
  return total;
}

ElementSet StreamingWeightedWrapper::finalize() {
  std::vector<ElementSet> extracted;
  for (size_t c = 0; c < plan_.classes.size(); ++c) {
    ElementSet copies = streamers_[c]->finalize();
    ElementSet chosen = refold_and_extract(inst_, plan_.classes[c],
                                           classes_[c], copies, epsilon_,
                                           exact_extraction_);
    finalize_retained_ += chosen.size();
    extracted.push_back(std::move(chosen));
  }
  return best_merged(inst_, plan_, extracted);
}

Rational StreamingWeightedWrapper::bound_factor(const Rational& alpha) const {
  Rational one(1);
  Rational worst = 1;
  bool saw = false;
  for (const ModelClass& cls : plan_.classes) {
    Rational auction_loss =
        exact_extraction_
            ? one
            : one - Rational(3) * epsilon_ / Rational(cls.w_cap);
    Rational f = cls.rounding_loss * auction_loss;
    if (!saw || f < worst) worst = f;
    saw = true;
  }
  Rational factor = alpha * (one - epsilon_) *
                    (one - Rational(4) * epsilon_) * worst;
  return factor < 0 ? Rational(0) : factor;
}

OnePassGreedyWeighted::OnePassGreedyWeighted(const WeightedInstance& inst,
                                             const Rational& epsilon,
                                             bool exact_extraction)
    : inst_(inst),
      internal_epsilon_(epsilon / 5),
      exact_extraction_(exact_extraction),
      plan_(plan_model_classes(inst, epsilon / 5)) {
  states_.resize(plan_.classes.size());
}

void OnePassGreedyWeighted::on_element(ElementId id, const Rational&) {
  for (size_t c = 0; c < plan_.classes.size(); ++c) {
    const ModelClass& cls = plan_.classes[c];
    if (!cls.members.contains(id)) continue;
    ClassState& st = states_[c];
    int64_t w = cls.w_int[id];
    for (int64_t j = 1; j <= w; ++j) {
      int64_t s1 = j;
      int64_t s2 = w - j + 1;
      if (st.slices1.size() <= static_cast<size_t>(std::max(s1, s2))) {
        st.slices1.resize(std::max(s1, s2) + 1, ElementSet(inst_.ground_size()));
        st.slices2.resize(std::max(s1, s2) + 1, ElementSet(inst_.ground_size()));
      }
      // Adding a copy touches one slice per side; the retained set stays
      // commonly independent iff both touched slices accept the element.
      ElementSet probe1 = st.slices1[s1];
      probe1.add(id);
      if (!inst_.m1->is_independent(probe1)) continue;
      ElementSet probe2 = st.slices2[s2];
      probe2.add(id);
      if (!inst_.m2->is_independent(probe2)) continue;
      st.slices1[s1].add(id);
      st.slices2[s2].add(id);
      st.kept.emplace_back(id, j);
    }
  }
}

uint64_t OnePassGreedyWeighted::retained_count() const {
  uint64_t total = 0;
  for (const ClassState& st : states_) total += st.kept.size();
  return total;
}

ElementSet OnePassGreedyWeighted::finalize() {
  std::vector<ElementSet> extracted;
  for (size_t c = 0; c < plan_.classes.size(); ++c) {
    ElementSet refolded(inst_.ground_size());
    for (const auto& [id, j] : states_[c].kept) refolded.add(id);
    extracted.push_back(extract_from_refolded(inst_, plan_.classes[c],
                                              refolded, internal_epsilon_,
                                              exact_extraction_));
  }
  return best_merged(inst_, plan_, extracted);
}

}  // namespace matroidx
