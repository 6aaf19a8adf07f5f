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

#include "matroidx/comm.hpp"

#include <algorithm>

#include "matroidx/rng.hpp"

namespace matroidx {

namespace {

class GuardedOracle : public MatroidOracle {
 public:
  GuardedOracle(OraclePtr base, const ElementSet& allowed)
      : base_(std::move(base)),
        allowed_(allowed.intersect(base_->universe())) {}

  MatroidKind kind() const override { return MatroidKind::kGuarded; }
  size_t ground_size() const override { return base_->ground_size(); }
  const ElementSet& universe() const override { return allowed_; }
  LedgerPtr ledger() const override { return base_->ledger(); }

  bool is_independent(const ElementSet& set) const override {
    check(set);
    return base_->is_independent(set);
  }

  size_t rank(const ElementSet& set) const override {
    check(set);
    return base_->rank(set);
  }

 private:
  void check(const ElementSet& set) const {
    if (!set.is_subset_of(allowed_)) {
      throw ProtocolError("query touches elements outside the one-way view");
    }
  }

  OraclePtr base_;
  ElementSet allowed_;
};

ElementSet greedy_extend(const MatroidOracle& m1, const MatroidOracle& m2,
                         ElementSet current, const ElementSet& candidates) {
  auto ctx1 = m1.make_context();
  auto ctx2 = m2.make_context();
  if (!ctx1->is_independent(current) || !ctx2->is_independent(current)) {
    throw PreconditionError("greedy extension from a dependent set");
  }
  candidates.for_each([&](ElementId id) {
    if (current.contains(id)) return;
    current.add(id);
    if (!ctx1->is_independent(current) || !ctx2->is_independent(current)) {
      current.remove(id);
    }
  });
  return current;
}

}  // namespace

OraclePtr guard_matroid(OraclePtr base, const ElementSet& allowed) {
  return std::make_shared<GuardedOracle>(std::move(base), allowed);
}

ElementSet GreedyBaselineProtocol::alice(const MatroidOracle& m1,
                                         const MatroidOracle& m2,
                                         const ElementSet& alice_part) const {
  return greedy_extend(m1, m2, ElementSet(m1.ground_size()), alice_part);
}

ElementSet GreedyBaselineProtocol::bob(const MatroidOracle& m1,
                                       const MatroidOracle& m2,
                                       const ElementSet& message,
                                       const ElementSet& bob_part) const {
  return greedy_extend(m1, m2, message, bob_part);
}

PartitionSpec parse_partition(const std::string& text) {
  PartitionSpec spec;
  if (text.rfind("ids:", 0) == 0) {
    spec.kind = PartitionSpec::Kind::kExplicit;
    std::string rest = text.substr(4);
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t comma = rest.find(',', pos);
      if (comma == std::string::npos) comma = rest.size();
      if (comma > pos) {
        spec.alice_ids.push_back(static_cast<ElementId>(
            std::strtoul(rest.substr(pos, comma - pos).c_str(), nullptr, 10)));
      }
      pos = comma + 1;
    }
    return spec;
  }
  if (text.rfind("random:", 0) == 0) {
    spec.kind = PartitionSpec::Kind::kRandom;
    std::string rest = text.substr(7);
    size_t colon = rest.find(':');
    if (colon == std::string::npos) {
      throw ParseError("partition random spec needs a fraction");
    }
    spec.seed = std::strtoull(rest.substr(0, colon).c_str(), nullptr, 10);
    spec.fraction = parse_rational(rest.substr(colon + 1));
    if (spec.fraction < 0 || spec.fraction > 1) {
      throw ParseError("partition fraction must lie in [0, 1]");
    }
    return spec;
  }
  throw ParseError("bad partition spec: " + text);
}

ElementSet resolve_partition(const PartitionSpec& spec,
                             const WeightedInstance& inst) {
  ElementSet alice(inst.ground_size());
  if (spec.kind == PartitionSpec::Kind::kExplicit) {
    for (ElementId id : spec.alice_ids) {
      if (!inst.support.contains(id)) {
        throw InputError("partition id outside the instance support");
      }
      alice.add(id);
    }
    return alice;
  }
  std::vector<ElementId> ids = inst.support.to_vector();
  Rng rng(spec.seed);
  rng.shuffle(ids);
  size_t take = static_cast<size_t>(
      floor_rational(spec.fraction * Rational(ids.size())));
  for (size_t i = 0; i < take && i < ids.size(); ++i) alice.add(ids[i]);
  return alice;
}

uint64_t WeightedMessage::element_count() const {
  uint64_t total = 0;
  for (const ClassMessage& cm : per_class) total += cm.copies.size();
  return total;
}

CommWeightedWrapper::CommWeightedWrapper(const CardinalityProtocol& inner,
                                         Rational epsilon,
                                         bool exact_extraction)
    : inner_(inner),
      epsilon_(std::move(epsilon)),
      exact_extraction_(exact_extraction) {}

WeightedMessage CommWeightedWrapper::alice(const WeightedInstance& inst,
                                           const ElementSet& alice_part) const {
  ModelPlan plan = plan_model_classes(inst, epsilon_);
  WeightedMessage message;
  for (size_t c = 0; c < plan.classes.size(); ++c) {
    const ModelClass& cls = plan.classes[c];
    ClassMessage cm;
    cm.class_id = c;
    ElementSet part = cls.members.intersect(alice_part);
    if (!part.empty()) {
      IntegerWeightedInstance sub = model_class_instance(inst, cls, &part);
      UnfoldedInstance unfolded = UnfoldedInstance::build(sub);
      ElementSet sent = inner_.alice(*unfolded.m1(), *unfolded.m2(),
                                     unfolded.m1()->universe());
      sent.for_each([&](ElementId copy) {
        cm.copies.emplace_back(unfolded.copy_owner(copy),
                               unfolded.copy_index(copy));
      });
    }
    message.per_class.push_back(std::move(cm));
  }
  return message;
}

ElementSet CommWeightedWrapper::bob(const WeightedInstance& inst,
                                    const WeightedMessage& message,
                                    const ElementSet& bob_part) const {
  ModelPlan plan = plan_model_classes(inst, epsilon_);

  ElementSet allowed = bob_part;
  for (const ClassMessage& cm : message.per_class) {
    for (const auto& [orig, index] : cm.copies) allowed.add(orig);
  }
  WeightedInstance guarded{guard_matroid(inst.m1, allowed),
                           guard_matroid(inst.m2, allowed), inst.weights,
                           inst.support.intersect(allowed)};

  std::vector<ElementSet> extracted(plan.classes.size(),
                                    ElementSet(inst.ground_size()));
  for (const ClassMessage& cm : message.per_class) {
    const ModelClass& cls = plan.classes[cm.class_id];
    ElementSet ground = cls.members.intersect(bob_part);
    for (const auto& [orig, index] : cm.copies) ground.add(orig);
    if (ground.empty()) continue;
    IntegerWeightedInstance sub = model_class_instance(guarded, cls, &ground);
    UnfoldedInstance unfolded = UnfoldedInstance::build(sub);
    ElementSet message_copies(unfolded.copy_count());
    for (const auto& [orig, index] : cm.copies) {
      message_copies.add(unfolded.copy_id(orig, index));
    }
    ElementSet bob_copies =
        unfolded.copies_of(cls.members.intersect(bob_part));
    ElementSet chosen = inner_.bob(*unfolded.m1(), *unfolded.m2(),
                                   message_copies, bob_copies);
    extracted[cm.class_id] = extract_from_refolded(
        guarded, cls, unfolded.refold(chosen), epsilon_, exact_extraction_);
  }
  return best_merged(guarded, plan, extracted);
}

Rational CommWeightedWrapper::bound_factor(const WeightedInstance& inst) const {
  ModelPlan plan = plan_model_classes(inst, epsilon_);
  Rational one(1);
  Rational worst = 1;
  bool saw = false;
  for (const ModelClass& cls : plan.classes) {
    Rational auction_loss =
        exact_extraction_ ? one
                          : one - Rational(3) * epsilon_ / Rational(cls.w_cap);
    Rational f = cls.rounding_loss * auction_loss;
    if (!saw || f < worst) worst = f;
    saw = true;
  }
  Rational factor = inner_.alpha() * (one - epsilon_) *
                    (one - Rational(4) * epsilon_) * worst;
  return factor < 0 ? Rational(0) : factor;
}

RunReport run_protocol(const CommWeightedWrapper& protocol,
                       const WeightedInstance& inst,
                       const ElementSet& alice_part) {
  inst.validate();
  if (!alice_part.is_subset_of(inst.support)) {
    throw InputError("alice part leaves the instance support");
  }
  ElementSet bob_part = inst.support.minus(alice_part);

  WeightedMessage message = protocol.alice(inst, alice_part);
  ElementSet output = protocol.bob(inst, message, bob_part);

  ElementSet known = bob_part;
  for (const ClassMessage& cm : message.per_class) {
    for (const auto& [orig, index] : cm.copies) known.add(orig);
  }
  if (!output.is_subset_of(known)) {
    throw ProtocolError("output uses elements Bob never learned");
  }

  RunReport report;
  report.output = output;
  report.output_weight = inst.weight_of(output);
  report.message_elements = message.element_count();
  report.common_independent = inst.is_common_independent(output);
  inst.m1->ledger()->count_message_elements(report.message_elements);
  return report;
}

RunReport run_cardinality_protocol(const CardinalityProtocol& protocol,
                                   const WeightedInstance& inst,
                                   const ElementSet& alice_part) {
  inst.validate();
  ElementSet bob_part = inst.support.minus(alice_part);

  OraclePtr alice_m1 = guard_matroid(inst.m1, alice_part);
  OraclePtr alice_m2 = guard_matroid(inst.m2, alice_part);
  ElementSet message = protocol.alice(*alice_m1, *alice_m2, alice_part);

  ElementSet allowed = bob_part.unite(message);
  OraclePtr bob_m1 = guard_matroid(inst.m1, allowed);
  OraclePtr bob_m2 = guard_matroid(inst.m2, allowed);
  ElementSet output = protocol.bob(*bob_m1, *bob_m2, message, bob_part);

  if (!output.is_subset_of(allowed)) {
    throw ProtocolError("output uses elements Bob never learned");
  }

  RunReport report;
  report.output = output;
  report.output_weight = inst.weight_of(output);
  report.message_elements = message.size();
  report.common_independent = inst.is_common_independent(output);
  inst.m1->ledger()->count_message_elements(report.message_elements);
  return report;
}

}  // namespace matroidx
