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

#ifndef MATROIDX_COMM_HPP
#define MATROIDX_COMM_HPP

#include "matroidx/streaming.hpp"

namespace matroidx {

// View that rejects queries touching elements Bob was never sent; the
// rejection is a ProtocolError, distinct from plain input errors.
OraclePtr guard_matroid(OraclePtr base, const ElementSet& allowed);

// One-way protocol for maximum-cardinality matroid intersection. Alice's
// message is a subset of her part; Bob completes using his part plus the
// message, through guarded oracles.
class CardinalityProtocol {
 public:
  virtual ~CardinalityProtocol() = default;
  virtual ElementSet alice(const MatroidOracle& m1, const MatroidOracle& m2,
                           const ElementSet& alice_part) const = 0;
  virtual ElementSet bob(const MatroidOracle& m1, const MatroidOracle& m2,
                         const ElementSet& message,
                         const ElementSet& bob_part) const = 0;
  virtual Rational alpha() const = 0;
  virtual std::string name() const = 0;
};

// Alice sends her greedy common independent set; Bob extends it greedily
// over his elements. The result is maximal in the full instance, hence a
// 0.5-approximation regardless of the partition.
class GreedyBaselineProtocol : public CardinalityProtocol {
 public:
  ElementSet alice(const MatroidOracle& m1, const MatroidOracle& m2,
                   const ElementSet& alice_part) const override;
  ElementSet bob(const MatroidOracle& m1, const MatroidOracle& m2,
                 const ElementSet& message,
                 const ElementSet& bob_part) const override;
  Rational alpha() const override { return Rational(1, 2); }
  std::string name() const override { return "greedy-baseline"; }
};

struct PartitionSpec {
  enum class Kind { kExplicit, kRandom };
  Kind kind = Kind::kExplicit;
  std::vector<ElementId> alice_ids;
  uint64_t seed = 0;
  Rational fraction;  // of elements given to Alice
};

// "ids:0,2,5" | "random:<seed>:<fraction>"
PartitionSpec parse_partition(const std::string& text);

ElementSet resolve_partition(const PartitionSpec& spec,
                             const WeightedInstance& inst);

// Message of the weighted wrapper: per class, copies encoded as
// (original element, copy index) pairs so both parties agree on names.
struct ClassMessage {
  size_t class_id = 0;
  std::vector<std::pair<ElementId, int64_t>> copies;
};

struct WeightedMessage {
  std::vector<ClassMessage> per_class;
  uint64_t element_count() const;
};

// The wrapped protocol: Alice runs the cardinality protocol per class on
// the unfolded copies of her part; Bob completes per class, refolds,
// extracts offline and merges per spread index.
class CommWeightedWrapper {
 public:
  CommWeightedWrapper(const CardinalityProtocol& inner, Rational epsilon,
                      bool exact_extraction = false);

  WeightedMessage alice(const WeightedInstance& inst,
                        const ElementSet& alice_part) const;
  ElementSet bob(const WeightedInstance& inst, const WeightedMessage& message,
                 const ElementSet& bob_part) const;

  Rational bound_factor(const WeightedInstance& inst) const;

 private:
  const CardinalityProtocol& inner_;
  Rational epsilon_;
  bool exact_extraction_;
};

// Executes the wrapped protocol on a partition, enforcing one-way flow and
// metering the message size in elements.
RunReport run_protocol(const CommWeightedWrapper& protocol,
                       const WeightedInstance& inst,
                       const ElementSet& alice_part);

// Direct cardinality run (unit-weight view), for protocol baselines.
RunReport run_cardinality_protocol(const CardinalityProtocol& protocol,
                                   const WeightedInstance& inst,
                                   const ElementSet& alice_part);

}  // namespace matroidx

#endif  // MATROIDX_COMM_HPP
