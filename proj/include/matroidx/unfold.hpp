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

#ifndef MATROIDX_UNFOLD_HPP
#define MATROIDX_UNFOLD_HPP

#include <cstdint>
#include <limits>
#include <optional>

#include "matroidx/instance.hpp"

namespace matroidx {

namespace detail {

// Copy id <-> (original, index) mapping, shared between the instance and its
// two oracle views.
struct CopyData {
  std::vector<ElementId> owner;   // by copy id
  std::vector<int64_t> index;     // 1-based, by copy id
  std::vector<ElementId> first;   // by original id; npos when absent
  std::vector<int64_t> weights;   // by original id
  size_t original_ground = 0;

  static constexpr ElementId kNoCopy = std::numeric_limits<ElementId>::max();
};

}  // namespace detail

// Element copies (e, i), i in [w(e)], with lazy oracle views over the
// original matroids. The first side slices copies by i, the second by
// w(e) - i + 1, so a set of copies is independent iff every slice is
// independent in the corresponding original matroid.
class UnfoldedInstance {
 public:
  // Throws BudgetError when the total number of copies exceeds the budget
  // (default 10^4 * ground size, overridable via MATROIDX_BUDGET_COPIES).
  static UnfoldedInstance build(const IntegerWeightedInstance& source,
                                std::optional<uint64_t> copy_budget = {});

  const IntegerWeightedInstance& source() const { return source_; }
  size_t copy_count() const { return data_->owner.size(); }
  int64_t max_weight() const { return source_.max_weight; }

  ElementId copy_owner(ElementId copy) const { return data_->owner[copy]; }
  // 1-based index i of the copy within its element.
  int64_t copy_index(ElementId copy) const { return data_->index[copy]; }
  // Copy id of (e, i); i in [1, w(e)].
  ElementId copy_id(ElementId original, int64_t index) const;

  const OraclePtr& m1() const { return m1_; }
  const OraclePtr& m2() const { return m2_; }

  LedgerPtr unfolded_ledger() const { return unfolded_ledger_; }

  // Originals owning at least one copy in the given set of copies.
  ElementSet refold(const ElementSet& copies) const;

  // All copies of the given originals.
  ElementSet copies_of(const ElementSet& originals) const;

 private:
  UnfoldedInstance() = default;

  IntegerWeightedInstance source_;
  std::shared_ptr<const detail::CopyData> data_;
  OraclePtr m1_;
  OraclePtr m2_;
  LedgerPtr unfolded_ledger_;
};

}  // namespace matroidx

#endif  // MATROIDX_UNFOLD_HPP
