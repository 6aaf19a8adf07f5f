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

#include "matroidx/unfold.hpp"

#include <algorithm>
#include <cstdlib>

namespace matroidx {

namespace {

using detail::CopyData;

uint64_t copy_budget_or_default(std::optional<uint64_t> budget, size_t n) {
  if (budget.has_value()) return *budget;
  if (const char* env = std::getenv("MATROIDX_BUDGET_COPIES")) {
    return std::strtoull(env, nullptr, 10);
  }
  return uint64_t{10000} * std::max<size_t>(n, 1);
}

// One side of the unfolded pair. side_reversed=false slices by the copy
// index i (first matroid), true slices by w(e) - i + 1 (second matroid).
class UnfoldedOracle : public MatroidOracle {
 public:
  UnfoldedOracle(OraclePtr base, std::shared_ptr<const CopyData> data,
                 bool side_reversed, LedgerPtr unfolded_ledger)
      : base_(std::move(base)),
        data_(std::move(data)),
        side_reversed_(side_reversed),
        unfolded_ledger_(std::move(unfolded_ledger)),
        universe_(data_->owner.size()) {
    for (size_t c = 0; c < data_->owner.size(); ++c) {
      universe_.add(static_cast<ElementId>(c));
    }
  }

  MatroidKind kind() const override { return MatroidKind::kUnfolded; }
  size_t ground_size() const override { return data_->owner.size(); }
  const ElementSet& universe() const override { return universe_; }
  LedgerPtr ledger() const override { return unfolded_ledger_; }

  int64_t slice_of(ElementId copy) const {
    int64_t i = data_->index[copy];
    if (!side_reversed_) return i;
    return data_->weights[data_->owner[copy]] - i + 1;
  }

  bool is_independent(const ElementSet& set) const override {
    check(set);
    unfolded_ledger_->count_independence();
    // Only nonempty slices are queried, so this costs at most
    // min(W, |set|) underlying independence calls.
    bool ok = true;
    for_each_slice(set, [&](const ElementSet& slice) {
      if (ok && !base_->is_independent(slice)) ok = false;
    });
    return ok;
  }

  size_t rank(const ElementSet& set) const override {
    check(set);
    unfolded_ledger_->count_rank();
    size_t total = 0;
    for_each_slice(set,
                   [&](const ElementSet& slice) { total += base_->rank(slice); });
    return total;
  }

  std::unique_ptr<QueryContext> make_context() const override;

  const MatroidOracle& base() const { return *base_; }
  size_t original_ground() const { return data_->original_ground; }
  ElementId owner_of(ElementId copy) const { return data_->owner[copy]; }

 private:
  void check(const ElementSet& set) const {
    if (set.capacity() != ground_size()) {
      throw InputError("unfolded query set has wrong universe size");
    }
  }

  template <typename Fn>
  void for_each_slice(const ElementSet& set, const Fn& fn) const {
    std::vector<std::pair<int64_t, ElementId>> members;
    members.reserve(set.size());
    set.for_each([&](ElementId copy) {
      members.emplace_back(slice_of(copy), data_->owner[copy]);
    });
    std::sort(members.begin(), members.end());
    size_t pos = 0;
    while (pos < members.size()) {
      size_t end = pos;
      ElementSet slice(data_->original_ground);
      while (end < members.size() &&
             members[end].first == members[pos].first) {
        slice.add(members[end].second);
        ++end;
      }
      fn(slice);
      pos = end;
    }
  }

  OraclePtr base_;
  std::shared_ptr<const CopyData> data_;
  bool side_reversed_;
  LedgerPtr unfolded_ledger_;
  ElementSet universe_;
};

// Differential cache: consecutive solver probes differ in a handful of
// copies, so only the touched slices are re-queried.
class UnfoldedContext : public QueryContext {
 public:
  explicit UnfoldedContext(const UnfoldedOracle& oracle)
      : QueryContext(oracle), unfolded_(oracle) {}

  bool is_independent(const ElementSet& set) override {
    if (!valid_) {
      rebuild(set);
      return failing_ == 0;
    }
    ElementSet diff = set.symmetric_difference(last_);
    size_t changed = diff.size();
    if (changed == 0) {
      unfolded_.ledger()->count_independence();
      return failing_ == 0;
    }
    if (changed > 16) {
      rebuild(set);
      return failing_ == 0;
    }
    unfolded_.ledger()->count_independence();
    std::vector<int64_t> dirty;
    diff.for_each([&](ElementId copy) {
      int64_t s = unfolded_.slice_of(copy);
      ElementId owner = unfolded_.owner_of(copy);
      ensure_slice(s);
      if (set.contains(copy)) {
        slice_sets_[s].add(owner);
      } else {
        slice_sets_[s].remove(owner);
      }
      dirty.push_back(s);
    });
    std::sort(dirty.begin(), dirty.end());
    dirty.erase(std::unique(dirty.begin(), dirty.end()), dirty.end());
    for (int64_t s : dirty) {
      bool ok = slice_sets_[s].empty() ||
                unfolded_.base().is_independent(slice_sets_[s]);
      if (ok != static_cast<bool>(slice_ok_[s])) {
        failing_ += ok ? -1 : 1;
        slice_ok_[s] = ok ? 1 : 0;
      }
    }
    last_ = set;
    return failing_ == 0;
  }

 private:
  void ensure_slice(int64_t s) {
    if (static_cast<size_t>(s) >= slice_sets_.size()) {
      slice_sets_.resize(s + 1, ElementSet(unfolded_.original_ground()));
      slice_ok_.resize(s + 1, 1);
    }
  }

  void rebuild(const ElementSet& set) {
    slice_sets_.assign(1, ElementSet(unfolded_.original_ground()));
    slice_ok_.assign(1, 1);
    failing_ = 0;
    set.for_each([&](ElementId copy) {
      int64_t s = unfolded_.slice_of(copy);
      ensure_slice(s);
      slice_sets_[s].add(unfolded_.owner_of(copy));
    });
    unfolded_.ledger()->count_independence();
    for (size_t s = 1; s < slice_sets_.size(); ++s) {
      if (slice_sets_[s].empty()) continue;
      bool ok = unfolded_.base().is_independent(slice_sets_[s]);
      slice_ok_[s] = ok ? 1 : 0;
      if (!ok) ++failing_;
    }
    last_ = set;
    valid_ = true;
  }

  const UnfoldedOracle& unfolded_;
  bool valid_ = false;
  ElementSet last_;
  std::vector<ElementSet> slice_sets_;
  std::vector<char> slice_ok_;
  int failing_ = 0;
};

std::unique_ptr<QueryContext> UnfoldedOracle::make_context() const {
  return std::make_unique<UnfoldedContext>(*this);
}

}  // namespace

UnfoldedInstance UnfoldedInstance::build(const IntegerWeightedInstance& source,
                                         std::optional<uint64_t> copy_budget) {
  source.validate();
  UnfoldedInstance out;
  out.source_ = source;
  const size_t n = source.ground_size();

  uint64_t total = 0;
  source.support.for_each(
      [&](ElementId id) { total += static_cast<uint64_t>(source.weights[id]); });
  uint64_t budget = copy_budget_or_default(copy_budget, n);
  if (total > budget) {
    throw BudgetError("unfolding would create " + std::to_string(total) +
                      " copies, budget is " + std::to_string(budget));
  }

  auto data = std::make_shared<CopyData>();
  data->original_ground = n;
  data->weights = source.weights;
  data->first.assign(n, CopyData::kNoCopy);
  data->owner.reserve(total);
  data->index.reserve(total);
  source.support.for_each([&](ElementId id) {
    data->first[id] = static_cast<ElementId>(data->owner.size());
    for (int64_t i = 1; i <= source.weights[id]; ++i) {
      data->owner.push_back(id);
      data->index.push_back(i);
    }
  });
  out.data_ = data;

  out.unfolded_ledger_ = make_ledger();
  out.m1_ = std::make_shared<UnfoldedOracle>(source.m1, out.data_, false,
                                             out.unfolded_ledger_);
  out.m2_ = std::make_shared<UnfoldedOracle>(source.m2, out.data_, true,
                                             out.unfolded_ledger_);
  return out;
}

ElementId UnfoldedInstance::copy_id(ElementId original, int64_t index) const {
  if (original >= data_->first.size() ||
      data_->first[original] == CopyData::kNoCopy || index < 1 ||
      index > data_->weights[original]) {
    throw InputError("no copy (" + std::to_string(original) + ", " +
                     std::to_string(index) + ")");
  }
  return data_->first[original] + static_cast<ElementId>(index - 1);
}

ElementSet UnfoldedInstance::refold(const ElementSet& copies) const {
  ElementSet out(source_.ground_size());
  copies.for_each([&](ElementId copy) { out.add(data_->owner[copy]); });
  return out;
}

ElementSet UnfoldedInstance::copies_of(const ElementSet& originals) const {
  ElementSet out(copy_count());
  originals.for_each([&](ElementId id) {
    for (int64_t i = 1; i <= data_->weights[id]; ++i) {
      out.add(copy_id(id, i));
    }
  });
  return out;
}

}  // namespace matroidx
