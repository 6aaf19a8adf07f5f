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

#include "matroidx/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "matroidx/errors.hpp"

namespace matroidx {

std::string kind_name(MatroidKind kind) {
  switch (kind) {
    case MatroidKind::kUniform:
      return "uniform";
    case MatroidKind::kPartition:
      return "partition";
    case MatroidKind::kGraphic:
      return "graphic";
    case MatroidKind::kLinearGf2:
      return "linear_gf2";
    case MatroidKind::kUnfolded:
      return "unfolded";
    case MatroidKind::kRestriction:
      return "restriction";
    case MatroidKind::kContraction:
      return "contraction";
    case MatroidKind::kGuarded:
      return "guarded";
    case MatroidKind::kCustom:
      return "custom";
  }
  return "unknown";
}

bool QueryContext::is_independent(const ElementSet& set) {
  return oracle_.is_independent(set);
}

std::unique_ptr<QueryContext> MatroidOracle::make_context() const {
  return std::make_unique<QueryContext>(*this);
}

namespace {

class BaseOracle : public MatroidOracle {
 public:
  BaseOracle(size_t n, LedgerPtr ledger)
      : n_(n),
        universe_(n),
        ledger_(ledger ? std::move(ledger) : make_ledger()) {
    for (size_t i = 0; i < n; ++i) universe_.add(static_cast<ElementId>(i));
  }

  size_t ground_size() const override { return n_; }
  const ElementSet& universe() const override { return universe_; }
  LedgerPtr ledger() const override { return ledger_; }

 protected:
  void check_in_universe(const ElementSet& set) const {
    if (set.capacity() != n_) {
      throw InputError("query set has universe size " +
                       std::to_string(set.capacity()) + ", oracle has " +
                       std::to_string(n_));
    }
  }

  size_t n_;
  ElementSet universe_;
  LedgerPtr ledger_;
};

class UniformMatroid : public BaseOracle {
 public:
  UniformMatroid(size_t n, size_t k, LedgerPtr ledger)
      : BaseOracle(n, std::move(ledger)), k_(k) {}

  MatroidKind kind() const override { return MatroidKind::kUniform; }

  bool is_independent(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_independence();
    return set.size() <= k_;
  }

  size_t rank(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_rank();
    return std::min(set.size(), k_);
  }

 private:
  size_t k_;
};

class PartitionMatroid : public BaseOracle {
 public:
  PartitionMatroid(std::vector<uint32_t> block_of, std::vector<uint32_t> caps,
                   LedgerPtr ledger)
      : BaseOracle(block_of.size(), std::move(ledger)),
        block_of_(std::move(block_of)),
        caps_(std::move(caps)) {
    for (uint32_t b : block_of_) {
      if (b >= caps_.size()) {
        throw InputError("partition block index out of range");
      }
    }
  }

  MatroidKind kind() const override { return MatroidKind::kPartition; }

  bool is_independent(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_independence();
    std::vector<uint32_t> used(caps_.size(), 0);
    bool ok = true;
    set.for_each([&](ElementId id) {
      if (++used[block_of_[id]] > caps_[block_of_[id]]) ok = false;
    });
    return ok;
  }

  size_t rank(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_rank();
    std::vector<uint32_t> used(caps_.size(), 0);
    set.for_each([&](ElementId id) { ++used[block_of_[id]]; });
    size_t r = 0;
    for (size_t b = 0; b < caps_.size(); ++b) {
      r += std::min(used[b], caps_[b]);
    }
    return r;
  }

 private:
  std::vector<uint32_t> block_of_;
  std::vector<uint32_t> caps_;
};

// Union-find rebuilt per query; queries are set-level, not incremental.
class GraphicMatroid : public BaseOracle {
 public:
  GraphicMatroid(size_t vertices,
                 std::vector<std::pair<uint32_t, uint32_t>> edges,
                 LedgerPtr ledger)
      : BaseOracle(edges.size(), std::move(ledger)),
        vertices_(vertices),
        edges_(std::move(edges)) {
    for (const auto& [u, v] : edges_) {
      if (u >= vertices_ || v >= vertices_) {
        throw InputError("edge endpoint out of range");
      }
    }
  }

  MatroidKind kind() const override { return MatroidKind::kGraphic; }

  bool is_independent(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_independence();
    return forest_size(set) == set.size();
  }

  size_t rank(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_rank();
    return forest_size(set);
  }

 private:
  size_t forest_size(const ElementSet& set) const {
    std::vector<uint32_t> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
      }
      return x;
    };
    size_t joined = 0;
    set.for_each([&](ElementId id) {
      uint32_t ru = find(edges_[id].first);
      uint32_t rv = find(edges_[id].second);
      if (ru != rv) {
        parent[ru] = rv;
        ++joined;
      }
    });
    return joined;
  }

  size_t vertices_;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
};

class LinearGf2Matroid : public BaseOracle {
 public:
  LinearGf2Matroid(size_t rows, std::vector<uint64_t> columns,
                   LedgerPtr ledger)
      : BaseOracle(columns.size(), std::move(ledger)),
        rows_(rows),
        columns_(std::move(columns)) {
    if (rows_ > 64) throw InputError("linear_gf2 supports at most 64 rows");
    uint64_t mask = rows_ == 64 ? ~uint64_t{0} : ((uint64_t{1} << rows_) - 1);
    for (uint64_t c : columns_) {
      if ((c & ~mask) != 0) throw InputError("gf2 column has bits beyond rows");
    }
  }

  MatroidKind kind() const override { return MatroidKind::kLinearGf2; }

  bool is_independent(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_independence();
    return gf2_rank(set) == set.size();
  }

  size_t rank(const ElementSet& set) const override {
    check_in_universe(set);
    ledger_->count_rank();
    return gf2_rank(set);
  }

 private:
  size_t gf2_rank(const ElementSet& set) const {
    std::vector<uint64_t> basis;
    size_t r = 0;
    set.for_each([&](ElementId id) {
      uint64_t v = columns_[id];
      for (uint64_t b : basis) {
        v = std::min(v, v ^ b);
      }
      if (v != 0) {
        basis.push_back(v);
        ++r;
      }
    });
    return r;
  }

  size_t rows_;
  std::vector<uint64_t> columns_;
};

class RestrictionOracle : public MatroidOracle {
 public:
  RestrictionOracle(OraclePtr base, const ElementSet& allowed)
      : base_(std::move(base)), allowed_(allowed) {
    if (allowed.capacity() != base_->ground_size()) {
      throw InputError("restriction mask has wrong universe size");
    }
    if (!allowed.is_subset_of(base_->universe())) {
      throw InputError("restriction mask leaves the base universe");
    }
  }

  MatroidKind kind() const override { return MatroidKind::kRestriction; }
  size_t ground_size() const override { return base_->ground_size(); }
  const ElementSet& universe() const override { return allowed_; }
  LedgerPtr ledger() const override { return base_->ledger(); }

  bool is_independent(const ElementSet& set) const override {
    check_masked(set);
    return base_->is_independent(set);
  }

  size_t rank(const ElementSet& set) const override {
    check_masked(set);
    return base_->rank(set);
  }

  std::unique_ptr<QueryContext> make_context() const override;

  const MatroidOracle& base() const { return *base_; }

 private:
  void check_masked(const ElementSet& set) const {
    if (set.capacity() != ground_size()) {
      throw InputError("query set has wrong universe size");
    }
    if (!set.is_subset_of(allowed_)) {
      throw InputError("query touches elements outside the restriction");
    }
  }

  OraclePtr base_;
  ElementSet allowed_;
};

// The base context does the caching; the restriction only re-checks the mask.
class RestrictionContext : public QueryContext {
 public:
  RestrictionContext(const RestrictionOracle& oracle,
                     std::unique_ptr<QueryContext> base_ctx)
      : QueryContext(oracle), base_ctx_(std::move(base_ctx)) {}

  bool is_independent(const ElementSet& set) override {
    const auto& r = static_cast<const RestrictionOracle&>(oracle_);
    if (!set.is_subset_of(r.universe())) {
      throw InputError("query touches elements outside the restriction");
    }
    return base_ctx_->is_independent(set);
  }

 private:
  std::unique_ptr<QueryContext> base_ctx_;
};

std::unique_ptr<QueryContext> RestrictionOracle::make_context() const {
  return std::make_unique<RestrictionContext>(*this, base_->make_context());
}

class ContractionOracle : public MatroidOracle {
 public:
  ContractionOracle(OraclePtr base, const ElementSet& contracted)
      : base_(std::move(base)),
        contracted_(contracted),
        universe_(base_->universe().minus(contracted)),
        fixed_base_(base_->ground_size()) {
    if (contracted.capacity() != base_->ground_size()) {
      throw InputError("contraction set has wrong universe size");
    }
    if (!contracted.is_subset_of(base_->universe())) {
      throw InputError("contraction set leaves the base universe");
    }
    // Lowest-id greedy base of M|S; independence of the contraction does not
    // depend on the choice, determinism does.
    contracted.for_each([&](ElementId id) {
      fixed_base_.add(id);
      if (!base_->is_independent(fixed_base_)) fixed_base_.remove(id);
    });
    base_rank_ = fixed_base_.size();
  }

  MatroidKind kind() const override { return MatroidKind::kContraction; }
  size_t ground_size() const override { return base_->ground_size(); }
  const ElementSet& universe() const override { return universe_; }
  LedgerPtr ledger() const override { return base_->ledger(); }

  bool is_independent(const ElementSet& set) const override {
    check_masked(set);
    return base_->is_independent(set.unite(fixed_base_));
  }

  size_t rank(const ElementSet& set) const override {
    check_masked(set);
    return base_->rank(set.unite(fixed_base_)) - base_rank_;
  }

  const ElementSet& fixed_base() const { return fixed_base_; }

 private:
  void check_masked(const ElementSet& set) const {
    if (set.capacity() != ground_size()) {
      throw InputError("query set has wrong universe size");
    }
    if (set.intersects(contracted_)) {
      throw InputError("query touches contracted elements");
    }
  }

  OraclePtr base_;
  ElementSet contracted_;
  ElementSet universe_;
  ElementSet fixed_base_;
  size_t base_rank_;
};

}  // namespace

OraclePtr make_uniform_matroid(size_t n, size_t k, LedgerPtr ledger) {
  return std::make_shared<UniformMatroid>(n, k, std::move(ledger));
}

OraclePtr make_partition_matroid(const std::vector<uint32_t>& block_of,
                                 const std::vector<uint32_t>& caps,
                                 LedgerPtr ledger) {
  return std::make_shared<PartitionMatroid>(block_of, caps, std::move(ledger));
}

OraclePtr make_graphic_matroid(
    size_t vertices, const std::vector<std::pair<uint32_t, uint32_t>>& edges,
    LedgerPtr ledger) {
  return std::make_shared<GraphicMatroid>(vertices, edges, std::move(ledger));
}

OraclePtr make_linear_gf2_matroid(size_t rows,
                                  const std::vector<uint64_t>& columns,
                                  LedgerPtr ledger) {
  return std::make_shared<LinearGf2Matroid>(rows, columns, std::move(ledger));
}

OraclePtr restrict_matroid(OraclePtr base, const ElementSet& allowed) {
  return std::make_shared<RestrictionOracle>(std::move(base), allowed);
}

OraclePtr contract_matroid(OraclePtr base, const ElementSet& contracted) {
  return std::make_shared<ContractionOracle>(std::move(base), contracted);
}

}  // namespace matroidx
