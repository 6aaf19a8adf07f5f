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

#ifndef MATROIDX_MATROID_HPP
#define MATROIDX_MATROID_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "matroidx/element_set.hpp"
#include "matroidx/ledger.hpp"

namespace matroidx {

enum class MatroidKind {
  kUniform,
  kPartition,
  kGraphic,
  kLinearGf2,
  kUnfolded,
  kRestriction,
  kContraction,
  kGuarded,
  kCustom,
};

std::string kind_name(MatroidKind kind);

class MatroidOracle;
using OraclePtr = std::shared_ptr<const MatroidOracle>;

// Per-caller mutable query state. The default context forwards to the
// oracle; composite oracles may override it with differential caching when
// consecutive queries differ in few elements. Contexts are not shareable
// across threads; the oracles themselves are.
class QueryContext {
 public:
  explicit QueryContext(const MatroidOracle& oracle) : oracle_(oracle) {}
  virtual ~QueryContext() = default;
  virtual bool is_independent(const ElementSet& set);

 protected:
  const MatroidOracle& oracle_;
};

// Independence/rank oracle over an indexed ground set. Base families meter
// every query on their ledger; views delegate so the ledger reflects
// underlying calls.
class MatroidOracle : public std::enable_shared_from_this<MatroidOracle> {
 public:
  virtual ~MatroidOracle() = default;

  virtual MatroidKind kind() const = 0;
  virtual size_t ground_size() const = 0;

  // Ids usable in queries. Full [0, n) for base families; a mask for
  // restriction and contraction views.
  virtual const ElementSet& universe() const = 0;

  virtual bool is_independent(const ElementSet& set) const = 0;
  virtual size_t rank(const ElementSet& set) const = 0;

  virtual LedgerPtr ledger() const = 0;

  virtual std::unique_ptr<QueryContext> make_context() const;

  ElementSet empty_set() const { return ElementSet(ground_size()); }
};

OraclePtr make_uniform_matroid(size_t n, size_t k, LedgerPtr ledger = nullptr);

// block_of[e] is the block of element e; caps has one entry per block.
OraclePtr make_partition_matroid(const std::vector<uint32_t>& block_of,
                                 const std::vector<uint32_t>& caps,
                                 LedgerPtr ledger = nullptr);

// Elements are edges (endpoint pairs over [0, vertices)); a set is
// independent iff it is a forest. Self-loops are loops of the matroid.
OraclePtr make_graphic_matroid(size_t vertices,
                               const std::vector<std::pair<uint32_t, uint32_t>>& edges,
                               LedgerPtr ledger = nullptr);

// Column per element over GF(2); rows <= 64. Rank is matrix rank of the
// selected columns.
OraclePtr make_linear_gf2_matroid(size_t rows,
                                  const std::vector<uint64_t>& columns,
                                  LedgerPtr ledger = nullptr);

// M|S with original ids preserved. Queries containing ids outside S (or
// outside the base universe) are input errors.
OraclePtr restrict_matroid(OraclePtr base, const ElementSet& allowed);

// M/S with a fixed greedy base of M|S (lowest ids first). Queries touching
// S are input errors.
OraclePtr contract_matroid(OraclePtr base, const ElementSet& contracted);

}  // namespace matroidx

#endif  // MATROIDX_MATROID_HPP
