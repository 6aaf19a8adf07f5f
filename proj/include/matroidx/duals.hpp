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

#ifndef MATROIDX_DUALS_HPP
#define MATROIDX_DUALS_HPP

#include "matroidx/instance.hpp"
#include "matroidx/unfold.hpp"

namespace matroidx {

// Integral dual with chain support: entries descend strictly by inclusion
// (entries[0] is the largest set) and all values are >= 1.
struct ChainDual {
  struct Entry {
    ElementSet set;
    int64_t value = 0;
  };
  std::vector<Entry> entries;

  int64_t total_value() const;
  // Sum of values over entries containing e.
  int64_t coverage(ElementId e) const;
  void validate(size_t ground_size) const;
};

// Chain whose level sets realize the given per-element coverage amounts:
// set t = {e : amounts[e] >= t}, consecutive equal levels merged.
ChainDual chain_from_cover_amounts(const std::vector<int64_t>& amounts,
                                   size_t ground_size);

// Dual assignment for the unfolded pair; supports need not be chains.
struct DualPair {
  struct Entry {
    ElementSet set;  // over unfolded copies
    int64_t value = 0;
  };
  std::vector<Entry> y;
  std::vector<Entry> z;
};

// Objective of (y', z') against the weighted instance's rank functions.
int64_t weighted_dual_value(const ChainDual& yp, const ChainDual& zp,
                            const IntegerWeightedInstance& inst);

// True iff (y', z') covers every support element to its weight.
bool weighted_dual_feasible(const ChainDual& yp, const ChainDual& zp,
                            const IntegerWeightedInstance& inst);

// The dual-lifting algorithm: from chain duals feasible for the weighted LP
// it derives a 0/1 dual for the unfolded pair, assigning value 1 to
// S^i_f = {e_f : e in S^i, w(e) >= f} on the first side and to
// T^i_f = {e_{w(e)+1-f} : e in T^i, w(e) >= f} on the second.
DualPair unweighted_dual(const ChainDual& yp, const ChainDual& zp,
                         const UnfoldedInstance& unfolded);

// Every copy is covered at least once.
bool unfolded_dual_feasible(const DualPair& duals,
                            const UnfoldedInstance& unfolded);

// f(y, z) via the unfolded rank oracles.
int64_t unfolded_dual_value(const DualPair& duals,
                            const UnfoldedInstance& unfolded);

}  // namespace matroidx

#endif  // MATROIDX_DUALS_HPP
