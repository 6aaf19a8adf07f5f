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

#ifndef MATROIDX_AUCTION_HPP
#define MATROIDX_AUCTION_HPP

#include "matroidx/instance.hpp"

namespace matroidx {

struct AuctionOptions {
  // Re-derive the state invariants after every iteration (price cap,
  // weight-sum dichotomy, zero b-weight outside S_a).
  bool check_invariants = false;
  // Disable the event jump and run one price increment per loop iteration;
  // used to differential-test the jump.
  bool force_single_step = false;
};

struct AuctionResult {
  ElementSet set;        // S_a intersect S_b at termination
  ElementSet base_a;     // final S_a
  ElementSet base_b;     // final S_b
  std::vector<int64_t> prices;
  std::vector<Rational> weight_a;
  std::vector<Rational> weight_b;
  uint64_t iterations = 0;  // price rounds, counting jumped ones
  uint64_t rounds = 0;      // base recomputations actually performed
};

// Price-driven additive approximation: repeatedly bumps the prices of
// contested elements (in S_a but not S_b, price below 2*ceil(1/eps)) and
// recomputes maximum-weight bases, returning S_a intersect S_b once at most
// eps*n contested elements remain. Guarantees
// w(S) >= w(S*) - 3*W*eps*n for W the maximum weight.
//
// Each element's pending weights are a closed function of its price: after p
// bumps, w_a = w - floor(p/2)*q and w_b = ceil(p/2)*q with
// q = eps*(1-eps)*w. When no structural change (base order, cap, zero
// b-weight transition) can occur for k rounds, the k rounds are applied at
// once; the resulting trace is step-for-step identical to the plain loop.
AuctionResult auction_additive(const WeightedInstance& inst,
                               const Rational& epsilon,
                               const AuctionOptions& options = {});

// Upper bound on the optimum from the terminal state, via the explicit
// weight splitting (w_a, w_b') of the analysis; OPT <= returned value.
Rational auction_splitting_bound(const WeightedInstance& inst,
                                 const Rational& epsilon,
                                 const AuctionResult& result);

}  // namespace matroidx

#endif  // MATROIDX_AUCTION_HPP
