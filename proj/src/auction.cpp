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

#include "matroidx/auction.hpp"

#include <algorithm>

#include "matroidx/solvers.hpp"

namespace matroidx {

namespace {

// All weights live on the common grid 1/denominator, so the state is plain
// integer arithmetic: after p bumps w_a = w - floor(p/2)*q and
// w_b = ceil(p/2)*q with q = eps*(1-eps)*w.
struct AuctionState {
  const WeightedInstance* inst;
  Rational epsilon;
  int64_t cap = 0;
  BigInt denominator = 1;
  std::vector<int64_t> prices;
  std::vector<BigInt> weight;  // numerators of w(e)
  std::vector<BigInt> bump;    // numerators of q_e

  BigInt weight_a(ElementId e) const {
    return weight[e] - BigInt(prices[e] / 2) * bump[e];
  }
  BigInt weight_b(ElementId e) const {
    return BigInt((prices[e] + 1) / 2) * bump[e];
  }
};

std::vector<BigInt> materialize(const AuctionState& state, bool side_a) {
  std::vector<BigInt> out(state.inst->ground_size(), 0);
  state.inst->support.for_each([&](ElementId e) {
    out[e] = side_a ? state.weight_a(e) : state.weight_b(e);
  });
  return out;
}

constexpr int64_t kNoEvent = std::numeric_limits<int64_t>::max();

int sign_of(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// First s >= s_min with sign(start + s * delta) different from `reference`;
// kNoEvent when the progression never flips.
int64_t progression_flip(const BigInt& start, const BigInt& delta,
                         int reference, int64_t s_min) {
  if (delta == 0) {
    return sign_of(start) != reference ? s_min : kNoEvent;
  }
  if (sign_of(start) != reference) return s_min;
  if (reference != 0 && sign_of(delta) == reference) return kNoEvent;
  BigInt s = ceil_div(boost::multiprecision::abs(start),
                      boost::multiprecision::abs(delta));
  if (s < s_min) s = s_min;
  if (reference == 0 && s == 0) s = std::max<int64_t>(s_min, 1);
  return static_cast<int64_t>(s);
}

// Weight trajectories under repeated bumps are staircases: at even offsets
// t = 2s the pair difference is d0 + s*(Qe - Qf), at odd offsets the same
// progression shifted by a parity constant. The first t >= 1 whose sign
// differs from sign(d0) is exactly computable.
int64_t pair_first_flip(const BigInt& d0, const BigInt& q_e_eff,
                        const BigInt& q_f_eff, bool pe_odd, bool pf_odd) {
  BigInt delta = q_e_eff - q_f_eff;
  BigInt parity_shift =
      (pe_odd ? q_e_eff : BigInt(0)) - (pf_odd ? q_f_eff : BigInt(0));
  int reference = sign_of(d0);

  int64_t best = kNoEvent;
  int64_t even_s = progression_flip(d0, delta, reference, 1);
  if (even_s != kNoEvent && even_s < kNoEvent / 2) best = 2 * even_s;
  int64_t odd_s = progression_flip(d0 + parity_shift, delta, reference, 0);
  if (odd_s != kNoEvent && odd_s < kNoEvent / 2) {
    best = std::min(best, 2 * odd_s + 1);
  }
  return best;
}

// Largest k such that bumping every element of X k times leaves every
// pairwise weight comparison (both sides), every cap test and every
// zero-b-weight status unchanged for all intermediate steps 1..k-1.
int64_t safe_jump(const AuctionState& state, const std::vector<ElementId>& x,
                  const std::vector<ElementId>& support) {
  int64_t k = kNoEvent;
  for (ElementId e : x) {
    k = std::min(k, state.cap - state.prices[e]);
    // w_b turns positive on the first bump.
    if (state.prices[e] == 0) k = std::min<int64_t>(k, 1);
  }

  ElementSet in_x(state.prices.size());
  for (ElementId e : x) in_x.add(e);
  const BigInt zero(0);
  for (ElementId e : x) {
    if (k <= 1) return 1;
    bool pe_odd = (state.prices[e] & 1) != 0;
    BigInt wa_e = state.weight_a(e);
    BigInt wb_e = state.weight_b(e);
    for (ElementId f : support) {
      if (f == e) continue;
      bool f_moves = in_x.contains(f);
      bool pf_odd = f_moves && (state.prices[f] & 1) != 0;
      const BigInt& qf_a = f_moves ? state.bump[f] : zero;
      // floor ticks on the a side, ceiling ticks on the b side: the extra
      // odd-offset tick lands on the opposite parity.
      k = std::min(k, pair_first_flip(wa_e - state.weight_a(f),
                                      -state.bump[e], -qf_a, pe_odd, pf_odd));
      k = std::min(k, pair_first_flip(wb_e - state.weight_b(f),
                                      state.bump[e], qf_a, !pe_odd,
                                      f_moves && !pf_odd));
    }
  }
  return std::max<int64_t>(std::min(k, kNoEvent), 1);
}

void check_invariants(const AuctionState& state, const ElementSet& base_a,
                      const ElementSet& base_b) {
  state.inst->support.for_each([&](ElementId e) {
    if (state.prices[e] > state.cap) {
      throw ContractError("auction price exceeded its cap");
    }
    BigInt sum = state.weight_a(e) + state.weight_b(e);
    if (sum != state.weight[e] && sum != state.weight[e] + state.bump[e]) {
      throw ContractError("auction weight-sum dichotomy violated");
    }
  });
  base_b.minus(base_a).for_each([&](ElementId e) {
    if (state.weight_b(e) != 0) {
      throw ContractError("element outside S_a carries positive b-weight");
    }
  });
}

Rational over_denominator(const BigInt& numerator, const BigInt& denominator) {
  return Rational(numerator, denominator);
}

}  // namespace

ElementSet max_weight_base_scaled(const MatroidOracle& m,
                                  const std::vector<BigInt>& numerators,
                                  const ElementSet& candidates,
                                  const ElementSet* prefer) {
  std::vector<ElementId> order;
  candidates.for_each([&](ElementId id) {
    if (numerators[id] > 0) order.push_back(id);
  });
  std::sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    if (numerators[a] != numerators[b]) return numerators[a] > numerators[b];
    bool pa = prefer != nullptr && prefer->contains(a);
    bool pb = prefer != nullptr && prefer->contains(b);
    if (pa != pb) return pa;
    return a < b;
  });
  ElementSet base(m.ground_size());
  for (ElementId id : order) {
    base.add(id);
    if (!m.is_independent(base)) base.remove(id);
  }
  return base;
}

AuctionResult auction_additive(const WeightedInstance& inst,
                               const Rational& epsilon,
                               const AuctionOptions& options) {
  if (epsilon <= 0 || epsilon >= 1) {
    throw InputError("auction epsilon must lie in (0, 1)");
  }
  inst.validate();

  AuctionState state;
  state.inst = &inst;
  state.epsilon = epsilon;
  state.cap = 2 * static_cast<int64_t>(ceil_rational(Rational(1) / epsilon));
  state.prices.assign(inst.ground_size(), 0);
  state.weight.assign(inst.ground_size(), 0);
  state.bump.assign(inst.ground_size(), 0);

  Rational rate = epsilon * (Rational(1) - epsilon);
  state.denominator = denominator(rate);
  inst.support.for_each([&](ElementId e) {
    state.denominator = boost::multiprecision::lcm(
        state.denominator,
        denominator(rate * inst.weights[e]));
    state.denominator = boost::multiprecision::lcm(
        state.denominator, denominator(inst.weights[e]));
  });
  inst.support.for_each([&](ElementId e) {
    state.weight[e] = numerator(inst.weights[e]) *
                      (state.denominator / denominator(inst.weights[e]));
    Rational q = rate * inst.weights[e];
    state.bump[e] =
        numerator(q) * (state.denominator / denominator(q));
  });

  const std::vector<ElementId> support = inst.support.to_vector();
  const Rational stop_size = epsilon * Rational(support.size());

  AuctionResult result;
  ElementSet base_a = max_weight_base_scaled(
      *inst.m1, materialize(state, true), inst.support, nullptr);
  ElementSet base_b = max_weight_base_scaled(
      *inst.m2, materialize(state, false), inst.support, nullptr);
  result.rounds = 1;

  while (true) {
    std::vector<ElementId> x;
    base_a.minus(base_b).for_each([&](ElementId e) {
      if (state.prices[e] < state.cap) x.push_back(e);
    });
    if (Rational(x.size()) <= stop_size) {
      result.set = base_a.intersect(base_b);
      result.base_a = base_a;
      result.base_b = base_b;
      result.prices = state.prices;
      result.weight_a.assign(inst.ground_size(), 0);
      result.weight_b.assign(inst.ground_size(), 0);
      inst.support.for_each([&](ElementId e) {
        result.weight_a[e] =
            over_denominator(state.weight_a(e), state.denominator);
        result.weight_b[e] =
            over_denominator(state.weight_b(e), state.denominator);
      });
      return result;
    }

    int64_t k = options.force_single_step ? 1 : safe_jump(state, x, support);
    for (ElementId e : x) state.prices[e] += k;
    result.iterations += static_cast<uint64_t>(k);

    base_a = max_weight_base_scaled(*inst.m1, materialize(state, true),
                                    inst.support, &base_a);
    base_b = max_weight_base_scaled(*inst.m2, materialize(state, false),
                                    inst.support, &base_b);
    ++result.rounds;
    if (options.check_invariants) check_invariants(state, base_a, base_b);
  }
}

Rational auction_splitting_bound(const WeightedInstance& inst,
                                 const Rational& epsilon,
                                 const AuctionResult& result) {
  // w_b'(e) = w_b(e) - q_e whenever w_a + w_b != w (odd price), making
  // (w_a, w_b') an exact splitting of w.
  std::vector<Rational> split_b(inst.ground_size(), 0);
  inst.support.for_each([&](ElementId e) {
    Rational q = epsilon * (Rational(1) - epsilon) * inst.weights[e];
    split_b[e] = result.weight_b[e];
    if (result.prices[e] % 2 != 0) split_b[e] -= q;
  });
  ElementSet best_b = max_weight_base(*inst.m2, split_b, inst.support);
  Rational total = 0;
  result.base_a.for_each([&](ElementId e) { total += result.weight_a[e]; });
  best_b.for_each([&](ElementId e) { total += split_b[e]; });
  return total;
}

}  // namespace matroidx
