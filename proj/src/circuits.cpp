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

#include "matroidx/circuits.hpp"

#include <bit>

#include "matroidx/errors.hpp"

namespace matroidx {

ElementSet fundamental_circuit(const MatroidOracle& m,
                               const ElementSet& independent, ElementId e) {
  if (independent.contains(e)) {
    throw PreconditionError("fundamental_circuit: e already in I");
  }
  if (!m.is_independent(independent)) {
    throw PreconditionError("fundamental_circuit: I is dependent");
  }
  ElementSet extended = independent;
  extended.add(e);
  if (m.is_independent(extended)) {
    throw PreconditionError("fundamental_circuit: I + e is independent");
  }
  // x in I belongs to the circuit iff removing it restores independence.
  ElementSet circuit(m.ground_size());
  circuit.add(e);
  independent.for_each([&](ElementId x) {
    ElementSet probe = extended;
    probe.remove(x);
    if (m.is_independent(probe)) circuit.add(x);
  });
  return circuit;
}

std::string AxiomReport::to_string() const {
  if (passed) return "axioms: pass";
  return "axioms: FAIL (" + violation + ") witness " + witness;
}

AxiomReport verify_matroid_axioms(const MatroidOracle& m) {
  std::vector<ElementId> ids = m.universe().to_vector();
  const size_t u = ids.size();
  if (u > 12) {
    throw BudgetError("axiom check is exhaustive; universe of " +
                      std::to_string(u) + " exceeds 12");
  }
  const uint32_t full = (u == 0) ? 0 : ((uint32_t{1} << u) - 1);

  auto to_set = [&](uint32_t mask) {
    ElementSet s(m.ground_size());
    for (size_t i = 0; i < u; ++i) {
      if ((mask >> i) & 1u) s.add(ids[i]);
    }
    return s;
  };

  std::vector<char> ind(full + 1);
  for (uint32_t mask = 0; mask <= full; ++mask) {
    ind[mask] = m.is_independent(to_set(mask)) ? 1 : 0;
    if (u == 0) break;
  }

  AxiomReport report;
  if (!ind[0]) {
    report.passed = false;
    report.violation = "empty set dependent";
    report.witness = "{}";
    return report;
  }
  if (u == 0) return report;

  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (!ind[mask]) continue;
    uint32_t rest = mask;
    while (rest != 0) {
      uint32_t bit = rest & (~rest + 1);
      if (!ind[mask ^ bit]) {
        report.passed = false;
        report.violation = "downward closure";
        report.witness = to_set(mask).to_string() + " independent but " +
                         to_set(mask ^ bit).to_string() + " dependent";
        return report;
      }
      rest ^= bit;
    }
  }

  // Size of the largest independent subset of each mask.
  std::vector<uint8_t> rmax(full + 1, 0);
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if (ind[mask]) {
      rmax[mask] = static_cast<uint8_t>(std::popcount(mask));
      continue;
    }
    uint8_t best = 0;
    uint32_t rest = mask;
    while (rest != 0) {
      uint32_t bit = rest & (~rest + 1);
      best = std::max(best, rmax[mask ^ bit]);
      rest ^= bit;
    }
    rmax[mask] = best;
  }

  // Exchange, via the equal-maximal-size characterization: an independent I
  // that is maximal inside some S with rmax(S) > |I| is a violation. It is
  // enough to test the largest such S per I.
  for (uint32_t mask = 0; mask <= full; ++mask) {
    if (!ind[mask]) continue;
    uint32_t addable = 0;
    uint32_t outside = full ^ mask;
    uint32_t rest = outside;
    while (rest != 0) {
      uint32_t bit = rest & (~rest + 1);
      if (ind[mask | bit]) addable |= bit;
      rest ^= bit;
    }
    uint32_t widest = mask | (outside & ~addable);
    if (rmax[widest] > std::popcount(mask)) {
      report.passed = false;
      report.violation = "exchange";
      report.witness = to_set(mask).to_string() + " maximal in " +
                       to_set(widest).to_string() + " but a larger subset is independent";
      return report;
    }
    if (mask == full) break;
  }
  return report;
}

}  // namespace matroidx
