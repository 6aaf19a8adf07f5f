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

#include <doctest.h>

#include "fixtures.hpp"
#include "generator.hpp"
#include "matroidx/circuits.hpp"
#include "matroidx/rng.hpp"
#include "suites.hpp"

using namespace matroidx;
using matroidx::testing::triangle_graphic;

TEST_CASE("independence queries on the base families") {
  auto uniform = make_uniform_matroid(4, 2);
  CHECK_FALSE(uniform->is_independent(ElementSet(4, {0, 1, 2})));
  CHECK(uniform->is_independent(ElementSet(4, {0, 1})));

  auto triangle = triangle_graphic();
  CHECK_FALSE(triangle->is_independent(ElementSet(3, {0, 1, 2})));
  CHECK(triangle->is_independent(ElementSet(3, {0, 1})));

  auto partition = make_partition_matroid({0, 0, 1}, {1, 1});
  CHECK(partition->is_independent(ElementSet(3, {0, 2})));
  CHECK_FALSE(partition->is_independent(ElementSet(3, {0, 1})));

  CHECK_THROWS_AS(uniform->is_independent(ElementSet(9, {8})), InputError);
}

TEST_CASE("rank queries on the base families") {
  auto uniform = make_uniform_matroid(4, 2);
  CHECK(uniform->rank(ElementSet(4)) == 0);

  auto triangle = triangle_graphic();
  CHECK(triangle->rank(ElementSet(3, {0, 1, 2})) == 2);

  // Columns (1,0), (0,1), (1,1) over GF(2) span a rank-2 space.
  auto gf2 = make_linear_gf2_matroid(2, {0b01, 0b10, 0b11});
  CHECK(gf2->rank(ElementSet(3, {0, 1, 2})) == 2);
  CHECK(gf2->is_independent(ElementSet(3, {0, 1})));
  CHECK_FALSE(gf2->is_independent(ElementSet(3, {0, 1, 2})));
}

TEST_CASE("ledger counts base-oracle queries") {
  auto ledger = make_ledger();
  auto m = make_uniform_matroid(4, 2, ledger);
  m->is_independent(ElementSet(4, {0}));
  m->is_independent(ElementSet(4, {0, 1}));
  m->rank(ElementSet(4, {0, 1, 2}));
  LedgerCounts counts = ledger->snapshot();
  CHECK(counts.independence_calls == 2);
  CHECK(counts.rank_calls == 1);
}

TEST_CASE("restriction masks ids and delegates") {
  auto uniform = make_uniform_matroid(4, 2);
  auto view = restrict_matroid(uniform, ElementSet(4, {0, 1}));
  CHECK(view->is_independent(ElementSet(4, {0, 1})));
  CHECK_THROWS_AS(view->is_independent(ElementSet(4, {2})), InputError);

  auto triangle = triangle_graphic();
  auto two_edges = restrict_matroid(triangle, ElementSet(3, {0, 1}));
  CHECK(two_edges->rank(ElementSet(3, {0, 1})) == 2);

  auto empty_view = restrict_matroid(uniform, ElementSet(4));
  CHECK(empty_view->rank(ElementSet(4)) == 0);

  // Delegation is 1:1 on the underlying ledger.
  LedgerCounts before = uniform->ledger()->snapshot();
  view->is_independent(ElementSet(4, {0}));
  CHECK(uniform->ledger()->snapshot().independence_calls ==
        before.independence_calls + 1);
}

TEST_CASE("contraction fixes a greedy base") {
  auto triangle = triangle_graphic();
  auto contracted = contract_matroid(triangle, ElementSet(3, {0}));
  // Both remaining edges close a cycle with the contracted one.
  CHECK_FALSE(contracted->is_independent(ElementSet(3, {1, 2})));
  CHECK(contracted->is_independent(ElementSet(3, {1})));
  CHECK(contracted->rank(ElementSet(3, {1, 2})) == 1);

  auto uniform = make_uniform_matroid(3, 2);
  auto u_contracted = contract_matroid(uniform, ElementSet(3, {0}));
  CHECK_FALSE(u_contracted->is_independent(ElementSet(3, {1, 2})));
  CHECK(u_contracted->is_independent(ElementSet(3, {1})));

  // Contracting nothing changes nothing.
  auto same = contract_matroid(uniform, ElementSet(3));
  CHECK(same->is_independent(ElementSet(3, {1, 2})));
  CHECK(same->rank(ElementSet(3, {0, 1, 2})) == 2);

  CHECK_THROWS_AS(u_contracted->is_independent(ElementSet(3, {0, 1})),
                  InputError);
}

TEST_CASE("fundamental circuits") {
  auto triangle = triangle_graphic();
  CHECK(fundamental_circuit(*triangle, ElementSet(3, {0, 1}), 2) ==
        ElementSet(3, {0, 1, 2}));

  auto uniform = make_uniform_matroid(3, 1);
  CHECK(fundamental_circuit(*uniform, ElementSet(3, {0}), 1) ==
        ElementSet(3, {0, 1}));

  auto partition = make_partition_matroid({0, 0}, {1});
  CHECK(fundamental_circuit(*partition, ElementSet(2, {0}), 1) ==
        ElementSet(2, {0, 1}));

  CHECK_THROWS_AS(fundamental_circuit(*uniform, ElementSet(3), 1),
                  PreconditionError);
  CHECK_THROWS_AS(
      fundamental_circuit(*make_uniform_matroid(3, 1), ElementSet(3, {0, 1}), 2),
      PreconditionError);
}

TEST_CASE("circuit properties on random instances") {
  Rng rng(23);
  for (int round = 0; round < 60; ++round) {
    size_t n = static_cast<size_t>(rng.range(3, 8));
    MatroidSpec spec = random_matroid(rng, n, "random");
    OraclePtr m = spec.build(n);

    // Grow an independent set, then probe a spanned element if any.
    std::vector<ElementId> order = m->universe().to_vector();
    rng.shuffle(order);
    ElementSet ind(n);
    for (ElementId e : order) {
      ind.add(e);
      if (!m->is_independent(ind)) ind.remove(e);
    }
    for (ElementId e : order) {
      if (ind.contains(e)) continue;
      ElementSet probe = ind;
      probe.add(e);
      if (m->is_independent(probe)) continue;
      ElementSet circuit = fundamental_circuit(*m, ind, e);
      CHECK_FALSE(m->is_independent(circuit));
      circuit.for_each([&](ElementId x) {
        ElementSet smaller = circuit;
        smaller.remove(x);
        CHECK(m->is_independent(smaller));
      });
    }
  }
}

TEST_CASE("axiom invariants across families") {
  Rng rng(29);
  for (int round = 0; round < 40; ++round) {
    size_t n = static_cast<size_t>(rng.range(2, 9));
    MatroidSpec spec = random_matroid(rng, n, "random");
    OraclePtr m = spec.build(n);
    CHECK(verify_matroid_axioms(*m).passed);

    // Downward closure, rank monotonicity, submodularity on random pairs.
    for (int trial = 0; trial < 20; ++trial) {
      ElementSet a(n), b(n);
      for (size_t i = 0; i < n; ++i) {
        if (rng.chance(1, 2)) a.add(static_cast<ElementId>(i));
        if (rng.chance(1, 2)) b.add(static_cast<ElementId>(i));
      }
      ElementSet sub = a.intersect(b);
      if (m->is_independent(a)) CHECK(m->is_independent(sub));
      size_t ra = m->rank(a);
      size_t rb = m->rank(b);
      CHECK(m->rank(sub) <= ra);
      CHECK(ra <= m->rank(a.unite(b)));
      CHECK(ra + rb >= m->rank(a.unite(b)) + m->rank(sub));
      CHECK(ra <= a.size());
    }
  }
}

TEST_CASE("axiom checker rejects the corrupted oracle") {
  AxiomReport report = verify_matroid_axioms(*make_corrupt_oracle(4));
  CHECK_FALSE(report.passed);
  CHECK_FALSE(report.witness.empty());
}

TEST_CASE("axiom checker refuses large universes") {
  CHECK_THROWS_AS(verify_matroid_axioms(*make_uniform_matroid(13, 2)),
                  BudgetError);
}

TEST_CASE("circuit elimination on random instances") {
  // Distinct circuits sharing an element leave a circuit when it is removed.
  Rng rng(139);
  int checked = 0;
  for (int round = 0; round < 120 && checked < 25; ++round) {
    size_t n = static_cast<size_t>(rng.range(3, 8));
    MatroidSpec spec = random_matroid(rng, n, "random");
    OraclePtr m = spec.build(n);

    std::vector<ElementSet> circuits;
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<ElementId> order = m->universe().to_vector();
      rng.shuffle(order);
      ElementSet ind(n);
      for (ElementId e : order) {
        ind.add(e);
        if (!m->is_independent(ind)) ind.remove(e);
      }
      for (ElementId e : order) {
        if (ind.contains(e)) continue;
        ElementSet probe = ind;
        probe.add(e);
        if (!m->is_independent(probe)) {
          circuits.push_back(fundamental_circuit(*m, ind, e));
        }
      }
    }
    for (size_t i = 0; i < circuits.size(); ++i) {
      for (size_t j = i + 1; j < circuits.size(); ++j) {
        if (circuits[i] == circuits[j]) continue;
        ElementSet shared = circuits[i].intersect(circuits[j]);
        if (shared.empty()) continue;
        ElementSet merged = circuits[i].unite(circuits[j]);
        merged.remove(shared.first());
        CHECK_FALSE(m->is_independent(merged));
        ++checked;
      }
    }
  }
  CHECK(checked > 0);
}
