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

#include "bench.hpp"
#include "generator.hpp"
#include "instance_json.hpp"
#include "matroidx/rng.hpp"
#include "suites.hpp"

using namespace matroidx;

TEST_CASE("instance round trip preserves oracle answers") {
  Rng rng(127);
  for (uint64_t c = 0; c < 20; ++c) {
    GeneratorSpec gen;
    gen.n = static_cast<size_t>(rng.range(1, 10));
    gen.seed = rng.next();
    gen.weights.kind = WeightDistribution::Kind::kLogUniform;
    gen.weights.aspect_ratio = 30;
    InstanceSpec spec = generate_instance(gen);
    InstanceSpec reparsed = parse_instance(serialize_instance(spec));
    WeightedInstance a = spec.build();
    WeightedInstance b = reparsed.build();
    REQUIRE(a.ground_size() == b.ground_size());
    CHECK(a.weights == b.weights);
    const uint32_t full = (uint32_t{1} << a.ground_size()) - 1;
    for (uint32_t mask = 0; mask <= full; ++mask) {
      ElementSet set(a.ground_size());
      for (size_t i = 0; i < a.ground_size(); ++i) {
        if ((mask >> i) & 1u) set.add(static_cast<ElementId>(i));
      }
      CHECK(a.m1->is_independent(set) == b.m1->is_independent(set));
      CHECK(a.m2->is_independent(set) == b.m2->is_independent(set));
      if (mask == full) break;
    }
  }
}

TEST_CASE("generation is deterministic in the seed") {
  GeneratorSpec gen;
  gen.n = 10;
  gen.seed = 7;
  gen.family1 = "graphic";
  gen.family2 = "partition";
  std::string once = serialize_instance(generate_instance(gen));
  std::string twice = serialize_instance(generate_instance(gen));
  CHECK(once == twice);
  gen.seed = 8;
  CHECK(serialize_instance(generate_instance(gen)) != once);
}

TEST_CASE("unit weight bound generates all-ones") {
  GeneratorSpec gen;
  gen.n = 6;
  gen.seed = 3;
  gen.weights.kind = WeightDistribution::Kind::kUniformInt;
  gen.weights.max_weight = 1;
  InstanceSpec spec = generate_instance(gen);
  for (const Rational& w : spec.weights) CHECK(w == 1);
}

TEST_CASE("log-uniform weights respect the aspect ratio") {
  GeneratorSpec gen;
  gen.n = 40;
  gen.seed = 11;
  gen.weights.kind = WeightDistribution::Kind::kLogUniform;
  gen.weights.aspect_ratio = 100;
  InstanceSpec spec = generate_instance(gen);
  WeightedInstance inst = spec.build();
  CHECK(inst.aspect_ratio() <= Rational(100));
}

TEST_CASE("malformed instances raise parse errors") {
  CHECK_THROWS_AS(parse_instance("{"), ParseError);
  CHECK_THROWS_AS(parse_instance("{\"n\": 1}"), ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"n":1,"matroid1":{"family":"moebius"},
        "matroid2":{"family":"uniform","k":1},"weights":["1"]})"),
      ParseError);
  CHECK_THROWS_AS(
      parse_instance(R"({"n":2,"matroid1":{"family":"uniform","k":1},
        "matroid2":{"family":"uniform","k":1},"weights":["1"]})"),
      ParseError);
}

TEST_CASE("bench emits rows and a monotone query summary") {
  BenchSpec spec;
  spec.family1 = "partition";
  spec.family2 = "uniform";
  spec.n = 5;
  spec.max_weights = {1, 2, 4, 8};
  spec.epsilons = {Rational(1, 4)};
  spec.solvers = {"exact", "greedy"};
  spec.count = 2;
  spec.seed = 5;
  BenchOutput out = run_bench(spec);
  // Header plus one row per (W, eps, solver, instance).
  size_t rows = std::count(out.csv.begin(), out.csv.end(), '\n');
  CHECK(rows == 1 + 4 * 2 * 2);
  CHECK(out.summary.find("NOT monotone") == std::string::npos);
}

TEST_CASE("suite names are stable") {
  CHECK(suite_names().size() == 9);
  CHECK_THROWS_AS(run_suite("nonsense", 1, 1), InputError);
}

TEST_CASE("corrupt fixture fails the axioms suite") {
  SuiteResult result = run_suite("axioms", 1, 1, /*corrupt_fixture=*/true);
  CHECK_FALSE(result.passed);
  CHECK_FALSE(result.failure.empty());
}

TEST_CASE("minimizer shrinks to the failure core") {
  WeightedInstance inst;
  inst.m1 = make_uniform_matroid(5, 5);
  inst.m2 = make_uniform_matroid(5, 5);
  inst.weights.assign(5, Rational(1));
  inst.support = ElementSet(5, {0, 1, 2, 3, 4});
  auto fails = [](const WeightedInstance& sub) {
    return sub.support.contains(1) && sub.support.contains(3);
  };
  CHECK(minimize_support(inst, fails) == ElementSet(5, {1, 3}));
}
