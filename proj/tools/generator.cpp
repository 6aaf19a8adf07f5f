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

#include "generator.hpp"

#include <algorithm>

namespace matroidx {

WeightDistribution parse_weight_distribution(const std::string& text) {
  WeightDistribution dist;
  if (text.rfind("uniform:", 0) == 0) {
    dist.kind = WeightDistribution::Kind::kUniformInt;
    dist.max_weight = std::strtoll(text.c_str() + 8, nullptr, 10);
    if (dist.max_weight < 1) throw ParseError("uniform weight bound below 1");
    return dist;
  }
  if (text.rfind("loguniform:", 0) == 0) {
    dist.kind = WeightDistribution::Kind::kLogUniform;
    dist.aspect_ratio = std::strtoll(text.c_str() + 11, nullptr, 10);
    if (dist.aspect_ratio < 1) throw ParseError("aspect ratio below 1");
    return dist;
  }
  throw ParseError("bad weight distribution: " + text);
}

namespace {

const char* kFamilies[] = {"uniform", "partition", "graphic", "linear_gf2"};

}  // namespace

MatroidSpec random_matroid(Rng& rng, size_t n, const std::string& family) {
  MatroidSpec m;
  m.family = family == "random" ? kFamilies[rng.below(4)] : family;
  if (m.family == "uniform") {
    m.k = static_cast<uint32_t>(rng.range(0, static_cast<int64_t>(n)));
  } else if (m.family == "partition") {
    size_t block_count = 1 + rng.below(std::max<size_t>(n, 1));
    m.caps.resize(block_count);
    for (auto& cap : m.caps) cap = static_cast<uint32_t>(rng.range(0, 2));
    m.blocks.resize(n);
    for (auto& b : m.blocks) {
      b = static_cast<uint32_t>(rng.below(block_count));
    }
  } else if (m.family == "graphic") {
    int64_t max_vertices =
        std::max<int64_t>(2, std::min<int64_t>(n + 1, 6));
    m.vertices = static_cast<uint32_t>(rng.range(2, max_vertices));
    for (size_t i = 0; i < n; ++i) {
      uint32_t u = static_cast<uint32_t>(rng.below(m.vertices));
      uint32_t v = static_cast<uint32_t>(rng.below(m.vertices));
      if (u == v && !rng.chance(1, 8)) {
        v = (v + 1) % m.vertices;  // keep self-loops rare
      }
      m.edges.emplace_back(u, v);
    }
  } else if (m.family == "linear_gf2") {
    m.rows = static_cast<uint32_t>(rng.range(1, 6));
    for (size_t i = 0; i < n; ++i) {
      uint64_t mask = rng.next() & ((uint64_t{1} << m.rows) - 1);
      std::string bits(m.rows, '0');
      for (size_t r = 0; r < m.rows; ++r) {
        if ((mask >> r) & 1u) bits[r] = '1';
      }
      m.columns.push_back(bits);
    }
  } else {
    throw ParseError("unknown matroid family: " + m.family);
  }
  return m;
}

Rational random_log_uniform_weight(Rng& rng, int64_t aspect_ratio) {
  // Octave first, then a value within it; integer numerators over a small
  // denominator keep the arithmetic exact and reproducible.
  int64_t octaves = 0;
  while ((int64_t{1} << (octaves + 1)) <= aspect_ratio) ++octaves;
  int64_t g = rng.range(0, octaves);
  int64_t lo = int64_t{1} << g;
  int64_t hi = std::min(lo * 2, aspect_ratio);
  int64_t den = int64_t{1} << rng.range(0, 2);  // 1, 2 or 4
  int64_t num = rng.range(lo * den, hi * den);
  return Rational(num, den);
}

InstanceSpec generate_instance(const GeneratorSpec& spec) {
  Rng rng(spec.seed);
  InstanceSpec out;
  out.n = spec.n;
  out.matroid1 = random_matroid(rng, spec.n, spec.family1);
  out.matroid2 = random_matroid(rng, spec.n, spec.family2);
  out.weights.reserve(spec.n);
  for (size_t i = 0; i < spec.n; ++i) {
    if (spec.weights.kind == WeightDistribution::Kind::kUniformInt) {
      out.weights.emplace_back(rng.range(1, spec.weights.max_weight));
    } else {
      out.weights.push_back(
          random_log_uniform_weight(rng, spec.weights.aspect_ratio));
    }
  }
  return out;
}

}  // namespace matroidx
