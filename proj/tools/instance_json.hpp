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

#ifndef MATROIDX_TOOLS_INSTANCE_JSON_HPP
#define MATROIDX_TOOLS_INSTANCE_JSON_HPP

#include <string>
#include <vector>

#include "matroidx/instance.hpp"

namespace matroidx {

// Declarative matroid description matching the JSON schema; oracles are
// built from it on demand.
struct MatroidSpec {
  std::string family;  // uniform | partition | graphic | linear_gf2
  uint32_t k = 0;
  std::vector<uint32_t> blocks;
  std::vector<uint32_t> caps;
  uint32_t vertices = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges;
  uint32_t rows = 0;
  std::vector<std::string> columns;  // bitstrings, most significant row first

  OraclePtr build(size_t n, LedgerPtr ledger = nullptr) const;
};

struct InstanceSpec {
  size_t n = 0;
  MatroidSpec matroid1;
  MatroidSpec matroid2;
  std::vector<Rational> weights;

  WeightedInstance build() const;
};

// Schema: { "n": int, "matroid1": {...}, "matroid2": {...},
//           "weights": ["p/q", ...] }
std::string serialize_instance(const InstanceSpec& spec);
InstanceSpec parse_instance(const std::string& json_text);

InstanceSpec load_instance_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string read_text_file(const std::string& path);

}  // namespace matroidx

#endif  // MATROIDX_TOOLS_INSTANCE_JSON_HPP
