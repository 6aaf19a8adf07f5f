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

#include "instance_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace matroidx {

using nlohmann::json;

OraclePtr MatroidSpec::build(size_t n, LedgerPtr ledger) const {
  if (family == "uniform") {
    return make_uniform_matroid(n, k, std::move(ledger));
  }
  if (family == "partition") {
    if (blocks.size() != n) throw ParseError("partition blocks size mismatch");
    return make_partition_matroid(blocks, caps, std::move(ledger));
  }
  if (family == "graphic") {
    if (edges.size() != n) throw ParseError("graphic edges size mismatch");
    return make_graphic_matroid(vertices, edges, std::move(ledger));
  }
  if (family == "linear_gf2") {
    if (columns.size() != n) throw ParseError("gf2 columns size mismatch");
    std::vector<uint64_t> masks;
    masks.reserve(columns.size());
    for (const std::string& bits : columns) {
      if (bits.size() != rows) throw ParseError("gf2 column length mismatch");
      uint64_t mask = 0;
      for (size_t r = 0; r < bits.size(); ++r) {
        if (bits[r] == '1') {
          mask |= uint64_t{1} << r;
        } else if (bits[r] != '0') {
          throw ParseError("gf2 column must be a bitstring");
        }
      }
      masks.push_back(mask);
    }
    return make_linear_gf2_matroid(rows, masks, std::move(ledger));
  }
  throw ParseError("unknown matroid family: " + family);
}

WeightedInstance InstanceSpec::build() const {
  WeightedInstance inst;
  inst.m1 = matroid1.build(n);
  inst.m2 = matroid2.build(n);
  inst.weights = weights;
  inst.support = ElementSet(n);
  for (size_t i = 0; i < n; ++i) inst.support.add(static_cast<ElementId>(i));
  inst.validate();
  return inst;
}

namespace {

json matroid_to_json(const MatroidSpec& m) {
  json out;
  out["family"] = m.family;
  if (m.family == "uniform") {
    out["k"] = m.k;
  } else if (m.family == "partition") {
    out["blocks"] = m.blocks;
    out["caps"] = m.caps;
  } else if (m.family == "graphic") {
    out["vertices"] = m.vertices;
    json edges = json::array();
    for (const auto& [u, v] : m.edges) edges.push_back({u, v});
    out["edges"] = edges;
  } else if (m.family == "linear_gf2") {
    out["rows"] = m.rows;
    out["columns"] = m.columns;
  }
  return out;
}

MatroidSpec matroid_from_json(const json& j) {
  MatroidSpec m;
  m.family = j.at("family").get<std::string>();
  if (m.family == "uniform") {
    m.k = j.at("k").get<uint32_t>();
  } else if (m.family == "partition") {
    m.blocks = j.at("blocks").get<std::vector<uint32_t>>();
    m.caps = j.at("caps").get<std::vector<uint32_t>>();
  } else if (m.family == "graphic") {
    m.vertices = j.at("vertices").get<uint32_t>();
    for (const auto& e : j.at("edges")) {
      m.edges.emplace_back(e.at(0).get<uint32_t>(), e.at(1).get<uint32_t>());
    }
  } else if (m.family == "linear_gf2") {
    m.rows = j.at("rows").get<uint32_t>();
    m.columns = j.at("columns").get<std::vector<std::string>>();
  } else {
    throw ParseError("unknown matroid family: " + m.family);
  }
  return m;
}

}  // namespace

std::string serialize_instance(const InstanceSpec& spec) {
  json out;
  out["n"] = spec.n;
  out["matroid1"] = matroid_to_json(spec.matroid1);
  out["matroid2"] = matroid_to_json(spec.matroid2);
  json weights = json::array();
  for (const Rational& w : spec.weights) {
    weights.push_back(to_fraction_string(w));
  }
  out["weights"] = weights;
  return out.dump(2) + "\n";
}

InstanceSpec parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
  try {
    InstanceSpec spec;
    spec.n = j.at("n").get<size_t>();
    spec.matroid1 = matroid_from_json(j.at("matroid1"));
    spec.matroid2 = matroid_from_json(j.at("matroid2"));
    for (const auto& w : j.at("weights")) {
      spec.weights.push_back(parse_rational(w.get<std::string>()));
    }
    if (spec.weights.size() != spec.n) {
      throw ParseError("weights length disagrees with n");
    }
    return spec;
  } catch (const json::exception& e) {
    throw ParseError(std::string("instance JSON: ") + e.what());
  }
}

InstanceSpec load_instance_file(const std::string& path) {
  return parse_instance(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

}  // namespace matroidx
