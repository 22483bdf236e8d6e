// Copyright 2026 The bdorder Authors
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

#include "bdorder/degree_table.hpp"

#include <cstdint>

#include <json.hpp>

#include "bdorder/error.hpp"
#include "degree_table_data.hpp"

namespace bdorder {

namespace {

DegreeTable load() {
  DegreeTable table;
  try {
    const auto doc = nlohmann::json::parse(detail::kDegreeTableJson);
    table.version = doc.at("version").get<int>();
    table.provenance = doc.value("provenance", "");
    for (const auto& [name, entry] : doc.at("groups").items()) {
      CoxeterGroupData g;
      g.name = name;
      g.degrees = entry.at("degrees").get<std::vector<int>>();
      g.order = BigInt(entry.at("order").get<std::int64_t>());
      table.groups.push_back(std::move(g));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("degree table: ") + e.what());
  }
  return table;
}

}  // namespace

const DegreeTable& degree_table() {
  static const DegreeTable table = load();
  return table;
}

const CoxeterGroupData& coxeter_group(std::string_view name) {
  for (const auto& g : degree_table().groups) {
    if (g.name == name) return g;
  }
  throw DomainError("unknown Coxeter group '" + std::string(name) + "'");
}

BigInt product_of_degrees(const std::vector<int>& degrees) {
  BigInt p = 1;
  for (int d : degrees) p *= d;
  return p;
}

}  // namespace bdorder
