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


#ifndef BDORDER_DEGREE_TABLE_HPP_
#define BDORDER_DEGREE_TABLE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "bdorder/exactmath.hpp"

namespace bdorder {

/// Invariant degrees of an irreducible finite Coxeter group, loaded from the
/// bundled data file.
struct CoxeterGroupData {
  std::string name;
  std::vector<int> degrees;
  BigInt order;  // as recorded in the data file
};

struct DegreeTable {
  int version = 0;
  std::string provenance;
  std::vector<CoxeterGroupData> groups;  // sorted by name
};

/// Parsed once; ParseError if the embedded data is malformed.
const DegreeTable& degree_table();

/// DomainError for an unknown group name.
const CoxeterGroupData& coxeter_group(std::string_view name);

/// Product of the degrees, which equals the group order.
BigInt product_of_degrees(const std::vector<int>& degrees);

}  // namespace bdorder

#endif  // BDORDER_DEGREE_TABLE_HPP_
