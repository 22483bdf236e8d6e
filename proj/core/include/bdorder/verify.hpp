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


#ifndef BDORDER_VERIFY_HPP_
#define BDORDER_VERIFY_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace bdorder {

/// Size bounds for one oracle suite run. Unset fields take the suite default.
struct VerifyOptions {
  int dmax = 0;
  int nmax = 0;
  int size = 0;  // dm-identity only
};

struct VerifyResult {
  std::string suite;
  bool passed = true;
  std::size_t checked = 0;
  std::string counterexample;  // first failure, empty on pass
  std::string bounds;          // the bounds actually used
};

/// covers, restrictions, corder-consistency, comporders, dm-identity, ss.
const std::vector<std::string>& verify_suite_names();

/// ParseError for an unknown suite, DomainError for bounds outside the
/// suite's feasibility limits.
VerifyResult run_verify_suite(std::string_view suite, VerifyOptions options = {});

VerifyResult verify_covers(int dmax, int nmax);
VerifyResult verify_restrictions(int dmax, int nmax);
VerifyResult verify_corder_consistency(int dmax, int nmax);
VerifyResult verify_comporders(int dmax, int nmax);
VerifyResult verify_dm_identity(int max_size);
VerifyResult verify_ss(int dmax, int nmax);

}  // namespace bdorder

#endif  // BDORDER_VERIFY_HPP_
