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

#include <gtest/gtest.h>

#include "bdorder/error.hpp"
#include "bdorder/verify.hpp"

namespace bdorder {
namespace {

TEST(VerifyTest, OracleSuitesPassAtDefaultBounds) {
  for (const char* suite : {"covers", "restrictions", "corder-consistency", "comporders",
                            "dm-identity"}) {
    const VerifyResult r = run_verify_suite(suite);
    EXPECT_TRUE(r.passed) << suite << ": " << r.counterexample;
    EXPECT_GT(r.checked, 0u);
  }
}

TEST(VerifyTest, SemisimplicitySuiteReportsEqualFormLinkage) {
  // Symbolic parameters give an antichain, but labels with identical c-forms
  // stay linked: the first is at d = 2, n = 4.
  const VerifyResult small = verify_ss(3, 3);
  EXPECT_TRUE(small.passed) << small.counterexample;
  const VerifyResult r = verify_ss(3, 5);
  EXPECT_FALSE(r.passed);
  EXPECT_NE(r.counterexample.find("d=2 n=4"), std::string::npos) << r.counterexample;
}

TEST(VerifyTest, RejectsUnknownSuitesAndBounds) {
  EXPECT_THROW(run_verify_suite("bogus"), ParseError);
  EXPECT_THROW(run_verify_suite("restrictions", {5, 4, 0}), DomainError);
  EXPECT_THROW(run_verify_suite("dm-identity", {0, 0, 100}), DomainError);
  EXPECT_EQ(verify_suite_names().size(), 6u);
}

}  // namespace
}  // namespace bdorder
