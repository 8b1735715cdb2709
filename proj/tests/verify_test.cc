// Copyright 2026 The ModSum Cards Authors. All rights reserved.
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


#include "modsum/verify.h"

#include "gtest/gtest.h"
#include "modsum/errors.h"

namespace modsum {
namespace {

TEST(VerifyTest, EverySuitePassesAtDefaultBounds) {
  for (std::string_view name : SuiteNames()) {
    const SuiteReport report = RunSuite(name, SuiteOptions{});
    EXPECT_TRUE(report.passed) << name << ": " << report.counterexample.dump();
    EXPECT_GT(report.checks, 0u) << name;
    EXPECT_TRUE(report.counterexample.is_null()) << name;
  }
}

TEST(VerifyTest, ParallelRunsAgree) {
  SuiteOptions options;
  options.jobs = 3;
  for (std::string_view name : {"corprime", "teoab", "informative"}) {
    const SuiteReport parallel = RunSuite(name, options);
    const SuiteReport serial = RunSuite(name, SuiteOptions{});
    EXPECT_EQ(parallel.passed, serial.passed);
    EXPECT_EQ(parallel.checks, serial.checks);
  }
}

TEST(VerifyTest, UnknownSuite) {
  EXPECT_THROW(RunSuite("nope", SuiteOptions{}), UsageError);
}

TEST(VerifyTest, JsonShape) {
  SuiteOptions options;
  options.max_n = 100;
  const Json j = ToJson(RunSuite("bertrand", options));
  EXPECT_EQ(j["suite"], "bertrand");
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["checks"], 97);
}

}  // namespace
}  // namespace modsum
