// Copyright 2026 The monopos Authors
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

#include "cli.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <cstdlib>
#include <nlohmann/json.hpp>
#include <sstream>

namespace monopos::cli {
namespace {

using ::testing::HasSubstr;
using nlohmann::json;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::ostringstream out, err;
  std::istringstream in(input);
  const int code = dispatch(args, out, err, in);
  return {code, out.str(), err.str()};
}

std::string value_line(const std::string& text) {
  std::istringstream ss(text);
  std::string key, value;
  while (ss >> key >> value)
    if (key == "value") return value;
  return {};
}

TEST(CliTest, MpOfGear) {
  const auto r = run({"mp", "gear:4"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(value_line(r.out), "2");
  EXPECT_EQ(value_line(run({"gp", "gear:4"}).out), "4");
}

TEST(CliTest, JsonLexMp) {
  const auto r = run({"--json", "lex-mp", "path:3", "path:3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["shortcut"], "triangle_free");
}

TEST(CliTest, ProductPipedIntoMp) {
  const auto prod = run({"product", "complete:2", "complete:2"});
  ASSERT_EQ(prod.code, kExitOk) << prod.err;
  const auto r = run({"mp", "-"}, prod.out);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(value_line(r.out), "2");
}

TEST(CliTest, Graph6Argument) {
  const auto r = run({"--json", "mp", "g6:D?{"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["value"], 4);
}

TEST(CliTest, IntervalAndBadPath) {
  auto r = run({"--json", "interval", "cycle:5", "0", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["interval"], json::parse("[0,1,2,3,4]"));
  r = run({"--json", "bad-path", "cycle:5", "--set", "0,1,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["in_position"], false);
}

TEST(CliTest, Classify) {
  const auto r = run(
      {"--json", "classify", "path:3", "path:4", "--pairs", "0,0;2,2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_THAT(r.out, HasSubstr("varied"));
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"mp", "nosuchfamily:3"}).code, kExitUsage);
  const auto r = run({"bad-path", "path:3", "--set", "0,9"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_THAT(r.err, HasSubstr("out of range"));
}

TEST(CliTest, BudgetFlag) {
  const auto r = run({"--budget", "3", "mp", "gear:6"});
  EXPECT_EQ(r.code, kExitBudget);
  EXPECT_THAT(r.err, HasSubstr("budget"));
}

TEST(CliTest, BudgetEnvironment) {
  ::setenv("MONOPOS_BUDGET", "3", 1);
  const auto limited = run({"mp", "gear:6"});
  ::setenv("MONOPOS_BUDGET", "junk", 1);
  const auto junk = run({"mp", "gear:6"});
  ::unsetenv("MONOPOS_BUDGET");
  EXPECT_EQ(limited.code, kExitBudget);
  EXPECT_EQ(junk.code, kExitUsage);
  EXPECT_EQ(run({"mp", "gear:6"}).code, kExitOk);
}

TEST(CliTest, CheckExitCodes) {
  auto r = run({"check", "--checks", "C1,C14", "--max-order", "4",
                "--pair-max-order", "3", "--lex-h-max-order", "3"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  EXPECT_THAT(r.out, HasSubstr("PASS"));
  r = run({"check", "--checks", "C17", "--pair-max-order", "2",
           "--lex-h-max-order", "2"});
  EXPECT_EQ(r.code, kExitCheckFailed);
  EXPECT_THAT(r.out, HasSubstr("FAIL"));
  EXPECT_EQ(run({"check", "--checks", "C99"}).code, kExitUsage);
}

TEST(CliTest, Generate) {
  auto r = run({"--json", "generate", "--min-order", "4", "--max-order", "4",
                "--dedup"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["count"], 6);
  r = run({"generate", "--max-order", "8"});
  EXPECT_EQ(r.code, kExitUsage);
}

}  // namespace
}  // namespace monopos::cli
