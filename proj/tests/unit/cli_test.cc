// Copyright 2026 The Halinkit Authors
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
#include <sys/wait.h>

#include <cstdio>
#include <string>

#include "json.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result RunCli(const std::string& args, const std::string& prefix = "",
              bool keep_stderr = false) {
  const std::string command = prefix + "'" HALINKIT_CLI_PATH "' " + args +
                              (keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  Result r;
  if (!pipe) return r;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json Payload(const Result& r) { return nlohmann::json::parse(r.out)["result"]; }

TEST(CliTest, AutPetersen) {
  const Result r = RunCli("aut --family petersen");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["order"], 120);
}

TEST(CliTest, AutPath) {
  const Result r = RunCli("aut --family path --n 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["order"], 2);
}

TEST(CliTest, StdinInputs) {
  Result r = RunCli("aut --input -", "printf 'D?{' | ");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["order"], 24);
  r = RunCli("aut --input -", "printf '{\"n\": 4, \"edges\": [[0,1],[1,2],[2,3],[3,0]]}' | ");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["order"], 8);
}

TEST(CliTest, MalformedGraph6) {
  const Result r = RunCli("aut --input -", "printf 'D?' | ", true);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("byte offset 2"), std::string::npos) << r.out;
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli("").code, 2);
  EXPECT_EQ(RunCli("aut").code, 2);
  EXPECT_EQ(RunCli("aut --family nonsense --n 3").code, 2);
  EXPECT_EQ(RunCli("aut --family path --n 3 --input x").code, 2);
  EXPECT_EQ(RunCli("greedy --family cycle --n 8 --base 0,9").code, 2);
  EXPECT_EQ(RunCli("base --family cycle --n 5", "HALINKIT_BUDGET=abc ").code, 2);
  EXPECT_EQ(RunCli("--help").code, 0);
}

TEST(CliTest, Invariants) {
  Result r = RunCli("cost --family cycle --n 6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["rho"], 3);
  EXPECT_EQ(Payload(r)["witness"].size(), 3u);
  r = RunCli("motion --family complete --n 5");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["motion"], 2);
  r = RunCli("base --family cycle --n 6");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["determining_number"], 2);
  r = RunCli("cost --family complete --n 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Payload(r)["rho"].is_null());
}

TEST(CliTest, Greedy) {
  const Result r = RunCli("greedy --family cycle --n 8 --base 0,1");
  ASSERT_EQ(r.code, 0);
  const auto chain = Payload(r)["chain"];
  EXPECT_EQ(chain["size"], 3);
  EXPECT_EQ(chain["bounds"]["cost_bound"], 3);
  EXPECT_EQ(chain["within_bound"], true);
}

TEST(CliTest, PreconditionAndBudgetExits) {
  EXPECT_EQ(RunCli("motion --family path --n 1").code, 3);
  EXPECT_EQ(RunCli("greedy --family complete --n 4 --base 0").code, 3);
  EXPECT_EQ(RunCli("base --family complete --n 8", "HALINKIT_BUDGET=5 ").code, 4);
}

TEST(CliTest, LimitSim) {
  Result r = RunCli("limit-sim --family binary-tree --depth 12 --k 3");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["distinctness"]["pairs"], 28);
  EXPECT_EQ(Payload(r)["distinctness"]["witnessed"], 28);
  EXPECT_EQ(Payload(r)["cauchy"].size(), 3u);
  EXPECT_EQ(RunCli("limit-sim --family binary-tree --k 0").code, 2);
  r = RunCli("limit-sim --family binary-tree --depth 2 --k 5");
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(Payload(r)["construction"]["rounds_completed"], 1);
  EXPECT_EQ(RunCli("limit-sim --family comb --depth 12 --k 4").code, 0);
}

TEST(CliTest, Topology) {
  Result r = RunCli("topology --family cycle --n 4 --perm 1,2,3,0 --perm 1,2,3,0");
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Payload(r)["distances"][0]["d"], "0");
  r = RunCli("topology --family cycle --n 8 --triples 1000 --seed 4");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(Payload(r)["ultrametric"]["violations"].empty());
  EXPECT_EQ(RunCli("topology --family cycle --n 4 --exhaustion '0,1;0'").code, 2);
  EXPECT_EQ(RunCli("topology --family cycle --n 4 --perm 0,1").code, 2);
}

TEST(CliTest, PrettyRendersTables) {
  const Result r = RunCli("subdegrees --family cycle --n 5 --pretty");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("max_orbit"), std::string::npos);
  EXPECT_EQ(r.out.find('{'), std::string::npos);
}

}  // namespace
