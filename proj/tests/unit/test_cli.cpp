// Copyright 2026 The gfpmul Authors
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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gfpmul_tools/cli.hpp"

#ifndef GFPMUL_DATA_DIR
#error "GFPMUL_DATA_DIR must be defined"
#endif

namespace gfpmul::tools {
namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("gfpmul_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const std::string kData = GFPMUL_DATA_DIR;

TEST(Cli, MulPrintsHexProduct) {
  const std::string two = temp_file("two.hex", "2\n");
  const CliResult r = run({"mul", two, two, "--check"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "4\n");
}

TEST(Cli, MulLargeOperandsWithPlanFile) {
  const std::string a = temp_file("a.hex", std::string(1500, 'f'));
  const std::string b = temp_file("b.hex", "1 " + std::string(1400, '7') + "\n");
  const CliResult plan = run({"plan", "--n", "6000", "--threshold", "256"});
  ASSERT_EQ(plan.code, 0) << plan.err;
  const std::string plan_file = temp_file("plan.txt", plan.out);
  const CliResult direct = run({"mul", a, b, "--check", "--threshold", "256"});
  const CliResult planned = run({"mul", a, b, "--plan", plan_file, "--check"});
  ASSERT_EQ(direct.code, 0) << direct.err;
  ASSERT_EQ(planned.code, 0) << planned.err;
  EXPECT_EQ(direct.out, planned.out);
  EXPECT_GT(direct.out.size(), 2800U);
}

TEST(Cli, PrimesSearch) {
  const CliResult r = run({"primes-search", "--lambda", "4", "--min-bits", "90"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("r=74 ", 0), 0U) << r.out;
}

TEST(Cli, PrimesCountAndList) {
  const CliResult r = run({"primes-count", "--lambda", "4", "--lo", "16", "--hi", "272"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count=10"), std::string::npos);
  const CliResult l = run({"primes-count", "--lambda", "2", "--lo", "2", "--hi", "20", "--list", "--jobs", "2"});
  EXPECT_EQ(l.code, 0);
  EXPECT_NE(l.out.find("r=2\n"), std::string::npos);
}

TEST(Cli, CostReproducesTableRow) {
  const CliResult r = run({"cost", "--n", "1073741824", "--primes", kData + "/table2.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  bool found = false;
  while (std::getline(lines, line)) {
    if (line.rfind("74^16+1", 0) == 0) {
      found = true;
      EXPECT_NE(line.find("2^26*19"), std::string::npos) << line;
      EXPECT_NE(line.find(" 288 "), std::string::npos) << line;
    }
  }
  EXPECT_TRUE(found) << r.out;
  const CliResult rec = run({"cost", "--n", "2^30", "--primes", kData + "/table3_primes.txt", "--profile",
                       kData + "/example_profile.txt", "--format", "records"});
  ASSERT_EQ(rec.code, 0) << rec.err;
  EXPECT_NE(rec.out.find("r=562 lambda=5 eta=128 big_n=16777216 expensive_count=218103808 ks_bits=800 est_time_s="),
            std::string::npos);
}

TEST(Cli, PlanAndDensityAndBench) {
  const CliResult p = run({"plan", "--n", "2^30", "--top-lambda", "5"});
  EXPECT_EQ(p.code, 0) << p.err;
  EXPECT_EQ(p.out.rfind("level 0: r=432 lambda=5 eta=128 N=16777216 beta=", 0), 0U) << p.out;
  const CliResult d = run({"density", "--lambda", "4", "--K", "100000", "--format", "records"});
  EXPECT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("actual1=10"), std::string::npos) << d.out;
  EXPECT_NE(d.out.find("actual2=139"), std::string::npos) << d.out;
  const CliResult b = run({"bench", "--n", "4096", "--reps", "2", "--threshold", "256"});
  EXPECT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("level=0 expensive_muls=1792"), std::string::npos) << b.out;
  EXPECT_NE(b.out.find("model_top_count=1792"), std::string::npos) << b.out;
  EXPECT_NE(b.out.find("# timing"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"primes-search", "--lambda", "4"}).code, 2);
  EXPECT_EQ(run({"cost", "--n", "abc", "--primes", kData + "/table2.txt"}).code, 2);
  EXPECT_EQ(run({"density"}).code, 2);
  const CliResult missing = run({"mul", "/nonexistent/a", "/nonexistent/b"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_FALSE(missing.err.empty());
  const std::string bad = temp_file("bad.hex", "xyz");
  EXPECT_EQ(run({"mul", bad, bad}).code, 1);
  const std::string small_plan = temp_file("small_plan.txt", "level 0: r=44 lambda=4 eta=32 N=64 beta=0\n");
  const std::string big = temp_file("big.hex", std::string(600, 'f'));
  const CliResult overflow = run({"mul", big, big, "--plan", small_plan});
  EXPECT_EQ(overflow.code, 1);
  EXPECT_NE(overflow.err.find("Overflow"), std::string::npos) << overflow.err;
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, JobsFromEnvironment) {
  ::setenv("GFPMUL_JOBS", "3", 1);
  const CliResult r = run({"primes-count", "--lambda", "3", "--lo", "64", "--hi", "640"});
  ::unsetenv("GFPMUL_JOBS");
  EXPECT_EQ(r.code, 0);
  const CliResult one = run({"primes-count", "--lambda", "3", "--lo", "64", "--hi", "640", "--jobs", "1"});
  EXPECT_EQ(r.out, one.out);
}

}  // namespace
}  // namespace gfpmul::tools
