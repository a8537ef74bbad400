// Copyright 2026 The circlering Authors.
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

// End-to-end tests of the command-line tool.

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "json.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

struct CliRun {
  int code;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(CIRCLERING_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

nlohmann::json run_json(const std::string& args, int want_code = 0) {
  const CliRun r = run(args);
  EXPECT_EQ(r.code, want_code) << args << "\n" << r.out;
  return nlohmann::json::parse(r.out);
}

TEST(Cli, Roots) {
  const auto j = run_json("roots 'cos(x)^2'");
  EXPECT_EQ(j["schema"], 1);
  ASSERT_EQ(j["zeros"].size(), 2u);
  EXPECT_NEAR(j["zeros"][0]["theta"].get<double>(), kPi / 2, 1e-11);
  EXPECT_EQ(j["zeros"][0]["mult"], 2);
  EXPECT_NEAR(j["zeros"][1]["theta"].get<double>(), 3 * kPi / 2, 1e-11);
  EXPECT_EQ(j["zeros"][1]["mult"], 2);
  EXPECT_EQ(j["total"], 4);
  EXPECT_EQ(j["even"], true);
}

TEST(Cli, AnglesHaveTwelveDigits) {
  const CliRun r = run("roots 'cos(x)'");
  EXPECT_NE(r.out.find("1.57079632679"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("1.570796326794"), std::string::npos) << r.out;
}

TEST(Cli, Ideal) {
  const auto j = run_json("ideal 'sin(x)*(1-cos(x))' 'sin(x)*(1+cos(x))'");
  ASSERT_EQ(j["divisor"].size(), 2u);
  EXPECT_NEAR(j["divisor"][0]["theta"].get<double>(), 0.0, 1e-6);
  EXPECT_NEAR(j["divisor"][1]["theta"].get<double>(), kPi, 1e-6);
  EXPECT_EQ(j["principal"], true);
  EXPECT_EQ(j["class"], "Principal");
  EXPECT_NEAR(j["generator"]["sin"][0].get<double>(), 1.0, 1e-12);
  EXPECT_NEAR(j["generator"]["cos"][1].get<double>(), 0.0, 1e-12);
}

TEST(Cli, IdealNonPrincipalHasNoGenerator) {
  const auto j = run_json("ideal 'sin(x)*(1-cos(x))' '1-cos(x)'");
  EXPECT_EQ(j["class"], "Principal");
  const auto k = run_json("ideal '1-cos(x)' 'sin(x)*cos(x)'");
  EXPECT_EQ(k["degree"], 1);
  EXPECT_EQ(k["principal"], false);
  EXPECT_EQ(k["class"], "NonPrincipal");
  EXPECT_TRUE(k["generator"].is_null());
}

TEST(Cli, Generator) {
  const auto j = run_json("generator --points 'pi/2:2,3*pi/2:2'");
  EXPECT_EQ(j["roundtrip_ok"], true);
  EXPECT_EQ(j["generator"]["degree"], 2);
}

TEST(Cli, GeneratorOddDegree) {
  const auto j = run_json("generator --points 0:1", 1);
  EXPECT_EQ(j["error"], "OddDegree");
  EXPECT_EQ(j["class"], "NonPrincipal");
  EXPECT_FALSE(j["explanation"].get<std::string>().empty());
}

TEST(Cli, Factorizations) {
  const auto j = run_json("factorizations --points 'pi/2:2,3*pi/2:2'");
  EXPECT_EQ(j["count"], 2);
  EXPECT_EQ(j["half_factorial"], true);
  EXPECT_EQ(j["lengths"], nlohmann::json::array({2}));
  const auto k = run_json("factorizations --points 0.1,0.2,0.3,0.4,0.5,0.6 --limit 4");
  EXPECT_EQ(k["count"], 15);
  EXPECT_EQ(k["factorizations"].size(), 4u);
  EXPECT_EQ(k["truncated"], true);
}

TEST(Cli, ComplexGenerator) {
  const auto j = run_json("complex-generator --points 'pi:2'");
  ASSERT_EQ(j["coefficients"].size(), 3u);
  EXPECT_NEAR(j["coefficients"][1][0].get<double>(), 2.0, 1e-15);
  EXPECT_EQ(j["roundtrip_ok"], true);
  EXPECT_EQ(run_json("complex-generator --points 0:1")["roundtrip_ok"], true);
}

TEST(Cli, DemoNonUfd) {
  const auto j = run_json("demo nonufd");
  EXPECT_EQ(j["ok"], true);
  EXPECT_EQ(j["factorization_count"], 2);
  EXPECT_LE(j["max_coefficient_gap"].get<double>(), 1e-12);
}

TEST(Cli, TextFormat) {
  const CliRun r = run("--format text roots 'cos(x)'");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("total: 2"), std::string::npos) << r.out;
  const CliRun s = run("roots 'cos(x)' --format text");
  EXPECT_EQ(s.out, r.out);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("nosuch").code, 1);
  EXPECT_EQ(run("roots").code, 1);
  EXPECT_EQ(run("--format xml roots 'cos(x)'").code, 1);
  EXPECT_EQ(run("roots '0'").code, 1);
  EXPECT_EQ(run("factorizations --points 0:18").code, 1);
  EXPECT_EQ(run("roots 'cos(x'").code, 2);
  EXPECT_EQ(run("roots 'cos(x^2)'").code, 2);
  EXPECT_EQ(run("generator --points 'pi/2:x'").code, 2);
  EXPECT_EQ(run("generator --points 'foo:1'").code, 2);
  EXPECT_EQ(run("--max-iter 1 roots 'cos(3*x) + 0.3*sin(2*x) - 0.1'").code, 3);
  EXPECT_EQ(run("--tol-radius 0 roots 'cos(x)'").code, 1);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, VerifySmallIsDeterministic) {
  const CliRun a = run("verify --seed 3 --cases 3");
  const CliRun b = run("verify --seed 3 --cases 3");
  EXPECT_EQ(a.code, 0) << a.out;
  EXPECT_EQ(a.out, b.out);
  const auto j = nlohmann::json::parse(a.out);
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["seed"], 3);
}

}  // namespace
