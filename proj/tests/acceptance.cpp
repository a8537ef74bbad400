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

// Acceptance harness: one PASS/FAIL line per criterion; exit status 0 iff
// all pass.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "circlering/check/oracles.hpp"
#include "circlering/check/verify.hpp"
#include "circlering/factorization.hpp"

namespace {

using namespace circlering;
using namespace circlering::check;

constexpr std::uint64_t kSeed = 42;
constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass;
  std::string detail;
};

Outcome from(const CheckResult& r) {
  std::string d = std::to_string(r.cases) + " cases";
  if (r.skipped) d += ", " + std::to_string(r.skipped) + " degenerate skipped";
  if (!r.passed()) d += ", " + std::to_string(r.failures) + " failed: " + r.first_failure;
  return {r.passed(), d};
}

Outcome both(const Outcome& a, const Outcome& b) {
  return {a.pass && b.pass, a.detail + "; " + b.detail};
}

Divisor div(std::initializer_list<std::pair<double, int>> items) {
  std::vector<DivisorEntry> e;
  for (auto [t, m] : items) e.push_back({CirclePoint(t), m});
  return Divisor(e);
}

Outcome ac1_nonufd() {
  const NonUfdReport r = demo_nonufd();
  bool ok = r.ok && r.max_coefficient_gap <= 1e-12;
  ok = ok && r.cos_divisor.matches(div({{kPi / 2, 1}, {3 * kPi / 2, 1}}), 1e-6);
  ok = ok && r.one_plus_sin_divisor.matches(div({{3 * kPi / 2, 2}}), 1e-6);
  ok = ok && r.one_minus_sin_divisor.matches(div({{kPi / 2, 2}}), 1e-6);
  ok = ok && r.product_divisor.matches(div({{kPi / 2, 2}, {3 * kPi / 2, 2}}), 1e-6);
  ok = ok && r.factorizations.size() == 2;
  for (const auto& f : r.factorizations) ok = ok && f.length() == 2;
  char buf[96];
  std::snprintf(buf, sizeof buf, "gap %.1e, %zu factorizations", r.max_coefficient_gap,
                r.factorizations.size());
  return {ok, buf};
}

Outcome ac7_half_factorial() {
  Outcome random = from(check_half_factorial(kSeed, 60));
  // Fixed instances up to the degree cap, all against the brute-force matcher.
  const std::vector<Divisor> fixed = {
      div({{0.5, 1}, {1.5, 1}, {2.5, 1}, {3.5, 1}}),
      div({{kPi / 2, 2}, {3 * kPi / 2, 2}}),
      div({{1.0, 4}, {2.0, 4}, {3.0, 4}, {4.0, 4}}),
      div({{0.2, 2}, {0.9, 2}, {1.7, 2}, {2.6, 2}, {3.3, 2}, {4.1, 2}, {5.0, 2}, {5.8, 2}}),
  };
  bool ok = true;
  std::string detail;
  for (const auto& d : fixed) {
    const auto report = is_half_factorial(d);
    const auto brute = brute_force_matching_count(d);
    ok = ok && report.half_factorial && report.factorization_count == brute &&
         report.lengths == std::vector<int>{degree(d) / 2};
    detail += (detail.empty() ? "" : ",") + std::to_string(report.factorization_count);
  }
  return both(random, {ok, "fixed counts " + detail});
}

Outcome run_cli(const std::string& args, int* code) {
  const std::string cmd = std::string(CIRCLERING_CLI) + " " + args;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {false, "cannot run " + cmd};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  *code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {true, out};
}

Outcome ac9_determinism() {
  int c1 = -1, c2 = -1;
  const Outcome a = run_cli("verify --seed 42", &c1);
  const Outcome b = run_cli("verify --seed 42", &c2);
  if (!a.pass || !b.pass) return {false, a.pass ? b.detail : a.detail};
  const bool same = a.detail == b.detail;
  return {same && c1 == 0 && c2 == 0,
          std::string(same ? "byte-identical" : "outputs differ") + ", exit codes " +
              std::to_string(c1) + "/" + std::to_string(c2) + ", " +
              std::to_string(a.detail.size()) + " bytes"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1 non-UFD demo", ac1_nonufd},
      {"AC2 even zero count", [] { return from(check_even_zero_count(kSeed, 500)); }},
      {"AC3 parity <-> principality",
       [] { return from(check_parity_principality(kSeed, 200)); }},
      {"AC4 class group Z/2", [] { return from(check_class_group(kSeed, 200)); }},
      {"AC5 divisor of ideal", [] { return from(check_ideal_recovery(kSeed, 50)); }},
      {"AC6 complex PID", [] { return from(check_complex_pid(kSeed, 50)); }},
      {"AC7 half-factorial", ac7_half_factorial},
      {"AC8 oracle equivalence", [] { return from(check_oracle_equivalence(kSeed, 100)); }},
      {"AC9 determinism", ac9_determinism},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = fn();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s (%s; %.2fs)\n", o.pass ? "PASS" : "FAIL", name.c_str(),
                o.detail.c_str(), secs);
    failed += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
