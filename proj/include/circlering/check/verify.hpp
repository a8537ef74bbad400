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

#ifndef CIRCLERING_CHECK_VERIFY_HPP_
#define CIRCLERING_CHECK_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "circlering/roots.hpp"

namespace circlering::check {

struct CheckResult {
  std::string name;
  int cases = 0;
  int skipped = 0;  // degenerate inputs filtered out before checking
  int failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }
  void fail(const std::string& what) {
    if (failures++ == 0) first_failure = what;
  }
};

// Each check draws its cases from its own stream derived from `seed`, so
// results do not depend on which other checks ran.
CheckResult check_ring_laws(std::uint64_t seed, int cases);
CheckResult check_evaluation_homomorphism(std::uint64_t seed, int cases);
CheckResult check_laurent_roundtrip(std::uint64_t seed, int cases);
CheckResult check_divisor_laws(std::uint64_t seed, int cases);
CheckResult check_even_zero_count(std::uint64_t seed, int cases,
                                  const RootConfig& cfg = {});
CheckResult check_sign_changes(std::uint64_t seed, int cases,
                               const RootConfig& cfg = {});
CheckResult check_oracle_equivalence(std::uint64_t seed, int cases,
                                     const RootConfig& cfg = {});
CheckResult check_parity_principality(std::uint64_t seed, int cases,
                                      const RootConfig& cfg = {});
CheckResult check_class_group(std::uint64_t seed, int cases);
CheckResult check_ideal_recovery(std::uint64_t seed, int cases,
                                 const RootConfig& cfg = {});
CheckResult check_membership(std::uint64_t seed, int cases,
                             const RootConfig& cfg = {});
CheckResult check_complex_pid(std::uint64_t seed, int cases,
                              const RootConfig& cfg = {});
CheckResult check_half_factorial(std::uint64_t seed, int cases,
                                 const RootConfig& cfg = {});
CheckResult check_nonufd_demo();
CheckResult check_parse_print(std::uint64_t seed, int cases);

struct VerifyOptions {
  std::uint64_t seed = 42;
  // Cases per randomized check; 0 keeps each check's default count.
  int cases = 0;
  RootConfig roots;
};

// The whole invariant suite, in a fixed order.
std::vector<CheckResult> run_all(const VerifyOptions& options);

}  // namespace circlering::check

#endif  // CIRCLERING_CHECK_VERIFY_HPP_
