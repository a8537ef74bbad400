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

#ifndef CIRCLERING_CHECK_ORACLES_HPP_
#define CIRCLERING_CHECK_ORACLES_HPP_

#include <cstdint>

#include "circlering/divisor.hpp"
#include "circlering/roots.hpp"
#include "circlering/trigpoly.hpp"

namespace circlering::check {

// Circle zeros found without the complex lift: dense sampling, bisection of
// sign-change brackets of t (odd-order zeros) and of t' (extrema, which
// catch even-order zeros), with multiplicity from zero_order. Reliable for
// multiplicities up to 2 and zeros further apart than a few grid steps.
Divisor sampling_divisor(const TrigPoly& t, int samples = 1 << 16,
                         const RootConfig& cfg = {});

// Number of distinct multisets of pairs over the points of d repeated by
// multiplicity, by enumerating every labeled matching and deduplicating
// their sorted forms. Exponential; meant for degree <= 16.
std::int64_t brute_force_matching_count(const Divisor& d);

// (2m - 1)!! perfect matchings of 2m labeled points.
std::int64_t double_factorial(int n);

}  // namespace circlering::check

#endif  // CIRCLERING_CHECK_ORACLES_HPP_
