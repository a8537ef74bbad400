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

#ifndef CIRCLERING_CHECK_GENERATORS_HPP_
#define CIRCLERING_CHECK_GENERATORS_HPP_

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "circlering/divisor.hpp"
#include "circlering/trigpoly.hpp"

namespace circlering::check {

// Seeded generator with a portable mapping to doubles, so that a seed gives
// the same cases under every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform in [lo, hi].
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::mt19937_64 engine_;
};

// Degree uniform in [0, max_degree], coefficients uniform in
// [-amplitude, amplitude].
TrigPoly random_trigpoly(Rng& rng, int max_degree, double amplitude = 1.0);

// Like random_trigpoly with the degree fixed.
TrigPoly random_trigpoly_of_degree(Rng& rng, int degree, double amplitude = 1.0);

// `count` uniform points, each at least min_separation from the others and
// from every point in `avoid`.
std::vector<CirclePoint> random_points(Rng& rng, int count, double min_separation,
                                       std::span<const CirclePoint> avoid = {});

// Degree uniform in [0, max_degree]; multiplicities drawn from
// 1..max_multiplicity (mostly 1); distinct points at least min_separation
// apart.
Divisor random_divisor(Rng& rng, int max_degree, double min_separation = 1e-3,
                       int max_multiplicity = 2);

// As random_divisor with the degree fixed.
Divisor random_divisor_of_degree(Rng& rng, int degree,
                                 double min_separation = 1e-3,
                                 int max_multiplicity = 2);

// A product of 1..max_pairs pair generators together with its known
// divisor. About a quarter of the pairs are coincident (double zeros).
struct PairProduct {
  TrigPoly poly;
  Divisor divisor;
};
PairProduct random_pair_product(Rng& rng, int max_pairs,
                                double min_separation = 1e-3);

}  // namespace circlering::check

#endif  // CIRCLERING_CHECK_GENERATORS_HPP_
