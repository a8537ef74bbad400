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

#ifndef CIRCLERING_FACTORIZATION_HPP_
#define CIRCLERING_FACTORIZATION_HPP_

#include <functional>
#include <string>
#include <vector>

#include "circlering/divisor.hpp"
#include "circlering/trigpoly.hpp"

namespace circlering {

// Largest divisor degree accepted by the enumerators.
inline constexpr int kMaxFactorizationDegree = 16;

// An irreducible element, identified by its degree-2 divisor {p, q}. The
// pair generator for (p, q) is the witness.
class Irreducible {
 public:
  Irreducible(CirclePoint p, CirclePoint q);

  CirclePoint first() const { return first_; }
  CirclePoint second() const { return second_; }
  Divisor divisor() const;
  TrigPoly witness() const { return pair_generator(first_, second_); }

 private:
  CirclePoint first_;  // first_.theta() <= second_.theta()
  CirclePoint second_;
};

// A factorization into irreducibles, up to units and order.
struct Factorization {
  std::vector<Irreducible> factors;

  int length() const { return static_cast<int>(factors.size()); }
  // Product of the witnesses.
  TrigPoly product() const;
  // Sum of the factor divisors.
  Divisor divisor() const;
};

// Calls `visit` once per distinct factorization of d, in lexicographic order
// of the sorted pairs, without materializing the whole set. Returns the
// number of factorizations. Throws OddDegreeError or TooLargeError.
long long for_each_factorization(
    const Divisor& d, const std::function<void(const Factorization&)>& visit);

// All distinct factorizations of d (degree even, 2..16). Repeated points do
// not produce duplicates: {A,A,B,B} has exactly two factorizations.
std::vector<Factorization> enumerate_factorizations(const Divisor& d);

struct HalfFactorialReport {
  bool half_factorial = false;
  long long factorization_count = 0;
  // Distinct lengths seen, ascending.
  std::vector<int> lengths;
};

HalfFactorialReport is_half_factorial(const Divisor& d);

// cos^2 x = (1 + sin x)(1 - sin x), checked end to end.
struct NonUfdReport {
  TrigPoly cos_squared;
  TrigPoly sin_product;
  double max_coefficient_gap = 0.0;
  Divisor cos_divisor;
  Divisor one_plus_sin_divisor;
  Divisor one_minus_sin_divisor;
  Divisor product_divisor;
  std::vector<Factorization> factorizations;
  bool ok = false;
};

NonUfdReport demo_nonufd();

}  // namespace circlering

#endif  // CIRCLERING_FACTORIZATION_HPP_
