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

#ifndef CIRCLERING_IDEALS_HPP_
#define CIRCLERING_IDEALS_HPP_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "circlering/divisor.hpp"
#include "circlering/roots.hpp"
#include "circlering/trigpoly.hpp"

namespace circlering {

// A nonzero ideal of the ring of real-analytic functions on the circle,
// held in its canonical form: the product of m_p^a over its divisor.
class IdealR {
 public:
  IdealR() = default;  // the unit ideal
  explicit IdealR(Divisor divisor) : divisor_(std::move(divisor)) {}

  static IdealR unit() { return IdealR(); }
  static IdealR maximal(CirclePoint p) { return IdealR(Divisor::point(p)); }

  const Divisor& divisor() const { return divisor_; }
  bool is_unit() const { return divisor_.empty(); }

 private:
  Divisor divisor_;
};

// Generators of an ideal; at least one must be nonzero.
class GeneratorSet {
 public:
  // Throws AllZeroGeneratorsError when every generator is zero.
  explicit GeneratorSet(std::vector<TrigPoly> gens);
  std::span<const TrigPoly> gens() const { return gens_; }

 private:
  std::vector<TrigPoly> gens_;
};

// The class group is Z/2: principal ideals and everything else.
enum class IdealClass : int { kPrincipal = 0, kNonPrincipal = 1 };

std::string_view to_string(IdealClass c);

// Common zeros of the generators, each with the least order of vanishing
// among the generators. Zero generators impose no condition.
Divisor divisor_of_ideal(const GeneratorSet& g, const RootConfig& cfg = {});

bool is_principal(const IdealR& ideal);

// Product of pair generators over consecutive pairs of the angle-sorted
// points (repeated by multiplicity). Throws OddDegreeError.
TrigPoly real_generator(const IdealR& ideal);

IdealClass class_of(const IdealR& ideal);
IdealClass class_mul(IdealClass a, IdealClass b);
IdealR product(const IdealR& a, const IdealR& b);

// f lies in the ideal iff the ideal's divisor is below f's divisor.
// Throws ZeroPolynomialError for f = 0.
bool contains(const IdealR& ideal, const TrigPoly& f, const RootConfig& cfg = {});

// For an odd-degree ideal I, returns (p, g) with I = m_p (g), where p is the
// first divisor point. Throws EvenDegreeError.
std::pair<CirclePoint, TrigPoly> odd_case_decomposition(const IdealR& ideal);

// prod (z - e^{ip})^a as a Laurent polynomial with no negative powers.
// Over the complex-valued ring every ideal is principal.
LaurentPoly complex_generator(const IdealR& ideal);

}  // namespace circlering

#endif  // CIRCLERING_IDEALS_HPP_
