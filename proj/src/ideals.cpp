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

#include "circlering/ideals.hpp"

#include <algorithm>
#include <complex>

#include "circlering/errors.hpp"

namespace circlering {

GeneratorSet::GeneratorSet(std::vector<TrigPoly> gens) : gens_(std::move(gens)) {
  if (std::all_of(gens_.begin(), gens_.end(),
                  [](const TrigPoly& t) { return t.is_zero(); })) {
    throw AllZeroGeneratorsError();
  }
}

std::string_view to_string(IdealClass c) {
  return c == IdealClass::kPrincipal ? "Principal" : "NonPrincipal";
}

Divisor divisor_of_ideal(const GeneratorSet& g, const RootConfig& cfg) {
  // Common zeros are among the zeros of any single nonzero generator; use
  // the one of lowest degree as the candidate source.
  const TrigPoly* pivot = nullptr;
  for (const auto& t : g.gens()) {
    if (!t.is_zero() && (!pivot || t.degree() < pivot->degree())) pivot = &t;
  }
  const Divisor candidates = circle_divisor(*pivot, cfg);

  std::vector<DivisorEntry> common;
  for (const auto& e : candidates.entries()) {
    int order = e.multiplicity;
    for (const auto& t : g.gens()) {
      if (&t == pivot || t.is_zero()) continue;
      order = std::min(order, zero_order(t, e.point, cfg));
      if (order == 0) break;
    }
    if (order > 0) common.push_back({e.point, order});
  }
  return Divisor(std::move(common));
}

bool is_principal(const IdealR& ideal) {
  return parity(ideal.divisor()) == Parity::kEven;
}

TrigPoly real_generator(const IdealR& ideal) {
  const int deg = degree(ideal.divisor());
  if (deg % 2 != 0) throw OddDegreeError(deg);
  const std::vector<CirclePoint> points = ideal.divisor().expanded();
  TrigPoly g = TrigPoly::constant(1.0);
  for (std::size_t i = 0; i + 1 < points.size(); i += 2) {
    g = multiply(g, pair_generator(points[i], points[i + 1]));
  }
  return g;
}

IdealClass class_of(const IdealR& ideal) {
  return static_cast<IdealClass>(parity(ideal.divisor()));
}

IdealClass class_mul(IdealClass a, IdealClass b) {
  return static_cast<IdealClass>(static_cast<int>(a) ^ static_cast<int>(b));
}

IdealR product(const IdealR& a, const IdealR& b) {
  return IdealR(add(a.divisor(), b.divisor()));
}

bool contains(const IdealR& ideal, const TrigPoly& f, const RootConfig& cfg) {
  if (ideal.is_unit()) {
    if (f.is_zero()) throw ZeroPolynomialError();
    return true;
  }
  return leq(ideal.divisor(), circle_divisor(f, cfg));
}

std::pair<CirclePoint, TrigPoly> odd_case_decomposition(const IdealR& ideal) {
  const int deg = degree(ideal.divisor());
  if (deg % 2 == 0) throw EvenDegreeError(deg);
  const auto entries = ideal.divisor().entries();
  const CirclePoint first = entries.front().point;
  std::vector<DivisorEntry> rest(entries.begin(), entries.end());
  if (--rest.front().multiplicity == 0) rest.erase(rest.begin());
  return {first, real_generator(IdealR(Divisor(std::move(rest),
                                               ideal.divisor().tolerance())))};
}

LaurentPoly complex_generator(const IdealR& ideal) {
  // Ascending coefficients of prod (z - e^{ip}).
  std::vector<std::complex<double>> poly{1.0};
  for (const CirclePoint& p : ideal.divisor().expanded()) {
    const std::complex<double> root = std::polar(1.0, p.theta());
    std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
    for (std::size_t k = 0; k < poly.size(); ++k) {
      next[k + 1] += poly[k];
      next[k] -= root * poly[k];
    }
    poly = std::move(next);
  }
  // Laurent layout c_{-d}..c_d with the negative half zero.
  const std::size_t d = poly.size() - 1;
  std::vector<std::complex<double>> laurent(2 * d + 1, 0.0);
  std::copy(poly.begin(), poly.end(), laurent.begin() + d);
  return LaurentPoly(std::move(laurent));
}

}  // namespace circlering
