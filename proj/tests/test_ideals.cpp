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

#include <gtest/gtest.h>

#include <numbers>

#include "circlering/errors.hpp"

namespace circlering {
namespace {

constexpr double kPi = std::numbers::pi;

Divisor div(std::initializer_list<std::pair<double, int>> items) {
  std::vector<DivisorEntry> e;
  for (auto [t, m] : items) e.push_back({CirclePoint(t), m});
  return Divisor(e);
}

const TrigPoly kCos = TrigPoly::cos_harmonic(1);
const TrigPoly kSin = TrigPoly::sin_harmonic(1);
const TrigPoly kOne = TrigPoly::constant(1);

// Coefficientwise t = c * u for some nonzero c.
bool proportional(const TrigPoly& t, const TrigPoly& u, double tol) {
  if (t.degree() != u.degree()) return false;
  double c = 0.0;
  for (int k = 0; k <= u.degree() && c == 0.0; ++k) {
    if (std::abs(u.cos_coeff(k)) > 0.1) c = t.cos_coeff(k) / u.cos_coeff(k);
    else if (std::abs(u.sin_coeff(k)) > 0.1) c = t.sin_coeff(k) / u.sin_coeff(k);
  }
  if (c == 0.0) return false;
  for (int k = 0; k <= u.degree(); ++k) {
    if (std::abs(t.cos_coeff(k) - c * u.cos_coeff(k)) > tol) return false;
    if (std::abs(t.sin_coeff(k) - c * u.sin_coeff(k)) > tol) return false;
  }
  return true;
}

TEST(DivisorOfIdeal, Examples) {
  EXPECT_TRUE(divisor_of_ideal(GeneratorSet({kSin})).matches(div({{0.0, 1}, {kPi, 1}}), 1e-12));
  EXPECT_TRUE(divisor_of_ideal(GeneratorSet({kSin * (kOne - kCos), kSin * (kOne + kCos)}))
                  .matches(div({{0.0, 1}, {kPi, 1}}), 1e-6));
  EXPECT_TRUE(divisor_of_ideal(GeneratorSet({kOne - kCos, kSin})).matches(div({{0.0, 1}}), 1e-9));
  EXPECT_TRUE(divisor_of_ideal(GeneratorSet({kCos, kOne + kCos})).empty());
}

TEST(DivisorOfIdeal, ZeroGeneratorsImposeNothing) {
  EXPECT_TRUE(divisor_of_ideal(GeneratorSet({TrigPoly(), kSin}))
                  .matches(div({{0.0, 1}, {kPi, 1}}), 1e-12));
  EXPECT_THROW(GeneratorSet({TrigPoly(), TrigPoly()}), AllZeroGeneratorsError);
  EXPECT_THROW(GeneratorSet({}), AllZeroGeneratorsError);
}

TEST(IsPrincipal, Examples) {
  EXPECT_FALSE(is_principal(IdealR(div({{0.0, 1}}))));
  EXPECT_TRUE(is_principal(IdealR(div({{kPi / 2, 2}, {3 * kPi / 2, 2}}))));
  EXPECT_TRUE(is_principal(IdealR::unit()));
}

TEST(RealGenerator, Examples) {
  EXPECT_TRUE(proportional(real_generator(IdealR(div({{0.0, 2}}))), kOne - kCos, 1e-15));
  const TrigPoly s = real_generator(IdealR(div({{0.0, 1}, {kPi, 1}})));
  EXPECT_NEAR(s.sin_coeff(1), 1.0, 1e-15);
  EXPECT_NEAR(s.cos_coeff(0), 0.0, 1e-15);
  EXPECT_NEAR(s.cos_coeff(1), 0.0, 1e-15);
  const Divisor cos2 = div({{kPi / 2, 2}, {3 * kPi / 2, 2}});
  const TrigPoly g = real_generator(IdealR(cos2));
  EXPECT_TRUE(proportional(g, kCos * kCos, 1e-14));
  EXPECT_TRUE(circle_divisor(g).matches(cos2, 1e-6));
  EXPECT_EQ(real_generator(IdealR::unit()), kOne);
}

TEST(RealGenerator, OddDegreeThrows) {
  try {
    real_generator(IdealR(div({{0.0, 1}, {1.0, 2}})));
    FAIL();
  } catch (const OddDegreeError& e) {
    EXPECT_EQ(e.degree(), 3);
  }
}

TEST(ClassGroup, Examples) {
  EXPECT_EQ(class_of(IdealR::maximal(CirclePoint(0.0))), IdealClass::kNonPrincipal);
  EXPECT_EQ(class_of(product(IdealR::maximal(CirclePoint(0.0)), IdealR::maximal(CirclePoint(2.0)))),
            IdealClass::kPrincipal);
  EXPECT_EQ(class_of(IdealR::unit()), IdealClass::kPrincipal);
  EXPECT_EQ(class_mul(IdealClass::kNonPrincipal, IdealClass::kNonPrincipal), IdealClass::kPrincipal);
  EXPECT_EQ(class_mul(IdealClass::kPrincipal, IdealClass::kNonPrincipal), IdealClass::kNonPrincipal);
  EXPECT_EQ(class_mul(IdealClass::kPrincipal, IdealClass::kPrincipal), IdealClass::kPrincipal);
  EXPECT_EQ(class_mul(IdealClass::kNonPrincipal, IdealClass::kPrincipal), IdealClass::kNonPrincipal);
  EXPECT_EQ(to_string(IdealClass::kPrincipal), "Principal");
  EXPECT_EQ(to_string(IdealClass::kNonPrincipal), "NonPrincipal");
}

TEST(Product, Examples) {
  const IdealR a = IdealR::maximal(CirclePoint(0.0));
  EXPECT_TRUE(product(a, IdealR::maximal(CirclePoint(kPi))).divisor() == div({{0.0, 1}, {kPi, 1}}));
  EXPECT_TRUE(product(a, a).divisor() == div({{0.0, 2}}));
  const IdealR i(div({{1.0, 2}, {3.0, 1}}));
  EXPECT_TRUE(product(i, IdealR::unit()).divisor() == i.divisor());
}

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(IdealR(div({{0.0, 1}, {kPi, 1}})), kSin));
  EXPECT_FALSE(contains(IdealR(div({{0.0, 2}})), kSin));
  EXPECT_TRUE(contains(IdealR::unit(), kCos));
  EXPECT_THROW(contains(IdealR::unit(), TrigPoly()), ZeroPolynomialError);
  EXPECT_THROW(contains(IdealR(div({{0.0, 1}})), TrigPoly()), ZeroPolynomialError);
  EXPECT_TRUE(contains(IdealR(div({{0.0, 2}})), kOne - kCos));
}

TEST(OddCaseDecomposition, Examples) {
  auto [p1, g1] = odd_case_decomposition(IdealR(div({{0.0, 1}})));
  EXPECT_EQ(p1.theta(), 0.0);
  EXPECT_EQ(g1, kOne);

  auto [p2, g2] = odd_case_decomposition(IdealR(div({{0.0, 1}, {kPi, 2}})));
  EXPECT_EQ(p2.theta(), 0.0);
  EXPECT_TRUE(circle_divisor(g2).matches(div({{kPi, 2}}), 1e-6));

  auto [p3, g3] = odd_case_decomposition(IdealR(div({{0.0, 3}})));
  EXPECT_EQ(p3.theta(), 0.0);
  EXPECT_TRUE(circle_divisor(g3).matches(div({{0.0, 2}}), 1e-6));

  EXPECT_THROW(odd_case_decomposition(IdealR(div({{0.0, 2}}))), EvenDegreeError);
}

TEST(ComplexGenerator, Examples) {
  const LaurentPoly a = complex_generator(IdealR(div({{0.0, 1}})));
  EXPECT_EQ(a.coeff(0), std::complex<double>(-1.0, 0.0));
  EXPECT_EQ(a.coeff(1), std::complex<double>(1.0, 0.0));
  EXPECT_EQ(a.coeff(-1), std::complex<double>(0.0, 0.0));

  const LaurentPoly b = complex_generator(IdealR(div({{kPi, 2}})));
  EXPECT_NEAR(std::abs(b.coeff(0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b.coeff(1) - 2.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b.coeff(2) - 1.0), 0.0, 1e-15);

  const LaurentPoly c = complex_generator(IdealR::unit());
  EXPECT_EQ(c.degree(), 0);
  EXPECT_EQ(c.coeff(0), std::complex<double>(1.0, 0.0));
}

TEST(ComplexGenerator, OddDivisorIsPrincipalOverC) {
  const Divisor d = div({{0.5, 1}, {2.0, 2}});
  const auto q = complex_generator(IdealR(d)).shifted_polynomial();
  EXPECT_TRUE(unit_circle_divisor(q).matches(d, 1e-6));
}

}  // namespace
}  // namespace circlering
