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

#include "circlering/trigpoly.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "circlering/errors.hpp"

namespace circlering {
namespace {

constexpr double kPi = std::numbers::pi;

void expect_coeffs(const TrigPoly& t, std::vector<double> a, std::vector<double> b,
                   double tol = 1e-15) {
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(t.cos_coeff(k), a[k], tol) << "a" << k;
  for (std::size_t k = 0; k < b.size(); ++k) {
    EXPECT_NEAR(t.sin_coeff(k + 1), b[k], tol) << "b" << k + 1;
  }
}

TEST(TrigPoly, ZeroAndConstants) {
  const TrigPoly zero;
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.degree(), 0);
  EXPECT_EQ(TrigPoly::constant(3.0).cos_coeff(0), 3.0);
  EXPECT_EQ(TrigPoly::cos_harmonic(2).degree(), 2);
  EXPECT_EQ(TrigPoly::sin_harmonic(3, 2.0).sin_coeff(3), 2.0);
  EXPECT_EQ(TrigPoly::sin_harmonic(3).cos_coeff(7), 0.0);
}

TEST(TrigPoly, RejectsNonFinite) {
  EXPECT_THROW(TrigPoly({std::numeric_limits<double>::quiet_NaN()}, {}), Error);
  EXPECT_THROW(TrigPoly({0.0}, {std::numeric_limits<double>::infinity()}), Error);
}

TEST(TrigPoly, TrimsNegligibleTrailingHarmonics) {
  const TrigPoly t({1.0, 2.0, 1e-14}, {0.0, 1e-15});
  EXPECT_EQ(t.degree(), 1);
  EXPECT_EQ(TrigPoly({0.0, 0.0}, {0.0}).degree(), 0);
}

TEST(TrigPoly, Evaluate) {
  EXPECT_NEAR(evaluate(TrigPoly::cos_harmonic(1), kPi / 2), 0.0, 1e-15);
  EXPECT_EQ(evaluate(TrigPoly(), 1.234), 0.0);
  EXPECT_NEAR(evaluate(TrigPoly::constant(1) - TrigPoly::cos_harmonic(1), kPi), 2.0, 1e-15);
}

TEST(TrigPoly, AddAndScale) {
  const TrigPoly c = TrigPoly::cos_harmonic(1);
  const TrigPoly cancel = add(c, -c);
  EXPECT_TRUE(cancel.is_zero());
  EXPECT_EQ(cancel.degree(), 0);
  expect_coeffs(add(TrigPoly::constant(1), TrigPoly::sin_harmonic(1)), {1.0, 0.0}, {1.0});
  expect_coeffs(scale(TrigPoly::sin_harmonic(1), 2.0), {0.0, 0.0}, {2.0});
}

TEST(TrigPoly, MultiplyExamples) {
  const TrigPoly c = TrigPoly::cos_harmonic(1), s = TrigPoly::sin_harmonic(1);
  const TrigPoly one = TrigPoly::constant(1);
  expect_coeffs(c * c, {0.5, 0.0, 0.5}, {0.0, 0.0});
  expect_coeffs((one + s) * (one - s), {0.5, 0.0, 0.5}, {0.0, 0.0});
  EXPECT_TRUE((c * TrigPoly()).is_zero());
  expect_coeffs(s * c, {0.0, 0.0, 0.0}, {0.0, 0.5});
  expect_coeffs(s * s, {0.5, 0.0, -0.5}, {0.0, 0.0});
}

TEST(TrigPoly, MultiplyAddsDegrees) {
  const TrigPoly a({1.0, 0.5, -0.25}, {0.0, 1.0});
  const TrigPoly b({0.0, 2.0}, {3.0});
  EXPECT_EQ((a * b).degree(), 3);
}

TEST(TrigPoly, Power) {
  const TrigPoly c = TrigPoly::cos_harmonic(1);
  EXPECT_EQ(power(c, 0), TrigPoly::constant(1));
  expect_coeffs(power(c, 3), {0.0, 0.75, 0.0, 0.25}, {0.0, 0.0, 0.0});
}

TEST(TrigPoly, Derivative) {
  expect_coeffs(derivative(TrigPoly::cos_harmonic(1)), {0.0, 0.0}, {-1.0});
  EXPECT_TRUE(derivative(TrigPoly::constant(5)).is_zero());
  expect_coeffs(derivative(TrigPoly::constant(1) - TrigPoly::cos_harmonic(1)), {0.0, 0.0}, {1.0});
  expect_coeffs(derivative(TrigPoly::sin_harmonic(2), 3), {0.0, 0.0, -8.0}, {0.0, 0.0});
  EXPECT_EQ(derivative(TrigPoly::sin_harmonic(2), 0), TrigPoly::sin_harmonic(2));
}

TEST(TrigPoly, DerivativeBound) {
  const TrigPoly t({1.0, -2.0}, {0.0, 3.0});
  EXPECT_DOUBLE_EQ(t.derivative_bound(0), 6.0);
  EXPECT_DOUBLE_EQ(t.derivative_bound(2), 2.0 + 4.0 * 3.0);
}

TEST(PairGenerator, DoublePointIsOneMinusCosUpToSign) {
  const TrigPoly g = pair_generator(CirclePoint(0.0), CirclePoint(0.0));
  const TrigPoly want = TrigPoly::constant(1) - TrigPoly::cos_harmonic(1);
  expect_coeffs(-g, {want.cos_coeff(0), want.cos_coeff(1)}, {0.0});
  EXPECT_NEAR(evaluate(g, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(evaluate(derivative(g), 0.0), 0.0, 1e-15);
}

TEST(PairGenerator, ZeroAndPiGiveSin) {
  expect_coeffs(pair_generator(CirclePoint(0.0), CirclePoint(kPi)), {0.0, 0.0}, {1.0}, 1e-15);
}

TEST(PairGenerator, QuarterPointsGiveMinusCos) {
  const TrigPoly g = pair_generator(CirclePoint(kPi / 2), CirclePoint(3 * kPi / 2));
  expect_coeffs(g, {0.0, -1.0}, {0.0}, 1e-15);
}

TEST(PairGenerator, VanishesAtBothPoints) {
  for (double p : {0.3, 2.0, 5.9}) {
    for (double q : {0.1, 3.0, 6.2}) {
      const TrigPoly g = pair_generator(CirclePoint(p), CirclePoint(q));
      EXPECT_EQ(g.degree(), 1);
      EXPECT_NEAR(evaluate(g, p), 0.0, 1e-15);
      EXPECT_NEAR(evaluate(g, q), 0.0, 1e-15);
    }
  }
}

TEST(Laurent, Examples) {
  const LaurentPoly c = to_laurent(TrigPoly::cos_harmonic(1));
  EXPECT_EQ(c.coeff(1), std::complex<double>(0.5, 0.0));
  EXPECT_EQ(c.coeff(-1), std::complex<double>(0.5, 0.0));
  EXPECT_EQ(c.coeff(0), std::complex<double>(0.0, 0.0));
  const LaurentPoly s = to_laurent(TrigPoly::sin_harmonic(1));
  EXPECT_EQ(s.coeff(1), std::complex<double>(0.0, -0.5));
  EXPECT_EQ(s.coeff(-1), std::complex<double>(0.0, 0.5));
  const LaurentPoly k = to_laurent(TrigPoly::constant(3));
  EXPECT_EQ(k.degree(), 0);
  EXPECT_EQ(k.coeff(0), std::complex<double>(3.0, 0.0));
  EXPECT_EQ(k.coeff(5), std::complex<double>(0.0, 0.0));
}

TEST(Laurent, ShiftedPolynomialLayout) {
  const TrigPoly t({1.0, 2.0}, {3.0});
  const auto q = to_laurent(t).shifted_polynomial();
  ASSERT_EQ(q.size(), 3u);
  EXPECT_EQ(q[0], std::complex<double>(1.0, 1.5));
  EXPECT_EQ(q[1], std::complex<double>(1.0, 0.0));
  EXPECT_EQ(q[2], std::complex<double>(1.0, -1.5));
}

TEST(Laurent, MatchesEvaluate) {
  const TrigPoly t({0.5, -1.0, 0.25, 2.0}, {1.0, 0.0, -0.75});
  const LaurentPoly l = to_laurent(t);
  for (int j = 0; j < 64; ++j) {
    const double x = kTwoPi * j / 64;
    EXPECT_NEAR(std::abs(l.evaluate_on_circle(x) - evaluate(t, x)), 0.0, 1e-13);
    EXPECT_NEAR(l.evaluate_on_circle(x).imag(), 0.0, 1e-13);
  }
}

TEST(Laurent, RejectsEvenLength) {
  EXPECT_THROW(LaurentPoly(std::vector<std::complex<double>>(2)), Error);
}

}  // namespace
}  // namespace circlering
