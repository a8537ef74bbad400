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

#ifndef CIRCLERING_TRIGPOLY_HPP_
#define CIRCLERING_TRIGPOLY_HPP_

#include <complex>
#include <span>
#include <vector>

#include "circlering/circle_point.hpp"

namespace circlering {

// Relative threshold below which a trailing harmonic is treated as zero.
inline constexpr double kTrimTolerance = 1e-12;

// A real trigonometric polynomial
//
//   T(x) = a_0 + sum_{k=1}^{N} a_k cos(kx) + b_k sin(kx).
//
// Values are immutable and always canonical: the top harmonic is nonzero
// unless N = 0, and the zero polynomial is {N = 0, a_0 = 0}.
class TrigPoly {
 public:
  // The zero polynomial.
  TrigPoly();

  // `cos_coeffs` holds a_0..a_N, `sin_coeffs` holds b_1..b_M. Shorter
  // sequences are zero-padded; trailing negligible harmonics are trimmed.
  // Throws Error on non-finite input.
  TrigPoly(std::vector<double> cos_coeffs, std::vector<double> sin_coeffs);

  static TrigPoly constant(double c);
  static TrigPoly cos_harmonic(int k, double amplitude = 1.0);
  static TrigPoly sin_harmonic(int k, double amplitude = 1.0);

  int degree() const { return static_cast<int>(cos_.size()) - 1; }
  bool is_zero() const { return degree() == 0 && cos_[0] == 0.0; }

  // a_k and b_k; zero beyond the degree (and b_0 = 0).
  double cos_coeff(int k) const;
  double sin_coeff(int k) const;

  // a_0..a_N.
  std::span<const double> cos_coeffs() const { return cos_; }
  // b_1..b_N (empty when N = 0).
  std::span<const double> sin_coeffs() const {
    return std::span<const double>(sin_).subspan(1);
  }

  // max_k |a_k|, |b_k|.
  double max_abs_coeff() const;

  // Upper bound on |T^{(order)}(x)| over the circle:
  // sum_k k^order (|a_k| + |b_k|). Used to scale vanishing tolerances.
  double derivative_bound(int order) const;

  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

 private:
  void canonicalize();

  std::vector<double> cos_;  // a_0..a_N
  std::vector<double> sin_;  // b_0..b_N with b_0 == 0
};

// A Laurent polynomial sum_{k=-N}^{N} c_k z^k with complex coefficients.
class LaurentPoly {
 public:
  LaurentPoly() : coeffs_(1, 0.0) {}
  // `coeffs` holds c_{-N}..c_N and must have odd length.
  explicit LaurentPoly(std::vector<std::complex<double>> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size() / 2); }
  std::complex<double> coeff(int k) const;
  std::span<const std::complex<double>> coeffs() const { return coeffs_; }

  std::complex<double> evaluate(std::complex<double> z) const;
  std::complex<double> evaluate_on_circle(double x) const;

  // Ascending coefficients of the ordinary polynomial z^N * L(z).
  std::vector<std::complex<double>> shifted_polynomial() const {
    return coeffs_;
  }

 private:
  std::vector<std::complex<double>> coeffs_;
};

double evaluate(const TrigPoly& t, double x);
TrigPoly add(const TrigPoly& lhs, const TrigPoly& rhs);
TrigPoly scale(const TrigPoly& t, double c);
TrigPoly multiply(const TrigPoly& lhs, const TrigPoly& rhs);
TrigPoly derivative(const TrigPoly& t);
// The order-th derivative; order 0 returns t.
TrigPoly derivative(const TrigPoly& t, int order);
// Integer power by repeated multiplication; power(t, 0) is 1.
TrigPoly power(const TrigPoly& t, int exponent);

// cos(x - (p1 + p2)/2) - cos((p1 - p2)/2): vanishes exactly at p1 and p2
// (doubly when they coincide) and nowhere else on the circle.
TrigPoly pair_generator(CirclePoint p1, CirclePoint p2);

// c_0 = a_0, c_k = (a_k - i b_k)/2, c_{-k} = conj(c_k).
LaurentPoly to_laurent(const TrigPoly& t);

inline TrigPoly operator+(const TrigPoly& a, const TrigPoly& b) {
  return add(a, b);
}
inline TrigPoly operator-(const TrigPoly& a) { return scale(a, -1.0); }
inline TrigPoly operator-(const TrigPoly& a, const TrigPoly& b) {
  return add(a, scale(b, -1.0));
}
inline TrigPoly operator*(const TrigPoly& a, const TrigPoly& b) {
  return multiply(a, b);
}
inline TrigPoly operator*(double c, const TrigPoly& a) { return scale(a, c); }

}  // namespace circlering

#endif  // CIRCLERING_TRIGPOLY_HPP_
