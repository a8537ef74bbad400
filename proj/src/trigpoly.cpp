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

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "circlering/errors.hpp"

namespace circlering {

TrigPoly::TrigPoly() : cos_(1, 0.0), sin_(1, 0.0) {}

TrigPoly::TrigPoly(std::vector<double> cos_coeffs,
                   std::vector<double> sin_coeffs)
    : cos_(std::move(cos_coeffs)) {
  if (cos_.empty()) cos_.push_back(0.0);
  const std::size_t n = std::max(cos_.size(), sin_coeffs.size() + 1);
  cos_.resize(n, 0.0);
  sin_.assign(n, 0.0);
  std::copy(sin_coeffs.begin(), sin_coeffs.end(), sin_.begin() + 1);
  for (std::size_t k = 0; k < n; ++k) {
    if (!std::isfinite(cos_[k]) || !std::isfinite(sin_[k])) {
      throw Error("trigonometric polynomial coefficients must be finite");
    }
  }
  canonicalize();
}

TrigPoly TrigPoly::constant(double c) { return TrigPoly({c}, {}); }

TrigPoly TrigPoly::cos_harmonic(int k, double amplitude) {
  if (k == 0) return constant(amplitude);
  std::vector<double> a(std::abs(k) + 1, 0.0);
  a[std::abs(k)] = amplitude;
  return TrigPoly(std::move(a), {});
}

TrigPoly TrigPoly::sin_harmonic(int k, double amplitude) {
  if (k == 0) return TrigPoly();
  std::vector<double> b(std::abs(k), 0.0);
  b[std::abs(k) - 1] = k < 0 ? -amplitude : amplitude;
  return TrigPoly({}, std::move(b));
}

double TrigPoly::cos_coeff(int k) const {
  return k >= 0 && k <= degree() ? cos_[k] : 0.0;
}

double TrigPoly::sin_coeff(int k) const {
  return k >= 1 && k <= degree() ? sin_[k] : 0.0;
}

double TrigPoly::max_abs_coeff() const {
  double m = 0.0;
  for (std::size_t k = 0; k < cos_.size(); ++k) {
    m = std::max({m, std::abs(cos_[k]), std::abs(sin_[k])});
  }
  return m;
}

double TrigPoly::derivative_bound(int order) const {
  double s = 0.0;
  for (int k = 0; k <= degree(); ++k) {
    s += std::pow(static_cast<double>(k), order) *
         (std::abs(cos_[k]) + std::abs(sin_[k]));
  }
  return s;
}

void TrigPoly::canonicalize() {
  const double cutoff = kTrimTolerance * max_abs_coeff();
  while (cos_.size() > 1) {
    const std::size_t top = cos_.size() - 1;
    if (std::max(std::abs(cos_[top]), std::abs(sin_[top])) > cutoff) break;
    cos_.pop_back();
    sin_.pop_back();
  }
  // -0.0 and 0.0 must compare structurally equal after trimming too.
  for (auto& c : cos_) c += 0.0;
  for (auto& s : sin_) s += 0.0;
}

LaurentPoly::LaurentPoly(std::vector<std::complex<double>> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() % 2 == 0) {
    throw Error("Laurent coefficient sequence must have odd length");
  }
}

std::complex<double> LaurentPoly::coeff(int k) const {
  const int n = degree();
  return std::abs(k) <= n ? coeffs_[k + n] : std::complex<double>(0.0);
}

std::complex<double> LaurentPoly::evaluate(std::complex<double> z) const {
  // Horner on z^N L(z), then divide out z^N.
  std::complex<double> acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc / std::pow(z, degree());
}

std::complex<double> LaurentPoly::evaluate_on_circle(double x) const {
  std::complex<double> acc = coeff(0);
  for (int k = 1; k <= degree(); ++k) {
    acc += coeff(k) * std::polar(1.0, k * x) + coeff(-k) * std::polar(1.0, -k * x);
  }
  return acc;
}

double evaluate(const TrigPoly& t, double x) {
  // cos kx and sin kx by angle addition from cos x and sin x.
  const double c1 = std::cos(x), s1 = std::sin(x);
  double c = 1.0, s = 0.0;
  double acc = t.cos_coeff(0);
  for (int k = 1; k <= t.degree(); ++k) {
    const double next = c * c1 - s * s1;
    s = s * c1 + c * s1;
    c = next;
    acc += t.cos_coeff(k) * c + t.sin_coeff(k) * s;
  }
  return acc;
}

TrigPoly add(const TrigPoly& lhs, const TrigPoly& rhs) {
  const int n = std::max(lhs.degree(), rhs.degree());
  std::vector<double> a(n + 1), b(n);
  for (int k = 0; k <= n; ++k) a[k] = lhs.cos_coeff(k) + rhs.cos_coeff(k);
  for (int k = 1; k <= n; ++k) b[k - 1] = lhs.sin_coeff(k) + rhs.sin_coeff(k);
  return TrigPoly(std::move(a), std::move(b));
}

TrigPoly scale(const TrigPoly& t, double c) {
  std::vector<double> a(t.cos_coeffs().begin(), t.cos_coeffs().end());
  std::vector<double> b(t.sin_coeffs().begin(), t.sin_coeffs().end());
  for (auto& v : a) v *= c;
  for (auto& v : b) v *= c;
  return TrigPoly(std::move(a), std::move(b));
}

TrigPoly multiply(const TrigPoly& lhs, const TrigPoly& rhs) {
  const int n1 = lhs.degree();
  const int n2 = rhs.degree();
  const int n = n1 + n2;
  std::vector<double> a(n + 1, 0.0);
  std::vector<double> b(n + 1, 0.0);  // b[0] collects sin(0) = 0 terms

  // sin(-m) = -sin(m), cos(-m) = cos(m).
  auto add_cos = [&](int m, double v) { a[std::abs(m)] += v; };
  auto add_sin = [&](int m, double v) {
    if (m > 0) b[m] += v;
    else if (m < 0) b[-m] -= v;
  };

  for (int j = 0; j <= n1; ++j) {
    const double aj = lhs.cos_coeff(j);
    const double bj = lhs.sin_coeff(j);
    if (aj == 0.0 && bj == 0.0) continue;
    for (int k = 0; k <= n2; ++k) {
      const double ak = rhs.cos_coeff(k);
      const double bk = rhs.sin_coeff(k);
      if (ak == 0.0 && bk == 0.0) continue;
      // cos j cos k = [cos(j-k) + cos(j+k)] / 2
      add_cos(j - k, 0.5 * aj * ak);
      add_cos(j + k, 0.5 * aj * ak);
      // sin j sin k = [cos(j-k) - cos(j+k)] / 2
      add_cos(j - k, 0.5 * bj * bk);
      add_cos(j + k, -0.5 * bj * bk);
      // sin j cos k = [sin(j+k) + sin(j-k)] / 2
      add_sin(j + k, 0.5 * bj * ak);
      add_sin(j - k, 0.5 * bj * ak);
      // cos j sin k = [sin(j+k) - sin(j-k)] / 2
      add_sin(j + k, 0.5 * aj * bk);
      add_sin(j - k, -0.5 * aj * bk);
    }
  }
  b.erase(b.begin());
  return TrigPoly(std::move(a), std::move(b));
}

TrigPoly derivative(const TrigPoly& t) {
  const int n = t.degree();
  std::vector<double> a(n + 1, 0.0), b(n, 0.0);
  for (int k = 1; k <= n; ++k) {
    a[k] = k * t.sin_coeff(k);
    b[k - 1] = -k * t.cos_coeff(k);
  }
  return TrigPoly(std::move(a), std::move(b));
}

TrigPoly derivative(const TrigPoly& t, int order) {
  TrigPoly d = t;
  for (int i = 0; i < order; ++i) d = derivative(d);
  return d;
}

TrigPoly power(const TrigPoly& t, int exponent) {
  TrigPoly result = TrigPoly::constant(1.0);
  TrigPoly base = t;
  while (exponent > 0) {
    if (exponent & 1) result = multiply(result, base);
    exponent >>= 1;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

TrigPoly pair_generator(CirclePoint p1, CirclePoint p2) {
  // cos(x - m) = cos(m) cos x + sin(m) sin x
  const double mid = 0.5 * (p1.theta() + p2.theta());
  const double half_gap = 0.5 * (p1.theta() - p2.theta());
  return TrigPoly({-std::cos(half_gap), std::cos(mid)}, {std::sin(mid)});
}

LaurentPoly to_laurent(const TrigPoly& t) {
  const int n = t.degree();
  std::vector<std::complex<double>> c(2 * n + 1);
  c[n] = t.cos_coeff(0);
  for (int k = 1; k <= n; ++k) {
    const std::complex<double> ck(0.5 * t.cos_coeff(k), -0.5 * t.sin_coeff(k));
    c[n + k] = ck;
    c[n - k] = std::conj(ck);
  }
  return LaurentPoly(std::move(c));
}

}  // namespace circlering
