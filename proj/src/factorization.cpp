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

#include "circlering/factorization.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "circlering/errors.hpp"
#include "circlering/roots.hpp"

namespace circlering {
namespace {

void check_enumerable(const Divisor& d) {
  const int deg = degree(d);
  if (deg % 2 != 0) throw OddDegreeError(deg);
  if (deg > kMaxFactorizationDegree) {
    throw TooLargeError(deg, kMaxFactorizationDegree);
  }
}

// Enumerates multiset perfect matchings as sorted pair lists: the first
// element of each pair is the smallest remaining label, and consecutive
// pairs sharing a first label have nondecreasing partners. Every multiset
// of pairs is produced exactly once.
class MatchingWalker {
 public:
  MatchingWalker(const Divisor& d,
                 const std::function<void(const Factorization&)>& visit)
      : visit_(visit) {
    for (const auto& e : d.entries()) {
      points_.push_back(e.point);
      counts_.push_back(e.multiplicity);
    }
  }

  long long run() {
    walk(-1, -1);
    return count_;
  }

 private:
  void walk(int prev_first, int prev_partner) {
    const int k = static_cast<int>(counts_.size());
    int first = 0;
    while (first < k && counts_[first] == 0) ++first;
    if (first == k) {
      ++count_;
      if (visit_) visit_(current_);
      return;
    }
    --counts_[first];
    const int lowest = first == prev_first ? prev_partner : first;
    for (int partner = lowest; partner < k; ++partner) {
      if (counts_[partner] == 0) continue;
      --counts_[partner];
      current_.factors.emplace_back(points_[first], points_[partner]);
      walk(first, partner);
      current_.factors.pop_back();
      ++counts_[partner];
    }
    ++counts_[first];
  }

  const std::function<void(const Factorization&)>& visit_;
  std::vector<CirclePoint> points_;
  std::vector<int> counts_;
  Factorization current_;
  long long count_ = 0;
};

}  // namespace

Irreducible::Irreducible(CirclePoint p, CirclePoint q)
    : first_(p.theta() <= q.theta() ? p : q),
      second_(p.theta() <= q.theta() ? q : p) {}

Divisor Irreducible::divisor() const {
  return Divisor({{first_, 1}, {second_, 1}});
}

TrigPoly Factorization::product() const {
  TrigPoly p = TrigPoly::constant(1.0);
  for (const auto& f : factors) p = multiply(p, f.witness());
  return p;
}

Divisor Factorization::divisor() const {
  Divisor d;
  for (const auto& f : factors) d = add(d, f.divisor());
  return d;
}

long long for_each_factorization(
    const Divisor& d, const std::function<void(const Factorization&)>& visit) {
  check_enumerable(d);
  return MatchingWalker(d, visit).run();
}

std::vector<Factorization> enumerate_factorizations(const Divisor& d) {
  std::vector<Factorization> out;
  for_each_factorization(d, [&](const Factorization& f) { out.push_back(f); });
  return out;
}

HalfFactorialReport is_half_factorial(const Divisor& d) {
  HalfFactorialReport report;
  std::set<int> lengths;
  report.factorization_count = for_each_factorization(
      d, [&](const Factorization& f) { lengths.insert(f.length()); });
  report.lengths.assign(lengths.begin(), lengths.end());
  report.half_factorial = report.lengths.size() == 1 &&
                          report.lengths.front() == degree(d) / 2;
  return report;
}

NonUfdReport demo_nonufd() {
  NonUfdReport r;
  const TrigPoly cos_x = TrigPoly::cos_harmonic(1);
  const TrigPoly one = TrigPoly::constant(1.0);
  const TrigPoly sin_x = TrigPoly::sin_harmonic(1);
  const TrigPoly one_plus_sin = one + sin_x;
  const TrigPoly one_minus_sin = one - sin_x;

  r.cos_squared = multiply(cos_x, cos_x);
  r.sin_product = multiply(one_plus_sin, one_minus_sin);
  const int n = std::max(r.cos_squared.degree(), r.sin_product.degree());
  for (int k = 0; k <= n; ++k) {
    r.max_coefficient_gap = std::max(
        {r.max_coefficient_gap,
         std::abs(r.cos_squared.cos_coeff(k) - r.sin_product.cos_coeff(k)),
         std::abs(r.cos_squared.sin_coeff(k) - r.sin_product.sin_coeff(k))});
  }

  r.cos_divisor = circle_divisor(cos_x);
  r.one_plus_sin_divisor = circle_divisor(one_plus_sin);
  r.one_minus_sin_divisor = circle_divisor(one_minus_sin);
  r.product_divisor = circle_divisor(r.cos_squared);
  r.factorizations = enumerate_factorizations(r.product_divisor);

  constexpr double kPi = std::numbers::pi;
  constexpr double kTol = 1e-6;
  const CirclePoint top(kPi / 2), bottom(3 * kPi / 2);
  const Divisor expect_cos({{top, 1}, {bottom, 1}});
  const Divisor expect_plus = Divisor::point(bottom, 2);
  const Divisor expect_minus = Divisor::point(top, 2);
  const Divisor expect_product({{top, 2}, {bottom, 2}});
  r.ok = r.max_coefficient_gap <= 1e-12 &&
         r.cos_divisor.matches(expect_cos, kTol) &&
         r.one_plus_sin_divisor.matches(expect_plus, kTol) &&
         r.one_minus_sin_divisor.matches(expect_minus, kTol) &&
         r.product_divisor.matches(expect_product, kTol) &&
         r.factorizations.size() == 2 &&
         std::all_of(r.factorizations.begin(), r.factorizations.end(),
                     [](const Factorization& f) { return f.length() == 2; });
  return r;
}

}  // namespace circlering
