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

#include "circlering/check/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <utility>
#include <vector>

namespace circlering::check {
namespace {

int sign(double v) { return (v > 0.0) - (v < 0.0); }

// Root of f in [lo, hi] given f(lo), f(hi) of opposite signs.
template <typename F>
double bisect(F f, double lo, double hi) {
  int s_lo = sign(f(lo));
  for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
    const double mid = 0.5 * (lo + hi);
    const int s = sign(f(mid));
    if (s == 0) return mid;
    if (s == s_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

Divisor sampling_divisor(const TrigPoly& t, int samples, const RootConfig& cfg) {
  const TrigPoly dt = derivative(t);
  auto f = [&](double x) { return evaluate(t, x); };
  auto df = [&](double x) { return evaluate(dt, x); };

  std::vector<double> candidates;
  const double step = kTwoPi / samples;
  for (int i = 0; i < samples; ++i) {
    const double lo = i * step;
    const double hi = (i + 1) * step;
    const double v_lo = f(lo), v_hi = f(hi);
    if (v_lo == 0.0) candidates.push_back(lo);
    if (sign(v_lo) * sign(v_hi) < 0) candidates.push_back(bisect(f, lo, hi));
    if (!dt.is_zero() && sign(df(lo)) * sign(df(hi)) < 0) {
      const double x = bisect(df, lo, hi);
      if (zero_order(t, CirclePoint(x), cfg) >= 2) candidates.push_back(x);
    }
  }

  std::vector<double> unique;
  std::sort(candidates.begin(), candidates.end());
  for (double x : candidates) {
    if (unique.empty() || circle_distance(unique.back(), x) > 1e-6) {
      unique.push_back(x);
    }
  }
  if (unique.size() > 1 && circle_distance(unique.front(), unique.back()) <= 1e-6) {
    unique.pop_back();
  }

  std::vector<DivisorEntry> entries;
  for (double x : unique) {
    const CirclePoint p(x);
    const int m = zero_order(t, p, cfg);
    if (m > 0) entries.push_back({p, m});
  }
  return Divisor(std::move(entries));
}

std::int64_t brute_force_matching_count(const Divisor& d) {
  std::vector<int> labels;
  for (std::size_t i = 0; i < d.size(); ++i) {
    labels.insert(labels.end(), d.entries()[i].multiplicity, static_cast<int>(i));
  }
  const std::size_t n = labels.size();
  if (n % 2 != 0) return 0;

  std::set<std::vector<std::pair<int, int>>> seen;
  std::vector<bool> used(n, false);
  std::vector<std::pair<int, int>> pairs;
  auto recurse = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i == n) {
      auto sorted = pairs;
      std::sort(sorted.begin(), sorted.end());
      seen.insert(std::move(sorted));
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pairs.emplace_back(std::min(labels[i], labels[j]), std::max(labels[i], labels[j]));
      self(self);
      pairs.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  recurse(recurse);
  return static_cast<std::int64_t>(seen.size());
}

std::int64_t double_factorial(int n) {
  std::int64_t r = 1;
  for (int k = n; k > 1; k -= 2) r *= k;
  return r;
}

}  // namespace circlering::check
