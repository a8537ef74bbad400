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

#include "circlering/check/generators.hpp"

namespace circlering::check {
namespace {

// 1 with probability 0.6, otherwise uniform in 2..max_multiplicity.
int draw_multiplicity(Rng& rng, int remaining, int max_multiplicity) {
  int m = 1;
  if (max_multiplicity > 1 && rng.uniform() >= 0.6) {
    m = rng.integer(2, max_multiplicity);
  }
  return m < remaining ? m : remaining;
}

}  // namespace

TrigPoly random_trigpoly_of_degree(Rng& rng, int degree, double amplitude) {
  std::vector<double> a(degree + 1), b(degree);
  for (auto& v : a) v = rng.uniform(-amplitude, amplitude);
  for (auto& v : b) v = rng.uniform(-amplitude, amplitude);
  return TrigPoly(std::move(a), std::move(b));
}

TrigPoly random_trigpoly(Rng& rng, int max_degree, double amplitude) {
  return random_trigpoly_of_degree(rng, rng.integer(0, max_degree), amplitude);
}

std::vector<CirclePoint> random_points(Rng& rng, int count, double min_separation,
                                       std::span<const CirclePoint> avoid) {
  std::vector<CirclePoint> taken(avoid.begin(), avoid.end());
  std::vector<CirclePoint> out;
  while (static_cast<int>(out.size()) < count) {
    const CirclePoint p(rng.uniform(0.0, kTwoPi));
    bool clear = true;
    for (const auto& q : taken) {
      if (circle_distance(p, q) < min_separation) {
        clear = false;
        break;
      }
    }
    if (!clear) continue;
    taken.push_back(p);
    out.push_back(p);
  }
  return out;
}

Divisor random_divisor_of_degree(Rng& rng, int degree, double min_separation,
                                 int max_multiplicity) {
  std::vector<int> mults;
  for (int left = degree; left > 0;) {
    const int m = draw_multiplicity(rng, left, max_multiplicity);
    mults.push_back(m);
    left -= m;
  }
  const auto points =
      random_points(rng, static_cast<int>(mults.size()), min_separation);
  std::vector<DivisorEntry> entries;
  for (std::size_t i = 0; i < mults.size(); ++i) entries.push_back({points[i], mults[i]});
  return Divisor(std::move(entries));
}

Divisor random_divisor(Rng& rng, int max_degree, double min_separation,
                       int max_multiplicity) {
  return random_divisor_of_degree(rng, rng.integer(0, max_degree), min_separation,
                                  max_multiplicity);
}

PairProduct random_pair_product(Rng& rng, int max_pairs, double min_separation) {
  const int pairs = rng.integer(1, max_pairs);
  PairProduct out{TrigPoly::constant(1.0), Divisor()};
  std::vector<CirclePoint> used;
  for (int i = 0; i < pairs; ++i) {
    const bool coincident = rng.uniform() < 0.25;
    const auto pts = random_points(rng, coincident ? 1 : 2, min_separation, used);
    used.insert(used.end(), pts.begin(), pts.end());
    const CirclePoint p = pts[0];
    const CirclePoint q = coincident ? pts[0] : pts[1];
    out.poly = multiply(out.poly, pair_generator(p, q));
    out.divisor = add(out.divisor, Divisor({{p, 1}, {q, 1}}));
  }
  return out;
}

}  // namespace circlering::check
