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

#ifndef CIRCLERING_CIRCLE_POINT_HPP_
#define CIRCLERING_CIRCLE_POINT_HPP_

#include <cmath>
#include <numbers>

namespace circlering {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Default radius within which two circle points are the same point.
inline constexpr double kDefaultPointTolerance = 1e-8;

// Arc-length distance on R / 2piZ, in [0, pi].
inline double circle_distance(double a, double b) {
  double d = std::fmod(std::abs(a - b), kTwoPi);
  return d > std::numbers::pi ? kTwoPi - d : d;
}

// A point of the unit circle, stored as an angle in [0, 2pi). Each point p
// is also the maximal ideal of functions vanishing at p.
class CirclePoint {
 public:
  CirclePoint() = default;
  explicit CirclePoint(double theta) : theta_(reduce(theta)) {}

  double theta() const { return theta_; }

  bool near(CirclePoint other, double tol = kDefaultPointTolerance) const {
    return circle_distance(theta_, other.theta_) <= tol;
  }

  static double reduce(double theta) {
    double r = std::fmod(theta, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    // fmod of a tiny negative value can round up to exactly 2pi.
    if (r >= kTwoPi) r = 0.0;
    return r;
  }

 private:
  double theta_ = 0.0;
};

inline double circle_distance(CirclePoint a, CirclePoint b) {
  return circle_distance(a.theta(), b.theta());
}

}  // namespace circlering

#endif  // CIRCLERING_CIRCLE_POINT_HPP_
