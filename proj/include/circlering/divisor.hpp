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

#ifndef CIRCLERING_DIVISOR_HPP_
#define CIRCLERING_DIVISOR_HPP_

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "circlering/circle_point.hpp"

namespace circlering {

struct DivisorEntry {
  CirclePoint point;
  int multiplicity = 1;
};

// Element of Z/2, written additively.
enum class Parity : int { kEven = 0, kOdd = 1 };

inline Parity operator+(Parity a, Parity b) {
  return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}

// A finite formal sum of circle points with positive multiplicities: the
// canonical form of the nonzero ideal m_{p1}^{a1} ... m_{pn}^{an}. The empty
// divisor is the unit ideal.
//
// Entries are sorted by angle. Points within `tolerance` of each other (in
// the circle metric, across the 0/2pi seam) are merged into one entry whose
// point is the multiplicity-weighted circular mean of the cluster.
class Divisor {
 public:
  Divisor() = default;
  // Throws Error on a nonpositive multiplicity or nonpositive tolerance.
  explicit Divisor(std::vector<DivisorEntry> entries,
                   double tolerance = kDefaultPointTolerance);

  static Divisor point(CirclePoint p, int multiplicity = 1,
                       double tolerance = kDefaultPointTolerance);

  std::span<const DivisorEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double tolerance() const { return tolerance_; }

  // Multiplicity of the entry within tolerance of p, or 0.
  int multiplicity_at(CirclePoint p) const;

  // Points repeated by multiplicity, in angular order.
  std::vector<CirclePoint> expanded() const;

  // Same entry count, every point within `point_tol`, exact multiplicities.
  bool matches(const Divisor& other, double point_tol) const;

  friend bool operator==(const Divisor& a, const Divisor& b) {
    return a.matches(b, std::max(a.tolerance_, b.tolerance_));
  }

 private:
  std::vector<DivisorEntry> entries_;
  double tolerance_ = kDefaultPointTolerance;
};

// Multiset union; degree(add(a, b)) = degree(a) + degree(b).
Divisor add(const Divisor& a, const Divisor& b);
int degree(const Divisor& d);
// Pointwise a <= b. Ideal containment reverses: ideal(b) is inside ideal(a).
bool leq(const Divisor& a, const Divisor& b);
Parity parity(const Divisor& d);

// "{0.785398163397:2, 3.14159265359:1}" with 12 significant digits.
std::string to_string(const Divisor& d);

}  // namespace circlering

#endif  // CIRCLERING_DIVISOR_HPP_
