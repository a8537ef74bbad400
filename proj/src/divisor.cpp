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

#include "circlering/divisor.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "circlering/errors.hpp"

namespace circlering {
namespace {

// Weighted circular mean of a cluster, computed as offsets from its first
// member so that a singleton keeps its angle bit-for-bit.
DivisorEntry merge_cluster(std::span<const DivisorEntry> cluster) {
  if (cluster.size() == 1) return cluster.front();
  const double base = cluster.front().point.theta();
  double weighted = 0.0;
  int total = 0;
  for (const auto& e : cluster) {
    weighted += e.multiplicity * std::remainder(e.point.theta() - base, kTwoPi);
    total += e.multiplicity;
  }
  return {CirclePoint(base + weighted / total), total};
}

}  // namespace

Divisor::Divisor(std::vector<DivisorEntry> entries, double tolerance)
    : tolerance_(tolerance) {
  if (!(tolerance > 0.0)) throw Error("point tolerance must be positive");
  for (const auto& e : entries) {
    if (e.multiplicity < 1) throw Error("multiplicities must be positive");
  }
  if (entries.empty()) return;
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.point.theta() < b.point.theta();
  });

  // Single-linkage runs along the sorted angles.
  std::vector<std::vector<DivisorEntry>> clusters;
  for (const auto& e : entries) {
    if (!clusters.empty() &&
        circle_distance(clusters.back().back().point, e.point) <= tolerance) {
      clusters.back().push_back(e);
    } else {
      clusters.push_back({e});
    }
  }
  // Close the seam: the last run may continue into the first.
  if (clusters.size() > 1 &&
      circle_distance(clusters.back().back().point,
                      clusters.front().front().point) <= tolerance) {
    auto& last = clusters.back();
    last.insert(last.end(), clusters.front().begin(), clusters.front().end());
    clusters.erase(clusters.begin());
  }

  entries_.reserve(clusters.size());
  for (const auto& c : clusters) entries_.push_back(merge_cluster(c));
  std::sort(entries_.begin(), entries_.end(), [](const auto& a, const auto& b) {
    return a.point.theta() < b.point.theta();
  });
}

Divisor Divisor::point(CirclePoint p, int multiplicity, double tolerance) {
  return Divisor({{p, multiplicity}}, tolerance);
}

int Divisor::multiplicity_at(CirclePoint p) const {
  for (const auto& e : entries_) {
    if (e.point.near(p, tolerance_)) return e.multiplicity;
  }
  return 0;
}

std::vector<CirclePoint> Divisor::expanded() const {
  std::vector<CirclePoint> out;
  for (const auto& e : entries_) out.insert(out.end(), e.multiplicity, e.point);
  return out;
}

bool Divisor::matches(const Divisor& other, double point_tol) const {
  if (entries_.size() != other.entries_.size()) return false;
  // Both sides are sorted by angle, but a point near the seam may sit at
  // either end, so match greedily instead of index by index.
  std::vector<bool> used(other.entries_.size(), false);
  for (const auto& e : entries_) {
    bool found = false;
    for (std::size_t j = 0; j < other.entries_.size(); ++j) {
      if (!used[j] && other.entries_[j].multiplicity == e.multiplicity &&
          e.point.near(other.entries_[j].point, point_tol)) {
        used[j] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

Divisor add(const Divisor& a, const Divisor& b) {
  std::vector<DivisorEntry> all(a.entries().begin(), a.entries().end());
  all.insert(all.end(), b.entries().begin(), b.entries().end());
  return Divisor(std::move(all), std::max(a.tolerance(), b.tolerance()));
}

int degree(const Divisor& d) {
  int total = 0;
  for (const auto& e : d.entries()) total += e.multiplicity;
  return total;
}

bool leq(const Divisor& a, const Divisor& b) {
  const double tol = std::max(a.tolerance(), b.tolerance());
  for (const auto& e : a.entries()) {
    const bool covered = std::any_of(
        b.entries().begin(), b.entries().end(), [&](const DivisorEntry& f) {
          return e.point.near(f.point, tol) && e.multiplicity <= f.multiplicity;
        });
    if (!covered) return false;
  }
  return true;
}

Parity parity(const Divisor& d) { return static_cast<Parity>(degree(d) % 2); }

std::string to_string(const Divisor& d) {
  std::string out = "{";
  char buf[64];
  for (std::size_t i = 0; i < d.size(); ++i) {
    const auto& e = d.entries()[i];
    std::snprintf(buf, sizeof buf, "%s%.12g:%d", i ? ", " : "",
                  e.point.theta(), e.multiplicity);
    out += buf;
  }
  return out + "}";
}

}  // namespace circlering
