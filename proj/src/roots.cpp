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

#include "circlering/roots.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numeric>
#include <sstream>

#include "circlering/errors.hpp"

namespace circlering {
namespace {

using Complex = std::complex<double>;

// Coefficient perturbation, relative to the largest coefficient, that the
// inclusion discs account for. Generators built by repeated products carry
// a few ulps of error; this leaves an order of magnitude of headroom.
constexpr double kPseudoPerturbation = 64.0 * DBL_EPSILON;

// Largest inclusion radius used for grouping. Pairs closer than this are
// always proposed for merging; the derivative test decides.
constexpr double kMaxInclusionRadius = 1e-2;

constexpr double kInitialRadius = 1.1;

// Polynomial value and first derivative by Horner's rule, plus the
// magnitude sum_k |a_k| |z|^k that bounds rounding in the evaluation.
struct HornerResult {
  Complex value;
  Complex slope;
  double magnitude;
};

HornerResult horner(std::span<const Complex> a, Complex z) {
  Complex p = 0.0, dp = 0.0;
  double m = 0.0;
  const double r = std::abs(z);
  for (std::size_t k = a.size(); k-- > 0;) {
    dp = dp * z + p;
    p = p * z + a[k];
    m = m * r + std::abs(a[k]);
  }
  return {p, dp, m};
}

Complex evaluate_poly(std::span<const Complex> a, Complex z) {
  Complex p = 0.0;
  for (std::size_t k = a.size(); k-- > 0;) p = p * z + a[k];
  return p;
}

// Coefficients of the order-th derivative.
std::vector<Complex> poly_derivative(std::span<const Complex> a, int order) {
  if (order >= static_cast<int>(a.size())) return {Complex(0.0)};
  std::vector<Complex> d(a.size() - order);
  for (std::size_t k = 0; k < d.size(); ++k) {
    double factor = 1.0;
    for (int j = 1; j <= order; ++j) factor *= static_cast<double>(k + j);
    d[k] = a[k + order] * factor;
  }
  return d;
}

// Drops top zero coefficients and divides by the largest magnitude.
// Returns an empty vector for the zero polynomial.
std::vector<Complex> normalized(std::span<const Complex> coeffs) {
  std::size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == Complex(0.0)) --n;
  if (n == 0) return {};
  double scale = 0.0;
  for (std::size_t k = 0; k < n; ++k) scale = std::max(scale, std::abs(coeffs[k]));
  std::vector<Complex> a(coeffs.begin(), coeffs.begin() + n);
  for (auto& c : a) c /= scale;
  return a;
}

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(std::size_t i, std::size_t j) { parent[find(i)] = find(j); }
  std::vector<std::size_t> parent;
};

std::string describe(const Divisor& d) { return to_string(d); }

}  // namespace

void RootConfig::validate() const {
  if (!(tol_radius > 0.0) || !(tol_residual > 0.0) || !(tol_order > 0.0) ||
      !(cluster_radius > 0.0) ||
      max_iter < 1 || grid_size < 1) {
    throw Error("root configuration: tolerances and counts must be positive");
  }
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs,
                                      const RootConfig& cfg, int* iterations) {
  const std::vector<Complex> a = normalized(coeffs);
  if (a.empty()) throw ZeroPolynomialError();
  const int n = static_cast<int>(a.size()) - 1;
  if (iterations) *iterations = 0;
  if (n == 0) return {};
  if (n == 1) return {-a[0] / a[1]};

  // Fixed irrational offset so that no start point sits on a symmetry axis.
  const double offset = 0.5 * (std::sqrt(5.0) - 1.0);
  std::vector<Complex> z(n);
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(kInitialRadius, kTwoPi * k / n + offset);
  }

  // A root stops moving once its residual is at rounding level; it gets one
  // more correction after first reaching that level.
  const double stop = 4.0 * n * DBL_EPSILON;
  std::vector<int> settled(n, 0);
  int sweep = 0;
  for (; sweep < cfg.max_iter; ++sweep) {
    bool all_done = true;
    for (int j = 0; j < n; ++j) {
      if (settled[j] >= 2) continue;
      const HornerResult h = horner(a, z[j]);
      if (std::abs(h.value) <= stop * h.magnitude) ++settled[j];
      if (h.value == Complex(0.0)) {
        settled[j] = 2;
        continue;
      }
      Complex repulsion = 0.0;
      for (int k = 0; k < n; ++k) {
        if (k != j) repulsion += 1.0 / (z[j] - z[k]);
      }
      Complex step;
      if (h.slope == Complex(0.0)) {
        step = -1.0 / repulsion;
      } else {
        const Complex ratio = h.value / h.slope;
        step = ratio / (1.0 - ratio * repulsion);
      }
      if (std::isfinite(step.real()) && std::isfinite(step.imag())) {
        z[j] -= step;
      }
      if (settled[j] < 2) all_done = false;
    }
    if (all_done) break;
  }
  if (iterations) *iterations = sweep;

  const int pending = static_cast<int>(
      std::count_if(settled.begin(), settled.end(), [](int s) { return s < 2; }));
  if (pending > 0) {
    std::ostringstream diag;
    diag << "degree " << n << ", " << pending << " of " << n
         << " roots above rounding level after " << cfg.max_iter << " sweeps;";
    for (int j = 0; j < n; ++j) {
      if (settled[j] < 2) {
        const HornerResult h = horner(a, z[j]);
        diag << " z=" << z[j] << " |q|/scale=" << std::abs(h.value) / h.magnitude;
      }
    }
    throw NonConvergenceError("root iteration did not converge", diag.str());
  }
  return z;
}

namespace {

// Derivative coefficient vectors of one polynomial, built on demand.
class DerivativeTable {
 public:
  explicit DerivativeTable(std::vector<Complex> a) { table_.push_back(std::move(a)); }

  const std::vector<Complex>& operator[](int order) {
    while (static_cast<int>(table_.size()) <= order) {
      table_.push_back(poly_derivative(table_.back(), 1));
    }
    return table_[order];
  }

 private:
  std::vector<std::vector<Complex>> table_;
};

// Newton on the (m-1)-th derivative from `start`; falls back to `start`
// when the iteration leaves the neighbourhood `reach`.
Complex polish(DerivativeTable& d, int m, Complex start, double reach) {
  // Fetch the higher order first: growing the table moves its rows.
  const auto& upper = d[m];
  const auto& lower = d[m - 1];
  Complex z = start;
  for (int it = 0; it < 30; ++it) {
    const Complex slope = evaluate_poly(upper, z);
    if (slope == Complex(0.0)) break;
    const Complex step = evaluate_poly(lower, z) / slope;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
    if (std::abs(step) <= 4.0 * DBL_EPSILON * std::max(1.0, std::abs(z))) break;
  }
  return std::abs(z - start) <= reach ? z : start;
}

bool vanishes_to_order(DerivativeTable& d, int m, Complex z, double tol) {
  for (int k = 0; k < m; ++k) {
    const HornerResult h = horner(d[k], z);
    if (std::abs(h.value) > tol * h.magnitude) return false;
  }
  return true;
}

}  // namespace

std::vector<RootCluster> cluster_roots(std::span<const Complex> coeffs,
                                       std::span<const Complex> roots,
                                       const RootConfig& cfg) {
  std::vector<Complex> a = normalized(coeffs);
  if (a.empty()) throw ZeroPolynomialError();
  const std::size_t n = roots.size();
  if (n == 0) return {};
  const Complex lead = a.back();
  DerivativeTable deriv(std::move(a));

  // Inclusion radius: how far a root could move under a coefficient
  // perturbation of relative size kPseudoPerturbation. Members of a
  // perturbed multiple root get radii larger than their spread.
  std::vector<double> radius(n, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    Complex prod = lead;
    for (std::size_t k = 0; k < n; ++k) {
      if (k != j) prod *= roots[j] - roots[k];
    }
    const HornerResult h = horner(deriv[0], roots[j]);
    const double slack = std::abs(h.value) + kPseudoPerturbation * h.magnitude;
    if (std::abs(prod) > 0.0) {
      radius[j] = std::min(slack / std::abs(prod), kMaxInclusionRadius);
    }
  }

  struct Edge {
    double distance;
    std::size_t i, j;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = std::abs(roots[i] - roots[j]);
      if (dist <= std::max({radius[i] + radius[j], cfg.cluster_radius,
                            kMaxInclusionRadius})) {
        edges.push_back({dist, i, j});
      }
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& x, const Edge& y) {
    return x.distance < y.distance;
  });

  // Agglomerate closest-first. Each set keeps its members and a polished
  // center.
  DisjointSets sets(n);
  std::vector<std::vector<std::size_t>> members(n);
  std::vector<Complex> center(roots.begin(), roots.end());
  for (std::size_t i = 0; i < n; ++i) members[i] = {i};

  for (const Edge& e : edges) {
    const std::size_t ri = sets.find(e.i), rj = sets.find(e.j);
    if (ri == rj) continue;
    std::vector<std::size_t> merged = members[ri];
    merged.insert(merged.end(), members[rj].begin(), members[rj].end());
    const int m = static_cast<int>(merged.size());

    Complex mean = 0.0;
    for (std::size_t k : merged) mean += roots[k];
    mean /= static_cast<double>(m);
    double spread = 0.0;
    for (std::size_t k : merged) spread = std::max(spread, std::abs(roots[k] - mean));
    const Complex c = polish(deriv, m, mean, 2.0 * spread + cfg.cluster_radius);

    if (e.distance > cfg.cluster_radius) {
      if (!vanishes_to_order(deriv, m, c, cfg.tol_order)) continue;
      // Members on the unit circle must not merge into a center off it.
      const bool members_on_circle = std::all_of(
          merged.begin(), merged.end(), [&](std::size_t k) {
            return std::abs(std::abs(roots[k]) - 1.0) <= cfg.tol_radius;
          });
      if (members_on_circle && std::abs(std::abs(c) - 1.0) > cfg.tol_radius) continue;
    }
    sets.unite(ri, rj);
    const std::size_t root = sets.find(ri);
    members[root] = std::move(merged);
    center[root] = c;
  }

  std::vector<RootCluster> clusters;
  for (std::size_t i = 0; i < n; ++i) {
    if (sets.find(i) != i) continue;
    const int m = static_cast<int>(members[i].size());
    // Singletons still get one polishing pass on the polynomial itself.
    const Complex c = m == 1 ? polish(deriv, 1, roots[i], cfg.cluster_radius)
                             : center[i];
    clusters.push_back({c, m});
  }
  std::sort(clusters.begin(), clusters.end(), [](const auto& x, const auto& y) {
    return std::arg(x.center) < std::arg(y.center);
  });
  return clusters;
}

int polynomial_zero_order(std::span<const Complex> coeffs, Complex z,
                          const RootConfig& cfg) {
  const std::vector<Complex> a = normalized(coeffs);
  if (a.empty()) throw ZeroPolynomialError();
  const int n = static_cast<int>(a.size()) - 1;
  for (int m = 0; m < n; ++m) {
    const std::vector<Complex> d = poly_derivative(a, m);
    const HornerResult h = horner(d, z);
    if (std::abs(h.value) > cfg.tol_order * h.magnitude) return m;
  }
  return n;
}

namespace {

// Shared path for trigonometric and ordinary polynomials: find roots,
// cluster, keep clusters on the circle, and cross-check each multiplicity
// with `order_at`.
template <typename OrderFn>
Divisor circle_divisor_impl(std::span<const Complex> coeffs,
                            const RootConfig& cfg, RootDiagnostics* diagnostics,
                            OrderFn order_at) {
  cfg.validate();
  RootDiagnostics local;
  RootDiagnostics& diag = diagnostics ? *diagnostics : local;
  diag = {};

  const std::vector<Complex> a = normalized(coeffs);
  if (a.empty()) throw ZeroPolynomialError();
  // Roots at the origin are never on the circle; strip them.
  std::size_t low = 0;
  while (a[low] == Complex(0.0)) ++low;
  const std::span<const Complex> q(a.data() + low, a.size() - low);
  diag.polynomial_degree = static_cast<int>(q.size()) - 1;

  const std::vector<Complex> roots = polynomial_roots(q, cfg, &diag.iterations);
  const std::vector<RootCluster> clusters = cluster_roots(q, roots, cfg);

  std::vector<DivisorEntry> entries;
  std::ostringstream mismatches;
  for (const auto& c : clusters) {
    const double off = std::abs(std::abs(c.center) - 1.0);
    if (off > cfg.tol_radius) {
      if (off <= 10.0 * cfg.tol_radius) {
        std::ostringstream w;
        w << "root cluster of size " << c.size << " at " << c.center
          << " is " << off << " off the circle; excluded";
        diag.warnings.push_back(w.str());
      }
      continue;
    }
    const HornerResult h = horner(q, c.center);
    if (std::abs(h.value) > cfg.tol_residual * h.magnitude) {
      std::ostringstream w;
      w << "near-circle root cluster at " << c.center << " has residual "
        << std::abs(h.value) / h.magnitude << "; excluded";
      diag.warnings.push_back(w.str());
      continue;
    }
    const CirclePoint p(std::arg(c.center));
    const int order = order_at(c.center, p);
    if (order != c.size) {
      mismatches << " theta=" << p.theta() << " cluster=" << c.size
                 << " derivative-order=" << order << ";";
    }
    entries.push_back({p, c.size});
  }
  Divisor result(std::move(entries));
  if (!mismatches.str().empty()) {
    throw NonConvergenceError(
        "cluster size and derivative order disagree",
        "degree " + std::to_string(diag.polynomial_degree) + ", divisor " +
            describe(result) + ":" + mismatches.str());
  }
  return result;
}

}  // namespace

Divisor unit_circle_divisor(std::span<const Complex> coeffs,
                            const RootConfig& cfg, RootDiagnostics* diagnostics) {
  return circle_divisor_impl(coeffs, cfg, diagnostics,
                             [&](Complex z, CirclePoint) {
                               return polynomial_zero_order(coeffs, z, cfg);
                             });
}

Divisor circle_divisor(const TrigPoly& t, const RootConfig& cfg,
                       RootDiagnostics* diagnostics) {
  if (t.is_zero()) throw ZeroPolynomialError();
  const std::vector<Complex> q = to_laurent(t).shifted_polynomial();
  return circle_divisor_impl(q, cfg, diagnostics, [&](Complex, CirclePoint p) {
    return zero_order(t, p, cfg);
  });
}

int zero_order(const TrigPoly& t, CirclePoint p, const RootConfig& cfg) {
  if (t.is_zero()) throw ZeroPolynomialError();
  const int cap = 2 * t.degree();
  TrigPoly d = t;
  for (int m = 0; m < cap; ++m) {
    if (std::abs(evaluate(d, p.theta())) > cfg.tol_order * d.derivative_bound(0)) {
      return m;
    }
    d = derivative(d);
  }
  return cap;
}

int sign_changes(const TrigPoly& t, const RootConfig& cfg) {
  const Divisor zeros = circle_divisor(t, cfg);

  std::vector<double> samples;
  samples.reserve(cfg.grid_size + zeros.size());
  for (int i = 0; i < cfg.grid_size; ++i) {
    samples.push_back(kTwoPi * i / cfg.grid_size);
  }
  // One extra sample between each pair of neighbouring zeros, so that zeros
  // closer than the grid spacing are still separated by a sample.
  const auto& e = zeros.entries();
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double from = e[i].point.theta();
    double to = e[(i + 1) % e.size()].point.theta();
    if (to <= from) to += kTwoPi;
    samples.push_back(CirclePoint(0.5 * (from + to)).theta());
  }
  std::sort(samples.begin(), samples.end());

  int previous = 0;
  int first = 0;
  int changes = 0;
  for (double x : samples) {
    const bool near_zero = std::any_of(e.begin(), e.end(), [&](const auto& z) {
      return circle_distance(x, z.point.theta()) <= cfg.cluster_radius;
    });
    if (near_zero) continue;
    const double v = evaluate(t, x);
    const int s = (v > 0.0) - (v < 0.0);
    if (s == 0) continue;
    if (first == 0) first = s;
    if (previous != 0 && s != previous) ++changes;
    previous = s;
  }
  if (first != 0 && previous != first) ++changes;
  return changes;
}

}  // namespace circlering
