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

#ifndef CIRCLERING_ROOTS_HPP_
#define CIRCLERING_ROOTS_HPP_

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "circlering/circle_point.hpp"
#include "circlering/divisor.hpp"
#include "circlering/trigpoly.hpp"

namespace circlering {

struct RootConfig {
  // Maximum ||z| - 1| for a root (cluster center) to count as on the circle.
  double tol_radius = 1e-6;
  // Vanishing threshold for a root's residual, relative to the coefficient
  // scale.
  double tol_residual = 1e-8;
  // Vanishing threshold for derivatives when deciding the order of a zero
  // or validating a cluster, relative to the derivative's coefficient
  // scale. Tighter than tol_residual: nearby simple zeros must not read as
  // one multiple zero.
  double tol_order = 1e-11;
  int max_iter = 200;
  // Roots closer than this are always merged into one cluster.
  double cluster_radius = 1e-5;
  // Sample count for sign_changes.
  int grid_size = 4096;

  // Throws Error unless all tolerances are positive.
  void validate() const;
};

// Side information collected by the circle root finder.
struct RootDiagnostics {
  int iterations = 0;
  int polynomial_degree = 0;
  // Clusters whose center is off the circle by more than tol_radius but
  // less than 10 tol_radius. They are excluded from the divisor.
  std::vector<std::string> warnings;
};

// All roots of sum_k coeffs[k] z^k by Aberth-Ehrlich simultaneous
// iteration from a deterministic start on the circle |z| = 1.1. Trailing
// (top) zero coefficients are ignored. Throws NonConvergenceError when an
// approximation has not reached rounding level within cfg.max_iter sweeps.
std::vector<std::complex<double>> polynomial_roots(
    std::span<const std::complex<double>> coeffs, const RootConfig& cfg,
    int* iterations = nullptr);

// A group of computed roots that approximates one root of multiplicity
// `size`.
struct RootCluster {
  std::complex<double> center;
  int size = 0;
};

// Groups computed roots into clusters that each approximate one multiple
// root. Roots within cfg.cluster_radius always merge. Roots whose
// backward-error inclusion discs overlap merge only if the polynomial and
// its first m-1 derivatives vanish (to cfg.tol_order) at the merged center,
// m being the merged size. Each center is polished by Newton's method on
// the (m-1)-th derivative, where the root is simple.
std::vector<RootCluster> cluster_roots(
    std::span<const std::complex<double>> coeffs,
    std::span<const std::complex<double>> roots, const RootConfig& cfg);

// Order of vanishing of a complex polynomial at z: the number of leading
// derivatives below cfg.tol_order times their coefficient scale.
int polynomial_zero_order(std::span<const std::complex<double>> coeffs,
                          std::complex<double> z, const RootConfig& cfg);

// Zeros on the unit circle of an ordinary complex polynomial (ascending
// coefficients), with multiplicities. Zeros at the origin are ignored.
// Throws ZeroPolynomialError for the zero polynomial.
Divisor unit_circle_divisor(std::span<const std::complex<double>> coeffs,
                            const RootConfig& cfg = {},
                            RootDiagnostics* diagnostics = nullptr);

// The zeros of t on the circle with multiplicities. Throws
// ZeroPolynomialError for t = 0, NonConvergenceError when the iteration
// stalls or a cluster size disagrees with zero_order.
Divisor circle_divisor(const TrigPoly& t, const RootConfig& cfg = {},
                       RootDiagnostics* diagnostics = nullptr);

// Largest m such that t, t', ..., t^{(m-1)} vanish at p, each within
// cfg.tol_order times its derivative_bound; 0 when t(p) is not small.
// Never exceeds 2 * degree(t). Throws ZeroPolynomialError for t = 0.
int zero_order(const TrigPoly& t, CirclePoint p, const RootConfig& cfg = {});

// Sign alternations of t around the circle on cfg.grid_size samples,
// skipping samples within cfg.cluster_radius of a zero. Always even.
int sign_changes(const TrigPoly& t, const RootConfig& cfg = {});

}  // namespace circlering

#endif  // CIRCLERING_ROOTS_HPP_
