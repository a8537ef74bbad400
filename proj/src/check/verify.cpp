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

#include "circlering/check/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "circlering/check/generators.hpp"
#include "circlering/check/oracles.hpp"
#include "circlering/errors.hpp"
#include "circlering/expression.hpp"
#include "circlering/factorization.hpp"
#include "circlering/ideals.hpp"

namespace circlering::check {
namespace {

constexpr double kPointTol = 1e-6;

// Independent stream per check.
Rng stream(std::uint64_t seed, std::uint64_t check_id) {
  return Rng(seed ^ (0x9E3779B97F4A7C15ull * (check_id + 1)));
}

int count_or(int cases, int fallback) { return cases > 0 ? cases : fallback; }

double relative_gap(const TrigPoly& x, const TrigPoly& y) {
  const int n = std::max(x.degree(), y.degree());
  double gap = 0.0;
  for (int k = 0; k <= n; ++k) {
    gap = std::max({gap, std::abs(x.cos_coeff(k) - y.cos_coeff(k)),
                    std::abs(x.sin_coeff(k) - y.sin_coeff(k))});
  }
  const double scale = std::max({x.max_abs_coeff(), y.max_abs_coeff(), 1e-300});
  return gap / scale;
}

std::string describe(const Divisor& d) { return to_string(d); }

// True when t has a near-tangency (a local minimum of |t| below 1e-3 with
// no sign change) that no reported zero accounts for. Such inputs sit at
// the boundary between zero counts and are excluded from parity checks.
bool near_degenerate(const TrigPoly& t, const Divisor& zeros) {
  constexpr int kGrid = 4096;
  constexpr double kFloor = 1e-3;
  const double step = kTwoPi / kGrid;
  std::vector<double> v(kGrid);
  for (int i = 0; i < kGrid; ++i) v[i] = evaluate(t, i * step);
  for (int i = 0; i < kGrid; ++i) {
    const double prev = v[(i + kGrid - 1) % kGrid], next = v[(i + 1) % kGrid];
    const double cur = v[i];
    if (std::abs(cur) >= kFloor) continue;
    if (std::abs(cur) > std::abs(prev) || std::abs(cur) > std::abs(next)) continue;
    if (prev * cur <= 0.0 || cur * next <= 0.0) continue;
    const bool explained = std::any_of(
        zeros.entries().begin(), zeros.entries().end(), [&](const DivisorEntry& e) {
          return circle_distance(e.point.theta(), i * step) <= 3 * step;
        });
    if (!explained) return true;
  }
  return false;
}

// Draws random nonzero trig polys until `cases` nondegenerate ones were
// handed to `body`. Root-finding failures on nondegenerate inputs count as
// check failures.
template <typename Body>
void for_nondegenerate(Rng& rng, int cases, const RootConfig& cfg,
                       CheckResult& r, Body body) {
  for (int draws = 0; r.cases < cases && draws < 20 * cases; ++draws) {
    const TrigPoly t = random_trigpoly(rng, 8);
    if (t.is_zero()) continue;
    Divisor zeros;
    try {
      zeros = circle_divisor(t, cfg);
    } catch (const Error& e) {
      if (near_degenerate(t, Divisor())) {
        ++r.skipped;
      } else {
        ++r.cases;
        r.fail(std::string("circle_divisor failed: ") + e.what() + " on " + print(t));
      }
      continue;
    }
    if (near_degenerate(t, zeros)) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    body(t, zeros);
  }
}

}  // namespace

CheckResult check_ring_laws(std::uint64_t seed, int cases) {
  CheckResult r;
  r.name = "trigpoly ring laws";
  Rng rng = stream(seed, 1);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const TrigPoly a = random_trigpoly(rng, 8);
    const TrigPoly b = random_trigpoly(rng, 8);
    const TrigPoly c = random_trigpoly(rng, 8);
    if (relative_gap(a * b, b * a) > 1e-12) r.fail("multiply not commutative");
    if (relative_gap((a * b) * c, a * (b * c)) > 1e-12) r.fail("multiply not associative");
    if (relative_gap(a * (b + c), a * b + a * c) > 1e-12) r.fail("multiply does not distribute");
    if (!a.is_zero() && !b.is_zero() && (a * b).degree() != a.degree() + b.degree()) {
      r.fail("degree not additive for " + print(a) + " and " + print(b));
    }
  }
  return r;
}

CheckResult check_evaluation_homomorphism(std::uint64_t seed, int cases) {
  CheckResult r;
  r.name = "evaluation homomorphism";
  Rng rng = stream(seed, 2);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const TrigPoly a = random_trigpoly(rng, 16, 10.0);
    const TrigPoly b = random_trigpoly(rng, 16, 10.0);
    const TrigPoly ab = a * b;
    for (int j = 0; j < 1000; ++j) {
      const double x = rng.uniform(-10.0, 10.0);
      const double gap = std::abs(evaluate(ab, x) - evaluate(a, x) * evaluate(b, x));
      if (gap > 1e-9) {
        std::ostringstream s;
        s << "evaluation gap " << gap << " at x=" << x;
        r.fail(s.str());
        break;
      }
    }
  }
  return r;
}

CheckResult check_laurent_roundtrip(std::uint64_t seed, int cases) {
  CheckResult r;
  r.name = "laurent round trip";
  Rng rng = stream(seed, 3);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const TrigPoly t = random_trigpoly(rng, 8);
    const LaurentPoly l = to_laurent(t);
    for (int k = 1; k <= l.degree(); ++k) {
      if (std::abs(l.coeff(-k) - std::conj(l.coeff(k))) != 0.0) {
        r.fail("Laurent coefficients not conjugate-symmetric");
      }
    }
    for (int j = 0; j < 256; ++j) {
      const double x = kTwoPi * j / 256;
      if (std::abs(l.evaluate_on_circle(x) - evaluate(t, x)) > 1e-10) {
        r.fail("Laurent sum differs from evaluate for " + print(t));
        break;
      }
    }
  }
  return r;
}

CheckResult check_divisor_laws(std::uint64_t seed, int cases) {
  CheckResult r;
  r.name = "divisor laws";
  Rng rng = stream(seed, 4);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Divisor a = random_divisor(rng, 8, 1e-4, 3);
    const Divisor b = random_divisor(rng, 8, 1e-4, 3);
    const Divisor c = random_divisor(rng, 8, 1e-4, 3);
    if (!(add(a, b) == add(b, a))) r.fail("add not commutative");
    if (!(add(add(a, b), c) == add(a, add(b, c)))) r.fail("add not associative");
    if (!(add(a, Divisor()) == a)) r.fail("empty divisor is not the identity");
    if (degree(add(a, b)) != degree(a) + degree(b)) r.fail("degree not additive");
    if (parity(add(a, b)) != parity(a) + parity(b)) r.fail("parity not a homomorphism");
    if (!leq(a, add(a, b))) r.fail("leq(a, a + b) fails for " + describe(a));
    const std::vector<DivisorEntry> own(a.entries().begin(), a.entries().end());
    const Divisor again(own);
    bool identical = again.size() == a.size();
    for (std::size_t k = 0; identical && k < a.size(); ++k) {
      identical = again.entries()[k].point.theta() == a.entries()[k].point.theta() &&
                  again.entries()[k].multiplicity == a.entries()[k].multiplicity;
    }
    if (!identical) r.fail("canonical form not idempotent for " + describe(a));
  }
  return r;
}

CheckResult check_even_zero_count(std::uint64_t seed, int cases,
                                  const RootConfig& cfg) {
  CheckResult r;
  r.name = "even zero count";
  Rng rng = stream(seed, 5);
  for_nondegenerate(rng, cases, cfg, r, [&](const TrigPoly& t, const Divisor& z) {
    if (degree(z) % 2 != 0) r.fail("odd zero count " + describe(z) + " for " + print(t));
    if (degree(z) > 2 * t.degree()) r.fail("more zeros than 2N for " + print(t));
  });
  return r;
}

CheckResult check_sign_changes(std::uint64_t seed, int cases,
                               const RootConfig& cfg) {
  CheckResult r;
  r.name = "sign changes vs zero count";
  Rng rng = stream(seed, 6);
  for_nondegenerate(rng, cases, cfg, r, [&](const TrigPoly& t, const Divisor& z) {
    const int changes = sign_changes(t, cfg);
    int odd = 0;
    for (const auto& e : z.entries()) odd += e.multiplicity % 2;
    if (changes % 2 != 0) r.fail("odd number of sign changes for " + print(t));
    if (changes > degree(z)) r.fail("more sign changes than zeros for " + print(t));
    if (changes != odd) {
      r.fail("sign changes differ from odd-order zero count for " + print(t));
    }
  });
  return r;
}

CheckResult check_oracle_equivalence(std::uint64_t seed, int cases,
                                     const RootConfig& cfg) {
  CheckResult r;
  r.name = "root finder vs sampling oracle";
  Rng rng = stream(seed, 7);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const PairProduct pp = random_pair_product(rng, 6);
    try {
      const Divisor found = circle_divisor(pp.poly, cfg);
      const Divisor oracle = sampling_divisor(pp.poly, 1 << 16, cfg);
      if (!found.matches(oracle, kPointTol)) {
        r.fail("root finder " + describe(found) + " vs oracle " + describe(oracle));
      }
    } catch (const Error& e) {
      r.fail(std::string("circle_divisor failed: ") + e.what());
    }
  }
  return r;
}

CheckResult check_parity_principality(std::uint64_t seed, int cases,
                                      const RootConfig& cfg) {
  CheckResult r;
  r.name = "parity and principality";
  Rng rng = stream(seed, 8);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const IdealR ideal(random_divisor(rng, 12));
    const bool even = degree(ideal.divisor()) % 2 == 0;
    if (is_principal(ideal) != even) r.fail("is_principal disagrees with parity");
    try {
      const TrigPoly g = real_generator(ideal);
      if (!even) {
        r.fail("real_generator accepted odd divisor " + describe(ideal.divisor()));
        continue;
      }
      const Divisor back = circle_divisor(g, cfg);
      if (!back.matches(ideal.divisor(), kPointTol)) {
        r.fail("generator of " + describe(ideal.divisor()) + " has divisor " +
               describe(back));
      }
    } catch (const OddDegreeError&) {
      if (even) r.fail("real_generator rejected even divisor");
    } catch (const Error& e) {
      r.fail(std::string("root finding failed: ") + e.what() + " for " +
             describe(ideal.divisor()));
    }
  }
  return r;
}

CheckResult check_class_group(std::uint64_t seed, int cases) {
  CheckResult r;
  r.name = "class group is Z/2";
  Rng rng = stream(seed, 9);
  if (class_of(IdealR::maximal(CirclePoint(0.0))) != IdealClass::kNonPrincipal) {
    r.fail("maximal ideal at 0 is principal");
  }
  if (class_mul(IdealClass::kNonPrincipal, IdealClass::kNonPrincipal) !=
      IdealClass::kPrincipal) {
    r.fail("nontrivial class does not square to the identity");
  }
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const IdealR a(random_divisor(rng, 12));
    const IdealR b(random_divisor(rng, 12));
    if (class_of(product(a, b)) != class_mul(class_of(a), class_of(b))) {
      r.fail("class_of is not a homomorphism");
    }
    if (class_of(product(a, a)) != IdealClass::kPrincipal) {
      r.fail("square of " + describe(a.divisor()) + " is not principal");
    }
  }
  return r;
}

CheckResult check_ideal_recovery(std::uint64_t seed, int cases,
                                 const RootConfig& cfg) {
  CheckResult r;
  r.name = "divisor of ideal from generators";
  Rng rng = stream(seed, 10);
  {
    ++r.cases;
    const TrigPoly s = TrigPoly::sin_harmonic(1);
    const TrigPoly c = TrigPoly::cos_harmonic(1);
    const TrigPoly one = TrigPoly::constant(1.0);
    const Divisor got = divisor_of_ideal(GeneratorSet({s * (one - c), s * (one + c)}), cfg);
    const Divisor want({{CirclePoint(0.0), 1}, {CirclePoint(std::numbers::pi), 1}});
    if (!got.matches(want, kPointTol)) r.fail("worked example gave " + describe(got));
  }
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Divisor d = random_divisor(rng, 10);
    std::vector<CirclePoint> taken;
    for (const auto& e : d.entries()) taken.push_back(e.point);
    const bool pad = degree(d) % 2 == 0;
    const auto fresh = random_points(rng, pad ? 4 : 2, 1e-3, taken);
    Divisor first = add(d, Divisor::point(fresh[0]));
    Divisor second = add(d, Divisor::point(fresh[1]));
    if (pad) {
      first = add(first, Divisor::point(fresh[2]));
      second = add(second, Divisor::point(fresh[3]));
    }
    try {
      const GeneratorSet g({real_generator(IdealR(first)), real_generator(IdealR(second))});
      const Divisor got = divisor_of_ideal(g, cfg);
      if (!got.matches(d, kPointTol)) {
        r.fail("expected " + describe(d) + ", recovered " + describe(got));
      }
    } catch (const Error& e) {
      r.fail(std::string("divisor_of_ideal failed: ") + e.what());
    }
  }
  return r;
}

CheckResult check_membership(std::uint64_t seed, int cases, const RootConfig& cfg) {
  CheckResult r;
  r.name = "membership and containment";
  Rng rng = stream(seed, 11);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Divisor d = random_divisor_of_degree(rng, 2 * rng.integer(1, 5));
    const IdealR ideal(d);
    try {
      const TrigPoly g = real_generator(ideal);
      if (!contains(ideal, g, cfg)) r.fail("generator not in its own ideal");
      // A random sub-divisor defines a larger ideal that still contains g.
      std::vector<DivisorEntry> sub;
      for (const auto& e : d.entries()) {
        const int m = rng.integer(0, e.multiplicity);
        if (m > 0) sub.push_back({e.point, m});
      }
      const IdealR larger{Divisor(sub)};
      if (!contains(larger, g, cfg)) r.fail("generator not in a larger ideal");
      std::vector<CirclePoint> taken;
      for (const auto& e : d.entries()) taken.push_back(e.point);
      const IdealR smaller(add(d, Divisor::point(random_points(rng, 1, 1e-3, taken)[0])));
      if (contains(smaller, g, cfg)) r.fail("generator in a strictly smaller ideal");
      if (contains(smaller, g, cfg) != leq(smaller.divisor(), circle_divisor(g, cfg))) {
        r.fail("contains disagrees with leq");
      }
    } catch (const Error& e) {
      r.fail(std::string("membership failed: ") + e.what());
    }
  }
  return r;
}

CheckResult check_complex_pid(std::uint64_t seed, int cases, const RootConfig& cfg) {
  CheckResult r;
  r.name = "complex ring is a PID";
  Rng rng = stream(seed, 12);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const Divisor d = random_divisor(rng, 12);
    try {
      const LaurentPoly g = complex_generator(IdealR(d));
      const auto q = g.shifted_polynomial();
      const Divisor back = unit_circle_divisor(q, cfg);
      if (!back.matches(d, kPointTol)) {
        r.fail("complex generator of " + describe(d) + " has zeros " + describe(back));
      }
    } catch (const Error& e) {
      r.fail(std::string("complex generator check failed: ") + e.what());
    }
  }
  return r;
}

CheckResult check_half_factorial(std::uint64_t seed, int cases, const RootConfig& cfg) {
  CheckResult r;
  r.name = "half-factorial";
  Rng rng = stream(seed, 13);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const int deg = 2 * rng.integer(1, kMaxFactorizationDegree / 2);
    // Widely spaced points keep the soundness products well conditioned.
    const Divisor d = random_divisor_of_degree(rng, deg, 0.05, 4);
    const HalfFactorialReport report = is_half_factorial(d);
    if (!report.half_factorial) {
      r.fail("factorization lengths differ for " + describe(d));
    }
    if (deg <= 12) {
      const auto brute = brute_force_matching_count(d);
      if (brute != report.factorization_count) {
        std::ostringstream s;
        s << "count " << report.factorization_count << " vs brute force " << brute
          << " for " << describe(d);
        r.fail(s.str());
      }
    }
    // Zeros of order 3 and up in degree-16 products are too ill-conditioned
    // in double precision for the root finder to be a meaningful referee.
    int max_mult = 0;
    for (const auto& e : d.entries()) max_mult = std::max(max_mult, e.multiplicity);
    int sampled = 0;
    for_each_factorization(d, [&](const Factorization& f) {
      if (sampled++ >= 3) return;
      for (const auto& factor : f.factors) {
        if (degree(factor.divisor()) != 2) r.fail("factor of degree other than 2");
      }
      if (!f.divisor().matches(d, 1e-12)) r.fail("factor divisors do not sum to target");
      if (max_mult > 2) return;
      try {
        const Divisor got = circle_divisor(f.product(), cfg);
        if (!got.matches(d, kPointTol)) {
          r.fail("product of witnesses has divisor " + describe(got));
        }
      } catch (const Error& e) {
        r.fail(std::string("witness product root finding failed: ") + e.what());
      }
    });
    for (const auto& e : d.entries()) {
      if (is_principal(IdealR::maximal(e.point))) {
        r.fail("degree-1 ideal reported principal");
      }
    }
  }
  return r;
}

CheckResult check_nonufd_demo() {
  CheckResult r;
  r.name = "non-unique factorization demo";
  r.cases = 1;
  try {
    const NonUfdReport report = demo_nonufd();
    if (!report.ok) r.fail("demo self-check failed");
  } catch (const Error& e) {
    r.fail(std::string("demo threw: ") + e.what());
  }
  return r;
}

CheckResult check_parse_print(std::uint64_t seed, int cases) {
  CheckResult r;
  r.name = "parse/print round trip";
  Rng rng = stream(seed, 14);
  for (int i = 0; i < cases; ++i, ++r.cases) {
    const TrigPoly t = random_trigpoly(rng, 8);
    try {
      const TrigPoly back = parse_trigpoly(print(t));
      if (relative_gap(t, back) > 1e-12) r.fail("round trip changed " + print(t));
    } catch (const Error& e) {
      r.fail(std::string("printed form did not parse: ") + e.what());
    }
  }
  return r;
}

std::vector<CheckResult> run_all(const VerifyOptions& o) {
  const auto n = [&](int fallback) { return count_or(o.cases, fallback); };
  const RootConfig& cfg = o.roots;
  std::vector<CheckResult> out;
  out.push_back(check_ring_laws(o.seed, n(200)));
  out.push_back(check_evaluation_homomorphism(o.seed, n(50)));
  out.push_back(check_laurent_roundtrip(o.seed, n(200)));
  out.push_back(check_divisor_laws(o.seed, n(200)));
  out.push_back(check_even_zero_count(o.seed, n(500), cfg));
  out.push_back(check_sign_changes(o.seed, n(200), cfg));
  out.push_back(check_oracle_equivalence(o.seed, n(100), cfg));
  out.push_back(check_parity_principality(o.seed, n(200), cfg));
  out.push_back(check_class_group(o.seed, n(200)));
  out.push_back(check_ideal_recovery(o.seed, n(50), cfg));
  out.push_back(check_membership(o.seed, n(50), cfg));
  out.push_back(check_complex_pid(o.seed, n(50), cfg));
  out.push_back(check_half_factorial(o.seed, n(60), cfg));
  out.push_back(check_nonufd_demo());
  out.push_back(check_parse_print(o.seed, n(200)));
  return out;
}

}  // namespace circlering::check
