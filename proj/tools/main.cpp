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

// circlering command-line tool.

#include <unistd.h>

#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "circlering/check/verify.hpp"
#include "circlering/errors.hpp"
#include "circlering/expression.hpp"
#include "circlering/factorization.hpp"
#include "circlering/ideals.hpp"
#include "circlering/roots.hpp"

namespace {

using circlering::CirclePoint;
using circlering::Divisor;
using circlering::DivisorEntry;
using circlering::TrigPoly;
using Json = nlohmann::ordered_json;

constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitVerify = 4;

enum class Format { kJson, kText };

struct Options {
  Format format = Format::kJson;
  circlering::RootConfig roots;
};

// Input the user gave that the mathematics rejects (odd degree, zero
// polynomial, ...). Reported on stdout with exit code 1.
struct DomainFailure {
  Json report;
  std::string text;
};

double round12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

std::string angle_text(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

bool use_color() {
  return std::getenv("NO_COLOR") == nullptr && isatty(fileno(stdout));
}

Json divisor_json(const Divisor& d) {
  Json out = Json::array();
  for (const auto& e : d.entries()) {
    out.push_back({{"theta", round12(e.point.theta())}, {"mult", e.multiplicity}});
  }
  return out;
}

std::string divisor_text(const Divisor& d) {
  std::string s = "{";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += angle_text(d.entries()[i].point.theta()) + ":" +
         std::to_string(d.entries()[i].multiplicity);
  }
  return s + "}";
}

Json trigpoly_json(const TrigPoly& t) {
  Json cos = Json::array(), sin = Json::array();
  for (double a : t.cos_coeffs()) cos.push_back(a);
  for (double b : t.sin_coeffs()) sin.push_back(b);
  return {{"degree", t.degree()}, {"cos", cos}, {"sin", sin},
          {"expr", circlering::print(t)}};
}

Divisor parse_points(const std::string& text) {
  std::vector<DivisorEntry> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(start, end - start);
    const std::size_t colon = item.rfind(':');
    const std::string angle = item.substr(0, colon);
    int mult = 1;
    if (colon != std::string::npos) {
      const std::string m = item.substr(colon + 1);
      std::size_t used = 0;
      try {
        mult = std::stoi(m, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != m.size() || mult <= 0) {
        throw circlering::SyntaxError("multiplicity must be a positive integer: '" + m + "'",
                                      start + colon + 1);
      }
    }
    double theta;
    try {
      theta = circlering::parse_constant(angle);
    } catch (const circlering::SyntaxError& e) {
      throw circlering::SyntaxError(e.what(), start + e.position());
    }
    entries.push_back({CirclePoint(theta), mult});
    start = end + 1;
  }
  return Divisor(std::move(entries));
}

void emit(const Options& o, const Json& report, const std::string& text) {
  if (o.format == Format::kJson) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_roots(const Options& o, const std::string& expr) {
  const TrigPoly t = circlering::parse_trigpoly(expr);
  if (t.is_zero()) throw circlering::ZeroPolynomialError();
  circlering::RootDiagnostics diag;
  const Divisor d = circlering::circle_divisor(t, o.roots, &diag);
  for (const auto& w : diag.warnings) std::cerr << "warning: " << w << "\n";
  const int total = circlering::degree(d);
  Json report = {{"schema", 1},
                 {"command", "roots"},
                 {"input", expr},
                 {"zeros", divisor_json(d)},
                 {"total", total},
                 {"even", total % 2 == 0}};
  std::string text = "zeros: " + divisor_text(d) + "\ntotal: " + std::to_string(total) +
                     "\neven: " + (total % 2 == 0 ? "true" : "false") + "\n";
  emit(o, report, text);
  return 0;
}

int run_ideal(const Options& o, const std::vector<std::string>& exprs) {
  std::vector<TrigPoly> gens;
  for (const auto& e : exprs) gens.push_back(circlering::parse_trigpoly(e));
  const Divisor d = circlering::divisor_of_ideal(circlering::GeneratorSet(gens), o.roots);
  const circlering::IdealR ideal(d);
  const bool principal = circlering::is_principal(ideal);
  const auto cls = circlering::class_of(ideal);
  Json report = {{"schema", 1},
                 {"command", "ideal"},
                 {"generators", exprs},
                 {"divisor", divisor_json(d)},
                 {"degree", circlering::degree(d)},
                 {"principal", principal},
                 {"class", std::string(circlering::to_string(cls))}};
  std::string text = "divisor: " + divisor_text(d) + "\nprincipal: " +
                     (principal ? "true" : "false") + "\nclass: " +
                     std::string(circlering::to_string(cls)) + "\n";
  if (principal) {
    const TrigPoly g = circlering::real_generator(ideal);
    report["generator"] = trigpoly_json(g);
    text += "generator: " + circlering::print(g) + "\n";
  } else {
    report["generator"] = nullptr;
  }
  emit(o, report, text);
  return 0;
}

DomainFailure odd_degree_failure(const std::string& command, const Divisor& d) {
  const int deg = circlering::degree(d);
  const std::string why = "divisor of odd degree " + std::to_string(deg) +
                          " has no real generator: every real trigonometric polynomial "
                          "has an even number of zeros on the circle";
  Json report = {{"schema", 1},
                 {"command", command},
                 {"points", divisor_json(d)},
                 {"error", "OddDegree"},
                 {"degree", deg},
                 {"principal", false},
                 {"class", "NonPrincipal"},
                 {"explanation", why}};
  return {report, "error: OddDegree\nclass: NonPrincipal\n" + why + "\n"};
}

int run_generator(const Options& o, const std::string& points) {
  const Divisor d = parse_points(points);
  if (circlering::degree(d) % 2 != 0) throw odd_degree_failure("generator", d);
  const TrigPoly g = circlering::real_generator(circlering::IdealR(d));
  const Divisor back = circlering::circle_divisor(g, o.roots);
  const bool ok = back.matches(d, 1e-6);
  Json report = {{"schema", 1},
                 {"command", "generator"},
                 {"points", divisor_json(d)},
                 {"class", "Principal"},
                 {"generator", trigpoly_json(g)},
                 {"roundtrip", divisor_json(back)},
                 {"roundtrip_ok", ok}};
  std::string text = "generator: " + circlering::print(g) + "\nroundtrip: " +
                     divisor_text(back) + (ok ? " (ok)\n" : " (MISMATCH)\n");
  emit(o, report, text);
  return ok ? 0 : kExitNumerical;
}

int run_factorizations(const Options& o, const std::string& points, long long limit) {
  const Divisor d = parse_points(points);
  if (circlering::degree(d) % 2 != 0) throw odd_degree_failure("factorizations", d);
  Json list = Json::array();
  std::string text;
  const long long count = circlering::for_each_factorization(
      d, [&](const circlering::Factorization& f) {
        if (static_cast<long long>(list.size()) >= limit) return;
        Json pairs = Json::array();
        std::string line = " ";
        for (const auto& factor : f.factors) {
          const double a = factor.first().theta(), b = factor.second().theta();
          pairs.push_back(Json::array({round12(a), round12(b)}));
          line += " (" + angle_text(a) + ", " + angle_text(b) + ")";
        }
        list.push_back(pairs);
        text += line + "\n";
      });
  const auto hf = circlering::is_half_factorial(d);
  Json report = {{"schema", 1},
                 {"command", "factorizations"},
                 {"points", divisor_json(d)},
                 {"count", count},
                 {"lengths", hf.lengths},
                 {"half_factorial", hf.half_factorial},
                 {"truncated", count > static_cast<long long>(list.size())},
                 {"factorizations", list}};
  std::string head = "factorizations: " + std::to_string(count) + "\nhalf-factorial: " +
                     (hf.half_factorial ? "true" : "false") + "\n";
  emit(o, report, head + text);
  return 0;
}

int run_complex_generator(const Options& o, const std::string& points) {
  const Divisor d = parse_points(points);
  const auto g = circlering::complex_generator(circlering::IdealR(d));
  const auto q = g.shifted_polynomial();
  const int deg = circlering::degree(d);
  Json coeffs = Json::array();
  std::string text = "polynomial (ascending powers of z):\n";
  // The generator is the polynomial part z^0..z^deg of the Laurent layout.
  for (int k = 0; k <= deg; ++k) {
    const std::complex<double> c = g.coeff(k);
    coeffs.push_back(Json::array({c.real(), c.imag()}));
    char buf[96];
    std::snprintf(buf, sizeof buf, "  z^%d: %.17g %+.17gi\n", k, c.real(), c.imag());
    text += buf;
  }
  const Divisor back = circlering::unit_circle_divisor(q, o.roots);
  const bool ok = back.matches(d, 1e-6);
  Json report = {{"schema", 1},
                 {"command", "complex-generator"},
                 {"points", divisor_json(d)},
                 {"degree", deg},
                 {"coefficients", coeffs},
                 {"roundtrip", divisor_json(back)},
                 {"roundtrip_ok", ok}};
  text += "roundtrip: " + divisor_text(back) + (ok ? " (ok)\n" : " (MISMATCH)\n");
  emit(o, report, text);
  return ok ? 0 : kExitNumerical;
}

int run_demo_nonufd(const Options& o) {
  const auto r = circlering::demo_nonufd();
  Json facts = Json::array();
  std::string text = "cos(x)^2          = " + circlering::print(r.cos_squared) +
                     "\n(1+sin)(1-sin)    = " + circlering::print(r.sin_product) + "\n";
  char gap[64];
  std::snprintf(gap, sizeof gap, "%.3g", r.max_coefficient_gap);
  text += std::string("max coefficient gap: ") + gap + "\n";
  text += "div cos(x):        " + divisor_text(r.cos_divisor) + "\n";
  text += "div 1+sin(x):      " + divisor_text(r.one_plus_sin_divisor) + "\n";
  text += "div 1-sin(x):      " + divisor_text(r.one_minus_sin_divisor) + "\n";
  text += "div cos(x)^2:      " + divisor_text(r.product_divisor) + "\n";
  text += "factorizations: " + std::to_string(r.factorizations.size()) + "\n";
  for (const auto& f : r.factorizations) {
    Json pairs = Json::array();
    text += " ";
    for (const auto& factor : f.factors) {
      pairs.push_back(Json::array({round12(factor.first().theta()),
                                   round12(factor.second().theta())}));
      text += " " + divisor_text(factor.divisor());
    }
    facts.push_back({{"length", f.length()}, {"pairs", pairs}});
    text += "  (length " + std::to_string(f.length()) + ")\n";
  }
  text += std::string("ok: ") + (r.ok ? "true" : "false") + "\n";
  Json report = {{"schema", 1},
                 {"command", "demo nonufd"},
                 {"cos_squared", trigpoly_json(r.cos_squared)},
                 {"sin_product", trigpoly_json(r.sin_product)},
                 {"max_coefficient_gap", r.max_coefficient_gap},
                 {"divisors",
                  {{"cos", divisor_json(r.cos_divisor)},
                   {"one_plus_sin", divisor_json(r.one_plus_sin_divisor)},
                   {"one_minus_sin", divisor_json(r.one_minus_sin_divisor)},
                   {"cos_squared", divisor_json(r.product_divisor)}}},
                 {"factorization_count", r.factorizations.size()},
                 {"factorizations", facts},
                 {"ok", r.ok}};
  emit(o, report, text);
  return r.ok ? 0 : kExitVerify;
}

int run_verify(const Options& o, std::uint64_t seed, int cases) {
  circlering::check::VerifyOptions vo;
  vo.seed = seed;
  vo.cases = cases;
  vo.roots = o.roots;
  const auto results = circlering::check::run_all(vo);
  bool all = true;
  Json checks = Json::array();
  std::string text;
  const bool color = use_color();
  for (const auto& r : results) {
    all = all && r.passed();
    Json c = {{"name", r.name},
              {"cases", r.cases},
              {"skipped", r.skipped},
              {"failures", r.failures},
              {"passed", r.passed()}};
    if (!r.passed()) c["first_failure"] = r.first_failure;
    checks.push_back(c);
    std::string tag = r.passed() ? "PASS" : "FAIL";
    if (color) tag = (r.passed() ? "\033[32m" : "\033[31m") + tag + "\033[0m";
    text += "[" + tag + "] " + r.name + " (" + std::to_string(r.cases) + " cases";
    if (r.skipped) text += ", " + std::to_string(r.skipped) + " degenerate skipped";
    if (!r.passed()) text += ", " + std::to_string(r.failures) + " failed: " + r.first_failure;
    text += ")\n";
  }
  text += all ? "all checks passed\n" : "some checks FAILED\n";
  Json report = {{"schema", 1},
                 {"command", "verify"},
                 {"seed", seed},
                 {"checks", checks},
                 {"passed", all}};
  emit(o, report, text);
  return all ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Divisors, ideals and factorizations of trigonometric polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  Options o;
  std::string format = "json";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--tol-radius", o.roots.tol_radius, "Max ||z|-1| for a zero on the circle")
      ->capture_default_str();
  app.add_option("--tol-residual", o.roots.tol_residual, "Relative residual threshold")
      ->capture_default_str();
  app.add_option("--tol-order", o.roots.tol_order, "Relative derivative vanishing threshold")
      ->capture_default_str();
  app.add_option("--max-iter", o.roots.max_iter, "Root iteration cap")->capture_default_str();
  app.add_option("--cluster-radius", o.roots.cluster_radius, "Root merge distance")
      ->capture_default_str();
  app.add_option("--grid-size", o.roots.grid_size, "Samples for sign changes")
      ->capture_default_str();

  std::string expr, points;
  std::vector<std::string> exprs;
  long long limit = 10000;
  std::uint64_t seed = 42;
  int cases = 0;

  auto* roots = app.add_subcommand("roots", "Zeros of a trigonometric polynomial on the circle");
  roots->add_option("expr", expr, "Expression in x")->required();
  auto* ideal = app.add_subcommand("ideal", "Divisor, class and generator of a finitely generated ideal");
  ideal->add_option("exprs", exprs, "Generators")->required();
  auto* generator = app.add_subcommand("generator", "Real generator of the ideal of a divisor");
  generator->add_option("--points", points, "Divisor as theta:m,theta:m,...")->required();
  auto* facts = app.add_subcommand("factorizations", "All factorizations of a divisor into irreducibles");
  facts->add_option("--points", points, "Divisor as theta:m,theta:m,...")->required();
  facts->add_option("--limit", limit, "Maximum factorizations listed")->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  auto* cgen = app.add_subcommand("complex-generator", "Generator over the complex ring");
  cgen->add_option("--points", points, "Divisor as theta:m,theta:m,...")->required();
  auto* demo = app.add_subcommand("demo", "Built-in demonstrations");
  auto* nonufd = demo->add_subcommand("nonufd", "cos^2 = (1+sin)(1-sin)");
  demo->require_subcommand(1);
  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  verify->add_option("--seed", seed, "Seed")->capture_default_str();
  verify->add_option("--cases", cases, "Cases per check (0 = defaults)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  o.format = format == "text" ? Format::kText : Format::kJson;

  try {
    o.roots.validate();
    if (*roots) return run_roots(o, expr);
    if (*ideal) return run_ideal(o, exprs);
    if (*generator) return run_generator(o, points);
    if (*facts) return run_factorizations(o, points, limit);
    if (*cgen) return run_complex_generator(o, points);
    if (*nonufd) return run_demo_nonufd(o);
    if (*verify) return run_verify(o, seed, cases);
  } catch (const DomainFailure& f) {
    emit(o, f.report, f.text);
    return kExitUsage;
  } catch (const circlering::SyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const circlering::UnsupportedConstructError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const circlering::NonConvergenceError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    if (!e.diagnostics().empty()) std::cerr << e.diagnostics() << "\n";
    return kExitNumerical;
  } catch (const circlering::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
