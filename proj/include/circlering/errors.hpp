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

#ifndef CIRCLERING_ERRORS_HPP_
#define CIRCLERING_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace circlering {

// Every failure raised by the library derives from Error, so callers that
// only care about "something went wrong" can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The zero function vanishes everywhere and has no divisor.
class ZeroPolynomialError : public Error {
 public:
  ZeroPolynomialError() : Error("zero polynomial has no circle divisor") {}
};

// Root iteration did not settle, or clustering and derivative order
// disagreed about a multiplicity. `diagnostics()` carries the details.
class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, std::string diagnostics)
      : Error(what), diagnostics_(std::move(diagnostics)) {}
  const std::string& diagnostics() const { return diagnostics_; }

 private:
  std::string diagnostics_;
};

// A divisor of odd degree was given where a principal ideal is required.
class OddDegreeError : public Error {
 public:
  explicit OddDegreeError(int degree)
      : Error("divisor degree " + std::to_string(degree) +
              " is odd: the ideal is not principal"),
        degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class EvenDegreeError : public Error {
 public:
  explicit EvenDegreeError(int degree)
      : Error("divisor degree " + std::to_string(degree) +
              " is even: the ideal is principal, nothing to decompose") {}
};

class TooLargeError : public Error {
 public:
  TooLargeError(int degree, int limit)
      : Error("divisor degree " + std::to_string(degree) +
              " exceeds the enumeration limit " + std::to_string(limit)) {}
};

class AllZeroGeneratorsError : public Error {
 public:
  AllZeroGeneratorsError()
      : Error("generator set must contain a nonzero polynomial") {}
};

// Expression parsing failures. `position()` is a 0-based byte offset.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t position)
      : Error("syntax error at position " + std::to_string(position) + ": " +
              message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnsupportedConstructError : public Error {
 public:
  UnsupportedConstructError(const std::string& message, std::size_t position)
      : Error("unsupported construct at position " + std::to_string(position) +
              ": " + message),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace circlering

#endif  // CIRCLERING_ERRORS_HPP_
