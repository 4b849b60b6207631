/*
 Copyright 2026 The splitcourant Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace splitcourant {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands built over different (n, d).
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Wrong (bi)degree, wrong arity or a value outside the space an operation
// expects.
class DegreeError : public Error {
 public:
  using Error::Error;
};

// A documented precondition of an operation does not hold for the inputs
// (J^2 != lambda id, incompatible tensors, non-terminating adjoint series).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An evaluator handed to an inverse map is not of the required shape.
class RepresentationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& message, int line, int column)
      : Error(format(message, line, column)), line_(line), column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  static std::string format(const std::string& message, int line, int column) {
    if (line <= 0) return message;
    return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
  }

  int line_;
  int column_;
};

}  // namespace splitcourant
