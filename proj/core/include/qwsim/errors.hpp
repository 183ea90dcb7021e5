// Copyright 2026 The qwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qwsim {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-conforming matrix/vector shapes, or a result too large to allocate.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A precondition on arguments was violated (bad wire, collision, not
/// Hermitian, not unitary, ...).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Unknown gate name.
class CatalogError : public Error {
 public:
  using Error::Error;
};

/// Request exceeds a configured size guard (qubit caps on the oracle,
/// Pauli enumeration, ...).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Malformed circuit text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace qwsim
