/* Copyright 2026 The ordsum Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef ORDSUM_ERRORS_HPP
#define ORDSUM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordsum {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text input. Carries the byte offset and the tokens that would
// have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected,
             const std::string& detail = {});

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

// A `cat(...)` description whose periodic part is empty.
class EmptyPeriod : public Error {
 public:
  EmptyPeriod() : Error("periodic part of a cat(...) series must be nonempty") {}
};

// Structurally invalid value (bad CNF, zero-length period member, ...).
class InvalidValue : public Error {
 public:
  using Error::Error;
};

// Well-formed input outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class DepthExceeded : public DomainError {
 public:
  explicit DepthExceeded(int depth, int bound);
};

class NotLeftSubtractable : public DomainError {
 public:
  NotLeftSubtractable() : DomainError("left_subtract: first operand exceeds second") {}
};

class ZeroHasNoDegree : public DomainError {
 public:
  ZeroHasNoDegree() : DomainError("degree: 0 has no leading exponent") {}
};

class IndexOutOfRange : public DomainError {
 public:
  using DomainError::DomainError;
};

class UnsupportedOrderType : public DomainError {
 public:
  using DomainError::DomainError;
};

class InapplicableMap : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace ordsum

#endif  // ORDSUM_ERRORS_HPP
