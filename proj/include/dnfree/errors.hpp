// Copyright 2026 The dnfree Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace dnfree {

/// Failure categories. The numeric values double as CLI exit codes.
enum class ErrorKind : int {
  parse = 1,
  domain = 2,
  bound = 3,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input text: JSON, rationals, partitions, star words.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorKind::parse, what) {}
};

/// Mathematically invalid request: dimension mismatch, non-invertible
/// element, composition with a nonzero constant term, order violation.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorKind::domain, what) {}
};

/// Size limits: enumeration caps, truncation orders, missing degrees.
class BoundError : public Error {
 public:
  explicit BoundError(const std::string& what) : Error(ErrorKind::bound, what) {}
};

}  // namespace dnfree
