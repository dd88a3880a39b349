// Copyright 2026 The monopos Authors
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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace monopos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text. `offset` is the byte position of the offending input.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed input that describes something other than a simple graph.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of an operation (bad vertex, family parameter
// below its minimum, capacity overflow).
class DomainError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Raised when a computed object contradicts a structural result that must
// hold (e.g. a solver witness that fails to decompose into cliques).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : Error("search budget of " + std::to_string(limit) +
              " nodes exceeded"),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

}  // namespace monopos
