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

#include <cstdint>
#include <limits>

#include "monopos/errors.hpp"

namespace monopos {

/// Node counter shared by every exponential search in the library.
///
/// Searches call charge() once per explored node. When the running total
/// passes the limit the search aborts with BudgetExceeded; it never returns a
/// partial answer. A budget is scratch state: give each top-level query its
/// own instance, or reuse one deliberately to cap a batch of queries.
class SearchBudget {
 public:
  static constexpr std::uint64_t kUnlimited =
      std::numeric_limits<std::uint64_t>::max();

  SearchBudget() = default;
  explicit SearchBudget(std::uint64_t limit) : limit_(limit) {}

  void charge(std::uint64_t nodes = 1) {
    used_ += nodes;
    if (used_ > limit_) throw BudgetExceeded(limit_);
  }

  std::uint64_t used() const noexcept { return used_; }
  std::uint64_t limit() const noexcept { return limit_; }
  bool unlimited() const noexcept { return limit_ == kUnlimited; }

 private:
  std::uint64_t limit_ = kUnlimited;
  std::uint64_t used_ = 0;
};

}  // namespace monopos
