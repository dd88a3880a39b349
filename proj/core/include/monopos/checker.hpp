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
#include <optional>
#include <string>
#include <vector>

#include "monopos/budget.hpp"
#include "monopos/graph.hpp"

namespace monopos {

// Largest order the internal generator handles.
inline constexpr std::size_t kMaxGeneratedOrder = 7;

// Minimum upper-triangle adjacency string over all labelings that list the
// vertices by non-decreasing degree. Equal exactly for isomorphic graphs.
std::string canonical_form(const Graph& g);

/// Connected graphs of order n. Without dedup this is every labeled
/// connected graph; with dedup, one canonically labeled representative per
/// isomorphism class. n above kMaxGeneratedOrder raises DomainError.
std::vector<Graph> generate_connected_graphs(std::size_t n, bool dedup);

enum class CorpusSource { generator, graph6_file };

struct CorpusSpec {
  CorpusSource source = CorpusSource::generator;
  std::string path;  // graph6_file only
  std::size_t min_order = 1;
  std::size_t max_order = 6;
  bool connected_only = true;
  bool dedup = true;
};

// Graphs of the corpus in order of increasing order, then generation order.
std::vector<Graph> load_corpus(const CorpusSpec& spec);

struct CheckInstance {
  std::vector<std::string> graphs;  // graph6
  std::string witness;
  std::string expected;
  std::string actual;
};

struct CheckReport {
  std::string check_id;
  std::string title;
  std::size_t tested = 0;
  std::size_t not_applicable = 0;
  std::size_t skipped = 0;  // budget exhausted
  std::size_t found = 0;    // existence checks only
  std::vector<CheckInstance> failures;
  std::optional<CheckInstance> example;

  bool passed() const;
};

struct CheckInfo {
  std::string id;
  std::string title;
};
const std::vector<CheckInfo>& registered_checks();

// Accepts "C5", "c5" or "5". Throws DomainError on an unknown id.
std::string normalize_check_id(const std::string& id);

struct CheckPlan {
  std::vector<Graph> singles;            // C1
  std::vector<Graph> cartesian_factors;  // C2-C13, unordered pairs
  std::vector<Graph> lex_left;           // C14-C17, ordered pairs
  std::vector<Graph> lex_right;
  std::uint64_t instance_budget = SearchBudget::kUnlimited;
};

// Singles of order 1..6, Cartesian factors of order 1..4, lexicographic
// pairs with 2 <= |G| <= 4 and 2 <= |H| <= 3; all connected and deduplicated.
CheckPlan default_check_plan();

// An empty id list runs every registered check. Reports follow the order of
// `checks` (registration order when empty).
std::vector<CheckReport> run_checks(const CheckPlan& plan,
                                    const std::vector<std::string>& checks);

// Single-graph checks draw from `corpus`; pair checks from `pair_corpus`
// (or `corpus` when absent). Lexicographic first factors of order 1 are
// skipped.
std::vector<CheckReport> run_checks(
    const CorpusSpec& corpus, const std::optional<CorpusSpec>& pair_corpus,
    const std::vector<std::string>& checks,
    std::uint64_t instance_budget = SearchBudget::kUnlimited);

}  // namespace monopos
