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
#include <functional>
#include <optional>
#include <vector>

#include "monopos/budget.hpp"
#include "monopos/graph.hpp"
#include "monopos/induced_paths.hpp"

namespace monopos {

struct SolveResult {
  std::size_t value = 0;
  VertexSet witness;
  std::uint64_t nodes_explored = 0;
};

/// Components of g[M] for a monophonic position set M: the clique
/// components of order at least two (A_i) and the isolated vertices (B_j).
struct ComponentProfile {
  std::vector<VertexSet> clique_components;
  VertexSet singletons;
  std::size_t n_m = 0;  // sum of |A_i|
  std::size_t r_m = 0;  // number of singletons

  VertexSet members() const;
  std::size_t size() const { return n_m + r_m; }
};

/// Triple-conflict table of a graph under a path rule.
///
/// conflicts(a, b) holds every w outside {a, b} such that a, b and w lie on
/// a common path of the rule (induced paths for the monophonic rule,
/// geodesics for the geodesic rule). A set is in position iff no pair of
/// its members conflicts with a third member, so once the table is built
/// every position query is a handful of bitset operations.
class PositionTable {
 public:
  // One interval computation per vertex pair; throws BudgetExceeded.
  static PositionTable monophonic(const Graph& g, SearchBudget& budget);
  static PositionTable monophonic(const Graph& g);
  static PositionTable geodesic(const Graph& g);

  std::size_t order() const noexcept { return n_; }

  // J[a,b] (or the geodesic interval); {a} when a == b.
  const VertexSet& interval(Vertex a, Vertex b) const {
    return intervals_.at(a * n_ + b);
  }
  const VertexSet& conflicts(Vertex a, Vertex b) const {
    return conflicts_.at(a * n_ + b);
  }

  bool in_position(const VertexSet& s) const;

  // Vertices outside s whose addition keeps s in position. Requires s in
  // position.
  VertexSet extensions(const VertexSet& s) const;

  bool is_maximal(const VertexSet& s) const {
    return in_position(s) && extensions(s).empty();
  }

 private:
  PositionTable(std::size_t n, std::vector<VertexSet> intervals);

  std::size_t n_;
  std::vector<VertexSet> intervals_;
  std::vector<VertexSet> conflicts_;
};

// Largest set in position; `independent` restricts to independent sets of
// g. Ties resolve to the lexicographically smallest vertex set.
SolveResult maximum_position_set(const PositionTable& table, const Graph& g,
                                 bool independent, SearchBudget& budget);

// Smallest maximal set in position, lexicographically smallest among those.
SolveResult smallest_maximal_position_set(const PositionTable& table,
                                          SearchBudget& budget);

// Visits every nonempty set in position, in lexicographic order of member
// sequences.
void for_each_position_set(const PositionTable& table,
                           const std::function<void(const VertexSet&)>& visit,
                           SearchBudget& budget);

struct MpCheck {
  bool in_position = true;
  std::optional<Path> bad_path;
};

MpCheck check_mp_set(const Graph& g, const VertexSet& s, SearchBudget& budget);
bool is_mp_set(const Graph& g, const VertexSet& s);

// Requires s to be an mp-set (PreconditionError otherwise).
bool is_maximal_mp_set(const Graph& g, const VertexSet& s,
                       SearchBudget& budget);
bool is_maximal_mp_set(const Graph& g, const VertexSet& s);

// The solvers below require a connected graph (PreconditionError).
SolveResult mp_number(const Graph& g, SearchBudget& budget);
SolveResult mp_number(const Graph& g);
SolveResult mp_independent(const Graph& g, SearchBudget& budget);
SolveResult mp_independent(const Graph& g);
SolveResult mp_lower(const Graph& g, SearchBudget& budget);
SolveResult mp_lower(const Graph& g);
SolveResult gp_number(const Graph& g, SearchBudget& budget);
SolveResult gp_number(const Graph& g);

/// Splits an mp-set of a connected graph into clique components and
/// singletons, and validates the structure every mp-set must have: each
/// component is a clique, and when there are at least two components any two
/// vertices of one component share a neighbour outside m. A violation raises
/// ConsistencyError; m not in monophonic position raises PreconditionError.
ComponentProfile mp_decomposition(const Graph& g, const VertexSet& m,
                                  SearchBudget& budget);
ComponentProfile mp_decomposition(const Graph& g, const VertexSet& m);

/// Pareto frontier of (n_M, r_M) over all mp-sets M of g.
///
/// Every mp-set's pair is weakly dominated by some returned profile, and no
/// returned profile dominates another. Each profile carries a concrete
/// witness. Sorted by n_M descending.
std::vector<ComponentProfile> enumerate_mp_profiles(const Graph& g,
                                                    SearchBudget& budget);
std::vector<ComponentProfile> enumerate_mp_profiles(const Graph& g);

}  // namespace monopos
