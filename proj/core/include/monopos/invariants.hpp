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
#include <limits>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

struct Invariants {
  std::size_t omega = 0;       // clique number
  std::size_t alpha = 0;       // independence number
  std::size_t max_degree = 0;  // Delta
  std::size_t delta1 = 0;      // max number of leaf neighbours of a vertex
  bool sigma = false;          // some vertex is simplicial
  VertexSet simplicials;
  bool triangle_free = false;
  bool connected = false;
};

Invariants invariants(const Graph& g);

/// Maximum clique by branch and bound with a greedy-colouring bound.
///
/// Vertices are processed in descending degree order with index tiebreak, so
/// the returned witness is reproducible.
VertexSet maximum_clique(const Graph& g);

// Independent route to alpha: include/exclude branching, no colouring.
VertexSet maximum_independent_set(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
bool is_independent(const Graph& g, const VertexSet& s);
bool is_simplicial(const Graph& g, Vertex v);
VertexSet simplicial_vertices(const Graph& g);
std::size_t max_leaf_neighbours(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

// Vertex sets of the connected components of g[s], ordered by least member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);

inline constexpr std::size_t kUnreachable =
    std::numeric_limits<std::size_t>::max();

using DistanceMatrix = std::vector<std::vector<std::size_t>>;

// BFS hop distances; kUnreachable between different components.
DistanceMatrix distance_matrix(const Graph& g);

}  // namespace monopos
