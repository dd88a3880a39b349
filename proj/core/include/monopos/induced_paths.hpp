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

#include <optional>
#include <span>
#include <vector>

#include "monopos/budget.hpp"
#include "monopos/graph.hpp"

namespace monopos {

// Ordered sequence of distinct vertices of a host graph.
using Path = std::vector<Vertex>;

/// True iff `seq` is a path of g without chords between non-consecutive
/// vertices. Throws DomainError for a vertex outside g.
bool is_induced_path(const Graph& g, std::span<const Vertex> seq);

/// Induced a,b-path whose interior meets `via`, if one exists.
///
/// Depth-first extension from a in ascending vertex order. A vertex may
/// extend the path only if it is adjacent to the current endpoint and lies
/// outside the closed neighbourhoods of all earlier path vertices; branches
/// from which b (or an unvisited `via` vertex) is unreachable inside the
/// remaining allowed region are cut. Exponential in the worst case: charges
/// one budget node per extension and throws BudgetExceeded instead of
/// answering once the budget runs out. Requires a != b.
std::optional<Path> find_induced_path_through(const Graph& g, Vertex a,
                                              Vertex b, const VertexSet& via,
                                              SearchBudget& budget);
std::optional<Path> find_induced_path_through(const Graph& g, Vertex a,
                                              Vertex b, const VertexSet& via);

/// J[u,v]: every vertex on at least one induced u,v-path, u and v included.
/// Throws DomainError when u == v or when u and v lie in different components.
VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v,
                              SearchBudget& budget);
VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v);

/// An induced path holding at least three members of s, if any.
///
/// Uses the endpoint reduction: such a path exists iff for some pair a, b of
/// s there is an induced a,b-path with another member of s in its interior.
/// The returned path starts and ends in s.
std::optional<Path> find_bad_path(const Graph& g, const VertexSet& s,
                                  SearchBudget& budget);
std::optional<Path> find_bad_path(const Graph& g, const VertexSet& s);

}  // namespace monopos
