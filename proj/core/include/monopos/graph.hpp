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
#include <string>
#include <utility>
#include <vector>

#include "monopos/vertex_set.hpp"

namespace monopos {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable finite simple undirected graph on vertices 0..order()-1.
///
/// Adjacency is symmetric and irreflexive; order is between 1 and
/// kMaxVertices. Build one with GraphBuilder or Graph::from_edges.
class Graph {
 public:
  // Edge-free graph of the given order.
  explicit Graph(std::size_t order, std::string name = {});

  // Rejects loops, duplicate edges and out-of-range endpoints with
  // ValidationError.
  static Graph from_edges(std::size_t order, const std::vector<Edge>& edges,
                          std::string name = {});

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept;

  const VertexSet& neighbors(Vertex v) const { return adj_.at(v); }
  VertexSet closed_neighbors(Vertex v) const { return adj_.at(v).with(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).contains(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }

  // Edges (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  Graph complement() const;
  Graph renamed(std::string name) const;

  const std::string& name() const noexcept { return name_; }

  // Structural equality; names are ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adj_ == b.adj_;
  }

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> adj_;
  std::string name_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t order);

  // Returns false if the edge was already present. Loops and out-of-range
  // endpoints throw ValidationError.
  bool add_edge(Vertex u, Vertex v);

  Graph build(std::string name = {}) &&;

 private:
  Graph graph_;
};

}  // namespace monopos
