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

#include "monopos/graph.hpp"

#include <string>

#include "monopos/errors.hpp"

namespace monopos {

Graph::Graph(std::size_t order, std::string name) : name_(std::move(name)) {
  if (order == 0) throw DomainError("a graph needs at least one vertex");
  if (order > kMaxVertices)
    throw DomainError("graph of order " + std::to_string(order) +
                      " exceeds the capacity of " +
                      std::to_string(kMaxVertices) + " vertices");
  adj_.assign(order, VertexSet(order));
}

Graph Graph::from_edges(std::size_t order, const std::vector<Edge>& edges,
                        std::string name) {
  GraphBuilder builder(order);
  for (auto [u, v] : edges)
    if (!builder.add_edge(u, v))
      throw ValidationError("duplicate edge " + std::to_string(u) + "-" +
                            std::to_string(v));
  return std::move(builder).build(std::move(name));
}

std::size_t Graph::size() const noexcept {
  std::size_t twice = 0;
  for (const auto& n : adj_) twice += n.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::complement() const {
  Graph c(order(), name_.empty() ? std::string{} : "co-" + name_);
  for (Vertex v = 0; v < order(); ++v)
    c.adj_[v] = adj_[v].complement().without(v);
  return c;
}

Graph Graph::renamed(std::string name) const {
  Graph copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

GraphBuilder::GraphBuilder(std::size_t order) : graph_(order) {}

bool GraphBuilder::add_edge(Vertex u, Vertex v) {
  const std::size_t n = graph_.order();
  if (u >= n || v >= n)
    throw ValidationError("edge " + std::to_string(u) + "-" +
                          std::to_string(v) + " has an endpoint outside 0.." +
                          std::to_string(n - 1));
  if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
  if (graph_.adj_[u].contains(v)) return false;
  graph_.adj_[u].insert(v);
  graph_.adj_[v].insert(u);
  return true;
}

Graph GraphBuilder::build(std::string name) && {
  graph_.name_ = std::move(name);
  return std::move(graph_);
}

}  // namespace monopos
