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

#include "monopos/induced_paths.hpp"

#include <string>

#include "monopos/errors.hpp"
#include "monopos/invariants.hpp"

namespace monopos {
namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v >= g.order())
    throw DomainError("vertex " + std::to_string(v) +
                      " out of range for graph of order " +
                      std::to_string(g.order()));
}

class InducedPathSearch {
 public:
  InducedPathSearch(const Graph& g, Vertex target, const VertexSet& via,
                    SearchBudget& budget)
      : g_(g),
        target_(target),
        budget_(budget),
        via_(g.vertices() & via),
        blocked_(g.order()) {
    via_.erase(target);
  }

  std::optional<Path> run(Vertex start) {
    via_.erase(start);
    path_.assign(1, start);
    if (extend(false)) return path_;
    return std::nullopt;
  }

 private:
  // blocked_ = N[p_0] | ... | N[p_{k-1}] for the current path p_0..p_k.
  bool extend(bool hit) {
    budget_.charge();
    const Vertex end = path_.back();
    VertexSet allowed = g_.vertices() - blocked_;
    allowed.erase(end);
    if (!allowed.contains(target_)) return false;

    const VertexSet reach = reachable(end, allowed);
    if (!reach.contains(target_)) return false;
    if (!hit && !reach.intersects(via_)) return false;

    const VertexSet& next = g_.neighbors(end);
    if (next.contains(target_)) {
      // Any detour would leave `end` as a chord to the target.
      if (!hit) return false;
      path_.push_back(target_);
      return true;
    }

    const VertexSet saved = blocked_;
    blocked_ |= g_.closed_neighbors(end);
    for (Vertex y : next & allowed) {
      path_.push_back(y);
      if (extend(hit || via_.contains(y))) return true;
      path_.pop_back();
    }
    blocked_ = saved;
    return false;
  }

  VertexSet reachable(Vertex from, const VertexSet& allowed) const {
    VertexSet seen = g_.neighbors(from) & allowed;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
      VertexSet next(g_.order());
      for (Vertex v : frontier) next |= g_.neighbors(v);
      next &= allowed;
      next -= seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  const Graph& g_;
  Vertex target_;
  SearchBudget& budget_;
  VertexSet via_;
  VertexSet blocked_;
  Path path_;
};

}  // namespace

bool is_induced_path(const Graph& g, std::span<const Vertex> seq) {
  for (Vertex v : seq) check_vertex(g, v);
  if (seq.empty()) return false;
  VertexSet seen(g.order());
  for (Vertex v : seq) {
    if (seen.contains(v)) return false;
    seen.insert(v);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (g.adjacent(seq[i], seq[j]) != (j == i + 1)) return false;
  return true;
}

std::optional<Path> find_induced_path_through(const Graph& g, Vertex a,
                                              Vertex b, const VertexSet& via,
                                              SearchBudget& budget) {
  check_vertex(g, a);
  check_vertex(g, b);
  if (a == b) throw DomainError("induced path endpoints must differ");
  auto path = InducedPathSearch(g, b, via, budget).run(a);
  if (path && !is_induced_path(g, *path))
    throw ConsistencyError("induced path search returned a non-induced path");
  return path;
}

std::optional<Path> find_induced_path_through(const Graph& g, Vertex a,
                                              Vertex b, const VertexSet& via) {
  SearchBudget budget;
  return find_induced_path_through(g, a, b, via, budget);
}

VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v,
                              SearchBudget& budget) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (u == v) throw DomainError("monophonic interval needs distinct endpoints");
  bool same_component = false;
  for (const auto& c : components(g, g.vertices()))
    if (c.contains(u)) same_component = c.contains(v);
  if (!same_component)
    throw DomainError("vertices " + std::to_string(u) + " and " +
                      std::to_string(v) + " are disconnected");

  VertexSet interval(g.order(), {u, v});
  // Each witness path certifies all of its vertices at once; the final,
  // failing search certifies that nothing else lies on an induced path.
  while (true) {
    auto path =
        find_induced_path_through(g, u, v, g.vertices() - interval, budget);
    if (!path) return interval;
    for (Vertex w : *path) interval.insert(w);
  }
}

VertexSet monophonic_interval(const Graph& g, Vertex u, Vertex v) {
  SearchBudget budget;
  return monophonic_interval(g, u, v, budget);
}

std::optional<Path> find_bad_path(const Graph& g, const VertexSet& s,
                                  SearchBudget& budget) {
  if (s.size() < 3) return std::nullopt;
  for (Vertex a : s)
    for (Vertex b : s) {
      if (b <= a) continue;
      VertexSet interior = s;
      interior.erase(a);
      interior.erase(b);
      if (auto path = find_induced_path_through(g, a, b, interior, budget))
        return path;
    }
  return std::nullopt;
}

std::optional<Path> find_bad_path(const Graph& g, const VertexSet& s) {
  SearchBudget budget;
  return find_bad_path(g, s, budget);
}

}  // namespace monopos
