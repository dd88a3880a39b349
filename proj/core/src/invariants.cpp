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

#include "monopos/invariants.hpp"

#include <algorithm>
#include <numeric>

namespace monopos {
namespace {

// Tomita-style MCQ on a copy of the graph relabelled so that index order is
// descending degree order.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Graph& g) : n_(g.order()) {
    to_original_.resize(n_);
    std::iota(to_original_.begin(), to_original_.end(), Vertex{0});
    std::stable_sort(to_original_.begin(), to_original_.end(),
                     [&](Vertex a, Vertex b) {
                       return g.degree(a) > g.degree(b);
                     });
    std::vector<Vertex> to_local(n_);
    for (Vertex i = 0; i < n_; ++i) to_local[to_original_[i]] = i;
    adj_.assign(n_, VertexSet(n_));
    for (Vertex i = 0; i < n_; ++i)
      for (Vertex w : g.neighbors(to_original_[i])) adj_[i].insert(to_local[w]);
    current_ = VertexSet(n_);
    best_ = VertexSet(n_);
  }

  VertexSet run() {
    expand(VertexSet::full(n_));
    VertexSet out(n_);
    for (Vertex v : best_) out.insert(to_original_[v]);
    return out;
  }

 private:
  void expand(VertexSet candidates) {
    std::vector<Vertex> order;
    std::vector<std::size_t> colour;
    VertexSet uncoloured = candidates;
    std::size_t k = 0;
    while (!uncoloured.empty()) {
      ++k;
      VertexSet q = uncoloured;
      while (!q.empty()) {
        const Vertex v = q.first();
        q.erase(v);
        q -= adj_[v];
        uncoloured.erase(v);
        order.push_back(v);
        colour.push_back(k);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current_.size() + colour[i] <= best_.size()) return;
      const Vertex v = order[i];
      current_.insert(v);
      VertexSet next = candidates & adj_[v];
      if (next.empty()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(next);
      }
      current_.erase(v);
      candidates.erase(v);
    }
  }

  std::size_t n_;
  std::vector<Vertex> to_original_;
  std::vector<VertexSet> adj_;
  VertexSet current_;
  VertexSet best_;
};

void independent_search(const Graph& g, const VertexSet& chosen,
                        const VertexSet& candidates, VertexSet& best) {
  if (chosen.size() + candidates.size() <= best.size()) return;
  if (candidates.empty()) {
    best = chosen;
    return;
  }
  const Vertex v = candidates.first();
  independent_search(g, chosen.with(v), candidates - g.closed_neighbors(v),
                     best);
  if (!g.neighbors(v).intersects(candidates)) return;
  independent_search(g, chosen, candidates.without(v), best);
}

}  // namespace

VertexSet maximum_clique(const Graph& g) { return CliqueSearch(g).run(); }

VertexSet maximum_independent_set(const Graph& g) {
  VertexSet best(g.order());
  independent_search(g, VertexSet(g.order()), g.vertices(), best);
  return best;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (!(s.without(v)).is_subset_of(g.neighbors(v))) return false;
  return true;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  for (Vertex v : s)
    if (g.neighbors(v).intersects(s)) return false;
  return true;
}

bool is_simplicial(const Graph& g, Vertex v) {
  return is_clique(g, g.neighbors(v));
}

VertexSet simplicial_vertices(const Graph& g) {
  VertexSet out(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (is_simplicial(g, v)) out.insert(v);
  return out;
}

std::size_t max_leaf_neighbours(const Graph& g) {
  VertexSet leaves(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) leaves.insert(v);
  std::size_t best = 0;
  for (Vertex v = 0; v < g.order(); ++v)
    best = std::max(best, (g.neighbors(v) & leaves).size());
  return best;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet unseen = s;
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    comp.insert(unseen.first());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next(g.order());
      for (Vertex v : frontier) next |= g.neighbors(v);
      next &= s;
      next -= comp;
      comp |= next;
      frontier = next;
    }
    unseen -= comp;
    out.push_back(comp);
  }
  return out;
}

bool is_connected(const Graph& g) {
  return components(g, g.vertices()).size() == 1;
}

bool is_complete(const Graph& g) { return g.size() * 2 == g.order() * (g.order() - 1); }

DistanceMatrix distance_matrix(const Graph& g) {
  const std::size_t n = g.order();
  DistanceMatrix d(n, std::vector<std::size_t>(n, kUnreachable));
  for (Vertex s = 0; s < n; ++s) {
    VertexSet seen(n, {s});
    VertexSet frontier = seen;
    d[s][s] = 0;
    for (std::size_t dist = 1; !frontier.empty(); ++dist) {
      VertexSet next(n);
      for (Vertex v : frontier) next |= g.neighbors(v);
      next -= seen;
      for (Vertex v : next) d[s][v] = dist;
      seen |= next;
      frontier = next;
    }
  }
  return d;
}

Invariants invariants(const Graph& g) {
  Invariants inv;
  inv.omega = maximum_clique(g).size();
  inv.alpha = maximum_clique(g.complement()).size();
  for (Vertex v = 0; v < g.order(); ++v)
    inv.max_degree = std::max(inv.max_degree, g.degree(v));
  inv.delta1 = max_leaf_neighbours(g);
  inv.simplicials = simplicial_vertices(g);
  inv.sigma = !inv.simplicials.empty();
  inv.triangle_free = inv.omega <= 2;
  inv.connected = is_connected(g);
  return inv;
}

}  // namespace monopos
