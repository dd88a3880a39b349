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

#include "monopos/position_sets.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "monopos/errors.hpp"
#include "monopos/invariants.hpp"

namespace monopos {
namespace {

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g))
    throw PreconditionError(std::string(what) + " requires a connected graph");
}

ComponentProfile profile_of(const Graph& g, const VertexSet& m) {
  ComponentProfile p;
  p.singletons = VertexSet(g.order());
  for (auto& c : components(g, m)) {
    if (c.size() == 1) {
      p.singletons.insert(c.first());
      ++p.r_m;
    } else {
      p.n_m += c.size();
      p.clique_components.push_back(std::move(c));
    }
  }
  return p;
}

// Candidate order for the maximising search: descending degree, then index.
std::vector<Vertex> degree_order(const Graph& g) {
  std::vector<Vertex> order(g.order());
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

class PositionSearch {
 public:
  PositionSearch(const PositionTable& table, const Graph* independent_in,
                 SearchBudget& budget)
      : table_(table), independent_in_(independent_in), budget_(budget) {}

  // Candidates that stay admissible after adding v to `members`.
  VertexSet narrow(const VertexSet& members, VertexSet candidates,
                   Vertex v) const {
    for (Vertex c : members) candidates -= table_.conflicts(v, c);
    if (independent_in_ != nullptr)
      candidates -= independent_in_->neighbors(v);
    return candidates;
  }

  void maximise(const std::vector<Vertex>& order, const VertexSet& members,
                VertexSet candidates, std::size_t& best) {
    budget_.charge();
    best = std::max(best, members.size());
    for (Vertex v : order) {
      if (members.size() + candidates.size() <= best) return;
      if (!candidates.contains(v)) continue;
      candidates.erase(v);
      maximise(order, members.with(v), narrow(members, candidates, v), best);
    }
  }

  // First set of exactly `size` members in lexicographic order for which
  // `accept` holds.
  template <typename Accept>
  std::optional<VertexSet> first_of_size(const VertexSet& members,
                                         VertexSet candidates,
                                         std::size_t size, Accept&& accept) {
    budget_.charge();
    if (members.size() == size) {
      if (accept(members)) return members;
      return std::nullopt;
    }
    while (members.size() + candidates.size() >= size &&
           !candidates.empty()) {
      const Vertex v = candidates.first();
      candidates.erase(v);
      if (auto found = first_of_size(members.with(v),
                                     narrow(members, candidates, v), size,
                                     accept))
        return found;
    }
    return std::nullopt;
  }

  template <typename Visit>
  void enumerate(const VertexSet& members, VertexSet candidates,
                 Visit&& visit) {
    budget_.charge();
    if (!members.empty() && !visit(members, candidates)) return;
    while (!candidates.empty()) {
      const Vertex v = candidates.first();
      candidates.erase(v);
      enumerate(members.with(v), narrow(members, candidates, v), visit);
    }
  }

 private:
  const PositionTable& table_;
  const Graph* independent_in_;
  SearchBudget& budget_;
};

}  // namespace

VertexSet ComponentProfile::members() const {
  VertexSet out = singletons;
  for (const auto& c : clique_components) out |= c;
  return out;
}

PositionTable::PositionTable(std::size_t n, std::vector<VertexSet> intervals)
    : n_(n), intervals_(std::move(intervals)), conflicts_(n * n, VertexSet(n)) {
  for (Vertex a = 0; a < n_; ++a)
    for (Vertex b = a + 1; b < n_; ++b) {
      VertexSet bad = interval(a, b);
      for (Vertex w = 0; w < n_; ++w)
        if (w != a && w != b &&
            (interval(w, b).contains(a) || interval(a, w).contains(b)))
          bad.insert(w);
      bad.erase(a);
      bad.erase(b);
      conflicts_[a * n_ + b] = bad;
      conflicts_[b * n_ + a] = bad;
    }
}

PositionTable PositionTable::monophonic(const Graph& g, SearchBudget& budget) {
  const std::size_t n = g.order();
  std::vector<VertexSet> intervals(n * n, VertexSet(n));
  const auto comps = components(g, g.vertices());
  for (Vertex a = 0; a < n; ++a) {
    intervals[a * n + a].insert(a);
    for (Vertex b = a + 1; b < n; ++b) {
      VertexSet j(n, {a, b});
      for (const auto& c : comps)
        if (c.contains(a) && c.contains(b))
          j = monophonic_interval(g, a, b, budget);
      intervals[a * n + b] = j;
      intervals[b * n + a] = j;
    }
  }
  return PositionTable(n, std::move(intervals));
}

PositionTable PositionTable::monophonic(const Graph& g) {
  SearchBudget budget;
  return monophonic(g, budget);
}

PositionTable PositionTable::geodesic(const Graph& g) {
  const std::size_t n = g.order();
  const auto d = distance_matrix(g);
  std::vector<VertexSet> intervals(n * n, VertexSet(n));
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b) {
      if (d[a][b] == kUnreachable) {
        intervals[a * n + b] = VertexSet(n, {a, b});
        continue;
      }
      for (Vertex w = 0; w < n; ++w)
        if (d[a][w] != kUnreachable && d[w][b] != kUnreachable &&
            d[a][w] + d[w][b] == d[a][b])
          intervals[a * n + b].insert(w);
    }
  return PositionTable(n, std::move(intervals));
}

bool PositionTable::in_position(const VertexSet& s) const {
  for (Vertex a : s)
    for (Vertex b : s)
      if (a < b && conflicts(a, b).intersects(s)) return false;
  return true;
}

VertexSet PositionTable::extensions(const VertexSet& s) const {
  VertexSet out = VertexSet::full(n_) - s;
  for (Vertex a : s)
    for (Vertex b : s)
      if (a < b) out -= conflicts(a, b);
  return out;
}

SolveResult maximum_position_set(const PositionTable& table, const Graph& g,
                                 bool independent, SearchBudget& budget) {
  const std::uint64_t start = budget.used();
  PositionSearch search(table, independent ? &g : nullptr, budget);
  const VertexSet none(g.order());
  std::size_t best = 0;
  search.maximise(degree_order(g), none, g.vertices(), best);
  // Second pass in index order pins the lexicographically smallest witness.
  auto witness = search.first_of_size(none, g.vertices(), best,
                                      [](const VertexSet&) { return true; });
  if (!witness) throw ConsistencyError("maximum position set vanished");
  return {best, *witness, budget.used() - start};
}

SolveResult smallest_maximal_position_set(const PositionTable& table,
                                          SearchBudget& budget) {
  const std::uint64_t start = budget.used();
  PositionSearch search(table, nullptr, budget);
  const std::size_t n = table.order();
  const VertexSet none(n);
  // Sets in position are closed under subsets, so the first size with a
  // maximal member gives the minimum.
  for (std::size_t size = 1; size <= n; ++size) {
    auto found = search.first_of_size(
        none, VertexSet::full(n), size,
        [&](const VertexSet& s) { return table.extensions(s).empty(); });
    if (found) return {size, *found, budget.used() - start};
  }
  throw ConsistencyError("no maximal position set found");
}

void for_each_position_set(const PositionTable& table,
                           const std::function<void(const VertexSet&)>& visit,
                           SearchBudget& budget) {
  PositionSearch search(table, nullptr, budget);
  const std::size_t n = table.order();
  search.enumerate(VertexSet(n), VertexSet::full(n),
                   [&](const VertexSet& s, const VertexSet&) {
                     visit(s);
                     return true;
                   });
}

MpCheck check_mp_set(const Graph& g, const VertexSet& s, SearchBudget& budget) {
  auto bad = find_bad_path(g, s, budget);
  return {!bad.has_value(), std::move(bad)};
}

bool is_mp_set(const Graph& g, const VertexSet& s) {
  SearchBudget budget;
  return check_mp_set(g, s, budget).in_position;
}

bool is_maximal_mp_set(const Graph& g, const VertexSet& s,
                       SearchBudget& budget) {
  if (find_bad_path(g, s, budget))
    throw PreconditionError("set is not in monophonic position");
  for (Vertex w : g.vertices() - s)
    if (!find_bad_path(g, s.with(w), budget)) return false;
  return true;
}

bool is_maximal_mp_set(const Graph& g, const VertexSet& s) {
  SearchBudget budget;
  return is_maximal_mp_set(g, s, budget);
}

SolveResult mp_number(const Graph& g, SearchBudget& budget) {
  require_connected(g, "mp_number");
  const std::uint64_t start = budget.used();
  const auto table = PositionTable::monophonic(g, budget);
  auto result = maximum_position_set(table, g, false, budget);
  result.nodes_explored = budget.used() - start;
  return result;
}

SolveResult mp_number(const Graph& g) {
  SearchBudget budget;
  return mp_number(g, budget);
}

SolveResult mp_independent(const Graph& g, SearchBudget& budget) {
  require_connected(g, "mp_independent");
  const std::uint64_t start = budget.used();
  const auto table = PositionTable::monophonic(g, budget);
  auto result = maximum_position_set(table, g, true, budget);
  result.nodes_explored = budget.used() - start;
  return result;
}

SolveResult mp_independent(const Graph& g) {
  SearchBudget budget;
  return mp_independent(g, budget);
}

SolveResult mp_lower(const Graph& g, SearchBudget& budget) {
  require_connected(g, "mp_lower");
  const std::uint64_t start = budget.used();
  const auto table = PositionTable::monophonic(g, budget);
  auto result = smallest_maximal_position_set(table, budget);
  result.nodes_explored = budget.used() - start;
  return result;
}

SolveResult mp_lower(const Graph& g) {
  SearchBudget budget;
  return mp_lower(g, budget);
}

SolveResult gp_number(const Graph& g, SearchBudget& budget) {
  require_connected(g, "gp_number");
  const auto table = PositionTable::geodesic(g);
  return maximum_position_set(table, g, false, budget);
}

SolveResult gp_number(const Graph& g) {
  SearchBudget budget;
  return gp_number(g, budget);
}

ComponentProfile mp_decomposition(const Graph& g, const VertexSet& m,
                                  SearchBudget& budget) {
  if (find_bad_path(g, m, budget))
    throw PreconditionError("set is not in monophonic position");
  auto profile = profile_of(g, m);
  const std::size_t k = profile.clique_components.size() + profile.r_m;
  for (const auto& c : profile.clique_components) {
    if (!is_clique(g, c))
      throw ConsistencyError("component of g[M] is not a clique");
    if (k < 2) continue;
    for (Vertex x : c)
      for (Vertex y : c)
        if (x < y &&
            ((g.neighbors(x) & g.neighbors(y)) - m).empty())
          throw ConsistencyError(
              "clique component vertices " + std::to_string(x) + " and " +
              std::to_string(y) + " have no common neighbour outside M");
  }
  return profile;
}

ComponentProfile mp_decomposition(const Graph& g, const VertexSet& m) {
  SearchBudget budget;
  return mp_decomposition(g, m, budget);
}

std::vector<ComponentProfile> enumerate_mp_profiles(const Graph& g,
                                                    SearchBudget& budget) {
  require_connected(g, "enumerate_mp_profiles");
  const auto table = PositionTable::monophonic(g, budget);
  std::vector<ComponentProfile> frontier;

  auto dominated = [&](std::size_t n_m, std::size_t r_m) {
    return std::any_of(frontier.begin(), frontier.end(), [&](const auto& f) {
      return f.n_m >= n_m && f.r_m >= r_m;
    });
  };

  PositionSearch search(table, nullptr, budget);
  search.enumerate(
      VertexSet(g.order()), g.vertices(),
      [&](const VertexSet& members, const VertexSet& candidates) {
        auto p = profile_of(g, members);
        if (!dominated(p.n_m, p.r_m)) {
          std::erase_if(frontier, [&](const auto& f) {
            return f.n_m <= p.n_m && f.r_m <= p.r_m;
          });
          frontier.push_back(std::move(p));
        }
        // Any extension has n_M + r_M <= reach; prune once every such pair
        // is already dominated.
        const std::size_t reach = members.size() + candidates.size();
        for (std::size_t n_m = 0; n_m <= reach; ++n_m)
          if (!dominated(n_m, reach - n_m)) return true;
        return false;
      });

  std::sort(frontier.begin(), frontier.end(),
            [](const auto& a, const auto& b) { return a.n_m > b.n_m; });
  return frontier;
}

std::vector<ComponentProfile> enumerate_mp_profiles(const Graph& g) {
  SearchBudget budget;
  return enumerate_mp_profiles(g, budget);
}

}  // namespace monopos
