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

#include "monopos/checker.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include "monopos/errors.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/invariants.hpp"
#include "monopos/lex_formula.hpp"
#include "monopos/position_sets.hpp"
#include "monopos/products.hpp"

namespace monopos {
namespace {

constexpr std::size_t kMaxCanonicalOrder = 10;

std::string adjacency_string(const Graph& g, const std::vector<Vertex>& label) {
  const std::size_t n = label.size();
  std::string bits;
  bits.reserve(n * (n - 1) / 2);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      bits.push_back(g.adjacent(label[i], label[j]) ? '1' : '0');
  return bits;
}

template <typename Visit>
void permute_groups(std::vector<Vertex>& label,
                    const std::vector<std::pair<std::size_t, std::size_t>>& groups,
                    std::size_t gi, Visit& visit) {
  if (gi == groups.size()) {
    visit();
    return;
  }
  const auto first = label.begin() + static_cast<std::ptrdiff_t>(groups[gi].first);
  const auto last = label.begin() + static_cast<std::ptrdiff_t>(groups[gi].second);
  std::sort(first, last);
  do {
    permute_groups(label, groups, gi + 1, visit);
  } while (std::next_permutation(first, last));
}

// Canonical labeling: label[i] is the original vertex placed at position i.
std::pair<std::string, std::vector<Vertex>> canonical_labeling(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxCanonicalOrder)
    throw DomainError("canonical form is limited to order " +
                      std::to_string(kMaxCanonicalOrder));
  std::vector<Vertex> label(n);
  for (Vertex v = 0; v < n; ++v) label[v] = v;
  std::stable_sort(label.begin(), label.end(), [&](Vertex a, Vertex b) {
    return g.degree(a) < g.degree(b);
  });
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && g.degree(label[j]) == g.degree(label[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::string best;
  std::vector<Vertex> best_label;
  auto visit = [&] {
    std::string s = adjacency_string(g, label);
    if (best_label.empty() || s < best) {
      best = std::move(s);
      best_label = label;
    }
  };
  permute_groups(label, groups, 0, visit);
  return {best, best_label};
}

Graph relabel(const Graph& g, const std::vector<Vertex>& label) {
  std::vector<Vertex> position(g.order());
  for (std::size_t i = 0; i < label.size(); ++i) position[label[i]] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    auto a = position[u], b = position[v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return Graph::from_edges(g.order(), edges);
}

std::string format_set(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

// "g,h;g,h", accepted by the CLI's --pairs flag.
std::string format_pairs(const ProductGraph& p, const VertexSet& s) {
  std::string out;
  for (auto [g, h] : p.pairs(s)) {
    if (!out.empty()) out += ";";
    out += std::to_string(g) + "," + std::to_string(h);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-graph and per-instance data, computed lazily and shared across checks.

struct FactorData {
  const Graph* g = nullptr;
  std::string g6;
  bool connected = false;
  bool exceeded = false;
  Invariants inv;
  std::size_t mp = 0;
  std::size_t mp_i = 0;
  std::optional<PositionTable> table;

  FactorData(const Graph& graph, std::uint64_t limit)
      : g(&graph), g6(to_graph6(graph)) {
    inv = invariants(graph);
    connected = inv.connected;
    if (!connected) return;
    try {
      SearchBudget budget(limit);
      table.emplace(PositionTable::monophonic(graph, budget));
      mp = maximum_position_set(*table, graph, false, budget).value;
      mp_i = maximum_position_set(*table, graph, true, budget).value;
    } catch (const BudgetExceeded&) {
      exceeded = true;
    }
  }

  void require() const {
    if (exceeded) throw BudgetExceeded(0);
  }
  bool has_leaf() const {
    for (Vertex v = 0; v < g->order(); ++v)
      if (g->degree(v) == 1) return true;
    return false;
  }
};

class ProductInstance {
 public:
  ProductInstance(ProductKind kind, const FactorData& a, const FactorData& b,
                  std::uint64_t limit)
      : a_(a), b_(b), p_(kind, *a.g, *b.g), budget_(limit) {}

  const FactorData& left() const { return a_; }
  const FactorData& right() const { return b_; }
  const ProductGraph& product() const { return p_; }
  SearchBudget& budget() { return budget_; }

  const PositionTable& table() {
    if (!table_) table_.emplace(PositionTable::monophonic(p_.graph(), budget_));
    return *table_;
  }

  const std::vector<VertexSet>& mp_sets() {
    if (!sets_) {
      std::vector<VertexSet> all;
      for_each_position_set(
          table(), [&](const VertexSet& s) { all.push_back(s); }, budget_);
      sets_ = std::move(all);
    }
    return *sets_;
  }

  std::size_t mp() {
    std::size_t best = 0;
    for (const auto& s : mp_sets()) best = std::max(best, s.size());
    return best;
  }

  std::vector<VertexSet> maximum_sets() {
    const std::size_t best = mp();
    std::vector<VertexSet> out;
    for (const auto& s : mp_sets())
      if (s.size() == best) out.push_back(s);
    return out;
  }

  std::vector<std::string> graphs() const { return {a_.g6, b_.g6}; }

 private:
  const FactorData& a_;
  const FactorData& b_;
  ProductGraph p_;
  SearchBudget budget_;
  std::optional<PositionTable> table_;
  std::optional<std::vector<VertexSet>> sets_;
};

struct SingleInstance {
  const FactorData& data;
  SearchBudget budget;
};

enum class Verdict { pass, fail, not_applicable };

struct Outcome {
  Verdict verdict = Verdict::pass;
  CheckInstance detail;
  bool found = false;
};

Outcome pass() { return {}; }
Outcome not_applicable() { return {Verdict::not_applicable, {}, false}; }
Outcome fail(std::vector<std::string> graphs, std::string witness,
             std::string expected, std::string actual) {
  return {Verdict::fail,
          {std::move(graphs), std::move(witness), std::move(expected),
           std::move(actual)},
          false};
}

using SingleCheck = std::function<Outcome(SingleInstance&)>;
using PairCheck = std::function<Outcome(ProductInstance&)>;

// ---------------------------------------------------------------------------
// Single-graph checks.

Outcome check_mp_structure(SingleInstance& in) {
  const auto& d = in.data;
  if (!d.connected) return not_applicable();
  d.require();
  std::optional<Outcome> bad;
  for_each_position_set(
      *d.table,
      [&](const VertexSet& s) {
        if (bad) return;
        try {
          mp_decomposition(*d.g, s, in.budget);
        } catch (const ConsistencyError& e) {
          bad = fail({d.g6}, format_set(s), "disjoint union of cliques",
                     e.what());
        } catch (const PreconditionError& e) {
          bad = fail({d.g6}, format_set(s), "mp-set", e.what());
        }
      },
      in.budget);
  return bad ? *bad : pass();
}

// ---------------------------------------------------------------------------
// Cartesian checks.

Outcome check_cart_projection(ProductInstance& in) {
  const auto& p = in.product();
  for (const auto& s : in.maximum_sets())
    for (Factor f : {Factor::G, Factor::H}) {
      const VertexSet proj = project(p, s, f);
      const auto& table = f == Factor::G ? *in.left().table : *in.right().table;
      if (!table.in_position(proj))
        return fail(in.graphs(), format_pairs(p, s),
                    std::string("projection on ") +
                        (f == Factor::G ? "G" : "H") + " in mp position",
                    format_set(proj) + " is not an mp-set");
    }
  return pass();
}

Outcome check_layer_uniqueness(ProductInstance& in) {
  const auto& p = in.product();
  const auto& table = in.table();
  for (Vertex u = 0; u < p.g_order(); ++u)
    for (Vertex v = 0; v < p.h_order(); ++v)
      for (Vertex u2 = 0; u2 < p.g_order(); ++u2)
        for (Vertex v2 = 0; v2 < p.h_order(); ++v2) {
          if (u2 == u || v2 == v) continue;
          const VertexSet s =
              p.make_set({{u, v}, {u2, v}, {u, v2}});
          if (table.in_position(s))
            return fail(in.graphs(), format_pairs(p, s),
                        "not in monophonic position", "mp-set");
        }
  return pass();
}

Outcome check_trichotomy(ProductInstance& in) {
  const auto& p = in.product();
  for (const auto& s : in.mp_sets()) {
    if (s.size() < 2) continue;
    try {
      const auto c = classify_position_set(p, s);
      if (c.predicates == 0)
        return fail(in.graphs(), format_pairs(p, s), "some predicate",
                    "none");
    } catch (const ConsistencyError& e) {
      return fail(in.graphs(), format_pairs(p, s),
                  "layered, varied or cliquey", e.what());
    }
  }
  return pass();
}

Outcome check_cart_bounds(ProductInstance& in) {
  const auto& l = in.left();
  const auto& r = in.right();
  l.require();
  r.require();
  const std::size_t lower = std::max(l.inv.omega, r.inv.omega);
  const std::size_t upper = std::max(l.mp, r.mp);
  const std::size_t mp = in.mp();
  const std::size_t omega = maximum_clique(in.product().graph()).size();
  if (omega != lower)
    return fail(in.graphs(), "", "omega(GxH) = " + std::to_string(lower),
                std::to_string(omega));
  if (mp < lower || mp > upper)
    return fail(in.graphs(), "",
                std::to_string(lower) + " <= mp <= " + std::to_string(upper),
                std::to_string(mp));
  return pass();
}

Outcome check_maximal_pairs(ProductInstance& in) {
  const auto& p = in.product();
  const Graph& g = p.left();
  const Graph& h = p.right();
  const auto& table = in.table();
  bool any = false;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex u2 = u + 1; u2 < g.order(); ++u2)
      for (Vertex v = 0; v < h.order(); ++v)
        for (Vertex v2 = 0; v2 < h.order(); ++v2) {
          if (v == v2) continue;
          const bool far = !g.adjacent(u, u2) && !h.adjacent(v, v2);
          const bool edges = g.adjacent(u, u2) && h.adjacent(v, v2);
          if (!far && !edges) continue;
          any = true;
          const VertexSet s = p.make_set({{u, v}, {u2, v2}});
          if (!table.is_maximal(s))
            return fail(in.graphs(), format_pairs(p, s),
                        "maximal mp-set", "extendable");
        }
  return any ? pass() : not_applicable();
}

Outcome check_lower_mp(ProductInstance& in) {
  const auto& p = in.product();
  if (p.g_order() < 2 || p.h_order() < 2) return not_applicable();
  const auto r = smallest_maximal_position_set(in.table(), in.budget());
  if (r.value != 2)
    return fail(in.graphs(), format_pairs(p, r.witness), "2",
                std::to_string(r.value));
  return pass();
}

Outcome check_varied_small(ProductInstance& in) {
  const auto& p = in.product();
  for (const auto& s : in.mp_sets())
    if (s.size() > 2 && (mp_predicates(p, s) & mp_predicate::kVaried))
      return fail(in.graphs(), format_pairs(p, s), "size <= 2",
                  std::to_string(s.size()));
  return pass();
}

// Sets above the clique bound whose projection on `clique_side` is a clique.
template <typename Body>
Outcome over_large_clique_projections(ProductInstance& in, bool min_two,
                                      Body&& body) {
  const auto& p = in.product();
  const std::size_t bound =
      std::max(in.left().inv.omega, in.right().inv.omega);
  bool any = false;
  for (const auto& s : in.mp_sets()) {
    if (s.size() <= bound) continue;
    for (Factor f : {Factor::G, Factor::H}) {
      const VertexSet proj = project(p, s, f);
      const Graph& side = f == Factor::G ? p.left() : p.right();
      if (!is_clique(side, proj) || (min_two && proj.size() < 2)) continue;
      any = true;
      if (auto bad = body(s, f, proj)) return *bad;
    }
  }
  return any ? pass() : not_applicable();
}

Outcome check_cliquey_independent(ProductInstance& in) {
  const auto& p = in.product();
  return over_large_clique_projections(
      in, true,
      [&](const VertexSet& s, Factor f,
          const VertexSet&) -> std::optional<Outcome> {
        const Factor other = f == Factor::G ? Factor::H : Factor::G;
        const Graph& side = other == Factor::G ? p.left() : p.right();
        const VertexSet proj = project(p, s, other);
        if (!is_independent(side, proj))
          return fail(in.graphs(), format_pairs(p, s),
                      "independent projection",
                      format_set(proj) + " has an edge");
        return std::nullopt;
      });
}

Outcome check_simplicial(ProductInstance& in) {
  const auto& p = in.product();
  return over_large_clique_projections(
      in, false,
      [&](const VertexSet& s, Factor f,
          const VertexSet& proj) -> std::optional<Outcome> {
        const Graph& side = f == Factor::G ? p.left() : p.right();
        for (Vertex v : proj)
          if (!is_simplicial(side, v))
            return fail(in.graphs(), format_pairs(p, s),
                        "simplicial clique projection",
                        "vertex " + std::to_string(v) + " is not simplicial");
        return std::nullopt;
      });
}

Outcome check_main_bounds(ProductInstance& in) {
  const auto& l = in.left();
  const auto& r = in.right();
  l.require();
  r.require();
  const std::size_t omega = std::max(l.inv.omega, r.inv.omega);
  const std::size_t upper =
      std::max({omega, l.inv.sigma ? r.mp_i : 0, r.inv.sigma ? l.mp_i : 0});
  const std::size_t mp = in.mp();
  if (mp > upper)
    return fail(in.graphs(), "", "mp <= " + std::to_string(upper),
                std::to_string(mp));
  if (!l.inv.sigma && !r.inv.sigma && mp != omega)
    return fail(in.graphs(), "", "mp = " + std::to_string(omega),
                std::to_string(mp));
  return pass();
}

Outcome check_leaf_lower(ProductInstance& in) {
  const auto& l = in.left();
  const auto& r = in.right();
  if (l.g->order() < 3 || r.g->order() < 3 || !l.has_leaf() || !r.has_leaf())
    return not_applicable();
  const std::size_t lower = std::max(l.inv.delta1, r.inv.delta1);
  const std::size_t mp = in.mp();
  if (mp < lower)
    return fail(in.graphs(), "", "mp >= " + std::to_string(lower),
                std::to_string(mp));
  return pass();
}

Outcome check_triangle_free(ProductInstance& in) {
  const auto& l = in.left();
  const auto& r = in.right();
  if (l.g->order() < 3 || r.g->order() < 3 || !l.inv.triangle_free ||
      !r.inv.triangle_free)
    return not_applicable();
  const std::size_t upper =
      std::max<std::size_t>({2, l.inv.sigma ? r.inv.max_degree : 0,
                             r.inv.sigma ? l.inv.max_degree : 0});
  const std::size_t mp = in.mp();
  if (mp > upper)
    return fail(in.graphs(), "", "mp <= " + std::to_string(upper),
                std::to_string(mp));
  return pass();
}

// ---------------------------------------------------------------------------
// Lexicographic checks.

Outcome check_lex_formula(ProductInstance& in) {
  const auto& p = in.product();
  const auto lex = lex_mp(p.left(), p.right(), in.budget());
  const auto direct = mp_number(p.graph(), in.budget());
  if (lex.value != direct.value)
    return fail(in.graphs(), format_pairs(p, direct.witness),
                std::to_string(direct.value), std::to_string(lex.value));
  if (lex.witness.size() != lex.value)
    return fail(in.graphs(), format_pairs(p, lex.witness),
                "witness of size " + std::to_string(lex.value),
                std::to_string(lex.witness.size()));
  return pass();
}

Outcome check_lex_projections(ProductInstance& in) {
  const auto& p = in.product();
  const auto& gt = *in.left().table;
  const auto& ht = *in.right().table;
  for (const auto& s : in.mp_sets()) {
    const VertexSet pg = project(p, s, Factor::G);
    if (!gt.in_position(pg))
      return fail(in.graphs(), format_pairs(p, s), "pi_G(S) mp-set of G",
                  format_set(pg));
    for (Vertex u : pg) {
      const VertexSet slice = layer_slice(p, s, u);
      if (!ht.in_position(slice))
        return fail(in.graphs(), format_pairs(p, s),
                    "layer slice at " + std::to_string(u) + " mp-set of H",
                    format_set(slice));
    }
  }
  return pass();
}

Outcome check_lex_distance(ProductInstance& in) {
  const auto& p = in.product();
  const auto d = distance_matrix(p.graph());
  for (Vertex a = 0; a < p.graph().order(); ++a)
    for (Vertex b = 0; b < p.graph().order(); ++b) {
      const std::size_t formula = lex_distance(p, p.pair(a), p.pair(b));
      if (formula != d[a][b]) {
        const VertexSet s(p.graph().order(), {a, b});
        return fail(in.graphs(), format_pairs(p, s),
                    std::to_string(d[a][b]), std::to_string(formula));
      }
    }
  return pass();
}

Outcome check_lex_counterexample(ProductInstance& in) {
  const auto& p = in.product();
  const auto& ht = *in.right().table;
  for (const auto& s : in.mp_sets()) {
    const VertexSet ph = project(p, s, Factor::H);
    if (!ht.in_position(ph)) {
      Outcome o;
      o.found = true;
      o.detail = {in.graphs(), format_pairs(p, s), "pi_H(S) not an mp-set",
                  format_set(ph)};
      return o;
    }
  }
  return pass();
}

// ---------------------------------------------------------------------------

enum class Scope { single, cartesian, lexicographic };

struct Registered {
  CheckInfo info;
  Scope scope;
  SingleCheck single;
  PairCheck pair;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> checks = {
      {{"C1", "mp-structure"}, Scope::single, check_mp_structure, {}},
      {{"C2", "cart-projection"}, Scope::cartesian, {}, check_cart_projection},
      {{"C3", "layer-uniqueness"}, Scope::cartesian, {}, check_layer_uniqueness},
      {{"C4", "trichotomy"}, Scope::cartesian, {}, check_trichotomy},
      {{"C5", "cart-bounds"}, Scope::cartesian, {}, check_cart_bounds},
      {{"C6", "maximal-pairs"}, Scope::cartesian, {}, check_maximal_pairs},
      {{"C7", "lower-mp"}, Scope::cartesian, {}, check_lower_mp},
      {{"C8", "varied-small"}, Scope::cartesian, {}, check_varied_small},
      {{"C9", "cliquey-independent"}, Scope::cartesian, {},
       check_cliquey_independent},
      {{"C10", "simplicial"}, Scope::cartesian, {}, check_simplicial},
      {{"C11", "main-bounds"}, Scope::cartesian, {}, check_main_bounds},
      {{"C12", "leaf-lower"}, Scope::cartesian, {}, check_leaf_lower},
      {{"C13", "triangle-free"}, Scope::cartesian, {}, check_triangle_free},
      {{"C14", "lex-formula"}, Scope::lexicographic, {}, check_lex_formula},
      {{"C15", "lex-projections"}, Scope::lexicographic, {},
       check_lex_projections},
      {{"C16", "lex-distance"}, Scope::lexicographic, {}, check_lex_distance},
      {{"C17", "lex-counterexample-exists"}, Scope::lexicographic, {},
       check_lex_counterexample},
  };
  return checks;
}

const Registered& lookup(const std::string& id) {
  for (const auto& r : registry())
    if (r.info.id == id) return r;
  throw DomainError("unknown check " + id);
}

void record(CheckReport& report, const Outcome& o) {
  switch (o.verdict) {
    case Verdict::pass:
      ++report.tested;
      if (o.found) {
        ++report.found;
        if (!report.example) report.example = o.detail;
      }
      break;
    case Verdict::fail:
      ++report.tested;
      report.failures.push_back(o.detail);
      break;
    case Verdict::not_applicable:
      ++report.not_applicable;
      break;
  }
}

template <typename Instance, typename Fn>
void run_one(CheckReport& report, Instance& in, const Fn& fn) {
  try {
    record(report, fn(in));
  } catch (const BudgetExceeded&) {
    ++report.skipped;
  }
}

}  // namespace

std::string canonical_form(const Graph& g) {
  return canonical_labeling(g).first;
}

std::vector<Graph> generate_connected_graphs(std::size_t n, bool dedup) {
  if (n == 0 || n > kMaxGeneratedOrder)
    throw DomainError("the internal generator covers orders 1.." +
                      std::to_string(kMaxGeneratedOrder) +
                      "; supply a graph6 corpus file for order " +
                      std::to_string(n));
  if (!dedup) {
    std::vector<Edge> slots;
    for (Vertex j = 1; j < n; ++j)
      for (Vertex i = 0; i < j; ++i) slots.emplace_back(i, j);
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      GraphBuilder b(n);
      for (std::size_t k = 0; k < slots.size(); ++k)
        if ((mask >> k) & 1U) b.add_edge(slots[k].first, slots[k].second);
      Graph g = std::move(b).build();
      if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
  }

  // Every connected graph has a vertex whose removal leaves it connected, so
  // extending each class of order k-1 by one vertex reaches all of order k.
  std::vector<Graph> level = {Graph(1)};
  for (std::size_t k = 2; k <= n; ++k) {
    std::vector<Graph> next;
    std::unordered_set<std::string> seen;
    for (const Graph& base : level) {
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1));
           ++mask) {
        GraphBuilder b(k);
        for (auto [u, v] : base.edges()) b.add_edge(u, v);
        for (Vertex v = 0; v + 1 < k; ++v)
          if ((mask >> v) & 1U) b.add_edge(v, k - 1);
        Graph g = std::move(b).build();
        auto [form, label] = canonical_labeling(g);
        if (seen.insert(form).second) next.push_back(relabel(g, label));
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Graph> load_corpus(const CorpusSpec& spec) {
  if (spec.min_order == 0 || spec.min_order > spec.max_order)
    throw DomainError("corpus order range is empty");
  if (spec.max_order > kMaxVertices)
    throw DomainError("corpus order exceeds capacity");
  std::vector<Graph> out;
  if (spec.source == CorpusSource::generator) {
    for (std::size_t n = spec.min_order; n <= spec.max_order; ++n)
      for (auto& g : generate_connected_graphs(n, spec.dedup))
        out.push_back(std::move(g));
    return out;
  }

  std::ifstream in(spec.path);
  if (!in) throw DomainError("cannot open corpus file " + spec.path);
  std::unordered_set<std::string> seen;
  for (auto& g : read_graph6_stream(in)) {
    if (g.order() < spec.min_order || g.order() > spec.max_order) continue;
    if (spec.connected_only && !is_connected(g)) continue;
    if (spec.dedup && !seen.insert(canonical_form(g)).second) continue;
    out.push_back(std::move(g));
  }
  std::stable_sort(out.begin(), out.end(), [](const Graph& a, const Graph& b) {
    return a.order() < b.order();
  });
  return out;
}

bool CheckReport::passed() const {
  if (!failures.empty()) return false;
  if (check_id == "C17") return found > 0;
  return true;
}

const std::vector<CheckInfo>& registered_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> out;
    for (const auto& r : registry()) out.push_back(r.info);
    return out;
  }();
  return infos;
}

std::string normalize_check_id(const std::string& id) {
  std::string digits = id;
  if (!digits.empty() && (digits[0] == 'C' || digits[0] == 'c'))
    digits.erase(0, 1);
  if (digits.empty() ||
      !std::all_of(digits.begin(), digits.end(),
                   [](unsigned char c) { return std::isdigit(c) != 0; }))
    throw DomainError("unknown check " + id);
  const std::string normalized = "C" + std::to_string(std::stoul(digits));
  lookup(normalized);
  return normalized;
}

CheckPlan default_check_plan() {
  CheckPlan plan;
  plan.singles = load_corpus({CorpusSource::generator, "", 1, 6, true, true});
  plan.cartesian_factors =
      load_corpus({CorpusSource::generator, "", 1, 4, true, true});
  plan.lex_left = load_corpus({CorpusSource::generator, "", 2, 4, true, true});
  plan.lex_right = load_corpus({CorpusSource::generator, "", 2, 3, true, true});
  return plan;
}

std::vector<CheckReport> run_checks(const CheckPlan& plan,
                                    const std::vector<std::string>& checks) {
  std::vector<const Registered*> selected;
  if (checks.empty()) {
    for (const auto& r : registry()) selected.push_back(&r);
  } else {
    for (const auto& id : checks)
      selected.push_back(&lookup(normalize_check_id(id)));
  }

  std::vector<CheckReport> reports;
  for (const auto* r : selected)
    reports.push_back({r->info.id, r->info.title, 0, 0, 0, 0, {}, {}});

  auto wants = [&](Scope scope) {
    return std::any_of(selected.begin(), selected.end(),
                       [&](const auto* r) { return r->scope == scope; });
  };

  // Factor data is keyed by graph address; the plan outlives this call.
  std::map<const Graph*, FactorData> factors;
  auto factor = [&](const Graph& g) -> const FactorData& {
    auto it = factors.find(&g);
    if (it == factors.end())
      it = factors.emplace(&g, FactorData(g, plan.instance_budget)).first;
    return it->second;
  };

  if (wants(Scope::single))
    for (const Graph& g : plan.singles) {
      SingleInstance in{factor(g), SearchBudget(plan.instance_budget)};
      for (std::size_t i = 0; i < selected.size(); ++i)
        if (selected[i]->scope == Scope::single)
          run_one(reports[i], in, selected[i]->single);
    }

  auto run_pairs = [&](Scope scope, ProductKind kind, const FactorData& a,
                       const FactorData& b) {
    if (!a.connected || !b.connected) {
      for (std::size_t i = 0; i < selected.size(); ++i)
        if (selected[i]->scope == scope) ++reports[i].not_applicable;
      return;
    }
    ProductInstance in(kind, a, b, plan.instance_budget);
    for (std::size_t i = 0; i < selected.size(); ++i) {
      if (selected[i]->scope != scope) continue;
      if (a.exceeded || b.exceeded) {
        ++reports[i].skipped;
        continue;
      }
      run_one(reports[i], in, selected[i]->pair);
    }
  };

  if (wants(Scope::cartesian)) {
    const auto& fs = plan.cartesian_factors;
    for (std::size_t i = 0; i < fs.size(); ++i)
      for (std::size_t j = i; j < fs.size(); ++j)
        run_pairs(Scope::cartesian, ProductKind::cartesian, factor(fs[i]),
                  factor(fs[j]));
  }

  if (wants(Scope::lexicographic))
    for (const Graph& g : plan.lex_left) {
      if (g.order() < 2) continue;
      for (const Graph& h : plan.lex_right)
        run_pairs(Scope::lexicographic, ProductKind::lexicographic, factor(g),
                  factor(h));
    }

  return reports;
}

std::vector<CheckReport> run_checks(
    const CorpusSpec& corpus, const std::optional<CorpusSpec>& pair_corpus,
    const std::vector<std::string>& checks, std::uint64_t instance_budget) {
  CheckPlan plan;
  plan.instance_budget = instance_budget;
  plan.singles = load_corpus(corpus);
  plan.cartesian_factors = load_corpus(pair_corpus.value_or(corpus));
  plan.lex_left = plan.cartesian_factors;
  plan.lex_right = plan.cartesian_factors;
  return run_checks(plan, checks);
}

}  // namespace monopos
