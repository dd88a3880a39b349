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

#include "monopos/products.hpp"

#include <algorithm>

#include "monopos/errors.hpp"
#include "monopos/invariants.hpp"
#include "monopos/position_sets.hpp"

namespace monopos {
namespace {

std::size_t checked_order(const Graph& g, const Graph& h) {
  const std::size_t n = g.order() * h.order();
  if (n > kMaxVertices)
    throw DomainError("product of orders " + std::to_string(g.order()) +
                      " and " + std::to_string(h.order()) +
                      " exceeds the capacity of " +
                      std::to_string(kMaxVertices) + " vertices");
  return n;
}

Graph build_product(ProductKind kind, const Graph& g, const Graph& h) {
  const std::size_t hn = h.order();
  GraphBuilder b(checked_order(g, h));
  for (Vertex g1 = 0; g1 < g.order(); ++g1)
    for (Vertex h1 = 0; h1 < hn; ++h1)
      for (Vertex g2 = g1; g2 < g.order(); ++g2)
        for (Vertex h2 = 0; h2 < hn; ++h2) {
          if (g1 == g2 && h2 <= h1) continue;
          const bool same_g = g1 == g2;
          bool edge = false;
          if (kind == ProductKind::cartesian)
            edge = (g.adjacent(g1, g2) && h1 == h2) ||
                   (same_g && h.adjacent(h1, h2));
          else
            edge = g.adjacent(g1, g2) || (same_g && h.adjacent(h1, h2));
          if (edge) b.add_edge(g1 * hn + h1, g2 * hn + h2);
        }
  const char* op = kind == ProductKind::cartesian ? " x " : " o ";
  std::string name;
  if (!g.name().empty() && !h.name().empty())
    name = "(" + g.name() + op + h.name() + ")";
  return std::move(b).build(std::move(name));
}

}  // namespace

std::string product_kind_name(ProductKind kind) {
  return kind == ProductKind::cartesian ? "cartesian" : "lexicographic";
}

ProductGraph::ProductGraph(ProductKind kind, Graph g, Graph h)
    : kind_(kind),
      g_(std::move(g)),
      h_(std::move(h)),
      graph_(build_product(kind_, g_, h_)) {}

Vertex ProductGraph::index(Vertex g, Vertex h) const {
  if (g >= g_order() || h >= h_order())
    throw DomainError("product vertex (" + std::to_string(g) + "," +
                      std::to_string(h) + ") out of range");
  return g * h_order() + h;
}

ProductVertex ProductGraph::pair(Vertex flat) const {
  if (flat >= graph_.order())
    throw DomainError("product vertex " + std::to_string(flat) +
                      " out of range");
  return {flat / h_order(), flat % h_order()};
}

VertexSet ProductGraph::make_set(
    const std::vector<ProductVertex>& members) const {
  VertexSet s(graph_.order());
  for (auto v : members) s.insert(index(v));
  return s;
}

std::vector<ProductVertex> ProductGraph::pairs(const VertexSet& s) const {
  std::vector<ProductVertex> out;
  for (Vertex v : s) out.push_back(pair(v));
  return out;
}

VertexSet ProductGraph::h_layer(Vertex u) const {
  VertexSet s(graph_.order());
  for (Vertex h = 0; h < h_order(); ++h) s.insert(index(u, h));
  return s;
}

VertexSet ProductGraph::g_layer(Vertex v) const {
  VertexSet s(graph_.order());
  for (Vertex g = 0; g < g_order(); ++g) s.insert(index(g, v));
  return s;
}

ProductGraph cartesian_product(const Graph& g, const Graph& h) {
  return ProductGraph(ProductKind::cartesian, g, h);
}

ProductGraph lexicographic_product(const Graph& g, const Graph& h) {
  return ProductGraph(ProductKind::lexicographic, g, h);
}

VertexSet project(const ProductGraph& p, const VertexSet& s, Factor factor) {
  VertexSet out(factor == Factor::G ? p.g_order() : p.h_order());
  for (Vertex v : s) {
    const auto [g, h] = p.pair(v);
    out.insert(factor == Factor::G ? g : h);
  }
  return out;
}

VertexSet layer_slice(const ProductGraph& p, const VertexSet& s, Vertex u) {
  return project(p, s & p.h_layer(u), Factor::H);
}

std::size_t lex_distance(const ProductGraph& p, ProductVertex a,
                         ProductVertex b) {
  if (p.kind() != ProductKind::lexicographic)
    throw PreconditionError("lex_distance needs a lexicographic product");
  p.index(a);
  p.index(b);
  if (a == b) return 0;
  if (a.g != b.g) return distance_matrix(p.left())[a.g][b.g];
  const std::size_t dh = distance_matrix(p.right())[a.h][b.h];
  if (p.left().degree(a.g) == 0) return dh;
  return std::min<std::size_t>(dh, 2);
}

std::string mp_tag_name(MpTag tag) {
  switch (tag) {
    case MpTag::small:
      return "small";
    case MpTag::layered:
      return "layered";
    case MpTag::varied:
      return "varied";
    case MpTag::cliquey:
      return "cliquey";
  }
  return "unknown";
}

unsigned mp_predicates(const ProductGraph& p, const VertexSet& s) {
  using namespace mp_predicate;
  const VertexSet pg = project(p, s, Factor::G);
  const VertexSet ph = project(p, s, Factor::H);
  const bool g_distinct = pg.size() == s.size();
  const bool h_distinct = ph.size() == s.size();
  const bool g_clique = is_clique(p.left(), pg);
  const bool h_clique = is_clique(p.right(), ph);
  unsigned mask = 0;
  if (pg.size() == 1) mask |= kInHLayer;
  if (ph.size() == 1) mask |= kInGLayer;
  if (s.size() >= 2 && g_distinct && h_distinct && !g_clique && !h_clique)
    mask |= kVaried;
  if (pg.size() >= 2 && g_clique && h_distinct) mask |= kCliqueyG;
  if (ph.size() >= 2 && h_clique && g_distinct) mask |= kCliqueyH;
  return mask;
}

MpClass classify_position_set(const ProductGraph& p, const VertexSet& s) {
  using namespace mp_predicate;
  if (p.kind() != ProductKind::cartesian)
    throw PreconditionError("classification applies to Cartesian products");
  MpClass c;
  c.predicates = mp_predicates(p, s);
  if (s.size() <= 1) return c;
  if (c.predicates & kInHLayer) {
    c.tag = MpTag::layered;
    c.orientation = Factor::G;
  } else if (c.predicates & kInGLayer) {
    c.tag = MpTag::layered;
    c.orientation = Factor::H;
  } else if (c.predicates & kCliqueyG) {
    c.tag = MpTag::cliquey;
    c.orientation = Factor::G;
  } else if (c.predicates & kCliqueyH) {
    c.tag = MpTag::cliquey;
    c.orientation = Factor::H;
  } else if (c.predicates & kVaried) {
    c.tag = MpTag::varied;
  } else {
    throw ConsistencyError(
        "mp-set of a Cartesian product is neither layered, varied nor "
        "cliquey");
  }
  return c;
}

MpClass classify_mp_set(const ProductGraph& p, const VertexSet& s) {
  if (p.kind() != ProductKind::cartesian)
    throw PreconditionError("classification applies to Cartesian products");
  if (!is_mp_set(p.graph(), s))
    throw PreconditionError("set is not in monophonic position");
  return classify_position_set(p, s);
}

}  // namespace monopos
