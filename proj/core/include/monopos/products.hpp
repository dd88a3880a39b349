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

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

enum class ProductKind { cartesian, lexicographic };
enum class Factor { G, H };

std::string product_kind_name(ProductKind kind);

struct ProductVertex {
  Vertex g = 0;
  Vertex h = 0;
  friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

/// Flattened product of two factors; (g, h) lives at flat index g*|H| + h.
///
/// Cartesian: (g1,h1) ~ (g2,h2) iff g1 ~ g2 and h1 = h2, or g1 = g2 and
/// h1 ~ h2. Lexicographic: g1 ~ g2, or g1 = g2 and h1 ~ h2.
class ProductGraph {
 public:
  // Throws DomainError if |G|*|H| exceeds kMaxVertices.
  ProductGraph(ProductKind kind, Graph g, Graph h);

  ProductKind kind() const noexcept { return kind_; }
  const Graph& graph() const noexcept { return graph_; }
  const Graph& left() const noexcept { return g_; }
  const Graph& right() const noexcept { return h_; }
  std::size_t g_order() const noexcept { return g_.order(); }
  std::size_t h_order() const noexcept { return h_.order(); }

  Vertex index(Vertex g, Vertex h) const;
  Vertex index(ProductVertex v) const { return index(v.g, v.h); }
  ProductVertex pair(Vertex flat) const;

  VertexSet make_set(const std::vector<ProductVertex>& members) const;
  std::vector<ProductVertex> pairs(const VertexSet& s) const;

  // {u} x V(H), the H-layer through u.
  VertexSet h_layer(Vertex u) const;
  // V(G) x {v}, the G-layer through v.
  VertexSet g_layer(Vertex v) const;

 private:
  ProductKind kind_;
  Graph g_;
  Graph h_;
  Graph graph_;
};

ProductGraph cartesian_product(const Graph& g, const Graph& h);
ProductGraph lexicographic_product(const Graph& g, const Graph& h);

// pi_G(S) or pi_H(S): the factor coordinates occurring in s.
VertexSet project(const ProductGraph& p, const VertexSet& s, Factor factor);

// pi_H(^uH intersect S): second coordinates of the members of s with first
// coordinate u.
VertexSet layer_slice(const ProductGraph& p, const VertexSet& s, Vertex u);

/// Distance in G o H from the closed form
///   d_G(g,g')                  if g != g'
///   d_H(h,h')                  if g == g' and deg_G(g) == 0
///   min{d_H(h,h'), 2}          if g == g' and deg_G(g) != 0
/// kUnreachable where the relevant factor distance is infinite.
std::size_t lex_distance(const ProductGraph& p, ProductVertex a,
                         ProductVertex b);

enum class MpTag { small, layered, varied, cliquey };
std::string mp_tag_name(MpTag tag);

// Type predicates a set can satisfy; sets of size 2 may satisfy several.
namespace mp_predicate {
inline constexpr unsigned kInHLayer = 1U << 0;    // pi_G(S) is one vertex
inline constexpr unsigned kInGLayer = 1U << 1;    // pi_H(S) is one vertex
inline constexpr unsigned kVaried = 1U << 2;
inline constexpr unsigned kCliqueyG = 1U << 3;    // pi_G(S) clique, |.| >= 2
inline constexpr unsigned kCliqueyH = 1U << 4;    // pi_H(S) clique, |.| >= 2
inline constexpr unsigned kLayered = kInHLayer | kInGLayer;
inline constexpr unsigned kCliquey = kCliqueyG | kCliqueyH;
}  // namespace mp_predicate

struct MpClass {
  MpTag tag = MpTag::small;
  // Layered: the factor whose projection is a single vertex (G means the set
  // lies in one H-layer). Cliquey: the factor whose projection is the
  // clique. Empty for small and varied sets.
  std::optional<Factor> orientation;
  unsigned predicates = 0;
};

// Predicate bitmask alone; no mp check.
unsigned mp_predicates(const ProductGraph& p, const VertexSet& s);

/// Layered / varied / cliquey classification of an mp-set of a Cartesian
/// product. Canonical tag precedence is layered, then cliquey, then varied.
/// Throws PreconditionError if p is not Cartesian or s is not an mp-set, and
/// ConsistencyError if a set of two or more vertices satisfies no predicate.
MpClass classify_mp_set(const ProductGraph& p, const VertexSet& s);

// Same, trusting the caller that s is an mp-set.
MpClass classify_position_set(const ProductGraph& p, const VertexSet& s);

}  // namespace monopos
