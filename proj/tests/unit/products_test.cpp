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

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "monopos/errors.hpp"
#include "monopos/families.hpp"
#include "monopos/graph_io.hpp"
#include "monopos/invariants.hpp"
#include "monopos/position_sets.hpp"
#include "oracles.hpp"

namespace monopos {
namespace {

bool isomorphic_small(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool ok = true;
    for (Vertex u = 0; u < a.order() && ok; ++u)
      for (Vertex v = u + 1; v < a.order() && ok; ++v)
        ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

TEST(CartesianTest, Examples) {
  const auto c4 = cartesian_product(complete_graph(2), complete_graph(2));
  EXPECT_TRUE(isomorphic_small(c4.graph(), cycle_graph(4)));
  EXPECT_EQ(cartesian_product(path_graph(2), path_graph(3)).graph().size(), 7u);
  const auto k3 = cartesian_product(complete_graph(3), complete_graph(1));
  EXPECT_TRUE(isomorphic_small(k3.graph(), complete_graph(3)));
}

TEST(LexicographicTest, Examples) {
  const Graph h = cycle_graph(5);
  const auto p = lexicographic_product(complete_graph(1), h);
  EXPECT_EQ(p.graph().order(), 5u);
  for (Vertex u = 0; u < 5; ++u)
    for (Vertex v = 0; v < 5; ++v)
      EXPECT_EQ(p.graph().adjacent(u, v), h.adjacent(u, v));
  const auto f = lexicographic_product(path_graph(2), path_graph(3));
  EXPECT_EQ(f.graph().order(), 6u);
  EXPECT_EQ(f.graph().size(), 13u);
  EXPECT_TRUE(is_complete(
      lexicographic_product(complete_graph(2), complete_graph(2)).graph()));
}

TEST(ProductTest, MatchesOracleConstruction) {
  std::mt19937 rng(4);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_connected(1 + t % 5, 0.5, rng);
    const Graph h = oracle::random_connected(1 + (t / 5) % 5, 0.5, rng);
    const oracle::Adj ga(g), ha(h);
    const auto c = cartesian_product(g, h);
    const auto l = lexicographic_product(g, h);
    const auto co = oracle::cartesian(ga, ha);
    const auto lo = oracle::lexicographic(ga, ha);
    for (Vertex u = 0; u < c.graph().order(); ++u)
      for (Vertex v = 0; v < c.graph().order(); ++v) {
        ASSERT_EQ(c.graph().adjacent(u, v), co(u, v));
        ASSERT_EQ(l.graph().adjacent(u, v), lo(u, v));
      }
  }
}

TEST(ProductTest, IndexRoundTrip) {
  const auto p = cartesian_product(path_graph(3), cycle_graph(4));
  for (Vertex v = 0; v < 12; ++v) EXPECT_EQ(p.index(p.pair(v)), v);
  EXPECT_EQ(p.index(2, 1), 9u);
  EXPECT_THROW(p.index(3, 0), DomainError);
  EXPECT_THROW(p.pair(12), DomainError);
}

TEST(ProductTest, CapacityExceeded) {
  EXPECT_THROW(cartesian_product(path_graph(12), path_graph(11)),
               DomainError);
}

TEST(ProductTest, CartesianTransposeIsIsomorphic) {
  const Graph g = path_graph(3), h = star_graph(2);
  const auto gh = cartesian_product(g, h);
  const auto hg = cartesian_product(h, g);
  for (Vertex a = 0; a < gh.graph().order(); ++a)
    for (Vertex b = 0; b < gh.graph().order(); ++b) {
      const auto pa = gh.pair(a), pb = gh.pair(b);
      EXPECT_EQ(gh.graph().adjacent(a, b),
                hg.graph().adjacent(hg.index(pa.h, pa.g), hg.index(pb.h, pb.g)));
    }
}

TEST(ProjectionTest, Examples) {
  const auto p = cartesian_product(path_graph(3), path_graph(4));
  EXPECT_EQ(project(p, p.make_set({{0, 1}, {1, 1}}), Factor::H),
            VertexSet(4, {1}));
  EXPECT_EQ(project(p, p.make_set({{0, 0}, {0, 2}}), Factor::G),
            VertexSet(3, {0}));
  EXPECT_EQ(layer_slice(p, p.make_set({{0, 0}, {0, 2}, {1, 3}}), 0),
            VertexSet(4, {0, 2}));
}

TEST(ProjectionTest, LexSetWithNonMpProjection) {
  const auto p = lexicographic_product(path_graph(2), path_graph(3));
  const VertexSet s = p.make_set({{0, 0}, {0, 1}, {1, 1}, {1, 2}});
  EXPECT_EQ(project(p, s, Factor::H), VertexSet::full(3));
  EXPECT_TRUE(oracle::is_mp(oracle::induced_path_masks(oracle::Adj(p.graph())),
                            oracle::mask_of(s)));
  EXPECT_FALSE(is_mp_set(path_graph(3), project(p, s, Factor::H)));
  EXPECT_TRUE(is_mp_set(p.graph(), s));
}

TEST(LexDistanceTest, Examples) {
  const auto p = lexicographic_product(path_graph(2), path_graph(3));
  EXPECT_EQ(lex_distance(p, {0, 0}, {0, 2}), 2u);
  EXPECT_EQ(lex_distance(p, {0, 0}, {1, 2}), 1u);
  EXPECT_EQ(lex_distance(p, {1, 1}, {1, 1}), 0u);
  const auto k1 = lexicographic_product(complete_graph(1), path_graph(4));
  EXPECT_EQ(lex_distance(k1, {0, 0}, {0, 3}), 3u);
  const auto c = cartesian_product(path_graph(2), path_graph(2));
  EXPECT_THROW(lex_distance(c, {0, 0}, {1, 1}), PreconditionError);
}

TEST(LexDistanceTest, MatchesBreadthFirstSearch) {
  std::mt19937 rng(12);
  for (int t = 0; t < 40; ++t) {
    const Graph g = oracle::random_connected(1 + t % 5, 0.4, rng);
    const Graph h = oracle::random_connected(1 + (t / 3) % 5, 0.4, rng);
    const auto p = lexicographic_product(g, h);
    const auto d = oracle::distances(oracle::Adj(p.graph()));
    for (Vertex a = 0; a < p.graph().order(); ++a)
      for (Vertex b = 0; b < p.graph().order(); ++b)
        ASSERT_EQ(static_cast<int>(lex_distance(p, p.pair(a), p.pair(b))),
                  d[a][b])
            << to_graph6(g) << " " << to_graph6(h);
  }
}

TEST(CliqueNumberTest, CartesianProduct) {
  std::mt19937 rng(21);
  for (int t = 0; t < 30; ++t) {
    const Graph g = oracle::random_connected(1 + t % 5, 0.6, rng);
    const Graph h = oracle::random_connected(1 + (t / 2) % 5, 0.6, rng);
    const auto p = cartesian_product(g, h);
    EXPECT_EQ(invariants(p.graph()).omega,
              std::max(invariants(g).omega, invariants(h).omega));
  }
}

TEST(ClassifyTest, LayeredInOneHLayer) {
  const auto p = cartesian_product(path_graph(2), path_graph(4));
  const auto c = classify_mp_set(p, p.make_set({{0, 0}, {0, 2}}));
  EXPECT_EQ(c.tag, MpTag::layered);
  EXPECT_EQ(c.orientation, Factor::G);
  EXPECT_TRUE(c.predicates & mp_predicate::kInHLayer);
}

TEST(ClassifyTest, AdjacentFirstCoordinatesAreCliquey) {
  const auto p = cartesian_product(path_graph(3), path_graph(4));
  const auto c = classify_mp_set(p, p.make_set({{0, 0}, {1, 2}}));
  EXPECT_EQ(c.tag, MpTag::cliquey);
  EXPECT_EQ(c.orientation, Factor::G);
  EXPECT_EQ(c.predicates, mp_predicate::kCliqueyG);
}

TEST(ClassifyTest, Varied) {
  const auto p = cartesian_product(path_graph(3), path_graph(4));
  const auto c = classify_mp_set(p, p.make_set({{0, 0}, {2, 2}}));
  EXPECT_EQ(c.tag, MpTag::varied);
  EXPECT_FALSE(c.orientation);
  EXPECT_EQ(c.predicates, mp_predicate::kVaried);
}

TEST(ClassifyTest, SmallSets) {
  const auto p = cartesian_product(path_graph(3), path_graph(4));
  EXPECT_EQ(classify_mp_set(p, p.make_set({{1, 1}})).tag, MpTag::small);
  EXPECT_EQ(classify_mp_set(p, VertexSet(12)).tag, MpTag::small);
}

TEST(ClassifyTest, Errors) {
  const auto p = cartesian_product(path_graph(3), path_graph(3));
  EXPECT_THROW(classify_mp_set(p, p.make_set({{0, 0}, {0, 1}, {0, 2}})),
               PreconditionError);
  const auto l = lexicographic_product(path_graph(2), path_graph(2));
  EXPECT_THROW(classify_mp_set(l, l.make_set({{0, 0}})), PreconditionError);
}

TEST(ClassifyTest, CliqueTimesStarMaximumSets) {
  const auto p = cartesian_product(complete_graph(3), star_graph(4));
  const auto e = oracle::exhaustive(oracle::Adj(p.graph()));
  ASSERT_EQ(e.mp, 4);
  ASSERT_EQ(e.maximum_sets.size(), 81u);
  std::map<MpTag, int> tags;
  for (auto m : e.maximum_sets) {
    const auto c = classify_mp_set(p, oracle::set_of(15, m));
    ++tags[c.tag];
    EXPECT_EQ(c.orientation, Factor::G);
  }
  EXPECT_EQ(tags[MpTag::layered], 3);
  EXPECT_EQ(tags[MpTag::cliquey], 78);
}

TEST(ClassifyTest, StarProductLeafLayer) {
  const auto p = cartesian_product(star_graph(4), star_graph(2));
  const VertexSet t = p.make_set({{1, 1}, {2, 1}, {3, 1}, {4, 1}});
  EXPECT_EQ(mp_number(p.graph()).value, 4u);
  const auto c = classify_mp_set(p, t);
  EXPECT_EQ(c.tag, MpTag::layered);
  EXPECT_EQ(c.orientation, Factor::H);
}

// Every mp-set of small Cartesian products gets exactly the tag implied by
// its projections.
TEST(ClassifyTest, TrichotomyOnAllMpSets) {
  const std::vector<Graph> fs = {path_graph(2), path_graph(3), cycle_graph(3),
                                 star_graph(3), cycle_graph(4)};
  for (const auto& g : fs)
    for (const auto& h : fs) {
      const auto p = cartesian_product(g, h);
      if (p.graph().order() > 12) continue;
      const auto e = oracle::exhaustive(oracle::Adj(p.graph()));
      for (auto m : e.mp_sets) {
        const auto c = classify_mp_set(p, oracle::set_of(p.graph().order(), m));
        if (__builtin_popcountll(m) <= 1) {
          EXPECT_EQ(c.tag, MpTag::small);
          continue;
        }
        EXPECT_NE(c.tag, MpTag::small);
        EXPECT_NE(c.predicates, 0u);
      }
    }
}

}  // namespace
}  // namespace monopos
