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

#include "monopos/families.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include "monopos/errors.hpp"

namespace monopos {
namespace {

using ::testing::ElementsAre;
using ::testing::Pair;

TEST(FamiliesTest, Path) {
  const Graph g = generate_family(parse_family("path:4"));
  EXPECT_THAT(g.edges(), ElementsAre(Pair(0, 1), Pair(1, 2), Pair(2, 3)));
  EXPECT_EQ(g.name(), "path:4");
  EXPECT_EQ(path_graph(1).order(), 1u);
}

TEST(FamiliesTest, Star) {
  const Graph g = generate_family(parse_family("star:3"));
  EXPECT_EQ(g.order(), 4u);
  EXPECT_EQ(g.degree(0), 3u);
  for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(g.degree(v), 1u);
}

TEST(FamiliesTest, GearFour) {
  const Graph g = gear_graph(4);
  EXPECT_EQ(g.order(), 9u);
  EXPECT_EQ(g.size(), 12u);
  EXPECT_EQ(g.degree(0), 4u);
  for (Vertex rim = 1; rim <= 4; ++rim) EXPECT_EQ(g.degree(rim), 3u);
  for (Vertex sub = 5; sub <= 8; ++sub) EXPECT_EQ(g.degree(sub), 2u);
  EXPECT_TRUE(g.adjacent(5, 1));
  EXPECT_TRUE(g.adjacent(5, 2));
  EXPECT_TRUE(g.adjacent(8, 4));
  EXPECT_TRUE(g.adjacent(8, 1));
}

TEST(FamiliesTest, CountsAndShapes) {
  EXPECT_EQ(cycle_graph(5).size(), 5u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  EXPECT_EQ(complete_bipartite_graph(2, 3).size(), 6u);
  EXPECT_FALSE(complete_bipartite_graph(2, 3).adjacent(0, 1));
  EXPECT_EQ(wheel_graph(5).size(), 10u);
  EXPECT_EQ(wheel_graph(5).degree(0), 5u);
  EXPECT_EQ(generate_family(parse_family("complete_bipartite:2,3")),
            complete_bipartite_graph(2, 3));
}

TEST(FamiliesTest, BelowMinimum) {
  EXPECT_THROW(path_graph(0), DomainError);
  EXPECT_THROW(cycle_graph(2), DomainError);
  EXPECT_THROW(complete_graph(0), DomainError);
  EXPECT_THROW(star_graph(0), DomainError);
  EXPECT_THROW(complete_bipartite_graph(0, 2), DomainError);
  EXPECT_THROW(wheel_graph(2), DomainError);
  EXPECT_THROW(gear_graph(2), DomainError);
}

TEST(FamiliesTest, BadDescriptors) {
  EXPECT_THROW(parse_family("banana:3"), DomainError);
  EXPECT_THROW(parse_family("path"), DomainError);
  EXPECT_THROW(parse_family("path:x"), DomainError);
  EXPECT_THROW(parse_family("path:3,4"), DomainError);
  EXPECT_THROW(generate_family(parse_family("complete_bipartite:3")),
               DomainError);
}

}  // namespace
}  // namespace monopos
