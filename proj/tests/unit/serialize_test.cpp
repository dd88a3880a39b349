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

#include "monopos/serialize.hpp"

#include <gtest/gtest.h>

#include "monopos/families.hpp"
#include "monopos/lex_formula.hpp"

namespace monopos {
namespace {

using nlohmann::json;

TEST(SerializeTest, VertexSet) {
  EXPECT_EQ(json(VertexSet(6, {4, 1})), json::parse("[1,4]"));
  EXPECT_EQ(json(VertexSet(3)), json::array());
}

TEST(SerializeTest, SolveResult) {
  const json j = mp_number(complete_graph(3));
  EXPECT_EQ(j["value"], 3);
  EXPECT_EQ(j["witness"], json::parse("[0,1,2]"));
  EXPECT_TRUE(j.contains("nodes"));
}

TEST(SerializeTest, Invariants) {
  const json j = invariants(star_graph(3));
  EXPECT_EQ(j["delta1"], 3);
  EXPECT_EQ(j["sigma"], 1);
  EXPECT_EQ(j["simplicials"], json::parse("[1,2,3]"));
  EXPECT_EQ(j["triangle_free"], true);
}

TEST(SerializeTest, Profile) {
  const json j = mp_decomposition(cycle_graph(6), VertexSet(6, {0, 3}));
  EXPECT_EQ(j["n_m"], 0);
  EXPECT_EQ(j["r_m"], 2);
  EXPECT_EQ(j["singletons"], json::parse("[0,3]"));
  EXPECT_TRUE(j["clique_components"].empty());
}

TEST(SerializeTest, ProductSet) {
  const auto p = cartesian_product(path_graph(2), path_graph(3));
  const json j = product_set_json(p, p.make_set({{1, 2}, {0, 1}}));
  EXPECT_EQ(j, json::parse(R"([{"g":0,"h":1,"index":1},
                                {"g":1,"h":2,"index":5}])"));
}

TEST(SerializeTest, MpClass) {
  const auto p = cartesian_product(path_graph(2), path_graph(4));
  const json j = mp_class_json(classify_mp_set(p, p.make_set({{0, 0}, {0, 2}})));
  EXPECT_EQ(j["tag"], "layered");
  EXPECT_EQ(j["orientation"], "G");
  EXPECT_TRUE(mp_class_json(MpClass{})["orientation"].is_null());
}

TEST(SerializeTest, LexResult) {
  const auto p = lexicographic_product(path_graph(3), path_graph(3));
  const json j = lex_result_json(p, lex_mp(path_graph(3), path_graph(3)));
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["shortcut"], "triangle_free");
  EXPECT_EQ(j["witness"].size(), 4u);
  EXPECT_TRUE(j["profile"].contains("r_m"));
}

TEST(SerializeTest, CheckReport) {
  CheckReport r;
  r.check_id = "C17";
  r.title = "t";
  r.found = 2;
  r.example = CheckInstance{{"A_"}, "0,0", "", ""};
  const json j = r;
  EXPECT_EQ(j["passed"], true);
  EXPECT_EQ(j["example"]["graphs"][0], "A_");
  EXPECT_TRUE(j["failures"].empty());
}

}  // namespace
}  // namespace monopos
