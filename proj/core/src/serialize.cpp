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

namespace monopos {

using nlohmann::json;

void to_json(json& j, const VertexSet& s) { j = s.to_vector(); }

void to_json(json& j, const Invariants& inv) {
  j = json{{"omega", inv.omega},
           {"alpha", inv.alpha},
           {"max_degree", inv.max_degree},
           {"delta1", inv.delta1},
           {"sigma", inv.sigma ? 1 : 0},
           {"simplicials", inv.simplicials},
           {"triangle_free", inv.triangle_free},
           {"connected", inv.connected}};
}

void to_json(json& j, const ComponentProfile& p) {
  j = json{{"n_m", p.n_m},
           {"r_m", p.r_m},
           {"clique_components", p.clique_components},
           {"singletons", p.singletons}};
}

void to_json(json& j, const SolveResult& r) {
  j = json{{"value", r.value}, {"witness", r.witness},
           {"nodes", r.nodes_explored}};
}

void to_json(json& j, const CheckInstance& c) {
  j = json{{"graphs", c.graphs},
           {"witness", c.witness},
           {"expected", c.expected},
           {"actual", c.actual}};
}

void to_json(json& j, const CheckReport& r) {
  j = json{{"check_id", r.check_id},
           {"title", r.title},
           {"tested", r.tested},
           {"not_applicable", r.not_applicable},
           {"skipped", r.skipped},
           {"found", r.found},
           {"passed", r.passed()},
           {"failures", r.failures}};
  if (r.example) j["example"] = *r.example;
}

json product_set_json(const ProductGraph& p, const VertexSet& s) {
  json out = json::array();
  for (Vertex v : s) {
    const auto [g, h] = p.pair(v);
    out.push_back({{"g", g}, {"h", h}, {"index", v}});
  }
  return out;
}

json product_result_json(const ProductGraph& p, const SolveResult& r) {
  return {{"value", r.value},
          {"witness", product_set_json(p, r.witness)},
          {"nodes", r.nodes_explored}};
}

json mp_class_json(const MpClass& c) {
  json j{{"tag", mp_tag_name(c.tag)}, {"predicates", c.predicates}};
  j["orientation"] =
      c.orientation ? json(*c.orientation == Factor::G ? "G" : "H") : json();
  return j;
}

json lex_result_json(const ProductGraph& p, const LexResult& r) {
  return {{"value", r.value},
          {"profile", r.best_profile},
          {"shortcut", lex_shortcut_name(r.shortcut_used)},
          {"witness", product_set_json(p, r.witness)}};
}

}  // namespace monopos
