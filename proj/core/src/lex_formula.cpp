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

#include "monopos/lex_formula.hpp"

#include <algorithm>
#include <optional>
#include <string>

#include "monopos/errors.hpp"
#include "monopos/invariants.hpp"
#include "monopos/products.hpp"

namespace monopos {

std::string lex_shortcut_name(LexShortcut s) {
  switch (s) {
    case LexShortcut::none:
      return "none";
    case LexShortcut::triangle_free:
      return "triangle_free";
    case LexShortcut::complete_g:
      return "complete_g";
  }
  return "unknown";
}

VertexSet build_lex_witness(const Graph& g, const ComponentProfile& profile,
                            const Graph& h, SearchBudget& budget) {
  const VertexSet m = profile.members();
  if (m.empty() || find_bad_path(g, m, budget))
    throw PreconditionError("profile does not come from an mp-set of g");
  const auto p = lexicographic_product(g, h);
  const VertexSet clique = maximum_clique(h);
  const VertexSet mp_h = mp_number(h, budget).witness;

  VertexSet s(p.graph().order());
  for (const auto& component : profile.clique_components)
    for (Vertex u : component)
      for (Vertex v : clique) s.insert(p.index(u, v));
  for (Vertex u : profile.singletons)
    for (Vertex v : mp_h) s.insert(p.index(u, v));

  if (s.size() != profile.n_m * clique.size() + profile.r_m * mp_h.size())
    throw ConsistencyError("lex witness has the wrong size");
  if (find_bad_path(p.graph(), s, budget))
    throw ConsistencyError("lex witness is not in monophonic position");
  return s;
}

VertexSet build_lex_witness(const Graph& g, const ComponentProfile& profile,
                            const Graph& h) {
  SearchBudget budget;
  return build_lex_witness(g, profile, h, budget);
}

LexResult lex_mp(const Graph& g, const Graph& h, SearchBudget& budget) {
  if (g.order() == 1)
    throw DomainError(
        "lex_mp needs a first factor of order at least 2; for K_1 o H the "
        "answer is mp(H)");
  if (!is_connected(g) || !is_connected(h))
    throw PreconditionError("lex_mp requires connected factors");

  const std::size_t omega_h = maximum_clique(h).size();
  const std::size_t mp_h = mp_number(h, budget).value;

  LexResult result;
  bool have = false;
  for (auto& profile : enumerate_mp_profiles(g, budget)) {
    const std::size_t value = profile.n_m * omega_h + profile.r_m * mp_h;
    if (!have || value > result.value ||
        (value == result.value && profile.r_m > result.best_profile.r_m)) {
      result.value = value;
      result.best_profile = std::move(profile);
      have = true;
    }
  }

  std::optional<std::size_t> closed;
  if (is_complete(g)) {
    result.shortcut_used = LexShortcut::complete_g;
    closed = std::max(g.order() * omega_h, mp_h);
  } else if (g.order() >= 3 && maximum_clique(g).size() <= 2) {
    result.shortcut_used = LexShortcut::triangle_free;
    closed = mp_number(g, budget).value * mp_h;
  }
  if (closed && *closed != result.value)
    throw ConsistencyError("closed form " + std::to_string(*closed) +
                           " disagrees with the profile formula " +
                           std::to_string(result.value));

  result.witness = build_lex_witness(g, result.best_profile, h, budget);
  return result;
}

LexResult lex_mp(const Graph& g, const Graph& h) {
  SearchBudget budget;
  return lex_mp(g, h, budget);
}

}  // namespace monopos
