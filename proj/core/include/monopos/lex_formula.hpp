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

#include <cstddef>
#include <string>

#include "monopos/budget.hpp"
#include "monopos/graph.hpp"
#include "monopos/position_sets.hpp"

namespace monopos {

enum class LexShortcut { none, triangle_free, complete_g };
std::string lex_shortcut_name(LexShortcut s);

struct LexResult {
  std::size_t value = 0;
  ComponentProfile best_profile;
  // Flat indices in the lexicographic product of the two factors.
  VertexSet witness;
  LexShortcut shortcut_used = LexShortcut::none;
};

/// mp(G o H) as the maximum of n_M * omega(H) + r_M * mp(H) over the
/// (n_M, r_M) frontier of g. Ties go to the profile with the larger r_M.
///
/// Requires g connected of order at least 2 and h connected; order 1 raises
/// DomainError (use mp_number on h). When g is complete, or triangle-free of
/// order at least 3, the closed form is used and cross-checked against the
/// frontier; a disagreement raises ConsistencyError.
LexResult lex_mp(const Graph& g, const Graph& h, SearchBudget& budget);
LexResult lex_mp(const Graph& g, const Graph& h);

// A maximum clique of h in the layer of each clique-component vertex and a
// maximum mp-set of h in the layer of each singleton. The result is checked
// on the product before it is returned.
VertexSet build_lex_witness(const Graph& g, const ComponentProfile& profile,
                            const Graph& h, SearchBudget& budget);
VertexSet build_lex_witness(const Graph& g, const ComponentProfile& profile,
                            const Graph& h);

}  // namespace monopos
