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
#include <string_view>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

enum class Family {
  path,                // P_n, n >= 1
  cycle,               // C_n, n >= 3
  complete,            // K_n, n >= 1
  star,                // K_{1,n}, n >= 1, center 0
  complete_bipartite,  // K_{a,b}, a, b >= 1
  wheel,               // W_r, r >= 3, hub 0
  gear,                // W_r with each rim edge subdivided, r >= 3
};

struct FamilySpec {
  Family family;
  std::vector<std::size_t> params;
};

// "path:4", "complete_bipartite:2,3", "gear:5". Throws DomainError on an
// unknown family or malformed parameter list.
FamilySpec parse_family(std::string_view descriptor);
std::string family_name(Family family);

// Throws DomainError when a parameter is below the family minimum.
Graph generate_family(const FamilySpec& spec);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph wheel_graph(std::size_t rim);

// Order 2r+1: hub 0, rim vertices 1..r, and vertex r+i subdividing the rim
// edge between i and i%r+1.
Graph gear_graph(std::size_t rim);

}  // namespace monopos
