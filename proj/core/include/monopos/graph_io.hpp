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

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "monopos/graph.hpp"

namespace monopos {

enum class GraphFormat {
  // Standard ASCII graph6: order header, then the upper triangle column by
  // column, six bits per byte offset by 63.
  graph6,
  // First line the order n, then one "u v" pair per line, 0-based.
  edge_list,
};

Graph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const Graph& g, GraphFormat format);

inline Graph from_graph6(std::string_view text) {
  return parse_graph(text, GraphFormat::graph6);
}
inline std::string to_graph6(const Graph& g) {
  return serialize_graph(g, GraphFormat::graph6);
}

// Edge lists start with a decimal digit; graph6 bytes never do.
GraphFormat detect_format(std::string_view text);

// One graph6 graph per non-empty line. Parse errors carry the byte offset
// within the stream.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace monopos
