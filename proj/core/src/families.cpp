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

#include <charconv>
#include <string>

#include "monopos/errors.hpp"

namespace monopos {
namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  std::size_t arity;
};

constexpr FamilyInfo kFamilies[] = {
    {Family::path, "path", 1},
    {Family::cycle, "cycle", 1},
    {Family::complete, "complete", 1},
    {Family::star, "star", 1},
    {Family::complete_bipartite, "complete_bipartite", 2},
    {Family::wheel, "wheel", 1},
    {Family::gear, "gear", 1},
};

const FamilyInfo& info(Family family) {
  for (const auto& f : kFamilies)
    if (f.family == family) return f;
  throw DomainError("unknown graph family");
}

void require_at_least(std::string_view family, std::size_t value,
                      std::size_t minimum) {
  if (value < minimum)
    throw DomainError(std::string(family) + " needs parameter >= " +
                      std::to_string(minimum) + ", got " +
                      std::to_string(value));
}

std::string label(std::string_view family, std::size_t p) {
  return std::string(family) + ":" + std::to_string(p);
}

}  // namespace

FamilySpec parse_family(std::string_view descriptor) {
  const auto colon = descriptor.find(':');
  if (colon == std::string_view::npos)
    throw DomainError("family descriptor '" + std::string(descriptor) +
                      "' lacks ':<params>'");
  const std::string_view name = descriptor.substr(0, colon);
  const FamilyInfo* found = nullptr;
  for (const auto& f : kFamilies)
    if (f.name == name) found = &f;
  if (found == nullptr)
    throw DomainError("unknown graph family '" + std::string(name) + "'");

  FamilySpec spec{found->family, {}};
  std::string_view rest = descriptor.substr(colon + 1);
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view token = rest.substr(0, comma);
    std::size_t value = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} ||
        ptr != token.data() + token.size())
      throw DomainError("bad parameter '" + std::string(token) +
                        "' in family descriptor");
    spec.params.push_back(value);
    if (comma == std::string_view::npos) break;
    rest = rest.substr(comma + 1);
  }
  if (spec.params.size() != found->arity)
    throw DomainError(std::string(name) + " takes " +
                      std::to_string(found->arity) + " parameter(s)");
  return spec;
}

std::string family_name(Family family) { return std::string(info(family).name); }

Graph generate_family(const FamilySpec& spec) {
  const auto& f = info(spec.family);
  if (spec.params.size() != f.arity)
    throw DomainError(std::string(f.name) + " takes " +
                      std::to_string(f.arity) + " parameter(s)");
  switch (spec.family) {
    case Family::path:
      return path_graph(spec.params[0]);
    case Family::cycle:
      return cycle_graph(spec.params[0]);
    case Family::complete:
      return complete_graph(spec.params[0]);
    case Family::star:
      return star_graph(spec.params[0]);
    case Family::complete_bipartite:
      return complete_bipartite_graph(spec.params[0], spec.params[1]);
    case Family::wheel:
      return wheel_graph(spec.params[0]);
    case Family::gear:
      return gear_graph(spec.params[0]);
  }
  throw DomainError("unknown graph family");
}

Graph path_graph(std::size_t n) {
  require_at_least("path", n, 1);
  GraphBuilder b(n);
  for (Vertex v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
  return std::move(b).build(label("path", n));
}

Graph cycle_graph(std::size_t n) {
  require_at_least("cycle", n, 3);
  GraphBuilder b(n);
  for (Vertex v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
  return std::move(b).build(label("cycle", n));
}

Graph complete_graph(std::size_t n) {
  require_at_least("complete", n, 1);
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return std::move(b).build(label("complete", n));
}

Graph star_graph(std::size_t leaves) {
  require_at_least("star", leaves, 1);
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build(label("star", leaves));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  require_at_least("complete_bipartite", a, 1);
  require_at_least("complete_bipartite", b, 1);
  GraphBuilder builder(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) builder.add_edge(u, v);
  return std::move(builder).build("complete_bipartite:" + std::to_string(a) +
                                  "," + std::to_string(b));
}

Graph wheel_graph(std::size_t rim) {
  require_at_least("wheel", rim, 3);
  GraphBuilder b(rim + 1);
  for (Vertex i = 1; i <= rim; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, i % rim + 1);
  }
  return std::move(b).build(label("wheel", rim));
}

Graph gear_graph(std::size_t rim) {
  require_at_least("gear", rim, 3);
  GraphBuilder b(2 * rim + 1);
  for (Vertex i = 1; i <= rim; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, rim + i);
    b.add_edge(rim + i, i % rim + 1);
  }
  return std::move(b).build(label("gear", rim));
}

}  // namespace monopos
