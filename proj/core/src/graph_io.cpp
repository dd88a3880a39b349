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

#include "monopos/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <string>

#include "monopos/errors.hpp"

namespace monopos {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr int kBias = 63;

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Value of the 6-bit digit at `pos`, or ParseError.
unsigned sextet(std::string_view text, std::size_t pos) {
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63)
    throw ParseError("graph6 byte " + std::to_string(c) + " outside 63..126",
                     pos);
  return static_cast<unsigned>(c - kBias);
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.starts_with(kGraph6Header)) pos = kGraph6Header.size();
  // Trailing line terminators are tolerated, nothing else.
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;
  if (pos >= end) throw ParseError("empty graph6 string", pos);

  std::size_t n = 0;
  if (text[pos] != 126) {
    n = sextet(text, pos);
    pos += 1;
  } else if (pos + 1 < end && text[pos + 1] == 126) {
    if (pos + 8 > end) throw ParseError("truncated graph6 order", end);
    for (std::size_t i = pos + 2; i < pos + 8; ++i) n = (n << 6) | sextet(text, i);
    pos += 8;
  } else {
    if (pos + 4 > end) throw ParseError("truncated graph6 order", end);
    for (std::size_t i = pos + 1; i < pos + 4; ++i) n = (n << 6) | sextet(text, i);
    pos += 4;
  }
  if (n == 0) throw ValidationError("graph6 string encodes the empty graph");
  if (n > kMaxVertices)
    throw DomainError("graph of order " + std::to_string(n) +
                      " exceeds the capacity of " +
                      std::to_string(kMaxVertices) + " vertices");

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (end - pos != bytes)
    throw ParseError("graph6 body has " + std::to_string(end - pos) +
                         " bytes, expected " + std::to_string(bytes),
                     end - pos < bytes ? end : pos + bytes);

  GraphBuilder builder(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned digit = sextet(text, pos + k / 6);
      if ((digit >> (5 - k % 6)) & 1U) builder.add_edge(i, j);
    }
  }
  if (bytes > 0) {
    const unsigned last = sextet(text, pos + bytes - 1);
    const std::size_t pad = bytes * 6 - bits;
    if ((last & ((1U << pad) - 1)) != 0)
      throw ParseError("nonzero graph6 padding bits", pos + bytes - 1);
  }
  return std::move(builder).build();
}

std::string serialize_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63U) + kBias));
  }
  unsigned digit = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      digit = (digit << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(digit + kBias));
        digit = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0)
    out.push_back(static_cast<char>((digit << (6 - filled)) + kBias));
  return out;
}

class Tokenizer {
 public:
  explicit Tokenizer(std::string_view text) : text_(text) {}

  // Next integer token on the current line; false at end of line/input.
  bool next_on_line(std::size_t& value, std::size_t& at) {
    while (pos_ < text_.size() && text_[pos_] != '\n' && is_space(text_[pos_]))
      ++pos_;
    if (pos_ >= text_.size() || text_[pos_] == '\n') return false;
    at = pos_;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_,
                                     text_.data() + text_.size(), value);
    const std::size_t stop = static_cast<std::size_t>(ptr - text_.data());
    if (ec != std::errc{} || (stop < text_.size() && !is_space(text_[stop])))
      throw ParseError("expected a non-negative integer", pos_);
    pos_ = stop;
    return true;
  }

  // Skips to the start of the next non-blank line; false at end of input.
  bool next_line() {
    while (pos_ < text_.size()) {
      std::size_t probe = pos_;
      while (probe < text_.size() && text_[probe] != '\n' &&
             is_space(text_[probe]))
        ++probe;
      if (probe < text_.size() && text_[probe] != '\n') {
        pos_ = probe;
        return true;
      }
      pos_ = probe + 1;
    }
    return false;
  }

  void skip_newline() {
    if (pos_ < text_.size() && text_[pos_] == '\n') ++pos_;
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok(text);
  std::size_t n = 0;
  std::size_t at = 0;
  if (!tok.next_line() || !tok.next_on_line(n, at))
    throw ParseError("missing vertex count", tok.pos());
  std::size_t extra = 0;
  if (tok.next_on_line(extra, at))
    throw ParseError("vertex count line has extra tokens", at);
  if (n == 0) throw ValidationError("edge list declares zero vertices");
  if (n > kMaxVertices)
    throw DomainError("graph of order " + std::to_string(n) +
                      " exceeds the capacity of " +
                      std::to_string(kMaxVertices) + " vertices");
  GraphBuilder builder(n);
  tok.skip_newline();
  while (tok.next_line()) {
    std::size_t u = 0;
    std::size_t v = 0;
    std::size_t line_at = tok.pos();
    tok.next_on_line(u, at);
    if (!tok.next_on_line(v, at))
      throw ParseError("edge line needs two endpoints", line_at);
    if (tok.next_on_line(extra, at))
      throw ParseError("edge line has extra tokens", at);
    if (!builder.add_edge(u, v))
      throw ValidationError("duplicate edge " + std::to_string(u) + "-" +
                            std::to_string(v));
    tok.skip_newline();
  }
  return std::move(builder).build();
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace

Graph parse_graph(std::string_view text, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return parse_graph6(text);
    case GraphFormat::edge_list:
      return parse_edge_list(text);
  }
  throw DomainError("unknown graph format");
}

std::string serialize_graph(const Graph& g, GraphFormat format) {
  switch (format) {
    case GraphFormat::graph6:
      return serialize_graph6(g);
    case GraphFormat::edge_list:
      return serialize_edge_list(g);
  }
  throw DomainError("unknown graph format");
}

GraphFormat detect_format(std::string_view text) {
  for (char c : text) {
    if (is_space(c)) continue;
    return std::isdigit(static_cast<unsigned char>(c)) != 0
               ? GraphFormat::edge_list
               : GraphFormat::graph6;
  }
  return GraphFormat::graph6;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  std::size_t offset = 0;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    std::string_view view(line);
    while (!view.empty() && is_space(view.back())) view.remove_suffix(1);
    if (view.empty()) continue;
    try {
      out.push_back(parse_graph6(view));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " +
                           e.what(),
                       line_start + e.offset());
    }
  }
  return out;
}

}  // namespace monopos
