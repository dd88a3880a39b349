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

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "monopos/errors.hpp"

namespace monopos {

using Vertex = std::size_t;

// Host graphs are capped at 128 vertices; products of desk-scale factors fit.
inline constexpr std::size_t kMaxVertices = 128;

/// Fixed-capacity bit set of vertices of one host graph.
///
/// All members are strictly below host_size(). Binary set operations require
/// both operands to come from the same host.
class VertexSet {
  static constexpr std::size_t kWords = kMaxVertices / 64;

 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    iterator() = default;
    Vertex operator*() const { return current_; }
    iterator& operator++() {
      advance(current_ + 1);
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.current_ == b.current_;
    }

   private:
    friend class VertexSet;
    iterator(const VertexSet* set, Vertex from) : set_(set) { advance(from); }
    void advance(Vertex from) {
      current_ = set_ == nullptr ? kMaxVertices : set_->next(from);
    }

    const VertexSet* set_ = nullptr;
    Vertex current_ = kMaxVertices;
  };

  VertexSet() = default;
  explicit VertexSet(std::size_t host_n) : host_n_(host_n) {
    if (host_n > kMaxVertices)
      throw DomainError("vertex set capacity " + std::to_string(host_n) +
                        " exceeds the limit of " +
                        std::to_string(kMaxVertices));
  }
  VertexSet(std::size_t host_n, std::initializer_list<Vertex> members)
      : VertexSet(host_n) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t host_n, std::span<const Vertex> members)
      : VertexSet(host_n) {
    for (Vertex v : members) insert(v);
  }

  static VertexSet full(std::size_t host_n) {
    VertexSet s(host_n);
    for (std::size_t w = 0; w < kWords; ++w) {
      std::size_t lo = w * 64;
      if (host_n <= lo) break;
      std::size_t bits = host_n - lo;
      s.words_[w] = bits >= 64 ? ~std::uint64_t{0}
                               : (std::uint64_t{1} << bits) - 1;
    }
    return s;
  }

  std::size_t host_size() const noexcept { return host_n_; }

  bool contains(Vertex v) const noexcept {
    return v < host_n_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
  }
  void insert(Vertex v) {
    check(v);
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
  }
  void erase(Vertex v) {
    check(v);
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
  }
  VertexSet with(Vertex v) const {
    VertexSet copy = *this;
    copy.insert(v);
    return copy;
  }
  VertexSet without(Vertex v) const {
    VertexSet copy = *this;
    copy.erase(v);
    return copy;
  }

  std::size_t size() const noexcept {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // Smallest member, or host_size() when empty.
  Vertex first() const noexcept {
    Vertex v = next(0);
    return v == kMaxVertices ? host_n_ : v;
  }

  bool intersects(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }
  bool is_subset_of(const VertexSet& other) const noexcept {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  VertexSet complement() const { return full(host_n_) - *this; }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) noexcept {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) noexcept {
    return a &= b;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) noexcept {
    return a |= b;
  }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) noexcept {
    return a -= b;
  }

  friend bool operator==(const VertexSet& a, const VertexSet& b) noexcept {
    return a.host_n_ == b.host_n_ && a.words_ == b.words_;
  }

  // Lexicographic order on the ascending member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b) noexcept {
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib)
      if (*ia != *ib) return *ia < *ib;
    return ia == a.end() && ib != b.end();
  }

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

 private:
  void check(Vertex v) const {
    if (v >= host_n_)
      throw DomainError("vertex " + std::to_string(v) +
                        " out of range for host of order " +
                        std::to_string(host_n_));
  }

  // Smallest member >= from, or kMaxVertices.
  Vertex next(Vertex from) const noexcept {
    for (std::size_t w = from >> 6; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      if (w == (from >> 6)) bits &= ~std::uint64_t{0} << (from & 63);
      if (bits != 0)
        return w * 64 + static_cast<Vertex>(std::countr_zero(bits));
    }
    return kMaxVertices;
  }

  std::array<std::uint64_t, kWords> words_{};
  std::size_t host_n_ = 0;
};

}  // namespace monopos
