// Copyright 2026 The domipoly Authors
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

#ifndef DOMIPOLY_VERTEX_SET_HPP_
#define DOMIPOLY_VERTEX_SET_HPP_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace domipoly {

// Maximum graph order. A vertex set must fit in one machine word, and graph6
// encodes orders up to 62 in a single byte.
inline constexpr int kMaxOrder = 62;

using Vertex = int;

// A subset of {0, ..., 63} stored as a bitmask. Bit v set means v is a member.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  constexpr VertexSet(std::initializer_list<Vertex> vs) {
    for (Vertex v : vs) bits_ |= std::uint64_t{1} << v;
  }

  // {0, ..., n-1}.
  static constexpr VertexSet Range(int n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0}
                             : (std::uint64_t{1} << n) - 1);
  }
  static constexpr VertexSet Singleton(Vertex v) {
    return VertexSet(std::uint64_t{1} << v);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1; }
  constexpr bool is_subset_of(VertexSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  // Smallest member; undefined on the empty set.
  constexpr Vertex first() const { return std::countr_zero(bits_); }

  constexpr VertexSet with(Vertex v) const {
    return VertexSet(bits_ | (std::uint64_t{1} << v));
  }
  constexpr VertexSet without(Vertex v) const {
    return VertexSet(bits_ & ~(std::uint64_t{1} << v));
  }

  constexpr VertexSet operator|(VertexSet o) const {
    return VertexSet(bits_ | o.bits_);
  }
  constexpr VertexSet operator&(VertexSet o) const {
    return VertexSet(bits_ & o.bits_);
  }
  // Set difference.
  constexpr VertexSet operator-(VertexSet o) const {
    return VertexSet(bits_ & ~o.bits_);
  }
  constexpr VertexSet& operator|=(VertexSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr VertexSet& operator&=(VertexSet o) {
    bits_ &= o.bits_;
    return *this;
  }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) {
    return a.bits_ <=> b.bits_;
  }

  // Iterates members in increasing order.
  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = void;
    using reference = Vertex;

    constexpr Iterator() = default;
    constexpr explicit Iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Vertex operator*() const { return std::countr_zero(rest_); }
    constexpr Iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(Iterator, Iterator) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Iterator begin() const { return Iterator(bits_); }
  constexpr Iterator end() const { return Iterator(0); }

  std::vector<Vertex> to_vector() const { return {begin(), end()}; }

  // "{1,3,7}" using 1-based labels, the convention of the text formats.
  std::string to_string_one_based() const {
    std::string out = "{";
    bool first = true;
    for (Vertex v : *this) {
      if (!first) out += ',';
      out += std::to_string(v + 1);
      first = false;
    }
    out += '}';
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// Next bitmask with the same popcount (Gosper's hack). Returns 0 after the
// last k-subset of a 64-bit word has been produced.
constexpr std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  if (r == 0) return 0;
  return (((r ^ x) >> 2) / c) | r;
}

// Calls f(VertexSet) for every k-subset of `ground`, in increasing order of
// the bitmask value obtained by packing `ground`'s members. When `ground` is
// {0..n-1} this is plain increasing bitmask order.
template <class F>
void for_each_subset_of_size(VertexSet ground, int k, F&& f) {
  const int m = ground.size();
  if (k < 0 || k > m) return;
  std::vector<Vertex> members = ground.to_vector();
  const bool contiguous = ground == VertexSet::Range(m);
  if (k == 0) {
    f(VertexSet());
    return;
  }
  const std::uint64_t last = (m == 64 ? 0 : (std::uint64_t{1} << m));
  for (std::uint64_t x = (std::uint64_t{1} << k) - 1;;) {
    if (contiguous) {
      f(VertexSet(x));
    } else {
      std::uint64_t bits = 0;
      for (std::uint64_t r = x; r; r &= r - 1) {
        bits |= std::uint64_t{1} << members[std::countr_zero(r)];
      }
      f(VertexSet(bits));
    }
    const std::uint64_t next = next_same_popcount(x);
    if (next == 0 || (last != 0 && next >= last)) break;
    x = next;
  }
}

}  // namespace domipoly

#endif  // DOMIPOLY_VERTEX_SET_HPP_
