// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iterator>
#include <vector>

namespace tdl {

// Index of an element of a finite carrier. Carriers are capped at 64 elements
// so that every subset fits in one machine word.
using Element = int;

inline constexpr int kMaxCarrier = 64;

// A subset of {0, ..., 63} stored as a bit-vector. Comparison is numeric on
// the bit pattern, which is the canonical order for families of subsets.
class Subset {
 public:
  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr Element operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint64_t bits) : bits_(bits) {}

  static constexpr Subset singleton(Element i) { return Subset(std::uint64_t{1} << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  template <typename Range>
  static Subset of(const Range& elements) {
    Subset s;
    for (Element e : elements) s = s.with(e);
    return s;
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Element i) const { return (bits_ >> i) & 1U; }
  constexpr Subset with(Element i) const { return Subset(bits_ | (std::uint64_t{1} << i)); }
  constexpr Subset without(Element i) const { return Subset(bits_ & ~(std::uint64_t{1} << i)); }
  constexpr bool subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Subset other) const { return (bits_ & other.bits_) != 0; }
  constexpr Element first() const { return std::countr_zero(bits_); }

  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  constexpr auto operator<=>(const Subset&) const = default;

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<Element> elements() const { return {begin(), end()}; }

 private:
  std::uint64_t bits_ = 0;
};

// Binary relation on {0, ..., size-1}; succ[x] is R(x).
struct Relation {
  int size = 0;
  std::vector<Subset> succ;

  Relation() = default;
  explicit Relation(int n) : size(n), succ(static_cast<std::size_t>(n)) {}

  bool has(Element x, Element y) const { return succ[x].contains(y); }
  void add(Element x, Element y) { succ[x] = succ[x].with(y); }
  int pair_count() const;
  Relation transpose() const;
  // Union of R(x) over x in s.
  Subset image(Subset s) const;
  std::vector<std::pair<Element, Element>> pairs() const;

  bool operator==(const Relation&) const = default;
};

}  // namespace tdl
