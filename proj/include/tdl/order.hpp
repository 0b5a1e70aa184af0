// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tdl/errors.hpp"
#include "tdl/subset.hpp"

namespace tdl {

// Finite partial order on {0, ..., size-1}. Immutable once built.
class Poset {
 public:
  Poset() = default;

  int size() const { return size_; }
  bool leq(Element x, Element y) const { return up_[x].contains(y); }
  Subset up(Element x) const { return up_[x]; }
  Subset down(Element x) const { return down_[x]; }
  Subset all() const { return Subset::full(size_); }

  const std::vector<std::string>& labels() const { return labels_; }
  // Label of x, or its decimal index when no labels were given.
  std::string label(Element x) const;

  // Covering pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<Element, Element>> covers() const;

  bool operator==(const Poset& other) const {
    return size_ == other.size_ && up_ == other.up_;
  }

 private:
  friend Poset build_poset(int, std::span<const std::pair<Element, Element>>,
                           std::vector<std::string>);
  int size_ = 0;
  std::vector<Subset> up_;
  std::vector<Subset> down_;
  std::vector<std::string> labels_;
};

// Reflexive-transitive closure of leq_pairs. Throws CycleError when the
// closure is not antisymmetric and InputError on out-of-range indices.
Poset build_poset(int size, std::span<const std::pair<Element, Element>> leq_pairs,
                  std::vector<std::string> labels = {});

// Subsets of the carrier ordered by inclusion; element i is family[i].
Poset inclusion_order(std::span<const Subset> family, std::vector<std::string> labels = {});

// The induced order on the elements of `s`, renumbered in increasing order.
Poset subposet(const Poset& p, Subset s);

Subset up_closure(const Poset& p, Subset s);
Subset down_closure(const Poset& p, Subset s);
bool is_up_set(const Poset& p, Subset s);
bool is_down_set(const Poset& p, Subset s);

struct SubsetFamily {
  Poset universe;
  std::vector<Subset> members;  // ascending numeric order
};

// All up-closed subsets, including the empty set and the whole carrier.
SubsetFamily up_sets(const Poset& p);

// Bounded distributive lattice given by its order and operation tables.
class Lattice {
 public:
  Lattice() = default;

  int size() const { return order_.size(); }
  const Poset& order() const { return order_; }
  bool leq(Element x, Element y) const { return order_.leq(x, y); }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  Subset all() const { return order_.all(); }

  // Meet of the empty set is top; join of the empty set is bottom.
  Element meet_of(Subset s) const;
  Element join_of(Subset s) const;

  std::string label(Element x) const { return order_.label(x); }

  bool operator==(const Lattice& other) const { return order_ == other.order_; }

 private:
  friend Lattice lattice_from_poset(const Poset&);
  Poset order_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
  Element bottom_ = 0;
  Element top_ = 0;
};

// Throws NoBounds, NotLattice or NotDistributive with a witness in the message.
Lattice lattice_from_poset(const Poset& p);

// The lattice of up-sets of p under intersection and union, elements in the
// order of up_sets(p).members.
Lattice upset_lattice(const Poset& p);

Subset join_irreducibles(const Lattice& l);

// Complemented elements.
Subset complemented_elements(const Lattice& l);

// Relative pseudocomplement table: imp[x * n + y] = max{z : z ∧ x ≤ y}.
std::vector<Element> heyting_implication(const Lattice& l);

// Sublattice on the elements of `s` (which must contain the bounds and be
// closed under meet and join), renumbered in increasing order.
Lattice sublattice(const Lattice& l, Subset s);

// Canonical code of p: the lexicographically least upper-triangle bit string
// over all relabelings. Two posets are isomorphic iff their codes match.
std::vector<bool> canonical_code(const Poset& p);

// Non-isomorphic posets with exactly `points` elements, each in its canonical
// labeling, ordered by canonical code.
std::vector<Poset> posets_up_to_iso(int points);

// All order automorphisms of p as permutation tables.
std::vector<std::vector<Element>> automorphisms(const Poset& p);

// Non-isomorphic distributive lattices with at most max_size elements, as
// up-set lattices of their join-irreducible posets. Ordered by size, then by
// the canonical code of the poset. The one-element lattice is included.
struct LatticeEntry {
  Poset base;       // join-irreducible poset
  Lattice lattice;  // its up-set lattice
};
std::vector<LatticeEntry> distributive_lattices(int max_size);

}  // namespace tdl
