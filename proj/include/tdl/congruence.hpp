// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdl/duality.hpp"

namespace tdl {

// A partition of the carrier. block[i] is the block of element i; blocks are
// numbered by first occurrence, so equal partitions have equal vectors.
struct Congruence {
  std::vector<int> block;

  static Congruence identity(int n);
  static Congruence total(int n);
  // Renumbers arbitrary block labels into first-occurrence form.
  static Congruence from_labels(const std::vector<int>& labels);

  int size() const { return static_cast<int>(block.size()); }
  int block_count() const;
  bool related(Element a, Element b) const { return block[a] == block[b]; }
  // Every block of *this lies inside a block of o.
  bool refines(const Congruence& o) const;
  Congruence join(const Congruence& o) const;

  auto operator<=>(const Congruence&) const = default;
};

// Lists congruences with finer partitions first: Δ leads, ∇ closes.
void sort_congruences(std::vector<Congruence>& cs);

// The operations a congruence must respect. Binary tables are row-major.
struct Signature {
  int size = 0;
  std::vector<std::vector<Element>> unary;
  std::vector<std::vector<Element>> binary;
};

Signature tense_signature(const TdlAlgebra& a);
// Adds the Heyting implication of the lattice.
Signature tense_heyting_signature(const TdlAlgebra& a);
Signature heyting_signature(const Lattice& l);

bool is_compatible(const Signature& s, const Congruence& c);

// Least congruence identifying a and b.
Congruence principal_congruence(const Signature& s, Element a, Element b);

// Principal congruences closed under join; sorted. Throws SizeLimit above 16
// elements.
std::vector<Congruence> congruences_of(const Signature& s);

// The brute-force oracle for tDL-congruences. Throws SizeLimit above 8.
std::vector<Congruence> congruences_bruteforce(const TdlAlgebra& a);

struct TpsFailure {
  Element x = 0;
  Element y = 0;
  std::string clause;  // "tc1" or "tc2"
};

struct TpsSubsetReport {
  Subset subset;
  bool is_tps = false;
  std::optional<TpsFailure> witness;  // least failing pair, tc1 pairs first
};

// For up-closed or down-closed sets the verdict is also computed from the
// operator identities; disagreement throws InternalError.
TpsSubsetReport is_tps_subset(const TpsSpace& x, Subset y);

struct TpsFamily {
  std::vector<Subset> all;   // ascending
  std::vector<Subset> up;    // the up-closed members
  std::vector<Subset> down;  // the down-closed members
};

// Throws SizeLimit above 20 points.
TpsFamily all_tps_subsets(const TpsSpace& x);

class NotTpsSet : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};
class NotTenseFilter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};
class NotTenseIdeal : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Points of the dual space whose prime filter contains a.
Subset sigma_points(const DualSpace& d, Element a);

// Θ(Y): a ~ b iff sigma(a) ∩ Y = sigma(b) ∩ Y. Throws NotTpsSet, and
// InternalError if the result is not compatible with the operations.
Congruence congruence_from_subset(const TdlAlgebra& a, const DualSpace& d, Subset y);
Congruence congruence_from_subset(const TdlAlgebra& a, Subset y);

struct CongruenceLattice {
  std::vector<Congruence> members;  // sorted, Δ first
  std::vector<Subset> dual;         // members[i] = Θ(dual[i])
  Poset order;                      // refinement
};

// Θ over every tPS-set of the dual space. Throws InternalError if Θ is not
// an order-reversing bijection, SizeLimit above 10 elements.
CongruenceLattice congruence_lattice(const TdlAlgebra& a);

// a ~ b iff a ∧ s = b ∧ s for some s in S (dually a ∨ i = b ∨ i).
Congruence filter_congruence(const TdlAlgebra& a, Subset s);
Congruence ideal_congruence(const TdlAlgebra& a, Subset i);

// sigma(S) = {T : S ⊆ T}; rho(Y) = {a : Y ⊆ sigma(a)}.
Subset sigma_of_filter(const DualSpace& d, Subset s);
Subset rho_of_up_set(const TdlAlgebra& a, const DualSpace& d, Subset y);
// sigma(I) = {T : T ∩ I = ∅}; rho(Z) = complement of the union of Z.
Subset sigma_of_ideal(const DualSpace& d, Subset i);
Subset rho_of_down_set(const TdlAlgebra& a, const DualSpace& d, Subset z);

struct SimplicityReport {
  bool simple = false;
  // A^d differs from {0, 1}, which rules simplicity out.
  bool precheck_fired = false;
  // Every a outside {0, 1} reaches 0 under d and 1 under dhat.
  bool clause_b = false;
  // The only tense filters are {1} and A, the only tense ideals {0} and A.
  bool clause_c = false;
  // A^d = {0, 1}.
  bool clause_d = false;
  std::vector<Subset> tps_sets;
};

// Simple iff the dual space has exactly two tPS-sets, ∅ and X. The
// one-element algebra has a single congruence and is not simple.
SimplicityReport is_simple(const TdlAlgebra& a);

struct SiReport {
  bool si = false;
  std::optional<Subset> monolith_set;      // greatest proper tPS-set Z
  std::optional<Congruence> monolith;      // Θ(Z)
};

// Up to 8 elements the verdict and the monolith are cross-checked against
// the brute-force congruences; disagreement throws InternalError.
SiReport is_subdirectly_irreducible(const TdlAlgebra& a);

// Least nontrivial member of a sorted congruence list, if it exists.
std::optional<Congruence> monolith_of(const std::vector<Congruence>& cs);

struct BooleanClauses {
  bool simple = false;
  bool d_reaches_zero = false;      // every a != 1 has d^p a = 0
  bool filters_and_ideals = false;  // only trivial tense filters and ideals
  bool d_invariants_trivial = false;
  bool si = false;
  bool bounded_below_coatom = false;  // some b != 1 bounds every d-orbit of a != 1
  bool consistent() const;
};

struct HeytingClauses {
  bool si = false;             // with congruences that also respect →
  bool unique_coatom = false;  // A^d \ {1} has a greatest element
  bool fixpoints_si = false;   // A^d is SI as a Heyting algebra
  bool consistent() const { return si == unique_coatom && si == fixpoints_si; }
};

struct DeMorganClauses {
  PointMap g;  // g(S) = {x : ~x ∉ S} on the dual points
  bool preserves_relation = false;
};

struct SubclassReport {
  std::optional<BooleanClauses> boolean;  // Boolean lattices with at least 2 elements
  HeytingClauses heyting;
  std::optional<DeMorganClauses> demorgan;  // when a negation is attached
};

SubclassReport subclass_reports(const TdlAlgebra& a);

}  // namespace tdl
