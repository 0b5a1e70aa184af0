// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdl/tense_algebra.hpp"

namespace tdl {

// A finite poset with a binary relation. At finite scale the tense Priestley
// spaces and the tense frames are the same structures: the topology is
// discrete, so every subset is clopen and only the order conditions remain.
struct TdlFrame {
  Poset order;
  Relation R;

  int size() const { return order.size(); }
  bool operator==(const TdlFrame&) const = default;
};
using TpsSpace = TdlFrame;

// The relational operators on subsets of the frame's points.
Subset G_R(const TdlFrame& x, Subset y);  // {x : R(x) ⊆ Y}
Subset H_R(const TdlFrame& x, Subset y);  // {x : R⁻¹(x) ⊆ Y}
Subset F_R(const TdlFrame& x, Subset y);  // {x : R(x) ∩ Y ≠ ∅}
Subset P_R(const TdlFrame& x, Subset y);  // {x : R⁻¹(x) ∩ Y ≠ ∅}

struct PrimeFilterSpace {
  std::vector<Subset> points;  // prime filters of the algebra, ascending
  Poset order;                 // inclusion
};

// Prime filters as principal filters of join-irreducibles. For carriers of
// at most 10 elements the result is cross-checked against every subset.
PrimeFilterSpace prime_filter_space(const TdlAlgebra& a);

bool is_prime_filter(const Lattice& l, Subset s);

// R_A on the prime filters: (S, T) with G⁻¹(S) ⊆ T ⊆ F⁻¹(S). Throws
// InternalError if the relation built from H and P is not its transpose.
Relation tense_relation(const TdlAlgebra& a, const PrimeFilterSpace& x);
Relation tense_relation(const TdlAlgebra& a);

struct DualSpace {
  std::vector<Subset> filters;  // point i is the prime filter filters[i]
  TpsSpace space;
};

// The prime filter space with R_A, validated as a tense space.
DualSpace dual_space(const TdlAlgebra& a);

struct FrameReport {
  std::vector<Violation> violations;  // K1-K5 failures
  std::vector<Violation> starred;     // K1*, K2*, K5 failures
  bool ok() const { return violations.empty(); }
};

// Checks K1-K5 and, independently, K1*, K2*, K5. Throws InternalError if
// the two verdicts disagree.
FrameReport is_tdl_frame(const Poset& p, const Relation& r);

// Convex images (tPS2) and up-set preservation by the four operators (tPS3).
FrameReport is_tps_space(const TpsSpace& x);

struct UpsetAlgebra {
  std::vector<Subset> upsets;  // element i is upsets[i], ascending
  TdlAlgebra algebra;
};

// Carrier: all up-sets; operators G_R, H_R, F_R, P_R. Throws
// PreconditionError if the frame axioms fail.
UpsetAlgebra upset_algebra(const TdlFrame& x);

// Position of an up-set in an UpsetAlgebra, or -1.
Element upset_index(const UpsetAlgebra& u, Subset s);

// A map between carriers, with the algebras it connects.
struct AlgebraMap {
  TdlAlgebra source;
  TdlAlgebra target;
  std::vector<Element> table;
};

struct MapReport {
  std::optional<std::string> failure;
  bool ok() const { return !failure.has_value(); }
};

class NotHomomorphism : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotTpsFunction : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Preservation of meet, join, bounds and the four operators.
MapReport is_tdl_homomorphism(const AlgebraMap& f);
bool is_bijective(const std::vector<Element>& table, int target_size);

// sigma(a) = {T : a ∈ T} into Ψ(Φ(A)). Throws InternalError unless it is an
// isomorphism.
AlgebraMap sigma_map(const TdlAlgebra& a);

// A function between point sets.
using PointMap = std::vector<Element>;

// eps(x) = {U : x ∈ U}, a prime filter of Ψ(X), given as an index into
// dual_space(Ψ(X)). Throws InternalError unless it is an order isomorphism
// that preserves and reflects R.
PointMap epsilon_map(const TpsSpace& x);

// Φ(f)(S) = f⁻¹(S): from the dual of f.target to the dual of f.source.
// Throws NotHomomorphism if f is not one and InternalError if the result
// is not a tPS-function.
PointMap dual_of_hom(const AlgebraMap& f);

// Order preservation plus the tPSf1-tPSf3 conditions.
MapReport is_tps_function(const PointMap& g, const TpsSpace& x1, const TpsSpace& x2);

// Ψ(g)(U) = g⁻¹(U): from Ψ(x2) to Ψ(x1). Throws NotTpsFunction first.
AlgebraMap dual_of_function(const PointMap& g, const TpsSpace& x1, const TpsSpace& x2);

// Ψ(Φ(h)) ∘ sigma_A = sigma_A' ∘ h.
bool algebra_square_commutes(const AlgebraMap& h);
// Φ(Ψ(g)) ∘ eps_X1 = eps_X2 ∘ g.
bool space_square_commutes(const PointMap& g, const TpsSpace& x1, const TpsSpace& x2);

// (X(A), ⊆, R_A), validated as a frame.
TdlFrame canonical_frame(const TdlAlgebra& a);

// h(a) = {T : a ∈ T} into the complex algebra of the canonical frame;
// verified to be an isomorphism.
AlgebraMap h_embedding(const TdlAlgebra& a);

// k(x) = {U : x ∈ U} into the canonical frame of the complex algebra;
// verified to be an isomorphism of frames.
PointMap k_embedding(const TdlFrame& x);

// True when g is an order isomorphism from x1 onto x2 that preserves and
// reflects the relation.
bool is_frame_isomorphism(const PointMap& g, const TdlFrame& x1, const TdlFrame& x2);

// Every frame with at most max_points points, one per isomorphism class:
// posets in census order, then relations in ascending bit order, keeping the
// least relation of each orbit under the poset's automorphisms.
std::vector<TdlFrame> enumerate_frames(int max_points);
std::vector<TdlFrame> enumerate_frames_with(int points);

}  // namespace tdl
