// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdl/order.hpp"

namespace tdl {

// Unary operation on a carrier: table[x] is the image of x.
using OperatorTable = std::vector<Element>;

struct Violation {
  std::string axiom;               // "t1" .. "t18", or a named law
  std::vector<Element> witness;    // lexicographically least failing instance
  std::string detail;              // the failing instance written out
};

struct AxiomReport {
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

// A bounded distributive lattice with tense operators G, H, F, P, and
// optionally a De Morgan involution and a Heyting implication table.
class TdlAlgebra {
 public:
  TdlAlgebra() = default;

  // Wraps tables without checking t1-t8. Callers must have verified them.
  static TdlAlgebra unchecked(Lattice lattice, OperatorTable G, OperatorTable H,
                              OperatorTable F, OperatorTable P);

  const Lattice& lattice() const { return lattice_; }
  int size() const { return lattice_.size(); }
  Element bottom() const { return lattice_.bottom(); }
  Element top() const { return lattice_.top(); }
  Element meet(Element x, Element y) const { return lattice_.meet(x, y); }
  Element join(Element x, Element y) const { return lattice_.join(x, y); }
  bool leq(Element x, Element y) const { return lattice_.leq(x, y); }

  Element G(Element x) const { return g_[x]; }
  Element H(Element x) const { return h_[x]; }
  Element F(Element x) const { return f_[x]; }
  Element P(Element x) const { return p_[x]; }
  const OperatorTable& G_table() const { return g_; }
  const OperatorTable& H_table() const { return h_; }
  const OperatorTable& F_table() const { return f_; }
  const OperatorTable& P_table() const { return p_; }

  const std::optional<OperatorTable>& neg() const { return neg_; }
  const std::optional<std::vector<Element>>& imp() const { return imp_; }
  Element imp(Element x, Element y) const { return (*imp_)[x * size() + y]; }

  // Attaches a De Morgan involution; throws DeMorganLawViolation if the
  // involution laws or F = ~G~, P = ~H~ fail.
  TdlAlgebra with_negation(OperatorTable neg) const;
  // Attaches the relative pseudocomplement of the lattice.
  TdlAlgebra with_implication() const;

  std::string label(Element x) const { return lattice_.label(x); }

  bool operator==(const TdlAlgebra& o) const {
    return lattice_ == o.lattice_ && g_ == o.g_ && h_ == o.h_ && f_ == o.f_ && p_ == o.p_ &&
           neg_ == o.neg_;
  }

 private:
  Lattice lattice_;
  OperatorTable g_, h_, f_, p_;
  std::optional<OperatorTable> neg_;
  std::optional<std::vector<Element>> imp_;
};

class AxiomError : public InputError {
 public:
  explicit AxiomError(AxiomReport report);
  const AxiomReport& report() const { return report_; }

 private:
  AxiomReport report_;
};

class DeMorganLawViolation : public InputError {
 public:
  using InputError::InputError;
};

class NoAdjoint : public PreconditionError {
 public:
  explicit NoAdjoint(Element x)
      : PreconditionError("no left adjoint: {y : x <= G y} has no least element at x = " +
                          std::to_string(x)),
        element(x) {}
  Element element;
};

class EmptyGenerator : public PreconditionError {
 public:
  EmptyGenerator() : PreconditionError("generating set is empty") {}
};

// Checks every instance of t1-t8. One violation per axiom half, each with its
// lexicographically least witness.
AxiomReport check_tdl_axioms(const Lattice& l, const OperatorTable& G, const OperatorTable& H,
                             const OperatorTable& F, const OperatorTable& P);

// Throws AxiomError carrying the full report when any axiom fails.
TdlAlgebra build_tdl_algebra(const Lattice& l, OperatorTable G, OperatorTable H,
                             OperatorTable F, OperatorTable P);

enum class AxiomVariant { b, c };

// Variant b: {t4, t8, t16, t17}. Variant c: {t4, t8, t9, t3, t7}.
AxiomReport check_alternative_axioms(const Lattice& l, const OperatorTable& G,
                                     const OperatorTable& H, const OperatorTable& F,
                                     const OperatorTable& P, AxiomVariant variant);
AxiomReport check_alternative_axioms(const TdlAlgebra& a, AxiomVariant variant);

// Consequences t9-t18 of the axioms, checked instance by instance.
AxiomReport check_derived_properties(const TdlAlgebra& a);

Element d_op(const TdlAlgebra& a, Element x);
Element dhat_op(const TdlAlgebra& a, Element x);
Element d_iter(const TdlAlgebra& a, Element x, int n);
Element dhat_iter(const TdlAlgebra& a, Element x, int n);

// Fixed points of d. Throws InternalError if they do not form a bounded
// sublattice or differ from the fixed points of dhat.
Subset d_invariants(const TdlAlgebra& a);

bool is_lattice_filter(const Lattice& l, Subset s);
bool is_lattice_ideal(const Lattice& l, Subset s);
bool is_tense_filter(const TdlAlgebra& a, Subset s);
bool is_tense_ideal(const TdlAlgebra& a, Subset s);

// Least tense filter (ideal) containing x, built by iterating d (dhat) on
// the meet (join) of x. Throws EmptyGenerator on an empty x.
Subset generate_tense_filter(const TdlAlgebra& a, Subset x);
Subset generate_tense_ideal(const TdlAlgebra& a, Subset x);

// In ascending numeric order.
std::vector<Subset> all_tense_filters(const TdlAlgebra& a);
std::vector<Subset> all_tense_ideals(const TdlAlgebra& a);

struct BooleanPart {
  Subset elements;
  TdlAlgebra algebra;            // B(A), renumbered in increasing order
  std::vector<Element> embed;    // index in B(A) -> index in A
};

// Complemented elements and the tense algebra they carry. Throws
// InternalError if the operators do not restrict or F, P are not the
// complement-conjugates of G, H there.
BooleanPart boolean_elements(const TdlAlgebra& a);

struct ClassReport {
  bool boolean = false;
  bool heyting = false;
  bool demorgan = false;
  std::vector<Element> imp;  // Heyting implication, always attached
};

// Throws DeMorganLawViolation when a negation table is present but fails.
ClassReport classify(const TdlAlgebra& a);

// Checks the involution and De Morgan laws and F = ~G~, P = ~H~.
// Returns a description of the first failure, or nullopt.
std::optional<std::string> de_morgan_failure(const Lattice& l, const OperatorTable& neg,
                                             const OperatorTable& G, const OperatorTable& H,
                                             const OperatorTable& F, const OperatorTable& P);

// Order-reversing involutions of the lattice, in lexicographic table order.
std::vector<OperatorTable> de_morgan_involutions(const Lattice& l);

// Px = min{y : x <= Gy}. Throws NoAdjoint at the first x without a minimum.
OperatorTable left_adjoint(const Lattice& l, const OperatorTable& G);

// Maps preserving binary meets and the top, in lexicographic table order.
std::vector<OperatorTable> meet_preserving_maps(const Lattice& l);

// Every tense structure on l. Ordered by the G table, then the H table.
// Throws SizeLimit when |l| exceeds max_size.
std::vector<TdlAlgebra> enumerate_tdl_algebras(const Lattice& l, int max_size = 8);

// All tense algebras on all distributive lattices with at most max_size
// elements, lattices in census order.
std::vector<TdlAlgebra> algebra_census(int max_size);

// Identity operators on l.
TdlAlgebra identity_algebra(const Lattice& l);
// G = H = const 1, F = P = const 0.
TdlAlgebra constant_algebra(const Lattice& l);

}  // namespace tdl
