// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tdl/formula.hpp"
#include "tdl/tense_algebra.hpp"

namespace tdl {

using Assignment = std::map<std::string, Element>;

struct Valuation {
  TdlAlgebra algebra;
  Assignment assignment;
};

// The algebra lacks the table a connective needs (implication for -> and
// negation, an involution for the De Morgan ~).
class MissingConnective : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// Homomorphic extension of the assignment. Negation is x -> 0. Throws
// InputError for an unassigned variable.
Element evaluate(const TdlAlgebra& a, const Assignment& v, Formula f);
Element evaluate(const Valuation& v, Formula f);

// Term functions of formulas over a fixed variable list: entry k of a table
// is the value under the k-th assignment, the last variable varying fastest.
class TermEvaluator {
 public:
  TermEvaluator(const TdlAlgebra& a, std::vector<std::string> vars);

  int assignment_count() const { return count_; }
  Assignment assignment(int k) const;
  const std::vector<Element>& table(Formula f);

 private:
  const TdlAlgebra& a_;
  std::vector<std::string> vars_;
  int count_ = 1;
  std::unordered_map<std::size_t, std::vector<Element>> memo_;
};

inline constexpr int kDefaultMaxVariables = 4;

// First assignment, in TermEvaluator order, with meet(left) not below
// join(right); empty sides read as 1 and 0. Throws SizeLimit above
// max_vars variables.
std::optional<Assignment> failing_assignment(const TdlAlgebra& a, const Sequent& s,
                                             int max_vars = kDefaultMaxVariables);
bool holds(const TdlAlgebra& a, const Sequent& s, int max_vars = kDefaultMaxVariables);

bool consequence(const Sequent& s, const std::vector<TdlAlgebra>& algebras);

// The algebras a calculus is interpreted in, with at most max_size elements,
// in census order: every algebra for lt, Boolean lattices with implication
// for ltc, every algebra with implication for lti, and every algebra paired
// with each admissible De Morgan involution for ltdm. The callback returns
// false to stop. Throws SizeLimit above 8.
void for_each_in_class(Calculus c, int max_size, const std::function<bool(const TdlAlgebra&)>& f);
std::vector<TdlAlgebra> algebra_class(Calculus c, int max_size);

// First failing algebra and assignment over the class, in canonical order.
std::optional<Valuation> countermodel(const Sequent& s, int max_size, Calculus c,
                                      int max_vars = kDefaultMaxVariables);

}  // namespace tdl
