// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "tdl/errors.hpp"

namespace tdl {

// Which sequent system a formula or proof belongs to. The language differs:
// plain lt has no implication or negation, ltc and lti read "~" as negation,
// ltdm reads it as the De Morgan involution and rewrites F, P through it.
enum class Calculus { lt, ltc, lti, ltdm };

std::string_view calculus_name(Calculus c);
// Accepts "lt", "ltc", "lti", "ltdm". Throws InputError otherwise.
Calculus parse_calculus(std::string_view name);

enum class Op { var, top, bot, conj, disj, imp, neg, tilde, G, H, F, P };

// Formulas are hash-consed: structurally equal formulas share one node, so
// equality is a pointer comparison and id() is a stable memo key within a
// process. Nodes live for the lifetime of the process.
class Formula {
 public:
  struct Node;

  Formula() = default;

  static Formula var(std::string_view name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula imp(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula tilde(Formula a);
  static Formula unary(Op op, Formula a);
  static Formula binary(Op op, Formula a, Formula b);

  Op op() const;
  const std::string& name() const;  // variables only
  Formula left() const;             // operand of a unary node
  Formula right() const;
  std::size_t id() const;
  int depth() const;
  bool valid() const { return node_ != nullptr; }

  bool operator==(const Formula& o) const { return node_ == o.node_; }
  // Structural order: operator, then variable name, then children.
  std::strong_ordering operator<=>(const Formula& o) const;

 private:
  explicit Formula(const Node* n) : node_(n) {}
  const Node* node_ = nullptr;
};

bool is_unary(Op op);
bool is_binary(Op op);

// F and P as the calculus spells them: ~G~ and ~H~ under ltdm.
Formula make_F(Calculus c, Formula a);
Formula make_P(Calculus c, Formula a);
// Inverse of make_F / make_P; an invalid Formula when f has another shape.
Formula match_F(Calculus c, Formula f);
Formula match_P(Calculus c, Formula f);
// G, H never change spelling; these just unwrap.
Formula match_G(Formula f);
Formula match_H(Formula f);

// Variable names occurring in f, sorted.
std::set<std::string> variables(Formula f);

// Throws SyntaxError if f uses a connective outside the calculus.
void check_language(Formula f, Calculus c);

using FormulaSet = std::set<Formula>;

struct Sequent {
  FormulaSet left;
  FormulaSet right;

  auto operator<=>(const Sequent&) const = default;
};

std::set<std::string> variables(const Sequent& s);

class SyntaxError : public InputError {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : InputError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Formula parse_formula(std::string_view text, Calculus c = Calculus::lt);
Sequent parse_sequent(std::string_view text, Calculus c = Calculus::lt);

// Minimal parentheses; parse(render(f)) == f under the same calculus.
std::string render(Formula f);
std::string render(const Sequent& s);

}  // namespace tdl
