// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tdl/formula.hpp"

namespace tdl {

struct ProofTree {
  Sequent conclusion;
  std::string rule;  // a name from rule_table(), or "hyp" for an assumed leaf
  std::vector<ProofTree> premises;
};

struct RuleMismatchInfo {
  std::string node;  // path from the root, e.g. "root.1.0"
  std::string rule;
  std::string reason;
};

class RuleMismatch : public PreconditionError {
 public:
  explicit RuleMismatch(RuleMismatchInfo info)
      : PreconditionError("rule " + info.rule + " does not apply at " + info.node + ": " + info.reason),
        info_(std::move(info)) {}
  const RuleMismatchInfo& info() const { return info_; }

 private:
  RuleMismatchInfo info_;
};

struct CheckOptions {
  std::set<Sequent> hypotheses;  // sequents allowed as "hyp" leaves
  bool allow_derived = true;     // accept mG, AdP and the other derived rules
};

// Checks every node against its rule schema in the given calculus. Returns
// the first mismatch in pre-order, or nullopt when the tree is a proof.
std::optional<RuleMismatchInfo> check_proof(const ProofTree& t, Calculus c,
                                            const CheckOptions& opts = {});
// Same, throwing RuleMismatch.
void verify_proof(const ProofTree& t, Calculus c, const CheckOptions& opts = {});

// Does one node match one rule, ignoring its premises' own correctness?
bool rule_applies(std::string_view rule, Calculus c, const Sequent& conclusion,
                  const std::vector<Sequent>& premises);

// Backward search without cut. depth bounds the non-invertible steps on any
// branch. nullopt means Unknown, not a refutation.
std::optional<ProofTree> prove(const Sequent& s, Calculus c, int depth);

// Rewrites every derived-rule node into primitive rules.
ProofTree expand_derived(const ProofTree& t, Calculus c);

// Adds weakenings until the conclusion is target. Throws InputError unless
// the conclusion's sides are subsets of target's.
ProofTree weaken_to(ProofTree t, const Sequent& target);

// ⋀ and ⋁ of a side, left-nested in set order; top and bot when empty.
Formula big_conj(const FormulaSet& s);
Formula big_disj(const FormulaSet& s);

// From a proof of Γ => Δ, a proof of ⋀Γ => ⋁Δ built with &=> and =>| (and
// one weakening by top or bot for an empty side).
ProofTree conjunctive_form(const ProofTree& t);

int proof_size(const ProofTree& t);
std::string render(const ProofTree& t);

}  // namespace tdl
