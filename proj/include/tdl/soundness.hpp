// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tdl/formula.hpp"
#include "tdl/tense_algebra.hpp"

namespace tdl {

// Rule-local soundness: for each rule, each algebra of the calculus's class
// and each instantiation drawn from the pools, valid premises give a valid
// conclusion. Instances are evaluated as term functions over p and q, so
// formulas with equal tables are tried once.
//
// Pools shrink as a rule has more metavariables, to keep the sweep finite
// in practice: alpha and beta range over formulas up to alpha_depth; a
// context (Gamma or Delta) is empty or one formula, up to alpha_depth when
// the rule has at most two metavariables, up to context_depth with three,
// and a variable with four.
struct SoundnessOptions {
  Calculus calc = Calculus::lt;
  int max_size = 5;
  int alpha_depth = 2;
  int context_depth = 1;
  bool include_derived = true;
};

struct SoundnessFailure {
  TdlAlgebra algebra;
  Formula alpha, beta;
  std::vector<Formula> gamma, delta;
};

struct RuleSoundness {
  std::string rule;
  long long instances = 0;        // instance-algebra pairs checked
  long long premises_valid = 0;   // of those, how many had valid premises
  std::optional<SoundnessFailure> failure;  // the first one found
};

struct SoundnessReport {
  int algebras = 0;
  std::vector<RuleSoundness> rules;
  const RuleSoundness* find(std::string_view rule) const;
  bool sound() const;
};

// Formulas over p and q up to the depth, in the language of the calculus.
std::vector<Formula> formula_pool(Calculus c, int depth);

SoundnessReport soundness_sweep(const SoundnessOptions& opts);

}  // namespace tdl
