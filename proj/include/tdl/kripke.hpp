// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>

#include "tdl/duality.hpp"
#include "tdl/formula.hpp"

namespace tdl {

// Frame satisfaction covers the base signature only: variables, top, bot,
// &, | and the four tense operators.
class UnsupportedConnective : public InputError {
 public:
  using InputError::InputError;
};

using Meaning = std::map<std::string, Subset>;

class KripkeModel {
 public:
  // Throws InputError unless every meaning is an up-set of the frame.
  KripkeModel(TdlFrame frame, Meaning meaning);

  const TdlFrame& frame() const { return frame_; }
  const Meaning& meaning() const { return meaning_; }

 private:
  TdlFrame frame_;
  Meaning meaning_;
};

// One satisfaction clause lifted to sets: the points where op applied to
// formulas with extensions a (and b) holds. Pointwise, straight from the
// clauses; no use of the relational operators of the complex algebra.
Subset clause_extension(const TdlFrame& x, Op op, Subset a, Subset b = {});

bool satisfies(const KripkeModel& m, Element x, Formula f);

// Extension of f, memoized per model. Throws InternalError if a result is
// not an up-set.
class ExtensionCache {
 public:
  explicit ExtensionCache(const KripkeModel& m) : m_(m) {}
  Subset operator()(Formula f);

 private:
  const KripkeModel& m_;
  std::unordered_map<std::size_t, Subset> memo_;
};

Subset extension(const KripkeModel& m, Formula f);

// m(⋀Γ) ⊆ m(⋁Δ), empty sides read as all points and no points.
bool valid_in_model(const KripkeModel& m, const Sequent& s);

inline constexpr int kMaxFrameVariables = 3;
inline constexpr int kMaxFramePoints = 5;
inline constexpr int kMaxCountermodelPoints = 4;

// First meaning map, in enumeration order, under which the sequent fails.
// Throws SizeLimit above kMaxFrameVariables variables or kMaxFramePoints.
std::optional<Meaning> failing_meaning(const TdlFrame& x, const Sequent& s);
bool valid_in_frame(const TdlFrame& x, const Sequent& s);

struct FrameCountermodel {
  TdlFrame frame;
  Meaning meaning;
};

// Scans enumerate_frames(max_points) in order. Throws SizeLimit above
// kMaxCountermodelPoints.
std::optional<FrameCountermodel> frame_countermodel(const Sequent& s, int max_points);

}  // namespace tdl
