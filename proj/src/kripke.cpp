// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/kripke.hpp"

namespace tdl {

namespace {

void check_signature(Formula f) {
  switch (f.op()) {
    case Op::imp:
    case Op::neg:
    case Op::tilde:
      throw UnsupportedConnective("frame satisfaction is defined without '->' and '~'");
    default: break;
  }
  if (f.left().valid()) check_signature(f.left());
  if (f.right().valid()) check_signature(f.right());
}

}  // namespace

KripkeModel::KripkeModel(TdlFrame frame, Meaning meaning) : frame_(std::move(frame)), meaning_(std::move(meaning)) {
  for (const auto& [name, s] : meaning_) {
    if (!s.subset_of(frame_.order.all())) throw InputError("meaning of '" + name + "' names a point outside the frame");
    if (!is_up_set(frame_.order, s)) throw InputError("meaning of '" + name + "' is not an up-set");
  }
}

Subset clause_extension(const TdlFrame& x, Op op, Subset a, Subset b) {
  const int n = x.size();
  Subset out;
  for (Element p = 0; p < n; ++p) {
    bool sat = false;
    switch (op) {
      case Op::top: sat = true; break;
      case Op::bot: sat = false; break;
      case Op::conj: sat = a.contains(p) && b.contains(p); break;
      case Op::disj: sat = a.contains(p) || b.contains(p); break;
      case Op::G:
      case Op::F: {
        // every / some successor of p satisfies the operand
        const bool universal = op == Op::G;
        sat = universal;
        for (Element q = 0; q < n; ++q)
          if (x.R.has(p, q) && a.contains(q) != universal) sat = !universal;
        break;
      }
      case Op::H:
      case Op::P: {
        // every / some predecessor of p satisfies the operand
        const bool universal = op == Op::H;
        sat = universal;
        for (Element q = 0; q < n; ++q)
          if (x.R.has(q, p) && a.contains(q) != universal) sat = !universal;
        break;
      }
      default: throw UnsupportedConnective("no frame clause for this connective");
    }
    if (sat) out = out.with(p);
  }
  return out;
}

Subset ExtensionCache::operator()(Formula f) {
  if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
  Subset r;
  switch (f.op()) {
    case Op::var: {
      auto it = m_.meaning().find(f.name());
      if (it == m_.meaning().end()) throw InputError("variable '" + f.name() + "' has no meaning");
      r = it->second;
      break;
    }
    case Op::top:
    case Op::bot: r = clause_extension(m_.frame(), f.op(), {}); break;
    case Op::conj:
    case Op::disj: r = clause_extension(m_.frame(), f.op(), (*this)(f.left()), (*this)(f.right())); break;
    case Op::G:
    case Op::H:
    case Op::F:
    case Op::P: r = clause_extension(m_.frame(), f.op(), (*this)(f.left())); break;
    default: check_signature(f);
  }
  if (!is_up_set(m_.frame().order, r)) throw InternalError("extension of " + render(f) + " is not an up-set");
  memo_.emplace(f.id(), r);
  return r;
}

Subset extension(const KripkeModel& m, Formula f) {
  check_signature(f);
  return ExtensionCache(m)(f);
}

bool satisfies(const KripkeModel& m, Element x, Formula f) {
  if (x < 0 || x >= m.frame().size()) throw InputError("no such point");
  return extension(m, f).contains(x);
}

namespace {

bool valid_with(ExtensionCache& ext, const TdlFrame& x, const Sequent& s) {
  Subset lhs = x.order.all(), rhs;
  for (Formula f : s.left) lhs &= ext(f);
  for (Formula f : s.right) rhs |= ext(f);
  return lhs.subset_of(rhs);
}

}  // namespace

bool valid_in_model(const KripkeModel& m, const Sequent& s) {
  for (const FormulaSet* side : {&s.left, &s.right})
    for (Formula f : *side) check_signature(f);
  ExtensionCache ext(m);
  return valid_with(ext, m.frame(), s);
}

std::optional<Meaning> failing_meaning(const TdlFrame& x, const Sequent& s) {
  for (const FormulaSet* side : {&s.left, &s.right})
    for (Formula f : *side) check_signature(f);
  const std::set<std::string> vars = variables(s);
  if (static_cast<int>(vars.size()) > kMaxFrameVariables)
    throw SizeLimit("frame validity is capped at " + std::to_string(kMaxFrameVariables) + " variables");
  if (x.size() > kMaxFramePoints)
    throw SizeLimit("frame validity is capped at " + std::to_string(kMaxFramePoints) + " points");
  const std::vector<Subset> ups = up_sets(x.order).members;
  const std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::size_t> pick(names.size(), 0);
  while (true) {
    Meaning m;
    for (std::size_t i = 0; i < names.size(); ++i) m[names[i]] = ups[pick[i]];
    const KripkeModel model(x, m);
    ExtensionCache ext(model);
    if (!valid_with(ext, x, s)) return m;
    // Odometer with the last variable fastest.
    std::size_t i = names.size();
    while (i > 0 && ++pick[i - 1] == ups.size()) pick[--i] = 0;
    if (i == 0) return std::nullopt;
  }
}

bool valid_in_frame(const TdlFrame& x, const Sequent& s) { return !failing_meaning(x, s); }

std::optional<FrameCountermodel> frame_countermodel(const Sequent& s, int max_points) {
  if (max_points > kMaxCountermodelPoints)
    throw SizeLimit("frame countermodels are searched up to " + std::to_string(kMaxCountermodelPoints) + " points");
  for (const TdlFrame& x : enumerate_frames(max_points))
    if (auto m = failing_meaning(x, s)) return FrameCountermodel{x, *m};
  return std::nullopt;
}

}  // namespace tdl
