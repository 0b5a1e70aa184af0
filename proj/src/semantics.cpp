// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/semantics.hpp"

#include <algorithm>

namespace tdl {

namespace {

Element apply_unary(const TdlAlgebra& a, Op op, Element x) {
  switch (op) {
    case Op::G: return a.G(x);
    case Op::H: return a.H(x);
    case Op::F: return a.F(x);
    case Op::P: return a.P(x);
    case Op::neg:
      if (!a.imp()) throw MissingConnective("negation needs the Heyting implication");
      return a.imp(x, a.bottom());
    case Op::tilde:
      if (!a.neg()) throw MissingConnective("'~' needs a De Morgan involution");
      return (*a.neg())[x];
    default: throw InternalError("not a unary operator");
  }
}

Element apply_binary(const TdlAlgebra& a, Op op, Element x, Element y) {
  switch (op) {
    case Op::conj: return a.meet(x, y);
    case Op::disj: return a.join(x, y);
    case Op::imp:
      if (!a.imp()) throw MissingConnective("'->' needs the Heyting implication");
      return a.imp(x, y);
    default: throw InternalError("not a binary operator");
  }
}

}  // namespace

Element evaluate(const TdlAlgebra& a, const Assignment& v, Formula f) {
  switch (f.op()) {
    case Op::var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw InputError("variable '" + f.name() + "' has no value");
      if (it->second < 0 || it->second >= a.size()) throw InputError("value out of range for '" + f.name() + "'");
      return it->second;
    }
    case Op::top: return a.top();
    case Op::bot: return a.bottom();
    default: break;
  }
  if (is_unary(f.op())) return apply_unary(a, f.op(), evaluate(a, v, f.left()));
  return apply_binary(a, f.op(), evaluate(a, v, f.left()), evaluate(a, v, f.right()));
}

Element evaluate(const Valuation& v, Formula f) { return evaluate(v.algebra, v.assignment, f); }

TermEvaluator::TermEvaluator(const TdlAlgebra& a, std::vector<std::string> vars)
    : a_(a), vars_(std::move(vars)) {
  for (std::size_t i = 0; i < vars_.size(); ++i) count_ *= a.size();
}

Assignment TermEvaluator::assignment(int k) const {
  Assignment out;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    out[vars_[i]] = k % a_.size();
    k /= a_.size();
  }
  return out;
}

const std::vector<Element>& TermEvaluator::table(Formula f) {
  if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
  std::vector<Element> t(static_cast<std::size_t>(count_));
  switch (f.op()) {
    case Op::var: {
      auto pos = std::find(vars_.begin(), vars_.end(), f.name());
      if (pos == vars_.end()) throw InputError("variable '" + f.name() + "' has no value");
      int stride = 1;
      for (auto j = pos + 1; j != vars_.end(); ++j) stride *= a_.size();
      for (int k = 0; k < count_; ++k) t[k] = (k / stride) % a_.size();
      break;
    }
    case Op::top: std::fill(t.begin(), t.end(), a_.top()); break;
    case Op::bot: std::fill(t.begin(), t.end(), a_.bottom()); break;
    default:
      if (is_unary(f.op())) {
        const std::vector<Element> x = table(f.left());
        for (int k = 0; k < count_; ++k) t[k] = apply_unary(a_, f.op(), x[k]);
      } else {
        const std::vector<Element> x = table(f.left());
        const std::vector<Element> y = table(f.right());
        for (int k = 0; k < count_; ++k) t[k] = apply_binary(a_, f.op(), x[k], y[k]);
      }
  }
  return memo_.emplace(f.id(), std::move(t)).first->second;
}

std::optional<Assignment> failing_assignment(const TdlAlgebra& a, const Sequent& s, int max_vars) {
  std::set<std::string> vs = variables(s);
  if (static_cast<int>(vs.size()) > max_vars)
    throw SizeLimit("sequent has " + std::to_string(vs.size()) + " variables; the bound is " +
                    std::to_string(max_vars));
  TermEvaluator ev(a, {vs.begin(), vs.end()});
  std::vector<const std::vector<Element>*> left, right;
  for (Formula f : s.left) left.push_back(&ev.table(f));
  for (Formula f : s.right) right.push_back(&ev.table(f));
  for (int k = 0; k < ev.assignment_count(); ++k) {
    Element lo = a.top(), hi = a.bottom();
    for (auto* t : left) lo = a.meet(lo, (*t)[k]);
    for (auto* t : right) hi = a.join(hi, (*t)[k]);
    if (!a.leq(lo, hi)) return ev.assignment(k);
  }
  return std::nullopt;
}

bool holds(const TdlAlgebra& a, const Sequent& s, int max_vars) {
  return !failing_assignment(a, s, max_vars).has_value();
}

bool consequence(const Sequent& s, const std::vector<TdlAlgebra>& algebras) {
  return std::all_of(algebras.begin(), algebras.end(), [&](const TdlAlgebra& a) { return holds(a, s); });
}

void for_each_in_class(Calculus c, int max_size, const std::function<bool(const TdlAlgebra&)>& f) {
  if (max_size > 8) throw SizeLimit("algebra classes are limited to 8 elements");
  for (const LatticeEntry& e : distributive_lattices(max_size)) {
    const Lattice& l = e.lattice;
    if (c == Calculus::ltc && complemented_elements(l) != Subset::full(l.size())) continue;
    std::vector<OperatorTable> negs;
    if (c == Calculus::ltdm) negs = de_morgan_involutions(l);
    for (const TdlAlgebra& a : enumerate_tdl_algebras(l, max_size)) {
      switch (c) {
        case Calculus::lt:
          if (!f(a)) return;
          break;
        case Calculus::ltc:
        case Calculus::lti:
          if (!f(a.with_implication())) return;
          break;
        case Calculus::ltdm:
          for (const OperatorTable& n : negs) {
            TdlAlgebra m;
            try {
              m = a.with_negation(n);
            } catch (const DeMorganLawViolation&) {
              continue;
            }
            if (!f(m)) return;
          }
          break;
      }
    }
  }
}

std::vector<TdlAlgebra> algebra_class(Calculus c, int max_size) {
  std::vector<TdlAlgebra> out;
  for_each_in_class(c, max_size, [&](const TdlAlgebra& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

std::optional<Valuation> countermodel(const Sequent& s, int max_size, Calculus c, int max_vars) {
  std::optional<Valuation> found;
  for_each_in_class(c, max_size, [&](const TdlAlgebra& a) {
    if (auto v = failing_assignment(a, s, max_vars)) {
      found = Valuation{a, *v};
      return false;
    }
    return true;
  });
  return found;
}

}  // namespace tdl
