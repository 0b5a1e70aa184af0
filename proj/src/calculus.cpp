// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/calculus.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "tdl/rules.hpp"

namespace tdl {

namespace {

struct FormulaOps {
  Calculus c;
  Formula G(Formula f) const { return Formula::unary(Op::G, f); }
  Formula H(Formula f) const { return Formula::unary(Op::H, f); }
  Formula F(Formula f) const { return make_F(c, f); }
  Formula P(Formula f) const { return make_P(c, f); }
  Formula neg(Formula f) const { return Formula::neg(f); }
  Formula tilde(Formula f) const { return Formula::tilde(f); }
  Formula conj(Formula a, Formula b) const { return Formula::conj(a, b); }
  Formula disj(Formula a, Formula b) const { return Formula::disj(a, b); }
  Formula imp(Formula a, Formula b) const { return Formula::imp(a, b); }
  Formula top() const { return Formula::top(); }
  Formula bot() const { return Formula::bot(); }
};

// How a context occurs on one side of a schema.
enum class Shape { absent, plain, G, H, F, P };

Formula reshape(Shape s, Calculus c, Formula f) {
  switch (s) {
    case Shape::plain: return f;
    case Shape::G: return Formula::unary(Op::G, f);
    case Shape::H: return Formula::unary(Op::H, f);
    case Shape::F: return make_F(c, f);
    case Shape::P: return make_P(c, f);
    default: return {};
  }
}

Formula unshape(Shape s, Calculus c, Formula f) {
  switch (s) {
    case Shape::plain: return f;
    case Shape::G: return match_G(f);
    case Shape::H: return match_H(f);
    case Shape::F: return match_F(c, f);
    case Shape::P: return match_P(c, f);
    default: return {};
  }
}

Shape shape_of(const std::vector<Formula>& side, Formula marker, Calculus c) {
  for (Shape s : {Shape::plain, Shape::G, Shape::H, Shape::F, Shape::P})
    if (std::find(side.begin(), side.end(), reshape(s, c, marker)) != side.end()) return s;
  return Shape::absent;
}

FormulaSet as_set(const std::vector<Formula>& v) { return {v.begin(), v.end()}; }

void collect_subformulas(Formula f, FormulaSet& out) {
  if (!out.insert(f).second) return;
  if (f.left().valid()) collect_subformulas(f.left(), out);
  if (f.right().valid()) collect_subformulas(f.right(), out);
}

// Bounds on one context collected across the sides where it occurs.
struct ContextBounds {
  bool seen = false;
  FormulaSet lower;
  FormulaSet upper;

  bool add(const FormulaSet& actual, const FormulaSet& extras, Shape shape, Calculus c) {
    FormulaSet lo, up;
    for (Formula f : actual) {
      Formula u = unshape(shape, c, f);
      if (u.valid()) up.insert(u);
      if (!extras.count(f)) {
        if (!u.valid()) return false;
        lo.insert(u);
      }
    }
    lower.insert(lo.begin(), lo.end());
    if (!seen) {
      upper = std::move(up);
      seen = true;
    } else {
      FormulaSet both;
      std::set_intersection(upper.begin(), upper.end(), up.begin(), up.end(),
                            std::inserter(both, both.end()));
      upper = std::move(both);
    }
    return true;
  }
  bool consistent() const { return std::includes(upper.begin(), upper.end(), lower.begin(), lower.end()); }
};

bool sides_match(const SchemaInstance<Formula>& extras, const SchemaInstance<Formula>& marked,
                 Formula gmark, Formula dmark, Calculus c, const Sequent& conclusion,
                 const std::vector<Sequent>& premises) {
  ContextBounds gamma, delta;
  auto side = [&](const FormulaSet& actual, const std::vector<Formula>& extra,
                  const std::vector<Formula>& mark_side, Formula mark, ContextBounds& ctx) {
    FormulaSet e = as_set(extra);
    if (!std::includes(actual.begin(), actual.end(), e.begin(), e.end())) return false;
    Shape s = shape_of(mark_side, mark, c);
    if (s == Shape::absent) return actual == e;
    return ctx.add(actual, e, s, c);
  };
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!side(premises[i].left, extras.premises[i].left, marked.premises[i].left, gmark, gamma)) return false;
    if (!side(premises[i].right, extras.premises[i].right, marked.premises[i].right, dmark, delta)) return false;
  }
  if (!side(conclusion.left, extras.conclusion.left, marked.conclusion.left, gmark, gamma)) return false;
  if (!side(conclusion.right, extras.conclusion.right, marked.conclusion.right, dmark, delta)) return false;
  return gamma.consistent() && delta.consistent();
}

std::string path_child(const std::string& path, std::size_t i) { return path + "." + std::to_string(i); }

std::optional<RuleMismatchInfo> check_node(const ProofTree& t, Calculus c, const CheckOptions& opts,
                                           const std::string& path) {
  auto fail = [&](std::string reason) {
    return std::optional<RuleMismatchInfo>(RuleMismatchInfo{path, t.rule, std::move(reason)});
  };
  for (const FormulaSet* side : {&t.conclusion.left, &t.conclusion.right})
    for (Formula f : *side) {
      try {
        check_language(f, c);
      } catch (const SyntaxError& e) {
        return fail(e.what());
      }
    }
  if (t.rule == "hyp") {
    if (!t.premises.empty()) return fail("a hypothesis has no premises");
    if (!opts.hypotheses.count(t.conclusion)) return fail("not among the hypotheses");
    return std::nullopt;
  }
  const RuleInfo* info = find_rule(t.rule, c);
  if (!info) return fail("unknown in " + std::string(calculus_name(c)));
  if (info->derived && !opts.allow_derived) return fail("derived rules are disabled");
  std::vector<Sequent> prem;
  for (const ProofTree& p : t.premises) prem.push_back(p.conclusion);
  if (!rule_applies(t.rule, c, t.conclusion, prem)) return fail("no instance of the schema matches");
  for (std::size_t i = 0; i < t.premises.size(); ++i)
    if (auto bad = check_node(t.premises[i], c, opts, path_child(path, i))) return bad;
  return std::nullopt;
}

}  // namespace

bool rule_applies(std::string_view rule, Calculus c, const Sequent& conclusion,
                  const std::vector<Sequent>& premises) {
  const RuleInfo* info = find_rule(rule, c);
  if (!info) return false;
  const FormulaOps ops{c};
  const Formula amark = Formula::var("#a"), bmark = Formula::var("#b");
  const Formula gmark = Formula::var("#g"), dmark = Formula::var("#d");
  const SchemaInstance<Formula> marked =
      instantiate<Formula>(rule, c, ops, SchemaArgs<Formula>{amark, bmark, {gmark}, {dmark}});
  if (marked.premises.size() != premises.size()) return false;

  FormulaSet pool;
  auto gather = [&](const Sequent& s) {
    for (Formula f : s.left) collect_subformulas(f, pool);
    for (Formula f : s.right) collect_subformulas(f, pool);
  };
  gather(conclusion);
  for (const Sequent& p : premises) gather(p);
  const std::vector<Formula> alphas = info->alpha ? std::vector<Formula>(pool.begin(), pool.end())
                                                  : std::vector<Formula>{amark};
  const std::vector<Formula> betas = info->beta ? alphas : std::vector<Formula>{bmark};
  for (Formula a : alphas)
    for (Formula b : betas) {
      SchemaInstance<Formula> extras = instantiate<Formula>(rule, c, ops, SchemaArgs<Formula>{a, b, {}, {}});
      if (sides_match(extras, marked, gmark, dmark, c, conclusion, premises)) return true;
    }
  return false;
}

std::optional<RuleMismatchInfo> check_proof(const ProofTree& t, Calculus c, const CheckOptions& opts) {
  return check_node(t, c, opts, "root");
}

void verify_proof(const ProofTree& t, Calculus c, const CheckOptions& opts) {
  if (auto bad = check_proof(t, c, opts)) throw RuleMismatch(*bad);
}

namespace {

ProofTree node(std::string rule, Sequent s, std::vector<ProofTree> premises = {}) {
  return ProofTree{std::move(s), std::move(rule), std::move(premises)};
}

Sequent seq(FormulaSet l, FormulaSet r) { return Sequent{std::move(l), std::move(r)}; }

FormulaSet minus(FormulaSet s, Formula f) {
  s.erase(f);
  return s;
}

FormulaSet with(FormulaSet s, std::initializer_list<Formula> fs) {
  s.insert(fs.begin(), fs.end());
  return s;
}

class Prover {
 public:
  explicit Prover(Calculus c) : c_(c) {}

  std::optional<ProofTree> search(const Sequent& s, int depth) {
    if (auto it = proved_.find(s); it != proved_.end()) return it->second;
    if (auto it = failed_.find(s); it != failed_.end() && it->second >= depth) return std::nullopt;
    if (on_stack_.count(s)) {
      loop_hit_ = true;
      return std::nullopt;
    }
    on_stack_.insert(s);
    const bool outer_loop = loop_hit_;
    loop_hit_ = false;
    std::optional<ProofTree> r = attempt(s, depth);
    on_stack_.erase(s);
    if (r) {
      proved_.emplace(s, *r);
    } else if (!loop_hit_) {
      int& d = failed_[s];
      d = std::max(d, depth);
    }
    loop_hit_ = outer_loop || loop_hit_;
    return r;
  }

 private:
  std::optional<ProofTree> all(const std::string& rule, const Sequent& concl,
                               const std::vector<Sequent>& prems, int depth) {
    std::vector<ProofTree> kids;
    for (const Sequent& p : prems) {
      auto k = search(p, depth);
      if (!k) return std::nullopt;
      kids.push_back(std::move(*k));
    }
    return node(rule, concl, std::move(kids));
  }

  std::optional<ProofTree> axiom(const Sequent& s) {
    for (Formula f : s.left)
      if (s.right.count(f)) return weaken_to(node("id", seq({f}, {f})), s);
    if (s.left.count(Formula::bot())) return weaken_to(node("bot=>", seq({Formula::bot()}, {})), s);
    if (s.right.count(Formula::top())) return weaken_to(node("=>top", seq({}, {Formula::top()})), s);
    return std::nullopt;
  }

  // The first invertible step, or nullopt when none applies. The bool is
  // false when a step applied but its premises failed.
  std::optional<std::optional<ProofTree>> invertible(const Sequent& s, int depth) {
    const bool classical = c_ == Calculus::ltc;
    for (Formula f : s.left) {
      const FormulaSet rest = minus(s.left, f);
      const Formula a = f.left(), b = f.right();
      switch (f.op()) {
        case Op::conj: return all("&=>", s, {seq(with(rest, {a, b}), s.right)}, depth);
        case Op::disj: return all("|=>", s, {seq(with(rest, {a}), s.right), seq(with(rest, {b}), s.right)}, depth);
        case Op::neg:
          if (classical) return all("~=>", s, {seq(rest, with(s.right, {a}))}, depth);
          break;
        case Op::imp:
          if (classical)
            return all("->=>", s, {seq(rest, with(s.right, {a})), seq(with(rest, {b}), s.right)}, depth);
          break;
        case Op::tilde:
          if (a.op() == Op::tilde) return all("~~=>", s, {seq(with(rest, {a.left()}), s.right)}, depth);
          break;
        default: break;
      }
    }
    for (Formula f : s.right) {
      const FormulaSet rest = minus(s.right, f);
      const Formula a = f.left(), b = f.right();
      switch (f.op()) {
        case Op::conj: return all("=>&", s, {seq(s.left, with(rest, {a})), seq(s.left, with(rest, {b}))}, depth);
        case Op::disj: return all("=>|", s, {seq(s.left, with(rest, {a, b}))}, depth);
        case Op::neg:
          if (classical) return all("=>~", s, {seq(with(s.left, {a}), rest)}, depth);
          break;
        case Op::imp:
          if (classical) return all("=>->", s, {seq(with(s.left, {a}), with(rest, {b}))}, depth);
          break;
        case Op::tilde:
          if (a.op() == Op::tilde) return all("=>~~", s, {seq(s.left, with(rest, {a.left()}))}, depth);
          break;
        default: break;
      }
    }
    return std::nullopt;
  }

  // Side formulas that the modal rules may carry along, unwrapped.
  FormulaSet unwrap(const FormulaSet& side, const std::function<Formula(Formula)>& m) {
    FormulaSet out;
    for (Formula f : side)
      if (Formula u = m(f); u.valid()) out.insert(u);
    return out;
  }

  FormulaSet rewrap(const FormulaSet& side, const std::function<Formula(Formula)>& m) {
    FormulaSet out;
    for (Formula f : side) out.insert(m(f));
    return out;
  }

  std::optional<ProofTree> step(const std::string& rule, const Sequent& concl,
                                const std::vector<Sequent>& prems, const Sequent& goal, int depth) {
    auto t = all(rule, concl, prems, depth);
    if (!t) return std::nullopt;
    return weaken_to(std::move(*t), goal);
  }

  std::optional<ProofTree> modal(const Sequent& s, int depth) {
    const Calculus c = c_;
    const std::function<Formula(Formula)> mG = match_G, mH = match_H;
    const std::function<Formula(Formula)> mF = [c](Formula f) { return match_F(c, f); };
    const std::function<Formula(Formula)> mP = [c](Formula f) { return match_P(c, f); };
    const std::function<Formula(Formula)> wG = [](Formula f) { return Formula::unary(Op::G, f); };
    const std::function<Formula(Formula)> wH = [](Formula f) { return Formula::unary(Op::H, f); };
    const std::function<Formula(Formula)> wF = [c](Formula f) { return make_F(c, f); };
    const std::function<Formula(Formula)> wP = [c](Formula f) { return make_P(c, f); };

    struct Family {
      const char* box_rule;
      const char* diamond_rule;
      const std::function<Formula(Formula)>&m_box, &m_dia, &w_box, &w_dia;
    };
    const Family families[] = {{"G*", "*F", mG, mF, wG, wF}, {"H*", "*P", mH, mP, wH, wP}};
    for (const Family& fam : families) {
      const FormulaSet gamma = unwrap(s.left, fam.m_box);
      const FormulaSet delta = unwrap(s.right, fam.m_dia);
      const FormulaSet boxed = rewrap(gamma, fam.w_box);
      const FormulaSet dia = rewrap(delta, fam.w_dia);
      for (Formula f : s.right)
        if (Formula a = fam.m_box(f); a.valid())
          if (auto t = step(fam.box_rule, seq(boxed, with(dia, {f})), {seq(gamma, with(delta, {a}))}, s, depth - 1))
            return t;
      for (Formula f : s.left)
        if (Formula a = fam.m_dia(f); a.valid())
          if (auto t = step(fam.diamond_rule, seq(with(boxed, {f}), dia), {seq(with(gamma, {a}), delta)}, s, depth - 1))
            return t;
    }
    // GP, HF on the right; PG, FH on the left.
    for (Formula f : s.right) {
      if (Formula inner = match_G(f); inner.valid())
        if (Formula a = match_P(c, inner); a.valid())
          if (auto t = step("GP", seq(s.left, {f}), {seq(s.left, {a})}, s, depth - 1)) return t;
      if (Formula inner = match_H(f); inner.valid())
        if (Formula a = match_F(c, inner); a.valid())
          if (auto t = step("HF", seq(s.left, {f}), {seq(s.left, {a})}, s, depth - 1)) return t;
    }
    for (Formula f : s.left) {
      if (Formula inner = match_P(c, f); inner.valid())
        if (Formula a = match_G(inner); a.valid())
          if (auto t = step("PG", seq({f}, s.right), {seq({a}, s.right)}, s, depth - 1)) return t;
      if (Formula inner = match_F(c, f); inner.valid())
        if (Formula a = match_H(inner); a.valid())
          if (auto t = step("FH", seq({f}, s.right), {seq({a}, s.right)}, s, depth - 1)) return t;
    }
    return std::nullopt;
  }

  std::optional<ProofTree> extension_rules(const Sequent& s, int depth) {
    if (c_ == Calculus::ltdm) {
      for (Formula l : s.left)
        for (Formula r : s.right)
          if (l.op() == Op::tilde && r.op() == Op::tilde)
            if (auto t = step("~", seq({l}, {r}), {seq({r.left()}, {l.left()})}, s, depth - 1)) return t;
    }
    if (c_ == Calculus::lti) {
      for (Formula f : s.right) {
        if (f.op() == Op::neg)
          if (auto t = step("=>~", seq(s.left, {f}), {seq(with(s.left, {f.left()}), {})}, s, depth - 1)) return t;
        if (f.op() == Op::imp)
          if (auto t = step("=>->", seq(s.left, {f}), {seq(with(s.left, {f.left()}), {f.right()})}, s, depth - 1))
            return t;
      }
      for (Formula f : s.left) {
        if (f.op() == Op::neg)
          if (auto t = step("~=>", seq(s.left, {}), {seq(s.left, {f.left()})}, s, depth - 1)) return t;
        if (f.op() == Op::imp)
          if (auto t = step("->=>", s, {seq(s.left, with(s.right, {f.left()})), seq(with(s.left, {f.right()}), s.right)},
                            s, depth - 1))
            return t;
      }
    }
    return std::nullopt;
  }

  std::optional<ProofTree> attempt(const Sequent& s, int depth) {
    if (auto t = axiom(s)) return t;
    if (auto inv = invertible(s, depth)) return *inv;
    if (depth <= 0) return std::nullopt;
    if (auto t = modal(s, depth)) return t;
    return extension_rules(s, depth);
  }

  Calculus c_;
  std::map<Sequent, ProofTree> proved_;
  std::map<Sequent, int> failed_;
  std::set<Sequent> on_stack_;
  bool loop_hit_ = false;
};

}  // namespace

ProofTree weaken_to(ProofTree t, const Sequent& target) {
  const Sequent& have = t.conclusion;
  if (!std::includes(target.left.begin(), target.left.end(), have.left.begin(), have.left.end()) ||
      !std::includes(target.right.begin(), target.right.end(), have.right.begin(), have.right.end()))
    throw InputError("weakening cannot remove formulas");
  for (Formula f : target.left)
    if (!t.conclusion.left.count(f)) {
      Sequent next = t.conclusion;
      next.left.insert(f);
      t = node("we_i", std::move(next), {std::move(t)});
    }
  for (Formula f : target.right)
    if (!t.conclusion.right.count(f)) {
      Sequent next = t.conclusion;
      next.right.insert(f);
      t = node("we_d", std::move(next), {std::move(t)});
    }
  return t;
}

std::optional<ProofTree> prove(const Sequent& s, Calculus c, int depth) {
  for (const FormulaSet* side : {&s.left, &s.right})
    for (Formula f : *side) check_language(f, c);
  Prover p(c);
  return p.search(s, depth);
}

namespace {

Formula only(const FormulaSet& s) { return s.size() == 1 ? *s.begin() : Formula(); }

// cut on x: Γ => Δ from Γ => Δ, x and x, Γ => Δ, weakening both sides in.
ProofTree cut_on(Formula x, const Sequent& goal, ProofTree with_x_right, ProofTree with_x_left) {
  ProofTree p1 = weaken_to(std::move(with_x_right), seq(goal.left, with(goal.right, {x})));
  ProofTree p2 = weaken_to(std::move(with_x_left), seq(with(goal.left, {x}), goal.right));
  return node("cut", goal, {std::move(p1), std::move(p2)});
}

}  // namespace

ProofTree expand_derived(const ProofTree& t, Calculus c) {
  ProofTree out{t.conclusion, t.rule, {}};
  for (const ProofTree& p : t.premises) out.premises.push_back(expand_derived(p, c));
  static const std::map<std::string, std::string> renamed = {
      {"mG", "G*"}, {"mH", "H*"}, {"mF", "*F"}, {"mP", "*P"},
      {"G", "G*"},  {"H", "H*"},  {"F", "*F"},  {"P", "*P"}};
  if (auto it = renamed.find(t.rule); it != renamed.end()) {
    out.rule = it->second;
    return out;
  }
  const bool is_ad = t.rule == "AdG" || t.rule == "AdH" || t.rule == "AdP" || t.rule == "AdF";
  if (!is_ad) return out;
  if (out.premises.size() != 1) throw InputError(t.rule + " takes one premise");
  const Formula l = only(t.conclusion.left), r = only(t.conclusion.right);
  if (!l.valid() || !r.valid()) throw InputError(t.rule + " needs single formulas on both sides");
  ProofTree prem = std::move(out.premises[0]);
  const bool future = t.rule == "AdG" || t.rule == "AdP";
  auto box = [&](Formula f) { return Formula::unary(future ? Op::G : Op::H, f); };
  auto dia = [&](Formula f) { return future ? make_P(c, f) : make_F(c, f); };
  auto undia = [&](Formula f) { return future ? match_P(c, f) : match_F(c, f); };
  if (t.rule == "AdP" || t.rule == "AdF") {
    // α => Gβ gives Pα => PGβ; PGβ => β; cut on PGβ.
    const Formula a = undia(l), b = r;
    if (!a.valid()) throw InputError(t.rule + " conclusion has the wrong shape");
    const Formula db = dia(box(b));
    ProofTree n1 = node(future ? "*P" : "*F", seq({l}, {db}), {std::move(prem)});
    ProofTree n2 = node(future ? "PG" : "FH", seq({db}, {b}), {node("id", seq({b}, {b}))});
    return cut_on(db, t.conclusion, std::move(n1), std::move(n2));
  }
  // AdG, AdH: α => GPα; GPα => Gβ from Pα => β; cut on GPα.
  const Formula a = l;
  const Formula bd = box(dia(a));
  ProofTree n1 = node(future ? "GP" : "HF", seq({a}, {bd}), {node("id", seq({a}, {a}))});
  ProofTree n2 = node(future ? "G*" : "H*", seq({bd}, {r}), {std::move(prem)});
  return cut_on(bd, t.conclusion, std::move(n1), std::move(n2));
}

Formula big_conj(const FormulaSet& s) {
  if (s.empty()) return Formula::top();
  Formula acc = *s.begin();
  for (auto it = std::next(s.begin()); it != s.end(); ++it) acc = Formula::conj(acc, *it);
  return acc;
}

Formula big_disj(const FormulaSet& s) {
  if (s.empty()) return Formula::bot();
  Formula acc = *s.begin();
  for (auto it = std::next(s.begin()); it != s.end(); ++it) acc = Formula::disj(acc, *it);
  return acc;
}

ProofTree conjunctive_form(const ProofTree& t) {
  const std::vector<Formula> gamma(t.conclusion.left.begin(), t.conclusion.left.end());
  const std::vector<Formula> delta(t.conclusion.right.begin(), t.conclusion.right.end());
  ProofTree cur = t;
  if (gamma.empty()) {
    cur = weaken_to(std::move(cur), seq({Formula::top()}, cur.conclusion.right));
  } else {
    Formula acc = gamma[0];
    for (std::size_t i = 1; i < gamma.size(); ++i) {
      FormulaSet left = cur.conclusion.left;
      left.erase(acc);
      left.erase(gamma[i]);
      acc = Formula::conj(acc, gamma[i]);
      left.insert(acc);
      Sequent next{left, cur.conclusion.right};
      cur = node("&=>", std::move(next), {std::move(cur)});
    }
  }
  if (delta.empty()) {
    cur = weaken_to(std::move(cur), seq(cur.conclusion.left, {Formula::bot()}));
  } else {
    Formula acc = delta[0];
    for (std::size_t i = 1; i < delta.size(); ++i) {
      FormulaSet right = cur.conclusion.right;
      right.erase(acc);
      right.erase(delta[i]);
      acc = Formula::disj(acc, delta[i]);
      right.insert(acc);
      Sequent next{cur.conclusion.left, right};
      cur = node("=>|", std::move(next), {std::move(cur)});
    }
  }
  return cur;
}

int proof_size(const ProofTree& t) {
  int n = 1;
  for (const ProofTree& p : t.premises) n += proof_size(p);
  return n;
}

std::string render(const ProofTree& t) {
  std::string out;
  std::function<void(const ProofTree&, int)> walk = [&](const ProofTree& n, int indent) {
    out.append(static_cast<std::size_t>(indent) * 2, ' ');
    out += "[" + n.rule + "] " + render(n.conclusion) + "\n";
    for (const ProofTree& p : n.premises) walk(p, indent + 1);
  };
  walk(t, 0);
  return out;
}

}  // namespace tdl
