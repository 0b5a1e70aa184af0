// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/soundness.hpp"

#include <array>
#include <map>
#include <unordered_map>

#include "tdl/rules.hpp"
#include "tdl/semantics.hpp"

namespace tdl {

const RuleSoundness* SoundnessReport::find(std::string_view rule) const {
  for (const RuleSoundness& r : rules)
    if (r.rule == rule) return &r;
  return nullptr;
}

bool SoundnessReport::sound() const {
  for (const RuleSoundness& r : rules)
    if (r.failure) return false;
  return true;
}

std::vector<Formula> formula_pool(Calculus c, int depth) {
  std::vector<Op> unary{Op::G, Op::H, Op::F, Op::P};
  std::vector<Op> binary{Op::conj, Op::disj};
  if (c == Calculus::ltc || c == Calculus::lti) {
    unary.push_back(Op::neg);
    binary.push_back(Op::imp);
  }
  if (c == Calculus::ltdm) unary.push_back(Op::tilde);
  auto apply = [c](Op op, Formula f) {
    if (op == Op::F) return make_F(c, f);
    if (op == Op::P) return make_P(c, f);
    return Formula::unary(op, f);
  };
  std::vector<Formula> all{Formula::var("p"), Formula::var("q"), Formula::top(), Formula::bot()};
  std::size_t previous = 0;  // formulas before this index are below the last level
  for (int d = 1; d <= depth; ++d) {
    const std::size_t level_start = previous, count = all.size();
    std::vector<Formula> next;
    for (std::size_t i = level_start; i < count; ++i)
      for (Op op : unary) next.push_back(apply(op, all[i]));
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) {
        if (i < level_start && j < level_start) continue;
        for (Op op : binary) next.push_back(Formula::binary(op, all[i], all[j]));
      }
    previous = count;
    all.insert(all.end(), next.begin(), next.end());
  }
  return all;
}

namespace {

constexpr int kNone = -1;

// Term functions of p, q over one algebra, interned with memoized operations.
// Each table also keeps, per join-irreducible j, the bitmask of assignments
// where j is below the value: meets and joins become bitwise and or, and
// x <= y everywhere iff every mask of x is inside the matching mask of y.
class TableStore {
 public:
  explicit TableStore(const TdlAlgebra& a) : a_(a), n_(a.size() * a.size()) {
    for (Element j : join_irreducibles(a.lattice())) irr_.push_back(j);
    std::vector<Element> p(static_cast<std::size_t>(n_)), q(p.size()), one(p.size(), a.top()),
        zero(p.size(), a.bottom());
    for (int k = 0; k < n_; ++k) {
      p[static_cast<std::size_t>(k)] = k / a.size();
      q[static_cast<std::size_t>(k)] = k % a.size();
    }
    var_p = intern(std::move(p));
    var_q = intern(std::move(q));
    top = intern(std::move(one));
    bot = intern(std::move(zero));
  }

  int unary(Op op, int x) {
    std::vector<int>& memo = unary_memo_[static_cast<std::size_t>(op)];
    if (static_cast<std::size_t>(x) < memo.size() && memo[static_cast<std::size_t>(x)] != kNone)
      return memo[static_cast<std::size_t>(x)];
    std::vector<Element> t = tables_[static_cast<std::size_t>(x)];
    for (Element& e : t) e = apply(op, e);
    const int r = intern(std::move(t));
    if (memo.size() <= static_cast<std::size_t>(x)) memo.resize(static_cast<std::size_t>(x) + 1, kNone);
    memo[static_cast<std::size_t>(x)] = r;
    return r;
  }

  int binary(Op op, int x, int y) {
    const std::uint64_t key = (static_cast<std::uint64_t>(op) << 48) | (static_cast<std::uint64_t>(x) << 24) |
                              static_cast<std::uint64_t>(y);
    if (auto it = binary_memo_.find(key); it != binary_memo_.end()) return it->second;
    const std::vector<Element>& tx = tables_[static_cast<std::size_t>(x)];
    const std::vector<Element>& ty = tables_[static_cast<std::size_t>(y)];
    std::vector<Element> t(tx.size());
    for (std::size_t k = 0; k < t.size(); ++k) {
      switch (op) {
        case Op::conj: t[k] = a_.meet(tx[k], ty[k]); break;
        case Op::disj: t[k] = a_.join(tx[k], ty[k]); break;
        case Op::imp: t[k] = a_.imp(tx[k], ty[k]); break;
        default: throw InternalError("not a binary operator");
      }
    }
    const int r = intern(std::move(t));
    binary_memo_.emplace(key, r);
    return r;
  }

  int eval(Formula f) {
    switch (f.op()) {
      case Op::var: return f.name() == "p" ? var_p : var_q;
      case Op::top: return top;
      case Op::bot: return bot;
      default: break;
    }
    if (is_unary(f.op())) return unary(f.op(), eval(f.left()));
    return binary(f.op(), eval(f.left()), eval(f.right()));
  }

  std::size_t irreducibles() const { return irr_.size(); }
  const std::uint64_t* masks(int x) const { return &masks_[static_cast<std::size_t>(x) * irr_.size()]; }
  std::uint64_t full() const { return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1; }

  int var_p = kNone, var_q = kNone, top = kNone, bot = kNone;

 private:
  Element apply(Op op, Element e) const {
    switch (op) {
      case Op::G: return a_.G(e);
      case Op::H: return a_.H(e);
      case Op::F: return a_.F(e);
      case Op::P: return a_.P(e);
      case Op::neg: return a_.imp(e, a_.bottom());
      case Op::tilde: return (*a_.neg())[e];
      default: throw InternalError("not a unary operator");
    }
  }

  int intern(std::vector<Element> t) {
    auto [it, fresh] = index_.emplace(t, static_cast<int>(tables_.size()));
    if (!fresh) return it->second;
    for (Element j : irr_) {
      std::uint64_t m = 0;
      for (std::size_t k = 0; k < t.size(); ++k)
        if (a_.leq(j, t[k])) m |= std::uint64_t{1} << k;
      masks_.push_back(m);
    }
    tables_.push_back(std::move(t));
    return it->second;
  }

  const TdlAlgebra& a_;
  int n_;
  std::vector<Element> irr_;
  std::vector<std::vector<Element>> tables_;
  std::map<std::vector<Element>, int> index_;
  std::vector<std::uint64_t> masks_;
  std::array<std::vector<int>, 12> unary_memo_;
  std::unordered_map<std::uint64_t, int> binary_memo_;
};

// Term-level operations for instantiate(): schemas over marker variables
// are built once per rule and evaluated per instance.
struct MarkerOps {
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

// A schema over the markers #a #b #g #d, evaluated under an environment of
// table indices. Evaluation memoizes per environment slot via the store.
class CompiledRule {
 public:
  CompiledRule(std::string_view rule, Calculus c, bool gamma, bool delta) {
    const Formula ga = Formula::var("#g"), de = Formula::var("#d");
    std::vector<Formula> g, d;
    if (gamma) g.push_back(ga);
    if (delta) d.push_back(de);
    inst_ = instantiate<Formula>(rule, c, MarkerOps{c},
                                 SchemaArgs<Formula>{Formula::var("#a"), Formula::var("#b"), g, d});
  }

  // nullopt when a premise is invalid; otherwise whether the conclusion holds.
  std::optional<bool> check(TableStore& s, const std::array<int, 4>& env) const {
    for (const SchemaSequent<Formula>& p : inst_.premises)
      if (!valid(s, env, p)) return std::nullopt;
    return valid(s, env, inst_.conclusion);
  }

 private:
  static int eval(TableStore& s, const std::array<int, 4>& env, Formula f) {
    switch (f.op()) {
      case Op::var:
        if (f.name().size() == 2 && f.name()[0] == '#') {
          switch (f.name()[1]) {
            case 'a': return env[0];
            case 'b': return env[1];
            case 'g': return env[2];
            default: return env[3];
          }
        }
        return s.eval(f);
      case Op::top: return s.top;
      case Op::bot: return s.bot;
      default: break;
    }
    if (is_unary(f.op())) return s.unary(f.op(), eval(s, env, f.left()));
    return s.binary(f.op(), eval(s, env, f.left()), eval(s, env, f.right()));
  }

  static bool valid(TableStore& s, const std::array<int, 4>& env, const SchemaSequent<Formula>& q) {
    const std::size_t J = s.irreducibles();
    std::array<std::uint64_t, 64> lhs, rhs;
    for (std::size_t j = 0; j < J; ++j) {
      lhs[j] = s.full();
      rhs[j] = 0;
    }
    for (Formula f : q.left) {
      const std::uint64_t* m = s.masks(eval(s, env, f));
      for (std::size_t j = 0; j < J; ++j) lhs[j] &= m[j];
    }
    for (Formula f : q.right) {
      const std::uint64_t* m = s.masks(eval(s, env, f));
      for (std::size_t j = 0; j < J; ++j) rhs[j] |= m[j];
    }
    for (std::size_t j = 0; j < J; ++j)
      if (lhs[j] & ~rhs[j]) return false;
    return true;
  }

  SchemaInstance<Formula> inst_;
};

// Distinct tables of the pool, each with the first formula producing it.
std::vector<std::pair<int, Formula>> distinct(TableStore& s, const std::vector<Formula>& pool) {
  std::vector<std::pair<int, Formula>> out;
  std::map<int, bool> seen;
  for (Formula f : pool) {
    const int t = s.eval(f);
    if (seen.emplace(t, true).second) out.emplace_back(t, f);
  }
  return out;
}

}  // namespace

SoundnessReport soundness_sweep(const SoundnessOptions& opts) {
  if (opts.max_size > 8) throw SizeLimit("soundness sweep is capped at 8 elements");
  SoundnessReport report;
  const std::vector<Formula> alpha_pool = formula_pool(opts.calc, opts.alpha_depth);
  const std::vector<Formula> context_pool = formula_pool(opts.calc, opts.context_depth);
  const std::vector<Formula> atoms{Formula::var("p"), Formula::var("q")};

  struct Entry {
    const RuleInfo* info;
    int metavariables;
    std::array<std::array<std::optional<CompiledRule>, 2>, 2> plans;  // [gamma?][delta?]
  };
  std::vector<Entry> entries;
  for (const RuleInfo& r : rule_table()) {
    if (!(r.calculi & bit(opts.calc))) continue;
    if (r.derived && !opts.include_derived) continue;
    Entry e{&r, int(r.alpha) + int(r.beta) + int(r.gamma) + int(r.delta), {}};
    for (int g = 0; g < 2; ++g)
      for (int d = 0; d < 2; ++d)
        if ((g == 0 || r.gamma) && (d == 0 || r.delta)) e.plans[g][d].emplace(r.name, opts.calc, g == 1, d == 1);
    entries.push_back(std::move(e));
    report.rules.push_back(RuleSoundness{std::string(r.name), 0, 0, std::nullopt});
  }

  for_each_in_class(opts.calc, opts.max_size, [&](const TdlAlgebra& a) {
    ++report.algebras;
    TableStore store(a);
    const auto alphas = distinct(store, alpha_pool);
    const auto contexts = distinct(store, context_pool);
    const auto vars = distinct(store, atoms);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const Entry& e = entries[i];
      RuleSoundness& out = report.rules[i];
      const std::vector<std::pair<int, Formula>> none{{kNone, Formula()}};
      const auto& ctx = e.metavariables <= 2 ? alphas : e.metavariables == 3 ? contexts : vars;
      const auto& as = e.info->alpha ? alphas : none;
      const auto& bs = e.info->beta ? alphas : none;
      // Index 0 of a context loop is the empty context.
      const std::size_t gn = e.info->gamma ? ctx.size() + 1 : 1;
      const std::size_t dn = e.info->delta ? ctx.size() + 1 : 1;
      for (std::size_t gi = 0; gi < gn; ++gi)
        for (std::size_t di = 0; di < dn; ++di) {
          const CompiledRule& plan = *e.plans[gi > 0][di > 0];
          for (const auto& [at, af] : as)
            for (const auto& [bt, bf] : bs) {
              const std::array<int, 4> env{at, bt, gi ? ctx[gi - 1].first : kNone, di ? ctx[di - 1].first : kNone};
              ++out.instances;
              const std::optional<bool> r = plan.check(store, env);
              if (!r) continue;
              ++out.premises_valid;
              if (!*r && !out.failure) {
                SoundnessFailure f{a, af, bf, {}, {}};
                if (gi) f.gamma.push_back(ctx[gi - 1].second);
                if (di) f.delta.push_back(ctx[di - 1].second);
                out.failure = std::move(f);
              }
            }
        }
    }
    return true;
  });
  return report;
}

}  // namespace tdl
