// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/tense_algebra.hpp"

#include <algorithm>
#include <functional>

namespace tdl {

namespace {

// Accumulates at most one violation per axiom clause.
class Checker {
 public:
  explicit Checker(const Lattice& l) : l_(l) {}

  void unary(const std::string& tag, const std::function<bool(Element)>& ok) {
    for (Element x = 0; x < l_.size(); ++x)
      if (!ok(x)) {
        add(tag, {x});
        return;
      }
  }

  void binary(const std::string& tag, const std::function<bool(Element, Element)>& ok) {
    for (Element x = 0; x < l_.size(); ++x)
      for (Element y = 0; y < l_.size(); ++y)
        if (!ok(x, y)) {
          add(tag, {x, y});
          return;
        }
  }

  void nullary(const std::string& tag, bool ok) {
    if (!ok) add(tag, {});
  }

  AxiomReport take() { return std::move(report_); }

 private:
  void add(const std::string& tag, std::vector<Element> w) {
    std::string detail = tag + " at (";
    for (std::size_t i = 0; i < w.size(); ++i) detail += (i ? "," : "") + l_.label(w[i]);
    detail += ")";
    report_.violations.push_back({tag, std::move(w), std::move(detail)});
  }

  const Lattice& l_;
  AxiomReport report_;
};

void check_table(const Lattice& l, const OperatorTable& t, const char* name) {
  if (t.size() != static_cast<std::size_t>(l.size()))
    throw InputError(std::string("operator ") + name + " is not total on the carrier");
  for (Element v : t)
    if (v < 0 || v >= l.size())
      throw InputError(std::string("operator ") + name + " has a value outside the carrier");
}

struct Ops {
  const Lattice& l;
  const OperatorTable &G, &H, &F, &P;
  bool leq(Element a, Element b) const { return l.leq(a, b); }
  Element m(Element a, Element b) const { return l.meet(a, b); }
  Element j(Element a, Element b) const { return l.join(a, b); }
};

void axioms_t3(Checker& c, const Ops& o) {
  c.unary("t3", [&](Element x) { return o.leq(x, o.G[o.P[x]]); });
  c.unary("t3", [&](Element x) { return o.leq(x, o.H[o.F[x]]); });
}
void axioms_t4(Checker& c, const Ops& o) {
  c.binary("t4", [&](Element x, Element y) { return o.leq(o.G[o.j(x, y)], o.j(o.G[x], o.F[y])); });
  c.binary("t4", [&](Element x, Element y) { return o.leq(o.H[o.j(x, y)], o.j(o.H[x], o.P[y])); });
}
void axioms_t7(Checker& c, const Ops& o) {
  c.unary("t7", [&](Element x) { return o.leq(o.P[o.G[x]], x); });
  c.unary("t7", [&](Element x) { return o.leq(o.F[o.H[x]], x); });
}
void axioms_t8(Checker& c, const Ops& o) {
  c.binary("t8", [&](Element x, Element y) { return o.leq(o.m(o.G[x], o.F[y]), o.F[o.m(x, y)]); });
  c.binary("t8", [&](Element x, Element y) { return o.leq(o.m(o.H[x], o.P[y]), o.P[o.m(x, y)]); });
}
void axioms_t9(Checker& c, const Ops& o) {
  for (const OperatorTable* t : {&o.G, &o.H, &o.F, &o.P})
    c.binary("t9", [&](Element x, Element y) { return !o.leq(x, y) || o.leq((*t)[x], (*t)[y]); });
}
void axioms_t16_t17(Checker& c, const Ops& o) {
  c.binary("t16", [&](Element x, Element y) { return o.leq(o.P[x], y) == o.leq(x, o.G[y]); });
  c.binary("t17", [&](Element x, Element y) { return o.leq(o.F[x], y) == o.leq(x, o.H[y]); });
}

}  // namespace

TdlAlgebra TdlAlgebra::unchecked(Lattice lattice, OperatorTable G, OperatorTable H,
                                 OperatorTable F, OperatorTable P) {
  TdlAlgebra a;
  a.lattice_ = std::move(lattice);
  a.g_ = std::move(G);
  a.h_ = std::move(H);
  a.f_ = std::move(F);
  a.p_ = std::move(P);
  return a;
}

TdlAlgebra TdlAlgebra::with_negation(OperatorTable neg) const {
  check_table(lattice_, neg, "neg");
  if (auto failure = de_morgan_failure(lattice_, neg, g_, h_, f_, p_))
    throw DeMorganLawViolation(*failure);
  TdlAlgebra a = *this;
  a.neg_ = std::move(neg);
  return a;
}

TdlAlgebra TdlAlgebra::with_implication() const {
  TdlAlgebra a = *this;
  a.imp_ = heyting_implication(lattice_);
  return a;
}

AxiomError::AxiomError(AxiomReport report)
    : InputError([&] {
        std::string msg = "tense axioms fail:";
        for (const Violation& v : report.violations) msg += " " + v.detail + ";";
        return msg;
      }()),
      report_(std::move(report)) {}

AxiomReport check_tdl_axioms(const Lattice& l, const OperatorTable& G, const OperatorTable& H,
                             const OperatorTable& F, const OperatorTable& P) {
  check_table(l, G, "G");
  check_table(l, H, "H");
  check_table(l, F, "F");
  check_table(l, P, "P");
  Ops o{l, G, H, F, P};
  Checker c(l);
  c.nullary("t1", G[l.top()] == l.top());
  c.nullary("t1", H[l.top()] == l.top());
  c.binary("t2", [&](Element x, Element y) { return G[o.m(x, y)] == o.m(G[x], G[y]); });
  c.binary("t2", [&](Element x, Element y) { return H[o.m(x, y)] == o.m(H[x], H[y]); });
  axioms_t3(c, o);
  axioms_t4(c, o);
  c.nullary("t5", F[l.bottom()] == l.bottom());
  c.nullary("t5", P[l.bottom()] == l.bottom());
  c.binary("t6", [&](Element x, Element y) { return F[o.j(x, y)] == o.j(F[x], F[y]); });
  c.binary("t6", [&](Element x, Element y) { return P[o.j(x, y)] == o.j(P[x], P[y]); });
  axioms_t7(c, o);
  axioms_t8(c, o);
  return c.take();
}

TdlAlgebra build_tdl_algebra(const Lattice& l, OperatorTable G, OperatorTable H,
                             OperatorTable F, OperatorTable P) {
  AxiomReport r = check_tdl_axioms(l, G, H, F, P);
  if (!r.passed()) throw AxiomError(std::move(r));
  return TdlAlgebra::unchecked(l, std::move(G), std::move(H), std::move(F), std::move(P));
}

AxiomReport check_alternative_axioms(const Lattice& l, const OperatorTable& G,
                                     const OperatorTable& H, const OperatorTable& F,
                                     const OperatorTable& P, AxiomVariant variant) {
  check_table(l, G, "G");
  check_table(l, H, "H");
  check_table(l, F, "F");
  check_table(l, P, "P");
  Ops o{l, G, H, F, P};
  Checker c(l);
  axioms_t4(c, o);
  axioms_t8(c, o);
  if (variant == AxiomVariant::b) {
    axioms_t16_t17(c, o);
  } else {
    axioms_t9(c, o);
    axioms_t3(c, o);
    axioms_t7(c, o);
  }
  return c.take();
}

AxiomReport check_alternative_axioms(const TdlAlgebra& a, AxiomVariant variant) {
  return check_alternative_axioms(a.lattice(), a.G_table(), a.H_table(), a.F_table(),
                                  a.P_table(), variant);
}

AxiomReport check_derived_properties(const TdlAlgebra& a) {
  const Lattice& l = a.lattice();
  Ops o{l, a.G_table(), a.H_table(), a.F_table(), a.P_table()};
  const Element zero = l.bottom(), one = l.top();
  Checker c(l);
  axioms_t9(c, o);
  c.binary("t10", [&](Element x, Element y) { return o.leq(o.j(o.G[x], o.G[y]), o.G[o.j(x, y)]); });
  c.binary("t10", [&](Element x, Element y) { return o.leq(o.j(o.H[x], o.H[y]), o.H[o.j(x, y)]); });
  c.binary("t11", [&](Element x, Element y) { return o.leq(o.F[o.m(x, y)], o.m(o.F[x], o.F[y])); });
  c.binary("t11", [&](Element x, Element y) { return o.leq(o.P[o.m(x, y)], o.m(o.P[x], o.P[y])); });
  c.binary("t12", [&](Element x, Element y) { return o.leq(o.m(x, o.F[y]), o.F[o.m(o.P[x], y)]); });
  c.binary("t12", [&](Element x, Element y) { return o.leq(o.m(x, o.P[y]), o.P[o.m(o.F[x], y)]); });
  c.binary("t13", [&](Element x, Element y) {
    return (o.m(o.F[x], y) == zero) == (o.m(x, o.P[y]) == zero);
  });
  c.binary("t14", [&](Element x, Element y) { return o.leq(o.G[o.j(x, o.H[y])], o.j(o.G[x], y)); });
  c.binary("t14", [&](Element x, Element y) { return o.leq(o.H[o.j(x, o.G[y])], o.j(o.H[x], y)); });
  c.binary("t15", [&](Element x, Element y) {
    return (o.j(x, o.G[y]) == one) == (o.j(o.H[x], y) == one);
  });
  axioms_t16_t17(c, o);
  c.unary("t18", [&](Element x) { return o.F[x] == o.F[o.H[o.F[x]]]; });
  c.unary("t18", [&](Element x) { return o.P[x] == o.P[o.G[o.P[x]]]; });
  c.unary("t18", [&](Element x) { return o.G[x] == o.G[o.P[o.G[x]]]; });
  c.unary("t18", [&](Element x) { return o.H[x] == o.H[o.F[o.H[x]]]; });
  return c.take();
}

Element d_op(const TdlAlgebra& a, Element x) { return a.meet(a.meet(a.G(x), x), a.H(x)); }
Element dhat_op(const TdlAlgebra& a, Element x) { return a.join(a.join(a.F(x), x), a.P(x)); }

Element d_iter(const TdlAlgebra& a, Element x, int n) {
  for (int i = 0; i < n; ++i) {
    Element next = d_op(a, x);
    if (next == x) break;
    x = next;
  }
  return x;
}

Element dhat_iter(const TdlAlgebra& a, Element x, int n) {
  for (int i = 0; i < n; ++i) {
    Element next = dhat_op(a, x);
    if (next == x) break;
    x = next;
  }
  return x;
}

Subset d_invariants(const TdlAlgebra& a) {
  Subset fixed, hat_fixed;
  for (Element x = 0; x < a.size(); ++x) {
    if (d_op(a, x) == x) fixed = fixed.with(x);
    if (dhat_op(a, x) == x) hat_fixed = hat_fixed.with(x);
  }
  if (fixed != hat_fixed) throw InternalError("fixed points of d and dhat differ");
  if (!fixed.contains(a.bottom()) || !fixed.contains(a.top()))
    throw InternalError("d-invariant elements miss a bound");
  for (Element x : fixed)
    for (Element y : fixed)
      if (!fixed.contains(a.meet(x, y)) || !fixed.contains(a.join(x, y)))
        throw InternalError("d-invariant elements are not a sublattice");
  return fixed;
}

bool is_lattice_filter(const Lattice& l, Subset s) {
  if (!s.contains(l.top())) return false;
  if (up_closure(l.order(), s) != s) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(l.meet(x, y))) return false;
  return true;
}

bool is_lattice_ideal(const Lattice& l, Subset s) {
  if (!s.contains(l.bottom())) return false;
  if (down_closure(l.order(), s) != s) return false;
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(l.join(x, y))) return false;
  return true;
}

bool is_tense_filter(const TdlAlgebra& a, Subset s) {
  if (!is_lattice_filter(a.lattice(), s)) return false;
  for (Element x : s)
    if (!s.contains(a.G(x)) || !s.contains(a.H(x))) return false;
  return true;
}

bool is_tense_ideal(const TdlAlgebra& a, Subset s) {
  if (!is_lattice_ideal(a.lattice(), s)) return false;
  for (Element x : s)
    if (!s.contains(a.F(x)) || !s.contains(a.P(x))) return false;
  return true;
}

Subset generate_tense_filter(const TdlAlgebra& a, Subset x) {
  if (x.empty()) throw EmptyGenerator();
  // The filter generated by d^p(X) is the principal filter of d^p of the
  // meet of X, and these filters form an increasing chain.
  Element m = a.lattice().meet_of(x);
  Subset out = a.lattice().order().up(m);
  for (int p = 0; p < a.size(); ++p) {
    Element next = d_op(a, m);
    if (next == m) break;
    m = next;
    out |= a.lattice().order().up(m);
  }
  return out;
}

Subset generate_tense_ideal(const TdlAlgebra& a, Subset x) {
  if (x.empty()) throw EmptyGenerator();
  Element m = a.lattice().join_of(x);
  Subset out = a.lattice().order().down(m);
  for (int p = 0; p < a.size(); ++p) {
    Element next = dhat_op(a, m);
    if (next == m) break;
    m = next;
    out |= a.lattice().order().down(m);
  }
  return out;
}

std::vector<Subset> all_tense_filters(const TdlAlgebra& a) {
  std::vector<Subset> out;
  for (Element x = 0; x < a.size(); ++x) {
    Subset f = a.lattice().order().up(x);
    if (is_tense_filter(a, f)) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subset> all_tense_ideals(const TdlAlgebra& a) {
  std::vector<Subset> out;
  for (Element x = 0; x < a.size(); ++x) {
    Subset i = a.lattice().order().down(x);
    if (is_tense_ideal(a, i)) out.push_back(i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

BooleanPart boolean_elements(const TdlAlgebra& a) {
  const Lattice& l = a.lattice();
  Subset b = complemented_elements(l);
  Lattice sub = sublattice(l, b);
  std::vector<Element> embed = b.elements();
  std::vector<Element> index(a.size(), -1);
  for (std::size_t i = 0; i < embed.size(); ++i) index[embed[i]] = static_cast<Element>(i);
  auto restrict = [&](const OperatorTable& t) {
    OperatorTable r;
    for (Element x : embed) {
      if (index[t[x]] < 0) throw InternalError("tense operator leaves the complemented elements");
      r.push_back(index[t[x]]);
    }
    return r;
  };
  TdlAlgebra alg = TdlAlgebra::unchecked(sub, restrict(a.G_table()), restrict(a.H_table()),
                                         restrict(a.F_table()), restrict(a.P_table()));
  auto complement = [&](Element x) {
    for (Element y = 0; y < sub.size(); ++y)
      if (sub.meet(x, y) == sub.bottom() && sub.join(x, y) == sub.top()) return y;
    throw InternalError("element of the Boolean part has no complement");
  };
  for (Element x = 0; x < sub.size(); ++x) {
    if (alg.F(x) != complement(alg.G(complement(x))) ||
        alg.P(x) != complement(alg.H(complement(x))))
      throw InternalError("F or P is not the complement-conjugate of G or H");
  }
  return {b, std::move(alg), std::move(embed)};
}

std::optional<std::string> de_morgan_failure(const Lattice& l, const OperatorTable& neg,
                                             const OperatorTable& G, const OperatorTable& H,
                                             const OperatorTable& F, const OperatorTable& P) {
  for (Element x = 0; x < l.size(); ++x) {
    if (neg[neg[x]] != x) return "~~" + l.label(x) + " differs from " + l.label(x);
    if (F[x] != neg[G[neg[x]]]) return "F" + l.label(x) + " differs from ~G~" + l.label(x);
    if (P[x] != neg[H[neg[x]]]) return "P" + l.label(x) + " differs from ~H~" + l.label(x);
    for (Element y = 0; y < l.size(); ++y)
      if (neg[l.join(x, y)] != l.meet(neg[x], neg[y]))
        return "~(" + l.label(x) + " v " + l.label(y) + ") differs from ~" + l.label(x) +
               " ^ ~" + l.label(y);
  }
  return std::nullopt;
}

ClassReport classify(const TdlAlgebra& a) {
  ClassReport r;
  r.boolean = complemented_elements(a.lattice()) == a.lattice().all();
  if (r.boolean) boolean_elements(a);  // asserts F = ~G~ and P = ~H~ on B(A) = A
  r.heyting = true;
  r.imp = heyting_implication(a.lattice());
  if (a.neg()) {
    if (auto failure = de_morgan_failure(a.lattice(), *a.neg(), a.G_table(), a.H_table(),
                                         a.F_table(), a.P_table()))
      throw DeMorganLawViolation(*failure);
    r.demorgan = true;
  }
  return r;
}

std::vector<OperatorTable> de_morgan_involutions(const Lattice& l) {
  const int n = l.size();
  std::vector<OperatorTable> out;
  OperatorTable t(n, -1);
  std::function<void(Element)> rec = [&](Element x) {
    if (x == n) {
      out.push_back(t);
      return;
    }
    if (t[x] >= 0) {
      rec(x + 1);
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (t[y] >= 0) continue;
      t[x] = y;
      t[y] = x;
      // Order-reversing on every pair decided so far.
      bool ok = true;
      for (Element z = 0; z < n && ok; ++z) {
        if (t[z] < 0) continue;
        for (Element w : {x, y})
          if ((l.leq(z, w) && !l.leq(t[w], t[z])) || (l.leq(w, z) && !l.leq(t[z], t[w])))
            ok = false;
      }
      if (ok) rec(x + 1);
      t[x] = -1;
      t[y] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

OperatorTable left_adjoint(const Lattice& l, const OperatorTable& G) {
  check_table(l, G, "G");
  OperatorTable P(l.size());
  for (Element x = 0; x < l.size(); ++x) {
    Subset s;
    for (Element y = 0; y < l.size(); ++y)
      if (l.leq(x, G[y])) s = s.with(y);
    if (s.empty()) throw NoAdjoint(x);
    Element m = l.meet_of(s);
    if (!s.contains(m)) throw NoAdjoint(x);
    P[x] = m;
  }
  return P;
}

std::vector<OperatorTable> meet_preserving_maps(const Lattice& l) {
  const int n = l.size();
  // Assign values bottom-up along a linear extension so that x ∧ y is always
  // decided before both x and y.
  std::vector<Element> order(n);
  for (Element x = 0; x < n; ++x) order[x] = x;
  std::stable_sort(order.begin(), order.end(), [&](Element a, Element b) {
    return l.order().down(a).size() < l.order().down(b).size();
  });
  std::vector<OperatorTable> out;
  OperatorTable t(n, -1);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == order.size()) {
      out.push_back(t);
      return;
    }
    Element x = order[i];
    for (Element v = 0; v < n; ++v) {
      if (x == l.top() && v != l.top()) continue;
      bool ok = true;
      for (std::size_t k = 0; k < i && ok; ++k) {
        Element y = order[k];
        ok = t[l.meet(x, y)] == l.meet(v, t[y]);
      }
      if (!ok) continue;
      t[x] = v;
      // meet(x, x) = x needs no check; meets with later elements are
      // checked when those are assigned.
      rec(i + 1);
      t[x] = -1;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TdlAlgebra> enumerate_tdl_algebras(const Lattice& l, int max_size) {
  if (l.size() > max_size)
    throw SizeLimit("lattice has " + std::to_string(l.size()) + " elements; bound is " +
                    std::to_string(max_size));
  std::vector<OperatorTable> maps = meet_preserving_maps(l);
  std::vector<OperatorTable> adjoints;
  adjoints.reserve(maps.size());
  for (const OperatorTable& g : maps) adjoints.push_back(left_adjoint(l, g));
  const int n = l.size();
  // half(g, h): the G-half of t4 and t8 with F the adjoint of h. The H-halves
  // are half(h, g). t3 and t7 hold by adjunction.
  auto half = [&](std::size_t gi, std::size_t hi) {
    const OperatorTable& G = maps[gi];
    const OperatorTable& F = adjoints[hi];
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        if (!l.leq(G[l.join(x, y)], l.join(G[x], F[y]))) return false;
        if (!l.leq(l.meet(G[x], F[y]), F[l.meet(x, y)])) return false;
      }
    return true;
  };
  const std::size_t m = maps.size();
  std::vector<char> compatible(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) compatible[i * m + j] = half(i, j);
  std::vector<TdlAlgebra> out;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (compatible[i * m + j] && compatible[j * m + i])
        out.push_back(TdlAlgebra::unchecked(l, maps[i], maps[j], adjoints[j], adjoints[i]));
  return out;
}

std::vector<TdlAlgebra> algebra_census(int max_size) {
  std::vector<TdlAlgebra> out;
  for (const LatticeEntry& e : distributive_lattices(max_size)) {
    std::vector<TdlAlgebra> some = enumerate_tdl_algebras(e.lattice, max_size);
    out.insert(out.end(), some.begin(), some.end());
  }
  return out;
}

TdlAlgebra identity_algebra(const Lattice& l) {
  OperatorTable id(l.size());
  for (Element x = 0; x < l.size(); ++x) id[x] = x;
  return TdlAlgebra::unchecked(l, id, id, id, id);
}

TdlAlgebra constant_algebra(const Lattice& l) {
  OperatorTable one(l.size(), l.top()), zero(l.size(), l.bottom());
  return TdlAlgebra::unchecked(l, one, one, zero, zero);
}

}  // namespace tdl
