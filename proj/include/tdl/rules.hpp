// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string_view>
#include <vector>

#include "tdl/formula.hpp"

namespace tdl {

// One rule schema written once and instantiated over any term type T: the
// proof checker uses formulas, the soundness sweep uses term functions.
// Contexts are lists; duplicates are harmless because sequent sides are
// compared as sets.
template <class T>
struct SchemaSequent {
  std::vector<T> left;
  std::vector<T> right;
};

template <class T>
struct SchemaArgs {
  T alpha{};
  T beta{};
  std::vector<T> gamma;
  std::vector<T> delta;
};

template <class T>
struct SchemaInstance {
  std::vector<SchemaSequent<T>> premises;
  SchemaSequent<T> conclusion;
};

struct RuleInfo {
  std::string_view name;
  bool alpha = false;
  bool beta = false;
  bool gamma = false;
  bool delta = false;
  bool derived = false;
  unsigned calculi = 0;  // bit i set when the rule belongs to Calculus(i)
};

inline constexpr unsigned kAll = 0b1111;
inline constexpr unsigned bit(Calculus c) { return 1U << static_cast<unsigned>(c); }

inline const std::vector<RuleInfo>& rule_table() {
  constexpr unsigned ci = bit(Calculus::ltc) | bit(Calculus::lti);
  static const std::vector<RuleInfo> table = {
      {"id", true, false, false, false, false, kAll},
      {"bot=>", false, false, false, false, false, kAll},
      {"=>top", false, false, false, false, false, kAll},
      {"we_i", true, false, true, true, false, kAll},
      {"we_d", true, false, true, true, false, kAll},
      {"cut", true, false, true, true, false, kAll},
      {"&=>", true, true, true, true, false, kAll},
      {"=>&", true, true, true, true, false, kAll},
      {"|=>", true, true, true, true, false, kAll},
      {"=>|", true, true, true, true, false, kAll},
      {"G*", true, false, true, true, false, kAll},
      {"*F", true, false, true, true, false, kAll},
      {"H*", true, false, true, true, false, kAll},
      {"*P", true, false, true, true, false, kAll},
      {"PG", true, false, false, true, false, kAll},
      {"GP", true, false, true, false, false, kAll},
      {"FH", true, false, false, true, false, kAll},
      {"HF", true, false, true, false, false, kAll},
      {"~=>", true, false, true, true, false, ci},
      {"=>~", true, false, true, true, false, ci},
      {"->=>", true, true, true, true, false, ci},
      {"=>->", true, true, true, true, false, ci},
      {"~", true, true, false, false, false, bit(Calculus::ltdm)},
      {"~~=>", true, false, true, true, false, bit(Calculus::ltdm)},
      {"=>~~", true, false, true, true, false, bit(Calculus::ltdm)},
      {"mG", true, false, true, false, true, kAll},
      {"mH", true, false, true, false, true, kAll},
      {"mF", true, false, false, true, true, kAll},
      {"mP", true, false, false, true, true, kAll},
      {"G", true, false, false, false, true, kAll},
      {"H", true, false, false, false, true, kAll},
      {"F", true, false, false, false, true, kAll},
      {"P", true, false, false, false, true, kAll},
      {"AdG", true, true, false, false, true, kAll},
      {"AdH", true, true, false, false, true, kAll},
      {"AdP", true, true, false, false, true, kAll},
      {"AdF", true, true, false, false, true, kAll},
  };
  return table;
}

inline const RuleInfo* find_rule(std::string_view name, Calculus c) {
  for (const RuleInfo& r : rule_table())
    if (r.name == name && (r.calculi & bit(c))) return &r;
  return nullptr;
}

// Ops must provide G, H, F, P, neg, tilde (unary), conj, disj, imp
// (binary), top() and bot().
template <class T, class Ops>
SchemaInstance<T> instantiate(std::string_view rule, Calculus calc, const Ops& o,
                              const SchemaArgs<T>& x) {
  using Seq = SchemaSequent<T>;
  const T& a = x.alpha;
  const T& b = x.beta;
  const std::vector<T>& g = x.gamma;
  const std::vector<T>& d = x.delta;
  auto plus = [](std::vector<T> v, std::initializer_list<T> extra) {
    v.insert(v.end(), extra.begin(), extra.end());
    return v;
  };
  auto map = [](const std::vector<T>& v, auto f) {
    std::vector<T> out;
    out.reserve(v.size());
    for (const T& t : v) out.push_back(f(t));
    return out;
  };
  auto G = [&](const T& t) { return o.G(t); };
  auto H = [&](const T& t) { return o.H(t); };
  auto F = [&](const T& t) { return o.F(t); };
  auto P = [&](const T& t) { return o.P(t); };
  const bool intuitionistic = calc == Calculus::lti;

  if (rule == "id") return {{}, Seq{{a}, {a}}};
  if (rule == "bot=>") return {{}, Seq{{o.bot()}, {}}};
  if (rule == "=>top") return {{}, Seq{{}, {o.top()}}};
  if (rule == "we_i") return {{Seq{g, d}}, Seq{plus(g, {a}), d}};
  if (rule == "we_d") return {{Seq{g, d}}, Seq{g, plus(d, {a})}};
  if (rule == "cut") return {{Seq{g, plus(d, {a})}, Seq{plus(g, {a}), d}}, Seq{g, d}};
  if (rule == "&=>") return {{Seq{plus(g, {a, b}), d}}, Seq{plus(g, {o.conj(a, b)}), d}};
  if (rule == "=>&")
    return {{Seq{g, plus(d, {a})}, Seq{g, plus(d, {b})}}, Seq{g, plus(d, {o.conj(a, b)})}};
  if (rule == "|=>")
    return {{Seq{plus(g, {a}), d}, Seq{plus(g, {b}), d}}, Seq{plus(g, {o.disj(a, b)}), d}};
  if (rule == "=>|") return {{Seq{g, plus(d, {a, b})}}, Seq{g, plus(d, {o.disj(a, b)})}};
  if (rule == "G*") return {{Seq{g, plus(d, {a})}}, Seq{map(g, G), plus(map(d, F), {G(a)})}};
  if (rule == "*F") return {{Seq{plus(g, {a}), d}}, Seq{plus(map(g, G), {F(a)}), map(d, F)}};
  if (rule == "H*") return {{Seq{g, plus(d, {a})}}, Seq{map(g, H), plus(map(d, P), {H(a)})}};
  if (rule == "*P") return {{Seq{plus(g, {a}), d}}, Seq{plus(map(g, H), {P(a)}), map(d, P)}};
  if (rule == "PG") return {{Seq{{a}, d}}, Seq{{P(G(a))}, d}};
  if (rule == "GP") return {{Seq{g, {a}}}, Seq{g, {G(P(a))}}};
  if (rule == "FH") return {{Seq{{a}, d}}, Seq{{F(H(a))}, d}};
  if (rule == "HF") return {{Seq{g, {a}}}, Seq{g, {H(F(a))}}};
  if (rule == "~=>") {
    // Single succedent in the intuitionistic system, exactly as printed.
    if (intuitionistic) return {{Seq{g, {a}}}, Seq{plus(g, {o.neg(a)}), {}}};
    return {{Seq{g, plus(d, {a})}}, Seq{plus(g, {o.neg(a)}), d}};
  }
  if (rule == "=>~") {
    if (intuitionistic) return {{Seq{plus(g, {a}), {}}}, Seq{g, {o.neg(a)}}};
    return {{Seq{plus(g, {a}), d}}, Seq{g, plus(d, {o.neg(a)})}};
  }
  if (rule == "->=>")
    return {{Seq{g, plus(d, {a})}, Seq{plus(g, {b}), d}}, Seq{plus(g, {o.imp(a, b)}), d}};
  if (rule == "=>->") return {{Seq{plus(g, {a}), plus(d, {b})}}, Seq{g, plus(d, {o.imp(a, b)})}};
  if (rule == "~") return {{Seq{{a}, {b}}}, Seq{{o.tilde(b)}, {o.tilde(a)}}};
  if (rule == "~~=>") return {{Seq{plus(g, {a}), d}}, Seq{plus(g, {o.tilde(o.tilde(a))}), d}};
  if (rule == "=>~~") return {{Seq{g, plus(d, {a})}}, Seq{g, plus(d, {o.tilde(o.tilde(a))})}};
  if (rule == "mG") return {{Seq{g, {a}}}, Seq{map(g, G), {G(a)}}};
  if (rule == "mH") return {{Seq{g, {a}}}, Seq{map(g, H), {H(a)}}};
  if (rule == "mF") return {{Seq{{a}, d}}, Seq{{F(a)}, map(d, F)}};
  if (rule == "mP") return {{Seq{{a}, d}}, Seq{{P(a)}, map(d, P)}};
  if (rule == "G") return {{Seq{{}, {a}}}, Seq{{}, {G(a)}}};
  if (rule == "H") return {{Seq{{}, {a}}}, Seq{{}, {H(a)}}};
  if (rule == "F") return {{Seq{{a}, {}}}, Seq{{F(a)}, {}}};
  if (rule == "P") return {{Seq{{a}, {}}}, Seq{{P(a)}, {}}};
  if (rule == "AdG") return {{Seq{{P(a)}, {b}}}, Seq{{a}, {G(b)}}};
  if (rule == "AdH") return {{Seq{{F(a)}, {b}}}, Seq{{a}, {H(b)}}};
  if (rule == "AdP") return {{Seq{{a}, {G(b)}}}, Seq{{P(a)}, {b}}};
  if (rule == "AdF") return {{Seq{{a}, {H(b)}}}, Seq{{F(a)}, {b}}};
  return {};
}

}  // namespace tdl
