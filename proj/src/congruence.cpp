// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tdl {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  Congruence partition() {
    std::vector<int> labels(parent.size());
    for (std::size_t i = 0; i < parent.size(); ++i) labels[i] = find(static_cast<int>(i));
    return Congruence::from_labels(labels);
  }
};

// d^∞(x): d is deflationary, so the orbit stabilises within |A| steps.
Element d_limit(const TdlAlgebra& a, Element x) { return d_iter(a, x, a.size()); }
Element dhat_limit(const TdlAlgebra& a, Element x) { return dhat_iter(a, x, a.size()); }

std::vector<Element> binary_table(const Lattice& l, bool meet) {
  const int n = l.size();
  std::vector<Element> t(static_cast<std::size_t>(n * n));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) t[x * n + y] = meet ? l.meet(x, y) : l.join(x, y);
  return t;
}

bool is_si(const std::vector<Congruence>& cs) { return monolith_of(cs).has_value(); }

}  // namespace

Congruence Congruence::identity(int n) {
  Congruence c;
  c.block.resize(static_cast<std::size_t>(n));
  std::iota(c.block.begin(), c.block.end(), 0);
  return c;
}

Congruence Congruence::total(int n) {
  Congruence c;
  c.block.assign(static_cast<std::size_t>(n), 0);
  return c;
}

Congruence Congruence::from_labels(const std::vector<int>& labels) {
  Congruence c;
  c.block.resize(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](auto& p) { return p.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<int>(seen.size()));
      c.block[i] = seen.back().second;
    } else {
      c.block[i] = it->second;
    }
  }
  return c;
}

int Congruence::block_count() const {
  return block.empty() ? 0 : *std::max_element(block.begin(), block.end()) + 1;
}

bool Congruence::refines(const Congruence& o) const {
  for (int a = 0; a < size(); ++a)
    for (int b = a + 1; b < size(); ++b)
      if (related(a, b) && !o.related(a, b)) return false;
  return true;
}

Congruence Congruence::join(const Congruence& o) const {
  UnionFind uf(size());
  // Elements sharing a block in either partition are merged.
  std::vector<int> first_a(static_cast<std::size_t>(size()), -1), first_b = first_a;
  for (int x = 0; x < size(); ++x) {
    int& fa = first_a[block[x]];
    if (fa < 0) fa = x; else uf.unite(fa, x);
    int& fb = first_b[o.block[x]];
    if (fb < 0) fb = x; else uf.unite(fb, x);
  }
  return uf.partition();
}

void sort_congruences(std::vector<Congruence>& cs) {
  std::sort(cs.begin(), cs.end(), [](const Congruence& x, const Congruence& y) {
    if (x.block_count() != y.block_count()) return x.block_count() > y.block_count();
    return x.block < y.block;
  });
}

Signature heyting_signature(const Lattice& l) {
  Signature s;
  s.size = l.size();
  s.binary = {binary_table(l, true), binary_table(l, false), heyting_implication(l)};
  return s;
}

Signature tense_signature(const TdlAlgebra& a) {
  Signature s;
  s.size = a.size();
  s.unary = {a.G_table(), a.H_table(), a.F_table(), a.P_table()};
  s.binary = {binary_table(a.lattice(), true), binary_table(a.lattice(), false)};
  return s;
}

Signature tense_heyting_signature(const TdlAlgebra& a) {
  Signature s = tense_signature(a);
  s.binary.push_back(heyting_implication(a.lattice()));
  return s;
}

bool is_compatible(const Signature& s, const Congruence& c) {
  const int n = s.size;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!c.related(x, y)) continue;
      for (const auto& f : s.unary)
        if (!c.related(f[x], f[y])) return false;
      for (const auto& f : s.binary)
        for (Element z = 0; z < n; ++z)
          if (!c.related(f[x * n + z], f[y * n + z]) || !c.related(f[z * n + x], f[z * n + y]))
            return false;
    }
  return true;
}

Congruence principal_congruence(const Signature& s, Element a, Element b) {
  const int n = s.size;
  UnionFind uf(n);
  uf.unite(a, b);
  // Translations of related pairs are merged until nothing changes; unary
  // polynomials of this form generate the congruence.
  bool changed = true;
  while (changed) {
    changed = false;
    for (Element x = 0; x < n; ++x)
      for (Element y = x + 1; y < n; ++y) {
        if (uf.find(x) != uf.find(y)) continue;
        for (const auto& f : s.unary) changed |= uf.unite(f[x], f[y]);
        for (const auto& f : s.binary)
          for (Element z = 0; z < n; ++z) {
            changed |= uf.unite(f[x * n + z], f[y * n + z]);
            changed |= uf.unite(f[z * n + x], f[z * n + y]);
          }
      }
  }
  return uf.partition();
}

std::vector<Congruence> congruences_of(const Signature& s) {
  if (s.size > 16) throw SizeLimit("congruence closure is limited to 16 elements");
  std::set<Congruence> found;
  found.insert(Congruence::identity(s.size));
  for (Element a = 0; a < s.size; ++a)
    for (Element b = a + 1; b < s.size; ++b) found.insert(principal_congruence(s, a, b));
  std::vector<Congruence> frontier(found.begin(), found.end());
  const std::vector<Congruence> principal = frontier;
  while (!frontier.empty()) {
    std::vector<Congruence> next;
    for (const Congruence& c : frontier)
      for (const Congruence& p : principal) {
        Congruence j = c.join(p);
        if (found.insert(j).second) next.push_back(j);
      }
    frontier = std::move(next);
  }
  std::vector<Congruence> out(found.begin(), found.end());
  sort_congruences(out);
  return out;
}

std::vector<Congruence> congruences_bruteforce(const TdlAlgebra& a) {
  if (a.size() > 8) throw SizeLimit("brute-force congruences are limited to 8 elements");
  return congruences_of(tense_signature(a));
}

std::optional<Congruence> monolith_of(const std::vector<Congruence>& cs) {
  std::optional<Congruence> least;
  for (const Congruence& c : cs) {
    if (c.block_count() == c.size()) continue;
    if (!least || c.refines(*least)) least = c;
  }
  if (!least) return std::nullopt;
  for (const Congruence& c : cs)
    if (c.block_count() != c.size() && !least->refines(c)) return std::nullopt;
  return least;
}

TpsSubsetReport is_tps_subset(const TpsSpace& x, Subset y) {
  TpsSubsetReport rep{y, true, std::nullopt};
  const int n = x.size();
  const Relation inv = x.R.transpose();
  // Some w1, w2 in `pool` with w1 <= target <= w2.
  auto brackets = [&](Subset pool, Element target) {
    bool below = false, above = false;
    for (Element w : pool) {
      below = below || x.order.leq(w, target);
      above = above || x.order.leq(target, w);
    }
    return below && above;
  };
  for (int clause = 1; clause <= 2 && rep.is_tps; ++clause)
    for (Element p = 0; p < n && rep.is_tps; ++p)
      for (Element q = 0; q < n && rep.is_tps; ++q) {
        if (!y.contains(p)) continue;
        // tc1: p R q forces R(p) ∩ Y to bracket q; tc2 is the converse.
        const Relation& r = clause == 1 ? x.R : inv;
        if (!r.has(p, q)) continue;
        if (!brackets(r.succ[p] & y, q)) {
          rep.is_tps = false;
          rep.witness = TpsFailure{p, q, clause == 1 ? "tc1" : "tc2"};
        }
      }
  if (is_up_set(x.order, y) || is_down_set(x.order, y)) {
    bool meet_form = (G_R(x, y) & y & H_R(x, y)) == y;
    bool join_form = (F_R(x, y) | y | P_R(x, y)) == y;
    if (meet_form != rep.is_tps || join_form != rep.is_tps)
      throw InternalError("tPS-set characterisation disagrees for a closed subset");
  }
  return rep;
}

TpsFamily all_tps_subsets(const TpsSpace& x) {
  if (x.size() > 20) throw SizeLimit("tPS-set enumeration is limited to 20 points");
  TpsFamily fam;
  const std::uint64_t count = std::uint64_t{1} << x.size();
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    Subset y(bits);
    if (!is_tps_subset(x, y).is_tps) continue;
    fam.all.push_back(y);
    if (is_up_set(x.order, y)) fam.up.push_back(y);
    if (is_down_set(x.order, y)) fam.down.push_back(y);
  }
  return fam;
}

Subset sigma_points(const DualSpace& d, Element a) {
  Subset s;
  for (std::size_t i = 0; i < d.filters.size(); ++i)
    if (d.filters[i].contains(a)) s = s.with(static_cast<Element>(i));
  return s;
}

Congruence congruence_from_subset(const TdlAlgebra& a, const DualSpace& d, Subset y) {
  if (!y.subset_of(Subset::full(d.space.size())))
    throw InputError("subset mentions points outside the dual space");
  if (!is_tps_subset(d.space, y).is_tps) throw NotTpsSet("subset is not a tPS-set");
  std::vector<int> labels(static_cast<std::size_t>(a.size()));
  for (Element x = 0; x < a.size(); ++x)
    labels[x] = static_cast<int>((sigma_points(d, x) & y).bits());
  Congruence c = Congruence::from_labels(labels);
  if (!is_compatible(tense_signature(a), c))
    throw InternalError("Θ(Y) is not compatible with the operations");
  return c;
}

Congruence congruence_from_subset(const TdlAlgebra& a, Subset y) {
  return congruence_from_subset(a, dual_space(a), y);
}

CongruenceLattice congruence_lattice(const TdlAlgebra& a) {
  if (a.size() > 10) throw SizeLimit("congruence lattices are limited to 10 elements");
  DualSpace d = dual_space(a);
  std::vector<Subset> sets = all_tps_subsets(d.space).all;
  std::vector<std::pair<Congruence, Subset>> pairs;
  for (Subset y : sets) pairs.emplace_back(congruence_from_subset(a, d, y), y);
  for (const auto& [c1, y1] : pairs)
    for (const auto& [c2, y2] : pairs) {
      if (y1 != y2 && c1 == c2) throw InternalError("Θ is not injective on tPS-sets");
      if (y1.subset_of(y2) != c2.refines(c1)) throw InternalError("Θ does not reverse the order");
    }
  CongruenceLattice out;
  for (const auto& p : pairs) out.members.push_back(p.first);
  sort_congruences(out.members);
  for (const Congruence& c : out.members)
    out.dual.push_back(std::find_if(pairs.begin(), pairs.end(), [&](auto& p) { return p.first == c; })->second);
  std::vector<std::pair<Element, Element>> leq;
  for (std::size_t i = 0; i < out.members.size(); ++i)
    for (std::size_t j = 0; j < out.members.size(); ++j)
      if (i != j && out.members[i].refines(out.members[j]))
        leq.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  out.order = build_poset(static_cast<int>(out.members.size()), leq);
  return out;
}

Congruence filter_congruence(const TdlAlgebra& a, Subset s) {
  if (!is_tense_filter(a, s)) throw NotTenseFilter("subset is not a tense filter");
  UnionFind uf(a.size());
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = x + 1; y < a.size(); ++y)
      for (Element m : s)
        if (a.meet(x, m) == a.meet(y, m)) uf.unite(x, y);
  return uf.partition();
}

Congruence ideal_congruence(const TdlAlgebra& a, Subset i) {
  if (!is_tense_ideal(a, i)) throw NotTenseIdeal("subset is not a tense ideal");
  UnionFind uf(a.size());
  for (Element x = 0; x < a.size(); ++x)
    for (Element y = x + 1; y < a.size(); ++y)
      for (Element m : i)
        if (a.join(x, m) == a.join(y, m)) uf.unite(x, y);
  return uf.partition();
}

Subset sigma_of_filter(const DualSpace& d, Subset s) {
  Subset out;
  for (std::size_t t = 0; t < d.filters.size(); ++t)
    if (s.subset_of(d.filters[t])) out = out.with(static_cast<Element>(t));
  return out;
}

Subset rho_of_up_set(const TdlAlgebra& a, const DualSpace& d, Subset y) {
  Subset out;
  for (Element x = 0; x < a.size(); ++x)
    if (y.subset_of(sigma_points(d, x))) out = out.with(x);
  return out;
}

Subset sigma_of_ideal(const DualSpace& d, Subset i) {
  Subset out;
  for (std::size_t t = 0; t < d.filters.size(); ++t)
    if (!i.intersects(d.filters[t])) out = out.with(static_cast<Element>(t));
  return out;
}

Subset rho_of_down_set(const TdlAlgebra& a, const DualSpace& d, Subset z) {
  Subset covered;
  for (Element t : z) covered |= d.filters[t];
  return Subset::full(a.size()) - covered;
}

SimplicityReport is_simple(const TdlAlgebra& a) {
  SimplicityReport rep;
  const Subset bounds = Subset::singleton(a.bottom()).with(a.top());
  rep.clause_d = d_invariants(a) == bounds;
  rep.precheck_fired = !rep.clause_d;

  rep.clause_b = true;
  for (Element x = 0; x < a.size(); ++x) {
    if (x == a.bottom() || x == a.top()) continue;
    if (d_limit(a, x) != a.bottom() || dhat_limit(a, x) != a.top()) rep.clause_b = false;
  }

  const Subset all = Subset::full(a.size());
  auto only = [](std::vector<Subset> got, std::vector<Subset> want) {
    std::sort(want.begin(), want.end());
    want.erase(std::unique(want.begin(), want.end()), want.end());
    return got == want;
  };
  rep.clause_c = only(all_tense_filters(a), {Subset::singleton(a.top()), all}) &&
                 only(all_tense_ideals(a), {Subset::singleton(a.bottom()), all});

  DualSpace d = dual_space(a);
  rep.tps_sets = all_tps_subsets(d.space).all;
  rep.simple = rep.tps_sets.size() == 2;
  return rep;
}

SiReport is_subdirectly_irreducible(const TdlAlgebra& a) {
  SiReport rep;
  DualSpace d = dual_space(a);
  const Subset whole = Subset::full(d.space.size());
  std::vector<Subset> proper;
  for (Subset y : all_tps_subsets(d.space).all)
    if (y != whole) proper.push_back(y);
  for (Subset z : proper) {
    if (std::all_of(proper.begin(), proper.end(), [&](Subset y) { return y.subset_of(z); })) {
      rep.si = true;
      rep.monolith_set = z;
      rep.monolith = congruence_from_subset(a, d, z);
    }
  }
  if (a.size() <= 8) {
    std::optional<Congruence> brute = monolith_of(congruences_bruteforce(a));
    if (brute.has_value() != rep.si || (brute && *brute != *rep.monolith))
      throw InternalError("subdirect irreducibility disagrees with brute force");
  }
  return rep;
}

bool BooleanClauses::consistent() const {
  return simple == d_reaches_zero && simple == filters_and_ideals &&
         simple == d_invariants_trivial && si == bounded_below_coatom;
}

SubclassReport subclass_reports(const TdlAlgebra& a) {
  SubclassReport rep;
  ClassReport cls = classify(a);
  const Element zero = a.bottom(), one = a.top();
  const Subset fixed = d_invariants(a);

  if (cls.boolean && a.size() >= 2) {
    BooleanClauses b;
    SimplicityReport s = is_simple(a);
    b.simple = s.simple;
    b.filters_and_ideals = s.clause_c;
    b.d_invariants_trivial = s.clause_d;
    b.d_reaches_zero = true;
    for (Element x = 0; x < a.size(); ++x)
      if (x != one && d_limit(a, x) != zero) b.d_reaches_zero = false;
    b.si = is_subdirectly_irreducible(a).si;
    for (Element c = 0; c < a.size() && !b.bounded_below_coatom; ++c) {
      if (c == one) continue;
      bool bounds = true;
      for (Element x = 0; x < a.size(); ++x)
        if (x != one && !a.leq(d_limit(a, x), c)) bounds = false;
      b.bounded_below_coatom = bounds;
    }
    rep.boolean = b;
  }

  HeytingClauses h;
  h.si = is_si(congruences_of(tense_heyting_signature(a)));
  const Subset proper = fixed.without(one);
  for (Element u : proper)
    if (std::all_of(proper.begin(), proper.end(), [&](Element x) { return a.leq(x, u); }))
      h.unique_coatom = true;
  h.fixpoints_si = is_si(congruences_of(heyting_signature(sublattice(a.lattice(), fixed))));
  rep.heyting = h;

  if (a.neg()) {
    DeMorganClauses dm;
    DualSpace d = dual_space(a);
    for (Subset s : d.filters) {
      Subset g;
      for (Element x = 0; x < a.size(); ++x)
        if (!s.contains((*a.neg())[x])) g = g.with(x);
      auto it = std::find(d.filters.begin(), d.filters.end(), g);
      if (it == d.filters.end()) throw InternalError("g_A(S) is not a prime filter");
      dm.g.push_back(static_cast<Element>(it - d.filters.begin()));
    }
    dm.preserves_relation = true;
    for (auto [s, t] : d.space.R.pairs())
      if (!d.space.R.has(dm.g[s], dm.g[t])) dm.preserves_relation = false;
    rep.demorgan = dm;
  }
  return rep;
}

}  // namespace tdl
