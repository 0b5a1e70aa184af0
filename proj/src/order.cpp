// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/order.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace tdl {

int Relation::pair_count() const {
  int n = 0;
  for (Subset s : succ) n += s.size();
  return n;
}

Relation Relation::transpose() const {
  Relation t(size);
  for (Element x = 0; x < size; ++x)
    for (Element y : succ[x]) t.add(y, x);
  return t;
}

Subset Relation::image(Subset s) const {
  Subset out;
  for (Element x : s) out |= succ[x];
  return out;
}

std::vector<std::pair<Element, Element>> Relation::pairs() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size; ++x)
    for (Element y : succ[x]) out.emplace_back(x, y);
  return out;
}

std::string Poset::label(Element x) const {
  if (static_cast<std::size_t>(x) < labels_.size()) return labels_[x];
  return std::to_string(x);
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < size_; ++x) {
    for (Element y : up_[x].without(x)) {
      if ((up_[x].without(x) & down_[y].without(y)).empty()) out.emplace_back(x, y);
    }
  }
  return out;
}

Poset build_poset(int size, std::span<const std::pair<Element, Element>> leq_pairs,
                  std::vector<std::string> labels) {
  if (size < 0 || size > kMaxCarrier)
    throw InputError("poset size " + std::to_string(size) + " outside 0.." +
                     std::to_string(kMaxCarrier));
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(size))
    throw InputError("label count does not match poset size");
  Poset p;
  p.size_ = size;
  p.up_.resize(size);
  for (Element x = 0; x < size; ++x) p.up_[x] = Subset::singleton(x);
  for (auto [a, b] : leq_pairs) {
    if (a < 0 || b < 0 || a >= size || b >= size)
      throw InputError("order pair (" + std::to_string(a) + "," + std::to_string(b) +
                       ") out of range");
    p.up_[a] = p.up_[a].with(b);
  }
  // Warshall closure on rows.
  for (Element k = 0; k < size; ++k)
    for (Element x = 0; x < size; ++x)
      if (p.up_[x].contains(k)) p.up_[x] |= p.up_[k];
  p.down_.assign(size, Subset());
  for (Element x = 0; x < size; ++x)
    for (Element y : p.up_[x]) p.down_[y] = p.down_[y].with(x);
  for (Element x = 0; x < size; ++x) {
    Subset both = (p.up_[x] & p.down_[x]).without(x);
    if (!both.empty()) {
      Element y = both.first();
      throw CycleError("order is not antisymmetric: " + std::to_string(x) + " and " +
                       std::to_string(y) + " are mutually below each other");
    }
  }
  p.labels_ = std::move(labels);
  return p;
}

Poset inclusion_order(std::span<const Subset> family, std::vector<std::string> labels) {
  std::vector<std::pair<Element, Element>> pairs;
  const int n = static_cast<int>(family.size());
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i != j && family[i].subset_of(family[j])) pairs.emplace_back(i, j);
  return build_poset(n, pairs, std::move(labels));
}

Poset subposet(const Poset& p, Subset s) {
  std::vector<Element> keep = s.elements();
  std::vector<std::pair<Element, Element>> pairs;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (!p.labels().empty()) labels.push_back(p.labels()[keep[i]]);
    for (std::size_t j = 0; j < keep.size(); ++j)
      if (i != j && p.leq(keep[i], keep[j]))
        pairs.emplace_back(static_cast<Element>(i), static_cast<Element>(j));
  }
  return build_poset(static_cast<int>(keep.size()), pairs, std::move(labels));
}

Subset up_closure(const Poset& p, Subset s) {
  Subset out;
  for (Element x : s) out |= p.up(x);
  return out;
}

Subset down_closure(const Poset& p, Subset s) {
  Subset out;
  for (Element x : s) out |= p.down(x);
  return out;
}

bool is_up_set(const Poset& p, Subset s) { return up_closure(p, s) == s; }
bool is_down_set(const Poset& p, Subset s) { return down_closure(p, s) == s; }

SubsetFamily up_sets(const Poset& p) {
  constexpr std::size_t kMaxMembers = std::size_t{1} << 22;
  // Visit elements from the top down so that, when x is decided, every
  // element strictly above it has already been decided.
  std::vector<Element> order(p.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Element a, Element b) { return p.down(a).size() > p.down(b).size(); });
  SubsetFamily fam{p, {}};
  std::function<void(std::size_t, Subset)> rec = [&](std::size_t i, Subset cur) {
    if (i == order.size()) {
      if (fam.members.size() >= kMaxMembers) throw SizeLimit("too many up-sets");
      fam.members.push_back(cur);
      return;
    }
    Element x = order[i];
    rec(i + 1, cur);
    if (p.up(x).without(x).subset_of(cur)) rec(i + 1, cur.with(x));
  };
  rec(0, Subset());
  std::sort(fam.members.begin(), fam.members.end());
  return fam;
}

Element Lattice::meet_of(Subset s) const {
  Element acc = top_;
  for (Element x : s) acc = meet(acc, x);
  return acc;
}

Element Lattice::join_of(Subset s) const {
  Element acc = bottom_;
  for (Element x : s) acc = join(acc, x);
  return acc;
}

Lattice lattice_from_poset(const Poset& p) {
  const int n = p.size();
  Lattice l;
  l.order_ = p;
  bool has_bottom = false, has_top = false;
  for (Element x = 0; x < n; ++x) {
    if (p.up(x) == p.all()) { l.bottom_ = x; has_bottom = true; }
    if (p.down(x) == p.all()) { l.top_ = x; has_top = true; }
  }
  if (!has_bottom || !has_top) throw NoBounds("order has no least or no greatest element");
  l.meet_.assign(static_cast<std::size_t>(n) * n, 0);
  l.join_.assign(static_cast<std::size_t>(n) * n, 0);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Subset lower = p.down(x) & p.down(y);
      Subset upper = p.up(x) & p.up(y);
      Element glb = -1, lub = -1;
      for (Element m : lower)
        if (p.down(m) == lower) { glb = m; break; }
      for (Element m : upper)
        if (p.up(m) == upper) { lub = m; break; }
      if (glb < 0 || lub < 0)
        throw NotLattice("elements " + p.label(x) + " and " + p.label(y) + " have no " +
                         (glb < 0 ? "greatest lower bound" : "least upper bound"));
      l.meet_[x * n + y] = glb;
      l.join_[x * n + y] = lub;
    }
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z)
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)))
          throw NotDistributive("distributivity fails at (" + p.label(x) + "," + p.label(y) +
                                "," + p.label(z) + ")");
  return l;
}

Lattice upset_lattice(const Poset& p) {
  SubsetFamily fam = up_sets(p);
  return lattice_from_poset(inclusion_order(fam.members));
}

Subset join_irreducibles(const Lattice& l) {
  Subset out;
  for (Element x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    if (l.join_of(l.order().down(x).without(x)) != x) out = out.with(x);
  }
  return out;
}

Subset complemented_elements(const Lattice& l) {
  Subset out;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (l.meet(x, y) == l.bottom() && l.join(x, y) == l.top()) {
        out = out.with(x);
        break;
      }
  return out;
}

std::vector<Element> heyting_implication(const Lattice& l) {
  const int n = l.size();
  std::vector<Element> imp(static_cast<std::size_t>(n) * n);
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Subset candidates;
      for (Element z = 0; z < n; ++z)
        if (l.leq(l.meet(z, x), y)) candidates = candidates.with(z);
      imp[x * n + y] = l.join_of(candidates);
    }
  return imp;
}

Lattice sublattice(const Lattice& l, Subset s) {
  if (!s.contains(l.bottom()) || !s.contains(l.top()))
    throw PreconditionError("sublattice must contain both bounds");
  for (Element x : s)
    for (Element y : s)
      if (!s.contains(l.meet(x, y)) || !s.contains(l.join(x, y)))
        throw PreconditionError("subset is not closed under meet and join");
  return lattice_from_poset(subposet(l.order(), s));
}

namespace {

std::vector<bool> code_under(const Poset& p, const std::vector<Element>& perm) {
  // perm[new] = old
  const int n = p.size();
  std::vector<bool> code;
  code.reserve(static_cast<std::size_t>(n) * n);
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j)
      if (i != j) code.push_back(p.leq(perm[i], perm[j]));
  return code;
}

Poset relabel(const Poset& p, const std::vector<Element>& perm) {
  std::vector<Element> inverse(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inverse[perm[i]] = static_cast<Element>(i);
  std::vector<std::pair<Element, Element>> pairs;
  for (Element x = 0; x < p.size(); ++x)
    for (Element y : p.up(x)) pairs.emplace_back(inverse[x], inverse[y]);
  return build_poset(p.size(), pairs);
}

std::vector<Element> canonical_perm(const Poset& p) {
  std::vector<Element> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Element> best = perm;
  std::vector<bool> best_code = code_under(p, perm);
  while (std::next_permutation(perm.begin(), perm.end())) {
    std::vector<bool> c = code_under(p, perm);
    if (c < best_code) {
      best_code = std::move(c);
      best = perm;
    }
  }
  return best;
}

int down_set_count(const Poset& p) {
  int count = 0;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << p.size()); ++b)
    if (is_down_set(p, Subset(b))) ++count;
  return count;
}

// Naturally labeled posets: point k is added with a down-set of {0..k-1} as
// its strict down-set. `keep` prunes partial posets; it must be monotone
// (a rejected poset has no accepted extension).
void grow_posets(int target, const std::function<bool(const Poset&)>& keep,
                 std::map<std::vector<bool>, Poset>& out) {
  std::function<void(const Poset&)> rec = [&](const Poset& p) {
    if (!keep(p)) return;
    if (p.size() == target) {
      std::vector<Element> perm = canonical_perm(p);
      out.emplace(code_under(p, perm), relabel(p, perm));
      return;
    }
    const int k = p.size();
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << k); ++b) {
      Subset below(b);
      if (!is_down_set(p, below)) continue;
      std::vector<std::pair<Element, Element>> pairs;
      for (Element x = 0; x < k; ++x)
        for (Element y : p.up(x)) pairs.emplace_back(x, y);
      for (Element x : below) pairs.emplace_back(x, k);
      rec(build_poset(k + 1, pairs));
    }
  };
  rec(build_poset(0, {}));
}

}  // namespace

std::vector<bool> canonical_code(const Poset& p) { return code_under(p, canonical_perm(p)); }

std::vector<Poset> posets_up_to_iso(int points) {
  if (points < 0 || points > 7) throw SizeLimit("poset census supports at most 7 points");
  std::map<std::vector<bool>, Poset> found;
  grow_posets(points, [](const Poset&) { return true; }, found);
  std::vector<Poset> out;
  for (auto& [code, p] : found) out.push_back(p);
  return out;
}

std::vector<std::vector<Element>> automorphisms(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<Element>> out;
  std::vector<Element> img(n, -1);
  Subset used;
  std::function<void(Element)> rec = [&](Element x) {
    if (x == n) {
      out.push_back(img);
      return;
    }
    for (Element y = 0; y < n; ++y) {
      if (used.contains(y)) continue;
      bool ok = true;
      for (Element z = 0; z < x && ok; ++z)
        ok = p.leq(z, x) == p.leq(img[z], y) && p.leq(x, z) == p.leq(y, img[z]);
      if (!ok) continue;
      img[x] = y;
      used = used.with(y);
      rec(x + 1);
      used = used.without(y);
    }
  };
  rec(0);
  return out;
}

std::vector<LatticeEntry> distributive_lattices(int max_size) {
  if (max_size > 16) throw SizeLimit("lattice census supports at most 16 elements");
  std::vector<LatticeEntry> out;
  if (max_size < 1) return out;
  // A poset with k points has at least k+1 down-sets, so k < max_size.
  for (int points = 0; points < max_size; ++points) {
    std::map<std::vector<bool>, Poset> found;
    grow_posets(points, [&](const Poset& p) { return down_set_count(p) <= max_size; }, found);
    for (auto& [code, p] : found) out.push_back({p, upset_lattice(p)});
  }
  std::stable_sort(out.begin(), out.end(), [](const LatticeEntry& a, const LatticeEntry& b) {
    return a.lattice.size() < b.lattice.size();
  });
  return out;
}

}  // namespace tdl
