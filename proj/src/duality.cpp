// Copyright 2026 The tdl Authors
// SPDX-License-Identifier: Apache-2.0

#include "tdl/duality.hpp"

#include <algorithm>
#include <map>

namespace tdl {

Subset G_R(const TdlFrame& x, Subset y) {
  Subset out;
  for (Element p = 0; p < x.size(); ++p)
    if (x.R.succ[p].subset_of(y)) out = out.with(p);
  return out;
}

Subset F_R(const TdlFrame& x, Subset y) {
  Subset out;
  for (Element p = 0; p < x.size(); ++p)
    if (x.R.succ[p].intersects(y)) out = out.with(p);
  return out;
}

Subset H_R(const TdlFrame& x, Subset y) {
  Subset out;
  // p ∈ H(Y) iff every q with q R p lies in Y.
  for (Element p = 0; p < x.size(); ++p) {
    bool all = true;
    for (Element q = 0; q < x.size() && all; ++q)
      if (x.R.has(q, p) && !y.contains(q)) all = false;
    if (all) out = out.with(p);
  }
  return out;
}

Subset P_R(const TdlFrame& x, Subset y) {
  Subset out;
  for (Element p = 0; p < x.size(); ++p)
    for (Element q : y)
      if (x.R.has(q, p)) {
        out = out.with(p);
        break;
      }
  return out;
}

bool is_prime_filter(const Lattice& l, Subset s) {
  if (!is_lattice_filter(l, s) || s.contains(l.bottom())) return false;
  for (Element x = 0; x < l.size(); ++x)
    for (Element y = 0; y < l.size(); ++y)
      if (s.contains(l.join(x, y)) && !s.contains(x) && !s.contains(y)) return false;
  return true;
}

PrimeFilterSpace prime_filter_space(const TdlAlgebra& a) {
  const Lattice& l = a.lattice();
  PrimeFilterSpace x;
  for (Element j : join_irreducibles(l)) x.points.push_back(l.order().up(j));
  std::sort(x.points.begin(), x.points.end());
  if (l.size() <= 10) {
    std::vector<Subset> brute;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << l.size()); ++b)
      if (is_prime_filter(l, Subset(b))) brute.push_back(Subset(b));
    if (brute != x.points) throw InternalError("prime filters differ from join-irreducible filters");
  }
  std::vector<std::string> labels;
  for (Subset s : x.points) labels.push_back("^" + l.label(l.meet_of(s)));
  x.order = inclusion_order(x.points, std::move(labels));
  return x;
}

namespace {

Subset preimage(const OperatorTable& t, Subset s) {
  Subset out;
  for (Element a = 0; a < static_cast<Element>(t.size()); ++a)
    if (s.contains(t[a])) out = out.with(a);
  return out;
}

Relation relation_from(const OperatorTable& box, const OperatorTable& diamond,
                       const std::vector<Subset>& points) {
  const int n = static_cast<int>(points.size());
  Relation r(n);
  for (Element i = 0; i < n; ++i) {
    Subset lo = preimage(box, points[i]);
    Subset hi = preimage(diamond, points[i]);
    for (Element j = 0; j < n; ++j)
      if (lo.subset_of(points[j]) && points[j].subset_of(hi)) r.add(i, j);
  }
  return r;
}

void add_violation(std::vector<Violation>& out, const std::string& tag, Element x,
                   const Poset& p) {
  for (const Violation& v : out)
    if (v.axiom == tag) return;
  out.push_back({tag, {x}, tag + " at " + p.label(x)});
}

}  // namespace

Relation tense_relation(const TdlAlgebra& a, const PrimeFilterSpace& x) {
  Relation r = relation_from(a.G_table(), a.F_table(), x.points);
  Relation hp = relation_from(a.H_table(), a.P_table(), x.points);
  if (hp != r.transpose()) throw InternalError("relation built from H and P is not the inverse of R_A");
  return r;
}

Relation tense_relation(const TdlAlgebra& a) { return tense_relation(a, prime_filter_space(a)); }

FrameReport is_tdl_frame(const Poset& p, const Relation& r) {
  FrameReport rep;
  const Relation inv = r.transpose();
  for (Element x = 0; x < p.size(); ++x) {
    const Subset up = p.up(x), down = p.down(x);
    const Subset rx = r.succ[x], ix = inv.succ[x];
    const Subset up_rx = up_closure(p, rx), down_rx = down_closure(p, rx);
    const Subset up_ix = up_closure(p, ix), down_ix = down_closure(p, ix);
    if (!r.image(up).subset_of(up_rx)) add_violation(rep.violations, "K1", x, p);
    if (!inv.image(up).subset_of(up_ix)) add_violation(rep.violations, "K2", x, p);
    if (!r.image(down).subset_of(down_rx)) add_violation(rep.violations, "K3", x, p);
    if (!inv.image(down).subset_of(down_ix)) add_violation(rep.violations, "K4", x, p);
    const bool k5 = rx == (up_rx & down_rx);
    if (!k5) add_violation(rep.violations, "K5", x, p);
    if (r.image(up) != up_rx) add_violation(rep.starred, "K1*", x, p);
    if (inv.image(up) != up_ix) add_violation(rep.starred, "K2*", x, p);
    if (!k5) add_violation(rep.starred, "K5", x, p);
  }
  if (rep.violations.empty() != rep.starred.empty())
    throw InternalError("the two formulations of the frame axioms disagree");
  return rep;
}

FrameReport is_tps_space(const TpsSpace& x) {
  FrameReport rep;
  const Poset& p = x.order;
  for (Element v = 0; v < p.size(); ++v) {
    Subset rv = x.R.succ[v];
    if (rv != (up_closure(p, rv) & down_closure(p, rv)))
      add_violation(rep.violations, "tPS2", v, p);
  }
  for (Subset u : up_sets(p).members) {
    if (!is_up_set(p, G_R(x, u)) || !is_up_set(p, H_R(x, u)) || !is_up_set(p, F_R(x, u)) ||
        !is_up_set(p, P_R(x, u))) {
      rep.violations.push_back({"tPS3", u.elements(), "tPS3: an operator maps an up-set outside"});
      break;
    }
  }
  rep.starred = rep.violations;
  return rep;
}

DualSpace dual_space(const TdlAlgebra& a) {
  PrimeFilterSpace x = prime_filter_space(a);
  Relation r = tense_relation(a, x);
  DualSpace d{x.points, TpsSpace{x.order, r}};
  if (!is_tps_space(d.space).ok()) throw InternalError("dual space fails the tense space axioms");
  return d;
}

Element upset_index(const UpsetAlgebra& u, Subset s) {
  auto it = std::lower_bound(u.upsets.begin(), u.upsets.end(), s);
  if (it == u.upsets.end() || *it != s) return -1;
  return static_cast<Element>(it - u.upsets.begin());
}

UpsetAlgebra upset_algebra(const TdlFrame& x) {
  FrameReport rep = is_tdl_frame(x.order, x.R);
  if (!rep.ok()) throw PreconditionError("not a tense frame: " + rep.violations.front().detail);
  UpsetAlgebra u;
  u.upsets = up_sets(x.order).members;
  std::vector<std::string> labels;
  for (Subset s : u.upsets) {
    std::string name = "{";
    bool first = true;
    for (Element e : s) {
      name += (first ? "" : ",") + x.order.label(e);
      first = false;
    }
    labels.push_back(name + "}");
  }
  Lattice l = lattice_from_poset(inclusion_order(u.upsets, std::move(labels)));
  auto table = [&](Subset (*op)(const TdlFrame&, Subset)) {
    OperatorTable t;
    for (Subset s : u.upsets) {
      Element i = upset_index(u, op(x, s));
      if (i < 0) throw InternalError("relational operator left the up-sets of a frame");
      t.push_back(i);
    }
    return t;
  };
  u.algebra = build_tdl_algebra(l, table(G_R), table(H_R), table(F_R), table(P_R));
  return u;
}

bool is_bijective(const std::vector<Element>& table, int target_size) {
  if (static_cast<int>(table.size()) != target_size) return false;
  Subset seen;
  for (Element v : table) {
    if (v < 0 || v >= target_size || seen.contains(v)) return false;
    seen = seen.with(v);
  }
  return true;
}

MapReport is_tdl_homomorphism(const AlgebraMap& f) {
  const TdlAlgebra &a = f.source, &b = f.target;
  auto fail = [](std::string s) { return MapReport{std::move(s)}; };
  if (static_cast<int>(f.table.size()) != a.size()) return fail("table is not total");
  for (Element v : f.table)
    if (v < 0 || v >= b.size()) return fail("table leaves the target carrier");
  auto h = [&](Element x) { return f.table[x]; };
  if (a.size() > 0 && (h(a.bottom()) != b.bottom() || h(a.top()) != b.top()))
    return fail("bounds are not preserved");
  for (Element x = 0; x < a.size(); ++x) {
    if (h(a.G(x)) != b.G(h(x))) return fail("G is not preserved at " + a.label(x));
    if (h(a.H(x)) != b.H(h(x))) return fail("H is not preserved at " + a.label(x));
    if (h(a.F(x)) != b.F(h(x))) return fail("F is not preserved at " + a.label(x));
    if (h(a.P(x)) != b.P(h(x))) return fail("P is not preserved at " + a.label(x));
    for (Element y = 0; y < a.size(); ++y) {
      if (h(a.meet(x, y)) != b.meet(h(x), h(y)))
        return fail("meet is not preserved at (" + a.label(x) + "," + a.label(y) + ")");
      if (h(a.join(x, y)) != b.join(h(x), h(y)))
        return fail("join is not preserved at (" + a.label(x) + "," + a.label(y) + ")");
    }
  }
  return {};
}

namespace {

// sigma or h: a ↦ {T : a ∈ T} as an element of the up-set algebra.
AlgebraMap representation(const TdlAlgebra& a, const std::vector<Subset>& filters,
                          const UpsetAlgebra& u) {
  AlgebraMap m{a, u.algebra, {}};
  for (Element x = 0; x < a.size(); ++x) {
    Subset s;
    for (Element i = 0; i < static_cast<Element>(filters.size()); ++i)
      if (filters[i].contains(x)) s = s.with(i);
    m.table.push_back(upset_index(u, s));
  }
  MapReport r = is_tdl_homomorphism(m);
  if (!r.ok()) throw InternalError("representation map is not a homomorphism: " + *r.failure);
  if (!is_bijective(m.table, u.algebra.size()))
    throw InternalError("representation map is not bijective");
  return m;
}

// eps or k: x ↦ {U : x ∈ U} as a point of the dual of the up-set algebra.
PointMap point_representation(const TdlFrame& x, const UpsetAlgebra& u,
                              const std::vector<Subset>& filters) {
  PointMap g;
  for (Element p = 0; p < x.size(); ++p) {
    Subset f;
    for (Element i = 0; i < static_cast<Element>(u.upsets.size()); ++i)
      if (u.upsets[i].contains(p)) f = f.with(i);
    auto it = std::find(filters.begin(), filters.end(), f);
    if (it == filters.end()) throw InternalError("point does not map to a prime filter");
    g.push_back(static_cast<Element>(it - filters.begin()));
  }
  return g;
}

}  // namespace

AlgebraMap sigma_map(const TdlAlgebra& a) {
  DualSpace d = dual_space(a);
  return representation(a, d.filters, upset_algebra(d.space));
}

bool is_frame_isomorphism(const PointMap& g, const TdlFrame& x1, const TdlFrame& x2) {
  if (!is_bijective(g, x2.size())) return false;
  for (Element p = 0; p < x1.size(); ++p)
    for (Element q = 0; q < x1.size(); ++q) {
      if (x1.order.leq(p, q) != x2.order.leq(g[p], g[q])) return false;
      if (x1.R.has(p, q) != x2.R.has(g[p], g[q])) return false;
    }
  return true;
}

PointMap epsilon_map(const TpsSpace& x) {
  UpsetAlgebra u = upset_algebra(x);
  DualSpace d = dual_space(u.algebra);
  PointMap g = point_representation(x, u, d.filters);
  if (!is_frame_isomorphism(g, x, d.space)) throw InternalError("eps is not an isomorphism");
  return g;
}

MapReport is_tps_function(const PointMap& g, const TpsSpace& x1, const TpsSpace& x2) {
  auto fail = [](std::string s) { return MapReport{std::move(s)}; };
  if (static_cast<int>(g.size()) != x1.size()) return fail("map is not total");
  for (Element v : g)
    if (v < 0 || v >= x2.size()) return fail("map leaves the target space");
  const Relation inv1 = x1.R.transpose(), inv2 = x2.R.transpose();
  for (Element p = 0; p < x1.size(); ++p) {
    for (Element q = 0; q < x1.size(); ++q)
      if (x1.order.leq(p, q) && !x2.order.leq(g[p], g[q])) return fail("order is not preserved");
    for (Element q : x1.R.succ[p])
      if (!x2.R.has(g[p], g[q])) return fail("tPSf1 fails at " + x1.order.label(p));
    auto sandwiched = [&](const Relation& r1, const Relation& r2, const char* tag)
        -> std::optional<std::string> {
      for (Element y : r2.succ[g[p]]) {
        bool below = false, above = false;
        for (Element z : r1.succ[p]) {
          below = below || x2.order.leq(g[z], y);
          above = above || x2.order.leq(y, g[z]);
        }
        if (!below || !above) return std::string(tag) + " fails at " + x1.order.label(p);
      }
      return std::nullopt;
    };
    if (auto f = sandwiched(x1.R, x2.R, "tPSf2")) return fail(*f);
    if (auto f = sandwiched(inv1, inv2, "tPSf3")) return fail(*f);
  }
  return {};
}

PointMap dual_of_hom(const AlgebraMap& f) {
  MapReport r = is_tdl_homomorphism(f);
  if (!r.ok()) throw NotHomomorphism(*r.failure);
  DualSpace da = dual_space(f.source), db = dual_space(f.target);
  PointMap g;
  for (Subset t : db.filters) {
    Subset pre;
    for (Element x = 0; x < f.source.size(); ++x)
      if (t.contains(f.table[x])) pre = pre.with(x);
    auto it = std::find(da.filters.begin(), da.filters.end(), pre);
    if (it == da.filters.end()) throw InternalError("preimage of a prime filter is not prime");
    g.push_back(static_cast<Element>(it - da.filters.begin()));
  }
  MapReport t = is_tps_function(g, db.space, da.space);
  if (!t.ok()) throw InternalError("dual of a homomorphism is not a tPS-function: " + *t.failure);
  return g;
}

AlgebraMap dual_of_function(const PointMap& g, const TpsSpace& x1, const TpsSpace& x2) {
  MapReport r = is_tps_function(g, x1, x2);
  if (!r.ok()) throw NotTpsFunction(*r.failure);
  UpsetAlgebra u1 = upset_algebra(x1), u2 = upset_algebra(x2);
  AlgebraMap m{u2.algebra, u1.algebra, {}};
  for (Subset u : u2.upsets) {
    Subset pre;
    for (Element p = 0; p < x1.size(); ++p)
      if (u.contains(g[p])) pre = pre.with(p);
    Element i = upset_index(u1, pre);
    if (i < 0) throw InternalError("preimage of an up-set is not an up-set");
    m.table.push_back(i);
  }
  MapReport h = is_tdl_homomorphism(m);
  if (!h.ok()) throw InternalError("dual of a tPS-function is not a homomorphism: " + *h.failure);
  return m;
}

bool algebra_square_commutes(const AlgebraMap& h) {
  PointMap phi = dual_of_hom(h);  // X(A') -> X(A)
  DualSpace da = dual_space(h.source), db = dual_space(h.target);
  AlgebraMap psi_phi = dual_of_function(phi, db.space, da.space);  // Ψ(X(A)) -> Ψ(X(A'))
  AlgebraMap sa = sigma_map(h.source), sb = sigma_map(h.target);
  for (Element x = 0; x < h.source.size(); ++x)
    if (psi_phi.table[sa.table[x]] != sb.table[h.table[x]]) return false;
  return true;
}

bool space_square_commutes(const PointMap& g, const TpsSpace& x1, const TpsSpace& x2) {
  AlgebraMap psi = dual_of_function(g, x1, x2);  // Ψ(X2) -> Ψ(X1)
  PointMap phi_psi = dual_of_hom(psi);            // X(Ψ(X1)) -> X(Ψ(X2))
  PointMap e1 = epsilon_map(x1), e2 = epsilon_map(x2);
  for (Element p = 0; p < x1.size(); ++p)
    if (phi_psi[e1[p]] != e2[g[p]]) return false;
  return true;
}

TdlFrame canonical_frame(const TdlAlgebra& a) {
  PrimeFilterSpace x = prime_filter_space(a);
  TdlFrame f{x.order, tense_relation(a, x)};
  if (!is_tdl_frame(f.order, f.R).ok()) throw InternalError("canonical frame fails the frame axioms");
  return f;
}

AlgebraMap h_embedding(const TdlAlgebra& a) {
  PrimeFilterSpace x = prime_filter_space(a);
  TdlFrame f{x.order, tense_relation(a, x)};
  return representation(a, x.points, upset_algebra(f));
}

PointMap k_embedding(const TdlFrame& x) {
  UpsetAlgebra u = upset_algebra(x);
  PrimeFilterSpace pf = prime_filter_space(u.algebra);
  TdlFrame canon = canonical_frame(u.algebra);
  PointMap g = point_representation(x, u, pf.points);
  if (!is_frame_isomorphism(g, x, canon)) throw InternalError("k is not an isomorphism");
  return g;
}

namespace {

bool frame_conditions(const Poset& p, const Relation& r, const Relation& inv) {
  for (Element x = 0; x < p.size(); ++x) {
    const Subset rx = r.succ[x], ix = inv.succ[x];
    const Subset up_rx = up_closure(p, rx);
    if (rx != (up_rx & down_closure(p, rx))) return false;
    if (r.image(p.up(x)) != up_rx) return false;
    if (inv.image(p.up(x)) != up_closure(p, ix)) return false;
  }
  return true;
}

std::uint64_t relation_code(const Relation& r, const std::vector<Element>& perm) {
  const int k = r.size;
  std::uint64_t code = 0;
  for (Element x = 0; x < k; ++x)
    for (Element y : r.succ[x]) code |= std::uint64_t{1} << (perm[x] * k + perm[y]);
  return code;
}

}  // namespace

std::vector<TdlFrame> enumerate_frames_with(int points) {
  if (points < 0 || points > 4) throw SizeLimit("frame enumeration supports at most 4 points");
  std::vector<TdlFrame> out;
  const int k = points;
  for (const Poset& p : posets_up_to_iso(k)) {
    auto auts = automorphisms(p);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (k * k)); ++code) {
      Relation r(k);
      for (Element x = 0; x < k; ++x)
        for (Element y = 0; y < k; ++y)
          if ((code >> (x * k + y)) & 1) r.add(x, y);
      bool least = true;
      for (const auto& a : auts)
        if (relation_code(r, a) < code) {
          least = false;
          break;
        }
      if (!least) continue;
      if (frame_conditions(p, r, r.transpose())) out.push_back({p, std::move(r)});
    }
  }
  return out;
}

std::vector<TdlFrame> enumerate_frames(int max_points) {
  std::vector<TdlFrame> out;
  for (int k = 0; k <= max_points; ++k) {
    auto some = enumerate_frames_with(k);
    out.insert(out.end(), some.begin(), some.end());
  }
  return out;
}

}  // namespace tdl
