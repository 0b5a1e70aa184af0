#include <algorithm>
#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "tdl/duality.hpp"

using namespace tdl;
using fixtures::Ex;

namespace {

Subset set_of(std::initializer_list<Element> xs) { return Subset::of(std::vector<Element>(xs)); }

Element point_of(const std::vector<Subset>& points, Subset s) {
  auto it = std::find(points.begin(), points.end(), s);
  return it == points.end() ? -1 : static_cast<Element>(it - points.begin());
}

TdlFrame make_frame(int n, std::vector<std::pair<Element, Element>> leq,
                    std::vector<std::pair<Element, Element>> r) {
  TdlFrame f{build_poset(n, leq), Relation(n)};
  for (auto [x, y] : r) f.R.add(x, y);
  return f;
}

// x < y with R equal to the order.
TdlFrame chain_frame() { return make_frame(2, {{0, 1}}, {{0, 0}, {0, 1}, {1, 1}}); }

}  // namespace

TEST_CASE("prime filter spaces") {
  PrimeFilterSpace two = prime_filter_space(identity_algebra(fixtures::chain(2)));
  CHECK(two.points == std::vector<Subset>{Subset::singleton(1)});

  PrimeFilterSpace x = prime_filter_space(fixtures::ex_algebra());
  REQUIRE(x.points.size() == 3);
  Element ua = point_of(x.points, set_of({Ex::ka, Ex::kc, Ex::kd, Ex::k1}));
  Element ub = point_of(x.points, set_of({Ex::kb, Ex::kd, Ex::k1}));
  Element uc = point_of(x.points, set_of({Ex::kc, Ex::k1}));
  CHECK(ua >= 0);
  CHECK(ub >= 0);
  CHECK(uc >= 0);
  CHECK(x.order.leq(uc, ua));
  CHECK_FALSE(x.order.leq(ub, ua));

  PrimeFilterSpace b = prime_filter_space(identity_algebra(fixtures::boolean4()));
  REQUIRE(b.points.size() == 2);
  CHECK_FALSE(b.order.leq(0, 1));
  CHECK_FALSE(b.order.leq(1, 0));
}

// R_A straight from its definition, with preimages taken by scanning.
static bool in_relation(const TdlAlgebra& a, Subset s, Subset t) {
  for (Element x = 0; x < a.size(); ++x) {
    if (s.contains(a.G(x)) && !t.contains(x)) return false;
    if (t.contains(x) && !s.contains(a.F(x))) return false;
  }
  return true;
}

TEST_CASE("tense relation of the example") {
  TdlAlgebra a = fixtures::ex_algebra();
  PrimeFilterSpace x = prime_filter_space(a);
  Relation r = tense_relation(a, x);
  for (Element i = 0; i < 3; ++i)
    for (Element j = 0; j < 3; ++j) CHECK(r.has(i, j) == in_relation(a, x.points[i], x.points[j]));
  Element ua = point_of(x.points, set_of({Ex::ka, Ex::kc, Ex::kd, Ex::k1}));
  Element ub = point_of(x.points, set_of({Ex::kb, Ex::kd, Ex::k1}));
  Element uc = point_of(x.points, set_of({Ex::kc, Ex::k1}));
  CHECK(r.pair_count() == 4);
  CHECK(r.has(ua, ua));
  CHECK(r.has(ua, ub));
  CHECK(r.has(uc, ub));
  CHECK(r.has(uc, uc));
}

TEST_CASE("tense relation on the two-element chain") {
  Relation id = tense_relation(identity_algebra(fixtures::chain(2)));
  CHECK(id.pair_count() == 1);
  CHECK(id.has(0, 0));
  CHECK(tense_relation(constant_algebra(fixtures::chain(2))).pair_count() == 0);
}

TEST_CASE("dual spaces are tense spaces") {
  DualSpace d = dual_space(fixtures::ex_algebra());
  CHECK(d.space.size() == 3);
  CHECK(is_tps_space(d.space).ok());
  DualSpace one = dual_space(identity_algebra(fixtures::chain(2)));
  CHECK(one.space.size() == 1);
  CHECK(one.space.R.has(0, 0));
  for (const TdlAlgebra& a : fixtures::sweep(6)) {
    DualSpace s = dual_space(a);
    CHECK(is_tps_space(s.space).ok());
    CHECK(is_tdl_frame(s.space.order, s.space.R).ok());
  }
}

TEST_CASE("complex algebras of one-point and two-point frames") {
  TdlFrame empty_r = make_frame(1, {}, {});
  UpsetAlgebra u = upset_algebra(empty_r);
  REQUIRE(u.algebra.size() == 2);
  CHECK(u.algebra.G_table() == OperatorTable{1, 1});
  CHECK(u.algebra.H_table() == OperatorTable{1, 1});
  CHECK(u.algebra.F_table() == OperatorTable{0, 0});
  CHECK(u.algebra.P_table() == OperatorTable{0, 0});

  UpsetAlgebra refl = upset_algebra(make_frame(1, {}, {{0, 0}}));
  CHECK(refl.algebra == identity_algebra(refl.algebra.lattice()));

  UpsetAlgebra c = upset_algebra(chain_frame());
  REQUIRE(c.upsets == std::vector<Subset>{Subset(0b00), Subset(0b10), Subset(0b11)});
  const Element y = 1;  // index of {y}
  CHECK(c.upsets[c.algebra.G(y)] == Subset(0b10));
  CHECK(c.upsets[c.algebra.F(y)] == Subset(0b11));
  CHECK(c.upsets[c.algebra.H(y)] == Subset(0b00));
  CHECK(c.upsets[c.algebra.P(y)] == Subset(0b10));
}

TEST_CASE("sigma is an isomorphism") {
  AlgebraMap two = sigma_map(identity_algebra(fixtures::chain(2)));
  CHECK(two.table == std::vector<Element>{0, 1});

  TdlAlgebra a = fixtures::ex_algebra();
  DualSpace d = dual_space(a);
  AlgebraMap s = sigma_map(a);
  UpsetAlgebra u = upset_algebra(d.space);
  Element ua = point_of(d.filters, set_of({Ex::ka, Ex::kc, Ex::kd, Ex::k1}));
  Element ub = point_of(d.filters, set_of({Ex::kb, Ex::kd, Ex::k1}));
  CHECK(u.upsets[s.table[Ex::kd]] == set_of({ua, ub}));
  CHECK(u.upsets[s.table[a.G(Ex::kd)]] == G_R(d.space, u.upsets[s.table[Ex::kd]]));

  for (const TdlAlgebra& b : fixtures::sweep(6)) {
    AlgebraMap m = sigma_map(b);
    CHECK(is_tdl_homomorphism(m).ok());
    CHECK(is_bijective(m.table, m.target.size()));
  }
}

TEST_CASE("eps and k are isomorphisms") {
  PointMap one = epsilon_map(make_frame(1, {}, {{0, 0}}));
  CHECK(one == PointMap{0});
  TdlFrame c = chain_frame();
  PointMap e = epsilon_map(c);
  CHECK(is_bijective(e, 2));
  PointMap k = k_embedding(make_frame(1, {}, {}));
  CHECK(k == PointMap{0});
  for (const TdlFrame& f : enumerate_frames(3)) {
    PointMap g = epsilon_map(f);
    CHECK(is_frame_isomorphism(g, f, dual_space(upset_algebra(f).algebra).space));
    CHECK_NOTHROW(k_embedding(f));
  }
}

TEST_CASE("h is an isomorphism onto the complex algebra of the canonical frame") {
  TdlAlgebra a = fixtures::ex_algebra();
  TdlFrame canon = canonical_frame(a);
  CHECK(canon.size() == 3);
  CHECK(canon.R.pair_count() == 4);
  CHECK(up_sets(canon.order).members.size() == 6);
  AlgebraMap h = h_embedding(a);
  CHECK(is_bijective(h.table, 6));
  CHECK(is_tdl_homomorphism(h).ok());
  TdlFrame c2 = canonical_frame(identity_algebra(fixtures::chain(2)));
  CHECK(c2.size() == 1);
  CHECK(c2.R.has(0, 0));
  for (const TdlAlgebra& b : fixtures::sweep(6)) CHECK_NOTHROW(h_embedding(b));
}

TEST_CASE("the complex algebra equals the up-set algebra built by the dual functor") {
  // At finite scale both are the same object; compare operator tables against
  // a direct powerset computation of the relational operators.
  for (const TdlFrame& f : enumerate_frames(3)) {
    UpsetAlgebra u = upset_algebra(f);
    for (Element i = 0; i < u.algebra.size(); ++i) {
      Subset s = u.upsets[i];
      Subset g, h, fr, pr;
      for (Element x = 0; x < f.size(); ++x) {
        bool all_s = true, all_p = true, some_s = false, some_p = false;
        for (Element y = 0; y < f.size(); ++y) {
          if (f.R.has(x, y)) {
            all_s = all_s && s.contains(y);
            some_s = some_s || s.contains(y);
          }
          if (f.R.has(y, x)) {
            all_p = all_p && s.contains(y);
            some_p = some_p || s.contains(y);
          }
        }
        if (all_s) g = g.with(x);
        if (all_p) h = h.with(x);
        if (some_s) fr = fr.with(x);
        if (some_p) pr = pr.with(x);
      }
      CHECK(u.upsets[u.algebra.G(i)] == g);
      CHECK(u.upsets[u.algebra.H(i)] == h);
      CHECK(u.upsets[u.algebra.F(i)] == fr);
      CHECK(u.upsets[u.algebra.P(i)] == pr);
    }
  }
}

TEST_CASE("frame axioms on small examples") {
  TdlFrame c = chain_frame();
  CHECK(is_tdl_frame(c.order, c.R).ok());
  TdlFrame bad = make_frame(2, {{0, 1}}, {{0, 1}});
  FrameReport r = is_tdl_frame(bad.order, bad.R);
  CHECK_FALSE(r.ok());
  bool k2_at_x = false;
  for (const Violation& v : r.starred)
    if (v.axiom == "K2*" && v.witness == std::vector<Element>{0}) k2_at_x = true;
  CHECK(k2_at_x);
  CHECK(is_tdl_frame(build_poset(3, {}), Relation(3)).ok());
  CHECK_THROWS_AS(upset_algebra(bad), PreconditionError);
}

// Every relation on every poset with up to three points.
static void for_all_relations(int max_points, const std::function<void(const Poset&, const Relation&)>& f) {
  for (int k = 0; k <= max_points; ++k)
    for (const Poset& p : posets_up_to_iso(k))
      for (std::uint64_t code = 0; code < (std::uint64_t{1} << (k * k)); ++code) {
        Relation r(k);
        for (Element x = 0; x < k; ++x)
          for (Element y = 0; y < k; ++y)
            if ((code >> (x * k + y)) & 1) r.add(x, y);
        f(p, r);
      }
}

TEST_CASE("each K condition holds iff its operator preserves up-sets") {
  for_all_relations(3, [](const Poset& p, const Relation& r) {
    TdlFrame f{p, r};
    bool g = true, h = true, fr = true, pr = true;
    for (Subset u : up_sets(p).members) {
      g = g && is_up_set(p, G_R(f, u));
      h = h && is_up_set(p, H_R(f, u));
      fr = fr && is_up_set(p, F_R(f, u));
      pr = pr && is_up_set(p, P_R(f, u));
    }
    FrameReport rep = is_tdl_frame(p, r);  // throws if the two formulations disagree
    auto has = [&](const char* tag) {
      return std::any_of(rep.violations.begin(), rep.violations.end(),
                         [&](const Violation& v) { return v.axiom == tag; });
    };
    CHECK(g == !has("K1"));
    CHECK(h == !has("K2"));
    CHECK(fr == !has("K3"));
    CHECK(pr == !has("K4"));
    CHECK(is_tps_space(f).ok() == rep.ok());
  });
}

TEST_CASE("frame enumeration keeps one frame per isomorphism class") {
  // Brute force: count labeled frames and divide orbits via canonical codes.
  auto frames = enumerate_frames(3);
  std::size_t labeled = 0;
  for_all_relations(3, [&](const Poset& p, const Relation& r) {
    if (is_tdl_frame(p, r).ok()) ++labeled;
  });
  CHECK(frames.size() <= labeled);
  for (const TdlFrame& f : frames) CHECK(is_tdl_frame(f.order, f.R).ok());
  CHECK(enumerate_frames_with(1).size() == 2);
  CHECK(enumerate_frames_with(0).size() == 1);
}

TEST_CASE("homomorphism duals") {
  TdlAlgebra a = fixtures::ex_algebra();
  AlgebraMap id{a, a, {0, 1, 2, 3, 4, 5}};
  CHECK(is_tdl_homomorphism(id).ok());
  CHECK(dual_of_hom(id) == PointMap{0, 1, 2});
  CHECK(algebra_square_commutes(id));

  // The map onto the one-element algebra.
  TdlAlgebra trivial = identity_algebra(fixtures::chain(1));
  AlgebraMap bang{a, trivial, std::vector<Element>(6, 0)};
  CHECK(is_tdl_homomorphism(bang).ok());
  CHECK(dual_of_hom(bang).empty());

  TdlAlgebra b4 = identity_algebra(fixtures::boolean4());
  BooleanPart part = boolean_elements(b4);
  AlgebraMap incl{part.algebra, b4, part.embed};
  CHECK(is_tdl_homomorphism(incl).ok());
  CHECK(algebra_square_commutes(incl));

  AlgebraMap not_hom{a, a, {0, 0, 0, 0, 0, 5}};
  CHECK_FALSE(is_tdl_homomorphism(not_hom).ok());
  CHECK_THROWS_AS(dual_of_hom(not_hom), NotHomomorphism);
}

TEST_CASE("naturality on every homomorphism between small algebras") {
  std::vector<TdlAlgebra> small = fixtures::sweep(4);
  int homs = 0;
  for (const TdlAlgebra& a : small)
    for (const TdlAlgebra& b : small) {
      const int n = a.size(), m = b.size();
      int total = 1;
      for (int i = 0; i < n; ++i) total *= m;
      for (int code = 0; code < total; ++code) {
        std::vector<Element> t(n);
        int c = code;
        for (int i = 0; i < n; ++i, c /= m) t[i] = c % m;
        AlgebraMap f{a, b, t};
        if (!is_tdl_homomorphism(f).ok()) continue;
        ++homs;
        CHECK(algebra_square_commutes(f));
      }
    }
  CHECK(homs > 50);
}

TEST_CASE("naturality on every tPS-function between small frames") {
  std::vector<TdlFrame> frames = enumerate_frames(2);
  int fns = 0;
  for (const TdlFrame& x1 : frames)
    for (const TdlFrame& x2 : frames) {
      const int n = x1.size(), m = x2.size();
      int total = 1;
      for (int i = 0; i < n; ++i) total *= m;
      for (int code = 0; code < total; ++code) {
        PointMap g(n);
        int c = code;
        for (int i = 0; i < n; ++i, c /= m) g[i] = c % m;
        if (!is_tps_function(g, x1, x2).ok()) {
          CHECK_THROWS_AS(dual_of_function(g, x1, x2), NotTpsFunction);
          continue;
        }
        ++fns;
        AlgebraMap psi = dual_of_function(g, x1, x2);
        CHECK(is_tdl_homomorphism(psi).ok());
        CHECK(space_square_commutes(g, x1, x2));
      }
    }
  CHECK(fns > 10);
}
