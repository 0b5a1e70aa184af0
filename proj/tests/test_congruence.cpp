#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "tdl/congruence.hpp"

using namespace tdl;
using fixtures::Ex;

namespace {

// Every partition of {0..n-1} as a restricted growth string, kept when it is
// compatible with the operations. Independent of the closure-based oracle.
std::set<Congruence> congruences_by_partitions(const TdlAlgebra& a) {
  const int n = a.size();
  std::set<Congruence> out;
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int i, int max_label) {
    if (i == n) {
      Congruence c{rgs};
      bool ok = true;
      for (Element x = 0; x < n && ok; ++x)
        for (Element y = 0; y < n && ok; ++y) {
          if (!c.related(x, y)) continue;
          ok = c.related(a.G(x), a.G(y)) && c.related(a.H(x), a.H(y)) &&
               c.related(a.F(x), a.F(y)) && c.related(a.P(x), a.P(y));
          for (Element z = 0; z < n && ok; ++z)
            ok = c.related(a.meet(x, z), a.meet(y, z)) && c.related(a.join(x, z), a.join(y, z));
        }
      if (ok) out.insert(c);
      return;
    }
    for (int l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  if (n > 0) {
    rgs[0] = 0;
    rec(1, 0);
  }
  return out;
}

std::set<Congruence> as_set(const std::vector<Congruence>& v) { return {v.begin(), v.end()}; }

Element point_of(const DualSpace& d, std::initializer_list<Element> xs) {
  Subset s = Subset::of(std::vector<Element>(xs));
  return static_cast<Element>(std::find(d.filters.begin(), d.filters.end(), s) - d.filters.begin());
}

TdlAlgebra boolean4_with_complement() {
  // Labels 0, u, v, 1 in that index order.
  return identity_algebra(fixtures::boolean4()).with_negation({3, 2, 1, 0});
}

}  // namespace

TEST_CASE("tPS-sets of the example dual space") {
  TdlAlgebra a = fixtures::ex_algebra();
  DualSpace d = dual_space(a);
  Element ua = point_of(d, {Ex::ka, Ex::kc, Ex::kd, Ex::k1});
  Element ub = point_of(d, {Ex::kb, Ex::kd, Ex::k1});
  TpsSubsetReport r = is_tps_subset(d.space, Subset::singleton(ub));
  CHECK_FALSE(r.is_tps);
  REQUIRE(r.witness);
  CHECK(r.witness->clause == "tc2");
  CHECK(r.witness->x == ub);
  // Both ↑a and ↑c see ↑b; the report names the smaller index.
  CHECK(d.space.R.has(ua, ub));
  CHECK(d.space.R.has(r.witness->y, ub));
  CHECK(r.witness->y == std::min(ua, point_of(d, {Ex::kc, Ex::k1})));
  CHECK(is_tps_subset(d.space, Subset()).is_tps);
  CHECK(is_tps_subset(d.space, Subset::full(3)).is_tps);
  CHECK(all_tps_subsets(d.space).all == std::vector<Subset>{Subset(), Subset::full(3)});
}

TEST_CASE("tPS-sets of tiny spaces") {
  TpsSpace refl{build_poset(1, {}), Relation(1)};
  refl.R.add(0, 0);
  CHECK(all_tps_subsets(refl).all == std::vector<Subset>{Subset(), Subset(1)});
  TpsSpace empty{build_poset(2, {}), Relation(2)};
  CHECK(all_tps_subsets(empty).all.size() == 4);
}

TEST_CASE("tPS-set closure properties on every small frame") {
  std::mt19937 rng(7);
  for (const TdlFrame& f : enumerate_frames(3)) {
    TpsFamily fam = all_tps_subsets(f);
    std::set<Subset> all(fam.all.begin(), fam.all.end());
    for (Subset y : fam.all)
      for (Subset z : fam.all) CHECK(all.count(y | z) == 1);
    for (Subset y : fam.up)
      for (Subset z : fam.down) CHECK(all.count(y & z) == 1);
    for (Element x = 0; x < f.size(); ++x) {
      Subset rx = f.R.succ[x], rinv = f.R.transpose().succ[x];
      bool expected = (rx.empty() && rinv.empty()) ||
                      (rx == Subset::singleton(x) && rinv == Subset::singleton(x));
      CHECK(all.count(Subset::singleton(x)) == (expected ? 1U : 0U));
      if (expected) CHECK(all.count(Subset::full(f.size()).without(x)) == 1);
    }
    (void)rng;
  }
}

TEST_CASE("congruences from tPS-sets") {
  TdlAlgebra b = identity_algebra(fixtures::boolean4());
  DualSpace d = dual_space(b);
  CHECK(congruence_from_subset(b, d, Subset::full(2)) == Congruence::identity(4));
  CHECK(congruence_from_subset(b, d, Subset()) == Congruence::total(4));
  Element uu = point_of(d, {1, 3});  // the prime filter ↑u
  Congruence c = congruence_from_subset(b, d, Subset::singleton(uu));
  CHECK(c.related(0, 2));
  CHECK(c.related(1, 3));
  CHECK_FALSE(c.related(0, 1));

  TdlAlgebra a = fixtures::ex_algebra();
  DualSpace da = dual_space(a);
  CHECK_THROWS_AS(congruence_from_subset(a, da, Subset::singleton(point_of(da, {Ex::kb, Ex::kd, Ex::k1}))),
                  NotTpsSet);
}

TEST_CASE("congruence lattices of named algebras") {
  TdlAlgebra a = fixtures::ex_algebra();
  CongruenceLattice cl = congruence_lattice(a);
  CHECK(cl.members == std::vector<Congruence>{Congruence::identity(6), Congruence::total(6)});
  CHECK(congruences_bruteforce(a) == cl.members);

  CongruenceLattice b = congruence_lattice(identity_algebra(fixtures::boolean4()));
  CHECK(b.members.size() == 4);
  CHECK(b.members.front() == Congruence::identity(4));
  CHECK(b.members.back() == Congruence::total(4));

  CHECK(congruence_lattice(identity_algebra(fixtures::chain(1))).members.size() == 1);
  CHECK(congruences_bruteforce(identity_algebra(fixtures::chain(3))).size() == 4);
  CHECK_THROWS_AS(congruences_bruteforce(identity_algebra(fixtures::chain(9))), SizeLimit);
}

TEST_CASE("filter and ideal congruences") {
  TdlAlgebra b = identity_algebra(fixtures::boolean4());
  CHECK(filter_congruence(b, Subset::singleton(3)) == Congruence::identity(4));
  CHECK(filter_congruence(b, Subset::full(4)) == Congruence::total(4));
  Congruence up_u = filter_congruence(b, Subset::of(std::vector<Element>{1, 3}));
  CHECK(up_u == Congruence::from_labels({0, 1, 0, 1}));
  CHECK(ideal_congruence(b, Subset::singleton(0)) == Congruence::identity(4));
  CHECK_THROWS_AS(filter_congruence(b, Subset::singleton(1)), NotTenseFilter);
  CHECK_THROWS_AS(ideal_congruence(b, Subset::singleton(3)), NotTenseIdeal);
}

TEST_CASE("simplicity and subdirect irreducibility of named algebras") {
  SimplicityReport ex = is_simple(fixtures::ex_algebra());
  CHECK(ex.simple);
  CHECK_FALSE(ex.precheck_fired);
  CHECK(ex.clause_b);
  CHECK(ex.clause_c);
  CHECK(ex.clause_d);
  CHECK(is_subdirectly_irreducible(fixtures::ex_algebra()).si);

  SimplicityReport b4 = is_simple(identity_algebra(fixtures::boolean4()));
  CHECK_FALSE(b4.simple);
  CHECK(b4.precheck_fired);
  CHECK_FALSE(is_subdirectly_irreducible(identity_algebra(fixtures::boolean4())).si);

  SimplicityReport c2 = is_simple(constant_algebra(fixtures::chain(2)));
  CHECK_FALSE(c2.precheck_fired);
  CHECK(c2.simple);

  CHECK_FALSE(is_subdirectly_irreducible(identity_algebra(fixtures::chain(3))).si);
  CHECK_FALSE(is_simple(identity_algebra(fixtures::chain(1))).simple);
  CHECK_FALSE(is_subdirectly_irreducible(identity_algebra(fixtures::chain(1))).si);
}

TEST_CASE("subclass reports of named algebras") {
  SubclassReport ex = subclass_reports(fixtures::ex_algebra());
  CHECK_FALSE(ex.boolean);
  CHECK(ex.heyting.si);
  CHECK(ex.heyting.unique_coatom);
  CHECK(ex.heyting.fixpoints_si);

  SubclassReport b4 = subclass_reports(boolean4_with_complement());
  REQUIRE(b4.boolean);
  CHECK(b4.boolean->consistent());
  REQUIRE(b4.demorgan);
  DualSpace d = dual_space(identity_algebra(fixtures::boolean4()));
  CHECK(b4.demorgan->g == PointMap{0, 1});
  CHECK(b4.demorgan->preserves_relation);
  (void)d;

  SubclassReport c2 = subclass_reports(constant_algebra(fixtures::chain(2)));
  REQUIRE(c2.boolean);
  CHECK(c2.boolean->d_reaches_zero);
  CHECK(c2.boolean->simple);

  // With lattice congruences alone the three-element chain would be a
  // counterexample: A^d has a unique coatom but two atoms sit in Con.
  SubclassReport c3 = subclass_reports(identity_algebra(fixtures::chain(3)));
  CHECK(c3.heyting.si);
  CHECK(c3.heyting.consistent());
  CHECK_FALSE(is_subdirectly_irreducible(identity_algebra(fixtures::chain(3))).si);
}

TEST_CASE("both congruence computations agree with partition search") {
  for (const TdlAlgebra& a : fixtures::sweep(6)) {
    std::vector<Congruence> brute = congruences_bruteforce(a);
    CongruenceLattice cl = congruence_lattice(a);
    CHECK(as_set(brute) == congruences_by_partitions(a));
    CHECK(cl.members == brute);
  }
}

TEST_CASE("filters, ideals and closed tPS-sets correspond") {
  for (const TdlAlgebra& a : fixtures::sweep(6)) {
    DualSpace d = dual_space(a);
    TpsFamily fam = all_tps_subsets(d.space);
    std::set<Congruence> from_up, from_filters, from_down, from_ideals;
    for (Subset y : fam.up) {
      Subset s = rho_of_up_set(a, d, y);
      CHECK(is_tense_filter(a, s));
      CHECK(sigma_of_filter(d, s) == y);
      from_up.insert(congruence_from_subset(a, d, y));
    }
    for (Subset s : all_tense_filters(a)) {
      Subset y = sigma_of_filter(d, s);
      CHECK(rho_of_up_set(a, d, y) == s);
      Congruence c = filter_congruence(a, s);
      CHECK(c == congruence_from_subset(a, d, y));
      from_filters.insert(c);
    }
    for (Subset z : fam.down) {
      Subset i = rho_of_down_set(a, d, z);
      CHECK(is_tense_ideal(a, i));
      CHECK(sigma_of_ideal(d, i) == z);
      from_down.insert(congruence_from_subset(a, d, z));
    }
    for (Subset i : all_tense_ideals(a)) {
      Subset z = sigma_of_ideal(d, i);
      CHECK(rho_of_down_set(a, d, z) == i);
      Congruence c = ideal_congruence(a, i);
      CHECK(c == congruence_from_subset(a, d, z));
      from_ideals.insert(c);
    }
    CHECK(from_up == from_filters);
    CHECK(fam.up.size() == from_up.size());
    CHECK(from_down == from_ideals);
    CHECK(fam.down.size() == from_down.size());
    if (classify(a).boolean) {
      CHECK(fam.all.size() == fam.up.size());
      CHECK(fam.all.size() == fam.down.size());
    }
  }
}

TEST_CASE("simplicity verdicts agree with the congruence count") {
  for (const TdlAlgebra& a : fixtures::sweep(6)) {
    const std::size_t con = congruences_bruteforce(a).size();
    SimplicityReport s = is_simple(a);
    CHECK(s.simple == (con == 2));
    if (s.precheck_fired) CHECK_FALSE(s.simple);
    if (s.simple) CHECK((s.clause_b && s.clause_c && s.clause_d));
    CHECK(s.clause_b == s.clause_c);
    CHECK(s.clause_c == s.clause_d);
    SiReport si = is_subdirectly_irreducible(a);
    if (s.simple) CHECK(si.si);
  }
}

TEST_CASE("subclass theorems across the sweep") {
  int boolean_seen = 0;
  for (const TdlAlgebra& a : fixtures::sweep(6)) {
    SubclassReport r = subclass_reports(a);
    CHECK(r.heyting.consistent());
    if (r.boolean) {
      ++boolean_seen;
      CHECK(r.boolean->consistent());
    }
  }
  CHECK(boolean_seen > 0);
  for (const TdlAlgebra& a : enumerate_tdl_algebras(upset_lattice(build_poset(3, {})))) {
    SubclassReport r = subclass_reports(a);
    REQUIRE(r.boolean);
    CHECK(r.boolean->consistent());
    CHECK(r.heyting.consistent());
  }
}

TEST_CASE("the De Morgan point map preserves the relation") {
  int checked = 0;
  for (const TdlAlgebra& a : fixtures::sweep(6))
    for (const OperatorTable& neg : de_morgan_involutions(a.lattice())) {
      TdlAlgebra m;
      try {
        m = a.with_negation(neg);
      } catch (const DeMorganLawViolation&) {
        continue;
      }
      SubclassReport r = subclass_reports(m);
      REQUIRE(r.demorgan);
      CHECK(r.demorgan->preserves_relation);
      ++checked;
    }
  CHECK(checked > 20);
}
