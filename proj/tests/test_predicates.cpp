#include "doctest.h"

#include "actlab/catalog.hpp"
#include "actlab/check.hpp"
#include "actlab/enumerate.hpp"
#include "actlab/errors.hpp"
#include "actlab/ops.hpp"
#include "actlab/predicates.hpp"

using namespace actlab;

namespace {

MonoidPtr s2() { return Monoid::make({{0, 1}, {1, 1}}, 0, {"1", "0"}); }

ActPtr theta_n(const MonoidPtr& m, int k) {
  std::vector<ActPtr> parts(k, theta(m));
  return coproduct(parts).act;
}

Subact sub(const ActPtr& a, std::initializer_list<int> v) {
  return Subact::make(a, Bitset::of(a->size(), v));
}

}  // namespace

TEST_SUITE("superfluous and coessential") {
  TEST_CASE("one theta inside two is coessential but not superfluous") {
    for (const std::string& spec : desk_catalog()) {
      ActPtr t2 = theta_n(monoid_from_spec(spec), 2);
      Subact b = sub(t2, {0});
      CHECK(is_coessential(b).holds);
      CHECK(is_coessential_def(b).holds);
      PropertyVerdict v = is_superfluous(b);
      CHECK_FALSE(v.holds);
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->subsets[0] == Bitset::of(2, {1}));  // the other theta
    }
  }

  TEST_CASE("the ideal of the regular act is superfluous") {
    ActPtr a = regular_act(s2());
    CHECK(is_superfluous(sub(a, {1})).holds);
    CHECK(is_superfluous_fast(sub(a, {1})).holds);
    CHECK(is_coessential(sub(a, {1})).holds);
  }

  TEST_CASE("a simple act is superfluous in itself") {
    ActPtr t = theta(s2());
    CHECK(is_superfluous(Subact::make(t, Bitset::full(1))).holds);
    ActPtr c2 = regular_act(make_cyclic_group(2));
    CHECK(is_superfluous(Subact::make(c2, Bitset::full(2))).holds);
    // non-simple acts are not
    ActPtr a = regular_act(s2());
    CHECK_FALSE(is_superfluous(Subact::make(a, Bitset::full(2))).holds);
  }

  TEST_CASE("empty-subset convention") {
    ActPtr t2 = theta_n(s2(), 2);
    CHECK(is_superfluous_subset(t2, Bitset(2)).holds);
  }

  TEST_CASE("amalgam branch is not coessential with the expected witness") {
    ActPtr a = regular_act(s2());
    ActPtr am = amalgam(a, sub(a, {1}));  // elements: 0, 1_a, 1_b
    PropertyVerdict v = is_coessential(sub(am, {0, 1}));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->subsets[0] == Bitset::of(3, {0, 2}));  // the other branch
  }

  TEST_CASE("criterion and cover definition agree over a small corpus") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("cyclic_group:3"),
          std::string("right_zero_identity:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 4; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, true))
          for (const Subact& b : all_subacts(a))
            CHECK(is_coessential(b).holds == is_coessential_def(b).holds);
    }
  }
}

TEST_SUITE("covers") {
  TEST_CASE("identity hom is a cover") {
    ActPtr a = regular_act(s2());
    CHECK(is_cover(Hom::make(a, a, {0, 1})).holds);
  }

  TEST_CASE("collapsing two thetas to one is not a cover") {
    ActPtr t2 = theta_n(s2(), 2);
    ReesQuotient q = rees_quotient(t2, Subact::make(t2, Bitset::full(2)));
    PropertyVerdict v = is_cover(q.projection);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
  }

  TEST_CASE("maximal-subact shortcut matches the all-subacts scan") {
    MonoidPtr m = s2();
    std::vector<ActPtr> acts;
    for (int n = 1; n <= 3; ++n)
      for (const ActPtr& a : enumerate_acts(m, n, false)) acts.push_back(a);
    for (const ActPtr& a : acts)
      for (const ActPtr& b : acts) {
        if (a->size() * b->size() > 12) continue;
        for (const Hom& h : homomorphisms(a, b))
          CHECK(is_cover(h).holds == is_cover_all_subacts(h).holds);
      }
  }
}

TEST_SUITE("hollow and co-uniform") {
  TEST_CASE("two thetas: co-uniform, not hollow") {
    ActPtr t2 = theta_n(s2(), 2);
    CHECK(is_co_uniform(t2).holds);
    PropertyVerdict v = is_hollow(t2);
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->subsets[0] == Bitset::of(2, {0}));
    CHECK(v.witness->subsets[1] == Bitset::of(2, {1}));
  }

  TEST_CASE("amalgam: indecomposable, not hollow") {
    ActPtr a = regular_act(s2());
    ActPtr am = amalgam(a, sub(a, {1}));
    CHECK(is_indecomposable(am).holds);
    CHECK_FALSE(is_hollow(am).holds);
  }

  TEST_CASE("the regular act is hollow") {
    CHECK(is_hollow(regular_act(s2())).holds);
  }

  TEST_CASE("three thetas: not co-uniform, three components") {
    ActPtr t3 = theta_n(s2(), 3);
    CHECK_FALSE(is_co_uniform(t3).holds);
    CHECK(decompose(t3).size() == 3);
  }

  TEST_CASE("hollow characterizations agree over a small corpus") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("min_chain:2"),
          std::string("cyclic_group:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 4; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, true)) {
          bool def = is_hollow(a).holds;
          CHECK(def == is_hollow_via_decomposition(a).holds);
          CHECK(def == is_hollow_via_local(a).holds);
        }
    }
  }
}

TEST_SUITE("cyclicity") {
  TEST_CASE("regular act: cyclic with generator 1, not simple") {
    Cyclicity c = cyclicity(regular_act(s2()));
    CHECK(c.is_cyclic);
    CHECK(c.is_locally_cyclic);
    CHECK_FALSE(c.is_simple);
    CHECK(c.generators == std::vector<int>{0});
  }

  TEST_CASE("theta: cyclic and simple") {
    Cyclicity c = cyclicity(theta(s2()));
    CHECK(c.is_cyclic);
    CHECK(c.is_simple);
  }

  TEST_CASE("two thetas: none of the three") {
    Cyclicity c = cyclicity(theta_n(s2(), 2));
    CHECK_FALSE(c.is_cyclic);
    CHECK_FALSE(c.is_locally_cyclic);
    CHECK_FALSE(c.is_simple);
  }

  TEST_CASE("simple iff a single subact") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("cyclic_group:3")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 4; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, true))
          CHECK(cyclicity(a).is_simple == (all_subacts(a).size() == 1));
    }
  }
}

TEST_SUITE("radical and local") {
  TEST_CASE("two thetas: empty radical under two maximals") {
    RadicalResult r = radical(theta_n(s2(), 2));
    CHECK(r.maximals.size() == 2);
    CHECK(r.subset.none());
    CHECK_FALSE(r.is_whole);
  }

  TEST_CASE("regular act: radical is the ideal") {
    RadicalResult r = radical(regular_act(s2()));
    REQUIRE(r.maximals.size() == 1);
    CHECK(r.subset == Bitset::of(2, {1}));
  }

  TEST_CASE("simple act: whole-act convention") {
    RadicalResult r = radical(theta(s2()));
    CHECK(r.maximals.empty());
    CHECK(r.is_whole);
    CHECK(r.subset.is_full());
  }

  TEST_CASE("radical as a union of superfluous subacts") {
    CHECK(radical_as_union(theta_n(s2(), 2)).none());
    CHECK(radical_as_union(regular_act(s2())) == Bitset::of(2, {1}));
    CHECK(radical_as_union(theta(s2())).is_full());
    CHECK(radical_proper_union(theta(s2())).none());
  }

  TEST_CASE("local monoids in the catalog") {
    CHECK(is_local_monoid(s2()).holds);
    CHECK_FALSE(is_local_monoid(make_cyclic_group(2)).holds);
    CHECK(is_local_monoid(make_right_zero_identity(2)).holds);
  }

  TEST_CASE("one-element acts are not local") {
    CHECK_FALSE(is_local_act(theta(s2())).holds);
  }
}

TEST_SUITE("uniserial") {
  TEST_CASE("the min-chain act is uniserial with the expected chain") {
    ActPtr a = min_chain_act(3);
    CHECK(is_uniserial(a).holds);
    std::vector<Subact> subs = all_subacts(a);
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].members() == Bitset::of(3, {0}));
    CHECK(subs[1].members() == Bitset::of(3, {0, 1}));
    CHECK(subs[2].members().is_full());
    CHECK(is_hollow(a).holds);
    CHECK(is_local_act(a).holds);
  }

  TEST_CASE("two thetas are not uniserial") {
    PropertyVerdict v = is_uniserial(theta_n(s2(), 2));
    CHECK_FALSE(v.holds);
    REQUIRE(v.witness.has_value());
  }

  TEST_CASE("characterizations agree on small corpora") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("min_chain:3")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 4; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, true)) {
          bool u = is_uniserial(a).holds;
          CHECK(u == is_uniserial_via_hollow_subacts(a).holds);
          CHECK(u == is_uniserial_via_two_generated(a).holds);
        }
    }
  }
}

TEST_SUITE("supplements") {
  TEST_CASE("coproduct complements are supplements") {
    ActPtr t2 = theta_n(s2(), 2);
    CHECK(is_supplement(t2, sub(t2, {0}), sub(t2, {1})).holds);
  }

  TEST_CASE("three thetas: the complement is the unique supplement") {
    ActPtr t3 = theta_n(s2(), 3);
    std::vector<Subact> sup =
        supplements_of(t3, sub(t3, {0, 1}), Reading::strict);
    REQUIRE(sup.size() == 1);
    CHECK(sup[0].members() == Bitset::of(3, {2}));
  }

  TEST_CASE("the regular act splits the two readings") {
    ActPtr a = regular_act(s2());
    Subact zero = sub(a, {1});
    CHECK(supplements_of(a, zero, Reading::strict).empty());
    std::vector<Subact> relaxed = supplements_of(a, zero, Reading::relaxed);
    REQUIRE(relaxed.size() == 1);
    CHECK(relaxed[0].members().is_full());
    CHECK_FALSE(is_supplemented(a, Reading::strict).holds);
    CHECK(is_supplemented(a, Reading::relaxed).holds);
  }

  TEST_CASE("non-proper arguments are rejected") {
    ActPtr a = regular_act(s2());
    CHECK_THROWS_AS(
        is_supplement(a, Subact::make(a, Bitset::full(2)), sub(a, {1})),
        NotProper);
  }

  TEST_CASE("criterion matches minimality over a small corpus") {
    MonoidPtr m = make_right_zero_identity(2);
    for (int n = 1; n <= 4; ++n)
      for (const ActPtr& a : enumerate_acts(m, n, true)) {
        std::vector<Subact> subs = all_subacts(a);
        for (const Subact& b : subs) {
          if (b.is_whole()) continue;
          for (const Subact& c : subs) {
            if (c.is_whole()) continue;
            if (!(b.members() | c.members()).is_full()) continue;
            CHECK(is_supplement(a, b, c).holds ==
                  supplement_criterion(a, b, c).holds);
          }
        }
      }
  }
}

TEST_SUITE("projectivity") {
  TEST_CASE("the regular act is projective (free of rank one)") {
    CHECK(is_projective(regular_act(s2())).holds);
  }

  TEST_CASE("theta over the two-element monoid is the idempotent ideal") {
    CHECK(is_projective(theta(s2())).holds);
  }

  TEST_CASE("theta over a group is not projective") {
    CHECK_FALSE(is_projective(theta(make_cyclic_group(2))).holds);
  }

  TEST_CASE("the lifting oracle agrees below size four") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("cyclic_group:2"),
          std::string("right_zero_identity:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 3; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, true))
          CHECK(is_projective(a).holds == is_projective_by_lifting(a).holds);
    }
  }
}

TEST_SUITE("property dispatch") {
  TEST_CASE("arity errors") {
    ActPtr a = regular_act(s2());
    CHECK_THROWS_AS(check_property(a, "superfluous", {}, Reading::relaxed),
                    ParseError);
    CHECK_THROWS_AS(check_property(a, "hollow", {sub(a, {1})}, Reading::relaxed),
                    ParseError);
    CHECK_THROWS_AS(check_property(a, "bogus", {}, Reading::relaxed), ParseError);
  }

  TEST_CASE("dispatch matches the direct calls") {
    ActPtr a = regular_act(s2());
    CHECK(check_property(a, "hollow", {}, Reading::relaxed).holds ==
          is_hollow(a).holds);
    CHECK(check_property(a, "superfluous", {sub(a, {1})}, Reading::relaxed).holds);
  }
}
