#include <algorithm>

#include "doctest.h"

#include "actlab/catalog.hpp"
#include "actlab/enumerate.hpp"
#include "actlab/errors.hpp"
#include "actlab/ops.hpp"
#include "actlab/predicates.hpp"
#include "oracles.hpp"

using namespace actlab;

namespace {

// S₂ = {1, 0} with 0 absorbing, index 0 = identity.
MonoidPtr s2() { return Monoid::make({{0, 1}, {1, 1}}, 0, {"1", "0"}); }

ActPtr s2_regular() { return regular_act(s2()); }

ActPtr theta2(const MonoidPtr& m) {
  return coproduct({theta(m), theta(m)}).act;
}

Bitset bits(const ActPtr& a, std::initializer_list<int> v) {
  return Bitset::of(a->size(), v);
}

}  // namespace

TEST_SUITE("monoid") {
  TEST_CASE("trivial monoid validates") {
    MonoidPtr m = Monoid::make({{0}}, 0);
    CHECK(m->size() == 1);
    CHECK(m->identity() == 0);
  }

  TEST_CASE("two-element monoid with absorbing zero validates") {
    MonoidPtr m = Monoid::make({{0, 1}, {1, 1}}, 0);
    CHECK(m->mul(1, 1) == 1);
    CHECK(m->mul(0, 1) == 1);
  }

  TEST_CASE("broken identity row is rejected with a witness") {
    CHECK_THROWS_AS(Monoid::make({{0, 0}, {1, 1}}, 0), IdentityLawFails);
  }

  TEST_CASE("non-associative table is rejected with a witness") {
    // x·x = 1 but x absorbing on the left elsewhere is not associative
    // on a 3-element carrier built to break (1·1)·2 = 1·(1·2).
    std::vector<std::vector<int>> t{{0, 1, 2}, {1, 0, 0}, {2, 0, 0}};
    CHECK_THROWS_AS(Monoid::make(t, 0), NotAssociative);
  }

  TEST_CASE("locality of the catalog monoids") {
    CHECK(s2()->non_right_invertible() == Bitset::of(2, {1}));
    CHECK(make_cyclic_group(2)->non_right_invertible().none());
    CHECK(make_cyclic_group(2)->is_group());
    // right zero with identity: neither r1 nor r2 is right invertible
    CHECK(make_right_zero_identity(2)->non_right_invertible() ==
          Bitset::of(3, {1, 2}));
  }

  TEST_CASE("generating sets generate") {
    for (const std::string& spec : desk_catalog()) {
      MonoidPtr m = monoid_from_spec(spec);
      std::vector<int> gens = m->generating_set();
      // closure from the identity reaches everything
      std::vector<bool> seen(m->size(), false);
      std::vector<int> queue{m->identity()};
      seen[m->identity()] = true;
      int reached = 1;
      while (!queue.empty()) {
        int x = queue.back();
        queue.pop_back();
        for (int g : gens) {
          int y = m->mul(x, g);
          if (!seen[y]) {
            seen[y] = true;
            ++reached;
            queue.push_back(y);
          }
        }
      }
      CHECK(reached == m->size());
    }
  }
}

TEST_SUITE("act") {
  TEST_CASE("theta is valid over every catalog monoid") {
    for (const std::string& spec : desk_catalog()) {
      ActPtr t = theta(monoid_from_spec(spec));
      CHECK(t->size() == 1);
    }
  }

  TEST_CASE("regular act validates; compatibility is associativity") {
    ActPtr a = s2_regular();
    CHECK(a->size() == 2);
    CHECK(a->apply(0, 1) == 1);  // 1·0 = 0
    CHECK(a->apply(1, 1) == 1);
  }

  TEST_CASE("identity-violating action is rejected") {
    CHECK_THROWS_AS(Act::make(s2(), {{1, 1}, {0, 0}}), IdentityActionFails);
  }

  TEST_CASE("incompatible action is rejected") {
    // over S₂ the zero column must be idempotent; a swap is not
    CHECK_THROWS_AS(Act::make(s2(), {{0, 1}, {1, 0}}), CompatibilityFails);
  }

  TEST_CASE("subact closure is enforced") {
    ActPtr a = s2_regular();
    CHECK_THROWS_AS(Subact::make(a, bits(a, {0})), ParseError);  // {1} not closed
    CHECK(Subact::make(a, bits(a, {1})).count() == 1);
    CHECK_THROWS_AS(Subact::make(a, Bitset(2)), ParseError);  // empty
  }
}

TEST_SUITE("generated subact") {
  TEST_CASE("cyclic subacts over the regular act") {
    ActPtr a = s2_regular();
    CHECK(generated_subact(a, {1}).members() == bits(a, {1}));     // 0S = {0}
    CHECK(generated_subact(a, {0}).members() == bits(a, {0, 1}));  // 1S = A
  }

  TEST_CASE("all elements generate the whole act") {
    ActPtr a = theta2(s2());
    CHECK(generated_subact(a, {0, 1}).members().is_full());
  }

  TEST_CASE("empty generator set is rejected") {
    CHECK_THROWS_AS(generated_subact(s2_regular(), {}), EmptyGenerators);
  }
}

TEST_SUITE("subact lattice") {
  TEST_CASE("two thetas: every nonempty subset") {
    std::vector<Subact> subs = all_subacts(theta2(s2()));
    REQUIRE(subs.size() == 3);
    CHECK(subs[0].members() == Bitset::of(2, {0}));
    CHECK(subs[1].members() == Bitset::of(2, {1}));
    CHECK(subs[2].members() == Bitset::of(2, {0, 1}));
  }

  TEST_CASE("regular act over the two-element monoid") {
    std::vector<Subact> subs = all_subacts(s2_regular());
    REQUIRE(subs.size() == 2);
    CHECK(subs[0].members() == Bitset::of(2, {1}));  // {0}
    CHECK(subs[1].members().is_full());
  }

  TEST_CASE("one-element act has one subact") {
    CHECK(all_subacts(theta(s2())).size() == 1);
  }

  TEST_CASE("matches subset filtering on every small enumerated act") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("cyclic_group:3"),
          std::string("right_zero_identity:2"), std::string("min_chain:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 3; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, false)) {
          std::vector<Bitset> expect = oracles::subsets_closed(*a);
          std::vector<Subact> got = all_subacts(a);
          REQUIRE(got.size() == expect.size());
          for (std::size_t i = 0; i < got.size(); ++i)
            CHECK(got[i].members() == expect[i]);
        }
    }
  }

  TEST_CASE("unions and intersections of subacts are action-closed") {
    MonoidPtr m = make_right_zero_identity(2);
    for (const ActPtr& a : enumerate_acts(m, 4, true)) {
      std::vector<Subact> subs = all_subacts(a);
      for (const Subact& b : subs)
        for (const Subact& c : subs) {
          Bitset u = b.members() | c.members();
          Bitset i = b.members() & c.members();
          for (int x = 0; x < a->size(); ++x) {
            if (u.test(x))
              for (int s = 0; s < m->size(); ++s) CHECK(u.test(a->apply(x, s)));
            if (i.test(x))
              for (int s = 0; s < m->size(); ++s) CHECK(i.test(a->apply(x, s)));
          }
        }
    }
  }
}

TEST_SUITE("rees quotient") {
  TEST_CASE("collapsing the zero ideal of the regular act") {
    ActPtr a = s2_regular();
    ReesQuotient q = rees_quotient(a, Subact::make(a, bits(a, {1})));
    REQUIRE(q.act->size() == 2);
    CHECK(act_isomorphic(*q.act, *a));
    CHECK(q.projection.map() == std::vector<int>{0, 1});
    CHECK(q.zero == 1);
  }

  TEST_CASE("total collapse gives the one-element act") {
    ActPtr a = s2_regular();
    ReesQuotient q = rees_quotient(a, Subact::make(a, bits(a, {0, 1})));
    CHECK(q.act->size() == 1);
    CHECK(q.projection.map() == std::vector<int>{0, 0});
  }

  TEST_CASE("three thetas modulo two leaves two elements") {
    ActPtr t3 = coproduct({theta(s2()), theta(s2()), theta(s2())}).act;
    ReesQuotient q = rees_quotient(t3, Subact::make(t3, bits(t3, {0, 1})));
    CHECK(q.act->size() == 2);
    CHECK(act_isomorphic(*q.act, *theta2(s2())));
  }

  TEST_CASE("preimage of the zero class recovers the subact") {
    ActPtr a = s2_regular();
    Subact b = Subact::make(a, bits(a, {1}));
    ReesQuotient q = rees_quotient(a, b);
    Bitset zero_class(q.act->size());
    zero_class.set(q.zero);
    CHECK(preimage(q.projection, Subact::make(q.act, zero_class)) == b.members());
  }
}

TEST_SUITE("coproduct and amalgam") {
  TEST_CASE("coproduct of thetas is the trivial-action act") {
    ActPtr t2 = theta2(s2());
    CHECK(t2->size() == 2);
    CHECK(t2->apply(0, 1) == 0);
    CHECK(t2->apply(1, 1) == 1);
  }

  TEST_CASE("coprojection homs are injective with disjoint images") {
    Coproduct cp = coproduct({s2_regular(), theta(s2())});
    REQUIRE(cp.act->size() == 3);
    CHECK(is_mono(cp.injections[0]));
    CHECK(is_mono(cp.injections[1]));
    // lattice of the mixed coproduct has exactly five subacts
    CHECK(all_subacts(cp.act).size() == 5);
  }

  TEST_CASE("mixed monoids are rejected") {
    CHECK_THROWS_AS(coproduct({theta(s2()), theta(make_cyclic_group(2))}),
                    MixedMonoids);
  }

  TEST_CASE("amalgam of the regular act along its ideal") {
    ActPtr a = s2_regular();
    ActPtr am = amalgam(a, Subact::make(a, bits(a, {1})));
    REQUIRE(am->size() == 3);
    // shared zero first, then the two copies of 1
    CHECK(am->label(0) == "0");
    CHECK(am->apply(1, 1) == 0);  // 1_a · 0 = 0
    CHECK(am->apply(2, 1) == 0);  // 1_b · 0 = 0
    CHECK(all_subacts(am).size() == 4);
  }

  TEST_CASE("amalgam along a one-point subact of two thetas") {
    ActPtr t2 = theta2(s2());
    ActPtr am = amalgam(t2, Subact::make(t2, bits(t2, {0})));
    REQUIRE(am->size() == 3);
    for (int a = 0; a < 3; ++a) CHECK(am->apply(a, 1) == a);  // trivial action
  }

  TEST_CASE("amalgam along the whole act is rejected") {
    ActPtr a = s2_regular();
    CHECK_THROWS_AS(amalgam(a, Subact::make(a, bits(a, {0, 1}))), NotProper);
  }
}

TEST_SUITE("homomorphisms") {
  TEST_CASE("regular act endomorphisms: identity and the constant zero") {
    ActPtr a = s2_regular();
    std::vector<Hom> homs = homomorphisms(a, a);
    REQUIRE(homs.size() == 2);
    CHECK(homs[0].map() == std::vector<int>{0, 1});
    CHECK(homs[1].map() == std::vector<int>{1, 1});
  }

  TEST_CASE("homs from theta are the fixed points") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("cyclic_group:2"),
          std::string("min_chain:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (const ActPtr& a : enumerate_acts(m, 3, false)) {
        int fixed = 0;
        for (int x = 0; x < a->size(); ++x) {
          bool fp = true;
          for (int s = 0; s < m->size(); ++s)
            if (a->apply(x, s) != x) fp = false;
          if (fp) ++fixed;
        }
        CHECK(homomorphisms(theta(m), a).size() == static_cast<std::size_t>(fixed));
      }
    }
  }

  TEST_CASE("generator-bounded search matches brute force") {
    MonoidPtr m = s2();
    std::vector<ActPtr> acts;
    for (int n = 1; n <= 3; ++n)
      for (const ActPtr& a : enumerate_acts(m, n, false)) acts.push_back(a);
    for (const ActPtr& a : acts)
      for (const ActPtr& b : acts) {
        if (a->size() * b->size() > 12) continue;
        std::vector<Hom> fast = homomorphisms(a, b);
        std::vector<Hom> brute = homomorphisms_brute(a, b);
        REQUIRE(fast.size() == brute.size());
        for (std::size_t i = 0; i < fast.size(); ++i)
          CHECK(fast[i].map() == brute[i].map());
        // duplicate-free
        for (std::size_t i = 1; i < fast.size(); ++i)
          CHECK(fast[i - 1].map() < fast[i].map());
      }
  }

  TEST_CASE("every returned hom satisfies equivariance") {
    MonoidPtr m = make_right_zero_identity(2);
    for (const ActPtr& a : enumerate_acts(m, 3, true))
      for (const ActPtr& b : enumerate_acts(m, 3, true))
        for (const Hom& h : homomorphisms(a, b))
          CHECK_NOTHROW(Hom::make(h.source(), h.target(), h.map()));
  }

  TEST_CASE("hom queries on the canonical projection and a constant") {
    ActPtr a = s2_regular();
    ReesQuotient q = rees_quotient(a, Subact::make(a, bits(a, {1})));
    CHECK(is_epi(q.projection));
    Hom constant = Hom::make(a, a, {1, 1});
    HomQueries hq = hom_queries(constant);
    CHECK_FALSE(hq.is_epi);
    CHECK_FALSE(hq.is_mono);
    CHECK(hq.image.members() == bits(a, {1}));
  }

  TEST_CASE("restriction re-indexes onto the subact") {
    ActPtr a = s2_regular();
    Hom id = Hom::make(a, a, {0, 1});
    Subact b = Subact::make(a, bits(a, {1}));
    Hom r = restrict_hom(id, b);
    CHECK(r.source()->size() == 1);
    CHECK(r.map() == std::vector<int>{1});
  }
}

TEST_SUITE("minimal generating sets") {
  TEST_CASE("pinned examples") {
    CHECK(minimal_generating_sets(s2_regular()) ==
          std::vector<std::vector<int>>{{0}});
    CHECK(minimal_generating_sets(theta2(s2())) ==
          std::vector<std::vector<int>>{{0, 1}});
    CHECK(minimal_generating_sets(theta(s2())) ==
          std::vector<std::vector<int>>{{0}});
  }

  TEST_CASE("matches the subset-scan oracle on enumerated acts") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("min_chain:2"),
          std::string("left_zero_identity:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 4; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, true))
          CHECK(minimal_generating_sets(a) ==
                oracles::minimal_gensets_subset_scan(*a));
    }
  }
}
