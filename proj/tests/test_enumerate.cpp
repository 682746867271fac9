#include "doctest.h"

#include "actlab/catalog.hpp"
#include "actlab/enumerate.hpp"
#include "actlab/errors.hpp"
#include "actlab/ops.hpp"
#include "oracles.hpp"

using namespace actlab;

TEST_SUITE("act enumeration") {
  TEST_CASE("trivial monoid forces the action") {
    MonoidPtr m = make_trivial_monoid();
    for (int n = 1; n <= 4; ++n)
      CHECK(enumerate_acts(m, n, false).size() == 1);
  }

  TEST_CASE("one-element acts are unique") {
    for (const std::string& spec : desk_catalog())
      CHECK(enumerate_acts(monoid_from_spec(spec), 1, false).size() == 1);
  }

  TEST_CASE("two-element acts over the two-element monoid") {
    MonoidPtr m = make_cyclic_monoid(1, 1);
    // the zero column must be one of the three idempotent maps on 2 points
    CHECK(enumerate_acts(m, 2, false).size() == 3);
    CHECK(enumerate_acts(m, 2, true).size() == 2);
  }

  TEST_CASE("raw counts match the table-filter oracle") {
    for (const std::string& spec : desk_catalog()) {
      MonoidPtr m = monoid_from_spec(spec);
      if (m->size() > 4) continue;  // keep the unit run fast
      for (int n = 1; n * m->size() <= 8; ++n)
        CHECK(enumerate_acts(m, n, false).size() ==
              static_cast<std::size_t>(oracles::count_act_tables(*m, n)));
    }
  }

  TEST_CASE("every enumerated act validates") {
    MonoidPtr m = make_full_transformation(2);
    for (const ActPtr& a : enumerate_acts(m, 3, false))
      CHECK_NOTHROW(Act::make(m, a->rows()));
  }

  TEST_CASE("representatives are canonical, pairwise non-isomorphic, covering") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("cyclic_group:2"),
          std::string("min_chain:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      for (int n = 1; n <= 4; ++n) {
        std::vector<ActPtr> raw = enumerate_acts(m, n, false);
        std::vector<ActPtr> reps = enumerate_acts(m, n, true);
        for (std::size_t i = 0; i < reps.size(); ++i)
          for (std::size_t j = i + 1; j < reps.size(); ++j)
            CHECK_FALSE(oracles::perm_isomorphic(*reps[i], *reps[j]));
        for (const ActPtr& a : raw) {
          int hits = 0;
          for (const ActPtr& r : reps)
            if (oracles::perm_isomorphic(*a, *r)) ++hits;
          CHECK(hits == 1);  // exactly one representative per raw act
        }
      }
    }
  }
}

TEST_SUITE("isomorphism") {
  TEST_CASE("relabeled copies are isomorphic") {
    MonoidPtr m = make_cyclic_monoid(1, 1);
    ActPtr t2 = coproduct({theta(m), theta(m)}).act;
    ActPtr t2b = Act::make(m, t2->rows(), {"x", "y"});
    CHECK(act_isomorphic(*t2, *t2b));
  }

  TEST_CASE("trivial action differs from right multiplication") {
    MonoidPtr m = make_cyclic_monoid(1, 1);
    ActPtr t2 = coproduct({theta(m), theta(m)}).act;
    CHECK_FALSE(act_isomorphic(*t2, *regular_act(m)));
  }

  TEST_CASE("canonical forms match permutation search") {
    for (const std::string& spec :
         {std::string("cyclic_monoid:1,1"), std::string("right_zero_identity:2")}) {
      MonoidPtr m = monoid_from_spec(spec);
      std::vector<ActPtr> acts;
      for (int n = 2; n <= 3; ++n)
        for (const ActPtr& a : enumerate_acts(m, n, false)) acts.push_back(a);
      for (const ActPtr& a : acts)
        for (const ActPtr& b : acts) {
          if (a->size() != b->size()) continue;
          CHECK(act_isomorphic(*a, *b) == oracles::perm_isomorphic(*a, *b));
        }
    }
  }

  TEST_CASE("mixed monoids are rejected") {
    CHECK_THROWS_AS(act_isomorphic(*theta(make_cyclic_monoid(1, 1)),
                                   *theta(make_cyclic_group(2))),
                    MixedMonoids);
  }
}

TEST_SUITE("catalog") {
  TEST_CASE("every catalog spec builds a valid monoid") {
    for (const std::string& spec : desk_catalog()) {
      MonoidPtr m = monoid_from_spec(spec);
      CHECK(m->size() >= 1);
    }
  }

  TEST_CASE("catalog sizes stay in the desk range") {
    for (const std::string& spec : desk_catalog()) {
      MonoidPtr m = monoid_from_spec(spec);
      bool small = m->size() <= 4;
      bool t3 = spec == "full_transformation:3";
      CHECK((small || t3));
    }
  }

  TEST_CASE("the transformation monoid on three points has 27 elements") {
    CHECK(make_full_transformation(3)->size() == 27);
    CHECK(make_full_transformation(2)->size() == 4);
  }

  TEST_CASE("bad specs are rejected") {
    CHECK_THROWS_AS(monoid_from_spec("nope"), ParseError);
    CHECK_THROWS_AS(monoid_from_spec("cyclic_group:x"), ParseError);
    CHECK_THROWS_AS(monoid_from_spec("full_transformation:4"), ParseError);
  }
}
