#include "doctest.h"

#include <random>

#include "relkit/finrel.hpp"
#include "testutil.hpp"

using namespace relkit;
using namespace relkit::finrel;

TEST_CASE("carriers reject duplicates and encode products row major") {
  CHECK_THROWS_AS(Carrier({"a", "b", "a"}), std::invalid_argument);
  Carrier A({"a", "b"});
  Carrier B({"u", "v", "w"});
  Carrier P = Carrier::product(A, B);
  CHECK(P.size() == 6);
  CHECK(P.at(0) == "(a,u)");
  CHECK(P.at(5) == "(b,w)");
  CHECK(P.index("(b,u)") == 3);
  CHECK(Carrier::point().size() == 1);
}

TEST_CASE("relation constructor canonicalizes and validates") {
  Carrier A({"a", "b"});
  Rel r(A, A, {{1, 0}, {0, 0}, {1, 0}});
  CHECK(r.pairs() == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}});
  CHECK_THROWS_AS(Rel(A, A, {{2, 0}}), std::invalid_argument);
  CHECK(Rel::empty(A, A).pairs().empty());
  CHECK(Rel::full(A, A).pairs().size() == 4);
}

TEST_CASE("composition, dagger and product match the naive oracle") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> size(1, 5);
    Carrier A = testutil::carrier(size(rng), "a");
    Carrier B = testutil::carrier(size(rng), "b");
    Carrier C = testutil::carrier(size(rng), "c");
    Rel r = testutil::random_rel(rng, A, B);
    Rel s = testutil::random_rel(rng, B, C);

    CHECK(oracle::to_set(compose(r, s)) == oracle::compose(oracle::to_set(r), oracle::to_set(s)));
    CHECK(oracle::to_set(dagger(r)) == oracle::dagger(oracle::to_set(r)));

    Rel t = testutil::random_rel(rng, C, A);
    CHECK(oracle::to_set(product(r, t)) ==
          oracle::product(oracle::to_set(r), oracle::to_set(t), C.size(), A.size()));
  }
}

TEST_CASE("dagger category laws hold on random relations") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> size(1, 4);
    Carrier A = testutil::carrier(size(rng), "a");
    Carrier B = testutil::carrier(size(rng), "b");
    Carrier C = testutil::carrier(size(rng), "c");
    Carrier D = testutil::carrier(size(rng), "d");
    Rel r = testutil::random_rel(rng, A, B);
    Rel s = testutil::random_rel(rng, B, C);
    Rel t = testutil::random_rel(rng, C, D);

    CHECK(compose(compose(r, s), t) == compose(r, compose(s, t)));
    CHECK(compose(identity(A), r) == r);
    CHECK(compose(r, identity(B)) == r);
    CHECK(dagger(dagger(r)) == r);
    CHECK(dagger(compose(r, s)) == compose(dagger(s), dagger(r)));
    CHECK(dagger(identity(A)) == identity(A));

    // Interchange: (r x s) . (s' x t') composes slot wise.
    Rel u = testutil::random_rel(rng, B, D);
    Rel v = testutil::random_rel(rng, D, A);
    CHECK(compose(product(r, u), product(s, v)) == product(compose(r, s), compose(u, v)));
  }
}

TEST_CASE("structure isomorphisms behave on concrete carriers") {
  Carrier A({"a0", "a1"});
  Carrier B({"b0", "b1", "b2"});
  Carrier C({"c0"});

  SUBCASE("swap exchanges the slots") {
    Rel sw = swap(A, B);
    CHECK(sw.contains("(a1,b2)", "(b2,a1)"));
    CHECK(compose(sw, swap(B, A)) == identity(Carrier::product(A, B)));
  }

  SUBCASE("associator reindexes to the right") {
    Rel as = assoc_right(A, B, C);
    CHECK(as.contains(pair_atom(pair_atom("a1", "b0"), "c0"),
                      pair_atom("a1", pair_atom("b0", "c0"))));
    CHECK(compose(as, dagger(as)) == identity(Carrier::product(Carrier::product(A, B), C)));
  }

  SUBCASE("unitors strip the point slot") {
    CHECK(left_unitor(A).contains("(*,a0)", "a0"));
    CHECK(right_unitor(A).contains("(a1,*)", "a1"));
  }

  SUBCASE("names and graphs") {
    Rel f = graph_of_map(A, B, {{"a0", "b1"}, {"a1", "b1"}});
    CHECK(f.pairs() == std::vector<std::pair<int, int>>{{0, 1}, {1, 1}});
    Rel nm = name_of_rel(f);
    CHECK(nm.src() == Carrier::point());
    CHECK(nm.contains("*", "(a0,b1)"));
    CHECK(nm.pairs().size() == 2);
    CHECK(point_rel(B, {"b2"}).contains("*", "b2"));
    CHECK(diagonal(A).contains("a0", "(a0,a0)"));
  }
}

TEST_CASE("classification flags match naive definitions") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 120; ++trial) {
    std::uniform_int_distribution<int> size(1, 4);
    Carrier A = testutil::carrier(size(rng), "a");
    Rel r = testutil::random_rel(rng, A, A, 0.4);
    auto fl = classify_relation(r);
    auto ps = oracle::to_set(r);

    bool function = true;
    for (int a = 0; a < A.size(); ++a) {
      int count = 0;
      for (const auto& [x, y] : ps)
        if (x == a) ++count;
      if (count != 1) function = false;
    }
    bool symmetric = ps == oracle::dagger(ps);
    bool idempotent = oracle::compose(ps, ps) == ps;
    bool reflexive = true;
    for (int a = 0; a < A.size(); ++a)
      if (!ps.count({a, a})) reflexive = false;
    oracle::PairSet sq = oracle::compose(ps, ps);
    bool transitive = std::includes(ps.begin(), ps.end(), sq.begin(), sq.end());
    bool equivalence = reflexive && symmetric && transitive;

    CHECK(fl.is_function == function);
    CHECK(fl.is_symmetric == symmetric);
    CHECK(fl.is_idempotent == idempotent);
    CHECK(fl.is_equivalence == equivalence);
  }
}

TEST_CASE("subrelation, union and intersection") {
  Carrier A({"a", "b"});
  Rel r(A, A, {{0, 0}});
  Rel s(A, A, {{0, 0}, {1, 1}});
  CHECK(is_subrelation(r, s));
  CHECK(!is_subrelation(s, r));
  CHECK(rel_union(r, s) == s);
  CHECK(rel_intersect(r, s) == r);
}

TEST_CASE("budget limits enumeration instead of sampling") {
  Budget tiny{10};
  Carrier A = testutil::carrier(4, "a");
  CHECK_THROWS_AS(Carrier::product(A, A, tiny), BudgetExceeded);
  Rel f = Rel::full(A, A);
  CHECK_THROWS_AS(compose(f, f, tiny), BudgetExceeded);
  try {
    compose(f, f, tiny);
  } catch (const BudgetExceeded& e) {
    CHECK(e.required() > e.limit());
  }
}
