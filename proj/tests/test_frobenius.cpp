#include "doctest.h"

#include "relkit/frobenius.hpp"
#include "testutil.hpp"

using namespace relkit;
using namespace relkit::frobenius;
using relkit::finrel::Carrier;
using relkit::finrel::Rel;

namespace {

FrobCandidate group_candidate(int n, const std::string& prefix) {
  return from_groupoid(group_groupoid(testutil::names(n, prefix), testutil::cyclic_table(n), 0));
}

}  // namespace

TEST_CASE("cyclic group tables satisfy all four laws with the identity as unit") {
  for (int n = 2; n <= 4; ++n) {
    FrobCandidate c = group_candidate(n, "g");
    FrobReport fr = check_frobenius_axioms(c);
    CHECK(fr.report.verdict());
    REQUIRE(fr.unit.has_value());
    CHECK(*fr.unit == std::vector<std::string>{"g0"});
  }
}

TEST_CASE("left zero semigroup fails exactly the unit law") {
  Carrier X({"a", "b"});
  Rel m = finrel::Rel::from_atoms(
      Carrier::product(X, X), X,
      {{"(a,a)", "a"}, {"(a,b)", "a"}, {"(b,a)", "b"}, {"(b,b)", "b"}});
  FrobCandidate c = make_candidate(X, m);
  FrobReport fr = check_frobenius_axioms(c);
  CHECK(!fr.report.verdict());
  CHECK(!fr.unit.has_value());
  CHECK(fr.report.find("(M)")->ok);
  CHECK(fr.report.find("(A)")->ok);
  CHECK(fr.report.find("(F)")->ok);
  const Check* u = fr.report.find("(U)");
  REQUIRE(u != nullptr);
  CHECK(!u->ok);
  CHECK(std::find(u->witnesses.begin(), u->witnesses.end(),
                  "no candidate unit acts on a from the left") != u->witnesses.end());

  CHECK_THROWS_AS(to_groupoid(c), PreconditionError);
}

TEST_CASE("fail fast reports a prefix ending at the first failing law") {
  Carrier X({"a", "b"});
  Rel m = finrel::Rel::from_atoms(Carrier::product(X, X), X, {{"(a,a)", "a"}});
  FrobCandidate c = make_candidate(X, m);

  FrobOptions ff;
  ff.fail_fast = true;
  FrobReport fr = check_frobenius_axioms(c, ff);
  CHECK(fr.report.checks().size() == 1);
  CHECK(fr.report.checks()[0].law == "(M)");
  CHECK(!fr.report.checks()[0].ok);

  FrobReport full = check_frobenius_axioms(c);
  CHECK(full.report.checks().size() == 4);
}

TEST_CASE("candidate constructor validates carriers and budget") {
  Carrier X({"a", "b"});
  CHECK_THROWS_AS(make_candidate(X, finrel::identity(X)), std::invalid_argument);
  Budget tiny{3};
  Rel m = Rel::full(Carrier::product(X, X), X);
  CHECK_THROWS_AS(check_frobenius_axioms(make_candidate(X, m), FrobOptions{tiny, false}),
                  BudgetExceeded);
}

TEST_CASE("groupoid builders and their unions satisfy the category axioms") {
  auto census = testutil::groupoid_census(4);
  CHECK(census.size() == 13);
  for (const auto& g : census) CHECK(check_groupoid_axioms(g).verdict());

  Groupoid corrupt = group_groupoid(testutil::names(3, "g"), testutil::cyclic_table(3), 0);
  corrupt.inv = {0, 1, 2};  // pretend every arrow is its own inverse
  Report rep = check_groupoid_axioms(corrupt);
  CHECK(!rep.verdict());
  CHECK(!rep.find("A.4")->ok);
  CHECK(!rep.find("A.5")->ok);
}

TEST_CASE("algebra and groupoid round trips are mutually inverse") {
  for (const auto& g : testutil::groupoid_census(4)) {
    FrobCandidate c = from_groupoid(g);
    FrobReport fr = check_frobenius_axioms(c);
    REQUIRE(fr.report.verdict());
    Groupoid back = to_groupoid(c);
    CHECK(check_groupoid_axioms(back).verdict());
    CHECK(equal_up_to_object_names(g, back));
  }

  FrobCandidate c = group_candidate(3, "g");
  CHECK(from_groupoid(to_groupoid(c)).m == c.m);
}

TEST_CASE("exhaustive two atom sweep agrees between the two routes") {
  Carrier X({"a", "b"});
  Carrier XX = Carrier::product(X, X);
  int passing = 0;
  for (int mask = 0; mask < 256; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (int slot = 0; slot < 8; ++slot)
      if (mask & (1 << slot)) pairs.emplace_back(slot / 2, slot % 2);
    FrobCandidate c{X, Rel(XX, X, std::move(pairs))};

    bool algebra = check_frobenius_axioms(c).report.verdict();
    bool converted = true;
    try {
      Groupoid g = to_groupoid(c);
      CHECK(check_groupoid_axioms(g).verdict());
      CHECK(from_groupoid(g).m == c.m);
    } catch (const PreconditionError&) {
      converted = false;
    }
    CHECK(algebra == converted);
    if (algebra) ++passing;
  }
  // The two relabelings of the two element group plus the discrete structure.
  CHECK(passing == 3);
}

TEST_CASE("morphism modes grade homomorphism strength") {
  FrobCandidate z2 = group_candidate(2, "g");
  FrobCandidate z1 = group_candidate(1, "h");
  FrobCandidate z3 = group_candidate(3, "k");

  SUBCASE("identity relations pass every mode") {
    FrobMorphism id{z3, z3, finrel::identity(z3.X)};
    for (MorphMode mode : {MorphMode::ext, MorphMode::frob, MorphMode::func, MorphMode::mfunc})
      CHECK(check_morphism(id, mode).verdict());
  }

  SUBCASE("the full projection onto the trivial group is a strong morphism") {
    FrobMorphism proj{z2, z1, Rel::full(z2.X, z1.X)};
    CHECK(check_morphism(proj, MorphMode::frob).verdict());
    CHECK(check_morphism(proj, MorphMode::func).verdict());
    CHECK(check_morphism(proj, MorphMode::mfunc).verdict());
  }

  SUBCASE("the unit inclusion fails the comultiplication and lifting clauses") {
    FrobMorphism incl{z1, z2, Rel(z1.X, z2.X, {{0, 0}})};
    Report frob = check_morphism(incl, MorphMode::frob);
    CHECK(frob.find("frob.mul")->ok);
    CHECK(!frob.find("frob.comul")->ok);
    Report mfunc = check_morphism(incl, MorphMode::mfunc);
    CHECK(!mfunc.find("mfunc.decompose")->ok);
    CHECK(mfunc.find("mfunc.compose-forward")->ok);
  }

  SUBCASE("a non homomorphism fails the multiplicative law") {
    FrobMorphism sw{z2, z2, Rel(z2.X, z2.X, {{0, 1}, {1, 0}})};
    Report rep = check_morphism(sw, MorphMode::frob);
    CHECK(!rep.find("frob.mul")->ok);
  }

  SUBCASE("carrier mismatches and failing candidates are rejected") {
    CHECK_THROWS_AS(check_morphism({z2, z1, finrel::identity(z2.X)}, MorphMode::frob),
                    std::invalid_argument);
    Carrier X({"a", "b"});
    Rel m = finrel::Rel::from_atoms(Carrier::product(X, X), X, {{"(a,a)", "a"}});
    FrobCandidate bad{X, m};
    CHECK_THROWS_AS(check_morphism({bad, z1, Rel::full(X, z1.X)}, MorphMode::frob),
                    PreconditionError);
  }
}

TEST_CASE("a strong morphism carries a groupoid structure on its pair set") {
  FrobCandidate z2 = group_candidate(2, "g");
  FrobCandidate z1 = group_candidate(1, "h");
  FrobMorphism proj{z2, z1, Rel::full(z2.X, z1.X)};
  Groupoid ind = induced_subgroupoid(proj);
  CHECK(check_groupoid_axioms(ind).verdict());
  CHECK(ind.G1.size() == 2);
  CHECK(ind.G0.size() == 1);

  FrobMorphism incl{z1, z2, Rel(z1.X, z2.X, {{0, 0}})};
  CHECK_THROWS_AS(induced_subgroupoid(incl), PreconditionError);
}
