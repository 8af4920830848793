#include "doctest.h"

#include <algorithm>

#include "relkit/document.hpp"
#include "relkit/frobenius.hpp"
#include "relkit/hstar.hpp"
#include "testutil.hpp"

using namespace relkit;
using namespace relkit::hstar;
using relkit::finrel::Carrier;
using relkit::finrel::Rel;

namespace {

const std::string kSamples = RELKIT_SAMPLES_DIR;

HStarCandidate group_candidate(int n) {
  auto c = frobenius::from_groupoid(
      frobenius::group_groupoid(testutil::names(n, "g"), testutil::cyclic_table(n), 0));
  return HStarCandidate{c.X, c.m};
}

HStarCandidate band_candidate() {
  return doc::parse_hstar(doc::read_file(kSamples + "/band2x2-hstar.json"));
}

bool has_witness_prefix(const Check& c, const std::string& prefix) {
  return std::any_of(c.witnesses.begin(), c.witnesses.end(), [&](const std::string& w) {
    return w.rfind(prefix, 0) == 0;
  });
}

}  // namespace

TEST_CASE("star sets of groups pick out inverses") {
  HStarCandidate z3 = group_candidate(3);
  CHECK(star_set(z3, {"g1"}) == std::vector<std::string>{"g2"});
  CHECK(star_set(z3, {"g0"}) == std::vector<std::string>{"g0"});
  CHECK(star_set(z3, {}) == z3.X.atoms());
  // In the rectangular band every element is a pseudoinverse of every other.
  CHECK(star_set(band_candidate(), {"11"}) == band_candidate().X.atoms());
}

TEST_CASE("group tables satisfy the involution axiom") {
  for (int n = 2; n <= 4; ++n) {
    HStarReport hr = check_hstar_axioms(group_candidate(n));
    CHECK(hr.report.verdict());
    CHECK(hr.star_double_containment);
    CHECK(hr.star_observation_failures.empty());
  }
}

TEST_CASE("the rectangular band is associative but fails the involution axiom") {
  HStarReport hr = check_hstar_axioms(band_candidate());
  CHECK(hr.report.find("(M)")->ok);
  CHECK(hr.report.find("(A)")->ok);
  const Check* h = hr.report.find("(H)");
  REQUIRE(h != nullptr);
  CHECK(!h->ok);
  CHECK(std::find(h->witnesses.begin(), h->witnesses.end(),
                  "A={11}: first equation differs at (12,11)") != h->witnesses.end());
}

TEST_CASE("the meet semilattice fails only the involution axiom") {
  Carrier X({"1", "p"});
  Rel m = Rel::from_atoms(Carrier::product(X, X), X,
                          {{"(1,1)", "1"}, {"(1,p)", "p"}, {"(p,1)", "p"}, {"(p,p)", "p"}});
  HStarReport hr = check_hstar_axioms(make_candidate(X, m));
  CHECK(hr.report.find("(M)")->ok);
  CHECK(hr.report.find("(A)")->ok);
  const Check* h = hr.report.find("(H)");
  REQUIRE(h != nullptr);
  CHECK(!h->ok);
  CHECK(std::find(h->witnesses.begin(), h->witnesses.end(),
                  "A={p}: first equation differs at (1,p)") != h->witnesses.end());
}

TEST_CASE("the null semigroup fails surjectivity") {
  Carrier X({"z", "a"});
  Rel m = Rel::from_atoms(Carrier::product(X, X), X,
                          {{"(z,z)", "z"}, {"(z,a)", "z"}, {"(a,z)", "z"}, {"(a,a)", "z"}});
  HStarReport hr = check_hstar_axioms(make_candidate(X, m));
  const Check* mlaw = hr.report.find("(M)");
  REQUIRE(mlaw != nullptr);
  CHECK(!mlaw->ok);
  CHECK(std::find(mlaw->witnesses.begin(), mlaw->witnesses.end(),
                  "a is not a product of any pair") != mlaw->witnesses.end());
}

TEST_CASE("passing candidates induce regular locally cancellative semigroupoids") {
  for (const auto& g : testutil::groupoid_census(4)) {
    auto fc = frobenius::from_groupoid(g);
    HStarCandidate c{fc.X, fc.m};
    REQUIRE(check_hstar_axioms(c).report.verdict());
    Semigroupoid s = to_semigroupoid(c);
    SgpdReport sr = check_semigroupoid_properties(s);
    CHECK(sr.report.verdict());
    CHECK(sr.regular);
    CHECK(sr.locally_cancellative);
    CHECK(from_semigroupoid(s).m == c.m);
    CHECK(adjunction_check(c).verdict());
  }
}

TEST_CASE("induced semigroupoid of a group is one object with a full table") {
  Semigroupoid s = to_semigroupoid(group_candidate(3));
  CHECK(s.G0.size() == 1);
  CHECK(s.G1.size() == 3);
  CHECK(s.mu.size() == 9);
}

TEST_CASE("the band as a one object semigroupoid is regular but not locally cancellative") {
  Semigroupoid s =
      doc::parse_semigroupoid(doc::read_file(kSamples + "/band2x2-semigroupoid.json"));
  SgpdReport sr = check_semigroupoid_properties(s);
  CHECK(sr.report.passed("domain"));
  CHECK(sr.associative);
  CHECK(sr.regular);
  CHECK(!sr.locally_cancellative);
  const Check* lc = sr.report.find("locally-cancellative");
  REQUIRE(lc != nullptr);
  CHECK(has_witness_prefix(*lc, "left:"));
  CHECK(has_witness_prefix(*lc, "right:"));
}

TEST_CASE("failed preconditions carry their report") {
  HStarCandidate band = band_candidate();
  CHECK_THROWS_AS(to_semigroupoid(band), PreconditionError);
  CHECK_THROWS_AS(adjunction_check(band), PreconditionError);
  try {
    to_semigroupoid(band);
  } catch (const PreconditionError& e) {
    const Check* h = e.report().find("(H)");
    REQUIRE(h != nullptr);
    CHECK(!h->ok);
  }

  Semigroupoid s =
      doc::parse_semigroupoid(doc::read_file(kSamples + "/band2x2-semigroupoid.json"));
  CHECK_THROWS_AS(from_semigroupoid(s), PreconditionError);
}

TEST_CASE("the subset sweep is budget guarded") {
  Budget tiny{4};
  CHECK_THROWS_AS(check_hstar_axioms(group_candidate(3), HStarOptions{tiny, false}),
                  BudgetExceeded);
}
