#include "doctest.h"

#include "relkit/frobenius.hpp"
#include "relkit/monoids.hpp"
#include "testutil.hpp"

using namespace relkit;
using namespace relkit::monoids;
using relkit::finrel::Carrier;
using relkit::finrel::Rel;

namespace {

Rel group_mul(const Carrier& X, int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairs.emplace_back(a * n + b, (a + b) % n);
  return Rel(Carrier::product(X, X), X, std::move(pairs));
}

Rel meet_mul(const Carrier& X) {
  // atoms {1, p} with 1 the top: x.y = min.
  return Rel::from_atoms(Carrier::product(X, X), X,
                         {{"(1,1)", "1"}, {"(1,p)", "p"}, {"(p,1)", "p"}, {"(p,p)", "p"}});
}

}  // namespace

TEST_CASE("a genuine monoid is a weak monoid with identity unitor") {
  Carrier X = testutil::carrier(3, "g");
  WeakMonoidCandidate c{X, finrel::point_rel(X, {"g0"}), group_mul(X, 3)};
  WeakMonoidResult r = check_weak_monoid(c);
  CHECK(r.report.verdict());
  CHECK(r.L2 == finrel::identity(X));
}

TEST_CASE("left zero multiplication breaks the unitor comparison") {
  Carrier X({"a", "b"});
  Rel mul = Rel::from_atoms(Carrier::product(X, X), X,
                            {{"(a,a)", "a"}, {"(a,b)", "a"}, {"(b,a)", "b"}, {"(b,b)", "b"}});
  WeakMonoidCandidate c{X, finrel::point_rel(X, {"a"}), mul};
  WeakMonoidResult r = check_weak_monoid(c);
  CHECK(r.report.find("associative")->ok);
  CHECK(!r.report.find("unitors")->ok);
}

TEST_CASE("group inversion derives the unit of the star monoid") {
  Carrier X = testutil::carrier(3, "g");
  StarMonoidCandidate c{X, group_mul(X, 3), {0, 2, 1}};
  StarMonoidResult r = check_weak_star_monoid(c);
  CHECK(r.report.verdict());
  CHECK(r.L1 == finrel::point_rel(X, {"g0"}));
  CHECK(r.L2 == finrel::identity(X));
}

TEST_CASE("the meet semilattice is a weak star monoid with a proper projector") {
  Carrier X({"1", "p"});
  StarMonoidCandidate c{X, meet_mul(X), {0, 1}};
  StarMonoidResult r = check_weak_star_monoid(c);
  CHECK(r.report.verdict());
  // Every x.psi(x) = x, so the derived unit is the whole carrier.
  CHECK(r.L1 == Rel::full(Carrier::point(), X));
  CHECK(r.L2 == Rel(X, X, {{0, 0}, {0, 1}, {1, 1}}));
  CHECK(r.L2 != finrel::identity(X));
}

TEST_CASE("a non involutive table is reported with the offending atom") {
  Carrier X = testutil::carrier(3, "g");
  StarMonoidCandidate c{X, group_mul(X, 3), {1, 2, 0}};  // a 3-cycle, not an involution
  StarMonoidResult r = check_weak_star_monoid(c);
  const Check* inv = r.report.find("involutive");
  REQUIRE(inv != nullptr);
  CHECK(!inv->ok);
  CHECK(inv->witnesses[0] == "psi(psi(g0)) = g2");
}

TEST_CASE("the cyclic triple relation of a group recovers its multiplication") {
  Carrier X = testutil::carrier(3, "g");
  const int n = 3;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairs.emplace_back(a * n + b, (2 * n - a - b) % n);
  CyclicCandidate c{X, {0, 2, 1}, Rel(Carrier::product(X, X), X, std::move(pairs))};
  CyclicResult r = check_cyclic_weak_star_monoid(c);
  CHECK(r.report.verdict());
  CHECK(r.L3 == group_mul(X, 3));
  CHECK(r.L1 == finrel::point_rel(X, {"g0"}));
  CHECK(r.L2 == finrel::identity(X));
}

TEST_CASE("the identity involution turns the triple relation into a non associative table") {
  Carrier X = testutil::carrier(3, "g");
  const int n = 3;
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) pairs.emplace_back(a * n + b, (2 * n - a - b) % n);
  CyclicCandidate c{X, {0, 1, 2}, Rel(Carrier::product(X, X), X, std::move(pairs))};
  CyclicResult r = check_cyclic_weak_star_monoid(c);
  CHECK(r.report.find("cyclic")->ok);
  CHECK(!r.report.find("associative")->ok);
}

TEST_CASE("a shift asymmetric triple relation is caught") {
  Carrier X({"a", "b"});
  CyclicCandidate c{X, {0, 1}, Rel(Carrier::product(X, X), X, {{1, 0}})};  // (a,b,a) alone
  CyclicResult r = check_cyclic_weak_star_monoid(c);
  const Check* cy = r.report.find("cyclic");
  REQUIRE(cy != nullptr);
  CHECK(!cy->ok);
  CHECK(cy->witnesses[0] == "(a,b,a) present but its shift (a,a,b) is not");
}

TEST_CASE("shape validation and budget guards") {
  Carrier X = testutil::carrier(3, "g");
  CHECK_THROWS_AS(check_weak_monoid({X, finrel::point_rel(X, {"g0"}), finrel::identity(X)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_weak_star_monoid({X, group_mul(X, 3), {0, 2}}), std::invalid_argument);
  Budget tiny{5};
  CHECK_THROWS_AS(check_weak_monoid({X, finrel::point_rel(X, {"g0"}), group_mul(X, 3)}, tiny),
                  BudgetExceeded);
}
