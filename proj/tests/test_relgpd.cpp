#include "doctest.h"

#include <algorithm>
#include <set>

#include "relkit/relgpd.hpp"
#include "testutil.hpp"

using namespace relkit;
using namespace relkit::relgpd;
using relkit::finrel::Carrier;
using relkit::finrel::Rel;
using relkit::linalg::Mat;
using relkit::symplin::Subspace;
using relkit::symplin::SympSpace;

namespace {

const Budget kWide{4'000'000};  // the modulus 8 sweeps charge 2^20 pairs

Rel shift_rel(const Carrier& G, int add, int offset) {
  // {(m, n, m+n+offset)} read as a relation G*G -> G over Z/add.
  std::vector<std::pair<int, int>> pairs;
  for (int m = 0; m < add; ++m)
    for (int n = 0; n < add; ++n) pairs.emplace_back(m * add + n, (m + n + offset) % add);
  return Rel(Carrier::product(G, G), G, std::move(pairs));
}

Mat rows(std::initializer_list<std::initializer_list<int>> vals) {
  std::vector<std::vector<Rat>> rs;
  for (const auto& r : vals) {
    std::vector<Rat> row;
    for (int v : r) row.emplace_back(v);
    rs.push_back(std::move(row));
  }
  return Mat::from_rows(rs);
}

}  // namespace

TEST_CASE("the five element counterexample derives the shifted structure") {
  SetCandidate c = cyclic_counterexample(5);
  SetDerived d = derive(c);

  CHECK(d.L1 == finrel::point_rel(c.G, {"1"}));
  std::vector<std::pair<int, int>> l2;
  for (int m = 0; m < 5; ++m) l2.emplace_back(m, (m + 2) % 5);
  CHECK(d.L2 == Rel(c.G, c.G, std::move(l2)));
  CHECK(d.L3 == shift_rel(c.G, 5, 1));
  CHECK(d.C == c.G.atoms());

  Report rep = check_core_axioms(c);
  CHECK(!rep.verdict());
  for (const char* law : {"A.1", "A.2", "A.4", "A.6 unitors"}) CHECK(rep.passed(law));
  for (const char* law : {"A.3", "A.5", "A.6 unit-invariance", "A.6 mul-invariance",
                          "A.6 mul-invariance-pair", "A.6 inversion", "A.6 transpose",
                          "A.6 idempotent"})
    CHECK(!rep.find(law)->ok);

  const Check* a3 = rep.find("A.3");
  CHECK(std::find(a3->witnesses.begin(), a3->witnesses.end(),
                  "(0,0,1) not in L but (0,0,4) is") != a3->witnesses.end());
  CHECK(rep.find("A.5")->witnesses ==
        std::vector<std::string>{"(* -> 1) on one side only", "(* -> 3) on one side only"});

  // The failing composites take the displayed values.
  std::vector<std::pair<int, int>> l2sq;
  for (int m = 0; m < 5; ++m) l2sq.emplace_back(m, (m + 4) % 5);
  CHECK(finrel::compose(d.L2, d.L2) == Rel(c.G, c.G, std::move(l2sq)));
  CHECK(finrel::compose(d.L3, d.L2) != d.L3);

  CHECK_THROWS_AS(check_regularity(c), PreconditionError);
  CHECK_THROWS_AS(reduce_to_groupoid(c), PreconditionError);
}

TEST_CASE("the parity candidate is regular and reduces to the two element group") {
  SetCandidate c = parity_example(8);
  CHECK(check_core_axioms(c, kWide).verdict());

  RegularityData reg = check_regularity(c, kWide);
  CHECK(reg.report.verdict());
  CHECK(reg.C == c.G.atoms());
  CHECK(reg.M == std::vector<std::vector<std::string>>{{"1", "3", "5", "7"}});
  // Every element has the single unit class as source and target.
  CHECK(reg.S.pairs().size() == 8);
  CHECK(reg.S == reg.T);

  frobenius::Groupoid g = reduce_to_groupoid(c, kWide);
  CHECK(g.G1.size() == 2);
  CHECK(g.G0.size() == 1);
  frobenius::Groupoid expected = frobenius::group_groupoid(
      {"0", "1"}, {{1, 0}, {0, 1}}, 1);
  CHECK(frobenius::equal_up_to_object_names(expected, g));
  CHECK(frobenius::check_groupoid_axioms(g).verdict());
}

TEST_CASE("groupoids embed as regular candidates and reduce back") {
  for (const auto& g : testutil::groupoid_census(4)) {
    SetCandidate c = relgpd::from_groupoid(g);
    CHECK(derive(c).L2 == finrel::identity(c.G));
    REQUIRE(check_core_axioms(c).verdict());
    CHECK(check_regularity(c).report.verdict());
    CHECK(frobenius::equal_up_to_object_names(g, reduce_to_groupoid(c)));
  }
}

TEST_CASE("derived projector and involution give self equivalences") {
  SetCandidate c = relgpd::from_groupoid(frobenius::pair_groupoid({"p", "q"}));
  SetDerived d = derive(c);

  Report self = check_morphism(d.L2, c, c, RsgMode::equivalence);
  CHECK(self.verdict());
  CHECK(self.find("composite source") != nullptr);

  std::vector<std::pair<std::string, std::string>> inv_pairs;
  for (int i = 0; i < c.G.size(); ++i)
    inv_pairs.emplace_back(c.G.at(i), c.G.at(c.I[static_cast<std::size_t>(i)]));
  Rel graph_i = finrel::graph_of_map(c.G, c.G, inv_pairs);
  CHECK(check_morphism(graph_i, c, opposite(c), RsgMode::equivalence).verdict());

  // The diagonal embeds a candidate into its square. The square's
  // associativity sweep composes two relations of 4096 and 256 pairs.
  SetCandidate sq = power(c, 2);
  CHECK(check_core_axioms(sq, kWide).verdict());
  CHECK(check_morphism(finrel::diagonal(c.G), c, sq, RsgMode::morphism, kWide).verdict());
}

TEST_CASE("a broken relation fails the equivalence composites") {
  SetCandidate c = relgpd::from_groupoid(frobenius::pair_groupoid({"p", "q"}));
  Rel empty = Rel::empty(c.G, c.G);
  Report rep = check_morphism(empty, c, c, RsgMode::equivalence);
  CHECK(rep.passed("commutes-with-I"));
  CHECK(!rep.passed("composite source"));
}

TEST_CASE("morphism checks guard their preconditions") {
  SetCandidate good = relgpd::from_groupoid(frobenius::pair_groupoid({"p", "q"}));
  SetCandidate bad = cyclic_counterexample(5);
  CHECK_THROWS_AS(check_morphism(finrel::identity(bad.G), bad, bad, RsgMode::morphism),
                  PreconditionError);
  CHECK_THROWS_AS(check_morphism(finrel::identity(good.G), good, bad, RsgMode::morphism),
                  std::invalid_argument);
}

TEST_CASE("builders validate their arguments") {
  CHECK_THROWS_AS(cyclic_counterexample(2), std::invalid_argument);
  CHECK_THROWS_AS(parity_example(5), std::invalid_argument);
  Carrier G({"a", "b"});
  CHECK_THROWS_AS(make_set_candidate(G, {}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(make_set_candidate(G, {{{0, 0, 2}}}, {0, 1}), std::invalid_argument);
  // I = a 2-cycle composed with itself is fine; a 3-cycle is rejected at derive.
  Carrier H({"a", "b", "c"});
  SetCandidate rot = make_set_candidate(H, {}, {1, 2, 0});
  CHECK_THROWS_AS(derive(rot), std::invalid_argument);
  CHECK_THROWS_AS(invariant_triple(G, {"a"}, {{"a", "b"}, {"b", "a"}}), std::invalid_argument);
}

TEST_CASE("invariant subsets give passing candidates") {
  Carrier G({"a", "b"});
  SetCandidate c = invariant_triple(G, {"a"}, {{"a", "a"}, {"b", "b"}});
  CHECK(check_core_axioms(c).verdict());
  RegularityData reg = check_regularity(c);
  CHECK(reg.report.verdict());
  CHECK(reg.C == std::vector<std::string>{"a"});
  CHECK(reduce_to_groupoid(c).G1.size() == 1);
}

TEST_CASE("a lagrangian triple over the plane passes the linear axioms") {
  SympSpace V = SympSpace::standard(2);
  Subspace L(2, rows({{1, 0}}));
  Mat phi = rows({{1, 0}, {0, -1}});
  LinearCandidate c = lagrangian_triple(V, L, phi);

  LinearDerived d = derive_linear(c);
  CHECK(d.L_lagrangian);
  CHECK(d.graph_I_lagrangian);
  CHECK(d.L1_lagrangian);
  CHECK(d.L2_lagrangian);
  CHECK(d.L3_lagrangian);
  CHECK(d.L1 == L);

  CHECK(check_core_axioms_linear(c).verdict());
  LinearRegularityData reg = check_regularity_linear(c);
  CHECK(reg.report.verdict());
  CHECK(reg.object_dim == 0);
  CHECK(reduce_to_groupoid_linear(c).G1.size() == 1);

  CHECK(check_morphism_linear(d.L2, c, c, RsgMode::equivalence).verdict());
}

TEST_CASE("the linear pair construction has a two dimensional object space") {
  SympSpace V = SympSpace::standard(2);
  LinearCandidate c = pair_linear(V);
  CHECK(check_core_axioms_linear(c).verdict());

  LinearDerived d = derive_linear(c);
  CHECK(d.L1.dim() == 2);
  CHECK(d.L2.graph.dim() == 4);
  CHECK(d.L_lagrangian);

  LinearRegularityData reg = check_regularity_linear(c);
  CHECK(reg.report.verdict());
  CHECK(reg.C == Subspace::full(4));
  CHECK(reg.object_dim == 2);
  // A positive dimensional object space has infinitely many classes.
  CHECK_THROWS_AS(reduce_to_groupoid_linear(c), std::domain_error);
}

TEST_CASE("linear candidate validation") {
  SympSpace V = SympSpace::standard(2);
  Subspace L(2, rows({{1, 0}}));
  CHECK_THROWS_AS(make_linear_candidate(V, Subspace::zero(4), Mat::identity(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_linear_candidate(V, Subspace::zero(6), rows({{1, 1}, {0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_linear_candidate(V, Subspace::zero(6), Mat::identity(2)),
                  std::invalid_argument);  // symplectic, not antisymplectic
  CHECK_THROWS_AS(lagrangian_triple(V, Subspace::full(2), rows({{1, 0}, {0, -1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(lagrangian_triple(V, Subspace(2, rows({{1, 1}})), rows({{1, 0}, {0, -1}})),
                  std::invalid_argument);  // not invariant under the involution
}
