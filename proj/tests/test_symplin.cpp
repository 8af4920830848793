#include "doctest.h"

#include <random>

#include "relkit/matrix.hpp"
#include "relkit/symplin.hpp"
#include "testutil.hpp"

using namespace relkit;
using namespace relkit::symplin;
using relkit::linalg::Mat;
using testutil::random_coisotropic;
using testutil::random_lagrangian;
using testutil::random_mat;
using testutil::random_skew;
using testutil::random_symplectomorphism;

namespace {

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

TEST_CASE("exact linear algebra kernel") {
  Mat m = rows({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
  int rank = 0;
  Mat r = linalg::rref(m, &rank);
  CHECK(rank == 2);
  CHECK(r == rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}));

  Mat k = linalg::kernel(m);
  CHECK(k.rows() == 1);
  CHECK((m * k.transpose()).is_zero());

  Mat inv2 = rows({{1, 1}, {0, 1}});
  REQUIRE(linalg::inverse(inv2).has_value());
  CHECK(*linalg::inverse(inv2) == rows({{1, -1}, {0, 1}}));
  CHECK(!linalg::inverse(rows({{1, 2}, {2, 4}})).has_value());

  auto sol = linalg::solve(m, {Rat(6), Rat(12), Rat(2)});
  REQUIRE(sol.has_value());
  std::vector<Rat> prod(3, Rat(0));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) prod[i] += m.at(i, j) * (*sol)[j];
  CHECK(prod == std::vector<Rat>{Rat(6), Rat(12), Rat(2)});
  CHECK(!linalg::solve(rows({{1, 0}, {1, 0}}), {Rat(1), Rat(2)}).has_value());

  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    Mat a = random_mat(rng, 4, 4);
    auto ainv = linalg::inverse(a);
    if (ainv) CHECK(*ainv * a == Mat::identity(4));
    Mat ker = linalg::kernel(a);
    CHECK(ker.rows() == 4 - linalg::rank(a));
    CHECK((a * ker.transpose()).is_zero());
  }
}

TEST_CASE("subspaces canonicalize and support lattice operations") {
  Subspace a(2, rows({{1, 0}, {1, 1}}));
  CHECK(a == Subspace::full(2));
  CHECK(Subspace::zero(2).dim() == 0);
  Subspace d(2, rows({{2, 2}}));
  CHECK(d.basis() == rows({{1, 1}}));
  CHECK(d.contains_vector({Rat(-3), Rat(-3)}));
  CHECK(!d.contains_vector({Rat(1), Rat(0)}));
  CHECK(a.contains(d));
  CHECK(Subspace::sum(d, Subspace(2, rows({{1, 0}}))) == Subspace::full(2));
  CHECK(Subspace::intersect(d, Subspace(2, rows({{1, 0}}))) == Subspace::zero(2));
  Subspace block(4, rows({{1, 2, 3, 4}}));
  CHECK(block.project_block(2, 2) == Subspace(2, rows({{3, 4}})));
}

TEST_CASE("space constructors validate their forms") {
  CHECK_THROWS_AS(SympSpace::standard(3), std::invalid_argument);
  CHECK_THROWS_AS(SympSpace::make(rows({{0, 1}, {1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(SympSpace::make(Mat(2, 2)), std::invalid_argument);
  SympSpace v = SympSpace::standard(2);
  CHECK(SympSpace::conjugate(v).omega == v.omega.scaled(-1));
  SympSpace s = SympSpace::signed_sum(v, v);
  CHECK(s.dim == 4);
  CHECK(s.omega.at(0, 1) == Rat(-1));
  CHECK(s.omega.at(2, 3) == Rat(1));
}

TEST_CASE("orthogonal complement identities on random subspaces") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 60; ++trial) {
    std::uniform_int_distribution<int> half(1, 4);
    int n = half(rng);
    SympSpace V = SympSpace::standard(2 * n);
    std::uniform_int_distribution<int> d(0, 2 * n);
    Subspace W(2 * n, random_mat(rng, d(rng), 2 * n));
    Subspace A(2 * n, random_mat(rng, d(rng), 2 * n));

    Subspace Wp = orthogonal(V, W);
    Subspace Ap = orthogonal(V, A);
    Subspace S = Subspace::sum(W, A);
    CHECK(Wp.dim() == 2 * n - W.dim());
    // Antitonicity: W inside W+A reverses to (W+A)-perp inside W-perp.
    CHECK(Wp.contains(orthogonal(V, S)));
    CHECK(orthogonal(V, S) == Subspace::intersect(Wp, Ap));
    CHECK(orthogonal(V, Subspace::intersect(W, A)) == Subspace::sum(Wp, Ap));
    CHECK(orthogonal(V, Wp) == W);
    CHECK(orthogonal(V, orthogonal(V, Wp)) == Wp);
  }
}

TEST_CASE("classification of standard subspaces") {
  SympSpace V4 = SympSpace::standard(4);
  auto cls = [&](const Subspace& w) { return classify_subspace(V4, w); };

  SubspaceClass zero = cls(Subspace::zero(4));
  CHECK(zero.isotropic);
  CHECK(!zero.coisotropic);
  CHECK(!zero.lagrangian);

  SubspaceClass full = cls(Subspace::full(4));
  CHECK(full.coisotropic);
  CHECK(full.symplectic);
  CHECK(!full.isotropic);

  SubspaceClass lag = cls(Subspace(4, rows({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  CHECK(lag.lagrangian);
  CHECK(lag.isotropic);
  CHECK(lag.coisotropic);
  CHECK(!lag.symplectic);

  SubspaceClass sym = cls(Subspace(4, rows({{1, 0, 0, 0}, {0, 0, 1, 0}})));
  CHECK(sym.symplectic);
  CHECK(!sym.isotropic);
  CHECK(!sym.coisotropic);

  std::mt19937 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 3;
    CHECK(classify_subspace(SympSpace::standard(2 * n), random_lagrangian(rng, n)).lagrangian);
  }
}

TEST_CASE("coisotropic reduction produces a symplectic quotient") {
  SympSpace V = SympSpace::standard(4);
  Subspace W(4, rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}));
  REQUIRE(classify_subspace(V, W).coisotropic);
  Reduction red = reduce(V, W);
  CHECK(red.quotient.dim == 2);
  CHECK(red.K == Subspace(4, rows({{0, 1, 0, 0}})));
  // Section representatives map to the quotient basis vectors.
  for (int i = 0; i < red.quotient.dim; ++i) {
    std::vector<Rat> rep = red.section.row(i);
    std::vector<Rat> coords = reduce_coords(red, rep);
    for (int j = 0; j < red.quotient.dim; ++j) CHECK(coords[j] == Rat(i == j ? 1 : 0));
  }
  CHECK(reduce_coords(red, {Rat(0), Rat(5), Rat(0), Rat(0)}) ==
        std::vector<Rat>{Rat(0), Rat(0)});
  CHECK_THROWS_AS(reduce_coords(red, {Rat(0), Rat(0), Rat(0), Rat(1)}), std::invalid_argument);

  Subspace L(4, rows({{1, 0, 0, 0}, {0, 1, 0, 0}}));
  Subspace img = project_lagrangian(V, red, L);
  CHECK(img.dim() == 1);
  CHECK(classify_subspace(red.quotient, img).lagrangian);

  CHECK_THROWS_AS(project_lagrangian(V, reduce(V, Subspace(4, rows({{1, 0, 0, 0}}))), L),
                  PreconditionError);
  CHECK_THROWS_AS(project_lagrangian(V, red, Subspace::full(4)), PreconditionError);
}

TEST_CASE("graphs of maps follow the column convention") {
  SympSpace V = SympSpace::standard(2);
  Mat phi = rows({{1, 1}, {0, 1}});
  LinRel g = LinRel::graph_of(V, V, phi);
  CHECK(g.graph.contains_vector({Rat(0), Rat(1), Rat(1), Rat(1)}));
  CHECK(is_lagrangian_rel(g));
  CHECK(!is_lagrangian_rel(LinRel::graph_of(V, V, rows({{2, 0}, {0, 1}}))));
  CHECK_THROWS_AS(LinRel::graph_of(V, SympSpace::standard(4), phi), std::invalid_argument);

  std::mt19937 rng(77);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + trial % 3;
    SympSpace W = SympSpace::standard(2 * n);
    Mat s1 = random_symplectomorphism(rng, n);
    Mat s2 = random_symplectomorphism(rng, n);
    LinRel g1 = LinRel::graph_of(W, W, s1);
    LinRel g2 = LinRel::graph_of(W, W, s2);
    CHECK(is_lagrangian_rel(g1));
    // r first: the composite graph belongs to s2 . s1.
    CHECK(compose_linrel(g1, g2).graph == LinRel::graph_of(W, W, s2 * s1).graph);
    CHECK(dagger(g1).graph == LinRel::graph_of(W, W, *linalg::inverse(s1)).graph);
    CHECK(product_linrel(g1, g1).src.dim == 4 * n);
  }
}

TEST_CASE("reduction relations compose to the identity one way only") {
  std::mt19937 rng(123);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + trial % 2;
    std::uniform_int_distribution<int> d(n, 2 * n - 1);  // proper coisotropic
    SympSpace V = SympSpace::standard(2 * n);
    Subspace C = random_coisotropic(rng, n, d(rng));
    ReductionRels rr = reduction_relations(V, C);
    CHECK(is_lagrangian_rel(rr.incl));
    CHECK(is_lagrangian_rel(rr.proj));

    LinRel idq = LinRel::identity(rr.red.quotient);
    CHECK(compose_linrel(rr.incl, rr.proj).graph == idq.graph);

    LinRel lifted = lift_through(rr, idq);
    CHECK(lifted.graph != LinRel::identity(V).graph);
    CHECK(is_lagrangian_rel(lifted));
    CHECK(project_through(rr, lifted).graph == idq.graph);
  }
  CHECK_THROWS_AS(
      reduction_relations(SympSpace::standard(4), Subspace(4, rows({{1, 0, 0, 0}}))),
      PreconditionError);
}

TEST_CASE("pairing space structures and their images") {
  DiracSpace d{2};
  CHECK(d.pairing() == rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
  CHECK(!dirac_check(d, Subspace::zero(4)));

  std::mt19937 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + trial % 3;
    DiracSpace dn{n};
    Mat pi = random_skew(rng, n);
    Mat om = random_skew(rng, n);
    CHECK(dirac_check(dn, bivector_graph(pi)));
    CHECK(dirac_check(dn, two_form_graph(om)));
    std::uniform_int_distribution<int> dd(0, n);
    CHECK(dirac_check(dn, distribution_with_annihilator(Subspace(n, random_mat(rng, dd(rng), n)))));

    // phi : Q^n -> Q^m.
    int m = 1 + (trial + 1) % 3;
    Mat phi = random_mat(rng, m, n);
    Mat om_m = random_skew(rng, m);
    Subspace back = dirac_image(MapDirection::backward, phi, two_form_graph(om_m));
    CHECK(back == two_form_graph(phi.transpose() * om_m * phi));
    CHECK(dirac_check(dn, back));

    Subspace fwd = dirac_image(MapDirection::forward, phi, bivector_graph(pi));
    CHECK(fwd == bivector_graph(phi * pi * phi.transpose()));
    CHECK(dirac_check(DiracSpace{m}, fwd));
  }

  CHECK_THROWS_AS(bivector_graph(rows({{0, 1}, {1, 0}})), std::invalid_argument);
  CHECK_THROWS_AS(dirac_image(MapDirection::backward, Mat(2, 3), Subspace::zero(2)),
                  std::invalid_argument);
}
