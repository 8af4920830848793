#pragma once

#include <array>
#include <string>
#include <vector>

#include "relkit/finrel.hpp"
#include "relkit/frobenius.hpp"
#include "relkit/report.hpp"
#include "relkit/symplin.hpp"

namespace relkit::relgpd {

// Cyclic-groupoid candidate over a finite carrier: a ternary relation L
// together with a total involution I.
struct SetCandidate {
  finrel::Carrier G;
  std::vector<std::array<int, 3>> L;  // sorted unique index triples
  std::vector<int> I;                 // total map by index
};

SetCandidate make_set_candidate(const finrel::Carrier& G,
                                std::vector<std::array<int, 3>> triples, std::vector<int> I);
SetCandidate set_candidate_from_atoms(
    const finrel::Carrier& G, const std::vector<std::array<std::string, 3>>& triples,
    const std::vector<std::pair<std::string, std::string>>& I);

// L read as a relation G*G -> G.
finrel::Rel ternary_rel(const SetCandidate& c, const Budget& budget = {});

struct SetDerived {
  finrel::Rel L_I;  // pt -> G*G, pairs (x, I(x))
  finrel::Rel L1;   // pt -> G
  finrel::Rel L2;   // G -> G
  finrel::Rel L3;   // G*G -> G
  std::vector<std::string> C;  // image of L2 in carrier order
};

// L3 = L . graph(I), L1 = L3 . L_I, L2 = L3 . (L1 x Id), C = im L2.
// Throws if I is not involutive.
SetDerived derive(const SetCandidate& c, const Budget& budget = {});

// Laws: "A.1" cyclicity, "A.2" involution, "A.3" inversion symmetry of
// L, "A.4" associativity of L3, "A.5" unit absorption, and the "A.6 *"
// family for the projector L2.
Report check_core_axioms(const SetCandidate& c, const Budget& budget = {});

struct RegularityData {
  Report report;  // laws "A.7", "A.8", "A.9 diagonal", "A.9 source-map", "A.9 inversion-compatible"
  SetDerived derived;
  std::vector<std::string> C;
  std::vector<std::vector<std::string>> M;  // unit classes, least atom first
  finrel::Rel S;  // C -> M, class labels are least members
  finrel::Rel T;
};

// Precondition: check_core_axioms passes.
RegularityData check_regularity(const SetCandidate& c, const Budget& budget = {});

// Quotient groupoid of Theorem data: arrows are classes of C under L2,
// objects are the unit classes. Classes are labeled by their least
// member atom. Multi valued projected multiplication is an error.
frobenius::Groupoid reduce_to_groupoid(const SetCandidate& c, const Budget& budget = {});

enum class RsgMode { morphism, equivalence };

// Morphism laws "commutes-with-I", "commutes-with-L"; equivalence mode
// repeats them for the transpose and checks F . dagger(F) = L2 on each
// side. Precondition: both candidates pass the core axioms.
Report check_morphism(const finrel::Rel& F, const SetCandidate& A, const SetCandidate& B,
                      RsgMode mode, const Budget& budget = {});

// Builders.
SetCandidate from_groupoid(const frobenius::Groupoid& g, const Budget& budget = {});
SetCandidate cyclic_counterexample(int k);  // Z/k with L = {(n,m,-n-m-1)}, k >= 3
SetCandidate parity_example(int modulus);   // even modulus, L = {(n,m,q) | n+m+q odd}
SetCandidate power(const SetCandidate& c, int n, const Budget& budget = {});
SetCandidate opposite(const SetCandidate& c);
// L = S^3 and I = phi for an I-invariant subset S of the carrier.
SetCandidate invariant_triple(const finrel::Carrier& G, const std::vector<std::string>& subset,
                              const std::vector<std::pair<std::string, std::string>>& phi);

// ---------------------------------------------------------------------
// Linear mode: the carrier is an exact symplectic space, L a subspace
// of G^3 and I an antisymplectic involution given by a matrix.

struct LinearCandidate {
  symplin::SympSpace G;
  symplin::Subspace L;  // ambient 3 dim(G)
  linalg::Mat I;
};

// Validates shapes, I . I = Id and I^T omega I = -omega.
LinearCandidate make_linear_candidate(const symplin::SympSpace& G, const symplin::Subspace& L,
                                      const linalg::Mat& I);

struct LinearDerived {
  symplin::LinRel L_I;  // point -> G+G
  symplin::Subspace L1;
  symplin::LinRel L2;
  symplin::LinRel L3;
  symplin::Subspace C;
  bool L_lagrangian = false;       // in G+G+G
  bool graph_I_lagrangian = false; // in G+G
  bool L1_lagrangian = false;      // in G
  bool L2_lagrangian = false;      // in conj(G)+G
  bool L3_lagrangian = false;      // in conj(G+G)+G
};

LinearDerived derive_linear(const LinearCandidate& c);
Report check_core_axioms_linear(const LinearCandidate& c);

struct LinearRegularityData {
  Report report;  // laws "A.7 coisotropic", "A.7 equivalence", "A.8", "A.9 diagonal", "A.9 source-map", "A.9 inversion-compatible"
  LinearDerived derived;
  symplin::Subspace C;
  int object_dim = 0;             // dim of M = L1 / (L2 restricted to L1)
  symplin::Subspace S;            // subspace of Q^{dim G + object_dim}
  symplin::Subspace T;
};

LinearRegularityData check_regularity_linear(const LinearCandidate& c);

// Only quotients with finitely many classes reduce; over the rationals
// that forces a single class, so the result is the one arrow groupoid.
// Other candidates raise std::domain_error.
frobenius::Groupoid reduce_to_groupoid_linear(const LinearCandidate& c);

Report check_morphism_linear(const symplin::LinRel& F, const LinearCandidate& A,
                             const LinearCandidate& B, RsgMode mode);

// Linear builders.
LinearCandidate lagrangian_triple(const symplin::SympSpace& G, const symplin::Subspace& L,
                                  const linalg::Mat& phi);
// Pair groupoid of V as a linear candidate: carrier V + conj(V),
// L spanned by ((x,y),(y,z),(z,x)), I the block swap.
LinearCandidate pair_linear(const symplin::SympSpace& V);

}  // namespace relkit::relgpd
