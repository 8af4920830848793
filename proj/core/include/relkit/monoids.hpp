#pragma once

#include <vector>

#include "relkit/finrel.hpp"
#include "relkit/report.hpp"

namespace relkit::monoids {

// Multiplication L3 : X*X -> X together with a weak unit L1 : pt -> X.
struct WeakMonoidCandidate {
  finrel::Carrier X;
  finrel::Rel L1;
  finrel::Rel L3;
};

struct WeakMonoidResult {
  Report report;  // laws "associative", "unitors", "projector"
  finrel::Rel L2;
};

// Checks associativity of L3, equality of the two unitor composites,
// and idempotence of the common unitor L2, which is returned.
WeakMonoidResult check_weak_monoid(const WeakMonoidCandidate& c, const Budget& budget = {});

// Multiplication plus an involution psi; the weak unit is derived as
// L1 = L3 . psi_R with psi_R = {(*, (x, psi(x)))}.
struct StarMonoidCandidate {
  finrel::Carrier X;
  finrel::Rel L3;
  std::vector<int> psi;  // total map by index
};

struct StarMonoidResult {
  Report report;  // law "involutive" plus the weak monoid laws
  finrel::Rel L1;
  finrel::Rel L2;
};

StarMonoidResult check_weak_star_monoid(const StarMonoidCandidate& c, const Budget& budget = {});

// A single relation L : X*X -> X whose triple set must be invariant
// under the cyclic shift (a,b,c) -> (c,a,b); the multiplication is
// recovered as L3 = L . dagger(graph(psi)).
struct CyclicCandidate {
  finrel::Carrier X;
  std::vector<int> psi;
  finrel::Rel L;
};

struct CyclicResult {
  Report report;  // law "cyclic" plus the weak star monoid laws
  finrel::Rel L3;
  finrel::Rel L1;
  finrel::Rel L2;
};

CyclicResult check_cyclic_weak_star_monoid(const CyclicCandidate& c, const Budget& budget = {});

}  // namespace relkit::monoids
