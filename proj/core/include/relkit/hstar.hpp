#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "relkit/finrel.hpp"
#include "relkit/report.hpp"

namespace relkit::hstar {

// Candidate binary operation m : X*X -> X, as in the Frobenius module
// but checked against the (H) axiom instead of (F) and (U).
struct HStarCandidate {
  finrel::Carrier X;
  finrel::Rel m;
};

HStarCandidate make_candidate(const finrel::Carrier& X, const finrel::Rel& m,
                              const Budget& budget = {});

// {b | for every a in A: (ba)b = {b} and (ab)a = {a}}, products grouped
// left and evaluated through m; an undefined product fails the
// condition. The empty A returns all of X.
std::vector<std::string> star_set(const HStarCandidate& c, const std::vector<std::string>& A,
                                  const Budget& budget = {});

struct HStarOptions {
  Budget budget{};
  bool fail_fast = false;
};

struct HStarReport {
  Report report;
  // Observation, not an axiom: whether A is contained in
  // star_set(star_set(A)) for every swept subset.
  bool star_double_containment = true;
  std::vector<std::string> star_observation_failures;
};

// Laws: "(M)", "(A)", then "(H)" for every subset A of X with the
// candidate involution sending A to the union of star_set({a}) over
// a in A. The sweep over subsets is budget guarded.
HStarReport check_hstar_axioms(const HStarCandidate& c, const HStarOptions& opt = {});

// Arrows with source and target but no units or inverses; mu is a
// partial map defined exactly when s(g) = t(f).
struct Semigroupoid {
  finrel::Carrier G0;
  finrel::Carrier G1;
  std::vector<int> s;
  std::vector<int> t;
  std::vector<std::tuple<int, int, int>> mu;  // sorted (g, f, g.f)

  std::optional<int> mu_at(int g, int f) const;
  bool composable(int g, int f) const {
    return s[static_cast<std::size_t>(g)] == t[static_cast<std::size_t>(f)];
  }
};

struct SgpdReport {
  Report report;  // laws "domain", "associative", "regular", "locally-cancellative"
  bool associative = false;
  bool regular = false;
  bool locally_cancellative = false;
};

SgpdReport check_semigroupoid_properties(const Semigroupoid& s, const Budget& budget = {});

// Objects are the idempotents; s(f) and t(f) are the common values of
// f*f resp. ff* over all pseudoinverses f*. Precondition:
// check_hstar_axioms passes. Ill defined s or t raises an error naming
// two conflicting pseudoinverses.
Semigroupoid to_semigroupoid(const HStarCandidate& c, const HStarOptions& opt = {});

// X = G1, m = graph of mu. Precondition: the semigroupoid is regular
// and locally cancellative (and structurally sound).
HStarCandidate from_semigroupoid(const Semigroupoid& s, const Budget& budget = {});

// Instance level adjunction laws: the unit relation
// {((g,f), gf) | exist g* in {g}*, f* in {f}*: g*g = ff*} is computed
// by this formula, compared with the round trip construction, and
// verified to be a subrelation of m; both triangle identities are
// checked on the induced semigroupoid.
Report adjunction_check(const HStarCandidate& c, const HStarOptions& opt = {});

}  // namespace relkit::hstar
