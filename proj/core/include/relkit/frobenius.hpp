#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "relkit/finrel.hpp"
#include "relkit/report.hpp"

namespace relkit::frobenius {

// Candidate binary operation m : X*X -> X given as its relation graph.
struct FrobCandidate {
  finrel::Carrier X;
  finrel::Rel m;  // src must equal X*X (row-major), dst must equal X
};

FrobCandidate make_candidate(const finrel::Carrier& X, const finrel::Rel& m,
                             const Budget& budget = {});

struct FrobOptions {
  Budget budget{};
  // Stop at the first failing law; the report then covers a prefix of
  // (M), (A), (F), (U).
  bool fail_fast = false;
};

struct FrobReport {
  Report report;
  // Unit set when (U) holds, in carrier order.
  std::optional<std::vector<std::string>> unit;
};

// Laws, in check order: "(M)" m . dagger(m) = id, "(A)" associativity,
// "(F)" the two-sided Frobenius equation, "(U)" existence of a unique
// unit subset.
FrobReport check_frobenius_axioms(const FrobCandidate& c, const FrobOptions& opt = {});

// Small-category data: arrows G1, objects G0, unit/source/target maps as
// index tables, partial composition as (g, f, g.f) triples where
// mu(g, f) is defined iff s(g) = t(f).
struct Groupoid {
  finrel::Carrier G0;
  finrel::Carrier G1;
  std::vector<int> s;    // arrow -> object
  std::vector<int> t;    // arrow -> object
  std::vector<int> e;    // object -> unit arrow
  std::vector<int> inv;  // arrow -> arrow
  std::vector<std::tuple<int, int, int>> mu;  // sorted (g, f, h) with h = g.f

  std::optional<int> mu_at(int g, int f) const;
  bool composable(int g, int f) const { return s[static_cast<std::size_t>(g)] == t[static_cast<std::size_t>(f)]; }
};

// Axiom keys: "A.1" units are fixed by s and t, "A.2" composition is
// defined exactly on composable pairs and s, t of a composite follow the
// outer arrows, "A.3" unit laws, "A.4" g . inv(g) = e(t(g)),
// "A.5" inv(g) . g = e(s(g)), "A.6" associativity.
Report check_groupoid_axioms(const Groupoid& g, const Budget& budget = {});

// Builds the one-object groupoid of a group given by its Cayley table,
// and the pair groupoid on a set; both for tests and examples.
Groupoid group_groupoid(const std::vector<std::string>& elems,
                        const std::vector<std::vector<int>>& table, int unit_index);
Groupoid pair_groupoid(const std::vector<std::string>& points);
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);

// Precondition: check_frobenius_axioms passes (throws PreconditionError
// with that report otherwise). Objects are the unit atoms reused.
Groupoid to_groupoid(const FrobCandidate& c, const FrobOptions& opt = {});

// Precondition: check_groupoid_axioms passes. m is the graph of mu.
FrobCandidate from_groupoid(const Groupoid& g, const Budget& budget = {});

// Equality after renaming b's objects along unit atoms: used for the
// round trip whose object names differ but whose structure must not.
bool equal_up_to_object_names(const Groupoid& a, const Groupoid& b);

enum class MorphMode { ext, frob, func, mfunc };

// r : X -> Y between two passing candidates.
struct FrobMorphism {
  FrobCandidate A;
  FrobCandidate B;
  finrel::Rel r;
};

Report check_morphism(const FrobMorphism& mor, MorphMode mode, const FrobOptions& opt = {});

// The groupoid structure induced on the pair set of a morphism passing
// the frob laws; precondition: both candidates pass and r passes frob.
Groupoid induced_subgroupoid(const FrobMorphism& mor, const FrobOptions& opt = {});

}  // namespace relkit::frobenius
