#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "relkit/finrel.hpp"
#include "relkit/frobenius.hpp"
#include "relkit/hstar.hpp"
#include "relkit/monoids.hpp"
#include "relkit/poisson.hpp"
#include "relkit/relgpd.hpp"
#include "relkit/symplin.hpp"

namespace relkit::doc {

// Malformed or mistyped document; the message names the offending field.
class DocError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path);  // throws DocError on IO failure

// Every parser takes the document text, validates the "kind" tag and the
// payload shape, and returns the checked value. Rationals are JSON
// integers or "p/q" strings.
finrel::Rel parse_relation(const std::string& text);
std::string print_relation(const finrel::Rel& r);

frobenius::FrobCandidate parse_frobenius(const std::string& text);
std::string print_frobenius(const frobenius::FrobCandidate& c);

hstar::HStarCandidate parse_hstar(const std::string& text);
std::string print_hstar(const hstar::HStarCandidate& c);

frobenius::Groupoid parse_groupoid(const std::string& text);
std::string print_groupoid(const frobenius::Groupoid& g);

hstar::Semigroupoid parse_semigroupoid(const std::string& text);
std::string print_semigroupoid(const hstar::Semigroupoid& s);

monoids::WeakMonoidCandidate parse_weak_monoid(const std::string& text);
monoids::StarMonoidCandidate parse_star_monoid(const std::string& text);
monoids::CyclicCandidate parse_cyclic_monoid(const std::string& text);

symplin::SympSpace parse_symp_space(const std::string& text);
std::string print_symp_space(const symplin::SympSpace& v);

symplin::Subspace parse_subspace(const std::string& text);
std::string print_subspace(const symplin::Subspace& s);

symplin::LinRel parse_linrel(const std::string& text);
std::string print_linrel(const symplin::LinRel& r);

// "relgpd" documents carry either a finite carrier with triple list or
// a symplectic space with a subspace basis, switched by "mode".
struct RelGpdDoc {
  bool linear = false;
  relgpd::SetCandidate set;
  relgpd::LinearCandidate lin;
};
RelGpdDoc parse_relgpd(const std::string& text);
std::string print_relgpd(const relgpd::SetCandidate& c);
std::string print_relgpd(const relgpd::LinearCandidate& c);

poisson::PolyBivector parse_bivector(const std::string& text);
std::string print_bivector(const poisson::PolyBivector& b);
// Optional polynomial term arrays (fields "f", "g") in a bivector doc.
std::optional<poisson::Poly> parse_bivector_poly(const std::string& text, const std::string& field,
                                                 int n);

struct LieConstants {
  int n = 0;
  std::vector<linalg::Mat> c;  // c[k](i,j) is the coefficient of x_k in Pi^{ij}
};
LieConstants parse_lie_constants(const std::string& text);

}  // namespace relkit::doc
