#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relkit/matrix.hpp"
#include "relkit/report.hpp"

namespace relkit::symplin {

// Exact symplectic vector space over the rationals. dim 0 is allowed
// and plays the role of the point.
struct SympSpace {
  int dim = 0;
  linalg::Mat omega;  // dim x dim, skew symmetric, invertible

  static SympSpace standard(int two_n);  // block form [[0, I], [-I, 0]]
  static SympSpace make(linalg::Mat omega);
  static SympSpace conjugate(const SympSpace& v);  // sign flipped form
  static SympSpace sum(const SympSpace& a, const SympSpace& b);
  // Ambient form for relations from src to dst: (-omega_src) + omega_dst.
  static SympSpace signed_sum(const SympSpace& src, const SympSpace& dst);
  bool operator==(const SympSpace& o) const { return dim == o.dim && omega == o.omega; }
  bool operator!=(const SympSpace& o) const { return !(*this == o); }
};

// Linear subspace in row coordinate form, canonicalized to reduced row
// echelon basis, so equality is basis equality.
class Subspace {
 public:
  Subspace() = default;
  Subspace(int ambient, const linalg::Mat& vectors);
  static Subspace zero(int ambient);
  static Subspace full(int ambient);
  static Subspace span_rows(const linalg::Mat& vectors);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const linalg::Mat& basis() const { return basis_; }
  bool contains_vector(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;  // other inside this
  static Subspace sum(const Subspace& a, const Subspace& b);
  static Subspace intersect(const Subspace& a, const Subspace& b);
  // Span of the basis rows restricted to a column window.
  Subspace project_block(int offset, int width) const;

  bool operator==(const Subspace& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

 private:
  int ambient_ = 0;
  linalg::Mat basis_{0, 0};
};

// Symplectic orthogonal of W inside V.
Subspace orthogonal(const SympSpace& V, const Subspace& W);

struct SubspaceClass {
  bool isotropic = false;
  bool coisotropic = false;
  bool lagrangian = false;
  bool symplectic = false;
};
SubspaceClass classify_subspace(const SympSpace& V, const Subspace& W);

// Quotient W / (W intersect W_perp) with the induced form.
struct Reduction {
  SympSpace quotient;
  linalg::Mat section;  // quotient.dim x ambient, representatives of the quotient basis
  Subspace W;
  Subspace K;  // W intersect W_perp
};
Reduction reduce(const SympSpace& V, const Subspace& W);
// Coordinates of w in the quotient; w must lie in W.
std::vector<Rat> reduce_coords(const Reduction& red, const std::vector<Rat>& w);

// Image of L intersect W in the quotient. Preconditions: W coisotropic,
// L lagrangian; violations raise PreconditionError.
Subspace project_lagrangian(const SympSpace& V, const Reduction& red, const Subspace& L);

// Linear canonical relation candidate: a subspace of src + dst carrying
// the signed sum form. Lagrangian-ness is a property checked separately.
struct LinRel {
  SympSpace src, dst;
  Subspace graph;

  static LinRel identity(const SympSpace& v);
  // phi maps column vectors of src to column vectors of dst.
  static LinRel graph_of(const SympSpace& src, const SympSpace& dst, const linalg::Mat& phi);
};

bool is_lagrangian_rel(const LinRel& r);
// compose(r, s) applies r first.
LinRel compose_linrel(const LinRel& r, const LinRel& s);
LinRel dagger(const LinRel& r);
// Slot-wise direct sum: (src_r + src_s) -> (dst_r + dst_s).
LinRel product_linrel(const LinRel& r, const LinRel& s);

// Canonical relations of a coisotropic reduction: incl is the graph of
// representatives {(q, w)} from the quotient into V, proj its transpose.
struct ReductionRels {
  Reduction red;
  LinRel incl;  // quotient -> V
  LinRel proj;  // V -> quotient
};
ReductionRels reduction_relations(const SympSpace& V, const Subspace& C);
// incl . rel . proj : V -> V
LinRel lift_through(const ReductionRels& rr, const LinRel& rel);
// proj . rel . incl : quotient -> quotient
LinRel project_through(const ReductionRels& rr, const LinRel& rel);

// Split pairing space V + V^* with <(X,a),(Y,b)> = b(X) + a(Y).
struct DiracSpace {
  int n = 0;  // ambient dimension is 2 n
  linalg::Mat pairing() const;
};

Subspace pairing_orthogonal(const DiracSpace& d, const Subspace& s);
// L is Dirac when it equals its pairing orthogonal.
bool dirac_check(const DiracSpace& d, const Subspace& L);
// {(Pi a, a)} for skew Pi, and {(X, omega X)} for skew omega.
Subspace bivector_graph(const linalg::Mat& pi);
Subspace two_form_graph(const linalg::Mat& omega);
// D + its annihilator, a Dirac structure for any distribution D.
Subspace distribution_with_annihilator(const Subspace& d);

enum class MapDirection { backward, forward };
// phi maps column vectors of a space V (dim phi.cols()) to a space W
// (dim phi.rows()). backward carries Dirac structures on W to V,
// forward carries Dirac structures on V to W.
Subspace dirac_image(MapDirection dir, const linalg::Mat& phi, const Subspace& L);

}  // namespace relkit::symplin
