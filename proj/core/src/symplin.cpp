#include "relkit/symplin.hpp"

#include <stdexcept>

namespace relkit::symplin {

using linalg::Mat;

SympSpace SympSpace::standard(int two_n) {
  if (two_n < 0 || two_n % 2 != 0) throw std::invalid_argument("symplectic dimension must be even");
  int n = two_n / 2;
  Mat omega(two_n, two_n);
  for (int i = 0; i < n; ++i) {
    omega.at(i, n + i) = 1;
    omega.at(n + i, i) = -1;
  }
  return SympSpace{two_n, std::move(omega)};
}

SympSpace SympSpace::make(Mat omega) {
  if (omega.rows() != omega.cols()) throw std::invalid_argument("form must be square");
  if (omega.transpose() != omega.scaled(-1)) throw std::invalid_argument("form must be skew symmetric");
  if (linalg::rank(omega) != omega.rows()) throw std::invalid_argument("form must be non degenerate");
  return SympSpace{omega.rows(), std::move(omega)};
}

SympSpace SympSpace::conjugate(const SympSpace& v) { return SympSpace{v.dim, v.omega.scaled(-1)}; }

SympSpace SympSpace::sum(const SympSpace& a, const SympSpace& b) {
  Mat omega(a.dim + b.dim, a.dim + b.dim);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) omega.at(i, j) = a.omega.at(i, j);
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) omega.at(a.dim + i, a.dim + j) = b.omega.at(i, j);
  return SympSpace{a.dim + b.dim, std::move(omega)};
}

SympSpace SympSpace::signed_sum(const SympSpace& src, const SympSpace& dst) {
  return sum(conjugate(src), dst);
}

Subspace::Subspace(int ambient, const Mat& vectors) : ambient_(ambient) {
  if (vectors.cols() != ambient && vectors.rows() != 0)
    throw std::invalid_argument("subspace vectors have wrong width");
  int rk = 0;
  Mat r = linalg::rref(vectors.rows() ? vectors : Mat(0, ambient), &rk);
  Mat b(rk, ambient);
  for (int i = 0; i < rk; ++i)
    for (int j = 0; j < ambient; ++j) b.at(i, j) = r.at(i, j);
  basis_ = std::move(b);
}

Subspace Subspace::zero(int ambient) { return Subspace(ambient, Mat(0, ambient)); }

Subspace Subspace::full(int ambient) { return Subspace(ambient, Mat::identity(ambient)); }

Subspace Subspace::span_rows(const Mat& vectors) { return Subspace(vectors.cols(), vectors); }

bool Subspace::contains_vector(const std::vector<Rat>& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw std::invalid_argument("vector has wrong width");
  Mat stacked(basis_.rows() + 1, ambient_);
  for (int i = 0; i < basis_.rows(); ++i)
    for (int j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
  for (int j = 0; j < ambient_; ++j) stacked.at(basis_.rows(), j) = v[static_cast<std::size_t>(j)];
  return linalg::rank(stacked) == basis_.rows();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimensions differ");
  if (other.basis_.rows() == 0) return true;
  return linalg::rank(Mat::vstack(basis_, other.basis_)) == basis_.rows();
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("ambient dimensions differ");
  return Subspace(a.ambient_, Mat::vstack(a.basis_, b.basis_));
}

Subspace Subspace::intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw std::invalid_argument("ambient dimensions differ");
  // span(B) is cut out by the rows of kernel(B); intersecting spans
  // stacks the constraints.
  Mat constraints = Mat::vstack(linalg::kernel(a.basis_.rows() ? a.basis_ : Mat(0, a.ambient_)),
                                linalg::kernel(b.basis_.rows() ? b.basis_ : Mat(0, b.ambient_)));
  return Subspace(a.ambient_, linalg::kernel(constraints.rows() ? constraints : Mat(0, a.ambient_)));
}

Subspace Subspace::project_block(int offset, int width) const {
  return Subspace(width, linalg::slice_cols(basis_, offset, width));
}

Subspace orthogonal(const SympSpace& V, const Subspace& W) {
  if (W.ambient() != V.dim) throw std::invalid_argument("subspace not in the given space");
  if (W.dim() == 0) return Subspace::full(V.dim);
  return Subspace(V.dim, linalg::kernel(W.basis() * V.omega));
}

SubspaceClass classify_subspace(const SympSpace& V, const Subspace& W) {
  Subspace perp = orthogonal(V, W);
  SubspaceClass c;
  c.isotropic = perp.contains(W);
  c.coisotropic = W.contains(perp);
  c.lagrangian = c.isotropic && c.coisotropic;
  c.symplectic = Subspace::intersect(W, perp).dim() == 0;
  return c;
}

Reduction reduce(const SympSpace& V, const Subspace& W) {
  Subspace K = Subspace::intersect(W, orthogonal(V, W));
  // Extend a basis of K to one of W; the added rows represent the
  // quotient basis.
  Mat cur = K.basis();
  std::vector<std::vector<Rat>> comp_rows;
  for (int i = 0; i < W.basis().rows(); ++i) {
    std::vector<Rat> cand = W.basis().row(i);
    Mat trial(cur.rows() + 1, V.dim == 0 ? 0 : V.dim);
    for (int r = 0; r < cur.rows(); ++r)
      for (int j = 0; j < cur.cols(); ++j) trial.at(r, j) = cur.at(r, j);
    for (int j = 0; j < V.dim; ++j) trial.at(cur.rows(), j) = cand[static_cast<std::size_t>(j)];
    if (linalg::rank(trial) > cur.rows()) {
      comp_rows.push_back(cand);
      cur = trial;
    }
  }
  int q = static_cast<int>(comp_rows.size());
  Mat section(q, V.dim);
  for (int i = 0; i < q; ++i) section.set_row(i, comp_rows[static_cast<std::size_t>(i)]);
  Mat omega_bar(q, q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) {
      Rat acc = 0;
      for (int a = 0; a < V.dim; ++a)
        for (int b = 0; b < V.dim; ++b)
          acc += section.at(i, a) * V.omega.at(a, b) * section.at(j, b);
      omega_bar.at(i, j) = acc;
    }
  Reduction red;
  red.quotient = SympSpace::make(std::move(omega_bar));
  red.section = std::move(section);
  red.W = W;
  red.K = std::move(K);
  return red;
}

std::vector<Rat> reduce_coords(const Reduction& red, const std::vector<Rat>& w) {
  // Solve w = alpha K + beta section; beta is the quotient coordinate.
  int k = red.K.dim(), q = red.quotient.dim;
  int n = red.W.ambient();
  Mat columns(n, k + q);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < n; ++i) columns.at(i, j) = red.K.basis().at(j, i);
  for (int j = 0; j < q; ++j)
    for (int i = 0; i < n; ++i) columns.at(i, k + j) = red.section.at(j, i);
  auto sol = linalg::solve(columns, w);
  if (!sol) throw std::invalid_argument("vector is not in the reduced subspace");
  return std::vector<Rat>(sol->begin() + k, sol->end());
}

Subspace project_lagrangian(const SympSpace& V, const Reduction& red, const Subspace& L) {
  SubspaceClass cw = classify_subspace(V, red.W);
  SubspaceClass cl = classify_subspace(V, L);
  if (!cw.coisotropic || !cl.lagrangian) {
    Report rep;
    rep.add("coisotropic", cw.coisotropic,
            cw.coisotropic ? std::vector<std::string>{} : std::vector<std::string>{"W is not coisotropic"});
    rep.add("lagrangian", cl.lagrangian,
            cl.lagrangian ? std::vector<std::string>{} : std::vector<std::string>{"L is not lagrangian"});
    throw PreconditionError("project_lagrangian: preconditions fail", rep);
  }
  Subspace cut = Subspace::intersect(L, red.W);
  Mat rows(cut.dim(), red.quotient.dim);
  for (int i = 0; i < cut.dim(); ++i) {
    auto coords = reduce_coords(red, cut.basis().row(i));
    rows.set_row(i, coords);
  }
  return Subspace(red.quotient.dim, rows);
}

LinRel LinRel::identity(const SympSpace& v) {
  return LinRel{v, v, Subspace(2 * v.dim, Mat::hstack(Mat::identity(v.dim), Mat::identity(v.dim)))};
}

LinRel LinRel::graph_of(const SympSpace& src, const SympSpace& dst, const Mat& phi) {
  if (phi.rows() != dst.dim || phi.cols() != src.dim)
    throw std::invalid_argument("map shape does not match the spaces");
  return LinRel{src, dst,
                Subspace(src.dim + dst.dim, Mat::hstack(Mat::identity(src.dim), phi.transpose()))};
}

bool is_lagrangian_rel(const LinRel& r) {
  return classify_subspace(SympSpace::signed_sum(r.src, r.dst), r.graph).lagrangian;
}

LinRel compose_linrel(const LinRel& r, const LinRel& s) {
  if (r.dst != s.src) throw std::invalid_argument("compose: middle spaces differ");
  const int u = r.src.dim, v = r.dst.dim, w = s.dst.dim;
  const Mat& b1 = r.graph.basis();
  const Mat& b2 = s.graph.basis();
  const int k1 = b1.rows(), k2 = b2.rows();
  // Parameters (a, b) over the two bases; the middle coordinates must
  // agree: a B1_V - b B2_V = 0.
  Mat constraint = Mat::vstack(linalg::slice_cols(b1, u, v),
                               linalg::slice_cols(b2, 0, v).scaled(-1));
  if (constraint.rows() == 0) constraint = Mat(0, v);
  Mat params = linalg::kernel(constraint.transpose());  // rows (a | b)
  Mat carrier = Mat::vstack(Mat::hstack(linalg::slice_cols(b1, 0, u), Mat(k1, w)),
                            Mat::hstack(Mat(k2, u), linalg::slice_cols(b2, v, w)));
  Mat image = params.rows() && carrier.rows() ? params * carrier : Mat(0, u + w);
  return LinRel{r.src, s.dst, Subspace(u + w, image)};
}

LinRel dagger(const LinRel& r) {
  Mat b = Mat::hstack(linalg::slice_cols(r.graph.basis(), r.src.dim, r.dst.dim),
                      linalg::slice_cols(r.graph.basis(), 0, r.src.dim));
  return LinRel{r.dst, r.src, Subspace(r.src.dim + r.dst.dim, b)};
}

LinRel product_linrel(const LinRel& r, const LinRel& s) {
  SympSpace src = SympSpace::sum(r.src, s.src);
  SympSpace dst = SympSpace::sum(r.dst, s.dst);
  int cols = src.dim + dst.dim;
  Mat b(r.graph.dim() + s.graph.dim(), cols);
  for (int i = 0; i < r.graph.dim(); ++i) {
    for (int j = 0; j < r.src.dim; ++j) b.at(i, j) = r.graph.basis().at(i, j);
    for (int j = 0; j < r.dst.dim; ++j)
      b.at(i, src.dim + j) = r.graph.basis().at(i, r.src.dim + j);
  }
  for (int i = 0; i < s.graph.dim(); ++i) {
    int row = r.graph.dim() + i;
    for (int j = 0; j < s.src.dim; ++j) b.at(row, r.src.dim + j) = s.graph.basis().at(i, j);
    for (int j = 0; j < s.dst.dim; ++j)
      b.at(row, src.dim + r.dst.dim + j) = s.graph.basis().at(i, s.src.dim + j);
  }
  return LinRel{src, dst, Subspace(cols, b)};
}

ReductionRels reduction_relations(const SympSpace& V, const Subspace& C) {
  SubspaceClass cc = classify_subspace(V, C);
  if (!cc.coisotropic) {
    Report rep;
    rep.add("coisotropic", false, {"C is not coisotropic"});
    throw PreconditionError("reduction_relations: C must be coisotropic", rep);
  }
  Reduction red = reduce(V, C);
  int q = red.quotient.dim, k = red.K.dim();
  Mat top = Mat::hstack(Mat::identity(q), red.section);
  Mat bottom = Mat::hstack(Mat(k, q), red.K.basis());
  LinRel incl{red.quotient, V, Subspace(q + V.dim, Mat::vstack(top, bottom))};
  LinRel proj = dagger(incl);
  return ReductionRels{std::move(red), std::move(incl), std::move(proj)};
}

LinRel lift_through(const ReductionRels& rr, const LinRel& rel) {
  return compose_linrel(compose_linrel(rr.proj, rel), rr.incl);
}

LinRel project_through(const ReductionRels& rr, const LinRel& rel) {
  return compose_linrel(compose_linrel(rr.incl, rel), rr.proj);
}

Mat DiracSpace::pairing() const {
  Mat g(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    g.at(i, n + i) = 1;
    g.at(n + i, i) = 1;
  }
  return g;
}

Subspace pairing_orthogonal(const DiracSpace& d, const Subspace& s) {
  if (s.ambient() != 2 * d.n) throw std::invalid_argument("subspace not in the pairing space");
  if (s.dim() == 0) return Subspace::full(2 * d.n);
  return Subspace(2 * d.n, linalg::kernel(s.basis() * d.pairing()));
}

bool dirac_check(const DiracSpace& d, const Subspace& L) {
  return pairing_orthogonal(d, L) == L;
}

namespace {

void require_skew(const Mat& m, const char* who) {
  if (m.rows() != m.cols() || m.transpose() != m.scaled(-1))
    throw std::invalid_argument(std::string(who) + ": matrix must be skew symmetric");
}

}  // namespace

Subspace bivector_graph(const Mat& pi) {
  require_skew(pi, "bivector_graph");
  int n = pi.rows();
  return Subspace(2 * n, Mat::hstack(pi.transpose(), Mat::identity(n)));
}

Subspace two_form_graph(const Mat& omega) {
  require_skew(omega, "two_form_graph");
  int n = omega.rows();
  return Subspace(2 * n, Mat::hstack(Mat::identity(n), omega.transpose()));
}

Subspace distribution_with_annihilator(const Subspace& d) {
  int n = d.ambient();
  Mat ann = linalg::kernel(d.basis().rows() ? d.basis() : Mat(0, n));
  Mat top = Mat::hstack(d.basis(), Mat(d.dim(), n));
  Mat bottom = Mat::hstack(Mat(ann.rows(), n), ann);
  return Subspace(2 * n, Mat::vstack(top, bottom));
}

Subspace dirac_image(MapDirection dir, const Mat& phi, const Subspace& L) {
  const int w = phi.rows(), v = phi.cols();
  const Mat& b = L.basis();
  const int k = b.rows();
  if (dir == MapDirection::backward) {
    if (L.ambient() != 2 * w) throw std::invalid_argument("backward image needs L over the target");
    Mat bx = linalg::slice_cols(b, 0, w);
    Mat ba = linalg::slice_cols(b, w, w);
    // Unknowns (x, c): phi x = c B_X.
    Mat constraint = Mat::vstack(phi.transpose(), bx.scaled(-1));
    Mat params = linalg::kernel(constraint.transpose());
    Mat carrier = Mat::vstack(Mat::hstack(Mat::identity(v), Mat(v, v)),
                              Mat::hstack(Mat(k, v), ba * phi));
    Mat image = params.rows() && carrier.rows() ? params * carrier : Mat(0, 2 * v);
    return Subspace(2 * v, image);
  }
  if (L.ambient() != 2 * v) throw std::invalid_argument("forward image needs L over the source");
  Mat bx = linalg::slice_cols(b, 0, v);
  Mat ba = linalg::slice_cols(b, v, v);
  // Unknowns (beta, c): beta phi = c B_alpha.
  Mat constraint = Mat::vstack(phi, ba.scaled(-1));
  Mat params = linalg::kernel(constraint.transpose());
  Mat carrier = Mat::vstack(Mat::hstack(Mat(w, w), Mat::identity(w)),
                            Mat::hstack(bx * phi.transpose(), Mat(k, w)));
  Mat image = params.rows() && carrier.rows() ? params * carrier : Mat(0, 2 * w);
  return Subspace(2 * w, image);
}

}  // namespace relkit::symplin
