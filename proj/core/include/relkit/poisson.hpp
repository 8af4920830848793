#pragma once

#include <map>
#include <string>
#include <vector>

#include "relkit/matrix.hpp"
#include "relkit/rational.hpp"

namespace relkit::poisson {

// Sparse exact polynomial in x1..xn; terms keyed by exponent vectors in
// lexicographic order. Total degree is capped so products stay bounded.
class Poly {
 public:
  static constexpr int kMaxDegree = 64;

  explicit Poly(int n = 0) : n_(n) {}
  static Poly constant(int n, const Rat& c);
  static Poly coordinate(int n, int i);  // x_{i+1}

  int vars() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;  // throws on degree overflow
  Poly scaled(const Rat& c) const;
  Poly derivative(int i) const;

  const std::map<std::vector<int>, Rat>& terms() const { return terms_; }
  void set_term(const std::vector<int>& exps, const Rat& c);
  std::string to_string() const;

  bool operator==(const Poly& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  int n_ = 0;
  std::map<std::vector<int>, Rat> terms_;  // nonzero coefficients only
};

// Pi^{ij}(x) = a^{ij} + sum_k c_k^{ij} x_k with both blocks skew in (i,j).
struct PolyBivector {
  int n = 0;
  linalg::Mat a;                // constant block
  std::vector<linalg::Mat> c;   // c[k] is the coefficient matrix of x_k
};

// Validates skew symmetry of every block.
PolyBivector make_bivector(int n, linalg::Mat a, std::vector<linalg::Mat> c);

// Entry Pi^{ij} as a polynomial.
Poly bivector_entry(const PolyBivector& p, int i, int j);

struct JacobiEntry {
  int s, l, k;  // s < l < k
  Poly residual;
};

// Residuals sum_r [Pi^{sr} d_r Pi^{lk} + Pi^{kr} d_r Pi^{sl} +
// Pi^{lr} d_r Pi^{ks}] for every ordered triple.
std::vector<JacobiEntry> jacobi_residual(const PolyBivector& p);

bool is_poisson(const PolyBivector& p);

// Linear bivector Pi^{ij} = sum_k c_{ij}^k x_k from structure constants
// given as c[k](i,j) = c_{ij}^k; rejects blocks that are not skew.
PolyBivector from_structure_constants(int n, const std::vector<linalg::Mat>& c);

// {f,g} = sum_{ij} Pi^{ij} d_i f d_j g.
Poly poisson_bracket(const PolyBivector& p, const Poly& f, const Poly& g);

}  // namespace relkit::poisson
