#include "relkit/poisson.hpp"

#include <numeric>
#include <stdexcept>

namespace relkit::poisson {

Poly Poly::constant(int n, const Rat& c) {
  Poly p(n);
  if (c != 0) p.terms_[std::vector<int>(static_cast<std::size_t>(n), 0)] = c;
  return p;
}

Poly Poly::coordinate(int n, int i) {
  if (i < 0 || i >= n) throw std::invalid_argument("coordinate index out of range");
  Poly p(n);
  std::vector<int> e(static_cast<std::size_t>(n), 0);
  e[static_cast<std::size_t>(i)] = 1;
  p.terms_[std::move(e)] = 1;
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

void Poly::set_term(const std::vector<int>& exps, const Rat& c) {
  if (exps.size() != static_cast<std::size_t>(n_))
    throw std::invalid_argument("exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw std::invalid_argument("negative exponent");
  if (std::accumulate(exps.begin(), exps.end(), 0) > kMaxDegree)
    throw std::overflow_error("polynomial degree overflow");
  if (c == 0)
    terms_.erase(exps);
  else
    terms_[exps] = c;
}

Poly Poly::operator+(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomials over different coordinates");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) {
    auto [it, fresh] = out.terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) out.terms_.erase(it);
    }
  }
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + o.scaled(-1); }

Poly Poly::operator*(const Poly& o) const {
  if (n_ != o.n_) throw std::invalid_argument("polynomials over different coordinates");
  Poly out(n_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(e1.size());
      int total = 0;
      for (std::size_t i = 0; i < e.size(); ++i) {
        e[i] = e1[i] + e2[i];
        total += e[i];
      }
      if (total > kMaxDegree) throw std::overflow_error("polynomial degree overflow");
      auto [it, fresh] = out.terms_.try_emplace(std::move(e), Rat(c1 * c2));
      if (!fresh) {
        it->second += c1 * c2;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  Poly out(n_);
  if (c == 0) return out;
  for (const auto& [e, v] : terms_) out.terms_[e] = v * c;
  return out;
}

Poly Poly::derivative(int i) const {
  if (i < 0 || i >= n_) throw std::invalid_argument("coordinate index out of range");
  Poly out(n_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(i)];
    if (k == 0) continue;
    std::vector<int> d = e;
    d[static_cast<std::size_t>(i)] = k - 1;
    out.terms_[std::move(d)] = c * k;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i + 1);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rat coeff = c;
    if (out.empty()) {
      if (coeff < 0) {
        out += "-";
        coeff = -coeff;
      }
    } else {
      out += coeff < 0 ? " - " : " + ";
      if (coeff < 0) coeff = -coeff;
    }
    if (mono.empty())
      out += format_rat(coeff);
    else if (coeff == 1)
      out += mono;
    else
      out += format_rat(coeff) + "*" + mono;
  }
  return out;
}

namespace {

void require_skew(const linalg::Mat& m, int n, const char* what) {
  if (m.rows() != n || m.cols() != n)
    throw std::invalid_argument(std::string(what) + ": block must be n by n");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j)
      if (m.at(i, j) != -m.at(j, i))
        throw std::invalid_argument(std::string(what) + ": block is not skew symmetric");
}

}  // namespace

PolyBivector make_bivector(int n, linalg::Mat a, std::vector<linalg::Mat> c) {
  require_skew(a, n, "make_bivector constant block");
  if (c.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("make_bivector: one linear block per coordinate required");
  for (const auto& blk : c) require_skew(blk, n, "make_bivector linear block");
  return PolyBivector{n, std::move(a), std::move(c)};
}

Poly bivector_entry(const PolyBivector& p, int i, int j) {
  Poly out = Poly::constant(p.n, p.a.at(i, j));
  for (int k = 0; k < p.n; ++k) {
    const Rat& ck = p.c[static_cast<std::size_t>(k)].at(i, j);
    if (ck != 0) out = out + Poly::coordinate(p.n, k).scaled(ck);
  }
  return out;
}

std::vector<JacobiEntry> jacobi_residual(const PolyBivector& p) {
  const int n = p.n;
  std::vector<std::vector<Poly>> pi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pi[static_cast<std::size_t>(i)].push_back(bivector_entry(p, i, j));
  auto at = [&](int i, int j) -> const Poly& {
    return pi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  };
  std::vector<JacobiEntry> out;
  for (int s = 0; s < n; ++s)
    for (int l = s + 1; l < n; ++l)
      for (int k = l + 1; k < n; ++k) {
        Poly j(n);
        for (int r = 0; r < n; ++r) {
          j = j + at(s, r) * at(l, k).derivative(r);
          j = j + at(k, r) * at(s, l).derivative(r);
          j = j + at(l, r) * at(k, s).derivative(r);
        }
        out.push_back(JacobiEntry{s, l, k, std::move(j)});
      }
  return out;
}

bool is_poisson(const PolyBivector& p) {
  for (const auto& e : jacobi_residual(p))
    if (!e.residual.is_zero()) return false;
  return true;
}

PolyBivector from_structure_constants(int n, const std::vector<linalg::Mat>& c) {
  return make_bivector(n, linalg::Mat(n, n), c);
}

Poly poisson_bracket(const PolyBivector& p, const Poly& f, const Poly& g) {
  if (f.vars() != p.n || g.vars() != p.n)
    throw std::invalid_argument("bracket arguments must live over the bivector coordinates");
  Poly out(p.n);
  std::vector<Poly> df, dg;
  for (int i = 0; i < p.n; ++i) {
    df.push_back(f.derivative(i));
    dg.push_back(g.derivative(i));
  }
  for (int i = 0; i < p.n; ++i) {
    if (df[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < p.n; ++j) {
      if (i == j || dg[static_cast<std::size_t>(j)].is_zero()) continue;
      out = out + bivector_entry(p, i, j) * df[static_cast<std::size_t>(i)] *
                      dg[static_cast<std::size_t>(j)];
    }
  }
  return out;
}

}  // namespace relkit::poisson
