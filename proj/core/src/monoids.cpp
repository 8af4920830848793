#include "relkit/monoids.hpp"

#include <stdexcept>
#include <utility>

#include "internal/multable.hpp"

namespace relkit::monoids {

using namespace finrel;

namespace {

void validate_mul(const Carrier& X, const Rel& L3, const Budget& budget) {
  if (L3.src() != Carrier::product(X, X, budget) || L3.dst() != X)
    throw std::invalid_argument("multiplication must map X*X to X");
}

void validate_psi(const Carrier& X, const std::vector<int>& psi) {
  if (psi.size() != static_cast<std::size_t>(X.size()))
    throw std::invalid_argument("involution must assign a value to every atom");
  for (int v : psi)
    if (v < 0 || v >= X.size()) throw std::invalid_argument("involution value out of range");
}

}  // namespace

WeakMonoidResult check_weak_monoid(const WeakMonoidCandidate& c, const Budget& budget) {
  validate_mul(c.X, c.L3, budget);
  if (c.L1.src() != Carrier::point() || c.L1.dst() != c.X)
    throw std::invalid_argument("weak unit must map the point to X");
  Report rep;

  {
    Rel lhs = compose(product(c.L3, identity(c.X), budget), c.L3, budget);
    Rel rhs = compose(assoc_right(c.X, c.X, c.X, budget),
                      compose(product(identity(c.X), c.L3, budget), c.L3, budget), budget);
    bool ok = lhs == rhs;
    rep.add("associative", ok,
            ok ? std::vector<std::string>{} : detail::rel_difference_witnesses(lhs, rhs));
  }

  Rel left = compose(compose(dagger(left_unitor(c.X, budget)), product(c.L1, identity(c.X), budget),
                             budget),
                     c.L3, budget);
  Rel right = compose(compose(dagger(right_unitor(c.X, budget)),
                              product(identity(c.X), c.L1, budget), budget),
                      c.L3, budget);
  {
    bool ok = left == right;
    rep.add("unitors", ok,
            ok ? std::vector<std::string>{} : detail::rel_difference_witnesses(left, right));
  }
  {
    Rel twice = compose(left, left, budget);
    bool ok = twice == left;
    rep.add("projector", ok,
            ok ? std::vector<std::string>{} : detail::rel_difference_witnesses(twice, left));
  }
  return WeakMonoidResult{std::move(rep), std::move(left)};
}

StarMonoidResult check_weak_star_monoid(const StarMonoidCandidate& c, const Budget& budget) {
  validate_mul(c.X, c.L3, budget);
  validate_psi(c.X, c.psi);
  Report rep;
  {
    std::vector<std::string> w;
    for (int x = 0; x < c.X.size() && w.size() < 8; ++x)
      if (c.psi[static_cast<std::size_t>(c.psi[static_cast<std::size_t>(x)])] != x)
        w.push_back("psi(psi(" + c.X.at(x) + ")) = " +
                    c.X.at(c.psi[static_cast<std::size_t>(c.psi[static_cast<std::size_t>(x)])]));
    rep.add_witnessed("involutive", std::move(w));
  }

  Carrier XX = Carrier::product(c.X, c.X, budget);
  std::vector<std::pair<int, int>> pr;
  for (int x = 0; x < c.X.size(); ++x)
    pr.emplace_back(0, x * c.X.size() + c.psi[static_cast<std::size_t>(x)]);
  Rel psi_r(Carrier::point(), XX, std::move(pr));
  Rel L1 = compose(psi_r, c.L3, budget);

  WeakMonoidResult wm = check_weak_monoid(WeakMonoidCandidate{c.X, L1, c.L3}, budget);
  rep.merge(wm.report);
  return StarMonoidResult{std::move(rep), std::move(L1), std::move(wm.L2)};
}

CyclicResult check_cyclic_weak_star_monoid(const CyclicCandidate& c, const Budget& budget) {
  validate_mul(c.X, c.L, budget);
  validate_psi(c.X, c.psi);
  const int n = c.X.size();
  Report rep;
  {
    // L read as triples is the cyclic shift invariance target:
    // (a,b,c) present forces (c,a,b) present.
    std::vector<std::string> w;
    for (const auto& [p, k] : c.L.pairs()) {
      int a = p / n, b = p % n;
      if (!c.L.contains(k * n + a, b) && w.size() < 8)
        w.push_back("(" + c.X.at(a) + "," + c.X.at(b) + "," + c.X.at(k) +
                    ") present but its shift (" + c.X.at(k) + "," + c.X.at(a) + "," +
                    c.X.at(b) + ") is not");
    }
    rep.add_witnessed("cyclic", std::move(w));
  }

  std::vector<std::pair<std::string, std::string>> assign;
  for (int x = 0; x < n; ++x)
    assign.emplace_back(c.X.at(x), c.X.at(c.psi[static_cast<std::size_t>(x)]));
  Rel psi_graph = graph_of_map(c.X, c.X, assign);
  Rel L3 = compose(c.L, dagger(psi_graph), budget);

  StarMonoidResult sm = check_weak_star_monoid(StarMonoidCandidate{c.X, L3, c.psi}, budget);
  rep.merge(sm.report);
  return CyclicResult{std::move(rep), std::move(L3), std::move(sm.L1), std::move(sm.L2)};
}

}  // namespace relkit::monoids
