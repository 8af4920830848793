#include "relkit/frobenius.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "internal/multable.hpp"

namespace relkit::frobenius {

namespace {

using detail::MulTable;

MulTable table_of(const FrobCandidate& c) { return detail::make_table(c.X.size(), c.m); }

std::string show_pair(const FrobCandidate& c, int p) {
  int n = c.X.size();
  return "(" + c.X.at(p / n) + "," + c.X.at(p % n) + ")";
}

}  // namespace

FrobCandidate make_candidate(const finrel::Carrier& X, const finrel::Rel& m,
                             const Budget& budget) {
  if (m.src() != finrel::Carrier::product(X, X, budget) || m.dst() != X)
    throw std::invalid_argument("candidate operation must map X*X to X");
  return FrobCandidate{X, m};
}

FrobReport check_frobenius_axioms(const FrobCandidate& c, const FrobOptions& opt) {
  FrobReport out;
  const int n = c.X.size();
  if (c.m.dst() != c.X || c.m.src().size() != n * n)
    throw std::invalid_argument("candidate operation must map X*X to X");

  // (M): the relational equation m . dagger(m) = id unfolds to m being
  // single valued and every element appearing in some product.
  bool single = true;
  std::vector<std::string> wit;
  {
    const auto& pairs = c.m.pairs();
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
      if (pairs[i].first == pairs[i + 1].first) {
        single = false;
        wit.push_back("m" + show_pair(c, pairs[i].first) + " has more than one value");
      }
    }
    std::vector<char> covered(static_cast<std::size_t>(n), 0);
    for (const auto& [p, x] : pairs) covered[static_cast<std::size_t>(x)] = 1;
    for (int x = 0; x < n; ++x)
      if (!covered[static_cast<std::size_t>(x)])
        wit.push_back(c.X.at(x) + " is not a product of any pair");
    bool ok = single && wit.empty();
    out.report.add("(M)", ok, std::move(wit));
    if (opt.fail_fast && !ok) return out;
  }

  const MulTable t = table_of(c);

  // (A): slot-wise associativity of the induced multivalued operation.
  {
    std::vector<std::string> aw = detail::associativity_witnesses(t, c.X);
    bool ok = aw.empty();
    out.report.add("(A)", ok, std::move(aw));
    if (opt.fail_fast && !ok) return out;
  }

  // (F): both Frobenius legs against dagger(m) . m, computed over the
  // universe (X*X)*(X*X).
  {
    const std::uint64_t nn = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n);
    charge(opt.budget, nn * nn, "(F) check");
    std::vector<std::uint8_t> mid(nn * nn, 0), lhs(nn * nn, 0), rhs(nn * nn, 0);
    std::vector<std::vector<int>> fiber(static_cast<std::size_t>(n));
    for (int p = 0; p < n * n; ++p)
      for (int w : t.cell[static_cast<std::size_t>(p)]) fiber[static_cast<std::size_t>(w)].push_back(p);
    for (int p = 0; p < n * n; ++p)
      for (int w : t.cell[static_cast<std::size_t>(p)])
        for (int q : fiber[static_cast<std::size_t>(w)])
          mid[static_cast<std::uint64_t>(p) * nn + static_cast<std::uint64_t>(q)] = 1;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int x : t.at(a, b))
          for (int y = 0; y < n; ++y)
            for (int z : t.at(b, y))
              lhs[static_cast<std::uint64_t>(x * n + y) * nn +
                  static_cast<std::uint64_t>(a * n + z)] = 1;
    for (int d = 0; d < n; ++d)
      for (int e2 = 0; e2 < n; ++e2)
        for (int y : t.at(d, e2))
          for (int x = 0; x < n; ++x)
            for (int u : t.at(x, d))
              rhs[static_cast<std::uint64_t>(x * n + y) * nn +
                  static_cast<std::uint64_t>(u * n + e2)] = 1;
    std::vector<std::string> fw;
    auto describe = [&](std::uint64_t idx) {
      int src = static_cast<int>(idx / nn), dst = static_cast<int>(idx % nn);
      return "(" + show_pair(c, src) + " -> " + show_pair(c, dst) + ")";
    };
    for (std::uint64_t i = 0; i < nn * nn && fw.size() < 8; ++i) {
      if (lhs[i] != mid[i])
        fw.push_back("left leg vs coproduct at " + describe(i));
      else if (rhs[i] != mid[i])
        fw.push_back("right leg vs coproduct at " + describe(i));
    }
    bool ok = fw.empty();
    out.report.add("(F)", ok, std::move(fw));
    if (opt.fail_fast && !ok) return out;
  }

  // (U): search unit subsets by ascending size. An element can belong to
  // a unit set only if all its one-sided products stay on the diagonal;
  // the subset must then cover every element on both sides. The first
  // hit is the unit; the scan continues through the same and the next
  // size to confirm it is the only one.
  {
    if (n > 62) charge(opt.budget, ~0ull, "(U) subset sweep");
    charge(opt.budget, 1ull << n, "(U) subset sweep");
    std::vector<int> partial;  // candidate unit elements
    std::vector<std::uint64_t> lcov, rcov;
    for (int e2 = 0; e2 < n; ++e2) {
      bool good = true;
      std::uint64_t lm = 0, rm = 0;
      for (int x = 0; x < n && good; ++x) {
        for (int z : t.at(e2, x)) {
          if (z != x) good = false;
        }
        for (int z : t.at(x, e2)) {
          if (z != x) good = false;
        }
        if (!t.at(e2, x).empty()) lm |= 1ull << x;
        if (!t.at(x, e2).empty()) rm |= 1ull << x;
      }
      if (good) {
        partial.push_back(e2);
        lcov.push_back(lm);
        rcov.push_back(rm);
      }
    }
    const std::uint64_t full = n == 64 ? ~0ull : (1ull << n) - 1;
    const int p = static_cast<int>(partial.size());
    std::vector<std::vector<std::uint64_t>> by_size(static_cast<std::size_t>(p) + 1);
    for (std::uint64_t mask = 0; mask < (1ull << p); ++mask)
      by_size[static_cast<std::size_t>(__builtin_popcountll(mask))].push_back(mask);
    std::optional<std::uint64_t> found;
    std::optional<std::uint64_t> second;
    for (int k = 0; k <= p && !second; ++k) {
      if (found && k > static_cast<int>(__builtin_popcountll(*found)) + 1) break;
      for (std::uint64_t mask : by_size[static_cast<std::size_t>(k)]) {
        std::uint64_t lm = 0, rm = 0;
        for (int i = 0; i < p; ++i)
          if (mask >> i & 1) {
            lm |= lcov[static_cast<std::size_t>(i)];
            rm |= rcov[static_cast<std::size_t>(i)];
          }
        if (lm == full && rm == full) {
          if (!found) {
            found = mask;
          } else if (mask != *found) {
            second = mask;
            break;
          }
        }
      }
    }
    std::vector<std::string> uw;
    auto unit_atoms = [&](std::uint64_t mask) {
      std::vector<std::string> atoms;
      for (int i = 0; i < p; ++i)
        if (mask >> i & 1) atoms.push_back(c.X.at(partial[static_cast<std::size_t>(i)]));
      return atoms;
    };
    bool ok = found.has_value() && !second.has_value();
    if (!found) {
      std::uint64_t lall = 0, rall = 0;
      for (int i = 0; i < p; ++i) {
        lall |= lcov[static_cast<std::size_t>(i)];
        rall |= rcov[static_cast<std::size_t>(i)];
      }
      for (int x = 0; x < n; ++x) {
        if (!(lall >> x & 1)) uw.push_back("no candidate unit acts on " + c.X.at(x) + " from the left");
        if (!(rall >> x & 1)) uw.push_back("no candidate unit acts on " + c.X.at(x) + " from the right");
      }
      if (uw.empty()) uw.push_back("no subset acts as a two sided unit");
    } else if (second) {
      auto fmt = [](const std::vector<std::string>& atoms) {
        std::string s = "{";
        for (std::size_t i = 0; i < atoms.size(); ++i) s += (i ? "," : "") + atoms[i];
        return s + "}";
      };
      uw.push_back("ambiguous unit: " + fmt(unit_atoms(*found)) + " and " + fmt(unit_atoms(*second)));
    } else {
      out.unit = unit_atoms(*found);
    }
    out.report.add("(U)", ok, std::move(uw));
  }
  return out;
}

std::optional<int> Groupoid::mu_at(int g, int f) const {
  auto it = std::lower_bound(mu.begin(), mu.end(), std::make_tuple(g, f, -1));
  if (it != mu.end() && std::get<0>(*it) == g && std::get<1>(*it) == f) return std::get<2>(*it);
  return std::nullopt;
}

namespace {

void validate_structure(const Groupoid& g) {
  std::size_t n1 = static_cast<std::size_t>(g.G1.size());
  std::size_t n0 = static_cast<std::size_t>(g.G0.size());
  if (g.s.size() != n1 || g.t.size() != n1 || g.inv.size() != n1 || g.e.size() != n0)
    throw std::invalid_argument("groupoid: table sizes do not match carriers");
  auto in0 = [&](int o) { return o >= 0 && o < g.G0.size(); };
  auto in1 = [&](int f) { return f >= 0 && f < g.G1.size(); };
  for (int f = 0; f < g.G1.size(); ++f)
    if (!in0(g.s[static_cast<std::size_t>(f)]) || !in0(g.t[static_cast<std::size_t>(f)]) ||
        !in1(g.inv[static_cast<std::size_t>(f)]))
      throw std::invalid_argument("groupoid: index out of range");
  for (int o = 0; o < g.G0.size(); ++o)
    if (!in1(g.e[static_cast<std::size_t>(o)]))
      throw std::invalid_argument("groupoid: index out of range");
  for (std::size_t i = 0; i + 1 < g.mu.size(); ++i) {
    if (std::get<0>(g.mu[i]) == std::get<0>(g.mu[i + 1]) &&
        std::get<1>(g.mu[i]) == std::get<1>(g.mu[i + 1]))
      throw std::invalid_argument("groupoid: composition is not a partial map");
  }
  for (const auto& [a, b, h] : g.mu)
    if (!in1(a) || !in1(b) || !in1(h))
      throw std::invalid_argument("groupoid: index out of range");
}

}  // namespace

Report check_groupoid_axioms(const Groupoid& g, const Budget& budget) {
  Groupoid sorted = g;
  std::sort(sorted.mu.begin(), sorted.mu.end());
  validate_structure(sorted);
  const Groupoid& G = sorted;
  Report rep;
  const auto& A = G.G1;
  const auto& O = G.G0;

  {
    std::vector<std::string> w;
    for (int o = 0; o < O.size(); ++o) {
      int u = G.e[static_cast<std::size_t>(o)];
      if (G.s[static_cast<std::size_t>(u)] != o)
        w.push_back("s(e(" + O.at(o) + ")) = " + O.at(G.s[static_cast<std::size_t>(u)]));
      if (G.t[static_cast<std::size_t>(u)] != o)
        w.push_back("t(e(" + O.at(o) + ")) = " + O.at(G.t[static_cast<std::size_t>(u)]));
    }
    rep.add_witnessed("A.1", std::move(w));
  }
  {
    charge(budget, static_cast<std::uint64_t>(A.size()) * static_cast<std::uint64_t>(A.size()),
           "groupoid domain check");
    std::vector<std::string> w;
    for (const auto& [a, b, h] : G.mu) {
      if (!G.composable(a, b))
        w.push_back("mu(" + A.at(a) + "," + A.at(b) + ") defined on a non composable pair");
      if (G.s[static_cast<std::size_t>(h)] != G.s[static_cast<std::size_t>(b)])
        w.push_back("s(mu(" + A.at(a) + "," + A.at(b) + ")) differs from s(" + A.at(b) + ")");
      if (G.t[static_cast<std::size_t>(h)] != G.t[static_cast<std::size_t>(a)])
        w.push_back("t(mu(" + A.at(a) + "," + A.at(b) + ")) differs from t(" + A.at(a) + ")");
    }
    for (int a = 0; a < A.size() && w.size() < 32; ++a)
      for (int b = 0; b < A.size() && w.size() < 32; ++b)
        if (G.composable(a, b) && !G.mu_at(a, b))
          w.push_back("mu(" + A.at(a) + "," + A.at(b) + ") undefined on a composable pair");
    rep.add_witnessed("A.2", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (int f = 0; f < A.size(); ++f) {
      auto right = G.mu_at(f, G.e[static_cast<std::size_t>(G.s[static_cast<std::size_t>(f)])]);
      auto left = G.mu_at(G.e[static_cast<std::size_t>(G.t[static_cast<std::size_t>(f)])], f);
      if (right != std::optional<int>(f)) w.push_back(A.at(f) + " . e(s(" + A.at(f) + ")) != " + A.at(f));
      if (left != std::optional<int>(f)) w.push_back("e(t(" + A.at(f) + ")) . " + A.at(f) + " != " + A.at(f));
    }
    rep.add_witnessed("A.3", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (int f = 0; f < A.size(); ++f) {
      auto got = G.mu_at(f, G.inv[static_cast<std::size_t>(f)]);
      int want = G.e[static_cast<std::size_t>(G.t[static_cast<std::size_t>(f)])];
      if (got != std::optional<int>(want))
        w.push_back(A.at(f) + " . inv(" + A.at(f) + ") != e(t(" + A.at(f) + "))");
    }
    rep.add_witnessed("A.4", std::move(w));
  }
  {
    std::vector<std::string> w;
    for (int f = 0; f < A.size(); ++f) {
      auto got = G.mu_at(G.inv[static_cast<std::size_t>(f)], f);
      int want = G.e[static_cast<std::size_t>(G.s[static_cast<std::size_t>(f)])];
      if (got != std::optional<int>(want))
        w.push_back("inv(" + A.at(f) + ") . " + A.at(f) + " != e(s(" + A.at(f) + "))");
    }
    rep.add_witnessed("A.5", std::move(w));
  }
  {
    charge(budget, static_cast<std::uint64_t>(G.mu.size()) * static_cast<std::uint64_t>(A.size()),
           "groupoid associativity");
    std::vector<std::string> w;
    for (const auto& [a, b, h] : G.mu) {
      for (int k = 0; k < A.size() && w.size() < 32; ++k) {
        if (!G.composable(b, k)) continue;
        auto bk = G.mu_at(b, k);
        auto lhs = G.mu_at(h, k);
        auto rhs = bk ? G.mu_at(a, *bk) : std::optional<int>{};
        if (!lhs || !rhs || *lhs != *rhs)
          w.push_back("associativity breaks at (" + A.at(a) + "," + A.at(b) + "," + A.at(k) + ")");
      }
      if (w.size() >= 32) break;
    }
    rep.add_witnessed("A.6", std::move(w));
  }
  return rep;
}

Groupoid group_groupoid(const std::vector<std::string>& elems,
                        const std::vector<std::vector<int>>& table, int unit_index) {
  const int n = static_cast<int>(elems.size());
  Groupoid g;
  g.G1 = finrel::Carrier(elems);
  g.G0 = finrel::Carrier({elems[static_cast<std::size_t>(unit_index)]});
  g.s.assign(static_cast<std::size_t>(n), 0);
  g.t.assign(static_cast<std::size_t>(n), 0);
  g.e = {unit_index};
  g.inv.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int ab = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      g.mu.emplace_back(a, b, ab);
      if (ab == unit_index && table[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] == unit_index)
        g.inv[static_cast<std::size_t>(a)] = b;
    }
  }
  for (int a = 0; a < n; ++a)
    if (g.inv[static_cast<std::size_t>(a)] < 0)
      throw std::invalid_argument("group table has no inverse for " + elems[static_cast<std::size_t>(a)]);
  std::sort(g.mu.begin(), g.mu.end());
  return g;
}

Groupoid pair_groupoid(const std::vector<std::string>& points) {
  const int n = static_cast<int>(points.size());
  Groupoid g;
  std::vector<std::string> arrows;
  arrows.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      arrows.push_back(finrel::pair_atom(points[static_cast<std::size_t>(x)],
                                         points[static_cast<std::size_t>(y)]));
  std::vector<std::string> objects;
  objects.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x)
    objects.push_back(finrel::pair_atom(points[static_cast<std::size_t>(x)],
                                        points[static_cast<std::size_t>(x)]));
  g.G1 = finrel::Carrier(std::move(arrows));
  g.G0 = finrel::Carrier(std::move(objects));
  g.s.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  g.t.resize(g.s.size());
  g.inv.resize(g.s.size());
  g.e.resize(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    g.e[static_cast<std::size_t>(x)] = x * n + x;
    for (int y = 0; y < n; ++y) {
      g.s[static_cast<std::size_t>(x * n + y)] = y;
      g.t[static_cast<std::size_t>(x * n + y)] = x;
      g.inv[static_cast<std::size_t>(x * n + y)] = y * n + x;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) g.mu.emplace_back(x * n + y, y * n + z, x * n + z);
  std::sort(g.mu.begin(), g.mu.end());
  return g;
}

Groupoid disjoint_union(const Groupoid& a, const Groupoid& b) {
  std::vector<std::string> arrows = a.G1.atoms();
  for (const auto& x : b.G1.atoms()) {
    if (a.G1.contains(x)) throw std::invalid_argument("disjoint_union: arrow atom collision: " + x);
    arrows.push_back(x);
  }
  std::vector<std::string> objects = a.G0.atoms();
  for (const auto& x : b.G0.atoms()) {
    if (a.G0.contains(x)) throw std::invalid_argument("disjoint_union: object atom collision: " + x);
    objects.push_back(x);
  }
  Groupoid g;
  g.G1 = finrel::Carrier(std::move(arrows));
  g.G0 = finrel::Carrier(std::move(objects));
  const int f1 = a.G1.size(), o1 = a.G0.size();
  g.s = a.s;
  g.t = a.t;
  g.inv = a.inv;
  g.e = a.e;
  for (std::size_t i = 0; i < b.s.size(); ++i) {
    g.s.push_back(b.s[i] + o1);
    g.t.push_back(b.t[i] + o1);
    g.inv.push_back(b.inv[i] + f1);
  }
  for (std::size_t i = 0; i < b.e.size(); ++i) g.e.push_back(b.e[i] + f1);
  g.mu = a.mu;
  for (const auto& [x, y, z] : b.mu) g.mu.emplace_back(x + f1, y + f1, z + f1);
  std::sort(g.mu.begin(), g.mu.end());
  return g;
}

Groupoid to_groupoid(const FrobCandidate& c, const FrobOptions& opt) {
  FrobOptions pre = opt;
  pre.fail_fast = true;
  FrobReport fr = check_frobenius_axioms(c, pre);
  if (!fr.report.verdict() || !fr.unit)
    throw PreconditionError("to_groupoid: candidate fails the algebra laws", fr.report);

  const MulTable t = table_of(c);
  const int n = c.X.size();
  std::vector<int> units;
  for (const auto& atom : *fr.unit) units.push_back(c.X.index(atom));
  std::sort(units.begin(), units.end());

  Groupoid g;
  g.G1 = c.X;
  std::vector<std::string> object_atoms;
  for (int u : units) object_atoms.push_back(c.X.at(u));
  g.G0 = finrel::Carrier(std::move(object_atoms));
  g.e = units;
  g.s.assign(static_cast<std::size_t>(n), -1);
  g.t.assign(static_cast<std::size_t>(n), -1);
  g.inv.assign(static_cast<std::size_t>(n), -1);

  for (int f = 0; f < n; ++f) {
    for (std::size_t o = 0; o < units.size(); ++o) {
      if (!t.at(f, units[o]).empty()) {
        if (g.s[static_cast<std::size_t>(f)] != -1)
          throw std::logic_error("to_groupoid: " + c.X.at(f) + " composes with two units on the right");
        g.s[static_cast<std::size_t>(f)] = static_cast<int>(o);
      }
      if (!t.at(units[o], f).empty()) {
        if (g.t[static_cast<std::size_t>(f)] != -1)
          throw std::logic_error("to_groupoid: " + c.X.at(f) + " composes with two units on the left");
        g.t[static_cast<std::size_t>(f)] = static_cast<int>(o);
      }
    }
    if (g.s[static_cast<std::size_t>(f)] == -1)
      throw std::logic_error("to_groupoid: " + c.X.at(f) + " composes with no unit on the right");
    if (g.t[static_cast<std::size_t>(f)] == -1)
      throw std::logic_error("to_groupoid: " + c.X.at(f) + " composes with no unit on the left");
  }

  std::vector<char> is_unit(static_cast<std::size_t>(n), 0);
  for (int u : units) is_unit[static_cast<std::size_t>(u)] = 1;
  for (int f = 0; f < n; ++f) {
    for (int h = 0; h < n; ++h) {
      bool fh = std::any_of(t.at(f, h).begin(), t.at(f, h).end(),
                            [&](int z) { return is_unit[static_cast<std::size_t>(z)]; });
      bool hf = std::any_of(t.at(h, f).begin(), t.at(h, f).end(),
                            [&](int z) { return is_unit[static_cast<std::size_t>(z)]; });
      if (fh && hf) {
        if (g.inv[static_cast<std::size_t>(f)] != -1)
          throw std::logic_error("to_groupoid: two sided inverse of " + c.X.at(f) + " is not unique");
        g.inv[static_cast<std::size_t>(f)] = h;
      }
    }
    if (g.inv[static_cast<std::size_t>(f)] == -1)
      throw std::logic_error("to_groupoid: no two sided inverse for " + c.X.at(f));
  }

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const auto& cell = t.at(a, b);
      bool comp = g.s[static_cast<std::size_t>(a)] == g.t[static_cast<std::size_t>(b)];
      if (comp) {
        if (cell.size() != 1)
          throw std::logic_error("to_groupoid: product of composable pair (" + c.X.at(a) + "," +
                                 c.X.at(b) + ") is not a single element");
        g.mu.emplace_back(a, b, cell.front());
      } else if (!cell.empty()) {
        throw std::logic_error("to_groupoid: product defined on non composable pair (" +
                               c.X.at(a) + "," + c.X.at(b) + ")");
      }
    }
  std::sort(g.mu.begin(), g.mu.end());
  return g;
}

FrobCandidate from_groupoid(const Groupoid& g, const Budget& budget) {
  Report rep = check_groupoid_axioms(g, budget);
  if (!rep.verdict()) throw PreconditionError("from_groupoid: groupoid axioms fail", rep);
  const int n = g.G1.size();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(g.mu.size());
  for (const auto& [a, b, h] : g.mu) pairs.emplace_back(a * n + b, h);
  finrel::Rel m(finrel::Carrier::product(g.G1, g.G1, budget), g.G1, std::move(pairs));
  return FrobCandidate{g.G1, std::move(m)};
}

bool equal_up_to_object_names(const Groupoid& a, const Groupoid& b) {
  if (a.G1 != b.G1) return false;
  if (a.G0.size() != b.G0.size()) return false;
  // Objects correspond through their unit arrows.
  std::vector<int> to_b(static_cast<std::size_t>(a.G0.size()), -1);
  for (int o = 0; o < a.G0.size(); ++o) {
    int ua = a.e[static_cast<std::size_t>(o)];
    int hit = -1;
    for (int q = 0; q < b.G0.size(); ++q)
      if (b.e[static_cast<std::size_t>(q)] == ua) {
        if (hit != -1) return false;
        hit = q;
      }
    if (hit == -1) return false;
    to_b[static_cast<std::size_t>(o)] = hit;
  }
  for (int f = 0; f < a.G1.size(); ++f) {
    if (to_b[static_cast<std::size_t>(a.s[static_cast<std::size_t>(f)])] !=
        b.s[static_cast<std::size_t>(f)])
      return false;
    if (to_b[static_cast<std::size_t>(a.t[static_cast<std::size_t>(f)])] !=
        b.t[static_cast<std::size_t>(f)])
      return false;
    if (a.inv[static_cast<std::size_t>(f)] != b.inv[static_cast<std::size_t>(f)]) return false;
  }
  auto amu = a.mu, bmu = b.mu;
  std::sort(amu.begin(), amu.end());
  std::sort(bmu.begin(), bmu.end());
  return amu == bmu;
}

namespace {

void require_passing(const FrobCandidate& c, const FrobOptions& opt, const char* who) {
  FrobOptions pre = opt;
  pre.fail_fast = true;
  FrobReport fr = check_frobenius_axioms(c, pre);
  if (!fr.report.verdict())
    throw PreconditionError(std::string(who) + ": candidate fails the algebra laws", fr.report);
}

using detail::rel_difference_witnesses;

}  // namespace

Report check_morphism(const FrobMorphism& mor, MorphMode mode, const FrobOptions& opt) {
  if (mor.r.src() != mor.A.X || mor.r.dst() != mor.B.X)
    throw std::invalid_argument("morphism relation must map the first carrier to the second");
  require_passing(mor.A, opt, "check_morphism");
  require_passing(mor.B, opt, "check_morphism");
  const Budget& bud = opt.budget;
  Report rep;

  if (mode == MorphMode::ext) {
    using namespace finrel;
    Rel nr = name_of_rel(mor.r, bud);
    Rel stacked = product(nr, nr, bud);
    Rel inter = interchange(mor.A.X, mor.B.X, mor.A.X, mor.B.X, bud);
    Rel muls = product(mor.A.m, mor.B.m, bud);
    Rel lhs = compose(compose(compose(dagger(left_unitor(Carrier::point(), bud)), stacked, bud),
                              inter, bud),
                      muls, bud);
    bool ok = lhs == nr;
    rep.add("ext", ok, ok ? std::vector<std::string>{} : rel_difference_witnesses(lhs, nr));
    return rep;
  }

  if (mode == MorphMode::frob || mode == MorphMode::func) {
    using namespace finrel;
    Rel rr = product(mor.r, mor.r, bud);
    Rel lhs1 = compose(mor.A.m, mor.r, bud);
    Rel rhs1 = compose(rr, mor.B.m, bud);
    bool ok1 = lhs1 == rhs1;
    rep.add("frob.mul", ok1, ok1 ? std::vector<std::string>{} : rel_difference_witnesses(lhs1, rhs1));
    Rel lhs2 = compose(mor.r, dagger(mor.B.m), bud);
    Rel rhs2 = compose(dagger(mor.A.m), rr, bud);
    bool ok2 = lhs2 == rhs2;
    rep.add("frob.comul", ok2, ok2 ? std::vector<std::string>{} : rel_difference_witnesses(lhs2, rhs2));
    if (mode == MorphMode::frob) return rep;

    FrobReport fa = check_frobenius_axioms(mor.A, opt);
    FrobReport fb = check_frobenius_axioms(mor.B, opt);
    std::vector<std::string> w;
    std::set<std::string> ub(fb.unit->begin(), fb.unit->end());
    for (const auto& u : *fa.unit) {
      int cnt = 0;
      std::string img;
      for (int v : mor.r.image(mor.A.X.index(u)))
        if (ub.count(mor.B.X.at(v))) {
          ++cnt;
          img = mor.B.X.at(v);
        }
      if (cnt == 0) w.push_back("unit " + u + " has no unit image");
      if (cnt > 1) w.push_back("unit " + u + " has several unit images");
    }
    rep.add_witnessed("func.units", std::move(w));
    return rep;
  }

  // mfunc: element-wise functor laws on the induced groupoids.
  Groupoid G = to_groupoid(mor.A, opt);
  Groupoid H = to_groupoid(mor.B, opt);
  const auto& r = mor.r;
  auto rim = [&](int g) { return r.image(g); };

  std::vector<std::string> w1, w2, w3, w4;
  for (const auto& [g, f, h] : G.mu) {
    for (int gp : rim(g))
      for (int fp : rim(f)) {
        auto hp = H.composable(gp, fp) ? H.mu_at(gp, fp) : std::optional<int>{};
        if (!hp) {
          if (w1.size() < 8)
            w1.push_back("images of composable (" + G.G1.at(g) + "," + G.G1.at(f) +
                         ") include the non composable (" + H.G1.at(gp) + "," + H.G1.at(fp) + ")");
        } else if (!r.contains(h, *hp)) {
          if (w1.size() < 8)
            w1.push_back("composite image " + H.G1.at(*hp) + " is not an image of " + G.G1.at(h));
        }
      }
    for (int y : rim(h)) {
      bool hit = false;
      for (int gp : rim(g)) {
        for (int fp : rim(f))
          if (H.composable(gp, fp) && H.mu_at(gp, fp) == std::optional<int>(y)) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      if (!hit && w2.size() < 8)
        w2.push_back("image " + H.G1.at(y) + " of " + G.G1.at(h) +
                     " does not factor through images of (" + G.G1.at(g) + "," + G.G1.at(f) + ")");
    }
  }
  for (int g = 0; g < G.G1.size(); ++g)
    for (int f = 0; f < G.G1.size(); ++f) {
      if (G.composable(g, f)) continue;
      for (int gp : rim(g))
        for (int fp : rim(f))
          if (H.composable(gp, fp) && w3.size() < 8)
            w3.push_back("non composable (" + G.G1.at(g) + "," + G.G1.at(f) +
                         ") has composable images (" + H.G1.at(gp) + "," + H.G1.at(fp) + ")");
    }
  {
    // Decompositions of each arrow back home, for the lifting clause.
    std::vector<std::vector<std::pair<int, int>>> decomp(static_cast<std::size_t>(G.G1.size()));
    for (const auto& [g, f, h] : G.mu) decomp[static_cast<std::size_t>(h)].emplace_back(g, f);
    finrel::Rel rT = finrel::dagger(r);
    for (const auto& [gp, fp, hp] : H.mu) {
      for (int h : rT.image(hp)) {
        bool hit = false;
        for (const auto& [g, f] : decomp[static_cast<std::size_t>(h)])
          if (r.contains(g, gp) && r.contains(f, fp)) {
            hit = true;
            break;
          }
        if (!hit && w4.size() < 8)
          w4.push_back("composable images (" + H.G1.at(gp) + "," + H.G1.at(fp) +
                       ") of no composable pair over " + G.G1.at(h));
      }
    }
  }
  rep.add_witnessed("mfunc.compose-forward", std::move(w1));
  rep.add_witnessed("mfunc.compose-backward", std::move(w2));
  rep.add_witnessed("mfunc.non-composable", std::move(w3));
  rep.add_witnessed("mfunc.decompose", std::move(w4));
  return rep;
}

Groupoid induced_subgroupoid(const FrobMorphism& mor, const FrobOptions& opt) {
  Report frob = check_morphism(mor, MorphMode::frob, opt);
  if (!frob.verdict())
    throw PreconditionError("induced_subgroupoid: relation fails the frob laws", frob);

  const auto& r = mor.r;
  std::vector<std::string> atoms;
  atoms.reserve(r.size());
  for (const auto& [x, y] : r.pairs())
    atoms.push_back(finrel::pair_atom(mor.A.X.at(x), mor.B.X.at(y)));
  finrel::Carrier R(std::move(atoms));

  const MulTable ta = table_of(mor.A);
  const MulTable tb = table_of(mor.B);
  const auto& rp = r.pairs();
  const int k = static_cast<int>(rp.size());
  std::vector<std::pair<int, int>> mpairs;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      auto [a, b] = rp[static_cast<std::size_t>(i)];
      auto [c2, d] = rp[static_cast<std::size_t>(j)];
      for (int u : ta.at(a, c2))
        for (int v : tb.at(b, d)) {
          auto it = std::lower_bound(rp.begin(), rp.end(), std::make_pair(u, v));
          if (it == rp.end() || *it != std::make_pair(u, v))
            throw std::logic_error("induced_subgroupoid: product (" + mor.A.X.at(u) + "," +
                                   mor.B.X.at(v) + ") escapes the pair set");
          mpairs.emplace_back(i * k + j, static_cast<int>(it - rp.begin()));
        }
    }
  finrel::Rel m(finrel::Carrier::product(R, R, opt.budget), R, std::move(mpairs));
  return to_groupoid(FrobCandidate{R, std::move(m)}, opt);
}

}  // namespace relkit::frobenius
