#include "relkit/relgpd.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "internal/multable.hpp"

namespace relkit::relgpd {

using finrel::Carrier;
using finrel::Rel;
using linalg::Mat;
using symplin::LinRel;
using symplin::Subspace;
using symplin::SympSpace;

namespace {

std::string triple_str(const Carrier& G, int a, int b, int c) {
  return "(" + G.at(a) + "," + G.at(b) + "," + G.at(c) + ")";
}

bool has_triple(const std::vector<std::array<int, 3>>& L, const std::array<int, 3>& t) {
  return std::binary_search(L.begin(), L.end(), t);
}

Rel graph_of_I(const SetCandidate& c) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(c.G.size()));
  for (int x = 0; x < c.G.size(); ++x) pairs.emplace_back(x, c.I[static_cast<std::size_t>(x)]);
  return Rel(c.G, c.G, std::move(pairs));
}

// Total map by index from atom assignments; every atom exactly once.
std::vector<int> map_from_atom_pairs(const Carrier& G,
                                     const std::vector<std::pair<std::string, std::string>>& asg,
                                     const char* who) {
  std::vector<int> out(static_cast<std::size_t>(G.size()), -1);
  for (const auto& [from, to] : asg) {
    int i = G.index(from);
    if (out[static_cast<std::size_t>(i)] != -1)
      throw std::invalid_argument(std::string(who) + ": I assigned twice on " + from);
    out[static_cast<std::size_t>(i)] = G.index(to);
  }
  for (int i = 0; i < G.size(); ++i)
    if (out[static_cast<std::size_t>(i)] == -1)
      throw std::invalid_argument(std::string(who) + ": I undefined on " + G.at(i));
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

SetDerived derive_impl(const SetCandidate& c, const Budget& budget) {
  const Carrier& G = c.G;
  const int n = G.size();
  Rel L_rel = ternary_rel(c, budget);
  Rel gI = graph_of_I(c);
  SetDerived d;
  d.L3 = finrel::compose(L_rel, gI, budget);
  const Carrier GG = Carrier::product(G, G, budget);
  std::vector<std::pair<int, int>> li;
  li.reserve(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) li.emplace_back(0, x * n + c.I[static_cast<std::size_t>(x)]);
  d.L_I = Rel(Carrier::point(), GG, std::move(li));
  d.L1 = finrel::compose(d.L_I, d.L3, budget);
  Rel intro = finrel::dagger(finrel::left_unitor(G, budget));
  d.L2 = finrel::compose(finrel::compose(intro, finrel::product(d.L1, finrel::identity(G), budget), budget),
                         d.L3, budget);
  std::vector<char> hit(static_cast<std::size_t>(n), 0);
  for (const auto& [a, w] : d.L2.pairs()) hit[static_cast<std::size_t>(w)] = 1;
  for (int i = 0; i < n; ++i)
    if (hit[static_cast<std::size_t>(i)]) d.C.push_back(G.at(i));
  return d;
}

}  // namespace

SetCandidate make_set_candidate(const Carrier& G, std::vector<std::array<int, 3>> triples,
                                std::vector<int> I) {
  const int n = G.size();
  if (static_cast<int>(I.size()) != n)
    throw std::invalid_argument("make_set_candidate: I must assign every atom");
  for (int v : I)
    if (v < 0 || v >= n) throw std::invalid_argument("make_set_candidate: I value out of range");
  for (const auto& t : triples)
    for (int v : t)
      if (v < 0 || v >= n) throw std::invalid_argument("make_set_candidate: triple entry out of range");
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  return SetCandidate{G, std::move(triples), std::move(I)};
}

SetCandidate set_candidate_from_atoms(const Carrier& G,
                                      const std::vector<std::array<std::string, 3>>& triples,
                                      const std::vector<std::pair<std::string, std::string>>& I) {
  std::vector<std::array<int, 3>> ts;
  ts.reserve(triples.size());
  for (const auto& t : triples) ts.push_back({G.index(t[0]), G.index(t[1]), G.index(t[2])});
  return make_set_candidate(G, std::move(ts), map_from_atom_pairs(G, I, "set_candidate_from_atoms"));
}

Rel ternary_rel(const SetCandidate& c, const Budget& budget) {
  const int n = c.G.size();
  const Carrier GG = Carrier::product(c.G, c.G, budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(c.L.size());
  for (const auto& t : c.L) pairs.emplace_back(t[0] * n + t[1], t[2]);
  return Rel(GG, c.G, std::move(pairs));
}

SetDerived derive(const SetCandidate& c, const Budget& budget) {
  for (int x = 0; x < c.G.size(); ++x) {
    int y = c.I[static_cast<std::size_t>(c.I[static_cast<std::size_t>(x)])];
    if (y != x)
      throw std::invalid_argument("derive: I is not an involution: I(I(" + c.G.at(x) + ")) = " +
                                  c.G.at(y));
  }
  return derive_impl(c, budget);
}

Report check_core_axioms(const SetCandidate& c, const Budget& budget) {
  const Carrier& G = c.G;
  const int n = G.size();
  Report rep;
  SetDerived d = derive_impl(c, budget);
  auto diff = [](const Rel& a, const Rel& b) { return detail::rel_difference_witnesses(a, b); };

  {
    bool ok = true;
    std::vector<std::string> w;
    for (const auto& t : c.L) {
      std::array<int, 3> sh{t[1], t[2], t[0]};
      if (!has_triple(c.L, sh)) {
        ok = false;
        if (w.size() < 16)
          w.push_back(triple_str(G, t[0], t[1], t[2]) + " in L but its shift " +
                      triple_str(G, sh[0], sh[1], sh[2]) + " is not");
      }
    }
    rep.add("A.1", ok, std::move(w));
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (int x = 0; x < n; ++x) {
      int y = c.I[static_cast<std::size_t>(c.I[static_cast<std::size_t>(x)])];
      if (y != x) {
        ok = false;
        if (w.size() < 16) w.push_back("I(I(" + G.at(x) + ")) = " + G.at(y));
      }
    }
    rep.add("A.2", ok, std::move(w));
  }
  {
    charge(budget, static_cast<std::uint64_t>(n) * n * n, "inversion symmetry sweep");
    bool ok = true;
    std::vector<std::string> w;
    for (int x = 0; x < n && w.size() < 16; ++x)
      for (int y = 0; y < n && w.size() < 16; ++y)
        for (int z = 0; z < n && w.size() < 16; ++z) {
          std::array<int, 3> t{x, y, z};
          std::array<int, 3> tau{c.I[static_cast<std::size_t>(y)], c.I[static_cast<std::size_t>(x)],
                                 c.I[static_cast<std::size_t>(z)]};
          bool a = has_triple(c.L, t), b = has_triple(c.L, tau);
          if (a == b) continue;
          ok = false;
          std::string ts = triple_str(G, x, y, z), us = triple_str(G, tau[0], tau[1], tau[2]);
          w.push_back(a ? ts + " in L but " + us + " is not" : ts + " not in L but " + us + " is");
        }
    rep.add("A.3", ok, std::move(w));
  }
  Rel idG = finrel::identity(G);
  {
    Rel lhs = finrel::compose(finrel::product(d.L3, idG, budget), d.L3, budget);
    Rel rhs = finrel::compose(finrel::assoc_right(G, G, G, budget),
                              finrel::compose(finrel::product(idG, d.L3, budget), d.L3, budget), budget);
    rep.add("A.4", lhs == rhs, diff(lhs, rhs));
  }
  {
    Rel intro = finrel::dagger(finrel::left_unitor(Carrier::point(), budget));
    Rel lhs = finrel::compose(finrel::compose(intro, finrel::product(d.L1, d.L1, budget), budget),
                              d.L3, budget);
    rep.add("A.5", lhs == d.L1, diff(lhs, d.L1));
  }
  {
    Rel intro = finrel::dagger(finrel::right_unitor(G, budget));
    Rel right = finrel::compose(finrel::compose(intro, finrel::product(idG, d.L1, budget), budget),
                                d.L3, budget);
    rep.add("A.6 unitors", right == d.L2, diff(d.L2, right));
  }
  {
    Rel lhs = finrel::compose(d.L1, d.L2, budget);
    rep.add("A.6 unit-invariance", lhs == d.L1, diff(lhs, d.L1));
  }
  {
    Rel lhs = finrel::compose(d.L3, d.L2, budget);
    rep.add("A.6 mul-invariance", lhs == d.L3, diff(lhs, d.L3));
  }
  {
    Rel lhs = finrel::compose(finrel::product(d.L2, d.L2, budget), d.L3, budget);
    rep.add("A.6 mul-invariance-pair", lhs == d.L3, diff(lhs, d.L3));
  }
  {
    charge(budget, static_cast<std::uint64_t>(n) * n, "projector conjugation sweep");
    bool ok = true;
    std::vector<std::string> w;
    for (int x = 0; x < n && w.size() < 16; ++x)
      for (int y = 0; y < n && w.size() < 16; ++y) {
        bool a = d.L2.contains(x, y);
        bool b = d.L2.contains(c.I[static_cast<std::size_t>(x)], c.I[static_cast<std::size_t>(y)]);
        if (a == b) continue;
        ok = false;
        std::string xy = "(" + G.at(x) + "," + G.at(y) + ")";
        std::string uv = "(" + G.at(c.I[static_cast<std::size_t>(x)]) + "," +
                         G.at(c.I[static_cast<std::size_t>(y)]) + ")";
        w.push_back(a ? xy + " in L2 but " + uv + " is not" : xy + " not in L2 but " + uv + " is");
      }
    rep.add("A.6 inversion", ok, std::move(w));
  }
  {
    Rel dg = finrel::dagger(d.L2);
    rep.add("A.6 transpose", dg == d.L2, diff(dg, d.L2));
  }
  {
    Rel sq = finrel::compose(d.L2, d.L2, budget);
    rep.add("A.6 idempotent", sq == d.L2, diff(sq, d.L2));
  }
  return rep;
}

RegularityData check_regularity(const SetCandidate& c, const Budget& budget) {
  Report core = check_core_axioms(c, budget);
  if (!core.verdict())
    throw PreconditionError("check_regularity: candidate fails the core axioms", core);
  const Carrier& G = c.G;
  const int n = G.size();
  RegularityData out;
  out.derived = derive_impl(c, budget);
  out.C = out.derived.C;
  Carrier Cc(out.C);
  std::vector<int> cOf(static_cast<std::size_t>(n), -1);  // G index -> C index
  for (int i = 0; i < Cc.size(); ++i) cOf[static_cast<std::size_t>(G.index(Cc.at(i)))] = i;
  std::vector<std::pair<int, int>> cp;
  for (const auto& [x, y] : out.derived.L2.pairs()) {
    int a = cOf[static_cast<std::size_t>(x)], b = cOf[static_cast<std::size_t>(y)];
    if (a >= 0 && b >= 0) cp.emplace_back(a, b);
  }
  Rel L2C(Cc, Cc, std::move(cp));
  {
    bool ok = finrel::classify_relation(L2C, budget).is_equivalence;
    std::vector<std::string> w;
    if (!ok) {
      for (int i = 0; i < Cc.size() && w.size() < 8; ++i)
        if (!L2C.contains(i, i)) w.push_back("(" + Cc.at(i) + "," + Cc.at(i) + ") missing");
      for (const auto& [i, j] : L2C.pairs()) {
        if (w.size() >= 8) break;
        if (!L2C.contains(j, i))
          w.push_back("(" + Cc.at(i) + "," + Cc.at(j) + ") in L2 without its transpose");
        for (int k : L2C.image(j)) {
          if (w.size() >= 8) break;
          if (!L2C.contains(i, k))
            w.push_back("(" + Cc.at(i) + "," + Cc.at(j) + ") and (" + Cc.at(j) + "," + Cc.at(k) +
                        ") in L2 without (" + Cc.at(i) + "," + Cc.at(k) + ")");
        }
      }
    }
    out.report.add("A.7", ok, std::move(w));
  }
  // Unit classes: L2 cut down to the image of L1.
  std::vector<int> units;  // G indices, ascending
  for (const auto& [s, u] : out.derived.L1.pairs()) units.push_back(u);
  std::vector<int> uPos(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < units.size(); ++k) uPos[static_cast<std::size_t>(units[k])] = static_cast<int>(k);
  UnionFind uf(static_cast<int>(units.size()));
  auto inE = [&](int gu, int gv) {
    return uPos[static_cast<std::size_t>(gu)] >= 0 && uPos[static_cast<std::size_t>(gv)] >= 0 &&
           out.derived.L2.contains(gu, gv);
  };
  for (int u : units)
    for (int v : units)
      if (inE(u, v)) uf.unite(uPos[static_cast<std::size_t>(u)], uPos[static_cast<std::size_t>(v)]);
  std::vector<int> classOfUnit(units.size(), -1);
  {
    std::vector<int> rootCls(units.size(), -1);
    for (std::size_t k = 0; k < units.size(); ++k) {
      int r = uf.find(static_cast<int>(k));
      if (rootCls[static_cast<std::size_t>(r)] == -1) {
        rootCls[static_cast<std::size_t>(r)] = static_cast<int>(out.M.size());
        out.M.emplace_back();
      }
      classOfUnit[k] = rootCls[static_cast<std::size_t>(r)];
      out.M[static_cast<std::size_t>(classOfUnit[k])].push_back(G.at(units[k]));
    }
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    for (int u : units)
      if (!inE(u, u)) {
        ok = false;
        if (w.size() < 8) w.push_back("unit " + G.at(u) + " not related to itself");
      }
    for (std::size_t a = 0; a < units.size() && w.size() < 8; ++a)
      for (std::size_t b = 0; b < units.size() && w.size() < 8; ++b)
        if (classOfUnit[a] == classOfUnit[b] && !inE(units[a], units[b])) {
          ok = false;
          w.push_back("units " + G.at(units[a]) + " and " + G.at(units[b]) +
                      " are connected but not directly related");
        }
    out.report.add("A.8", ok, std::move(w));
  }
  std::vector<std::string> labels;
  labels.reserve(out.M.size());
  for (const auto& klass : out.M) labels.push_back(klass.front());
  Carrier Mc(labels);
  // S pairs from L3 triples with a unit on the left, T with one on the right.
  std::vector<std::pair<int, int>> sp, tp;
  for (const auto& [p, g] : out.derived.L3.pairs()) {
    (void)g;
    int a = p / n, b = p % n;
    if (uPos[static_cast<std::size_t>(a)] >= 0 && cOf[static_cast<std::size_t>(b)] >= 0)
      sp.emplace_back(cOf[static_cast<std::size_t>(b)], classOfUnit[static_cast<std::size_t>(uPos[static_cast<std::size_t>(a)])]);
    if (uPos[static_cast<std::size_t>(b)] >= 0 && cOf[static_cast<std::size_t>(a)] >= 0)
      tp.emplace_back(cOf[static_cast<std::size_t>(a)], classOfUnit[static_cast<std::size_t>(uPos[static_cast<std::size_t>(b)])]);
  }
  out.S = Rel(Cc, Mc, std::move(sp));
  out.T = Rel(Cc, Mc, std::move(tp));
  {
    Rel named = finrel::name_of_rel(L2C, budget);
    Rel lhs = finrel::compose(named, finrel::product(out.S, out.S, budget), budget);
    Rel deltaM = finrel::name_of_rel(finrel::identity(Mc), budget);
    out.report.add("A.9 diagonal", lhs == deltaM, detail::rel_difference_witnesses(lhs, deltaM));
  }
  {
    bool ok = true;
    std::vector<std::string> w;
    std::vector<char> hitM(static_cast<std::size_t>(Mc.size()), 0);
    for (int i = 0; i < Cc.size(); ++i) {
      auto img = out.S.image(i);
      for (int k : img) hitM[static_cast<std::size_t>(k)] = 1;
      if (img.empty()) {
        ok = false;
        if (w.size() < 8) w.push_back("S undefined on " + Cc.at(i));
      } else if (img.size() > 1) {
        ok = false;
        if (w.size() < 8)
          w.push_back("S(" + Cc.at(i) + ") contains both [" + Mc.at(img[0]) + "] and [" +
                      Mc.at(img[1]) + "]");
      }
    }
    for (int k = 0; k < Mc.size(); ++k)
      if (!hitM[static_cast<std::size_t>(k)]) {
        ok = false;
        if (w.size() < 8) w.push_back("class [" + Mc.at(k) + "] not in the image of S");
      }
    out.report.add("A.9 source-map", ok, std::move(w));
  }
  {
    std::vector<std::pair<int, int>> ip;
    for (int i = 0; i < Cc.size(); ++i)
      ip.emplace_back(i, cOf[static_cast<std::size_t>(c.I[static_cast<std::size_t>(G.index(Cc.at(i)))])]);
    Rel gIC(Cc, Cc, std::move(ip));
    Rel rhs = finrel::compose(gIC, out.S, budget);
    out.report.add("A.9 inversion-compatible", out.T == rhs,
                   detail::rel_difference_witnesses(out.T, rhs));
  }
  return out;
}

frobenius::Groupoid reduce_to_groupoid(const SetCandidate& c, const Budget& budget) {
  RegularityData reg = check_regularity(c, budget);
  if (!reg.report.verdict())
    throw PreconditionError("reduce_to_groupoid: candidate is not regular", reg.report);
  const Carrier& G = c.G;
  const int n = G.size();
  Carrier Cc(reg.C);
  const int cn = Cc.size();
  std::vector<int> cOf(static_cast<std::size_t>(n), -1);
  for (int i = 0; i < cn; ++i) cOf[static_cast<std::size_t>(G.index(Cc.at(i)))] = i;
  UnionFind uf(cn);
  for (const auto& [x, y] : reg.derived.L2.pairs())
    uf.unite(cOf[static_cast<std::size_t>(x)], cOf[static_cast<std::size_t>(y)]);
  std::vector<int> cls(static_cast<std::size_t>(cn), -1);
  std::vector<std::string> arrowLabels;
  std::vector<int> reps;  // least member per arrow class, as C index
  {
    std::vector<int> rootCls(static_cast<std::size_t>(cn), -1);
    for (int i = 0; i < cn; ++i) {
      int r = uf.find(i);
      if (rootCls[static_cast<std::size_t>(r)] == -1) {
        rootCls[static_cast<std::size_t>(r)] = static_cast<int>(arrowLabels.size());
        arrowLabels.push_back(Cc.at(i));
        reps.push_back(i);
      }
      cls[static_cast<std::size_t>(i)] = rootCls[static_cast<std::size_t>(r)];
    }
  }
  Carrier G1(arrowLabels);
  std::vector<std::string> objLabels;
  objLabels.reserve(reg.M.size());
  for (const auto& klass : reg.M) objLabels.push_back(klass.front());
  Carrier G0(objLabels);
  std::vector<int> e(static_cast<std::size_t>(G0.size()), -1);
  for (int k = 0; k < G0.size(); ++k)
    e[static_cast<std::size_t>(k)] = cls[static_cast<std::size_t>(cOf[static_cast<std::size_t>(G.index(reg.M[static_cast<std::size_t>(k)].front()))])];
  std::vector<int> t(static_cast<std::size_t>(G1.size()), -1), s(static_cast<std::size_t>(G1.size()), -1);
  for (const auto& [ci, k] : reg.S.pairs()) t[static_cast<std::size_t>(cls[static_cast<std::size_t>(ci)])] = k;
  for (const auto& [ci, k] : reg.T.pairs()) s[static_cast<std::size_t>(cls[static_cast<std::size_t>(ci)])] = k;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 0 || t[i] < 0)
      throw std::logic_error("reduce_to_groupoid: arrow class " + G1.at(static_cast<int>(i)) +
                             " has no source or target");
  std::vector<int> inv(static_cast<std::size_t>(G1.size()));
  for (int a = 0; a < G1.size(); ++a) {
    int gi = G.index(Cc.at(reps[static_cast<std::size_t>(a)]));
    inv[static_cast<std::size_t>(a)] = cls[static_cast<std::size_t>(cOf[static_cast<std::size_t>(c.I[static_cast<std::size_t>(gi)])])];
  }
  std::map<std::pair<int, int>, int> cells;
  for (const auto& [p, g] : reg.derived.L3.pairs()) {
    int a = p / n, b = p % n;
    if (cOf[static_cast<std::size_t>(a)] < 0 || cOf[static_cast<std::size_t>(b)] < 0 ||
        cOf[static_cast<std::size_t>(g)] < 0)
      continue;
    int ca = cls[static_cast<std::size_t>(cOf[static_cast<std::size_t>(a)])];
    int cb = cls[static_cast<std::size_t>(cOf[static_cast<std::size_t>(b)])];
    int cg = cls[static_cast<std::size_t>(cOf[static_cast<std::size_t>(g)])];
    auto [it, fresh] = cells.try_emplace({ca, cb}, cg);
    if (!fresh && it->second != cg)
      throw std::logic_error("reduce_to_groupoid: projected multiplication not single valued on (" +
                             G1.at(ca) + "," + G1.at(cb) + "): " + G1.at(it->second) + " and " +
                             G1.at(cg));
  }
  std::vector<std::tuple<int, int, int>> mu;
  mu.reserve(cells.size());
  for (const auto& [key, v] : cells) mu.emplace_back(key.first, key.second, v);
  return frobenius::Groupoid{G0, G1, std::move(s), std::move(t), std::move(e), std::move(inv),
                             std::move(mu)};
}

Report check_morphism(const Rel& F, const SetCandidate& A, const SetCandidate& B, RsgMode mode,
                      const Budget& budget) {
  if (F.src() != A.G || F.dst() != B.G)
    throw std::invalid_argument("check_morphism: relation endpoints do not match the candidates");
  Report pa = check_core_axioms(A, budget);
  if (!pa.verdict())
    throw PreconditionError("check_morphism: source candidate fails the core axioms", pa);
  Report pb = check_core_axioms(B, budget);
  if (!pb.verdict())
    throw PreconditionError("check_morphism: target candidate fails the core axioms", pb);
  Rel LA = ternary_rel(A, budget), LB = ternary_rel(B, budget);
  Rel gIA = graph_of_I(A), gIB = graph_of_I(B);
  auto diff = [](const Rel& a, const Rel& b) { return detail::rel_difference_witnesses(a, b); };
  Report rep;
  {
    Rel lhs = finrel::compose(gIA, F, budget), rhs = finrel::compose(F, gIB, budget);
    rep.add("commutes-with-I", lhs == rhs, diff(lhs, rhs));
  }
  {
    Rel lhs = finrel::compose(finrel::product(F, F, budget), LB, budget);
    Rel rhs = finrel::compose(LA, F, budget);
    rep.add("commutes-with-L", lhs == rhs, diff(lhs, rhs));
  }
  if (mode == RsgMode::equivalence) {
    Rel Fd = finrel::dagger(F);
    {
      Rel lhs = finrel::compose(gIB, Fd, budget), rhs = finrel::compose(Fd, gIA, budget);
      rep.add("dagger commutes-with-I", lhs == rhs, diff(lhs, rhs));
    }
    {
      Rel lhs = finrel::compose(finrel::product(Fd, Fd, budget), LA, budget);
      Rel rhs = finrel::compose(LB, Fd, budget);
      rep.add("dagger commutes-with-L", lhs == rhs, diff(lhs, rhs));
    }
    Rel l2a = derive_impl(A, budget).L2, l2b = derive_impl(B, budget).L2;
    {
      Rel r = finrel::compose(F, Fd, budget);
      rep.add("composite source", r == l2a, diff(r, l2a));
    }
    {
      Rel r = finrel::compose(Fd, F, budget);
      rep.add("composite target", r == l2b, diff(r, l2b));
    }
  }
  return rep;
}

SetCandidate from_groupoid(const frobenius::Groupoid& g, const Budget& budget) {
  Report gr = frobenius::check_groupoid_axioms(g, budget);
  if (!gr.verdict()) throw PreconditionError("from_groupoid: groupoid axioms fail", gr);
  std::vector<std::array<int, 3>> L;
  L.reserve(g.mu.size());
  for (const auto& [a, b, h] : g.mu) L.push_back({a, b, g.inv[static_cast<std::size_t>(h)]});
  return make_set_candidate(g.G1, std::move(L), g.inv);
}

SetCandidate cyclic_counterexample(int k) {
  if (k < 3) throw std::invalid_argument("cyclic_counterexample: k must be at least 3");
  std::vector<std::string> atoms;
  atoms.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) atoms.push_back(std::to_string(i));
  Carrier G(atoms);
  std::vector<std::array<int, 3>> L;
  L.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) L.push_back({a, b, ((-a - b - 1) % k + k) % k});
  std::vector<int> I(static_cast<std::size_t>(k));
  for (int a = 0; a < k; ++a) I[static_cast<std::size_t>(a)] = (k - a) % k;
  return make_set_candidate(G, std::move(L), std::move(I));
}

SetCandidate parity_example(int modulus) {
  if (modulus < 2 || modulus % 2 != 0)
    throw std::invalid_argument("parity_example: modulus must be even and at least 2");
  std::vector<std::string> atoms;
  atoms.reserve(static_cast<std::size_t>(modulus));
  for (int i = 0; i < modulus; ++i) atoms.push_back(std::to_string(i));
  Carrier G(atoms);
  std::vector<std::array<int, 3>> L;
  for (int a = 0; a < modulus; ++a)
    for (int b = 0; b < modulus; ++b)
      for (int q = 0; q < modulus; ++q)
        if ((a + b + q) % 2 == 1) L.push_back({a, b, q});
  std::vector<int> I(static_cast<std::size_t>(modulus));
  for (int a = 0; a < modulus; ++a) I[static_cast<std::size_t>(a)] = (modulus - a) % modulus;
  return make_set_candidate(G, std::move(L), std::move(I));
}

SetCandidate power(const SetCandidate& c, int n, const Budget& budget) {
  if (n < 1) throw std::invalid_argument("power: exponent must be at least 1");
  SetCandidate acc = c;
  const int base = c.G.size();
  for (int step = 1; step < n; ++step) {
    Carrier nc = Carrier::product(acc.G, c.G, budget);
    charge(budget, static_cast<std::uint64_t>(acc.L.size()) * c.L.size(), "power triple product");
    std::vector<std::array<int, 3>> L;
    L.reserve(acc.L.size() * c.L.size());
    for (const auto& t : acc.L)
      for (const auto& u : c.L)
        L.push_back({t[0] * base + u[0], t[1] * base + u[1], t[2] * base + u[2]});
    std::vector<int> I(static_cast<std::size_t>(nc.size()));
    for (int i = 0; i < acc.G.size(); ++i)
      for (int j = 0; j < base; ++j)
        I[static_cast<std::size_t>(i) * static_cast<std::size_t>(base) + static_cast<std::size_t>(j)] =
            acc.I[static_cast<std::size_t>(i)] * base + c.I[static_cast<std::size_t>(j)];
    acc = make_set_candidate(nc, std::move(L), std::move(I));
  }
  return acc;
}

SetCandidate opposite(const SetCandidate& c) {
  std::vector<std::array<int, 3>> L;
  L.reserve(c.L.size());
  for (const auto& t : c.L) L.push_back({t[1], t[0], t[2]});
  return make_set_candidate(c.G, std::move(L), c.I);
}

SetCandidate invariant_triple(const Carrier& G, const std::vector<std::string>& subset,
                              const std::vector<std::pair<std::string, std::string>>& phi) {
  std::vector<int> I = map_from_atom_pairs(G, phi, "invariant_triple");
  std::vector<int> s;
  s.reserve(subset.size());
  for (const auto& a : subset) s.push_back(G.index(a));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int x : s)
    if (!std::binary_search(s.begin(), s.end(), I[static_cast<std::size_t>(x)]))
      throw std::invalid_argument("invariant_triple: subset not closed under I at " + G.at(x));
  std::vector<std::array<int, 3>> L;
  L.reserve(s.size() * s.size() * s.size());
  for (int a : s)
    for (int b : s)
      for (int q : s) L.push_back({a, b, q});
  return make_set_candidate(G, std::move(L), std::move(I));
}

// ---------------------------------------------------------------------
// Linear mode.

namespace {

std::string fmt_vec(const std::vector<Rat>& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += format_rat(v[i]);
  }
  return out + ")";
}

std::vector<std::string> subspace_diff_witnesses(const Subspace& a, const Subspace& b) {
  std::vector<std::string> w;
  if (a == b) return w;
  w.push_back("left dimension " + std::to_string(a.dim()) + ", right dimension " +
              std::to_string(b.dim()));
  for (int i = 0; i < a.dim(); ++i)
    if (!b.contains_vector(a.basis().row(i))) {
      w.push_back("vector " + fmt_vec(a.basis().row(i)) + " only on the left");
      break;
    }
  for (int i = 0; i < b.dim(); ++i)
    if (!a.contains_vector(b.basis().row(i))) {
      w.push_back("vector " + fmt_vec(b.basis().row(i)) + " only on the right");
      break;
    }
  return w;
}

// {v in Q^amb | the cols-window of v lies in s}.
Subspace constraint_subspace(int amb, const std::vector<int>& cols, const Subspace& s) {
  Mat ann = linalg::kernel(s.basis());  // functionals vanishing on s
  Mat rows(ann.rows(), amb);
  for (int r = 0; r < ann.rows(); ++r)
    for (std::size_t j = 0; j < cols.size(); ++j)
      rows.at(r, cols[j]) = ann.at(r, static_cast<int>(j));
  return Subspace(amb, linalg::kernel(rows));
}

Subspace select_cols_span(const Subspace& s, const std::vector<int>& cols) {
  Mat b(s.dim(), static_cast<int>(cols.size()));
  for (int i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) b.at(i, static_cast<int>(j)) = s.basis().at(i, cols[j]);
  return Subspace(static_cast<int>(cols.size()), b);
}

std::vector<int> col_range(int from, int to) {
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(to - from));
  for (int i = from; i < to; ++i) v.push_back(i);
  return v;
}

// {(x,z) | exists y: (x,y) in R, (y,z) in S} for plain coordinate spaces.
Subspace comp_rel(const Subspace& R, int p, int q, const Subspace& S, int r) {
  int amb = p + q + r;
  Subspace z = Subspace::intersect(constraint_subspace(amb, col_range(0, p + q), R),
                                   constraint_subspace(amb, col_range(p, amb), S));
  std::vector<int> keep = col_range(0, p);
  for (int i = p + q; i < amb; ++i) keep.push_back(i);
  return select_cols_span(z, keep);
}

Subspace diff_space(const Subspace& R, int m) {
  Mat b(R.dim(), m);
  for (int i = 0; i < R.dim(); ++i)
    for (int j = 0; j < m; ++j) b.at(i, j) = R.basis().at(i, m + j) - R.basis().at(i, j);
  return Subspace(m, b);
}

Subspace swap_blocks(const Subspace& R, int m) {
  Mat b(R.dim(), 2 * m);
  for (int i = 0; i < R.dim(); ++i)
    for (int j = 0; j < m; ++j) {
      b.at(i, j) = R.basis().at(i, m + j);
      b.at(i, m + j) = R.basis().at(i, j);
    }
  return Subspace(2 * m, b);
}

Subspace diag_embed(const Subspace& W) {
  int m = W.ambient();
  Mat b(W.dim(), 2 * m);
  for (int i = 0; i < W.dim(); ++i)
    for (int j = 0; j < m; ++j) b.at(i, j) = b.at(i, m + j) = W.basis().at(i, j);
  return Subspace(2 * m, b);
}

Subspace prod_embed(const Subspace& A, const Subspace& B) {
  int m = A.ambient(), k = B.ambient();
  Mat b(A.dim() + B.dim(), m + k);
  for (int i = 0; i < A.dim(); ++i)
    for (int j = 0; j < m; ++j) b.at(i, j) = A.basis().at(i, j);
  for (int i = 0; i < B.dim(); ++i)
    for (int j = 0; j < k; ++j) b.at(A.dim() + i, m + j) = B.basis().at(i, j);
  return Subspace(m + k, b);
}

std::vector<Rat> apply_map_row(const Mat& I, const std::vector<Rat>& v) {
  std::vector<Rat> out(static_cast<std::size_t>(I.rows()));
  for (int i = 0; i < I.rows(); ++i) {
    Rat acc = 0;
    for (int j = 0; j < I.cols(); ++j) acc += I.at(i, j) * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

void validate_linear_shapes(const LinearCandidate& c) {
  const int n = c.G.dim;
  if (c.L.ambient() != 3 * n)
    throw std::invalid_argument("linear candidate: L must live in three copies of the carrier");
  if (c.I.rows() != n || c.I.cols() != n)
    throw std::invalid_argument("linear candidate: I must be square of the carrier dimension");
}

SympSpace point_space() { return SympSpace::standard(0); }

LinearDerived derive_linear_impl(const LinearCandidate& c) {
  const int n = c.G.dim;
  SympSpace GG = SympSpace::sum(c.G, c.G);
  LinRel L_rel{GG, c.G, c.L};
  LinRel gI = LinRel::graph_of(c.G, c.G, c.I);
  LinearDerived d;
  d.L3 = symplin::compose_linrel(L_rel, gI);
  d.L_I = LinRel{point_space(), GG, Subspace(2 * n, Mat::hstack(Mat::identity(n), c.I.transpose()))};
  LinRel l1rel = symplin::compose_linrel(d.L_I, d.L3);
  d.L1 = l1rel.graph;
  d.L2 = symplin::compose_linrel(symplin::product_linrel(l1rel, LinRel::identity(c.G)), d.L3);
  d.C = d.L2.graph.project_block(n, n);
  d.L_lagrangian = symplin::classify_subspace(SympSpace::sum(GG, c.G), c.L).lagrangian;
  d.graph_I_lagrangian = symplin::classify_subspace(GG, gI.graph).lagrangian;
  d.L1_lagrangian = symplin::classify_subspace(c.G, d.L1).lagrangian;
  d.L2_lagrangian = symplin::is_lagrangian_rel(d.L2);
  d.L3_lagrangian = symplin::is_lagrangian_rel(d.L3);
  return d;
}

}  // namespace

LinearCandidate make_linear_candidate(const SympSpace& G, const Subspace& L, const Mat& I) {
  LinearCandidate c{G, L, I};
  validate_linear_shapes(c);
  if (I * I != Mat::identity(G.dim))
    throw std::invalid_argument("make_linear_candidate: I is not an involution");
  if (I.transpose() * G.omega * I != G.omega.scaled(Rat(-1)))
    throw std::invalid_argument("make_linear_candidate: I is not antisymplectic");
  return c;
}

LinearDerived derive_linear(const LinearCandidate& c) {
  validate_linear_shapes(c);
  if (c.I * c.I != Mat::identity(c.G.dim))
    throw std::invalid_argument("derive_linear: I is not an involution");
  return derive_linear_impl(c);
}

Report check_core_axioms_linear(const LinearCandidate& c) {
  validate_linear_shapes(c);
  const int n = c.G.dim;
  Report rep;
  LinearDerived d = derive_linear_impl(c);
  LinRel idG = LinRel::identity(c.G);
  LinRel l1rel{point_space(), c.G, d.L1};
  LinRel gI = LinRel::graph_of(c.G, c.G, c.I);
  auto diff = [](const Subspace& a, const Subspace& b) { return subspace_diff_witnesses(a, b); };
  {
    Mat b = c.L.basis();
    Mat sh(b.rows(), 3 * n);
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < 3 * n; ++j) sh.at(i, j) = b.at(i, (j + n) % (3 * n));
    Subspace shifted(3 * n, sh);
    rep.add("A.1", shifted == c.L, diff(shifted, c.L));
  }
  {
    bool ok = c.I * c.I == Mat::identity(n);
    rep.add("A.2", ok, ok ? std::vector<std::string>{} : std::vector<std::string>{"I squared is not the identity"});
  }
  {
    Mat b = c.L.basis();
    Mat tr(b.rows(), 3 * n);
    for (int i = 0; i < b.rows(); ++i) {
      const std::vector<Rat> v = b.row(i);
      std::vector<Rat> x(v.begin(), v.begin() + n);
      std::vector<Rat> y(v.begin() + n, v.begin() + 2 * n);
      std::vector<Rat> z(v.begin() + 2 * n, v.end());
      auto iy = apply_map_row(c.I, y), ix = apply_map_row(c.I, x), iz = apply_map_row(c.I, z);
      for (int j = 0; j < n; ++j) {
        tr.at(i, j) = iy[static_cast<std::size_t>(j)];
        tr.at(i, n + j) = ix[static_cast<std::size_t>(j)];
        tr.at(i, 2 * n + j) = iz[static_cast<std::size_t>(j)];
      }
    }
    Subspace tau(3 * n, tr);
    rep.add("A.3", tau == c.L, diff(tau, c.L));
  }
  {
    LinRel lhs = symplin::compose_linrel(symplin::product_linrel(d.L3, idG), d.L3);
    LinRel rhs = symplin::compose_linrel(symplin::product_linrel(idG, d.L3), d.L3);
    rep.add("A.4", lhs.graph == rhs.graph, diff(lhs.graph, rhs.graph));
  }
  {
    LinRel lhs = symplin::compose_linrel(symplin::product_linrel(l1rel, l1rel), d.L3);
    rep.add("A.5", lhs.graph == d.L1, diff(lhs.graph, d.L1));
  }
  {
    LinRel right = symplin::compose_linrel(symplin::product_linrel(idG, l1rel), d.L3);
    rep.add("A.6 unitors", right.graph == d.L2.graph, diff(d.L2.graph, right.graph));
  }
  {
    LinRel lhs = symplin::compose_linrel(l1rel, d.L2);
    rep.add("A.6 unit-invariance", lhs.graph == d.L1, diff(lhs.graph, d.L1));
  }
  {
    LinRel lhs = symplin::compose_linrel(d.L3, d.L2);
    rep.add("A.6 mul-invariance", lhs.graph == d.L3.graph, diff(lhs.graph, d.L3.graph));
  }
  {
    LinRel lhs = symplin::compose_linrel(symplin::product_linrel(d.L2, d.L2), d.L3);
    rep.add("A.6 mul-invariance-pair", lhs.graph == d.L3.graph, diff(lhs.graph, d.L3.graph));
  }
  {
    LinRel lhs = symplin::compose_linrel(d.L2, gI), rhs = symplin::compose_linrel(gI, d.L2);
    rep.add("A.6 inversion", lhs.graph == rhs.graph, diff(lhs.graph, rhs.graph));
  }
  {
    Subspace dg = swap_blocks(d.L2.graph, n);
    rep.add("A.6 transpose", dg == d.L2.graph, diff(dg, d.L2.graph));
  }
  {
    LinRel sq = symplin::compose_linrel(d.L2, d.L2);
    rep.add("A.6 idempotent", sq.graph == d.L2.graph, diff(sq.graph, d.L2.graph));
  }
  return rep;
}

LinearRegularityData check_regularity_linear(const LinearCandidate& c) {
  Report core = check_core_axioms_linear(c);
  if (!core.verdict())
    throw PreconditionError("check_regularity_linear: candidate fails the core axioms", core);
  const int n = c.G.dim;
  LinearRegularityData out;
  out.derived = derive_linear_impl(c);
  out.C = out.derived.C;
  const Subspace& E = out.derived.L2.graph;
  {
    auto cl = symplin::classify_subspace(c.G, out.C);
    out.report.add("A.7 coisotropic", cl.coisotropic,
                   cl.coisotropic ? std::vector<std::string>{}
                                  : std::vector<std::string>{"C of dimension " + std::to_string(out.C.dim()) +
                                                             " does not contain its orthogonal"});
  }
  {
    std::vector<std::string> w;
    if (!E.contains(diag_embed(out.C))) w.push_back("diagonal of C not inside L2");
    if (!prod_embed(out.C, out.C).contains(E)) w.push_back("L2 leaves C x C");
    if (swap_blocks(E, n) != E) w.push_back("L2 is not symmetric");
    if (comp_rel(E, n, n, E, n) != E) w.push_back("L2 . L2 differs from L2");
    out.report.add_witnessed("A.7 equivalence", std::move(w));
  }
  Subspace EM = Subspace::intersect(E, prod_embed(out.derived.L1, out.derived.L1));
  Subspace DM = diff_space(EM, n);
  {
    Subspace model = Subspace::sum(diag_embed(out.derived.L1),
                                   prod_embed(DM, Subspace::zero(n)));
    bool ok = out.derived.L1.contains(DM) && EM == model;
    out.object_dim = out.derived.L1.dim() - DM.dim();
    std::vector<std::string> w;
    if (!ok)
      w.push_back("L2 cut to L1 x L1 is not the difference relation of a subspace of L1");
    out.report.add("A.8", ok, std::move(w));
  }
  const int m = out.object_dim;
  // Quotient coordinates on L1: complement of DM inside L1.
  Mat basisAll = DM.basis();
  for (int i = 0; i < out.derived.L1.dim(); ++i) {
    Mat cand = Mat::vstack(basisAll, Mat::from_rows({out.derived.L1.basis().row(i)}));
    if (linalg::rank(cand) > linalg::rank(basisAll)) basisAll = cand;
  }
  // Rows: DM basis then the chosen complement; pi takes the complement coefficients.
  auto quotient_coords = [&](const std::vector<Rat>& l) {
    auto sol = linalg::solve(basisAll.transpose(), l);
    if (!sol) throw std::logic_error("check_regularity_linear: vector outside L1");
    return std::vector<Rat>(sol->begin() + DM.dim(), sol->end());
  };
  auto graph_through_pi = [&](const Subspace& Z, int unitBlock) {
    // Z inside Q^{3n}; rows map to (middle other block, pi(unit block)).
    Mat rows(Z.dim(), n + m);
    for (int i = 0; i < Z.dim(); ++i) {
      auto v = Z.basis().row(i);
      std::vector<Rat> l(v.begin() + unitBlock * n, v.begin() + (unitBlock + 1) * n);
      std::vector<Rat> other(v.begin() + (1 - unitBlock) * n, v.begin() + (2 - unitBlock) * n);
      auto q = quotient_coords(l);
      for (int j = 0; j < n; ++j) rows.at(i, j) = other[static_cast<std::size_t>(j)];
      for (int j = 0; j < m; ++j) rows.at(i, n + j) = q[static_cast<std::size_t>(j)];
    }
    return Subspace(n + m, rows);
  };
  Subspace zS = Subspace::intersect(out.derived.L3.graph,
                                    constraint_subspace(3 * n, col_range(0, n), out.derived.L1));
  Subspace zT = Subspace::intersect(out.derived.L3.graph,
                                    constraint_subspace(3 * n, col_range(n, 2 * n), out.derived.L1));
  out.S = graph_through_pi(zS, 0);
  out.T = graph_through_pi(zT, 1);
  {
    // (S x S) . L2 against the diagonal of the quotient.
    int amb = 2 * n + 2 * m;
    std::vector<int> sLeft = col_range(0, n), sRight = col_range(n, 2 * n);
    for (int j = 0; j < m; ++j) sLeft.push_back(2 * n + j);
    for (int j = 0; j < m; ++j) sRight.push_back(2 * n + m + j);
    Subspace z = Subspace::intersect(constraint_subspace(amb, col_range(0, 2 * n), E),
                                     Subspace::intersect(constraint_subspace(amb, sLeft, out.S),
                                                         constraint_subspace(amb, sRight, out.S)));
    Subspace W = select_cols_span(z, col_range(2 * n, amb));
    Subspace deltaM = diag_embed(Subspace::full(m));
    out.report.add("A.9 diagonal", W == deltaM, subspace_diff_witnesses(W, deltaM));
  }
  {
    std::vector<std::string> w;
    Subspace kernelPart = Subspace::intersect(
        out.S, constraint_subspace(n + m, col_range(0, n), Subspace::zero(n)));
    if (kernelPart.dim() != 0) w.push_back("S relates 0 to a nonzero class");
    if (select_cols_span(out.S, col_range(0, n)) != out.C) w.push_back("S is not total on C");
    if (select_cols_span(out.S, col_range(n, n + m)) != Subspace::full(m))
      w.push_back("S does not reach every class");
    out.report.add_witnessed("A.9 source-map", std::move(w));
  }
  {
    Subspace gI(2 * n, Mat::hstack(Mat::identity(n), c.I.transpose()));
    Subspace rhs = comp_rel(gI, n, n, out.S, m);
    out.report.add("A.9 inversion-compatible", out.T == rhs, subspace_diff_witnesses(out.T, rhs));
  }
  return out;
}

frobenius::Groupoid reduce_to_groupoid_linear(const LinearCandidate& c) {
  LinearRegularityData reg = check_regularity_linear(c);
  if (!reg.report.verdict())
    throw PreconditionError("reduce_to_groupoid_linear: candidate is not regular", reg.report);
  Subspace D = diff_space(reg.derived.L2.graph, c.G.dim);
  if (D != reg.C || reg.object_dim != 0)
    throw std::domain_error("reduce_to_groupoid_linear: the quotient C/L2 is a " +
                            std::to_string(reg.C.dim() - D.dim()) +
                            "-dimensional family, not a finite set");
  Carrier G0({"[M]"}), G1({"[C]"});
  return frobenius::Groupoid{G0, G1, {0}, {0}, {0}, {0}, {{0, 0, 0}}};
}

Report check_morphism_linear(const LinRel& F, const LinearCandidate& A, const LinearCandidate& B,
                             RsgMode mode) {
  if (F.src != A.G || F.dst != B.G)
    throw std::invalid_argument("check_morphism_linear: relation endpoints do not match the candidates");
  Report pa = check_core_axioms_linear(A);
  if (!pa.verdict())
    throw PreconditionError("check_morphism_linear: source candidate fails the core axioms", pa);
  Report pb = check_core_axioms_linear(B);
  if (!pb.verdict())
    throw PreconditionError("check_morphism_linear: target candidate fails the core axioms", pb);
  LinRel LA{SympSpace::sum(A.G, A.G), A.G, A.L};
  LinRel LB{SympSpace::sum(B.G, B.G), B.G, B.L};
  LinRel gIA = LinRel::graph_of(A.G, A.G, A.I), gIB = LinRel::graph_of(B.G, B.G, B.I);
  auto diff = [](const Subspace& a, const Subspace& b) { return subspace_diff_witnesses(a, b); };
  Report rep;
  {
    LinRel lhs = symplin::compose_linrel(gIA, F), rhs = symplin::compose_linrel(F, gIB);
    rep.add("commutes-with-I", lhs.graph == rhs.graph, diff(lhs.graph, rhs.graph));
  }
  {
    LinRel lhs = symplin::compose_linrel(symplin::product_linrel(F, F), LB);
    LinRel rhs = symplin::compose_linrel(LA, F);
    rep.add("commutes-with-L", lhs.graph == rhs.graph, diff(lhs.graph, rhs.graph));
  }
  if (mode == RsgMode::equivalence) {
    LinRel Fd = symplin::dagger(F);
    {
      LinRel lhs = symplin::compose_linrel(gIB, Fd), rhs = symplin::compose_linrel(Fd, gIA);
      rep.add("dagger commutes-with-I", lhs.graph == rhs.graph, diff(lhs.graph, rhs.graph));
    }
    {
      LinRel lhs = symplin::compose_linrel(symplin::product_linrel(Fd, Fd), LA);
      LinRel rhs = symplin::compose_linrel(LB, Fd);
      rep.add("dagger commutes-with-L", lhs.graph == rhs.graph, diff(lhs.graph, rhs.graph));
    }
    Subspace l2a = derive_linear_impl(A).L2.graph, l2b = derive_linear_impl(B).L2.graph;
    {
      LinRel r = symplin::compose_linrel(F, Fd);
      rep.add("composite source", r.graph == l2a, diff(r.graph, l2a));
    }
    {
      LinRel r = symplin::compose_linrel(Fd, F);
      rep.add("composite target", r.graph == l2b, diff(r.graph, l2b));
    }
  }
  return rep;
}

LinearCandidate lagrangian_triple(const SympSpace& G, const Subspace& L, const Mat& phi) {
  if (L.ambient() != G.dim)
    throw std::invalid_argument("lagrangian_triple: the subspace must live in the carrier");
  if (!symplin::classify_subspace(G, L).lagrangian)
    throw std::invalid_argument("lagrangian_triple: the subspace is not lagrangian");
  Mat mapped(L.dim(), G.dim);
  for (int i = 0; i < L.dim(); ++i) {
    auto v = apply_map_row(phi, L.basis().row(i));
    for (int j = 0; j < G.dim; ++j) mapped.at(i, j) = v[static_cast<std::size_t>(j)];
  }
  if (Subspace(G.dim, mapped) != L)
    throw std::invalid_argument("lagrangian_triple: the subspace is not invariant under the involution");
  Subspace cube = prod_embed(prod_embed(L, L), L);
  return make_linear_candidate(G, cube, phi);
}

LinearCandidate pair_linear(const SympSpace& V) {
  const int k = V.dim;
  SympSpace G = SympSpace::sum(V, SympSpace::conjugate(V));
  Mat b(3 * k, 6 * k);
  for (int i = 0; i < k; ++i) {
    b.at(i, i) = 1;              // x in slot one, first half
    b.at(i, 5 * k + i) = 1;      // x in slot three, second half
    b.at(k + i, k + i) = 1;      // y in slot one, second half
    b.at(k + i, 2 * k + i) = 1;  // y in slot two, first half
    b.at(2 * k + i, 3 * k + i) = 1;  // z in slot two, second half
    b.at(2 * k + i, 4 * k + i) = 1;  // z in slot three, first half
  }
  Mat I(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) I.at(i, k + i) = I.at(k + i, i) = 1;
  return make_linear_candidate(G, Subspace(6 * k, b), I);
}

}  // namespace relkit::relgpd
