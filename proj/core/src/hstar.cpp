#include "relkit/hstar.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "internal/multable.hpp"

namespace relkit::hstar {

namespace {

using detail::MulTable;

// b is a pseudoinverse of a when (ba)b = {b} and (ab)a = {a}.
bool pseudoinverse_of(const MulTable& t, int a, int b) {
  return detail::apply_left(t, t.at(b, a), b) == std::vector<int>{b} &&
         detail::apply_left(t, t.at(a, b), a) == std::vector<int>{a};
}

std::vector<std::uint64_t> pseudoinverse_masks(const MulTable& t) {
  std::vector<std::uint64_t> pinv(static_cast<std::size_t>(t.n), 0);
  for (int a = 0; a < t.n; ++a)
    for (int b = 0; b < t.n; ++b)
      if (pseudoinverse_of(t, a, b)) pinv[static_cast<std::size_t>(a)] |= 1ull << b;
  return pinv;
}

std::string show_mask(const finrel::Carrier& X, std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < X.size(); ++i)
    if (mask >> i & 1) {
      if (!first) out += ",";
      first = false;
      out += X.at(i);
    }
  return out + "}";
}

}  // namespace

HStarCandidate make_candidate(const finrel::Carrier& X, const finrel::Rel& m,
                              const Budget& budget) {
  if (m.src() != finrel::Carrier::product(X, X, budget) || m.dst() != X)
    throw std::invalid_argument("candidate operation must map X*X to X");
  return HStarCandidate{X, m};
}

std::vector<std::string> star_set(const HStarCandidate& c, const std::vector<std::string>& A,
                                  const Budget&) {
  const MulTable t = detail::make_table(c.X.size(), c.m);
  std::vector<int> a_idx;
  for (const auto& atom : A) a_idx.push_back(c.X.index(atom));
  std::vector<std::string> out;
  for (int b = 0; b < c.X.size(); ++b) {
    bool all = true;
    for (int a : a_idx)
      if (!pseudoinverse_of(t, a, b)) {
        all = false;
        break;
      }
    if (all) out.push_back(c.X.at(b));
  }
  return out;
}

HStarReport check_hstar_axioms(const HStarCandidate& c, const HStarOptions& opt) {
  HStarReport out;
  const int n = c.X.size();
  if (c.m.dst() != c.X || c.m.src().size() != n * n)
    throw std::invalid_argument("candidate operation must map X*X to X");
  const MulTable t = detail::make_table(n, c.m);

  {
    auto mw = detail::single_valued_surjective_witnesses(t, c.X);
    bool ok = mw.empty();
    out.report.add("(M)", ok, std::move(mw));
    if (opt.fail_fast && !ok) return out;
  }
  {
    auto aw = detail::associativity_witnesses(t, c.X);
    bool ok = aw.empty();
    out.report.add("(A)", ok, std::move(aw));
    if (opt.fail_fast && !ok) return out;
  }

  // (H) for every subset A, with the involution sending A to the union
  // of the pseudoinverse sets of its elements.
  if (n > 62) charge(opt.budget, ~0ull, "(H) subset sweep");
  charge(opt.budget, 1ull << n, "(H) subset sweep");
  const auto pinv = pseudoinverse_masks(t);

  // Element masks quantifying the four sides of the two equations at a
  // fixed pair (beta, alpha).
  const std::size_t nn = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
  std::vector<std::uint64_t> l1(nn, 0), r1(nn, 0), l2(nn, 0), r2(nn, 0);
  for (int beta = 0; beta < n; ++beta)
    for (int alpha = 0; alpha < n; ++alpha) {
      std::size_t ix = static_cast<std::size_t>(beta) * static_cast<std::size_t>(n) +
                       static_cast<std::size_t>(alpha);
      for (int a = 0; a < n; ++a) {
        const auto& ba = t.at(beta, a);
        if (std::binary_search(ba.begin(), ba.end(), alpha)) l1[ix] |= 1ull << a;
        const auto& aa = t.at(alpha, a);
        if (std::binary_search(aa.begin(), aa.end(), beta)) r1[ix] |= 1ull << a;
        const auto& ab = t.at(a, beta);
        if (std::binary_search(ab.begin(), ab.end(), alpha)) l2[ix] |= 1ull << a;
        const auto& ax = t.at(a, alpha);
        if (std::binary_search(ax.begin(), ax.end(), beta)) r2[ix] |= 1ull << a;
      }
    }

  std::vector<std::string> hw;
  for (std::uint64_t subset = 0; subset < (1ull << n); ++subset) {
    std::uint64_t star = 0;
    for (int a = 0; a < n; ++a)
      if (subset >> a & 1) star |= pinv[static_cast<std::size_t>(a)];
    bool bad = false;
    for (std::size_t ix = 0; ix < nn && !bad; ++ix) {
      if (((l1[ix] & star) != 0) != ((r1[ix] & subset) != 0)) {
        if (hw.size() < 8)
          hw.push_back("A=" + show_mask(c.X, subset) + ": first equation differs at (" +
                       c.X.at(static_cast<int>(ix) / n) + "," + c.X.at(static_cast<int>(ix) % n) + ")");
        bad = true;
      } else if (((l2[ix] & star) != 0) != ((r2[ix] & subset) != 0)) {
        if (hw.size() < 8)
          hw.push_back("A=" + show_mask(c.X, subset) + ": second equation differs at (" +
                       c.X.at(static_cast<int>(ix) / n) + "," + c.X.at(static_cast<int>(ix) % n) + ")");
        bad = true;
      }
    }
    // Observation: A inside star_set(star_set(A)), both in the literal
    // common pseudoinverse reading.
    std::uint64_t common = ~0ull;
    for (int a = 0; a < n; ++a)
      if (subset >> a & 1) common &= pinv[static_cast<std::size_t>(a)];
    if (n < 64) common &= (1ull << n) - 1;
    std::uint64_t twice = ~0ull;
    for (int b = 0; b < n; ++b)
      if (common >> b & 1) twice &= pinv[static_cast<std::size_t>(b)];
    if (n < 64) twice &= (1ull << n) - 1;
    if ((subset & ~twice) != 0) {
      out.star_double_containment = false;
      if (out.star_observation_failures.size() < 8)
        out.star_observation_failures.push_back(show_mask(c.X, subset));
    }
  }
  out.report.add_witnessed("(H)", std::move(hw));
  return out;
}

std::optional<int> Semigroupoid::mu_at(int g, int f) const {
  auto it = std::lower_bound(mu.begin(), mu.end(), std::make_tuple(g, f, -1));
  if (it != mu.end() && std::get<0>(*it) == g && std::get<1>(*it) == f) return std::get<2>(*it);
  return std::nullopt;
}

namespace {

void validate_sgpd(const Semigroupoid& s) {
  std::size_t n1 = static_cast<std::size_t>(s.G1.size());
  if (s.s.size() != n1 || s.t.size() != n1)
    throw std::invalid_argument("semigroupoid: table sizes do not match carriers");
  for (int f = 0; f < s.G1.size(); ++f)
    if (s.s[static_cast<std::size_t>(f)] < 0 || s.s[static_cast<std::size_t>(f)] >= s.G0.size() ||
        s.t[static_cast<std::size_t>(f)] < 0 || s.t[static_cast<std::size_t>(f)] >= s.G0.size())
      throw std::invalid_argument("semigroupoid: index out of range");
  for (std::size_t i = 0; i + 1 < s.mu.size(); ++i)
    if (std::get<0>(s.mu[i]) == std::get<0>(s.mu[i + 1]) &&
        std::get<1>(s.mu[i]) == std::get<1>(s.mu[i + 1]))
      throw std::invalid_argument("semigroupoid: composition is not a partial map");
  for (const auto& [a, b, h] : s.mu)
    if (a < 0 || a >= s.G1.size() || b < 0 || b >= s.G1.size() || h < 0 || h >= s.G1.size())
      throw std::invalid_argument("semigroupoid: index out of range");
}

// Pseudoinverses inside a semigroupoid: (f h) f = f and (h f) h = h.
std::vector<int> sgpd_pseudoinverses(const Semigroupoid& s, int f) {
  std::vector<int> out;
  for (int h = 0; h < s.G1.size(); ++h) {
    auto fh = s.mu_at(f, h);
    auto hf = s.mu_at(h, f);
    if (!fh || !hf) continue;
    if (s.mu_at(*fh, f) == std::optional<int>(f) && s.mu_at(*hf, h) == std::optional<int>(h))
      out.push_back(h);
  }
  return out;
}

}  // namespace

SgpdReport check_semigroupoid_properties(const Semigroupoid& sg, const Budget& budget) {
  Semigroupoid s = sg;
  std::sort(s.mu.begin(), s.mu.end());
  validate_sgpd(s);
  SgpdReport out;
  const auto& A = s.G1;
  const int n = A.size();

  {
    charge(budget, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n), "semigroupoid domain");
    std::vector<std::string> w;
    for (const auto& [g, f, h] : s.mu) {
      (void)h;
      if (!s.composable(g, f) && w.size() < 8)
        w.push_back("mu(" + A.at(g) + "," + A.at(f) + ") defined on a non composable pair");
    }
    for (int g = 0; g < n && w.size() < 8; ++g)
      for (int f = 0; f < n && w.size() < 8; ++f)
        if (s.composable(g, f) && !s.mu_at(g, f))
          w.push_back("mu(" + A.at(g) + "," + A.at(f) + ") undefined on a composable pair");
    out.report.add_witnessed("domain", std::move(w));
  }
  {
    charge(budget, s.mu.size() * static_cast<std::uint64_t>(n), "semigroupoid associativity");
    std::vector<std::string> w;
    for (const auto& [g, f, h] : s.mu) {
      for (int k = 0; k < n && w.size() < 8; ++k) {
        if (!s.composable(f, k)) continue;
        auto fk = s.mu_at(f, k);
        auto lhs = s.mu_at(h, k);
        auto rhs = fk ? s.mu_at(g, *fk) : std::optional<int>{};
        if (!lhs || !rhs || *lhs != *rhs)
          w.push_back("associativity breaks at (" + A.at(g) + "," + A.at(f) + "," + A.at(k) + ")");
      }
      if (w.size() >= 8) break;
    }
    out.associative = w.empty();
    out.report.add("associative", out.associative, std::move(w));
  }
  std::vector<std::vector<int>> pinv(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f) pinv[static_cast<std::size_t>(f)] = sgpd_pseudoinverses(s, f);
  {
    std::vector<std::string> w;
    for (int f = 0; f < n; ++f)
      if (pinv[static_cast<std::size_t>(f)].empty() && w.size() < 8)
        w.push_back("no pseudoinverse for " + A.at(f));
    out.regular = w.empty();
    out.report.add("regular", out.regular, std::move(w));
  }
  {
    charge(budget,
           static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n) *
               static_cast<std::uint64_t>(n) * std::max(1, n),
           "local cancellativity");
    std::vector<std::string> w;
    for (int h = 0; h < n && w.size() < 8; ++h)
      for (int hs : pinv[static_cast<std::size_t>(h)]) {
        for (int f = 0; f < n && w.size() < 8; ++f) {
          auto fh = s.mu_at(f, h);
          auto hf = s.mu_at(h, f);
          for (int g = 0; g < n && w.size() < 8; ++g) {
            if (fh) {
              auto lhs = s.mu_at(*fh, hs);
              auto rhs = s.mu_at(g, hs);
              if (lhs && rhs && *lhs == *rhs && *fh != g)
                w.push_back("left: (" + A.at(f) + " " + A.at(h) + ") " + A.at(hs) + " = " +
                            A.at(g) + " " + A.at(hs) + " but " + A.at(f) + " " + A.at(h) +
                            " != " + A.at(g));
            }
            if (hf) {
              auto lhs = s.mu_at(hs, *hf);
              auto rhs = s.mu_at(hs, g);
              if (lhs && rhs && *lhs == *rhs && *hf != g)
                w.push_back("right: " + A.at(hs) + " (" + A.at(h) + " " + A.at(f) + ") = " +
                            A.at(hs) + " " + A.at(g) + " but " + A.at(h) + " " + A.at(f) +
                            " != " + A.at(g));
            }
          }
        }
        if (w.size() >= 8) break;
      }
    out.locally_cancellative = w.empty();
    out.report.add("locally-cancellative", out.locally_cancellative, std::move(w));
  }
  return out;
}

Semigroupoid to_semigroupoid(const HStarCandidate& c, const HStarOptions& opt) {
  HStarOptions pre = opt;
  pre.fail_fast = true;
  HStarReport hr = check_hstar_axioms(c, pre);
  if (!hr.report.verdict())
    throw PreconditionError("to_semigroupoid: candidate fails the algebra laws", hr.report);

  const int n = c.X.size();
  const MulTable t = detail::make_table(n, c.m);
  Semigroupoid s;
  s.G1 = c.X;
  std::vector<int> idem;
  for (int f = 0; f < n; ++f)
    if (t.at(f, f) == std::vector<int>{f}) idem.push_back(f);
  std::vector<std::string> objects;
  for (int f : idem) objects.push_back(c.X.at(f));
  s.G0 = finrel::Carrier(std::move(objects));
  std::vector<int> obj_of(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < idem.size(); ++i) obj_of[static_cast<std::size_t>(idem[i])] = static_cast<int>(i);

  s.s.assign(static_cast<std::size_t>(n), -1);
  s.t.assign(static_cast<std::size_t>(n), -1);
  for (int f = 0; f < n; ++f) {
    int sval = -1, tval = -1;
    int s_wit = -1, t_wit = -1;
    for (int fs = 0; fs < n; ++fs) {
      if (!pseudoinverse_of(t, f, fs)) continue;
      for (int z : t.at(fs, f)) {
        if (sval == -1) {
          sval = z;
          s_wit = fs;
        } else if (z != sval) {
          throw std::logic_error("to_semigroupoid: s(" + c.X.at(f) + ") conflicts between pseudoinverses " +
                                 c.X.at(s_wit) + " and " + c.X.at(fs));
        }
      }
      for (int z : t.at(f, fs)) {
        if (tval == -1) {
          tval = z;
          t_wit = fs;
        } else if (z != tval) {
          throw std::logic_error("to_semigroupoid: t(" + c.X.at(f) + ") conflicts between pseudoinverses " +
                                 c.X.at(t_wit) + " and " + c.X.at(fs));
        }
      }
    }
    if (sval == -1 || tval == -1)
      throw std::logic_error("to_semigroupoid: no pseudoinverse for " + c.X.at(f));
    if (obj_of[static_cast<std::size_t>(sval)] == -1 || obj_of[static_cast<std::size_t>(tval)] == -1)
      throw std::logic_error("to_semigroupoid: source or target of " + c.X.at(f) + " is not idempotent");
    s.s[static_cast<std::size_t>(f)] = obj_of[static_cast<std::size_t>(sval)];
    s.t[static_cast<std::size_t>(f)] = obj_of[static_cast<std::size_t>(tval)];
  }

  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!s.composable(g, f)) continue;
      const auto& cell = t.at(g, f);
      if (cell.size() != 1)
        throw std::logic_error("to_semigroupoid: product of composable pair (" + c.X.at(g) + "," +
                               c.X.at(f) + ") is not a single element");
      s.mu.emplace_back(g, f, cell.front());
    }
  std::sort(s.mu.begin(), s.mu.end());
  return s;
}

HStarCandidate from_semigroupoid(const Semigroupoid& sg, const Budget& budget) {
  SgpdReport rep = check_semigroupoid_properties(sg, budget);
  for (const char* need : {"domain", "associative", "regular", "locally-cancellative"})
    if (!rep.report.passed(need))
      throw PreconditionError(std::string("from_semigroupoid: semigroupoid is not ") + need,
                              rep.report);
  Semigroupoid s = sg;
  std::sort(s.mu.begin(), s.mu.end());
  const int n = s.G1.size();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(s.mu.size());
  for (const auto& [g, f, h] : s.mu) pairs.emplace_back(g * n + f, h);
  finrel::Rel m(finrel::Carrier::product(s.G1, s.G1, budget), s.G1, std::move(pairs));
  return HStarCandidate{s.G1, std::move(m)};
}

Report adjunction_check(const HStarCandidate& c, const HStarOptions& opt) {
  HStarOptions pre = opt;
  pre.fail_fast = true;
  HStarReport hr = check_hstar_axioms(c, pre);
  if (!hr.report.verdict())
    throw PreconditionError("adjunction_check: candidate fails the algebra laws", hr.report);
  Report rep;
  const int n = c.X.size();
  const MulTable t = detail::make_table(n, c.m);

  std::vector<std::vector<int>> pinv(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (pseudoinverse_of(t, a, b)) pinv[static_cast<std::size_t>(a)].push_back(b);

  // Unit by its defining formula: (g,f) participates when some
  // pseudoinverses witness g*g = ff*.
  std::vector<std::pair<int, int>> unit_pairs;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      bool witnessed = false;
      for (int gs : pinv[static_cast<std::size_t>(g)]) {
        for (int fs : pinv[static_cast<std::size_t>(f)])
          if (!t.at(gs, g).empty() && t.at(gs, g) == t.at(f, fs)) {
            witnessed = true;
            break;
          }
        if (witnessed) break;
      }
      if (!witnessed) continue;
      for (int z : t.at(g, f)) unit_pairs.emplace_back(g * n + f, z);
    }
  finrel::Rel unit(c.m.src(), c.m.dst(), std::move(unit_pairs));

  Semigroupoid S = to_semigroupoid(c, opt);
  HStarCandidate c2 = from_semigroupoid(S, opt.budget);
  {
    bool ok = unit == c2.m;
    std::vector<std::string> w;
    if (!ok) w.push_back("unit formula disagrees with the round trip relation");
    rep.add("unit.matches-construction", ok, std::move(w));
  }
  {
    bool ok = finrel::is_subrelation(unit, c.m);
    std::vector<std::string> w;
    if (!ok) w.push_back("unit is not a subrelation of m");
    rep.add("unit.subrelation", ok, std::move(w));
  }
  Semigroupoid S2 = to_semigroupoid(c2, opt);
  {
    bool ok = S2.G0 == S.G0 && S2.G1 == S.G1 && S2.s == S.s && S2.t == S.t && S2.mu == S.mu;
    std::vector<std::string> w;
    if (!ok) w.push_back("round trip semigroupoid differs");
    rep.add("triangle.semigroupoid", ok, std::move(w));
  }
  {
    HStarCandidate c3 = from_semigroupoid(S2, opt.budget);
    bool ok = c3.m == unit;
    std::vector<std::string> w;
    if (!ok) w.push_back("round trip relation differs from the unit");
    rep.add("triangle.algebra", ok, std::move(w));
  }
  return rep;
}

}  // namespace relkit::hstar
