#include "relkit/document.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace relkit::doc {

using json = nlohmann::ordered_json;

namespace {

json parse_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw DocError("document: not valid JSON");
  if (!j.is_object()) throw DocError("document: top level must be an object");
  return j;
}

const json& field(const json& j, const std::string& name) {
  auto it = j.find(name);
  if (it == j.end()) throw DocError("document: missing field '" + name + "'");
  return *it;
}

void expect_kind(const json& j, const std::string& kind) {
  const json& k = field(j, "kind");
  if (!k.is_string() || k.get<std::string>() != kind)
    throw DocError("document: expected kind '" + kind + "'");
}

int int_of(const json& v, const std::string& name) {
  if (!v.is_number_integer()) throw DocError("document: field '" + name + "' must be an integer");
  return v.get<int>();
}

Rat rat_of(const json& v, const std::string& name) {
  if (v.is_number_integer()) return Rat(v.get<long long>());
  if (v.is_string()) {
    try {
      return parse_rat(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw DocError("document: field '" + name + "': " + e.what());
    }
  }
  throw DocError("document: field '" + name + "' must be an integer or a \"p/q\" string");
}

std::vector<std::string> string_list(const json& v, const std::string& name) {
  if (!v.is_array()) throw DocError("document: field '" + name + "' must be an array");
  std::vector<std::string> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    if (!e.is_string()) throw DocError("document: field '" + name + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

finrel::Carrier carrier_of(const json& v, const std::string& name) {
  try {
    return finrel::Carrier(string_list(v, name));
  } catch (const std::invalid_argument& e) {
    throw DocError("document: field '" + name + "': " + e.what());
  }
}

linalg::Mat mat_of(const json& v, const std::string& name) {
  if (!v.is_array()) throw DocError("document: field '" + name + "' must be a matrix");
  std::vector<std::vector<Rat>> rows;
  rows.reserve(v.size());
  for (const auto& r : v) {
    if (!r.is_array()) throw DocError("document: field '" + name + "' must be a matrix");
    std::vector<Rat> row;
    row.reserve(r.size());
    for (const auto& e : r) row.push_back(rat_of(e, name));
    rows.push_back(std::move(row));
  }
  try {
    return linalg::Mat::from_rows(rows);
  } catch (const std::invalid_argument&) {
    throw DocError("document: field '" + name + "' has rows of unequal length");
  }
}

// Total map by index over a carrier from a {from: to} object.
std::vector<int> map_of(const json& v, const finrel::Carrier& dom, const finrel::Carrier& cod,
                        const std::string& name) {
  if (!v.is_object()) throw DocError("document: field '" + name + "' must be an object map");
  std::vector<int> out(static_cast<std::size_t>(dom.size()), -1);
  for (const auto& [key, val] : v.items()) {
    if (!dom.contains(key)) throw DocError("document: field '" + name + "' maps unknown atom " + key);
    if (!val.is_string() || !cod.contains(val.get<std::string>()))
      throw DocError("document: field '" + name + "' sends " + key + " to an unknown atom");
    int i = dom.index(key);
    if (out[static_cast<std::size_t>(i)] != -1)
      throw DocError("document: field '" + name + "' assigns " + key + " twice");
    out[static_cast<std::size_t>(i)] = cod.index(val.get<std::string>());
  }
  for (int i = 0; i < dom.size(); ++i)
    if (out[static_cast<std::size_t>(i)] == -1)
      throw DocError("document: field '" + name + "' is undefined on " + dom.at(i));
  return out;
}

std::vector<std::array<int, 3>> triples_of(const json& v, const finrel::Carrier& X,
                                           const std::string& name) {
  if (!v.is_array()) throw DocError("document: field '" + name + "' must be an array of triples");
  std::vector<std::array<int, 3>> out;
  out.reserve(v.size());
  for (const auto& t : v) {
    if (!t.is_array() || t.size() != 3)
      throw DocError("document: field '" + name + "' must hold [a,b,c] triples");
    std::array<int, 3> ix{};
    for (int k = 0; k < 3; ++k) {
      if (!t[static_cast<std::size_t>(k)].is_string() ||
          !X.contains(t[static_cast<std::size_t>(k)].get<std::string>()))
        throw DocError("document: field '" + name + "' uses an unknown atom");
      ix[static_cast<std::size_t>(k)] = X.index(t[static_cast<std::size_t>(k)].get<std::string>());
    }
    out.push_back(ix);
  }
  return out;
}

// Multiplication triples (a, b, c) with c in m(a,b) as a relation X*X -> X.
finrel::Rel mul_rel(const json& v, const finrel::Carrier& X, const std::string& name) {
  auto ts = triples_of(v, X, name);
  const int n = X.size();
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(ts.size());
  for (const auto& t : ts) pairs.emplace_back(t[0] * n + t[1], t[2]);
  return finrel::Rel(finrel::Carrier::product(X, X), X, std::move(pairs));
}

json mul_json(const finrel::Rel& m) {
  const int n = m.dst().size();
  json out = json::array();
  for (const auto& [p, z] : m.pairs())
    out.push_back({m.dst().at(p / n), m.dst().at(p % n), m.dst().at(z)});
  return out;
}

json rat_json(const Rat& r) { return json(format_rat(r)); }

json mat_json(const linalg::Mat& m) {
  json out = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rat_json(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

symplin::SympSpace symp_payload(const json& j, const std::string& who) {
  if (j.contains("standard")) return symplin::SympSpace::standard(int_of(j.at("standard"), who));
  int dim = int_of(field(j, "dim"), who + ".dim");
  linalg::Mat omega = mat_of(field(j, "omega"), who + ".omega");
  if (omega.rows() != dim || omega.cols() != dim)
    throw DocError("document: field '" + who + "' has an omega of the wrong size");
  try {
    return symplin::SympSpace::make(std::move(omega));
  } catch (const std::invalid_argument& e) {
    throw DocError("document: field '" + who + "': " + e.what());
  }
}

json symp_json(const symplin::SympSpace& v) {
  json j;
  j["dim"] = v.dim;
  j["omega"] = mat_json(v.omega);
  return j;
}

symplin::Subspace subspace_payload(const json& basis, int ambient, const std::string& who) {
  linalg::Mat b = mat_of(basis, who);
  if (b.rows() == 0) return symplin::Subspace::zero(ambient);
  if (b.cols() != ambient)
    throw DocError("document: field '" + who + "' rows must have the ambient width");
  return symplin::Subspace(ambient, b);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocError("document: cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

finrel::Rel parse_relation(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "relation");
  finrel::Carrier src = carrier_of(field(j, "src"), "src");
  finrel::Carrier dst = carrier_of(field(j, "dst"), "dst");
  const json& pj = field(j, "pairs");
  if (!pj.is_array()) throw DocError("document: field 'pairs' must be an array");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : pj) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
      throw DocError("document: field 'pairs' must hold [a,b] pairs");
    if (!src.contains(p[0].get<std::string>()) || !dst.contains(p[1].get<std::string>()))
      throw DocError("document: field 'pairs' uses an unknown atom");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return finrel::Rel::from_atoms(src, dst, pairs);
}

std::string print_relation(const finrel::Rel& r) {
  json j;
  j["kind"] = "relation";
  j["src"] = r.src().atoms();
  j["dst"] = r.dst().atoms();
  json pairs = json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back({r.src().at(a), r.dst().at(b)});
  j["pairs"] = std::move(pairs);
  return dump(j);
}

frobenius::FrobCandidate parse_frobenius(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "frobenius");
  finrel::Carrier X = carrier_of(field(j, "atoms"), "atoms");
  return frobenius::make_candidate(X, mul_rel(field(j, "mul"), X, "mul"));
}

std::string print_frobenius(const frobenius::FrobCandidate& c) {
  json j;
  j["kind"] = "frobenius";
  j["atoms"] = c.X.atoms();
  j["mul"] = mul_json(c.m);
  return dump(j);
}

hstar::HStarCandidate parse_hstar(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "hstar");
  finrel::Carrier X = carrier_of(field(j, "atoms"), "atoms");
  return hstar::make_candidate(X, mul_rel(field(j, "mul"), X, "mul"));
}

std::string print_hstar(const hstar::HStarCandidate& c) {
  json j;
  j["kind"] = "hstar";
  j["atoms"] = c.X.atoms();
  j["mul"] = mul_json(c.m);
  return dump(j);
}

namespace {

std::vector<std::tuple<int, int, int>> mu_table(const json& v, const finrel::Carrier& G1,
                                                const std::string& name) {
  auto ts = triples_of(v, G1, name);
  std::vector<std::tuple<int, int, int>> mu;
  mu.reserve(ts.size());
  for (const auto& t : ts) mu.emplace_back(t[0], t[1], t[2]);
  std::sort(mu.begin(), mu.end());
  mu.erase(std::unique(mu.begin(), mu.end()), mu.end());
  return mu;
}

json mu_json(const finrel::Carrier& G1, const std::vector<std::tuple<int, int, int>>& mu) {
  json out = json::array();
  for (const auto& [g, f, h] : mu) out.push_back({G1.at(g), G1.at(f), G1.at(h)});
  return out;
}

json map_json(const finrel::Carrier& dom, const finrel::Carrier& cod, const std::vector<int>& f) {
  json out;
  for (int i = 0; i < dom.size(); ++i) out[dom.at(i)] = cod.at(f[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

frobenius::Groupoid parse_groupoid(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "groupoid");
  frobenius::Groupoid g;
  g.G0 = carrier_of(field(j, "objects"), "objects");
  g.G1 = carrier_of(field(j, "arrows"), "arrows");
  g.s = map_of(field(j, "s"), g.G1, g.G0, "s");
  g.t = map_of(field(j, "t"), g.G1, g.G0, "t");
  g.e = map_of(field(j, "e"), g.G0, g.G1, "e");
  g.inv = map_of(field(j, "inv"), g.G1, g.G1, "inv");
  g.mu = mu_table(field(j, "mu"), g.G1, "mu");
  return g;
}

std::string print_groupoid(const frobenius::Groupoid& g) {
  json j;
  j["kind"] = "groupoid";
  j["objects"] = g.G0.atoms();
  j["arrows"] = g.G1.atoms();
  j["s"] = map_json(g.G1, g.G0, g.s);
  j["t"] = map_json(g.G1, g.G0, g.t);
  j["e"] = map_json(g.G0, g.G1, g.e);
  j["inv"] = map_json(g.G1, g.G1, g.inv);
  j["mu"] = mu_json(g.G1, g.mu);
  return dump(j);
}

hstar::Semigroupoid parse_semigroupoid(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "semigroupoid");
  hstar::Semigroupoid s;
  s.G0 = carrier_of(field(j, "objects"), "objects");
  s.G1 = carrier_of(field(j, "arrows"), "arrows");
  s.s = map_of(field(j, "s"), s.G1, s.G0, "s");
  s.t = map_of(field(j, "t"), s.G1, s.G0, "t");
  s.mu = mu_table(field(j, "mu"), s.G1, "mu");
  return s;
}

std::string print_semigroupoid(const hstar::Semigroupoid& s) {
  json j;
  j["kind"] = "semigroupoid";
  j["objects"] = s.G0.atoms();
  j["arrows"] = s.G1.atoms();
  j["s"] = map_json(s.G1, s.G0, s.s);
  j["t"] = map_json(s.G1, s.G0, s.t);
  j["mu"] = mu_json(s.G1, s.mu);
  return dump(j);
}

monoids::WeakMonoidCandidate parse_weak_monoid(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "weak-monoid");
  finrel::Carrier X = carrier_of(field(j, "atoms"), "atoms");
  auto unit = string_list(field(j, "unit"), "unit");
  for (const auto& a : unit)
    if (!X.contains(a)) throw DocError("document: field 'unit' uses an unknown atom");
  return monoids::WeakMonoidCandidate{X, finrel::point_rel(X, unit),
                                      mul_rel(field(j, "mul"), X, "mul")};
}

monoids::StarMonoidCandidate parse_star_monoid(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "star-monoid");
  finrel::Carrier X = carrier_of(field(j, "atoms"), "atoms");
  return monoids::StarMonoidCandidate{X, mul_rel(field(j, "mul"), X, "mul"),
                                      map_of(field(j, "psi"), X, X, "psi")};
}

monoids::CyclicCandidate parse_cyclic_monoid(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "cyclic-monoid");
  finrel::Carrier X = carrier_of(field(j, "atoms"), "atoms");
  return monoids::CyclicCandidate{X, map_of(field(j, "psi"), X, X, "psi"),
                                  mul_rel(field(j, "L"), X, "L")};
}

symplin::SympSpace parse_symp_space(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "symp-space");
  return symp_payload(j, "symp-space");
}

std::string print_symp_space(const symplin::SympSpace& v) {
  json j;
  j["kind"] = "symp-space";
  j.update(symp_json(v));
  return dump(j);
}

symplin::Subspace parse_subspace(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "subspace");
  int ambient = int_of(field(j, "ambient"), "ambient");
  if (ambient < 0) throw DocError("document: field 'ambient' must not be negative");
  return subspace_payload(field(j, "basis"), ambient, "basis");
}

std::string print_subspace(const symplin::Subspace& s) {
  json j;
  j["kind"] = "subspace";
  j["ambient"] = s.ambient();
  j["basis"] = mat_json(s.basis());
  return dump(j);
}

symplin::LinRel parse_linrel(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "linrel");
  symplin::SympSpace src = symp_payload(field(j, "src"), "src");
  symplin::SympSpace dst = symp_payload(field(j, "dst"), "dst");
  return symplin::LinRel{src, dst, subspace_payload(field(j, "graph"), src.dim + dst.dim, "graph")};
}

std::string print_linrel(const symplin::LinRel& r) {
  json j;
  j["kind"] = "linrel";
  j["src"] = symp_json(r.src);
  j["dst"] = symp_json(r.dst);
  j["graph"] = mat_json(r.graph.basis());
  return dump(j);
}

RelGpdDoc parse_relgpd(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "relgpd");
  const json& mode = field(j, "mode");
  RelGpdDoc out;
  if (mode == "set") {
    finrel::Carrier G = carrier_of(field(j, "atoms"), "atoms");
    std::vector<int> I = map_of(field(j, "I"), G, G, "I");
    out.set = relgpd::make_set_candidate(G, triples_of(field(j, "L"), G, "L"), std::move(I));
    return out;
  }
  if (mode == "linear") {
    out.linear = true;
    symplin::SympSpace G = symp_payload(field(j, "space"), "space");
    symplin::Subspace L = subspace_payload(field(j, "L_basis"), 3 * G.dim, "L_basis");
    linalg::Mat I = mat_of(field(j, "I"), "I");
    if (I.rows() != G.dim || I.cols() != G.dim)
      throw DocError("document: field 'I' must be square of the carrier dimension");
    out.lin = relgpd::LinearCandidate{G, std::move(L), std::move(I)};
    return out;
  }
  throw DocError("document: field 'mode' must be \"set\" or \"linear\"");
}

std::string print_relgpd(const relgpd::SetCandidate& c) {
  json j;
  j["kind"] = "relgpd";
  j["mode"] = "set";
  j["atoms"] = c.G.atoms();
  json L = json::array();
  for (const auto& t : c.L) L.push_back({c.G.at(t[0]), c.G.at(t[1]), c.G.at(t[2])});
  j["L"] = std::move(L);
  json I;
  for (int i = 0; i < c.G.size(); ++i) I[c.G.at(i)] = c.G.at(c.I[static_cast<std::size_t>(i)]);
  j["I"] = std::move(I);
  return dump(j);
}

std::string print_relgpd(const relgpd::LinearCandidate& c) {
  json j;
  j["kind"] = "relgpd";
  j["mode"] = "linear";
  j["space"] = symp_json(c.G);
  j["L_basis"] = mat_json(c.L.basis());
  j["I"] = mat_json(c.I);
  return dump(j);
}

namespace {

std::vector<linalg::Mat> mat_list(const json& v, int count, int n, const std::string& name) {
  if (!v.is_array() || static_cast<int>(v.size()) != count)
    throw DocError("document: field '" + name + "' must hold " + std::to_string(count) + " matrices");
  std::vector<linalg::Mat> out;
  out.reserve(v.size());
  for (const auto& e : v) {
    linalg::Mat m = mat_of(e, name);
    if (m.rows() != n || m.cols() != n)
      throw DocError("document: field '" + name + "' entries must be " + std::to_string(n) + "x" +
                     std::to_string(n));
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

poisson::PolyBivector parse_bivector(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "bivector");
  int n = int_of(field(j, "n"), "n");
  if (n < 0) throw DocError("document: field 'n' must not be negative");
  linalg::Mat a(n, n);
  if (j.contains("constant")) {
    a = mat_of(j.at("constant"), "constant");
    if (a.rows() != n || a.cols() != n)
      throw DocError("document: field 'constant' must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  std::vector<linalg::Mat> c(static_cast<std::size_t>(n), linalg::Mat(n, n));
  if (j.contains("linear")) c = mat_list(j.at("linear"), n, n, "linear");
  try {
    return poisson::make_bivector(n, std::move(a), std::move(c));
  } catch (const std::invalid_argument& e) {
    throw DocError(std::string("document: ") + e.what());
  }
}

std::string print_bivector(const poisson::PolyBivector& b) {
  json j;
  j["kind"] = "bivector";
  j["n"] = b.n;
  j["constant"] = mat_json(b.a);
  json lin = json::array();
  for (const auto& m : b.c) lin.push_back(mat_json(m));
  j["linear"] = std::move(lin);
  return dump(j);
}

std::optional<poisson::Poly> parse_bivector_poly(const std::string& text, const std::string& field_name,
                                                 int n) {
  json j = parse_json(text);
  if (!j.contains(field_name)) return std::nullopt;
  const json& terms = j.at(field_name);
  if (!terms.is_array()) throw DocError("document: field '" + field_name + "' must be a term array");
  poisson::Poly p(n);
  for (const auto& t : terms) {
    if (!t.is_object()) throw DocError("document: field '" + field_name + "' must hold term objects");
    Rat coeff = rat_of(field(t, "coeff"), field_name + ".coeff");
    const json& ej = field(t, "exps");
    if (!ej.is_array() || static_cast<int>(ej.size()) != n)
      throw DocError("document: field '" + field_name + "' terms need " + std::to_string(n) +
                     " exponents");
    std::vector<int> exps;
    exps.reserve(ej.size());
    for (const auto& e : ej) {
      int x = int_of(e, field_name + ".exps");
      if (x < 0) throw DocError("document: field '" + field_name + "' exponents must not be negative");
      exps.push_back(x);
    }
    p.set_term(exps, coeff);
  }
  return p;
}

LieConstants parse_lie_constants(const std::string& text) {
  json j = parse_json(text);
  expect_kind(j, "lie-constants");
  LieConstants out;
  out.n = int_of(field(j, "n"), "n");
  if (out.n < 0) throw DocError("document: field 'n' must not be negative");
  out.c = mat_list(field(j, "c"), out.n, out.n, "c");
  return out;
}

}  // namespace relkit::doc
