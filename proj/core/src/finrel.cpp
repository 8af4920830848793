#include "relkit/finrel.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace relkit::finrel {

namespace {

std::string escape_component(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    if (ch == '\\' || ch == '(' || ch == ')' || ch == ',') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

}  // namespace

std::string pair_atom(const std::string& a, const std::string& b) {
  return "(" + escape_component(a) + "," + escape_component(b) + ")";
}

std::optional<std::pair<std::string, std::string>> split_pair_atom(const std::string& atom) {
  if (atom.size() < 3 || atom.front() != '(' || atom.back() != ')') return std::nullopt;
  std::string first, second;
  std::string* cur = &first;
  int depth = 0;
  bool seen_comma = false;
  for (std::size_t i = 1; i + 1 < atom.size(); ++i) {
    char ch = atom[i];
    if (ch == '\\') {
      if (i + 2 >= atom.size()) return std::nullopt;
      cur->push_back(atom[++i]);
      continue;
    }
    if (ch == '(') ++depth;
    if (ch == ')') {
      if (depth == 0) return std::nullopt;
      --depth;
    }
    if (ch == ',' && depth == 0) {
      if (seen_comma) return std::nullopt;
      seen_comma = true;
      cur = &second;
      continue;
    }
    cur->push_back(ch);
  }
  if (!seen_comma || depth != 0) return std::nullopt;
  return std::make_pair(first, second);
}

Carrier::Carrier() : data_(std::make_shared<Data>()) {}

Carrier::Carrier(std::vector<std::string> atoms) {
  auto data = std::make_shared<Data>();
  data->atoms = std::move(atoms);
  for (int i = 0; i < static_cast<int>(data->atoms.size()); ++i) {
    auto [it, inserted] = data->index.emplace(data->atoms[static_cast<std::size_t>(i)], i);
    if (!inserted)
      throw std::invalid_argument("duplicate atom: " + data->atoms[static_cast<std::size_t>(i)]);
  }
  data_ = std::move(data);
}

Carrier Carrier::point() { return Carrier({"*"}); }

Carrier Carrier::product(const Carrier& a, const Carrier& b, const Budget& budget) {
  std::uint64_t n = static_cast<std::uint64_t>(a.size()) * static_cast<std::uint64_t>(b.size());
  charge(budget, n, "carrier product");
  std::vector<std::string> atoms;
  atoms.reserve(n);
  for (const auto& x : a.atoms())
    for (const auto& y : b.atoms()) atoms.push_back(pair_atom(x, y));
  return Carrier(std::move(atoms));
}

int Carrier::index(const std::string& atom) const {
  auto it = data_->index.find(atom);
  if (it == data_->index.end()) throw std::invalid_argument("atom not in carrier: " + atom);
  return it->second;
}

Rel::Rel(Carrier src, Carrier dst, std::vector<std::pair<int, int>> pairs)
    : src_(std::move(src)), dst_(std::move(dst)), pairs_(std::move(pairs)) {
  for (const auto& [i, j] : pairs_) {
    if (i < 0 || i >= src_.size() || j < 0 || j >= dst_.size())
      throw std::invalid_argument("relation pair out of range");
  }
  std::sort(pairs_.begin(), pairs_.end());
  pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

Rel Rel::from_atoms(const Carrier& src, const Carrier& dst,
                    const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<std::pair<int, int>> ix;
  ix.reserve(pairs.size());
  for (const auto& [a, b] : pairs) ix.emplace_back(src.index(a), dst.index(b));
  return Rel(src, dst, std::move(ix));
}

Rel Rel::empty(Carrier src, Carrier dst) { return Rel(std::move(src), std::move(dst), {}); }

Rel Rel::full(const Carrier& src, const Carrier& dst, const Budget& budget) {
  std::uint64_t n = static_cast<std::uint64_t>(src.size()) * static_cast<std::uint64_t>(dst.size());
  charge(budget, n, "full relation");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(n);
  for (int i = 0; i < src.size(); ++i)
    for (int j = 0; j < dst.size(); ++j) pairs.emplace_back(i, j);
  return Rel(src, dst, std::move(pairs));
}

bool Rel::contains(int i, int j) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), std::make_pair(i, j));
}

bool Rel::contains(const std::string& a, const std::string& b) const {
  if (!src_.contains(a) || !dst_.contains(b)) return false;
  return contains(src_.index(a), dst_.index(b));
}

std::vector<int> Rel::image(int i) const {
  std::vector<int> out;
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::make_pair(i, 0));
  for (; it != pairs_.end() && it->first == i; ++it) out.push_back(it->second);
  return out;
}

std::vector<std::pair<std::string, std::string>> Rel::atom_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(pairs_.size());
  for (const auto& [i, j] : pairs_) out.emplace_back(src_.at(i), dst_.at(j));
  return out;
}

std::string Rel::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [i, j] : pairs_) {
    if (!first) os << ", ";
    first = false;
    os << "(" << src_.at(i) << " -> " << dst_.at(j) << ")";
  }
  os << "}";
  return os.str();
}

bool Rel::operator==(const Rel& o) const {
  return src_ == o.src_ && dst_ == o.dst_ && pairs_ == o.pairs_;
}

Rel compose(const Rel& r, const Rel& s, const Budget& budget) {
  if (r.dst() != s.src()) throw std::invalid_argument("compose: middle carriers differ");
  charge(budget, static_cast<std::uint64_t>(r.size()) * std::max<std::uint64_t>(1, s.size()),
         "compose");
  // Bucket s by source for a pass over r.
  std::vector<std::vector<int>> out_of(static_cast<std::size_t>(s.src().size()));
  for (const auto& [b, c] : s.pairs()) out_of[static_cast<std::size_t>(b)].push_back(c);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& [a, b] : r.pairs())
    for (int c : out_of[static_cast<std::size_t>(b)]) pairs.emplace_back(a, c);
  return Rel(r.src(), s.dst(), std::move(pairs));
}

Rel dagger(const Rel& r) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(r.size());
  for (const auto& [i, j] : r.pairs()) pairs.emplace_back(j, i);
  return Rel(r.dst(), r.src(), std::move(pairs));
}

Rel product(const Rel& r, const Rel& s, const Budget& budget) {
  Carrier src = Carrier::product(r.src(), s.src(), budget);
  Carrier dst = Carrier::product(r.dst(), s.dst(), budget);
  charge(budget, static_cast<std::uint64_t>(r.size()) * std::max<std::uint64_t>(1, s.size()),
         "relation product");
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(r.size() * s.size());
  for (const auto& [a, b] : r.pairs())
    for (const auto& [c, d] : s.pairs())
      pairs.emplace_back(a * s.src().size() + c, b * s.dst().size() + d);
  return Rel(std::move(src), std::move(dst), std::move(pairs));
}

Rel identity(const Carrier& a) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) pairs.emplace_back(i, i);
  return Rel(a, a, std::move(pairs));
}

Rel diagonal(const Carrier& a, const Budget& budget) {
  Carrier sq = Carrier::product(a, a, budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) pairs.emplace_back(i, i * a.size() + i);
  return Rel(a, std::move(sq), std::move(pairs));
}

Rel swap(const Carrier& a, const Carrier& b, const Budget& budget) {
  Carrier ab = Carrier::product(a, b, budget);
  Carrier ba = Carrier::product(b, a, budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(ab.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      pairs.emplace_back(i * b.size() + j, j * a.size() + i);
  return Rel(std::move(ab), std::move(ba), std::move(pairs));
}

Rel interchange(const Carrier& a, const Carrier& b, const Carrier& c, const Carrier& d,
                const Budget& budget) {
  Carrier src = Carrier::product(Carrier::product(a, b, budget), Carrier::product(c, d, budget), budget);
  Carrier dst = Carrier::product(Carrier::product(a, c, budget), Carrier::product(b, d, budget), budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(src.size());
  int nb = b.size(), nc = c.size(), nd = d.size();
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < nb; ++j)
      for (int k = 0; k < nc; ++k)
        for (int l = 0; l < nd; ++l)
          pairs.emplace_back((i * nb + j) * nc * nd + k * nd + l,
                             (i * nc + k) * nb * nd + j * nd + l);
  return Rel(std::move(src), std::move(dst), std::move(pairs));
}

Rel assoc_right(const Carrier& a, const Carrier& b, const Carrier& c, const Budget& budget) {
  Carrier ab_c = Carrier::product(Carrier::product(a, b, budget), c, budget);
  Carrier a_bc = Carrier::product(a, Carrier::product(b, c, budget), budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(ab_c.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < b.size(); ++j)
      for (int k = 0; k < c.size(); ++k)
        pairs.emplace_back((i * b.size() + j) * c.size() + k,
                           i * b.size() * c.size() + j * c.size() + k);
  return Rel(std::move(ab_c), std::move(a_bc), std::move(pairs));
}

Rel left_unitor(const Carrier& a, const Budget& budget) {
  Carrier pa = Carrier::product(Carrier::point(), a, budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) pairs.emplace_back(i, i);
  return Rel(std::move(pa), a, std::move(pairs));
}

Rel right_unitor(const Carrier& a, const Budget& budget) {
  Carrier ap = Carrier::product(a, Carrier::point(), budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) pairs.emplace_back(i, i);
  return Rel(std::move(ap), a, std::move(pairs));
}

Rel graph_of_map(const Carrier& a, const Carrier& b,
                 const std::vector<std::pair<std::string, std::string>>& assignments) {
  std::vector<int> target(static_cast<std::size_t>(a.size()), -1);
  for (const auto& [x, y] : assignments) {
    int i = a.index(x), j = b.index(y);
    if (target[static_cast<std::size_t>(i)] != -1 && target[static_cast<std::size_t>(i)] != j)
      throw std::invalid_argument("graph_of_map: multi-valued at " + x);
    target[static_cast<std::size_t>(i)] = j;
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(a.size());
  for (int i = 0; i < a.size(); ++i) {
    if (target[static_cast<std::size_t>(i)] == -1)
      throw std::invalid_argument("graph_of_map: not total at " + a.at(i));
    pairs.emplace_back(i, target[static_cast<std::size_t>(i)]);
  }
  return Rel(a, b, std::move(pairs));
}

Rel point_rel(const Carrier& a, const std::vector<std::string>& xs) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(xs.size());
  for (const auto& x : xs) pairs.emplace_back(0, a.index(x));
  return Rel(Carrier::point(), a, std::move(pairs));
}

Rel name_of_rel(const Rel& r, const Budget& budget) {
  Carrier ab = Carrier::product(r.src(), r.dst(), budget);
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(r.size());
  for (const auto& [i, j] : r.pairs()) pairs.emplace_back(0, i * r.dst().size() + j);
  return Rel(Carrier::point(), std::move(ab), std::move(pairs));
}

bool is_subrelation(const Rel& inner, const Rel& outer) {
  if (inner.src() != outer.src() || inner.dst() != outer.dst())
    throw std::invalid_argument("is_subrelation: carriers differ");
  return std::includes(outer.pairs().begin(), outer.pairs().end(),
                       inner.pairs().begin(), inner.pairs().end());
}

Rel rel_union(const Rel& r, const Rel& s) {
  if (r.src() != s.src() || r.dst() != s.dst())
    throw std::invalid_argument("rel_union: carriers differ");
  std::vector<std::pair<int, int>> pairs = r.pairs();
  pairs.insert(pairs.end(), s.pairs().begin(), s.pairs().end());
  return Rel(r.src(), r.dst(), std::move(pairs));
}

Rel rel_intersect(const Rel& r, const Rel& s) {
  if (r.src() != s.src() || r.dst() != s.dst())
    throw std::invalid_argument("rel_intersect: carriers differ");
  std::vector<std::pair<int, int>> pairs;
  std::set_intersection(r.pairs().begin(), r.pairs().end(),
                        s.pairs().begin(), s.pairs().end(), std::back_inserter(pairs));
  return Rel(r.src(), r.dst(), std::move(pairs));
}

RelFlags classify_relation(const Rel& r, const Budget& budget) {
  RelFlags flags;
  std::vector<int> outdeg(static_cast<std::size_t>(r.src().size()), 0);
  for (const auto& [i, j] : r.pairs()) ++outdeg[static_cast<std::size_t>(i)];
  flags.is_function = std::all_of(outdeg.begin(), outdeg.end(), [](int d) { return d == 1; });
  if (r.src() != r.dst()) return flags;

  const Rel rT = dagger(r);
  flags.is_symmetric = r == rT;
  flags.is_idempotent = compose(r, r, budget) == r;

  bool reflexive = true;
  for (int i = 0; i < r.src().size(); ++i) reflexive &= r.contains(i, i);
  bool transitive = is_subrelation(compose(r, r, budget), r);
  flags.is_equivalence = reflexive && flags.is_symmetric && transitive;
  return flags;
}

}  // namespace relkit::finrel
