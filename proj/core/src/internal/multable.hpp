#pragma once

#include <string>
#include <vector>

#include "relkit/finrel.hpp"

namespace relkit::detail {

// Cell view of a binary operation relation over index pairs; cell (i,j)
// lists outputs ascending.
struct MulTable {
  int n = 0;
  std::vector<std::vector<int>> cell;
  const std::vector<int>& at(int i, int j) const {
    return cell[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  }
};

inline MulTable make_table(int n, const finrel::Rel& m) {
  MulTable t;
  t.n = n;
  t.cell.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), {});
  for (const auto& [p, x] : m.pairs()) t.cell[static_cast<std::size_t>(p)].push_back(x);
  return t;
}

inline std::string show_set(const finrel::Carrier& X, const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += X.at(xs[i]);
  }
  return out + "}";
}

// Up to eight pairs present on exactly one side of an intended equality.
inline std::vector<std::string> rel_difference_witnesses(const finrel::Rel& a,
                                                         const finrel::Rel& b) {
  std::vector<std::string> w;
  for (const auto& [i, j] : a.pairs())
    if (!b.contains(i, j) && w.size() < 8)
      w.push_back("(" + a.src().at(i) + " -> " + a.dst().at(j) + ") on one side only");
  for (const auto& [i, j] : b.pairs())
    if (!a.contains(i, j) && w.size() < 8)
      w.push_back("(" + b.src().at(i) + " -> " + b.dst().at(j) + ") on one side only");
  return w;
}

// Witnesses for the violation of m . dagger(m) = id: multi valued cells
// and elements never produced.
inline std::vector<std::string> single_valued_surjective_witnesses(const MulTable& t,
                                                                   const finrel::Carrier& X) {
  std::vector<std::string> w;
  const int n = t.n;
  std::vector<char> covered(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto& cell = t.at(i, j);
      if (cell.size() > 1 && w.size() < 8)
        w.push_back("m(" + X.at(i) + "," + X.at(j) + ") has more than one value");
      for (int x : cell) covered[static_cast<std::size_t>(x)] = 1;
    }
  for (int x = 0; x < n; ++x)
    if (!covered[static_cast<std::size_t>(x)]) w.push_back(X.at(x) + " is not a product of any pair");
  return w;
}

inline std::vector<int> apply_left(const MulTable& t, const std::vector<int>& firsts, int right) {
  std::vector<int> acc;
  for (int p : firsts) {
    const auto& ys = t.at(p, right);
    acc.insert(acc.end(), ys.begin(), ys.end());
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

inline std::vector<int> apply_right(const MulTable& t, int left, const std::vector<int>& seconds) {
  std::vector<int> acc;
  for (int p : seconds) {
    const auto& ys = t.at(left, p);
    acc.insert(acc.end(), ys.begin(), ys.end());
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

// Witnesses against slot-wise associativity of the multivalued product.
inline std::vector<std::string> associativity_witnesses(const MulTable& t,
                                                        const finrel::Carrier& X) {
  std::vector<std::string> w;
  const int n = t.n;
  for (int a = 0; a < n && w.size() < 8; ++a)
    for (int b = 0; b < n && w.size() < 8; ++b)
      for (int c = 0; c < n && w.size() < 8; ++c) {
        auto lhs = apply_left(t, t.at(a, b), c);
        auto rhs = apply_right(t, a, t.at(b, c));
        if (lhs != rhs)
          w.push_back("at (" + X.at(a) + "," + X.at(b) + "," + X.at(c) + "): " +
                      show_set(X, lhs) + " vs " + show_set(X, rhs));
      }
  return w;
}

}  // namespace relkit::detail
