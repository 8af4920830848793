#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "relkit/report.hpp"

namespace relkit::finrel {

// Pair atoms are printable strings "(a,b)" with '(', ')', ',' and '\'
// escaped inside the components, so encoding is injective.
std::string pair_atom(const std::string& a, const std::string& b);
std::optional<std::pair<std::string, std::string>> split_pair_atom(const std::string& atom);

// Finite ordered set of distinct atoms. Order is insertion order and is
// part of the identity: two carriers are equal iff their atom lists are.
// Copies share the underlying data.
class Carrier {
 public:
  Carrier();
  explicit Carrier(std::vector<std::string> atoms);

  static Carrier point();  // the one-element carrier {"*"}
  // Atoms are pair encodings, row-major: index(a,b) = index(a)*|B| + index(b).
  static Carrier product(const Carrier& a, const Carrier& b, const Budget& budget = {});

  int size() const { return static_cast<int>(data_->atoms.size()); }
  const std::string& at(int i) const { return data_->atoms.at(static_cast<std::size_t>(i)); }
  const std::vector<std::string>& atoms() const { return data_->atoms; }
  bool contains(const std::string& atom) const { return data_->index.count(atom) != 0; }
  int index(const std::string& atom) const;  // throws if absent

  bool operator==(const Carrier& o) const {
    return data_ == o.data_ || data_->atoms == o.data_->atoms;
  }
  bool operator!=(const Carrier& o) const { return !(*this == o); }

 private:
  struct Data {
    std::vector<std::string> atoms;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Data> data_;
};

// Relation between two carriers; pair list is sorted and duplicate free.
class Rel {
 public:
  Rel() = default;
  Rel(Carrier src, Carrier dst, std::vector<std::pair<int, int>> pairs);
  static Rel from_atoms(const Carrier& src, const Carrier& dst,
                        const std::vector<std::pair<std::string, std::string>>& pairs);
  static Rel empty(Carrier src, Carrier dst);
  static Rel full(const Carrier& src, const Carrier& dst, const Budget& budget = {});

  const Carrier& src() const { return src_; }
  const Carrier& dst() const { return dst_; }
  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(int i, int j) const;
  bool contains(const std::string& a, const std::string& b) const;
  // Images of a source index, sorted.
  std::vector<int> image(int i) const;
  std::vector<std::pair<std::string, std::string>> atom_pairs() const;
  std::string to_string() const;

  bool operator==(const Rel& o) const;
  bool operator!=(const Rel& o) const { return !(*this == o); }

 private:
  Carrier src_, dst_;
  std::vector<std::pair<int, int>> pairs_;
};

// compose(r, s) applies r first: {(a,c) | exists b: (a,b) in r, (b,c) in s}.
Rel compose(const Rel& r, const Rel& s, const Budget& budget = {});
Rel dagger(const Rel& r);
// product(r: A->B, s: C->D): A*C -> B*D acting slot-wise.
Rel product(const Rel& r, const Rel& s, const Budget& budget = {});

Rel identity(const Carrier& a);
// a |-> (a,a) : A -> A*A
Rel diagonal(const Carrier& a, const Budget& budget = {});
// (a,b) |-> (b,a) : A*B -> B*A
Rel swap(const Carrier& a, const Carrier& b, const Budget& budget = {});
// ((a,b),c) |-> (a,(b,c)) : (A*B)*C -> A*(B*C)
Rel assoc_right(const Carrier& a, const Carrier& b, const Carrier& c, const Budget& budget = {});
// ((a,b),(c,d)) |-> ((a,c),(b,d)) : (A*B)*(C*D) -> (A*C)*(B*D)
Rel interchange(const Carrier& a, const Carrier& b, const Carrier& c, const Carrier& d,
                const Budget& budget = {});
// (*,a) |-> a and a |-> (*,a)
Rel left_unitor(const Carrier& a, const Budget& budget = {});
// (a,*) |-> a
Rel right_unitor(const Carrier& a, const Budget& budget = {});
// Graph of a map; rejects non-total or multi-valued input with the
// offending atom in the message.
Rel graph_of_map(const Carrier& a, const Carrier& b,
                 const std::vector<std::pair<std::string, std::string>>& assignments);
// point -> A, pairs {(*, x) | x in xs}
Rel point_rel(const Carrier& a, const std::vector<std::string>& xs);
// name of r: A->B is the relation point -> A*B with pairs {(*, (a,b))}.
Rel name_of_rel(const Rel& r, const Budget& budget = {});

bool is_subrelation(const Rel& inner, const Rel& outer);
Rel rel_union(const Rel& r, const Rel& s);
Rel rel_intersect(const Rel& r, const Rel& s);

struct RelFlags {
  bool is_function = false;     // total and single valued
  bool is_equivalence = false;  // endorelations only
  bool is_symmetric = false;    // endorelations only
  bool is_idempotent = false;   // endorelations only; r . r == r
};
RelFlags classify_relation(const Rel& r, const Budget& budget = {});

}  // namespace relkit::finrel
