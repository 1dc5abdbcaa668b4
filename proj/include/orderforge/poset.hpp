#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orderforge/graph.hpp"
#include "orderforge/util.hpp"

namespace orderforge {

class Poset;

// A permutation of a poset's ground set, x < y in P implying x before y.
struct LinearExtension {
  std::vector<std::string> order;

  bool extends(const Poset& p) const;
  // position lookup for repeated queries
  std::unordered_map<std::string, int> positions() const;
};

// [L1 < L2 < ... < Lk] over pairwise disjoint ground sets.
LinearExtension concat_extensions(const std::vector<LinearExtension>& ls);

// Finite poset. Immutable after construction; elements keep input order
// and every deterministic tie-break below uses that order.
class Poset {
 public:
  Poset() = default;

  // `relations` are arbitrary x<y generators; the loader closes them
  // transitively and reduces to covers. Throws CycleDetected/DuplicateElement.
  static Poset from_relations(const std::vector<std::string>& elements,
                              const std::vector<std::pair<std::string, std::string>>& relations);

  // Direct construction from a strict, transitive, irreflexive table.
  static Poset from_lt(std::vector<std::string> ids, std::vector<Bits> lt);

  int n() const { return (int)ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }
  int index(const std::string& id) const;
  bool has(const std::string& id) const { return index_.count(id) != 0; }

  bool less(int a, int b) const { return lt_[a].test(b); }
  bool leq(int a, int b) const { return a == b || lt_[a].test(b); }
  bool incomp(int a, int b) const { return a != b && !less(a, b) && !less(b, a); }

  const Bits& up_strict(int a) const { return up_[a]; }
  const Bits& down_strict(int a) const { return dn_[a]; }

  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::vector<int>>& cover_up() const { return cov_up_; }
  const std::vector<std::vector<int>>& cover_down() const { return cov_dn_; }

  Bits upset(const Bits& s) const;
  Bits downset(const Bits& s) const;
  Bits upset_of(int x) const;
  Bits downset_of(int x) const;

  Bits minimals() const;
  Bits maximals() const;

  int height() const;  // size of a largest chain; EmptyPoset if n()==0

  bool linear() const;  // linearly ordered?

  // Convexity of an induced subposet: x<y<z with x,z inside forces y inside.
  bool is_convex(const Bits& members) const;

  // Shortest cover path from x to y (x <= y), ties broken by input order.
  std::vector<int> witnessing_path(int x, int y) const;

  Graph cover_graph() const;

  // Components of the cover graph as element sets.
  std::vector<Bits> poset_components() const;
  bool connected() const;

  // Induced subposet; ids and relative order preserved.
  Poset induced(const Bits& members) const;

  bool is_linear_extension(const LinearExtension& l) const { return l.extends(*this); }

 private:
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<Bits> lt_;  // lt_[a].test(b) iff a < b
  std::vector<Bits> up_, dn_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> cov_up_, cov_dn_;

  void finish();  // fills up_/dn_/covers_ from lt_
};

// View of an induced subposet; convexity etc. are queried on the parent.
struct SubposetView {
  const Poset* parent = nullptr;
  Bits members;

  Poset induced() const { return parent->induced(members); }
  bool convex() const { return parent->is_convex(members); }
};

}  // namespace orderforge
