#pragma once

// shared helpers for the test suites
#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orderforge/poset.hpp"

namespace tf {

using orderforge::Bits;
using orderforge::Poset;

inline Poset chain(int n) {
  std::vector<std::string> els;
  std::vector<std::pair<std::string, std::string>> rels;
  for (int i = 0; i < n; ++i) els.push_back("v" + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) rels.push_back({els[i], els[i + 1]});
  return Poset::from_relations(els, rels);
}

inline Poset antichain(int n) {
  std::vector<std::string> els;
  for (int i = 0; i < n; ++i) els.push_back("v" + std::to_string(i));
  return Poset::from_relations(els, {});
}

// Subset-model oracle for the Kelly poset on [n]: every element is a subset
// of {1..n}, order is containment. Identified chain endpoints use the a/b
// names (a1, b1, a<n>, b<n>).
struct KellyModel {
  int n;
  std::vector<std::string> names;
  std::vector<unsigned> mask;

  explicit KellyModel(int n_) : n(n_) {
    auto add = [&](const std::string& s, unsigned m) {
      names.push_back(s);
      mask.push_back(m);
    };
    unsigned all = (1u << n) - 1;
    for (int i = 1; i <= n; ++i) add("a" + std::to_string(i), 1u << (i - 1));
    for (int i = 1; i <= n; ++i) add("b" + std::to_string(i), all ^ (1u << (i - 1)));
    for (int i = 2; i <= n - 2; ++i) add("c" + std::to_string(i), (1u << i) - 1);
    for (int i = 2; i <= n - 2; ++i) add("d" + std::to_string(i), all ^ ((1u << i) - 1));
  }
  int count() const { return (int)names.size(); }
  bool less(int x, int y) const {
    return mask[x] != mask[y] && (mask[x] & mask[y]) == mask[x];
  }
  Poset poset() const {
    std::vector<std::pair<std::string, std::string>> rels;
    for (int x = 0; x < count(); ++x)
      for (int y = 0; y < count(); ++y)
        if (less(x, y)) rels.push_back({names[x], names[y]});
    return Poset::from_relations(names, rels);
  }
};

inline std::set<std::string> name_set(const Poset& p, const Bits& b) {
  std::set<std::string> out;
  b.for_each([&](int v) { out.insert(p.id(v)); });
  return out;
}

inline Bits bits_of(const Poset& p, const std::vector<std::string>& names) {
  Bits b(p.n());
  for (auto& s : names) b.set(p.index(s));
  return b;
}

}  // namespace tf
