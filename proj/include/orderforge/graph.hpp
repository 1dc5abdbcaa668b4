#pragma once

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orderforge/util.hpp"

namespace orderforge {

// Simple undirected graph with string vertex ids. Neighbor lists keep
// insertion order; all iteration is deterministic.
struct Graph {
  std::vector<std::string> ids;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> adj;
  std::vector<std::pair<int, int>> edges;  // u < v not required; insertion order

  int n() const { return (int)ids.size(); }
  int m() const { return (int)edges.size(); }

  int add_vertex(const std::string& id) {
    auto it = index.find(id);
    if (it != index.end()) return it->second;
    index.emplace(id, (int)ids.size());
    ids.push_back(id);
    adj.emplace_back();
    return (int)ids.size() - 1;
  }
  int at(const std::string& id) const {
    auto it = index.find(id);
    check(it != index.end(), Err::UnknownElement, "no vertex '" + id + "'");
    return it->second;
  }
  bool has_vertex(const std::string& id) const { return index.count(id) != 0; }
  bool has_edge(int u, int v) const {
    for (int w : adj[u])
      if (w == v) return true;
    return false;
  }
  void add_edge(int u, int v) {
    check(u != v, Err::BadInput, "self loop");
    if (has_edge(u, v)) return;
    adj[u].push_back(v);
    adj[v].push_back(u);
    edges.push_back({u, v});
  }
  int degree(int v) const { return (int)adj[v].size(); }

  std::vector<std::vector<int>> components() const;
  bool connected() const { return n() <= 1 || components().size() == 1; }

  // Subgraph induced on `keep` (vertex ids preserved).
  Graph induced(const Bits& keep) const;
};

}  // namespace orderforge
