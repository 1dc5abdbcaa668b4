#include "orderforge/graph.hpp"

namespace orderforge {

std::vector<std::vector<int>> Graph::components() const {
  std::vector<int> comp(n(), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n(); ++s) {
    if (comp[s] >= 0) continue;
    int c = (int)out.size();
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = c;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[c].push_back(v);
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = c;
          stack.push_back(w);
        }
    }
  }
  return out;
}

Graph Graph::induced(const Bits& keep) const {
  Graph h;
  for (int v = 0; v < n(); ++v)
    if (keep.test(v)) h.add_vertex(ids[v]);
  for (auto [u, v] : edges)
    if (keep.test(u) && keep.test(v)) h.add_edge(h.at(ids[u]), h.at(ids[v]));
  return h;
}

}  // namespace orderforge
