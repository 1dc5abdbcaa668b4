#include "orderforge/poset.hpp"

#include <algorithm>
#include <deque>

namespace orderforge {

bool LinearExtension::extends(const Poset& p) const {
  if ((int)order.size() != p.n()) return false;
  std::vector<int> pos(p.n(), -1);
  for (int i = 0; i < (int)order.size(); ++i) {
    if (!p.has(order[i])) return false;
    int e = p.index(order[i]);
    if (pos[e] >= 0) return false;
    pos[e] = i;
  }
  for (int a = 0; a < p.n(); ++a)
    for (int b : p.cover_up()[a])
      if (pos[a] > pos[b]) return false;
  return true;
}

std::unordered_map<std::string, int> LinearExtension::positions() const {
  std::unordered_map<std::string, int> m;
  for (int i = 0; i < (int)order.size(); ++i) m.emplace(order[i], i);
  return m;
}

LinearExtension concat_extensions(const std::vector<LinearExtension>& ls) {
  LinearExtension out;
  std::unordered_map<std::string, int> seen;
  for (const auto& l : ls)
    for (const auto& id : l.order) {
      check(!seen.count(id), Err::OverlappingGroundSets, "element '" + id + "' in two ground sets");
      seen.emplace(id, 1);
      out.order.push_back(id);
    }
  return out;
}

int Poset::index(const std::string& id) const {
  auto it = index_.find(id);
  check(it != index_.end(), Err::UnknownElement, "no element '" + id + "'");
  return it->second;
}

Poset Poset::from_relations(const std::vector<std::string>& elements,
                            const std::vector<std::pair<std::string, std::string>>& relations) {
  Poset p;
  for (const auto& e : elements) {
    check(!p.index_.count(e), Err::DuplicateElement, "'" + e + "'");
    p.index_.emplace(e, (int)p.ids_.size());
    p.ids_.push_back(e);
  }
  int n = p.n();
  std::vector<Bits> step(n, Bits(n));  // generator arcs
  for (const auto& [x, y] : relations) {
    int a = p.index(x), b = p.index(y);
    check(a != b, Err::CycleDetected, "reflexive relation " + x + "<" + x);
    step[a].set(b);
  }
  // transitive closure, then cycle check via the diagonal
  p.lt_ = step;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.lt_[i].test(k)) p.lt_[i] |= p.lt_[k];
  for (int i = 0; i < n; ++i) {
    if (!p.lt_[i].test(i)) continue;
    // witness cycle: walk generator arcs from i back to i
    std::vector<int> cyc{i};
    int cur = i;
    while (true) {
      int nxt = -1;
      step[cur].for_each([&](int w) {
        if (nxt < 0 && (w == i || (p.lt_[w].test(i)))) nxt = w;
      });
      bug_check(nxt >= 0, "cycle witness walk stuck");
      if (nxt == i) break;
      cyc.push_back(nxt);
      cur = nxt;
    }
    std::string msg = "cycle:";
    for (int v : cyc) msg += " " + p.ids_[v];
    fail(Err::CycleDetected, msg);
  }
  p.finish();
  return p;
}

Poset Poset::from_lt(std::vector<std::string> ids, std::vector<Bits> lt) {
  Poset p;
  for (const auto& e : ids) {
    check(!p.index_.count(e), Err::DuplicateElement, "'" + e + "'");
    p.index_.emplace(e, (int)p.ids_.size());
    p.ids_.push_back(e);
  }
  p.lt_ = std::move(lt);
  for (int i = 0; i < p.n(); ++i) bug_check(!p.lt_[i].test(i), "lt not irreflexive");
  p.finish();
  return p;
}

void Poset::finish() {
  int n = this->n();
  up_.assign(n, Bits(n));
  dn_.assign(n, Bits(n));
  for (int a = 0; a < n; ++a) {
    up_[a] = lt_[a];
    lt_[a].for_each([&](int b) { dn_[b].set(a); });
  }
  covers_.clear();
  cov_up_.assign(n, {});
  cov_dn_.assign(n, {});
  // (a,b) is a cover iff a<b and up(a) ∩ dn(b) is empty
  for (int a = 0; a < n; ++a) {
    up_[a].for_each([&](int b) {
      Bits mid = up_[a];
      mid &= dn_[b];
      if (mid.none()) {
        covers_.push_back({a, b});
        cov_up_[a].push_back(b);
        cov_dn_[b].push_back(a);
      }
    });
  }
  std::sort(covers_.begin(), covers_.end());
  for (auto& v : cov_up_) std::sort(v.begin(), v.end());
  for (auto& v : cov_dn_) std::sort(v.begin(), v.end());
}

Bits Poset::upset(const Bits& s) const {
  Bits out = s;
  s.for_each([&](int x) { out |= up_[x]; });
  return out;
}

Bits Poset::downset(const Bits& s) const {
  Bits out = s;
  s.for_each([&](int x) { out |= dn_[x]; });
  return out;
}

Bits Poset::upset_of(int x) const {
  Bits b = up_[x];
  b.set(x);
  return b;
}

Bits Poset::downset_of(int x) const {
  Bits b = dn_[x];
  b.set(x);
  return b;
}

Bits Poset::minimals() const {
  Bits out(n());
  for (int i = 0; i < n(); ++i)
    if (dn_[i].none()) out.set(i);
  return out;
}

Bits Poset::maximals() const {
  Bits out(n());
  for (int i = 0; i < n(); ++i)
    if (up_[i].none()) out.set(i);
  return out;
}

int Poset::height() const {
  check(n() > 0, Err::EmptyPoset, "height of empty poset");
  // longest path in the cover DAG, counted in vertices
  std::vector<int> h(n(), -1);
  std::vector<int> order;
  order.reserve(n());
  {
    std::vector<int> indeg(n(), 0);
    for (auto& [a, b] : covers_) indeg[b]++;
    std::deque<int> q;
    for (int i = 0; i < n(); ++i)
      if (indeg[i] == 0) q.push_back(i);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      order.push_back(v);
      for (int w : cov_up_[v])
        if (--indeg[w] == 0) q.push_back(w);
    }
  }
  int best = 1;
  for (int v : order) {
    if (h[v] < 1) h[v] = 1;
    for (int w : cov_up_[v]) h[w] = std::max(h[w], h[v] + 1);
  }
  for (int v = 0; v < n(); ++v) best = std::max(best, h[v]);
  return best;
}

bool Poset::linear() const {
  for (int a = 0; a < n(); ++a)
    for (int b = a + 1; b < n(); ++b)
      if (incomp(a, b)) return false;
  return true;
}

bool Poset::is_convex(const Bits& members) const {
  for (int y = 0; y < n(); ++y) {
    if (members.test(y)) continue;
    if (dn_[y].intersects(members) && up_[y].intersects(members)) return false;
  }
  return true;
}

std::vector<int> Poset::witnessing_path(int x, int y) const {
  check(leq(x, y), Err::NotComparable, id(x) + " <= " + id(y) + " does not hold");
  if (x == y) return {x};
  // BFS upward from x; parent = smallest-index predecessor on a shortest path
  std::vector<int> dist(n(), -1), par(n(), -1);
  dist[x] = 0;
  std::deque<int> q{x};
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == y) break;
    for (int w : cov_up_[v]) {
      if (!leq(w, y)) continue;
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        par[w] = v;
        q.push_back(w);
      } else if (dist[w] == dist[v] + 1 && v < par[w]) {
        par[w] = v;
      }
    }
  }
  bug_check(dist[y] > 0, "no cover path despite comparability");
  std::vector<int> path;
  for (int v = y; v != -1; v = par[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

Graph Poset::cover_graph() const {
  Graph g;
  for (const auto& id : ids_) g.add_vertex(id);
  for (auto& [a, b] : covers_) g.add_edge(a, b);
  return g;
}

std::vector<Bits> Poset::poset_components() const {
  Graph g = cover_graph();
  std::vector<Bits> out;
  for (auto& comp : g.components()) {
    Bits b(n());
    for (int v : comp) b.set(v);
    out.push_back(b);
  }
  return out;
}

bool Poset::connected() const { return n() <= 1 || poset_components().size() == 1; }

Poset Poset::induced(const Bits& members) const {
  std::vector<std::string> ids;
  std::vector<int> keep = members.to_vector();
  ids.reserve(keep.size());
  for (int v : keep) ids.push_back(ids_[v]);
  std::vector<Bits> lt(keep.size(), Bits((int)keep.size()));
  for (int i = 0; i < (int)keep.size(); ++i)
    for (int j = 0; j < (int)keep.size(); ++j)
      if (less(keep[i], keep[j])) lt[i].set(j);
  return from_lt(std::move(ids), std::move(lt));
}

}  // namespace orderforge
