#include "orderforge/dimension.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

namespace orderforge {

IncPairSet IncPairSet::all(const Poset& p) {
  IncPairSet s;
  s.p = &p;
  for (int a = 0; a < p.n(); ++a)
    for (int b = 0; b < p.n(); ++b)
      if (a != b && p.incomp(a, b)) s.pairs.push_back({a, b});
  return s;
}

IncPairSet IncPairSet::minmax(const Poset& p) {
  return between(p, p.minimals(), p.maximals());
}

IncPairSet IncPairSet::between(const Poset& p, const Bits& A, const Bits& B) {
  IncPairSet s;
  s.p = &p;
  A.for_each([&](int a) {
    B.for_each([&](int b) {
      if (a != b && p.incomp(a, b)) s.pairs.push_back({a, b});
    });
  });
  return s;
}

IncPairSet IncPairSet::of(const Poset& p, std::vector<std::pair<int, int>> pairs) {
  std::set<std::pair<int, int>> seen;
  for (auto& [a, b] : pairs) {
    check(a >= 0 && b >= 0 && a < p.n() && b < p.n(), Err::UnknownElement, "pair out of range");
    check(p.incomp(a, b), Err::BadInput,
          "pair (" + p.id(a) + "," + p.id(b) + ") is not incomparable");
    check(seen.insert({a, b}).second, Err::BadInput, "duplicate pair");
  }
  IncPairSet s;
  s.p = &p;
  s.pairs = std::move(pairs);
  return s;
}

IncPairSet IncPairSet::subset(const std::vector<int>& idx) const {
  IncPairSet s;
  s.p = p;
  for (int i : idx) s.pairs.push_back(pairs[i]);
  return s;
}

// ---- reversibility -------------------------------------------------------

namespace {

// linear extension of p reversing the given pairs; assumes acyclicity
LinearExtension reversing_extension(const Poset& p, const std::vector<std::pair<int, int>>& rev) {
  int n = p.n();
  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto& [a, b] : p.covers()) {
    succ[a].push_back(b);
    indeg[b]++;
  }
  for (auto& [a, b] : rev) {  // reverse (a,b): force b before a
    succ[b].push_back(a);
    indeg[a]++;
  }
  std::priority_queue<int, std::vector<int>, std::greater<int>> q;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) q.push(v);
  LinearExtension l;
  while (!q.empty()) {
    int v = q.top();
    q.pop();
    l.order.push_back(p.id(v));
    for (int w : succ[v])
      if (--indeg[w] == 0) q.push(w);
  }
  bug_check((int)l.order.size() == n, "reversing extension of an acyclic set did not close");
  return l;
}

// pair digraph: arc i -> j iff a_i <= b_j in P (i != j)
std::vector<Bits> pair_digraph(const IncPairSet& I) {
  int m = I.size();
  std::vector<Bits> succ(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && I.p->leq(I.pairs[i].first, I.pairs[j].second)) succ[i].set(j);
  return succ;
}

}  // namespace

ReversibilityResult is_reversible(const IncPairSet& I) {
  ReversibilityResult r;
  auto succ = pair_digraph(I);
  int m = I.size();
  // cycle detection with stack extraction
  std::vector<int> state(m, 0), par(m, -1);
  int cyc_from = -1, cyc_to = -1;
  std::vector<int> order;
  std::function<void(int)> dfs = [&](int v) {
    state[v] = 1;
    succ[v].for_each([&](int w) {
      if (cyc_from >= 0) return;
      if (state[w] == 0) {
        par[w] = v;
        dfs(w);
      } else if (state[w] == 1) {
        cyc_from = v;
        cyc_to = w;
      }
    });
    state[v] = 2;
  };
  for (int v = 0; v < m && cyc_from < 0; ++v)
    if (state[v] == 0) dfs(v);
  if (cyc_from < 0) {
    r.reversible = true;
    r.extension = reversing_extension(*I.p, I.pairs);
    return r;
  }
  std::vector<int> cyc;
  for (int v = cyc_from; v != cyc_to; v = par[v]) cyc.push_back(v);
  cyc.push_back(cyc_to);
  std::reverse(cyc.begin(), cyc.end());
  for (int i : cyc) r.alternating_cycle.push_back(I.pairs[i]);
  for (int i : cyc) {
    r.element_cycle.push_back(I.p->id(I.pairs[i].second));
    r.element_cycle.push_back(I.p->id(I.pairs[i].first));
  }
  r.element_cycle.push_back(r.element_cycle.front());
  return r;
}

// ---- exact dimension solver ----------------------------------------------

namespace {

struct DimSolver {
  const IncPairSet& I;
  Budget* budget;
  int m;
  std::vector<Bits> succ, pred, conf;
  std::vector<int> order;          // pair indices, most conflicted first
  std::vector<int> cls;            // order position -> class
  std::vector<std::vector<int>> class_members;  // class -> order positions
  long long nodes = 0;

  DimSolver(const IncPairSet& I_, Budget* b) : I(I_), budget(b), m(I_.size()) {
    succ = pair_digraph(I);
    pred.assign(m, Bits(m));
    conf.assign(m, Bits(m));
    for (int i = 0; i < m; ++i)
      succ[i].for_each([&](int j) { pred[j].set(i); });
    for (int i = 0; i < m; ++i) {
      conf[i] = succ[i];
      conf[i] &= pred[i];
    }
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return conf[x].count() > conf[y].count();
    });
  }

  int clique_lower_bound() const {
    // greedy clique in the 2-cycle conflict graph
    Bits cand = Bits::full(m);
    int size = 0;
    for (int i : order) {
      if (!cand.test(i)) continue;
      ++size;
      cand &= conf[i];
    }
    return std::max(size, m > 0 ? 1 : 0);
  }

  // would adding pair q to class c close a directed cycle through q?
  bool insert_ok(int q, const Bits& members) const {
    Bits start = succ[q];
    start &= members;
    if (!start.any()) return true;
    Bits targets = pred[q];
    targets &= members;
    if (!targets.any()) return true;
    if (start.intersects(targets)) return false;
    Bits seen = start;
    std::vector<int> work = start.to_vector();
    while (!work.empty()) {
      int v = work.back();
      work.pop_back();
      Bits nxt = succ[v];
      nxt &= members;
      nxt.subtract(seen);
      if (nxt.intersects(targets)) return false;
      nxt.for_each([&](int w) { work.push_back(w); });
      seen |= nxt;
    }
    return true;
  }

  bool solve(int pos, int d, std::vector<Bits>& members, int opened) {
    if (pos == m) return true;
    if (budget) budget->tick();
    ++nodes;
    int q = order[pos];
    int limit = std::min(opened + 1, d);
    for (int c = 0; c < limit; ++c) {
      if (conf[q].intersects(members[c])) continue;
      if (!insert_ok(q, members[c])) continue;
      members[c].set(q);
      int new_opened = std::max(opened, c + 1);
      if (solve(pos + 1, d, members, new_opened)) {
        cls[pos] = c;
        return true;
      }
      members[c].reset(q);
    }
    return false;
  }

  DimResult run() {
    DimResult res;
    if (m == 0) return res;
    int lb = clique_lower_bound();
    for (int d = lb;; ++d) {
      std::vector<Bits> members(d, Bits(m));
      cls.assign(m, -1);
      if (solve(0, d, members, 0)) {
        res.d = d;
        res.nodes = nodes;
        res.realizer.classes.assign(d, {});
        for (int pos = 0; pos < m; ++pos) res.realizer.classes[cls[pos]].push_back(order[pos]);
        for (auto& c : res.realizer.classes) std::sort(c.begin(), c.end());
        for (auto& c : res.realizer.classes) {
          std::vector<std::pair<int, int>> rev;
          for (int i : c) rev.push_back(I.pairs[i]);
          res.realizer.extensions.push_back(reversing_extension(*I.p, rev));
        }
        return res;
      }
    }
  }
};

}  // namespace

DimResult dim_of(const IncPairSet& I, Budget* budget) {
  DimSolver s(I, budget);
  DimResult r = s.run();
  // replay: every class must be reversible and reversed by its extension
  for (size_t c = 0; c < r.realizer.classes.size(); ++c) {
    auto pos = r.realizer.extensions[c].positions();
    bug_check(r.realizer.extensions[c].extends(*I.p), "realizer extension is not a linear extension");
    for (int i : r.realizer.classes[c]) {
      auto [a, b] = I.pairs[i];
      bug_check(pos[I.p->id(b)] < pos[I.p->id(a)], "realizer class not reversed by its extension");
    }
  }
  return r;
}

int dim_between(const Poset& p, const Bits& A, const Bits& B, Budget* budget) {
  return dim_of(IncPairSet::between(p, A, B), budget).d;
}

int dim_poset(const Poset& p, Budget* budget) {
  check(p.n() > 0, Err::EmptyPoset, "dimension of the empty poset");
  if (p.linear()) return 1;
  return dim_of(IncPairSet::all(p), budget).d;
}

// ---- largest standard example --------------------------------------------

bool is_standard_example(const Poset& p, const std::vector<std::pair<int, int>>& pairs) {
  int n = (int)pairs.size();
  std::set<int> used;
  for (auto& [a, b] : pairs) {
    if (!p.incomp(a, b)) return false;
    if (!used.insert(a).second || !used.insert(b).second) return false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && !p.less(pairs[i].first, pairs[j].second)) return false;
  return true;
}

namespace {

struct CliqueSolver {
  int m;
  std::vector<Bits> compat;
  Budget* budget;
  std::vector<int> best;
  std::vector<int> cur;

  void grow(const Bits& cand) {
    if (budget) budget->tick();
    if ((int)cur.size() > (int)best.size()) best = cur;
    if ((int)cur.size() + cand.count() <= (int)best.size()) return;
    std::vector<int> cs = cand.to_vector();
    for (size_t k = 0; k < cs.size(); ++k) {
      if ((int)(cur.size() + cs.size() - k) <= (int)best.size()) return;
      int v = cs[k];
      cur.push_back(v);
      Bits nc = cand;
      nc &= compat[v];
      for (size_t t = 0; t <= k; ++t) nc.reset(cs[t]);
      grow(nc);
      cur.pop_back();
    }
  }
};

}  // namespace

std::pair<int, StandardExample> rho(const IncPairSet& I, Budget* budget) {
  check(I.size() > 0, Err::EmptyInput, "rho of an empty pair set");
  int m = I.size();
  CliqueSolver cs;
  cs.m = m;
  cs.budget = budget;
  cs.compat.assign(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && I.p->less(I.pairs[i].first, I.pairs[j].second) &&
          I.p->less(I.pairs[j].first, I.pairs[i].second))
        cs.compat[i].set(j);
  cs.grow(Bits::full(m));
  StandardExample se;
  std::sort(cs.best.begin(), cs.best.end());
  for (int i : cs.best) se.pairs.push_back(I.pairs[i]);
  bug_check(is_standard_example(*I.p, se.pairs), "rho witness is not a standard example");
  return {(int)se.pairs.size(), se};
}

// ---- Kelly subposet search ------------------------------------------------

std::vector<int> KellyWitness::elements(const Poset&) const {
  std::vector<int> out;
  for (int i = 1; i <= n; ++i) out.push_back(a[i]);
  for (int i = 1; i <= n; ++i) out.push_back(b[i]);
  for (int i = 2; i <= n - 2; ++i) out.push_back(c[i]);
  for (int i = 2; i <= n - 2; ++i) out.push_back(d[i]);
  return out;
}

bool verify_kelly_witness(const Poset& p, const KellyWitness& w) {
  int n = w.n;
  if (n < 3) return false;
  if ((int)w.a.size() != n + 1 || (int)w.b.size() != n + 1) return false;
  if ((int)w.c.size() != n || (int)w.d.size() != n) return false;
  if (w.c[1] != w.a[1] || w.c[n - 1] != w.b[n] || w.d[1] != w.b[1] || w.d[n - 1] != w.a[n])
    return false;
  // subset-model oracle for the pattern
  auto msk = [&](char role, int i) -> unsigned {
    unsigned all = (1u << n) - 1;
    switch (role) {
      case 'a': return 1u << (i - 1);
      case 'b': return all ^ (1u << (i - 1));
      case 'c': return (1u << i) - 1;
      default: return all ^ ((1u << i) - 1);
    }
  };
  std::vector<std::pair<unsigned, int>> roles;
  for (int i = 1; i <= n; ++i) roles.push_back({msk('a', i), w.a[i]});
  for (int i = 1; i <= n; ++i) roles.push_back({msk('b', i), w.b[i]});
  for (int i = 2; i <= n - 2; ++i) roles.push_back({msk('c', i), w.c[i]});
  for (int i = 2; i <= n - 2; ++i) roles.push_back({msk('d', i), w.d[i]});
  std::set<int> used;
  for (auto& [mask, e] : roles) {
    if (e < 0 || e >= p.n()) return false;
    if (!used.insert(e).second) return false;
  }
  for (auto& [mx, x] : roles)
    for (auto& [my, y] : roles) {
      if (x == y) continue;
      bool model_less = mx != my && (mx & my) == mx;
      if (model_less != p.less(x, y)) return false;
    }
  return true;
}

int kappa_cap(const Poset& p) { return (p.n() + 6) / 4; }

namespace {

struct KellySearch {
  const Poset& p;
  Budget* budget;
  int n;  // target size
  std::vector<std::pair<int, int>> pairs;  // candidate SE pairs
  std::vector<Bits> compat;
  std::optional<KellyWitness> found;

  KellySearch(const Poset& p_, Budget* b, int n_) : p(p_), budget(b), n(n_) {}

  bool chains_extend(const std::vector<int>& a, const std::vector<int>& b, KellyWitness& w) {
    // pick c_2..c_{n-2} ascending, then d_2..d_{n-2} descending
    int V = p.n();
    Bits used(V);
    for (int i = 1; i <= n; ++i) {
      used.set(a[i]);
      used.set(b[i]);
    }
    auto c_ok = [&](int i, int z) {
      if (used.test(z)) return false;
      for (int j = 1; j <= n; ++j) {
        bool want = j <= i;
        if ((p.less(a[j], z)) != want) return false;
        if (p.less(z, a[j])) return false;
        bool want2 = j >= i + 1;
        if ((p.less(z, b[j])) != want2) return false;
        if (p.less(b[j], z)) return false;
      }
      return true;
    };
    auto d_ok = [&](int i, int z) {
      if (used.test(z)) return false;
      for (int j = 1; j <= n; ++j) {
        bool want = j >= i + 1;
        if ((p.less(a[j], z)) != want) return false;
        if (p.less(z, a[j])) return false;
        bool want2 = j <= i;
        if ((p.less(z, b[j])) != want2) return false;
        if (p.less(b[j], z)) return false;
      }
      return true;
    };
    std::vector<int> c(n, -1), d(n, -1);
    // chain-end relations (c_1=a_1 < c_2, c_{n-2} < c_{n-1}=b_n and the d
    // duals) are already part of the c_ok/d_ok patterns
    std::function<bool(int)> pick_d = [&](int i) -> bool {
      if (i > n - 2) return true;
      for (int z = 0; z < V; ++z) {
        if (!d_ok(i, z)) continue;
        if (i > 2 && !p.less(z, d[i - 1])) continue;  // descending chain
        bool ok = true;
        for (int j = 2; j <= n - 2 && ok; ++j)
          if (!p.incomp(z, c[j])) ok = false;
        if (!ok) continue;
        if (budget) budget->tick();
        d[i] = z;
        used.set(z);
        if (pick_d(i + 1)) return true;
        used.reset(z);
        d[i] = -1;
      }
      return false;
    };
    std::function<bool(int)> pick_c = [&](int i) -> bool {
      if (i > n - 2) return pick_d(2);
      for (int z = 0; z < V; ++z) {
        if (!c_ok(i, z)) continue;
        if (i > 2 && !p.less(c[i - 1], z)) continue;  // ascending chain
        if (budget) budget->tick();
        c[i] = z;
        used.set(z);
        if (pick_c(i + 1)) return true;
        used.reset(z);
        c[i] = -1;
      }
      return false;
    };
    if (n == 3) {
      // no free chain elements; identifications only
      w = make_witness(a, b, c, d);
      return verify_kelly_witness(p, w);
    }
    if (!pick_c(2)) return false;
    w = make_witness(a, b, c, d);
    bug_check(verify_kelly_witness(p, w), "chain extension produced an invalid witness");
    return true;
  }

  KellyWitness make_witness(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& c, const std::vector<int>& d) {
    KellyWitness w;
    w.n = n;
    w.a.assign(n + 1, -1);
    w.b.assign(n + 1, -1);
    w.c.assign(n, -1);
    w.d.assign(n, -1);
    for (int i = 1; i <= n; ++i) w.a[i] = a[i];
    for (int i = 1; i <= n; ++i) w.b[i] = b[i];
    for (int i = 2; i <= n - 2; ++i) w.c[i] = c[i];
    for (int i = 2; i <= n - 2; ++i) w.d[i] = d[i];
    w.c[1] = a[1];
    w.c[n - 1] = b[n];
    w.d[1] = b[1];
    w.d[n - 1] = a[n];
    return w;
  }

  // enumerate size-n cliques in the SE compatibility graph, then orderings
  bool clique(std::vector<int>& cur, const Bits& cand) {
    if ((int)cur.size() == n) return try_orderings(cur);
    if ((int)cur.size() + cand.count() < n) return false;
    std::vector<int> cs = cand.to_vector();
    for (size_t k = 0; k < cs.size(); ++k) {
      if ((int)(cur.size() + cs.size() - k) < n) return false;
      if (budget) budget->tick();
      cur.push_back(cs[k]);
      Bits nc = cand;
      nc &= compat[cs[k]];
      for (size_t t = 0; t <= k; ++t) nc.reset(cs[t]);
      if (clique(cur, nc)) return true;
      cur.pop_back();
    }
    return false;
  }

  bool try_orderings(const std::vector<int>& cl) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (budget) budget->tick();
      std::vector<int> a(n + 1), b(n + 1);
      for (int i = 1; i <= n; ++i) {
        a[i] = pairs[cl[perm[i - 1]]].first;
        b[i] = pairs[cl[perm[i - 1]]].second;
      }
      KellyWitness w;
      if (chains_extend(a, b, w)) {
        found = w;
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
  }

  bool run() {
    IncPairSet inc = IncPairSet::all(p);
    pairs = inc.pairs;
    int m = (int)pairs.size();
    compat.assign(m, Bits(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j && p.less(pairs[i].first, pairs[j].second) &&
            p.less(pairs[j].first, pairs[i].second))
          compat[i].set(j);
    std::vector<int> cur;
    return clique(cur, Bits::full(m));
  }
};

}  // namespace

std::pair<int, std::optional<KellyWitness>> kappa(const Poset& p, int n_max, Budget* budget) {
  if (n_max < 0) n_max = kappa_cap(p);
  check(n_max >= 3, Err::PreconditionFailed, "kappa needs n_max >= 3");
  for (int n = n_max; n >= 3; --n) {
    if (4 * n - 6 > p.n()) continue;
    KellySearch ks(p, budget, n);
    if (ks.run()) return {n, ks.found};
  }
  return {2, std::nullopt};
}

// ---- bound formulas --------------------------------------------------------

long long bound_f(long long k) {
  check(k >= 1, Err::NonPositive, "f(k) needs k >= 1");
  check(k <= 100000, Err::BadInput, "k out of supported range");
  long long base = 360 * (4 * k + 7);
  return 4 * k * base * base;
}

long long bound_height(long long h) {
  check(h >= 1, Err::NonPositive, "height bound needs h >= 1");
  return 2 * bound_f(2 * h - 1);
}

}  // namespace orderforge
