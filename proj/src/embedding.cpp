#include "orderforge/embedding.hpp"

#include <algorithm>
#include <numeric>

namespace orderforge {

FaceSet Embedding::faces() const {
  FaceSet fs;
  for (int v = 0; v < g.n(); ++v) {
    for (int u : rot[v]) {
      if (fs.face_of.count(dekey(u, v))) continue;
      int f = fs.n_faces();
      fs.walks.emplace_back();
      DEdge e{u, v};
      do {
        fs.face_of.emplace(dekey(e), f);
        fs.walks[f].push_back(e);
        e = face_next(e);
        bug_check((int)fs.walks[f].size() <= 4 * g.m() + 4, "face walk does not close");
      } while (e != fs.walks[f].front());
    }
  }
  return fs;
}

EmbedDiag Embedding::validate_structure() const {
  EmbedDiag d;
  auto bad = [&](const std::string& p) {
    d.ok = false;
    d.problem = p;
    return d;
  };
  if ((int)rot.size() != g.n()) return bad("rotation table size mismatch");
  for (int v = 0; v < g.n(); ++v) {
    if (rot[v].size() != g.adj[v].size())
      return bad("EdgeMissingFromRotation: at '" + g.ids[v] + "'");
    std::vector<int> a = g.adj[v], r = rot[v];
    std::sort(a.begin(), a.end());
    std::sort(r.begin(), r.end());
    if (a != r) return bad("rotation at '" + g.ids[v] + "' is not a permutation of its neighbours");
    for (size_t i = 1; i < r.size(); ++i)
      if (r[i] == r[i - 1]) return bad("repeated neighbour in rotation at '" + g.ids[v] + "'");
  }
  FaceSet fs = faces();
  if ((int)fs.face_of.size() != 2 * g.m()) return bad("face incidences != 2|E|");
  for (auto& comp : g.components()) {
    if (comp.size() == 1 && g.adj[comp[0]].empty()) continue;
    Bits in(g.n());
    for (int v : comp) in.set(v);
    int E = 0;
    for (auto& [u, v] : g.edges)
      if (in.test(u)) ++E;
    std::vector<char> seen(fs.n_faces(), 0);
    int F = 0;
    for (int v : comp)
      for (int u : rot[v]) {
        int f = fs.face(u, v);
        if (!seen[f]) {
          seen[f] = 1;
          ++F;
        }
      }
    if ((int)comp.size() - E + F != 2)
      return bad("Euler check failed on component of '" + g.ids[comp[0]] + "'");
  }
  return d;
}

EmbedDiag Embedding::validate() const {
  EmbedDiag d = validate_structure();
  if (!d.ok) return d;
  auto bad = [&](const std::string& p) {
    d.ok = false;
    d.problem = p;
    return d;
  };
  if (g.m() > 0 && outer_anchors.empty()) return bad("no exterior face designated");
  auto comps = g.components();
  std::vector<int> comp_of(g.n(), -1);
  for (int c = 0; c < (int)comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = c;
  std::vector<char> used(comps.size(), 0);
  for (auto [u, v] : outer_anchors) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v))
      return bad("exterior anchor is not an edge");
    if (used[comp_of[u]]) return bad("two exterior anchors in one component");
    used[comp_of[u]] = 1;
  }
  for (auto& [v, a] : floating) {
    if (!g.adj[v].empty()) return bad("floating vertex '" + g.ids[v] + "' is not isolated");
    if (!g.has_edge(a.first, a.second)) return bad("floating anchor is not an edge");
  }
  return d;
}

std::vector<int> Embedding::exterior_faces(const FaceSet& fs) const {
  std::vector<int> out;
  for (auto [u, v] : outer_anchors) out.push_back(fs.face(u, v));
  return out;
}

Bits Embedding::exterior_vertices() const {
  FaceSet fs = faces();
  Bits out(g.n());
  for (int f : exterior_faces(fs))
    for (auto& e : fs.walks[f]) out.set(e.first);
  Bits afloat(g.n());
  for (auto& [v, a] : floating) afloat.set(v);
  for (int v = 0; v < g.n(); ++v)
    if (g.adj[v].empty() && !afloat.test(v)) out.set(v);
  return out;
}

bool Embedding::clockwise(int v, int a, int b, int c) const {
  int pa = rot_pos(v, a);
  int d = (int)rot[v].size();
  for (int i = 1; i < d; ++i) {
    int w = rot[v][(pa + i) % d];
    if (w == b) return true;
    if (w == c) return false;
  }
  fail(Err::InvalidEmbedding, "clockwise query with missing neighbours");
}

int Embedding::add_pendant(int v, const std::string& nid, int pos) {
  check(!g.has_vertex(nid), Err::DuplicateElement, "'" + nid + "'");
  int nv = g.add_vertex(nid);
  rot.emplace_back();
  rot[nv] = {v};
  int d = (int)rot[v].size();
  g.add_edge(v, nv);
  if (d == 0)
    rot[v] = {nv};
  else
    rot[v].insert(rot[v].begin() + ((pos + 1) % d == 0 ? d : (pos + 1) % d), nv);
  return nv;
}

int Embedding::add_pendant_exterior(int v, const std::string& nid) {
  if (g.adj[v].empty()) {
    Bits ext = exterior_vertices();
    check(ext.test(v), Err::InvalidEmbedding, "'" + g.ids[v] + "' is not on the exterior face");
    int nv = add_pendant(v, nid, 0);
    outer_anchors.push_back({v, nv});
    return nv;
  }
  FaceSet fs = faces();
  for (int f : exterior_faces(fs))
    for (auto& [u, w] : fs.walks[f])
      if (w == v) return add_pendant(v, nid, rot_pos(v, u));
  fail(Err::InvalidEmbedding, "'" + g.ids[v] + "' is not on the exterior face");
}

int Embedding::add_pendant_default(int v, const std::string& nid) { return add_pendant(v, nid, 0); }

int Embedding::add_vertex_in_face(int f, const std::vector<int>& attach, const std::string& nid) {
  check(!attach.empty(), Err::BadInput, "no attachment vertices");
  check(!g.has_vertex(nid), Err::DuplicateElement, "'" + nid + "'");
  FaceSet fs = faces();
  check(f >= 0 && f < fs.n_faces(), Err::BadInput, "no such face");
  std::vector<std::pair<int, int>> corners;  // (walk position, vertex)
  {
    std::vector<char> want(g.n(), 0), done(g.n(), 0);
    for (int a : attach) {
      check(a >= 0 && a < g.n(), Err::UnknownElement, "attachment out of range");
      want[a] = 1;
    }
    for (int i = 0; i < (int)fs.walks[f].size(); ++i) {
      int v = fs.walks[f][i].second;
      if (want[v] && !done[v]) {
        done[v] = 1;
        corners.push_back({i, v});
      }
    }
    for (int a : attach)
      check(done[a], Err::InvalidEmbedding, "'" + g.ids[a] + "' not on the chosen face");
  }
  std::sort(corners.begin(), corners.end());
  int nv = g.add_vertex(nid);
  rot.emplace_back();
  for (auto& [p, v] : corners) g.add_edge(nv, v);
  auto apply = [&](bool reversed) {
    std::vector<int> order;
    for (auto& [p, v] : corners) order.push_back(v);
    if (reversed) std::reverse(order.begin(), order.end());
    rot[nv] = order;
    for (auto& [p, v] : corners) {
      int u = fs.walks[f][p].first;
      int pos = rot_pos(v, u);
      rot[v].insert(rot[v].begin() + pos + 1, nv);
    }
  };
  auto undo = [&]() {
    for (auto& [p, v] : corners) {
      auto& r = rot[v];
      r.erase(std::find(r.begin(), r.end(), nv));
    }
  };
  apply(false);
  if (attach.size() > 2 && !validate_structure().ok) {
    undo();
    apply(true);
  }
  bug_check(validate_structure().ok, "face insertion broke the embedding");
  return nv;
}

// ---- PlanarSnapshot ------------------------------------------------------

namespace {
struct UF {
  std::vector<int> p;
  explicit UF(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(int a, int b) { p[find(a)] = find(b); }
};
}  // namespace

PlanarSnapshot PlanarSnapshot::from(const Embedding& e) {
  e.require_valid();
  PlanarSnapshot s;
  s.g = e.g;
  s.rot = e.rot;
  s.fs = e.faces();
  s.region_of_face.assign(s.fs.n_faces(), -1);
  s.region_of_isolated.assign(s.g.n(), -1);
  int next = 0;
  s.ext_region = next++;  // the unbounded region always exists
  for (int f : e.exterior_faces(s.fs)) s.region_of_face[f] = s.ext_region;
  for (int f = 0; f < s.fs.n_faces(); ++f)
    if (s.region_of_face[f] < 0) s.region_of_face[f] = next++;
  s.n_regions = next;
  Bits afloat(s.g.n());
  for (auto& [v, a] : e.floating) {
    s.region_of_isolated[v] = s.region_of_face[s.fs.face(a.first, a.second)];
    afloat.set(v);
  }
  for (int v = 0; v < s.g.n(); ++v)
    if (s.g.adj[v].empty() && !afloat.test(v)) s.region_of_isolated[v] = s.ext_region;
  return s;
}

Bits PlanarSnapshot::exterior_vertices() const {
  Bits out(g.n());
  for (int f = 0; f < fs.n_faces(); ++f)
    if (region_of_face[f] == ext_region)
      for (auto& e : fs.walks[f]) out.set(e.first);
  for (int v = 0; v < g.n(); ++v)
    if (g.adj[v].empty() && region_of_isolated[v] == ext_region) out.set(v);
  return out;
}

PlanarSnapshot PlanarSnapshot::erase(const Bits& del, std::vector<int>* deleted_region) const {
  UF uf(n_regions);
  del.for_each([&](int v) {
    check(v < g.n(), Err::UnknownElement, "erase out of range");
    if (g.adj[v].empty()) return;
    int first = -1;
    for (int u : rot[v]) {
      for (DEdge e : {DEdge{u, v}, DEdge{v, u}}) {
        int r = region_of_face[fs.face(e.first, e.second)];
        if (first < 0)
          first = r;
        else
          uf.unite(first, r);
      }
    }
  });

  PlanarSnapshot s;
  Bits keep = Bits::full(g.n());
  keep.subtract(del);
  std::vector<int> newidx(g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if (keep.test(v)) newidx[v] = s.g.add_vertex(g.ids[v]);
  for (auto& [u, v] : g.edges)
    if (keep.test(u) && keep.test(v)) s.g.add_edge(newidx[u], newidx[v]);
  s.rot.assign(s.g.n(), {});
  std::vector<int> oldidx(s.g.n(), -1);
  for (int v = 0; v < g.n(); ++v)
    if (keep.test(v)) oldidx[newidx[v]] = v;
  for (int v = 0; v < g.n(); ++v) {
    if (!keep.test(v)) continue;
    for (int u : rot[v])
      if (keep.test(u)) s.rot[newidx[v]].push_back(newidx[u]);
  }
  {
    Embedding tmp;
    tmp.g = s.g;
    tmp.rot = s.rot;
    s.fs = tmp.faces();
  }

  std::vector<int> rep(n_regions, -1);
  int next = 0;
  auto compact = [&](int old_root) {
    if (rep[old_root] < 0) rep[old_root] = next++;
    return rep[old_root];
  };
  // keep the exterior first so its id is stable
  int ext_root = uf.find(ext_region);
  compact(ext_root);

  s.region_of_face.assign(s.fs.n_faces(), -1);
  for (int f = 0; f < s.fs.n_faces(); ++f) {
    auto [nu, nv] = s.fs.walks[f].front();
    int r = uf.find(region_of_face[fs.face(oldidx[nu], oldidx[nv])]);
    s.region_of_face[f] = compact(r);
    for (auto& [na, nb] : s.fs.walks[f])
      bug_check(uf.find(region_of_face[fs.face(oldidx[na], oldidx[nb])]) == r,
                "merged regions disagree along one face walk");
  }
  s.region_of_isolated.assign(s.g.n(), -1);
  for (int nv = 0; nv < s.g.n(); ++nv) {
    if (!s.g.adj[nv].empty()) continue;
    int v = oldidx[nv];
    int r;
    if (g.adj[v].empty())
      r = uf.find(region_of_isolated[v]);
    else
      r = uf.find(region_of_face[fs.face(rot[v][0], v)]);
    s.region_of_isolated[nv] = compact(r);
  }
  s.ext_region = rep[ext_root];
  s.n_regions = next;
  if (s.g.m() == 0) {
    // nothing bounds anything any more: one region
    for (auto& r : s.region_of_isolated)
      if (r >= 0) r = s.ext_region;
  }
  if (deleted_region) {
    deleted_region->assign(g.n(), -1);
    del.for_each([&](int v) {
      int r;
      if (g.adj[v].empty())
        r = uf.find(region_of_isolated[v]);
      else
        r = uf.find(region_of_face[fs.face(rot[v][0], v)]);
      int c = rep[r];
      if (c < 0) {
        bug_check(s.g.m() == 0, "deleted vertex region lost its boundary");
        c = s.ext_region;
      }
      if (s.g.m() == 0) c = s.ext_region;
      (*deleted_region)[v] = c;
    });
  }
  return s;
}

Embedding PlanarSnapshot::to_embedding() const {
  Embedding e;
  e.g = g;
  e.rot = rot;
  auto comps = g.components();
  std::vector<int> comp_of(g.n(), -1);
  for (int c = 0; c < (int)comps.size(); ++c)
    for (int v : comps[c]) comp_of[v] = c;
  std::vector<int> anchor_face_of_comp(comps.size(), -1);
  for (int f = 0; f < fs.n_faces(); ++f) {
    if (region_of_face[f] != ext_region) continue;
    int c = comp_of[fs.walks[f].front().first];
    bug_check(anchor_face_of_comp[c] < 0 || anchor_face_of_comp[c] == f,
              "component borders the exterior region on two faces");
    if (anchor_face_of_comp[c] < 0) {
      anchor_face_of_comp[c] = f;
      e.outer_anchors.push_back(fs.walks[f].front());
    }
  }
  for (int c = 0; c < (int)comps.size(); ++c) {
    bool has_edges = false;
    for (int v : comps[c])
      if (!g.adj[v].empty()) has_edges = true;
    bug_check(!has_edges || anchor_face_of_comp[c] >= 0,
              "component does not border the exterior; keep working on the snapshot");
  }
  for (int v = 0; v < g.n(); ++v) {
    if (!g.adj[v].empty() || region_of_isolated[v] == ext_region) continue;
    DEdge a{-1, -1};
    for (int f = 0; f < fs.n_faces() && a.first < 0; ++f)
      if (region_of_face[f] == region_of_isolated[v]) a = fs.walks[f].front();
    bug_check(a.first >= 0, "floating vertex region has no boundary");
    e.floating.push_back({v, a});
  }
  return e;
}

std::vector<Bits> layering_of(const PlanarSnapshot& start) {
  PlanarSnapshot s = start;
  int n = start.g.n();
  const Graph& g0 = start.g;
  std::vector<Bits> layers;
  while (s.g.n() > 0) {
    Bits ext = s.exterior_vertices();
    bug_check(ext.any(), "nonempty drawing with no exterior vertices");
    Bits orig(n);
    ext.for_each([&](int v) { orig.set(g0.at(s.g.ids[v])); });
    layers.push_back(orig);
    s = s.erase(ext, nullptr);
  }
  return layers;
}

std::vector<Bits> layering(const Embedding& e) { return layering_of(PlanarSnapshot::from(e)); }

int outerplanarity_of_drawing(const Embedding& e) {
  if (e.g.n() == 0) return 0;
  return (int)layering(e).size();
}

}  // namespace orderforge
