#include "orderforge/json_io.hpp"

#include <fstream>

namespace orderforge {

Poset poset_from_json(const json& j) {
  check(j.is_object() && j.contains("elements") && j.contains("relations"), Err::BadInput,
        "poset json needs 'elements' and 'relations'");
  std::vector<std::string> elements;
  for (auto& e : j.at("elements")) elements.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> rels;
  for (auto& r : j.at("relations")) {
    check(r.is_array() && r.size() == 2, Err::BadInput, "relation entries are pairs");
    rels.push_back({r[0].get<std::string>(), r[1].get<std::string>()});
  }
  return Poset::from_relations(elements, rels);
}

ordered_json poset_to_json(const Poset& p) {
  ordered_json j;
  j["elements"] = p.ids();
  auto rels = ordered_json::array();
  for (auto& [a, b] : p.covers()) rels.push_back({p.id(a), p.id(b)});
  j["relations"] = rels;
  return j;
}

Embedding embedding_from_json(const json& j, const std::vector<std::string>* order) {
  check(j.is_object() && j.contains("rotations"), Err::BadInput, "embedding json needs 'rotations'");
  Embedding e;
  if (order) {
    for (auto& id : *order) e.g.add_vertex(id);
  }
  const auto& rots = j.at("rotations");
  for (auto it = rots.begin(); it != rots.end(); ++it) e.g.add_vertex(it.key());
  e.rot.assign(e.g.n(), {});
  for (auto it = rots.begin(); it != rots.end(); ++it) {
    int v = e.g.at(it.key());
    for (auto& u : it.value()) {
      int w = e.g.add_vertex(u.get<std::string>());
      if ((int)e.rot.size() < e.g.n()) e.rot.resize(e.g.n());
      if (!e.g.has_edge(v, w)) e.g.add_edge(v, w);
      e.rot[v].push_back(w);
    }
  }
  e.rot.resize(e.g.n());
  check(e.g.connected() || e.g.m() == 0, Err::NotConnected,
        "embedding files must describe a connected drawing");
  if (j.contains("outer_face") && e.g.m() > 0) {
    std::vector<int> walk;
    for (auto& v : j.at("outer_face")) walk.push_back(e.g.at(v.get<std::string>()));
    check(walk.size() >= 2, Err::BadInput, "outer_face walk too short");
    // accept the face whose vertex set matches the walk's set; prefer an
    // exact cyclic match of the walk
    FaceSet fs = e.faces();
    Bits want(e.g.n());
    for (int v : walk) want.set(v);
    int found = -1;
    for (int f = 0; f < fs.n_faces() && found < 0; ++f) {
      auto verts = fs.walk_vertices(f);
      if ((int)verts.size() != (int)walk.size()) continue;
      for (size_t s = 0; s < verts.size() && found < 0; ++s) {
        bool eq = true;
        for (size_t i = 0; i < walk.size() && eq; ++i)
          if (verts[(s + i) % verts.size()] != walk[i]) eq = false;
        if (eq) found = f;
      }
    }
    if (found < 0)
      for (int f = 0; f < fs.n_faces() && found < 0; ++f)
        if (fs.vertices_on(f, e.g.n()) == want) found = f;
    check(found >= 0, Err::InvalidEmbedding, "outer_face does not match any face of the rotation system");
    e.outer_anchors.push_back(fs.walks[found].front());
  }
  return e;
}

ordered_json embedding_to_json(const Embedding& e) {
  ordered_json j;
  auto rots = ordered_json::object();
  for (int v = 0; v < e.g.n(); ++v) {
    auto arr = ordered_json::array();
    for (int u : e.rot[v]) arr.push_back(e.g.ids[u]);
    rots[e.g.ids[v]] = arr;
  }
  j["rotations"] = rots;
  if (!e.outer_anchors.empty()) {
    FaceSet fs = e.faces();
    auto arr = ordered_json::array();
    for (int v : fs.walk_vertices(fs.face(e.outer_anchors[0].first, e.outer_anchors[0].second)))
      arr.push_back(e.g.ids[v]);
    j["outer_face"] = arr;
  }
  return j;
}

std::vector<std::pair<std::string, std::string>> pairs_from_json(const json& j) {
  check(j.is_object() && j.contains("pairs"), Err::BadInput, "pair json needs 'pairs'");
  std::vector<std::pair<std::string, std::string>> out;
  for (auto& r : j.at("pairs")) {
    check(r.is_array() && r.size() == 2, Err::BadInput, "pair entries are pairs");
    out.push_back({r[0].get<std::string>(), r[1].get<std::string>()});
  }
  return out;
}

ordered_json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& pairs) {
  ordered_json j;
  auto arr = ordered_json::array();
  for (auto& [a, b] : pairs) arr.push_back({a, b});
  j["pairs"] = arr;
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  check(in.good(), Err::BadInput, "cannot open '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& ex) {
    fail(Err::BadInput, "parse error in '" + path + "': " + ex.what());
  }
  return j;
}

void save_json_file(const std::string& path, const ordered_json& j) {
  std::ofstream out(path);
  check(out.good(), Err::BadInput, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

Poset load_poset_file(const std::string& path) { return poset_from_json(load_json_file(path)); }

Embedding load_embedding_file(const std::string& path, const Poset* order_from) {
  const std::vector<std::string>* order = order_from ? &order_from->ids() : nullptr;
  return embedding_from_json(load_json_file(path), order);
}

}  // namespace orderforge
