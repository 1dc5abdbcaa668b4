#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orderforge/graph.hpp"
#include "orderforge/util.hpp"

namespace orderforge {

using DEdge = std::pair<int, int>;  // directed edge u -> v

inline int64_t dekey(int u, int v) { return (int64_t)u * 1000003 + v; }
inline int64_t dekey(DEdge e) { return dekey(e.first, e.second); }

// Face orbits of a rotation system. Faces are closed walks of directed
// edges under next(u->v) = (v, successor of u in rot[v]).
struct FaceSet {
  std::vector<std::vector<DEdge>> walks;
  std::unordered_map<int64_t, int> face_of;

  int n_faces() const { return (int)walks.size(); }
  int face(int u, int v) const {
    auto it = face_of.find(dekey(u, v));
    check(it != face_of.end(), Err::InvalidEmbedding, "directed edge not in any face");
    return it->second;
  }
  std::vector<int> walk_vertices(int f) const {
    std::vector<int> out;
    for (auto& e : walks[f]) out.push_back(e.first);
    return out;
  }
  Bits vertices_on(int f, int n) const {
    Bits b(n);
    for (auto& e : walks[f]) b.set(e.first);
    return b;
  }
};

struct EmbedDiag {
  bool ok = true;
  std::string problem;
};

// Combinatorial planar embedding: per-vertex clockwise neighbor order plus a
// designated exterior face. Every edge-bearing component that borders the
// unbounded region carries one anchor in outer_anchors. Isolated vertices lie
// in the exterior region unless listed in `floating` with an anchor directed
// edge whose face bounds their region.
struct Embedding {
  Graph g;
  std::vector<std::vector<int>> rot;
  std::vector<DEdge> outer_anchors;
  std::vector<std::pair<int, DEdge>> floating;

  FaceSet faces() const;
  EmbedDiag validate_structure() const;  // rotations consistent + genus 0
  EmbedDiag validate() const;            // + exterior designation
  void require_valid() const {
    auto d = validate();
    check(d.ok, Err::InvalidEmbedding, d.problem);
  }

  int rot_pos(int v, int u) const {
    for (int i = 0; i < (int)rot[v].size(); ++i)
      if (rot[v][i] == u) return i;
    fail(Err::InvalidEmbedding, "neighbour missing from rotation");
  }
  DEdge face_next(DEdge e) const {
    int p = rot_pos(e.second, e.first);
    return {e.second, rot[e.second][(p + 1) % rot[e.second].size()]};
  }

  std::vector<int> exterior_faces(const FaceSet& fs) const;
  Bits exterior_vertices() const;

  // true if the directed edges (v->a), (v->b), (v->c) appear in this
  // clockwise cyclic order in the rotation at v
  bool clockwise(int v, int a, int b, int c) const;

  // Insert a degree-1 vertex `nid` attached to v, drawn in the face at the
  // corner following rotation slot `pos`. If v is isolated, pos is ignored.
  int add_pendant(int v, const std::string& nid, int pos);
  // Pendant placed on the exterior face, at v's first exterior corner.
  int add_pendant_exterior(int v, const std::string& nid);
  // Pendant at a deterministic corner (after the first listed neighbour).
  int add_pendant_default(int v, const std::string& nid);

  // Insert a new vertex inside face f, attached to the given boundary
  // vertices (placed at each one's first corner along the walk). Returns the
  // new vertex index.
  int add_vertex_in_face(int f, const std::vector<int>& attach, const std::string& nid);

  void set_exterior(DEdge anchor) {
    outer_anchors.assign(1, anchor);
  }
};

// ---- region-tracking state for deletions -------------------------------

// Snapshot of a drawing during iterated vertex deletion. Regions are the
// geometric faces; one region may be bounded by orbits of several components.
// Deleting vertices merges every region incident to them; the merge absorbing
// the old exterior is the new exterior.
struct PlanarSnapshot {
  Graph g;  // current induced graph (ids preserved from the original)
  std::vector<std::vector<int>> rot;
  FaceSet fs;
  std::vector<int> region_of_face;
  std::vector<int> region_of_isolated;  // -1 when not isolated
  int ext_region = 0;
  int n_regions = 0;

  static PlanarSnapshot from(const Embedding& e);

  Bits exterior_vertices() const;

  // Delete `del`. For each deleted vertex, deleted_region (indexed by the
  // pre-erase vertex numbering) reports the region of the new snapshot that
  // absorbed it.
  PlanarSnapshot erase(const Bits& del, std::vector<int>* deleted_region = nullptr) const;

  // Restrict to `keep` (complement erase).
  PlanarSnapshot restrict_to(const Bits& keep) const {
    Bits del = Bits::full(g.n());
    del.subtract(keep);
    return erase(del, nullptr);
  }

  // Induced Embedding. Requires every edge-bearing component to border the
  // exterior region (always true along layering descents of a connected
  // drawing); isolated vertices go to `floating` as needed.
  Embedding to_embedding() const;
};

// Layering of a drawing: iterated removal of exterior-face vertices.
// Layers are reported over the input's vertex indexing and partition V.
std::vector<Bits> layering_of(const PlanarSnapshot& start);
std::vector<Bits> layering(const Embedding& e);

int outerplanarity_of_drawing(const Embedding& e);  // nonempty layer count

}  // namespace orderforge
