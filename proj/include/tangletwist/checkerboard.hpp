#pragma once

#include <queue>
#include <vector>

#include "tangletwist/errors.hpp"
#include "tangletwist/pd.hpp"

namespace tangletwist {

enum class FaceColor : int { white = 0, black = 1 };

// Proper 2-coloring of the diagram's regions. Always exists because every
// vertex of the shadow has degree 4.
struct Coloring {
  std::vector<FaceColor> color;  // indexed by face id

  FaceColor at(int face) const { return color.at(static_cast<size_t>(face)); }
  Coloring flipped() const {
    Coloring c = *this;
    for (auto& v : c.color)
      v = (v == FaceColor::white) ? FaceColor::black : FaceColor::white;
    return c;
  }
};

// Deterministic seed: the face on the left side of the lowest-numbered arc is
// white.
inline Coloring two_coloring(const Diagram& d) {
  d.require_valid("two_coloring");
  if (d.n() > 0 && (!d.connected() || d.loop_count() > 0))
    throw domain_error("two_coloring: diagram must be connected");
  Coloring col;
  col.color.assign(static_cast<size_t>(d.face_count()), FaceColor::white);
  if (d.n() == 0) {
    // unknot: two faces, seed face 0 white
    col.color.assign(2, FaceColor::white);
    col.color[1] = FaceColor::black;
    return col;
  }
  std::vector<int> mark(static_cast<size_t>(d.face_count()), -1);
  std::queue<int> q;
  mark[static_cast<size_t>(d.left_face(1))] = 0;
  q.push(d.left_face(1));
  // face adjacency through arcs
  std::vector<std::vector<int>> adj(static_cast<size_t>(d.face_count()));
  for (int a = 1; a <= d.arc_count(); ++a) {
    adj[static_cast<size_t>(d.left_face(a))].push_back(d.right_face(a));
    adj[static_cast<size_t>(d.right_face(a))].push_back(d.left_face(a));
  }
  while (!q.empty()) {
    int f = q.front();
    q.pop();
    for (int g : adj[static_cast<size_t>(f)]) {
      if (mark[static_cast<size_t>(g)] == -1) {
        mark[static_cast<size_t>(g)] = 1 - mark[static_cast<size_t>(f)];
        q.push(g);
      } else if (mark[static_cast<size_t>(g)] == mark[static_cast<size_t>(f)]) {
        throw internal_error("two_coloring: regions are not 2-colorable");
      }
    }
  }
  for (int f = 0; f < d.face_count(); ++f) {
    if (mark[static_cast<size_t>(f)] == -1) throw internal_error("two_coloring: unreachable face");
    col.color[static_cast<size_t>(f)] = mark[static_cast<size_t>(f)] == 0 ? FaceColor::white : FaceColor::black;
  }
  return col;
}

// Enhanced checkerboard digraph: one vertex per region (tagged with its
// color), one directed signed edge per crossing.
//
// Convention table, one row per crossing sign (the only figure-dependent
// choice in this module; flipping a row is a one-line fix):
//   sign +1: tail = corner 3 (between tuple positions 3 and 0, the region
//            both strands point away from), head = corner 1; edge sign +1.
//   sign -1: tail = corner 0, head = corner 2; edge sign -1.
// The edge always joins the two regions merged by the oriented smoothing
// (which share a color), directed from the region behind both strands to the
// region ahead of both; its sign is the crossing's type (I -> +1, II -> -1).
// Under mirroring the directions persist and all signs flip.
struct SignedDigraph {
  struct Edge {
    int tail = 0, head = 0;
    int sign = 0;
    int crossing = -1;
  };
  int nv = 0;
  std::vector<FaceColor> color;  // vertex color tags
  std::vector<Edge> edges;
};

inline SignedDigraph enhanced_digraph(const Diagram& d, const Coloring& col) {
  d.require_valid("enhanced_digraph");
  SignedDigraph g;
  g.nv = d.face_count();
  g.color = col.color;
  for (int ci = 0; ci < d.n(); ++ci) {
    const auto& c = d.crossing(ci);
    int tail, head;
    if (c.sign > 0) {
      tail = d.face_at_corner(ci, 3);
      head = d.face_at_corner(ci, 1);
    } else {
      tail = d.face_at_corner(ci, 0);
      head = d.face_at_corner(ci, 2);
    }
    g.edges.push_back({tail, head, c.sign, ci});
  }
  return g;
}

enum class WalkMode { directed, semi };

// No walk of the digraph may contain both a positive and a negative edge.
// Implemented as: for no ordered pair of opposite-sign edges (e, f) does
// head(e) reach tail(f) under reflexive-transitive reachability.
// WalkMode::semi additionally allows traversing edges backwards; directed
// walks are the default reading.
inline bool digraph_is_alternative(const SignedDigraph& g, WalkMode mode = WalkMode::directed) {
  bool has_pos = false, has_neg = false;
  for (const auto& e : g.edges) {
    has_pos = has_pos || e.sign > 0;
    has_neg = has_neg || e.sign < 0;
  }
  if (!has_pos || !has_neg) return true;
  const int n = g.nv;
  std::vector<std::vector<char>> reach(static_cast<size_t>(n), std::vector<char>(static_cast<size_t>(n), 0));
  for (int v = 0; v < n; ++v) reach[static_cast<size_t>(v)][static_cast<size_t>(v)] = 1;
  for (const auto& e : g.edges) {
    reach[static_cast<size_t>(e.tail)][static_cast<size_t>(e.head)] = 1;
    if (mode == WalkMode::semi) reach[static_cast<size_t>(e.head)][static_cast<size_t>(e.tail)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (reach[static_cast<size_t>(i)][static_cast<size_t>(k)])
        for (int j = 0; j < n; ++j)
          if (reach[static_cast<size_t>(k)][static_cast<size_t>(j)]) reach[static_cast<size_t>(i)][static_cast<size_t>(j)] = 1;
  for (const auto& e : g.edges)
    for (const auto& f : g.edges) {
      if (e.sign == f.sign) continue;
      if (reach[static_cast<size_t>(e.head)][static_cast<size_t>(f.tail)]) return false;
    }
  return true;
}

inline bool is_alternative(const Diagram& d, WalkMode mode = WalkMode::directed) {
  d.require_valid("is_alternative");
  if (d.n() == 0) return true;
  return digraph_is_alternative(enhanced_digraph(d, two_coloring(d)), mode);
}

}  // namespace tangletwist
