#pragma once

#include <vector>

#include "tangletwist/graph.hpp"
#include "tangletwist/pd.hpp"
#include "tangletwist/smoothing.hpp"

namespace tangletwist {

// Orientation-respecting smoothing of every crossing. For a positive-writhe
// crossing this is its A-smoothing, for a negative one its B-smoothing, so
// Seifert circles come straight out of resolve() with the sign-derived state.
inline State seifert_state(const Diagram& d) {
  State s;
  s.s.reserve(static_cast<size_t>(d.n()));
  for (const auto& c : d.crossings()) s.s.push_back(static_cast<int8_t>(c.sign));
  return s;
}

struct SeifertCircles {
  int count = 0;
  std::vector<int> circle_of_arc;  // arc label -> circle id (0-based), empty slot 0
};

inline SeifertCircles seifert_circles(const Diagram& d) {
  d.require_valid("seifert_circles");
  SeifertCircles sc;
  if (d.n() == 0) {
    sc.count = d.loop_count();
    return sc;
  }
  auto r = resolve(d, seifert_state(d));
  sc.count = r.circle_count;
  // normalize representative ids to 0..count-1 by re-running the union
  detail::ArcUnion uf(d.arc_count());
  for (int ci = 0; ci < d.n(); ++ci) {
    const auto& a = d.crossing(ci).arcs;
    if (d.crossing(ci).sign > 0) {
      uf.unite(a[0], a[1]);
      uf.unite(a[2], a[3]);
    } else {
      uf.unite(a[0], a[3]);
      uf.unite(a[1], a[2]);
    }
  }
  sc.circle_of_arc.assign(static_cast<size_t>(d.arc_count() + 1), -1);
  std::vector<int> remap(static_cast<size_t>(d.arc_count() + 1), -1);
  int next = 0;
  for (int a = 1; a <= d.arc_count(); ++a) {
    int root = uf.find(a);
    if (remap[static_cast<size_t>(root)] < 0) remap[static_cast<size_t>(root)] = next++;
    sc.circle_of_arc[static_cast<size_t>(a)] = remap[static_cast<size_t>(root)];
  }
  return sc;
}

// One vertex per Seifert circle, one signed edge per crossing: type I
// (positive writhe) edges are +1, type II are -1. The two smoothing arcs of
// any crossing always lie on distinct circles, so loops cannot occur.
inline SignedGraph seifert_graph(const Diagram& d) {
  d.require_valid("seifert_graph");
  auto sc = seifert_circles(d);
  SignedGraph g;
  g.nv = sc.count;
  for (int ci = 0; ci < d.n(); ++ci) {
    const auto& c = d.crossing(ci);
    // the two circles at this crossing: arcs[0]'s circle and, depending on
    // the smoothing used, arcs[2]'s (A) or arcs[1]'s (B)
    int u = sc.circle_of_arc[static_cast<size_t>(c.arcs[0])];
    int v = sc.circle_of_arc[static_cast<size_t>(c.sign > 0 ? c.arcs[2] : c.arcs[1])];
    if (u == v) throw internal_error("seifert_graph: loop edge (two strands on one circle)");
    g.edges.push_back({u, v, c.sign, ci});
  }
  return g;
}

inline bool is_homogeneous(const Diagram& d) {
  d.require_valid("is_homogeneous");
  if (d.n() == 0) return true;
  SignedGraph g = seifert_graph(d);
  auto dec = blocks(g);
  for (const auto& blk : dec.blocks) {
    int s0 = g.edges[static_cast<size_t>(blk.front())].sign;
    for (int e : blk)
      if (g.edges[static_cast<size_t>(e)].sign != s0) return false;
  }
  return true;
}

inline bool is_positive(const Diagram& d) {
  d.require_valid("is_positive");
  for (const auto& c : d.crossings())
    if (c.sign < 0) return false;
  return true;
}

}  // namespace tangletwist
