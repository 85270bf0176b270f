#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "tangletwist/checkerboard.hpp"
#include "tangletwist/errors.hpp"
#include "tangletwist/graph.hpp"
#include "tangletwist/pd.hpp"
#include "tangletwist/wiring.hpp"

namespace tangletwist {

// Tait graph over the shaded (black) faces: one vertex per shaded face, one
// signed edge per crossing joining the two shaded regions there.
//
// Sign table (the Figure-dependent convention, one switch point): the two
// regions merged by the A-smoothing are the corner pair {1,3}; an edge is
// positive iff the shaded regions at its crossing are that pair.
struct TaitGraph {
  SignedGraph graph;
  std::vector<int> vertex_of_face;  // face id -> vertex id or -1 (unshaded)
};

inline TaitGraph tait_graph(const Diagram& d, const Coloring& col) {
  d.require_valid("tait_graph");
  TaitGraph t;
  t.vertex_of_face.assign(static_cast<size_t>(d.face_count()), -1);
  int nv = 0;
  for (int f = 0; f < d.face_count(); ++f)
    if (col.at(f) == FaceColor::black) t.vertex_of_face[static_cast<size_t>(f)] = nv++;
  t.graph.nv = nv;
  for (int ci = 0; ci < d.n(); ++ci) {
    int f0 = d.face_at_corner(ci, 0), f1 = d.face_at_corner(ci, 1);
    int f2 = d.face_at_corner(ci, 2), f3 = d.face_at_corner(ci, 3);
    bool shaded13 = col.at(f1) == FaceColor::black;
    if ((col.at(f3) == FaceColor::black) != shaded13 || (col.at(f0) == FaceColor::black) == shaded13)
      throw internal_error("tait_graph: corner colors not alternating");
    int u, v, sign;
    if (shaded13) {
      u = t.vertex_of_face[static_cast<size_t>(f1)];
      v = t.vertex_of_face[static_cast<size_t>(f3)];
      sign = +1;  // shaded pair is the A-merged pair
    } else {
      u = t.vertex_of_face[static_cast<size_t>(f0)];
      v = t.vertex_of_face[static_cast<size_t>(f2)];
      sign = -1;
    }
    t.graph.edges.push_back({u, v, sign, ci});
  }
  return t;
}

// Of the two proper colorings, the one whose Tait edge at `crossing` is
// positive.
inline Coloring choose_coloring_positive_at(const Diagram& d, int crossing) {
  Coloring col = two_coloring(d);
  TaitGraph t = tait_graph(d, col);
  if (t.graph.edges.at(static_cast<size_t>(crossing)).sign > 0) return col;
  return col.flipped();
}

// |sum_v (-1)^v s_v| over the Tait graph; independent of the coloring choice.
// Split diagrams have determinant 0.
inline long long determinant(const Diagram& d) {
  d.require_valid("determinant");
  if (d.n() == 0) return d.loop_count() == 1 ? 1 : 0;
  if (!d.connected() || d.loop_count() > 0) return 0;
  TaitGraph t = tait_graph(d, two_coloring(d));
  return std::llabs(signed_tree_sum(t.graph));
}

// --- single-crossing smoothing -------------------------------------------------

enum class SmoothKind { A, B };

struct SmoothedDiagram {
  Diagram diagram;
  // arc label of the smoothed diagram -> arc label it inherits from the
  // parent (the lowest original label merged into it)
  std::vector<long long> parent_arc_of;
};

// L_0 (A) or L_1 (B): remove the crossing and rejoin its arcs per the
// smoothing scheme. The result can be split (determinant 0) but is always
// representable.
inline SmoothedDiagram smooth_at(const Diagram& d, int crossing, SmoothKind which) {
  d.require_valid("smooth_at");
  if (crossing < 0 || crossing >= d.n()) throw domain_error("smooth_at: no such crossing");
  Wiring w = import_diagram(d);
  int p0 = Wiring::port(crossing, 0), p1 = Wiring::port(crossing, 1);
  int p2 = Wiring::port(crossing, 2), p3 = Wiring::port(crossing, 3);
  if (which == SmoothKind::A) {
    w.splice(p0, p1);
    w.splice(p2, p3);
  } else {
    w.splice(p0, p3);
    w.splice(p1, p2);
  }
  // rebuild without the now-disconnected crossing
  Wiring w2;
  std::vector<int> cmap(static_cast<size_t>(d.n()), -1);
  for (int ci = 0; ci < d.n(); ++ci)
    if (ci != crossing) cmap[static_cast<size_t>(ci)] = w2.add_crossing(1);
  w2.loops = w.loops;
  std::vector<char> seen(static_cast<size_t>(4 * d.n()), 0);
  for (int ci = 0; ci < d.n(); ++ci) {
    if (ci == crossing) continue;
    for (int p = 0; p < 4; ++p) {
      int a = Wiring::port(ci, p);
      if (seen[static_cast<size_t>(a)]) continue;
      int b = w.mate(a);
      if (b < 0) throw internal_error("smooth_at: dangling port");
      seen[static_cast<size_t>(a)] = 1;
      seen[static_cast<size_t>(b)] = 1;
      int ci2 = b / 4, pb = b % 4;
      int na = Wiring::port(cmap[static_cast<size_t>(ci)], p);
      int nb = Wiring::port(cmap[static_cast<size_t>(ci2)], pb);
      w2.connect(na, nb, w.prio(a));
      w2.set_flow(na, w.flow(a));
      w2.set_flow(nb, w.flow(b));
    }
  }
  FinalizeResult fin = finalize(w2, d.name());
  SmoothedDiagram out;
  out.diagram = std::move(fin.diagram);
  out.parent_arc_of = std::move(fin.prio_of_arc);
  return out;
}

// Coloring of a smoothed diagram inherited face-wise from the parent: the
// proper coloring that agrees with the parent on the left side of a
// surviving reference arc.
inline Coloring inherited_coloring(const Diagram& parent, const Coloring& parent_col,
                                   const SmoothedDiagram& sm) {
  const Diagram& child = sm.diagram;
  if (child.n() == 0) {
    Coloring c;
    c.color.assign(static_cast<size_t>(child.face_count()), FaceColor::white);
    return c;  // no crossings left: colors no longer matter
  }
  Coloring col = two_coloring(child);
  // reference: the lowest-labeled child arc inheriting a parent arc
  for (int a = 1; a <= child.arc_count(); ++a) {
    long long pa = sm.parent_arc_of[static_cast<size_t>(a)];
    if (pa >= Wiring::kNoPrio) continue;
    FaceColor want = parent_col.at(parent.left_face(static_cast<int>(pa)));
    if (col.at(child.left_face(a)) != want) col = col.flipped();
    return col;
  }
  return col;
}

// --- the x and y quantities -----------------------------------------------------
// Under the coloring that makes the Tait edge e at the crossing positive, the
// A-smoothing merges the two shaded regions at the crossing, so its Tait
// graph is the contraction G/e, while the B-smoothing's is the deletion
// G - e. Spanning trees of G containing e correspond to trees of G/e with
// one less positive edge; trees avoiding e to trees of G - e. Hence
//   x = sum_v (-1)^v s_{v-1}(L_0) = -signed_tree_sum(G/e),
//   y = sum_v (-1)^v s_v(L_1)    = +signed_tree_sum(G - e),
// computed on the parent graph so the signs are coherent across crossings
// (re-deriving colorings on the smoothed diagrams is only determined up to a
// global sign, which sign(xy) must not depend on).
struct XYValues {
  long long x = 0, y = 0;

  int sign_xy() const {  // sign(0) taken as +1; callers report such trials apart
    return (x * y < 0) ? -1 : +1;
  }
};

inline XYValues xy_values(const Diagram& d, int crossing) {
  d.require_valid("xy_values");
  Coloring col = choose_coloring_positive_at(d, crossing);
  TaitGraph t = tait_graph(d, col);
  const auto e = t.graph.edges.at(static_cast<size_t>(crossing));
  XYValues out;
  // deletion
  SignedGraph del;
  del.nv = t.graph.nv;
  for (int i = 0; i < t.graph.ne(); ++i)
    if (i != crossing) del.edges.push_back(t.graph.edges[static_cast<size_t>(i)]);
  out.y = is_connected(del) ? signed_tree_sum(del) : 0;
  // contraction (a loop edge admits no tree through it)
  if (e.u == e.v) {
    out.x = 0;
  } else {
    SignedGraph con;
    con.nv = t.graph.nv - 1;
    const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    auto remap = [&](int w) { return w == hi ? lo : (w > hi ? w - 1 : w); };
    for (int i = 0; i < t.graph.ne(); ++i) {
      if (i == crossing) continue;
      auto ed = t.graph.edges[static_cast<size_t>(i)];
      int u = remap(ed.u), v = remap(ed.v);
      con.edges.push_back({u, v, ed.sign, ed.crossing});
    }
    out.x = is_connected(con) ? -signed_tree_sum(con) : 0;
  }
  return out;
}

// det(D*) for the twist of the crossing by a rational tangle of slope
// beta/alpha whose denominators share the crossing's sign.
inline long long predict_twisted_det(long long alpha, long long beta, long long det0, long long det1,
                                     int sign_xy, int sign_c) {
  if (alpha <= 0 || beta <= 0) throw domain_error("predict_twisted_det: need alpha, beta > 0");
  if (std::gcd(alpha, beta) != 1) throw domain_error("predict_twisted_det: slope not reduced");
  if (sign_c > 0) return std::llabs(alpha * det0 + sign_xy * beta * det1);
  return std::llabs(alpha * det1 + sign_xy * beta * det0);
}

}  // namespace tangletwist
