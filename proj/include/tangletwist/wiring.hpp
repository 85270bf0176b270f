#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "tangletwist/errors.hpp"
#include "tangletwist/pd.hpp"
#include "tangletwist/tangle.hpp"

namespace tangletwist {

// Compass port indices, counterclockwise. Fragment frames and the surgery
// gluing map both use these; port p+1 (mod 4) is the next port
// counterclockwise, matching PD tuple order.
enum : int { PORT_SW = 0, PORT_SE = 1, PORT_NE = 2, PORT_NW = 3 };

// A 4-valent diagram under construction: crossings with four ports each,
// arcs as port-to-port connections, plus crossingless free loops. Diagrams,
// braid closures and rendered tangles all reduce to this, and finalize()
// turns it back into an oriented PD code.
class Wiring {
 public:
  struct WCross {
    // over strand occupies ports {1,3} when over_diag==1, ports {0,2} when 0
    int over_diag = 1;
    int leaf = -1, box = -1;      // render provenance, -1 for ambient crossings
    bool vertical_box = false;    // the box holding this crossing is vertical
  };

  std::vector<WCross> crossings;
  int loops = 0;

  int add_crossing(int over_diag, int leaf = -1, int box = -1, bool vertical_box = false) {
    crossings.push_back({over_diag, leaf, box, vertical_box});
    mate_.resize(4 * crossings.size(), -1);
    prio_.resize(4 * crossings.size(), kNoPrio);
    flow_.resize(4 * crossings.size(), 0);
    return static_cast<int>(crossings.size()) - 1;
  }

  static int port(int crossing, int p) { return 4 * crossing + p; }
  int mate(int p) const { return mate_.at(static_cast<size_t>(p)); }

  // flow mark: 0 unknown, 1 strand flows into this port, 2 flows out
  void set_flow(int p, int f) { flow_.at(static_cast<size_t>(p)) = static_cast<char>(f); }

  void connect(int a, int b, long long prio = kNoPrio) {
    if (mate_.at(static_cast<size_t>(a)) != -1 || mate_.at(static_cast<size_t>(b)) != -1)
      throw internal_error("wiring: port already connected");
    if (a == b) throw internal_error("wiring: self-port connection");
    mate_[static_cast<size_t>(a)] = b;
    mate_[static_cast<size_t>(b)] = a;
    prio_[static_cast<size_t>(a)] = prio_[static_cast<size_t>(b)] = prio;
  }

  // Splice out ports a and b (a smoothing piece joining their two arcs). If
  // the arcs coincide a free loop is created.
  void splice(int a, int b) {
    int ma = mate_.at(static_cast<size_t>(a)), mb = mate_.at(static_cast<size_t>(b));
    if (ma == -1 || mb == -1) throw internal_error("wiring: splicing dangling port");
    mate_[static_cast<size_t>(a)] = mate_[static_cast<size_t>(b)] = -1;
    if (ma == b) {
      ++loops;
      return;
    }
    long long p = std::min(prio_[static_cast<size_t>(a)], prio_[static_cast<size_t>(b)]);
    mate_[static_cast<size_t>(ma)] = mb;
    mate_[static_cast<size_t>(mb)] = ma;
    prio_[static_cast<size_t>(ma)] = prio_[static_cast<size_t>(mb)] = p;
  }

  long long prio(int p) const { return prio_.at(static_cast<size_t>(p)); }
  char flow(int p) const { return flow_.at(static_cast<size_t>(p)); }

  static constexpr long long kNoPrio = 1LL << 40;

 private:
  std::vector<int> mate_;
  std::vector<long long> prio_;
  std::vector<char> flow_;
};

// Import a diagram: ports are tuple positions (over strand on {1,3}),
// connections carry old arc labels as priorities, flow marks record the
// orientation so surgeries inherit it.
inline Wiring import_diagram(const Diagram& d) {
  Wiring w;
  for (int ci = 0; ci < d.n(); ++ci) w.add_crossing(1);
  w.loops = d.loop_count();
  for (int arc = 1; arc <= d.arc_count(); ++arc) {
    ArcSlot t = d.tail_slot(arc), h = d.head_slot(arc);
    int pt = Wiring::port(t.crossing, t.pos), ph = Wiring::port(h.crossing, h.pos);
    w.connect(pt, ph, arc);
    w.set_flow(ph, 1);
    w.set_flow(pt, 2);
  }
  return w;
}

struct FinalizeResult {
  Diagram diagram;
  bool orientation_clash = false;           // some component's flow hints conflicted
  std::vector<long long> prio_of_arc;       // new arc label -> connection priority
};

// Turn a fully-connected wiring into a PD diagram: trace strands, orient
// them (flow marks win; free components follow their smallest-priority
// connection), and label arcs consecutively per component.
inline FinalizeResult finalize(const Wiring& w, std::string name = "") {
  const int nc = static_cast<int>(w.crossings.size());
  FinalizeResult out;
  if (nc == 0) {
    out.diagram = Diagram(std::move(name), {}, w.loops);
    return out;
  }
  // collect connections
  std::vector<char> seen(static_cast<size_t>(4 * nc), 0);
  struct Conn {
    int a, b;
    long long prio;
  };
  std::vector<Conn> conns;
  std::vector<int> conn_at(static_cast<size_t>(4 * nc), -1);
  for (int p = 0; p < 4 * nc; ++p) {
    if (seen[static_cast<size_t>(p)]) continue;
    int q = w.mate(p);
    if (q < 0) throw internal_error("finalize: dangling port");
    seen[static_cast<size_t>(p)] = seen[static_cast<size_t>(q)] = 1;
    conn_at[static_cast<size_t>(p)] = conn_at[static_cast<size_t>(q)] = static_cast<int>(conns.size());
    conns.push_back({p, q, w.prio(p)});
  }

  auto passage_partner = [](int p) { return p ^ 2; };  // 0<->2, 1<->3

  // trace strand components as sequences of directed connections
  std::vector<char> cseen(conns.size(), 0);
  struct Comp {
    std::vector<std::pair<int, int>> walk;  // (connection id, head port of the connection in walk dir)
    long long min_prio = 1LL << 60;
    size_t start = 0;  // index in walk of the minimal-priority connection
    bool clash = false;
  };
  std::vector<Comp> comps;
  for (size_t c0 = 0; c0 < conns.size(); ++c0) {
    if (cseen[c0]) continue;
    Comp comp;
    // walk forward: direction "into conns[c0].b" first
    int cid = static_cast<int>(c0);
    int head = conns[c0].b;
    while (!cseen[static_cast<size_t>(cid)]) {
      cseen[static_cast<size_t>(cid)] = 1;
      comp.walk.push_back({cid, head});
      int out_port = passage_partner(head);
      int nid = conn_at[static_cast<size_t>(out_port)];
      head = conns[static_cast<size_t>(nid)].a == out_port ? conns[static_cast<size_t>(nid)].b
                                                           : conns[static_cast<size_t>(nid)].a;
      cid = nid;
    }
    // orientation: count flow-mark agreements for this direction vs reverse
    int agree = 0, disagree = 0;
    for (auto& [id, hd] : comp.walk) {
      char fh = w.flow(hd);
      char ft = w.flow(hd == conns[static_cast<size_t>(id)].a ? conns[static_cast<size_t>(id)].b
                                                              : conns[static_cast<size_t>(id)].a);
      if (fh == 1) ++agree;
      if (fh == 2) ++disagree;
      if (ft == 2) ++agree;
      if (ft == 1) ++disagree;
    }
    bool flip;
    if (agree >= disagree) {
      flip = false;
      comp.clash = disagree > 0;
    } else {
      flip = true;
      comp.clash = agree > 0;
    }
    if (agree == 0 && disagree == 0) {
      // free component: orient so the minimal-priority connection is followed
      // in its (a -> b) direction
      size_t mi = 0;
      for (size_t i = 0; i < comp.walk.size(); ++i)
        if (conns[static_cast<size_t>(comp.walk[i].first)].prio <
            conns[static_cast<size_t>(comp.walk[mi].first)].prio)
          mi = i;
      flip = comp.walk[mi].second != conns[static_cast<size_t>(comp.walk[mi].first)].b;
    }
    if (flip) {
      std::reverse(comp.walk.begin(), comp.walk.end());
      for (auto& [id, hd] : comp.walk)
        hd = (hd == conns[static_cast<size_t>(id)].a) ? conns[static_cast<size_t>(id)].b
                                                      : conns[static_cast<size_t>(id)].a;
    }
    for (size_t i = 0; i < comp.walk.size(); ++i) {
      long long pr = conns[static_cast<size_t>(comp.walk[i].first)].prio;
      if (pr < comp.min_prio) {
        comp.min_prio = pr;
        comp.start = i;
      }
    }
    comps.push_back(std::move(comp));
  }
  // stable: components with no priority hints keep discovery order
  std::stable_sort(comps.begin(), comps.end(),
                   [](const Comp& x, const Comp& y) { return x.min_prio < y.min_prio; });

  // assign arc labels
  std::vector<int> label_at_port(static_cast<size_t>(4 * nc), 0);
  out.prio_of_arc.assign(static_cast<size_t>(2 * nc + 1), Wiring::kNoPrio);
  int next_label = 1;
  for (auto& comp : comps) {
    if (comp.clash) out.orientation_clash = true;
    for (size_t k = 0; k < comp.walk.size(); ++k) {
      int cid = comp.walk[(comp.start + k) % comp.walk.size()].first;
      const Conn& cn = conns[static_cast<size_t>(cid)];
      label_at_port[static_cast<size_t>(cn.a)] = label_at_port[static_cast<size_t>(cn.b)] = next_label;
      out.prio_of_arc[static_cast<size_t>(next_label)] = cn.prio;
      ++next_label;
    }
  }

  // emit tuples: start each tuple at the under-strand's inflow port
  std::vector<std::array<int, 4>> tuples(static_cast<size_t>(nc));
  // recompute head marks: a port is an inflow if its connection's walk
  // direction points into it
  std::vector<char> is_head(static_cast<size_t>(4 * nc), 0);
  for (auto& comp : comps)
    for (auto& [cid, head] : comp.walk) is_head[static_cast<size_t>(head)] = 1;
  for (int ci = 0; ci < nc; ++ci) {
    int under0 = w.crossings[static_cast<size_t>(ci)].over_diag == 1 ? 0 : 1;
    int p0 = -1;
    for (int cand : {under0, under0 ^ 2})
      if (is_head[static_cast<size_t>(Wiring::port(ci, cand))]) p0 = cand;
    if (p0 < 0) throw internal_error("finalize: under-strand has no inflow");
    for (int j = 0; j < 4; ++j)
      tuples[static_cast<size_t>(ci)][static_cast<size_t>(j)] =
          label_at_port[static_cast<size_t>(Wiring::port(ci, (p0 + j) & 3))];
  }
  out.diagram = Diagram(std::move(name), std::move(tuples), w.loops);
  return out;
}

// --- rational tangle rendering ----------------------------------------------
// A fragment is a wiring with four dangling compass ports. Rational tangles
// are built in standard form: boxes alternate between vertical twist stacks
// (attached below) and horizontal twist chains (attached to the right), with
// the alternation anchored so the LAST box is always vertical — so the build
// starts vertical for an odd number of denominators and horizontal for an
// even one. A crossing's over strand lies on the NW-SE diagonal for positive
// entries and on the SW-NE diagonal for negative entries. With this scheme
// the rendered tangle realizes the continued fraction's slope for every
// length: its denominator closure has determinant alpha and its numerator
// closure |beta|.
struct Fragment {
  std::array<int, 4> ends{-1, -1, -1, -1};  // dangling port per compass index
};

namespace detail {

// vertical stack of k crossings; over_diag per entry sign
inline Fragment v_stack(Wiring& w, int k, int over_diag, int leaf, int box, bool vbox = true) {
  Fragment f;
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    int c = w.add_crossing(over_diag, leaf, box, vbox);
    if (j == 0) {
      f.ends[PORT_NW] = Wiring::port(c, PORT_NW);
      f.ends[PORT_NE] = Wiring::port(c, PORT_NE);
    } else {
      w.connect(Wiring::port(prev, PORT_SW), Wiring::port(c, PORT_NW));
      w.connect(Wiring::port(prev, PORT_SE), Wiring::port(c, PORT_NE));
    }
    prev = c;
  }
  f.ends[PORT_SW] = Wiring::port(prev, PORT_SW);
  f.ends[PORT_SE] = Wiring::port(prev, PORT_SE);
  return f;
}

inline Fragment h_chain(Wiring& w, int k, int over_diag, int leaf, int box, bool vbox = false) {
  Fragment f;
  int prev = -1;
  for (int j = 0; j < k; ++j) {
    int c = w.add_crossing(over_diag, leaf, box, vbox);
    if (j == 0) {
      f.ends[PORT_NW] = Wiring::port(c, PORT_NW);
      f.ends[PORT_SW] = Wiring::port(c, PORT_SW);
    } else {
      w.connect(Wiring::port(prev, PORT_NE), Wiring::port(c, PORT_NW));
      w.connect(Wiring::port(prev, PORT_SE), Wiring::port(c, PORT_SW));
    }
    prev = c;
  }
  f.ends[PORT_NE] = Wiring::port(prev, PORT_NE);
  f.ends[PORT_SE] = Wiring::port(prev, PORT_SE);
  return f;
}

inline Fragment attach_below(Wiring& w, Fragment top, Fragment bottom) {
  w.connect(top.ends[PORT_SW], bottom.ends[PORT_NW]);
  w.connect(top.ends[PORT_SE], bottom.ends[PORT_NE]);
  Fragment f;
  f.ends[PORT_NW] = top.ends[PORT_NW];
  f.ends[PORT_NE] = top.ends[PORT_NE];
  f.ends[PORT_SW] = bottom.ends[PORT_SW];
  f.ends[PORT_SE] = bottom.ends[PORT_SE];
  return f;
}

inline Fragment attach_right(Wiring& w, Fragment left, Fragment right) {
  w.connect(left.ends[PORT_NE], right.ends[PORT_NW]);
  w.connect(left.ends[PORT_SE], right.ends[PORT_SW]);
  Fragment f;
  f.ends[PORT_NW] = left.ends[PORT_NW];
  f.ends[PORT_SW] = left.ends[PORT_SW];
  f.ends[PORT_NE] = right.ends[PORT_NE];
  f.ends[PORT_SE] = right.ends[PORT_SE];
  return f;
}

inline Fragment render_leaf(Wiring& w, const ContinuedFraction& cf, int leaf_id) {
  if (cf.a.empty()) throw domain_error("render: empty continued fraction");
  for (int x : cf.a)
    if (x == 0) throw domain_error("render: zero denominator entry");
  const int m = cf.length();
  Fragment acc;
  for (int i = 0; i < m; ++i) {
    int a = cf.a[static_cast<size_t>(i)];
    int over_diag = a > 0 ? 1 : 0;
    int k = std::abs(a);
    bool vertical = ((m - 1 - i) % 2 == 0);  // last box vertical
    Fragment box = vertical ? v_stack(w, k, over_diag, leaf_id, i + 1, true)
                            : h_chain(w, k, over_diag, leaf_id, i + 1, false);
    acc = (i == 0) ? box : (vertical ? attach_below(w, acc, box) : attach_right(w, acc, box));
  }
  return acc;
}

inline Fragment render_block(Wiring& w, const TangleBlock& b, int& leaf_counter) {
  if (b.kind == TangleBlock::Kind::leaf) return render_leaf(w, b.cf, leaf_counter++);
  Fragment acc;
  for (size_t i = 0; i < b.children.size(); ++i) {
    Fragment f = render_block(w, b.children[static_cast<size_t>(i)], leaf_counter);
    if (i == 0) {
      acc = f;
    } else if (b.kind == TangleBlock::Kind::sum) {
      acc = attach_right(w, acc, f);
    } else {
      acc = attach_below(w, acc, f);
    }
  }
  return acc;
}

}  // namespace detail

// Render a block into `w`; returns the fragment's four dangling ports.
inline Fragment render(Wiring& w, const TangleBlock& b) {
  int leaf_counter = 0;
  return detail::render_block(w, b, leaf_counter);
}

enum class Closure { numerator, denominator };

// Close a rendered fragment: numerator joins NW-NE and SW-SE, denominator
// joins NW-SW and NE-SE.
inline Diagram closure(const TangleBlock& b, Closure kind, std::string name = "") {
  Wiring w;
  Fragment f = render(w, b);
  if (kind == Closure::numerator) {
    w.connect(f.ends[PORT_NW], f.ends[PORT_NE]);
    w.connect(f.ends[PORT_SW], f.ends[PORT_SE]);
  } else {
    w.connect(f.ends[PORT_NW], f.ends[PORT_SW]);
    w.connect(f.ends[PORT_NE], f.ends[PORT_SE]);
  }
  return finalize(w, std::move(name)).diagram;
}

// Standard closure of a single rational tangle.
inline Diagram tangle_closure(const ContinuedFraction& cf, std::string name = "") {
  return closure(TangleBlock::leaf(cf.a), Closure::denominator, std::move(name));
}

}  // namespace tangletwist
