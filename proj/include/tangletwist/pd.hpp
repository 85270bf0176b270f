#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tangletwist/errors.hpp"

namespace tangletwist {

// One crossing of an oriented planar diagram. `arcs` lists the four incident
// arc labels counterclockwise starting at the incoming under-strand, so the
// under-strand runs arcs[0] -> arcs[2] and the over-strand occupies positions
// 1 and 3. `over_in` is the tuple position (1 or 3) where the over-strand
// enters; sign +1 corresponds to over_in == 3 (writhe convention).
struct Crossing {
  std::array<int, 4> arcs{};
  int sign = 0;
  int over_in = 0;
};

struct ArcSlot {
  int crossing = -1;
  int pos = -1;
  bool operator==(const ArcSlot& o) const { return crossing == o.crossing && pos == o.pos; }
};

// Oriented link diagram as a PD code. Arc labels are 1..2n and run
// consecutively along each component in orientation order. A diagram with no
// crossings and loop_count()==1 is the standard unknot diagram.
//
// All derived data (orientation, components, faces, signs) is computed
// eagerly at construction; instances are immutable afterwards, so every
// operation in this library is a pure function and thread-safe.
class Diagram {
 public:
  Diagram() = default;

  Diagram(std::string name, std::vector<std::array<int, 4>> tuples, int loops = 0)
      : name_(std::move(name)), loops_(loops) {
    crossings_.reserve(tuples.size());
    for (const auto& t : tuples) {
      Crossing c;
      c.arcs = t;
      crossings_.push_back(c);
    }
    derive();
  }

  static Diagram unknot() { return Diagram("unknot", {}, 1); }

  const std::string& name() const { return name_; }
  void rename(std::string n) { name_ = std::move(n); }  // metadata only

  int n() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * n(); }
  int loop_count() const { return loops_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int id) const { return crossings_.at(static_cast<size_t>(id)); }

  bool structurally_ok() const { return defect_.empty(); }
  const std::string& defect() const { return defect_; }

  void require_valid(const char* who) const {
    if (!structurally_ok()) throw domain_error(std::string(who) + ": invalid diagram: " + defect_);
  }

  // Components as [first,last] arc-label ranges, orientation order.
  const std::vector<std::pair<int, int>>& components() const { return components_; }
  int component_of(int arc) const {
    for (int i = 0; i < static_cast<int>(components_.size()); ++i)
      if (arc >= components_[i].first && arc <= components_[i].second) return i;
    throw domain_error("component_of: no such arc");
  }
  int next_arc(int arc) const {
    auto [lo, hi] = components_[static_cast<size_t>(component_of(arc))];
    return arc == hi ? lo : arc + 1;
  }

  ArcSlot head_slot(int arc) const { return head_[static_cast<size_t>(arc)]; }
  ArcSlot tail_slot(int arc) const { return tail_[static_cast<size_t>(arc)]; }

  int writhe() const {
    int w = 0;
    for (const auto& c : crossings_) w += c.sign;
    return w;
  }

  // --- faces ---------------------------------------------------------------
  // Faces are orbits of the dart successor "arrive at slot p, leave at slot
  // (p+1) mod 4" over the counterclockwise rotation system. face_at_corner
  // gives the region in the quadrant between tuple positions q and q+1.
  int face_count() const { return face_count_; }
  int face_at_corner(int crossing, int corner) const {
    return corner_face_[static_cast<size_t>(4 * crossing + corner)];
  }
  int left_face(int arc) const { return dart_face_[static_cast<size_t>(2 * arc)]; }
  int right_face(int arc) const { return dart_face_[static_cast<size_t>(2 * arc + 1)]; }

  bool planar() const { return planar_; }
  bool connected() const { return connected_; }

  // --- serialization -------------------------------------------------------
  std::string serialize() const {
    std::ostringstream os;
    if (!name_.empty()) os << "name " << name_ << "\n";
    for (const auto& c : crossings_)
      os << "X " << c.arcs[0] << " " << c.arcs[1] << " " << c.arcs[2] << " " << c.arcs[3] << "\n";
    return os.str();
  }

  // Canonical form under orientation-preserving relabelings: cyclic rotation
  // of arc labels within each component plus permutation of components and of
  // crossing order. Used for "equal up to relabeling" tests on small inputs.
  std::string canonical_key(std::uint64_t limit = 4'000'000) const {
    require_valid("canonical_key");
    if (n() == 0) return "loops:" + std::to_string(loops_);
    const int m = static_cast<int>(components_.size());
    std::uint64_t combos = 1;
    for (auto& c : components_) combos *= static_cast<std::uint64_t>(c.second - c.first + 1);
    std::uint64_t fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::uint64_t>(i);
    if (combos > limit / std::max<std::uint64_t>(fact, 1))
      throw resource_error("canonical_key: relabeling space too large");

    std::vector<int> order(static_cast<size_t>(m));
    std::iota(order.begin(), order.end(), 0);
    std::string best;
    do {
      std::vector<int> rot(static_cast<size_t>(m), 0);
      while (true) {
        // Build the relabeling map for this (order, rot) choice.
        std::vector<int> relab(static_cast<size_t>(arc_count() + 1), 0);
        int next_label = 1;
        for (int oi = 0; oi < m; ++oi) {
          auto [lo, hi] = components_[static_cast<size_t>(order[static_cast<size_t>(oi)])];
          int len = hi - lo + 1;
          for (int k = 0; k < len; ++k)
            relab[static_cast<size_t>(lo + (rot[static_cast<size_t>(oi)] + k) % len)] = next_label++;
        }
        std::vector<std::array<int, 4>> tuples;
        tuples.reserve(crossings_.size());
        for (const auto& c : crossings_) {
          tuples.push_back({relab[static_cast<size_t>(c.arcs[0])], relab[static_cast<size_t>(c.arcs[1])],
                            relab[static_cast<size_t>(c.arcs[2])], relab[static_cast<size_t>(c.arcs[3])]});
        }
        std::sort(tuples.begin(), tuples.end());
        std::ostringstream os;
        for (auto& t : tuples) os << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ";";
        os << "|" << loops_;
        std::string key = os.str();
        if (best.empty() || key < best) best = key;
        // advance rotation vector
        int j = 0;
        for (; j < m; ++j) {
          auto [lo, hi] = components_[static_cast<size_t>(order[static_cast<size_t>(j)])];
          if (++rot[static_cast<size_t>(j)] < hi - lo + 1) break;
          rot[static_cast<size_t>(j)] = 0;
        }
        if (j == m) break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
  }

 private:
  std::string name_;
  std::vector<Crossing> crossings_;
  int loops_ = 0;
  std::string defect_;

  std::vector<std::pair<int, int>> components_;
  std::vector<ArcSlot> head_, tail_;  // indexed by arc label
  std::vector<int> dart_face_;        // dart 2*arc (forward), 2*arc+1 (backward)
  std::vector<int> corner_face_;      // 4*crossing + corner
  int face_count_ = 0;
  bool planar_ = false;
  bool connected_ = false;

  static int passage_partner(int pos) {
    switch (pos) {
      case 0: return 2;
      case 2: return 0;
      case 1: return 3;
      default: return 1;
    }
  }

  void fail(const std::string& why) { defect_ = why; }

  void derive() {
    const int nn = n();
    if (nn == 0) {
      if (loops_ < 0) return fail("negative loop count");
      if (loops_ == 0) return fail("empty diagram");
      components_.clear();
      face_count_ = loops_ + 1;
      planar_ = true;
      connected_ = (loops_ == 1);
      return;
    }
    if (loops_ < 0) return fail("negative loop count");
    // crossings plus free loops is representable (smoothings produce it) but
    // always split; validate() reports it, connected() is false

    const int na = arc_count();
    // occurrence table
    std::vector<std::vector<ArcSlot>> occ(static_cast<size_t>(na + 1));
    for (int ci = 0; ci < nn; ++ci)
      for (int p = 0; p < 4; ++p) {
        int a = crossings_[static_cast<size_t>(ci)].arcs[static_cast<size_t>(p)];
        if (a < 1 || a > na)
          return fail("arc label " + std::to_string(a) + " outside 1.." + std::to_string(na));
        occ[static_cast<size_t>(a)].push_back({ci, p});
      }
    for (int a = 1; a <= na; ++a)
      if (occ[static_cast<size_t>(a)].size() != 2)
        return fail("arc multiplicity: label " + std::to_string(a) + " occurs " +
                    std::to_string(occ[static_cast<size_t>(a)].size()) + " times");

    // Trace strands; orient each so under-passages run tuple position 0 -> 2.
    head_.assign(static_cast<size_t>(na + 1), ArcSlot{});
    tail_.assign(static_cast<size_t>(na + 1), ArcSlot{});
    std::vector<char> seen(static_cast<size_t>(na + 1), 0);
    std::vector<std::vector<int>> strands;
    for (int a0 = 1; a0 <= na; ++a0) {
      if (seen[static_cast<size_t>(a0)]) continue;
      std::vector<int> cyc;           // arcs in walk order
      std::vector<ArcSlot> heads;     // tentative head slot of each arc in cyc
      int a = a0;
      ArcSlot h = occ[static_cast<size_t>(a0)][1];
      while (true) {
        cyc.push_back(a);
        heads.push_back(h);
        seen[static_cast<size_t>(a)] = 1;
        ArcSlot out{h.crossing, passage_partner(h.pos)};
        int b = crossings_[static_cast<size_t>(out.crossing)].arcs[static_cast<size_t>(out.pos)];
        // b's head is its occurrence that is not `out`
        ArcSlot bh = occ[static_cast<size_t>(b)][0] == out ? occ[static_cast<size_t>(b)][1]
                                                           : occ[static_cast<size_t>(b)][0];
        if (b == a0 && bh == occ[static_cast<size_t>(a0)][1]) break;
        if (seen[static_cast<size_t>(b)]) return fail("strand tracing failed (bad rotation data)");
        a = b;
        h = bh;
      }
      // count under-passages traversed forward (enter pos 0) vs reversed (enter pos 2)
      int fwd = 0, rev = 0;
      for (auto& hs : heads) {
        if (hs.pos == 0) ++fwd;
        if (hs.pos == 2) ++rev;
      }
      bool flip = false;
      if (fwd > 0 && rev > 0) return fail("inconsistent under-strand directions along a component");
      if (rev > 0) flip = true;
      if (fwd == 0 && rev == 0) {
        // all-over component: direction chosen so labels ascend
        int i0 = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
        int succ = cyc[static_cast<size_t>((i0 + 1) % cyc.size())];
        int pred = cyc[static_cast<size_t>((i0 + cyc.size() - 1) % cyc.size())];
        if (succ >= pred) flip = false; else flip = true;
      }
      if (flip) {
        std::reverse(cyc.begin(), cyc.end());
        std::reverse(heads.begin(), heads.end());
        // after reversal the "head" of each arc is its other occurrence
        for (size_t i = 0; i < cyc.size(); ++i) {
          int a1 = cyc[i];
          heads[i] = occ[static_cast<size_t>(a1)][0] == heads[i] ? occ[static_cast<size_t>(a1)][1]
                                                                 : occ[static_cast<size_t>(a1)][0];
        }
      }
      for (size_t i = 0; i < cyc.size(); ++i) {
        int a1 = cyc[i];
        head_[static_cast<size_t>(a1)] = heads[i];
        tail_[static_cast<size_t>(a1)] =
            occ[static_cast<size_t>(a1)][0] == heads[i] ? occ[static_cast<size_t>(a1)][1]
                                                        : occ[static_cast<size_t>(a1)][0];
      }
      strands.push_back(cyc);
    }

    // Arc labels must be consecutive along each strand in walk order.
    components_.clear();
    for (auto& cyc : strands) {
      int lo = *std::min_element(cyc.begin(), cyc.end());
      int hi = *std::max_element(cyc.begin(), cyc.end());
      if (hi - lo + 1 != static_cast<int>(cyc.size()))
        return fail("arc labels along a component are not consecutive");
      size_t i0 = static_cast<size_t>(std::find(cyc.begin(), cyc.end(), lo) - cyc.begin());
      for (size_t k = 0; k < cyc.size(); ++k)
        if (cyc[(i0 + k) % cyc.size()] != lo + static_cast<int>(k))
          return fail("arc labels along a component are not consecutive in orientation order");
      components_.push_back({lo, hi});
    }
    std::sort(components_.begin(), components_.end());

    // Crossing signs from the over-strand direction.
    for (int ci = 0; ci < nn; ++ci) {
      Crossing& c = crossings_[static_cast<size_t>(ci)];
      bool in1 = head_[static_cast<size_t>(c.arcs[1])] == ArcSlot{ci, 1};
      bool in3 = head_[static_cast<size_t>(c.arcs[3])] == ArcSlot{ci, 3};
      if (in1 == in3) return fail("over-strand direction unresolved at crossing " + std::to_string(ci));
      c.over_in = in3 ? 3 : 1;
      c.sign = in3 ? +1 : -1;
    }

    trace_faces();
    check_connected();
  }

  void trace_faces() {
    const int na = arc_count();
    dart_face_.assign(static_cast<size_t>(2 * (na + 1)), -1);
    corner_face_.assign(static_cast<size_t>(4 * n()), -1);
    int fc = 0;
    for (int a = 1; a <= na; ++a) {
      for (int dir = 0; dir < 2; ++dir) {
        if (dart_face_[static_cast<size_t>(2 * a + dir)] != -1) continue;
        int ca = a, cd = dir;
        while (dart_face_[static_cast<size_t>(2 * ca + cd)] == -1) {
          dart_face_[static_cast<size_t>(2 * ca + cd)] = fc;
          ArcSlot s = cd == 0 ? head_[static_cast<size_t>(ca)] : tail_[static_cast<size_t>(ca)];
          corner_face_[static_cast<size_t>(4 * s.crossing + s.pos)] = fc;
          int p2 = (s.pos + 1) & 3;
          int b = crossings_[static_cast<size_t>(s.crossing)].arcs[static_cast<size_t>(p2)];
          // leave along b, away from slot (s.crossing, p2)
          cd = (tail_[static_cast<size_t>(b)] == ArcSlot{s.crossing, p2}) ? 0 : 1;
          ca = b;
        }
        ++fc;
      }
    }
    face_count_ = fc;
    // Euler check: V - E + F == 1 + (#shadow components)
    planar_ = (n() - arc_count() + face_count_) == 1 + shadow_components();
  }

  int shadow_components() const {
    const int nn = n();
    std::vector<int> par(static_cast<size_t>(nn));
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (par[static_cast<size_t>(x)] != x) x = par[static_cast<size_t>(x)] = par[static_cast<size_t>(par[static_cast<size_t>(x)])];
      return x;
    };
    for (int a = 1; a <= arc_count(); ++a) {
      int u = find(head_[static_cast<size_t>(a)].crossing), v = find(tail_[static_cast<size_t>(a)].crossing);
      if (u != v) par[static_cast<size_t>(u)] = v;
    }
    int comps = 0;
    for (int i = 0; i < nn; ++i)
      if (find(i) == i) ++comps;
    return comps;
  }

  void check_connected() { connected_ = (loops_ == 0) && shadow_components() == 1; }
};

// --- operations --------------------------------------------------------------

// Regions of the diagram as cyclic lists of arc sides, (arc, 0) for the left
// side and (arc, 1) for the right. The lists partition the arc-side set and
// there are E - V + 2 of them for a connected diagram.
inline std::vector<std::vector<std::pair<int, int>>> faces(const Diagram& d) {
  d.require_valid("faces");
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<size_t>(d.face_count()));
  if (d.n() == 0) return out;  // the unknot's two regions have no arc sides
  std::vector<char> seen(static_cast<size_t>(2 * (d.arc_count() + 1)), 0);
  for (int a = 1; a <= d.arc_count(); ++a) {
    for (int dir = 0; dir < 2; ++dir) {
      if (seen[static_cast<size_t>(2 * a + dir)]) continue;
      int face = dir == 0 ? d.left_face(a) : d.right_face(a);
      int ca = a, cd = dir;
      while (!seen[static_cast<size_t>(2 * ca + cd)]) {
        seen[static_cast<size_t>(2 * ca + cd)] = 1;
        out[static_cast<size_t>(face)].push_back({ca, cd});
        ArcSlot s = cd == 0 ? d.head_slot(ca) : d.tail_slot(ca);
        int p2 = (s.pos + 1) & 3;
        int b = d.crossing(s.crossing).arcs[static_cast<size_t>(p2)];
        cd = (d.tail_slot(b) == ArcSlot{s.crossing, p2}) ? 0 : 1;
        ca = b;
      }
    }
  }
  return out;
}

inline std::vector<std::string> validate(const Diagram& d) {
  std::vector<std::string> out;
  if (!d.structurally_ok()) {
    out.push_back(d.defect());
    return out;
  }
  if (!d.planar()) out.push_back("planarity: face trace violates Euler's formula");
  if (d.n() > 0 && !d.connected()) out.push_back("split: diagram is not connected");
  if (d.n() > 0 && d.loop_count() > 0) out.push_back("split: free loops beside crossings");
  if (d.n() == 0 && d.loop_count() > 1) out.push_back("split: multiple crossingless loops");
  return out;
}

inline Diagram parse_pd(const std::string& text) {
  std::istringstream is(text);
  std::string line, name;
  std::vector<std::array<int, 4>> tuples;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "name") {
      std::string rest;
      std::getline(ls, rest);
      size_t b = rest.find_first_not_of(" \t");
      name = b == std::string::npos ? "" : rest.substr(b);
      size_t e = name.find_last_not_of(" \t\r");
      if (e != std::string::npos) name = name.substr(0, e + 1);
      continue;
    }
    if (tok == "X") {
      std::array<int, 4> t{};
      for (int i = 0; i < 4; ++i)
        if (!(ls >> t[static_cast<size_t>(i)]))
          throw parse_error("line " + std::to_string(lineno) + ": malformed crossing line");
      std::string extra;
      if (ls >> extra) throw parse_error("line " + std::to_string(lineno) + ": trailing tokens");
      tuples.push_back(t);
      continue;
    }
    throw parse_error("line " + std::to_string(lineno) + ": unknown directive '" + tok + "'");
  }
  Diagram d(name, std::move(tuples), tuples.empty() ? 1 : 0);
  if (!d.structurally_ok()) throw parse_error(d.defect());
  auto viol = validate(d);
  if (!viol.empty()) throw parse_error(viol.front());
  return d;
}

// Mirror image: over/under swapped at every crossing, rotation system kept.
// Each tuple is rotated to start at the new incoming under-strand, so signs
// negate and the arc structure is unchanged.
inline Diagram mirror(const Diagram& d) {
  d.require_valid("mirror");
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(static_cast<size_t>(d.n()));
  for (const auto& c : d.crossings()) {
    const auto& a = c.arcs;
    if (c.sign > 0)
      tuples.push_back({a[3], a[0], a[1], a[2]});
    else
      tuples.push_back({a[1], a[2], a[3], a[0]});
  }
  return Diagram(d.name(), std::move(tuples), d.loop_count());
}

inline bool same_diagram(const Diagram& a, const Diagram& b) {
  if (a.n() != b.n() || a.loop_count() != b.loop_count()) return false;
  if (a.n() == 0) return true;
  return a.canonical_key() == b.canonical_key();
}

}  // namespace tangletwist
