#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tangletwist/pd.hpp"

namespace tangletwist {

// A state assigns +1 (A-smoothing) or -1 (B-smoothing) to every crossing,
// indexed by crossing id (position in Diagram::crossings()).
struct State {
  std::vector<int8_t> s;

  int sigma() const {
    int t = 0;
    for (auto v : s) t += v;
    return t;
  }
};

inline State all_A(const Diagram& d) { return State{std::vector<int8_t>(static_cast<size_t>(d.n()), +1)}; }
inline State all_B(const Diagram& d) { return State{std::vector<int8_t>(static_cast<size_t>(d.n()), -1)}; }

struct SmoothingResult {
  int circle_count = 0;
  // per crossing id: the two circle ids its smoothing arcs lie on
  std::vector<std::pair<int, int>> touch;
};

namespace detail {

// Union-find over arc labels 1..2n (plus free loops as extra singletons).
class ArcUnion {
 public:
  explicit ArcUnion(int arcs) : par_(static_cast<size_t>(arcs + 1)) {
    for (int i = 0; i <= arcs; ++i) par_[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (par_[static_cast<size_t>(x)] != x) {
      par_[static_cast<size_t>(x)] = par_[static_cast<size_t>(par_[static_cast<size_t>(x)])];
      x = par_[static_cast<size_t>(x)];
    }
    return x;
  }
  // returns true if a merge happened
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    par_[static_cast<size_t>(a)] = b;
    return true;
  }

 private:
  std::vector<int> par_;
};

}  // namespace detail

// The A-smoothing joins tuple positions (0,1) and (2,3); the B-smoothing
// joins (0,3) and (1,2). This is the single source of truth for the
// smoothing scheme; every module consumes it through resolve()/Crossing.
inline SmoothingResult resolve(const Diagram& d, const State& st) {
  if (static_cast<int>(st.s.size()) != d.n()) throw domain_error("resolve: partial state");
  const int na = d.arc_count();
  detail::ArcUnion uf(na);
  int merges = 0;
  for (int ci = 0; ci < d.n(); ++ci) {
    const auto& a = d.crossing(ci).arcs;
    if (st.s[static_cast<size_t>(ci)] > 0) {
      if (uf.unite(a[0], a[1])) ++merges;
      if (uf.unite(a[2], a[3])) ++merges;
    } else {
      if (uf.unite(a[0], a[3])) ++merges;
      if (uf.unite(a[1], a[2])) ++merges;
    }
  }
  SmoothingResult r;
  r.circle_count = (d.n() == 0 ? 0 : na - merges) + d.loop_count();
  r.touch.reserve(static_cast<size_t>(d.n()));
  for (int ci = 0; ci < d.n(); ++ci) {
    const auto& a = d.crossing(ci).arcs;
    if (st.s[static_cast<size_t>(ci)] > 0)
      r.touch.push_back({uf.find(a[0]), uf.find(a[2])});
    else
      r.touch.push_back({uf.find(a[0]), uf.find(a[1])});
  }
  return r;
}

inline bool is_A_adequate(const Diagram& d) {
  d.require_valid("is_A_adequate");
  auto r = resolve(d, all_A(d));
  for (auto& t : r.touch)
    if (t.first == t.second) return false;
  return true;
}

inline bool is_B_adequate(const Diagram& d) {
  d.require_valid("is_B_adequate");
  auto r = resolve(d, all_B(d));
  for (auto& t : r.touch)
    if (t.first == t.second) return false;
  return true;
}

inline bool is_adequate(const Diagram& d) { return is_A_adequate(d) && is_B_adequate(d); }

// Definitional check by enumeration: |s_A D| > |sD| over all states with
// sigma(s) = n-2, i.e. exactly one crossing flipped to B (and symmetrically
// for the B side). Used by tests as the independent oracle for the
// touch-pair criterion above.
inline bool is_A_adequate_by_enumeration(const Diagram& d) {
  const int base = resolve(d, all_A(d)).circle_count;
  for (int i = 0; i < d.n(); ++i) {
    State s = all_A(d);
    s.s[static_cast<size_t>(i)] = -1;
    if (base <= resolve(d, s).circle_count) return false;
  }
  return true;
}

inline bool is_B_adequate_by_enumeration(const Diagram& d) {
  const int base = resolve(d, all_B(d)).circle_count;
  for (int i = 0; i < d.n(); ++i) {
    State s = all_B(d);
    s.s[static_cast<size_t>(i)] = +1;
    if (base <= resolve(d, s).circle_count) return false;
  }
  return true;
}

}  // namespace tangletwist
