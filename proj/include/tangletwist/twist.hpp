#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "tangletwist/errors.hpp"
#include "tangletwist/pd.hpp"
#include "tangletwist/rng.hpp"
#include "tangletwist/seifert.hpp"
#include "tangletwist/tangle.hpp"
#include "tangletwist/wiring.hpp"

namespace tangletwist {

struct TwistSpec {
  int crossing = 0;       // crossing id in the source diagram
  TangleBlock block;      // must extend the target crossing
  bool oriented = false;  // additionally require an extending orientation
};

namespace detail {

// Fragment compass end attached to each tuple position of the excised
// crossing, chosen so the identity blocks [1] / [-1] reproduce the crossing
// exactly: sign +1 maps the tuple to (SW, SE, NE, NW), sign -1 to
// (NW, SW, SE, NE).
inline std::array<int, 4> gluing_frame(int sign) {
  if (sign > 0) return {PORT_SW, PORT_SE, PORT_NE, PORT_NW};
  return {PORT_NW, PORT_SW, PORT_SE, PORT_NE};
}

struct CrossingProvenance {
  int leaf = -1;              // -1 for ambient crossings
  int box = -1;               // 1-based box index within the leaf
  bool vertical_box = false;  // geometric orientation of the box
};

struct SurgeryResult {
  Diagram diagram;
  bool orientation_clash = false;
  std::vector<CrossingProvenance> provenance;  // per new crossing id
};

// Rebuild the diagram as a wiring with the target crossing replaced by the
// rendered block; ambient arcs keep their orientation and labels as
// priorities so the relabeling is canonical.
inline SurgeryResult surgery(const Diagram& d, int crossing, const TangleBlock& block) {
  d.require_valid("replace_crossing");
  if (crossing < 0 || crossing >= d.n()) throw domain_error("replace_crossing: no such crossing");
  const int sign_c = d.crossing(crossing).sign;
  if (!extends(block, sign_c))
    throw domain_error("replace_crossing: block does not extend the crossing (sign mismatch)");

  Wiring w;
  std::vector<int> cmap(static_cast<size_t>(d.n()), -1);
  for (int ci = 0; ci < d.n(); ++ci)
    if (ci != crossing) cmap[static_cast<size_t>(ci)] = w.add_crossing(1);
  Fragment f = render(w, block);
  auto frame = gluing_frame(sign_c);

  auto map_port = [&](const ArcSlot& s) {
    if (s.crossing == crossing) return f.ends[static_cast<size_t>(frame[static_cast<size_t>(s.pos)])];
    return Wiring::port(cmap[static_cast<size_t>(s.crossing)], s.pos);
  };
  for (int arc = 1; arc <= d.arc_count(); ++arc) {
    int pt = map_port(d.tail_slot(arc));
    int ph = map_port(d.head_slot(arc));
    w.connect(pt, ph, arc);
    w.set_flow(ph, 1);
    w.set_flow(pt, 2);
  }

  FinalizeResult fin = finalize(w, d.name());
  SurgeryResult out;
  out.orientation_clash = fin.orientation_clash;
  for (const auto& wc : w.crossings) out.provenance.push_back({wc.leaf, wc.box, wc.vertical_box});
  out.diagram = std::move(fin.diagram);
  return out;
}

}  // namespace detail

// True iff the block, glued in place of the oriented crossing, admits the
// induced orientation: the flows through the tangle must be consistent (no
// strand is forced to run both ways) and every inserted crossing must come
// out with the target crossing's Seifert type. The orientation is never
// chosen — the surgery induces it — so this is a pure predicate; tangles
// such as [2] (which reverses a strand) or [2,1] (whose horizontal box is
// forced to the opposite type) do not extend, while [3] or [1,2] do. Type
// uniformity is exactly what the class-preservation theorems need: it keeps
// homogeneity, alternativity and positivity intact under the twist.
inline bool orientation_extends(const Diagram& d, int crossing, const TangleBlock& block,
                                std::string* reason = nullptr) {
  const int sign_c = d.crossing(crossing).sign;
  if (!extends(block, sign_c)) {
    if (reason) *reason = "does not extend (sign mismatch)";
    return false;
  }
  auto res = detail::surgery(d, crossing, block);
  if (res.orientation_clash) {
    if (reason) *reason = "no orientation extends";
    return false;
  }
  const Diagram& dd = res.diagram;
  if (!dd.structurally_ok()) {
    if (reason) *reason = "surgery result degenerate: " + dd.defect();
    return false;
  }
  for (int ci = 0; ci < dd.n(); ++ci) {
    const auto& pv = res.provenance[static_cast<size_t>(ci)];
    if (pv.leaf < 0) continue;
    if (dd.crossing(ci).sign != sign_c) {
      if (reason) *reason = "induced crossing type differs from the target";
      return false;
    }
  }
  if (reason) reason->clear();
  return true;
}

// Replace a crossing by a block of rational tangles that extends it. The
// result has c(D) - 1 + c(block) crossings and canonical arc labels.
inline Diagram replace_crossing(const Diagram& d, const TwistSpec& spec) {
  auto res = detail::surgery(d, spec.crossing, spec.block);
  if (!res.diagram.structurally_ok())
    throw domain_error("replace_crossing: degenerate result: " + res.diagram.defect());
  if (!res.diagram.connected() || res.diagram.loop_count() > 0)
    throw domain_error("replace_crossing: surgery yields a split diagram");
  if (spec.oriented) {
    if (res.orientation_clash)
      throw domain_error("replace_crossing: no orientation extends the crossing");
    const int sign_c = d.crossing(spec.crossing).sign;
    for (int ci = 0; ci < res.diagram.n(); ++ci) {
      const auto& pv = res.provenance[static_cast<size_t>(ci)];
      if (pv.leaf < 0) continue;
      if (res.diagram.crossing(ci).sign != sign_c)
        throw domain_error("replace_crossing: induced crossing type differs from the target");
    }
  }
  int expect = d.n() - 1 + block_crossing_count(spec.block);
  if (res.diagram.n() != expect) throw internal_error("replace_crossing: crossing-count law violated");
  return res.diagram;
}

// Instantiate `pattern` (one '?' hole) over the range and twist; yields
// members in range order.
inline std::vector<Diagram> generate_family(const Diagram& d, int crossing, const std::string& pattern,
                                            int lo, int hi, bool oriented = false) {
  std::vector<Diagram> out;
  for (int k = lo; k <= hi; ++k) {
    TwistSpec spec{crossing, instantiate_pattern(pattern, k), oriented};
    out.push_back(replace_crossing(d, spec));
  }
  return out;
}

// Deterministic random two-level block extending a crossing of the given
// sign, with at most max_crossings crossings in total.
inline TangleBlock random_extending_block(std::uint64_t seed, int sign, int max_crossings) {
  if (max_crossings < 1) throw domain_error("random_extending_block: max_crossings must be >= 1");
  Rng rng(splitmix64(seed));
  auto random_leaf = [&](int budget) {
    int m = 1 + static_cast<int>(rng.below(3));
    std::vector<int> entries;
    int used = 0;
    for (int i = 0; i < m && used < budget; ++i) {
      int a = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(3, budget - used))));
      entries.push_back(sign * a);
      used += a;
    }
    return TangleBlock::leaf(std::move(entries));
  };
  int budget = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_crossings)));
  int shape = static_cast<int>(rng.below(3));  // 0 leaf, 1 product of sums, 2 sum of products
  if (shape == 0 || budget < 4) return random_leaf(budget);
  int outer = 2;
  std::vector<TangleBlock> rows;
  for (int i = 0; i < outer; ++i) {
    int row_budget = std::max(2, budget / outer);
    if (rng.flip() || row_budget < 2) {
      rows.push_back(random_leaf(row_budget));
    } else {
      std::vector<TangleBlock> leaves;
      leaves.push_back(random_leaf(std::max(1, row_budget / 2)));
      leaves.push_back(random_leaf(std::max(1, row_budget - row_budget / 2)));
      rows.push_back(shape == 1 ? TangleBlock::sum(std::move(leaves))
                                : TangleBlock::product(std::move(leaves)));
    }
  }
  return shape == 1 ? TangleBlock::product(std::move(rows)) : TangleBlock::sum(std::move(rows));
}

// --- diagram builders ---------------------------------------------------------

// Standard pretzel diagram: the numerator closure of the side-by-side sum of
// vertical twist strands, |p_i| crossings of sign(p_i) in strand i.
inline Diagram pretzel(const std::vector<int>& p, std::string name = "") {
  if (p.size() < 2) throw domain_error("pretzel: need at least 2 strands");
  for (int x : p)
    if (x == 0) throw domain_error("pretzel: zero strand");
  std::vector<TangleBlock> strands;
  strands.reserve(p.size());
  for (int x : p) strands.push_back(TangleBlock::leaf({x}));
  if (name.empty()) {
    name = "pretzel(";
    for (size_t i = 0; i < p.size(); ++i) name += (i ? "," : "") + std::to_string(p[i]);
    name += ")";
  }
  return closure(TangleBlock::sum(std::move(strands)), Closure::numerator, std::move(name));
}

// Continued fraction of a reduced fraction beta/alpha (alpha > 0) with all
// entries of one sign, inverting the slope() convention.
inline ContinuedFraction cf_from_slope(long long beta, long long alpha) {
  if (alpha <= 0 || beta == 0) throw domain_error("cf_from_slope: need alpha > 0 and beta != 0");
  if (std::gcd(std::abs(beta), alpha) != 1) throw domain_error("cf_from_slope: fraction not reduced");
  bool neg = beta < 0;
  long long b = std::abs(beta), a = alpha;
  // slope = b/a = 1/(x_n + 1/( ... + 1/x_1)): peel quotients from a/b
  std::vector<int> rev;
  while (b != 0) {
    rev.push_back(static_cast<int>(a / b));
    long long r = a % b;
    a = b;
    b = r;
  }
  // a/b continued fraction gives x_n first; entries are reversed
  ContinuedFraction cf;
  cf.a.assign(rev.rbegin(), rev.rend());
  // Euclidean expansion can end with a trailing quotient of 1 in place a_1;
  // that is fine (entries stay positive), but any zero first entry is not.
  if (cf.a.front() == 0) throw domain_error("cf_from_slope: degenerate expansion");
  if (neg)
    for (int& x : cf.a) x = -x;
  auto s = slope(cf);
  if (s.alpha != alpha || s.beta != beta) throw internal_error("cf_from_slope: expansion check failed");
  return cf;
}

// Montesinos diagram M((alpha_i, beta_i); (gamma_j, delta_j)): each strand of
// the template pretzel replaced by the rational tangle of the corresponding
// slope. With all fractions (2,1) and (-2,1) this reduces to the pretzel
// itself.
inline Diagram montesinos(const std::vector<std::pair<long long, long long>>& pos,
                          const std::vector<std::pair<long long, long long>>& neg,
                          std::string name = "") {
  if (pos.size() < 2 || neg.size() < 2) throw domain_error("montesinos: need >= 2 fractions of each sign");
  std::vector<TangleBlock> strands;
  for (auto& [alpha, beta] : pos) {
    if (alpha <= 1 || beta <= 0 || std::gcd(alpha, beta) != 1)
      throw domain_error("montesinos: positive fractions need coprime alpha > 1, beta > 0");
    strands.push_back(TangleBlock::leaf(cf_from_slope(beta, alpha).a));
  }
  for (auto& [gamma, delta] : neg) {
    if (gamma >= -1 || delta <= 0 || std::gcd(-gamma, delta) != 1)
      throw domain_error("montesinos: negative fractions need gamma < -1, delta > 0, coprime");
    // slope delta/gamma < 0: tangle of slope -delta/|gamma|
    strands.push_back(TangleBlock::leaf(cf_from_slope(-delta, -gamma).a));
  }
  if (name.empty()) name = "montesinos";
  return closure(TangleBlock::sum(std::move(strands)), Closure::numerator, std::move(name));
}

// Closure of a braid word on `strands` strands; letter i > 0 is sigma_i
// (strand i crosses over strand i+1), i < 0 its inverse. Strands are
// oriented upward.
inline Diagram braid_closure(const std::vector<int>& word, int strands, std::string name = "") {
  if (strands < 2) throw domain_error("braid_closure: need >= 2 strands");
  Wiring w;
  std::vector<int> cur(static_cast<size_t>(strands), -1), first(static_cast<size_t>(strands), -1);
  long long prio = 0;
  for (int letter : word) {
    int i = std::abs(letter);
    if (i < 1 || i >= strands) throw domain_error("braid_closure: letter out of range");
    int c = w.add_crossing(letter > 0 ? 0 : 1);  // sigma_i: over strand runs SW->NE
    int bl = Wiring::port(c, PORT_SW), br = Wiring::port(c, PORT_SE);
    int tl = Wiring::port(c, PORT_NW), tr = Wiring::port(c, PORT_NE);
    w.set_flow(bl, 1);
    w.set_flow(br, 1);
    w.set_flow(tl, 2);
    w.set_flow(tr, 2);
    size_t a = static_cast<size_t>(i - 1), b = static_cast<size_t>(i);
    if (cur[a] < 0)
      first[a] = bl;
    else
      w.connect(cur[a], bl, prio++);
    if (cur[b] < 0)
      first[b] = br;
    else
      w.connect(cur[b], br, prio++);
    cur[a] = tl;
    cur[b] = tr;
  }
  for (int j = 0; j < strands; ++j) {
    if (cur[static_cast<size_t>(j)] < 0) {
      ++w.loops;  // strand never crossed: a split circle; caller validates
      continue;
    }
    w.connect(cur[static_cast<size_t>(j)], first[static_cast<size_t>(j)], prio++);
  }
  return finalize(w, std::move(name)).diagram;
}

}  // namespace tangletwist
