#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "tangletwist/errors.hpp"
#include "tangletwist/laurent.hpp"
#include "tangletwist/pd.hpp"
#include "tangletwist/smoothing.hpp"
#include "tangletwist/tangle.hpp"

namespace tangletwist {

inline int bracket_state_cap() {
  if (const char* env = std::getenv("TANGLETWIST_MAX_N")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 24;
}

// Kauffman bracket by the state sum
//   <D> = sum over states A^{sigma(s)} (-A^2 - A^-2)^{|sD| - 1}.
// States are enumerated in lexicographic order over crossing ids and bucketed
// by (number of B-smoothings, circle count); exact integer coefficients.
inline LaurentPoly bracket(const Diagram& d, int cap = bracket_state_cap()) {
  d.require_valid("bracket");
  const int n = d.n();
  if (n > cap)
    throw resource_error("bracket: " + std::to_string(n) + " crossings exceeds state-sum cap " +
                         std::to_string(cap));
  const int na = d.arc_count();
  // per crossing: arc pairs for A and B smoothings
  std::vector<std::array<int, 4>> pa(static_cast<size_t>(n)), pb(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    const auto& a = d.crossing(i).arcs;
    pa[static_cast<size_t>(i)] = {a[0], a[1], a[2], a[3]};
    pb[static_cast<size_t>(i)] = {a[0], a[3], a[1], a[2]};
  }
  // counts[nb][circles]
  const int maxc = na + d.loop_count() + 1;
  std::vector<std::vector<long long>> counts(static_cast<size_t>(n + 1),
                                             std::vector<long long>(static_cast<size_t>(maxc + 1), 0));
  std::vector<int> parent(static_cast<size_t>(na + 1));
  std::vector<int> stamp(static_cast<size_t>(na + 1), -1);
  if (n == 0) {
    LaurentPoly one = LaurentPoly::constant(1);
    LaurentPoly delta;
    delta.add_term(2, -1);
    delta.add_term(-2, -1);
    LaurentPoly res = one;
    for (int i = 1; i < d.loop_count(); ++i) res = res * delta;
    return res;
  }
  const std::uint64_t total = 1ULL << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    int merges = 0;
    // stamped union-find: a node is a root until touched under this mask
    auto canon = [&](int x) {
      if (stamp[static_cast<size_t>(x)] != static_cast<int>(mask & 0x7fffffff)) {
        stamp[static_cast<size_t>(x)] = static_cast<int>(mask & 0x7fffffff);
        parent[static_cast<size_t>(x)] = x;
      }
      int r = x;
      while (parent[static_cast<size_t>(r)] != r) r = parent[static_cast<size_t>(r)];
      while (parent[static_cast<size_t>(x)] != x) {
        int nx = parent[static_cast<size_t>(x)];
        parent[static_cast<size_t>(x)] = r;
        x = nx;
      }
      return r;
    };
    int nb = 0;
    for (int i = 0; i < n; ++i) {
      const auto& pr = (mask >> i) & 1 ? pb[static_cast<size_t>(i)] : pa[static_cast<size_t>(i)];
      nb += static_cast<int>((mask >> i) & 1);
      int r1 = canon(pr[0]), r2 = canon(pr[1]);
      if (r1 != r2) {
        parent[static_cast<size_t>(r1)] = r2;
        ++merges;
      }
      int r3 = canon(pr[2]), r4 = canon(pr[3]);
      if (r3 != r4) {
        parent[static_cast<size_t>(r3)] = r4;
        ++merges;
      }
    }
    int circles = na - merges + d.loop_count();
    counts[static_cast<size_t>(nb)][static_cast<size_t>(circles)] += 1;
  }
  // assemble polynomial: sum counts * A^{n-2nb} * delta^{circles-1}
  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  std::vector<LaurentPoly> deltapow(static_cast<size_t>(maxc + 1));
  deltapow[0] = LaurentPoly::constant(1);
  for (int k = 1; k <= maxc; ++k) deltapow[static_cast<size_t>(k)] = deltapow[static_cast<size_t>(k - 1)] * delta;
  LaurentPoly res;
  for (int nb = 0; nb <= n; ++nb)
    for (int circles = 1; circles <= maxc; ++circles) {
      long long c = counts[static_cast<size_t>(nb)][static_cast<size_t>(circles)];
      if (c == 0) continue;
      res += deltapow[static_cast<size_t>(circles - 1)].shifted(n - 2 * nb, c);
    }
  return res;
}

// Extreme powers of an adequate diagram without expanding the state sum:
// M = n + 2(|s_A D| - 1), m = -n - 2(|s_B D| - 1).
inline std::pair<int, int> adequate_extremes(const Diagram& d) {
  d.require_valid("adequate_extremes");
  if (!is_adequate(d)) throw domain_error("adequate_extremes: diagram is not adequate");
  int sa = resolve(d, all_A(d)).circle_count;
  int sb = resolve(d, all_B(d)).circle_count;
  return {d.n() + 2 * (sa - 1), -d.n() - 2 * (sb - 1)};
}

// --- exact determinant via the bracket ---------------------------------------
// Evaluate <D> at A = primitive 8th root of unity in Z[A]/(A^4+1); then
// |<D>|^2 = p + q*sqrt(2) with integer p, q. The modulus is an integer
// determinant, so q must vanish and p must be a perfect square; anything else
// signals a bug (the 1e-6 tolerance of the contract is never consumed).
inline long long det_via_bracket(const Diagram& d, int cap = bracket_state_cap()) {
  LaurentPoly p = bracket(d, cap);
  long long c[4] = {0, 0, 0, 0};
  for (auto& [e, coef] : p.coeffs()) {
    int r = ((e % 8) + 8) % 8;
    long long s = (r >= 4) ? -coef : coef;
    c[r % 4] += s;
  }
  __int128 pp = 0, qq = 0;
  for (int i = 0; i < 4; ++i) pp += static_cast<__int128>(c[i]) * c[i];
  qq = static_cast<__int128>(c[0]) * c[1] + static_cast<__int128>(c[1]) * c[2] +
       static_cast<__int128>(c[2]) * c[3] - static_cast<__int128>(c[0]) * c[3];
  if (qq != 0) throw internal_error("det_via_bracket: modulus squared is irrational");
  long double approx = sqrtl(static_cast<long double>(pp));
  long long r = llroundl(approx);
  if (static_cast<__int128>(r) * r != pp) {
    for (long long cand : {r - 1, r + 1}) {
      if (cand >= 0 && static_cast<__int128>(cand) * cand == pp) {
        r = cand;
        pp = static_cast<__int128>(cand) * cand;
        return r;
      }
    }
    throw internal_error("det_via_bracket: modulus is not an integer (rounding breach)");
  }
  return r;
}

// --- extreme-power predictions for twisted diagrams ---------------------------
//
// Per leaf [a_1, ..., a_m] (1-indexed; vertical boxes are the entries with
// i = m mod 2, i.e. the alternation is anchored at the last box):
//   T_+ = (sum over vertical boxes of |a_i|)   - 1 if the first box is vertical
//   T_- = (sum over horizontal boxes of |a_i|) - 1 if the first box is horizontal
// These count the closed circles the leaf contributes to the all-A and all-B
// state diagrams respectively; for odd m they agree with
//   T_+ = sum a_{odd} - 1, T_- = sum a_{even}.
//
// For a block extending a positive crossing, each product junction adds one
// A-state circle and each sum junction one B-state circle:
//   product of l sums of k_n tangles: dA = sum T_+ + (l-1),
//                                     dB = sum T_- + sum (k_n - 1);
//   sum of l products:                dA = sum T_+ + sum (k_n - 1),
//                                     dB = sum T_- + (l-1).
inline std::pair<long long, long long> leaf_T(const std::vector<int>& cf) {
  long long tv = 0, th = 0;
  int m = static_cast<int>(cf.size());
  for (int i = 0; i < m; ++i) {
    bool vertical = ((m - 1 - i) % 2 == 0);
    if (vertical)
      tv += std::abs(cf[static_cast<size_t>(i)]);
    else
      th += std::abs(cf[static_cast<size_t>(i)]);
  }
  bool first_vertical = (m % 2 == 1);
  long long tp = tv - (first_vertical ? 1 : 0);
  long long tm = th - (first_vertical ? 0 : 1);
  return {tp, tm};
}

inline std::pair<long long, long long> predict_state_circle_deltas(const BlockShape& b) {
  long long tplus = 0, tminus = 0, ksum = 0;
  for (const auto& row : b.cf)
    for (const auto& cf : row) {
      auto [tp, tm] = leaf_T(cf);
      tplus += tp;
      tminus += tm;
    }
  for (int kn : b.k) ksum += kn - 1;
  long long dA, dB;
  if (b.mode == BlockShape::Mode::product_of_sums) {
    dA = tplus + (b.l - 1);
    dB = tminus + ksum;
  } else {
    dA = tplus + ksum;
    dB = tminus + (b.l - 1);
  }
  return {dA, dB};
}

// M* = M + sum(a) - 1 + 2*dA and m* = m - sum(a) + 1 - 2*dB, with (dA, dB)
// the state-circle deltas above; valid for a positive-sign target crossing
// in an adequate diagram (mirror first for the negative case).
inline std::pair<long long, long long> predict_twisted_extremes(long long M, long long m,
                                                                const BlockShape& b) {
  long long asum = 0;
  for (const auto& row : b.cf)
    for (const auto& cf : row)
      for (int x : cf) asum += std::abs(x);
  auto [dA, dB] = predict_state_circle_deltas(b);
  return {M + asum - 1 + 2 * dA, m - asum + 1 - 2 * dB};
}

}  // namespace tangletwist
