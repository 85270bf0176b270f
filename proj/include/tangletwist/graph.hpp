#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stack>
#include <vector>

#include "tangletwist/errors.hpp"

namespace tangletwist {

// Signed multigraph (parallel edges and loops representable). Used for the
// Seifert graph and the Tait graph; `crossing` records each edge's source
// crossing id in the originating diagram.
struct SignedGraph {
  struct Edge {
    int u = 0, v = 0;
    int sign = 0;
    int crossing = -1;
  };
  int nv = 0;
  std::vector<Edge> edges;

  int ne() const { return static_cast<int>(edges.size()); }
};

inline bool is_connected(const SignedGraph& g) {
  if (g.nv <= 1) return true;
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.nv));
  for (const auto& e : g.edges)
    if (e.u != e.v) {
      adj[static_cast<size_t>(e.u)].push_back(e.v);
      adj[static_cast<size_t>(e.v)].push_back(e.u);
    }
  std::vector<char> vis(static_cast<size_t>(g.nv), 0);
  std::stack<int> st;
  st.push(0);
  vis[0] = 1;
  int count = 1;
  while (!st.empty()) {
    int x = st.top();
    st.pop();
    for (int y : adj[static_cast<size_t>(x)])
      if (!vis[static_cast<size_t>(y)]) {
        vis[static_cast<size_t>(y)] = 1;
        ++count;
        st.push(y);
      }
  }
  return count == g.nv;
}

// Cut vertices and biconnected blocks of a connected multigraph. Blocks
// partition the edge set; a loop edge forms its own singleton block. Blocks
// are ordered by their smallest contained edge id for determinism.
struct BlockDecomposition {
  std::set<int> cut_vertices;
  std::vector<std::vector<int>> blocks;  // edge ids
};

inline BlockDecomposition blocks(const SignedGraph& g) {
  if (!is_connected(g)) throw domain_error("blocks: disconnected graph");
  BlockDecomposition out;
  const int n = g.nv;
  const int m = g.ne();
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<size_t>(n));  // (neighbor, edge id)
  for (int e = 0; e < m; ++e) {
    if (g.edges[static_cast<size_t>(e)].u == g.edges[static_cast<size_t>(e)].v) {
      out.blocks.push_back({e});  // loop
      continue;
    }
    adj[static_cast<size_t>(g.edges[static_cast<size_t>(e)].u)].push_back({g.edges[static_cast<size_t>(e)].v, e});
    adj[static_cast<size_t>(g.edges[static_cast<size_t>(e)].v)].push_back({g.edges[static_cast<size_t>(e)].u, e});
  }
  std::vector<int> num(static_cast<size_t>(n), 0), low(static_cast<size_t>(n), 0);
  std::vector<char> is_cut(static_cast<size_t>(n), 0);
  std::vector<int> estack;
  int timer = 0;

  // iterative DFS
  struct Frame {
    int v, parent_edge;
    size_t it;
  };
  for (int root = 0; root < n; ++root) {
    if (num[static_cast<size_t>(root)] != 0) continue;
    int root_children = 0;
    std::stack<Frame> st;
    num[static_cast<size_t>(root)] = low[static_cast<size_t>(root)] = ++timer;
    st.push({root, -1, 0});
    while (!st.empty()) {
      Frame& f = st.top();
      if (f.it < adj[static_cast<size_t>(f.v)].size()) {
        auto [w, eid] = adj[static_cast<size_t>(f.v)][f.it++];
        if (eid == f.parent_edge) continue;
        if (num[static_cast<size_t>(w)] == 0) {
          estack.push_back(eid);
          num[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = ++timer;
          if (f.v == root) ++root_children;
          st.push({w, eid, 0});
        } else if (num[static_cast<size_t>(w)] < num[static_cast<size_t>(f.v)]) {
          estack.push_back(eid);
          low[static_cast<size_t>(f.v)] = std::min(low[static_cast<size_t>(f.v)], num[static_cast<size_t>(w)]);
        }
      } else {
        int v = f.v, pe = f.parent_edge;
        st.pop();
        if (st.empty()) break;
        int u = st.top().v;
        low[static_cast<size_t>(u)] = std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(v)]);
        if (low[static_cast<size_t>(v)] >= num[static_cast<size_t>(u)]) {
          // u is a cut vertex (unless root handled below); pop one block
          if (u != root) is_cut[static_cast<size_t>(u)] = 1;
          std::vector<int> blk;
          while (!estack.empty()) {
            int e = estack.back();
            // stop after popping the tree edge into v
            estack.pop_back();
            blk.push_back(e);
            if (e == pe) break;
          }
          std::sort(blk.begin(), blk.end());
          out.blocks.push_back(std::move(blk));
        }
      }
    }
    if (root_children >= 2) is_cut[static_cast<size_t>(root)] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (is_cut[static_cast<size_t>(v)]) out.cut_vertices.insert(v);
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });
  return out;
}

// --- spanning-tree counts ------------------------------------------------

// s_v = number of spanning trees with exactly v positive edges, by exhaustive
// enumeration. This is the oracle path; signed_tree_sum below is the
// workhorse. Enumeration is limited to 16 edges.
struct TreeSignature {
  std::map<int, long long> counts;  // v -> s_v

  long long total() const {
    long long t = 0;
    for (auto& [v, c] : counts) t += c;
    return t;
  }
  long long signed_sum() const {
    long long t = 0;
    for (auto& [v, c] : counts) t += (v % 2 == 0 ? c : -c);
    return t;
  }
};

inline TreeSignature tree_signature(const SignedGraph& g) {
  const int m = g.ne();
  if (m > 16) throw resource_error("tree_signature: enumeration limited to 16 edges");
  TreeSignature sig;
  if (!is_connected(g)) return sig;  // all-zero signature, signed sum 0
  const int n = g.nv;
  if (n == 0) return sig;
  const int k = n - 1;
  std::vector<int> par(static_cast<size_t>(n));
  // enumerate k-subsets of edges
  std::vector<int> idx(static_cast<size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  if (k == 0) {
    sig.counts[0] = 1;
    return sig;
  }
  if (k > m) return sig;
  while (true) {
    // acyclicity + spanning via union-find
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
      while (par[static_cast<size_t>(x)] != x)
        x = par[static_cast<size_t>(x)] = par[static_cast<size_t>(par[static_cast<size_t>(x)])];
      return x;
    };
    bool ok = true;
    int pos = 0;
    for (int i : idx) {
      const auto& e = g.edges[static_cast<size_t>(i)];
      int a = find(e.u), b = find(e.v);
      if (a == b) {
        ok = false;
        break;
      }
      par[static_cast<size_t>(a)] = b;
      if (e.sign > 0) ++pos;
    }
    if (ok) sig.counts[pos] += 1;
    // next combination
    int j = k - 1;
    while (j >= 0 && idx[static_cast<size_t>(j)] == m - k + j) --j;
    if (j < 0) break;
    ++idx[static_cast<size_t>(j)];
    for (int t = j + 1; t < k; ++t) idx[static_cast<size_t>(t)] = idx[static_cast<size_t>(t - 1)] + 1;
  }
  return sig;
}

namespace detail {

// Fraction-free Bareiss determinant over the integers.
inline __int128 bareiss_det(std::vector<std::vector<__int128>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  __int128 sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[static_cast<size_t>(i)][static_cast<size_t>(k)] != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(p)]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        __int128 num = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)] -
                       a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
        a[static_cast<size_t>(i)][static_cast<size_t>(j)] = num / prev;  // exact by Bareiss
      }
    prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
  }
  return sign * a[static_cast<size_t>(n - 1)][static_cast<size_t>(n - 1)];
}

}  // namespace detail

// Sum over spanning trees of (-1)^{v(T)}, computed by the weighted
// matrix-tree theorem: weight -1 on positive edges, +1 on negative ones, so
// each tree contributes prod(weights) = (-1)^{v(T)}. Exact integer
// elimination; loops contribute nothing; disconnected graphs give 0.
inline long long signed_tree_sum(const SignedGraph& g) {
  const int n = g.nv;
  if (n == 0) return 0;
  if (n == 1) return 1;  // the empty tree
  std::vector<std::vector<__int128>> lap(static_cast<size_t>(n), std::vector<__int128>(static_cast<size_t>(n), 0));
  for (const auto& e : g.edges) {
    if (e.u == e.v) continue;
    __int128 w = e.sign > 0 ? -1 : 1;
    lap[static_cast<size_t>(e.u)][static_cast<size_t>(e.u)] += w;
    lap[static_cast<size_t>(e.v)][static_cast<size_t>(e.v)] += w;
    lap[static_cast<size_t>(e.u)][static_cast<size_t>(e.v)] -= w;
    lap[static_cast<size_t>(e.v)][static_cast<size_t>(e.u)] -= w;
  }
  // first minor
  std::vector<std::vector<__int128>> minor(static_cast<size_t>(n - 1), std::vector<__int128>(static_cast<size_t>(n - 1)));
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      minor[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = lap[static_cast<size_t>(i)][static_cast<size_t>(j)];
  __int128 det = detail::bareiss_det(std::move(minor));
  return static_cast<long long>(det);
}

}  // namespace tangletwist
