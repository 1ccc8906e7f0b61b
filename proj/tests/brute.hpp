#pragma once

// Brute-force reference computations used only by tests. Each works straight
// from the definitions on adjacency queries and shares no code with the
// library's solvers.

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "romandom/graph.hpp"

namespace brute {

using romandom::Graph;

inline bool k_dominating(const Graph& g, int k, unsigned mask) {
  for (int v = 0; v < g.order(); ++v) {
    if (mask >> v & 1U) continue;
    int inside = 0;
    for (int u = 0; u < g.order(); ++u) inside += (u != v && g.adjacent(u, v) && (mask >> u & 1U));
    if (inside < k) return false;
  }
  return true;
}

/// Minimum k-dominating set size over all 2^n subsets.
inline int gamma_k(const Graph& g, int k) {
  int best = g.order();
  for (unsigned mask = 0; mask < (1U << g.order()); ++mask) {
    if (k_dominating(g, k, mask)) best = std::min(best, std::popcount(mask));
  }
  return best;
}

/// Lexicographically least optimal k-dominating set as a 0/1 string.
inline std::string gamma_k_witness(const Graph& g, int k) {
  const int n = g.order();
  int best = gamma_k(g, k);
  std::vector<std::string> optima;
  for (unsigned mask = 0; mask < (1U << n); ++mask) {
    if (std::popcount(mask) != best || !k_dominating(g, k, mask)) continue;
    std::string s(n, '0');
    for (int v = 0; v < n; ++v) s[v] = (mask >> v & 1U) ? '1' : '0';
    optima.push_back(s);
  }
  return *std::min_element(optima.begin(), optima.end());
}

/// Minimum weight over all 3^n labelings satisfying the RkDF condition, and
/// the lexicographically least labeling attaining it (as a digit string).
inline std::pair<int, std::string> gamma_kr(const Graph& g, int k) {
  const int n = g.order();
  std::string f(n, '0');
  int best = 2 * n + 1;
  std::string arg;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    int c = code;
    // Most significant digit is vertex 0, so codes ascend lexicographically.
    for (int v = n - 1; v >= 0; --v, c /= 3) f[v] = static_cast<char>('0' + c % 3);
    bool ok = true;
    int w = 0;
    for (int v = 0; v < n && ok; ++v) {
      w += f[v] - '0';
      if (f[v] != '0') continue;
      int twos = 0;
      for (int u = 0; u < n; ++u) twos += (u != v && g.adjacent(u, v) && f[u] == '2');
      ok = twos >= k;
    }
    if (ok && w < best) {
      best = w;
      arg = f;
    }
  }
  return {best, arg};
}

/// Largest set of distinct RkDFs whose labels sum to at most 2k at every
/// vertex, by trying every subset of the valid labelings.
inline int d_rk(const Graph& g, int k) {
  const int n = g.order();
  std::vector<std::vector<int>> valid;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::vector<int> f(n);
    int c = code;
    for (int v = 0; v < n; ++v, c /= 3) f[v] = c % 3;
    bool ok = true;
    for (int v = 0; v < n && ok; ++v) {
      if (f[v] != 0) continue;
      int twos = 0;
      for (int u = 0; u < n; ++u) twos += (u != v && g.adjacent(u, v) && f[u] == 2);
      ok = twos >= k;
    }
    if (ok) valid.push_back(f);
  }
  std::vector<int> load(n, 0);
  int best = 0;
  std::function<void(std::size_t, int)> grow = [&](std::size_t next, int size) {
    best = std::max(best, size);
    for (std::size_t i = next; i < valid.size(); ++i) {
      bool fits = true;
      for (int v = 0; v < n && fits; ++v) fits = load[v] + valid[i][v] <= 2 * k;
      if (!fits) continue;
      for (int v = 0; v < n; ++v) load[v] += valid[i][v];
      grow(i + 1, size + 1);
      for (int v = 0; v < n; ++v) load[v] -= valid[i][v];
    }
  };
  grow(0, 0);
  return best;
}

/// Largest partition of V into k-dominating blocks, by enumerating every set
/// partition as a restricted growth string.
inline int d_k(const Graph& g, int k) {
  const int n = g.order();
  std::vector<int> block(n, 0);
  int best = 0;
  std::function<void(int, int)> assign = [&](int v, int blocks) {
    if (v == n) {
      for (int b = 0; b < blocks; ++b) {
        unsigned mask = 0;
        for (int u = 0; u < n; ++u) mask |= (block[u] == b ? 1U : 0U) << u;
        if (!k_dominating(g, k, mask)) return;
      }
      best = std::max(best, blocks);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      block[v] = b;
      assign(v + 1, std::max(blocks, b + 1));
    }
  };
  assign(0, 0);
  return best;
}

/// Any vertex bijection mapping edges of a onto edges of b.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < a.order() && ok; ++u)
      for (int v = u + 1; v < a.order() && ok; ++v)
        ok = a.adjacent(u, v) == b.adjacent(perm[u], perm[v]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Every labelled graph on n vertices, edge subsets in increasing mask order.
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned mask = 0; mask < (1U << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if (mask >> e & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    out.push_back(std::move(g));
  }
  return out;
}

inline Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

}  // namespace brute
