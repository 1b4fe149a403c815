#pragma once

// Small-graph predicates used by adversarial client policies and certificate
// checks: perfect-matching / Hamilton-cycle / spanning-tree-copy detection on
// the sparse graphs a Client accumulates (at most ~n+1 edges).

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <vector>

#include "wcg/core.hpp"

namespace wcg {

inline std::vector<std::vector<int>> adjacency(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Perfect matching on all n vertices. Leaf-stripping resolves forced edges;
// what remains has min degree >= 2 and few edges, so plain branching is cheap.
inline bool has_perfect_matching(int n, const std::vector<Edge>& edges) {
  if (n % 2 != 0) return false;
  if (static_cast<int>(edges.size()) < n / 2) return false;
  std::vector<std::vector<int>> adj = adjacency(n, edges);
  std::vector<int> deg(n);
  std::vector<char> gone(n, 0);
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());

  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) stack.push_back(v);
  auto alive_neighbour = [&](int v) {
    for (int w : adj[v])
      if (!gone[w]) return w;
    return -1;
  };
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    if (gone[v]) continue;
    if (deg[v] == 0) return false;  // isolated, unmatched
    int w = alive_neighbour(v);
    if (w < 0) return false;
    gone[v] = gone[w] = 1;  // forced pair
    for (int x : adj[w])
      if (!gone[x] && --deg[x] <= 1) stack.push_back(x);
    for (int x : adj[v])
      if (!gone[x] && --deg[x] <= 1) stack.push_back(x);
  }

  // Remaining vertices all have degree >= 2. Branch on the lowest vertex.
  std::function<bool()> branch = [&]() {
    int v = -1;
    for (int x = 0; x < n; ++x)
      if (!gone[x]) {
        v = x;
        break;
      }
    if (v < 0) return true;
    gone[v] = 1;
    for (int w : adj[v]) {
      if (gone[w]) continue;
      gone[w] = 1;
      if (branch()) {
        gone[v] = gone[w] = 0;
        return true;
      }
      gone[w] = 0;
    }
    gone[v] = 0;
    return false;
  };
  return branch();
}

// Does the graph contain a Hamilton cycle? Only sensible for graphs with at
// most a couple of edges beyond n; tries every way to discard the excess.
inline bool contains_hamilton_cycle(int n, const std::vector<Edge>& edges) {
  int m = static_cast<int>(edges.size());
  if (m < n || n < 3) return false;
  auto is_ham = [&](const std::vector<char>& use) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < m; ++i)
      if (use[i]) {
        adj[edges[i].u].push_back(edges[i].v);
        adj[edges[i].v].push_back(edges[i].u);
      }
    for (int v = 0; v < n; ++v)
      if (adj[v].size() != 2) return false;
    // connected and 2-regular => one cycle through everything
    int cur = 0, prev = -1, steps = 0;
    do {
      int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++steps;
    } while (cur != 0 && steps <= n);
    return cur == 0 && steps == n;
  };
  int excess = m - n;
  std::vector<char> use(m, 1);
  std::function<bool(int, int)> drop = [&](int from, int left) {
    if (left == 0) return is_ham(use);
    for (int i = from; i < m; ++i) {
      use[i] = 0;
      if (drop(i + 1, left - 1)) return true;
      use[i] = 1;
    }
    return false;
  };
  return drop(0, excess);
}

// AHU canonical code of a tree rooted at r (parent = -1 at the root).
inline std::string tree_code(const std::vector<std::vector<int>>& adj, int r, int parent) {
  std::vector<std::string> child_codes;
  for (int w : adj[r])
    if (w != parent) child_codes.push_back(tree_code(adj, w, r));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (const std::string& c : child_codes) code += c;
  code += ")";
  return code;
}

inline std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> deg(n), order;
  for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
  std::vector<int> layer;
  for (int v = 0; v < n; ++v)
    if (deg[v] <= 1) layer.push_back(v);
  int removed = 0;
  while (removed + static_cast<int>(layer.size()) < n) {
    removed += static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  return layer;
}

inline std::string tree_canonical_code(const std::vector<std::vector<int>>& adj) {
  std::vector<int> centers = tree_centers(adj);
  std::string best;
  for (int c : centers) {
    std::string code = tree_code(adj, c, -1);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

inline bool trees_isomorphic(const std::vector<std::vector<int>>& a,
                             const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  return tree_canonical_code(a) == tree_canonical_code(b);
}

// Does `edges` (on n board vertices, m <= n) contain a spanning tree
// isomorphic to the given tree? With m == n-1 the graph must itself be that
// tree; with m == n it has one cycle and we try removing each cycle edge.
inline bool contains_spanning_tree_copy(int n, const std::vector<Edge>& edges,
                                        const std::vector<std::vector<int>>& tree_adj) {
  int m = static_cast<int>(edges.size());
  if (m < n - 1 || static_cast<int>(tree_adj.size()) != n) return false;

  auto spanning_and_iso = [&](const std::vector<Edge>& es) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int comps = n;
    for (const Edge& e : es) {
      int ru = find(e.u), rv = find(e.v);
      if (ru == rv) return false;  // cycle => not a tree
      parent[ru] = rv;
      --comps;
    }
    if (comps != 1) return false;
    return trees_isomorphic(adjacency(n, es), tree_adj);
  };

  if (m == n - 1) return spanning_and_iso(edges);
  // m >= n: try dropping each subset of (m - n + 1) edges; in play this is
  // at most 2 since a Client never holds more than n+1 edges mid-game.
  int drop_count = m - (n - 1);
  std::vector<int> idx(drop_count);
  std::function<bool(int, int)> rec = [&](int from, int k) {
    if (k == drop_count) {
      std::vector<Edge> es;
      es.reserve(n - 1);
      int p = 0;
      for (int i = 0; i < m; ++i) {
        if (p < drop_count && idx[p] == i) {
          ++p;
          continue;
        }
        es.push_back(edges[i]);
      }
      return spanning_and_iso(es);
    }
    for (int i = from; i < m; ++i) {
      idx[k] = i;
      if (rec(i + 1, k + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace wcg
