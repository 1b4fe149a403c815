#pragma once

// Exact minimax computation of tau_WC for arbitrary biased Waiter-Client
// hypergraph games on tiny boards. Waiter minimizes the number of rounds to
// force a Client win; Client never completes a set while he can avoid it and
// otherwise maximizes the round count. Positions are memoized on the pair of
// claimed bitmasks; the offer in progress is not a state.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wcg/core.hpp"

namespace wcg {

struct HypergraphGame {
  int num_elements = 0;
  std::vector<std::uint32_t> winning_sets;  // bitmasks over the universe
  int bias = 1;

  void validate(int max_elements = 16) const {
    if (num_elements < 1 || num_elements > max_elements)
      throw EngineError("universe size out of solver budget");
    if (bias < 1) throw EngineError("bias must be >= 1");
    std::uint32_t full = full_mask();
    for (std::uint32_t w : winning_sets) {
      if (w == 0) throw EngineError("empty winning set");
      if ((w & ~full) != 0) throw EngineError("winning set outside universe");
    }
  }

  std::uint32_t full_mask() const { return (num_elements == 32) ? ~0u : ((1u << num_elements) - 1); }
};

struct SolveStep {
  std::vector<int> offer;  // element indices
  int pick = -1;           // Client's (adversarially optimal) reply
};

struct SolveResult {
  std::optional<int> tau;  // nullopt = Unwinnable
  std::vector<SolveStep> principal_variation;
  std::uint64_t states_visited = 0;

  bool winnable() const { return tau.has_value(); }
};

class ExactSolver {
 public:
  static constexpr int kUnwinnable = std::numeric_limits<int>::max() / 2;

  explicit ExactSolver(HypergraphGame game, std::uint64_t state_budget = 200'000'000)
      : game_(std::move(game)), state_budget_(state_budget) {
    game_.validate();
  }

  const HypergraphGame& game() const { return game_; }

  int value(std::uint32_t waiter, std::uint32_t client) {
    std::uint64_t key = (static_cast<std::uint64_t>(waiter) << 32) | client;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    if (++states_ > state_budget_) throw EngineError("solver state budget exceeded");

    int result;
    if (client_won(client)) {
      result = 0;
    } else {
      std::uint32_t free = game_.full_mask() & ~(waiter | client);
      if (free == 0) {
        result = kUnwinnable;
      } else {
        std::vector<int> elems = bits(free);
        int k = std::min<int>(game_.bias + 1, static_cast<int>(elems.size()));
        int best = kUnwinnable;
        std::vector<int> comb(k);
        enumerate_offers(elems, k, comb, 0, 0, [&](const std::vector<int>& offer) {
          std::uint32_t omask = 0;
          for (int e : offer) omask |= 1u << e;
          int worst = 0;
          for (int e : offer) {
            int child = value(waiter | (omask & ~(1u << e)), client | (1u << e));
            if (child > worst) worst = child;
            if (worst >= best) break;  // cannot improve on best
          }
          if (worst < best) best = worst;
        });
        result = best >= kUnwinnable ? kUnwinnable : best + 1;
      }
    }
    memo_.emplace(key, result);
    return result;
  }

  // Lexicographically first offer achieving the minimax value at a solved
  // position. Empty at terminal positions.
  std::vector<int> optimal_offer(std::uint32_t waiter, std::uint32_t client) {
    int v = value(waiter, client);
    if (v == 0 || v >= kUnwinnable) return {};
    std::uint32_t free = game_.full_mask() & ~(waiter | client);
    std::vector<int> elems = bits(free);
    int k = std::min<int>(game_.bias + 1, static_cast<int>(elems.size()));
    std::vector<int> comb(k), found;
    enumerate_offers(elems, k, comb, 0, 0, [&](const std::vector<int>& offer) {
      if (!found.empty()) return;
      std::uint32_t omask = 0;
      for (int e : offer) omask |= 1u << e;
      int worst = 0;
      for (int e : offer)
        worst = std::max(worst, value(waiter | (omask & ~(1u << e)), client | (1u << e)));
      if (worst + 1 == v) found = offer;
    });
    return found;
  }

  SolveResult solve() {
    SolveResult res;
    int v = value(0, 0);
    res.states_visited = states_;
    if (v >= kUnwinnable) return res;
    res.tau = v;
    // Walk the adversarially-optimal line from the root.
    std::uint32_t waiter = 0, client = 0;
    while (!client_won(client)) {
      SolveStep step;
      step.offer = optimal_offer(waiter, client);
      if (step.offer.empty()) break;
      std::uint32_t omask = 0;
      for (int e : step.offer) omask |= 1u << e;
      int worst = -1;
      for (int e : step.offer) {
        int child = value(waiter | (omask & ~(1u << e)), client | (1u << e));
        if (child > worst) {
          worst = child;
          step.pick = e;
        }
      }
      waiter |= omask & ~(1u << step.pick);
      client |= 1u << step.pick;
      res.principal_variation.push_back(step);
    }
    res.states_visited = states_;
    return res;
  }

  // Self-consistency: value(pos) == 1 + min_offer max_pick value(child) at
  // every memoized non-terminal node. Returns the number of nodes checked.
  std::uint64_t check_self_consistency() {
    std::vector<std::pair<std::uint64_t, int>> snapshot(memo_.begin(), memo_.end());
    std::uint64_t checked = 0;
    for (const auto& [key, val] : snapshot) {
      std::uint32_t waiter = static_cast<std::uint32_t>(key >> 32);
      std::uint32_t client = static_cast<std::uint32_t>(key & 0xffffffffu);
      if (client_won(client)) {
        if (val != 0) throw EngineError("terminal node with nonzero value");
        ++checked;
        continue;
      }
      std::uint32_t free = game_.full_mask() & ~(waiter | client);
      if (free == 0) {
        if (val != kUnwinnable) throw EngineError("exhausted node not marked unwinnable");
        ++checked;
        continue;
      }
      std::vector<int> elems = bits(free);
      int k = std::min<int>(game_.bias + 1, static_cast<int>(elems.size()));
      int best = kUnwinnable;
      std::vector<int> comb(k);
      enumerate_offers(elems, k, comb, 0, 0, [&](const std::vector<int>& offer) {
        std::uint32_t omask = 0;
        for (int e : offer) omask |= 1u << e;
        int worst = 0;
        for (int e : offer)
          worst = std::max(worst, value(waiter | (omask & ~(1u << e)), client | (1u << e)));
        best = std::min(best, worst);
      });
      int expect = best >= kUnwinnable ? kUnwinnable : best + 1;
      if (val != expect) throw EngineError("memo node inconsistent with recomputation");
      ++checked;
    }
    return checked;
  }

  std::uint64_t states_visited() const { return states_; }

 private:
  bool client_won(std::uint32_t client) const {
    for (std::uint32_t w : game_.winning_sets)
      if ((client & w) == w) return true;
    return false;
  }

  static std::vector<int> bits(std::uint32_t mask) {
    std::vector<int> out;
    for (int i = 0; mask; ++i, mask >>= 1)
      if (mask & 1) out.push_back(i);
    return out;
  }

  template <typename F>
  static void enumerate_offers(const std::vector<int>& elems, int k, std::vector<int>& comb,
                               int start, int depth, F&& fn) {
    if (depth == k) {
      fn(comb);
      return;
    }
    for (int i = start; i <= static_cast<int>(elems.size()) - (k - depth); ++i) {
      comb[depth] = elems[i];
      enumerate_offers(elems, k, comb, i + 1, depth + 1, fn);
    }
  }

  HypergraphGame game_;
  std::uint64_t state_budget_;
  std::uint64_t states_ = 0;
  std::unordered_map<std::uint64_t, int> memo_;
};

inline SolveResult tau_wc(const HypergraphGame& game) { return ExactSolver(game).solve(); }

// Winning-set builders for the tiny boards used in cross-checks. Elements are
// the edges of K_n in lexicographic order.
namespace tiny {

inline std::vector<Edge> complete_edges(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back(Edge(u, v));
  return edges;
}

inline int edge_id(int n, const Edge& e) {
  return e.u * (2 * n - e.u - 1) / 2 + (e.v - e.u - 1);
}

inline HypergraphGame perfect_matching_game(int n, int bias = 1) {
  std::vector<Edge> edges = complete_edges(n);
  HypergraphGame g;
  g.num_elements = static_cast<int>(edges.size());
  g.bias = bias;
  std::vector<int> verts(n);
  std::function<void(std::vector<int>&, std::uint32_t)> rec = [&](std::vector<int>& rest,
                                                                  std::uint32_t mask) {
    if (rest.empty()) {
      g.winning_sets.push_back(mask);
      return;
    }
    int a = rest[0];
    for (std::size_t i = 1; i < rest.size(); ++i) {
      int b = rest[i];
      std::vector<int> next;
      for (std::size_t j = 1; j < rest.size(); ++j)
        if (j != i) next.push_back(rest[j]);
      rec(next, mask | (1u << edge_id(n, Edge(a, b))));
    }
  };
  for (int i = 0; i < n; ++i) verts[i] = i;
  rec(verts, 0);
  std::sort(g.winning_sets.begin(), g.winning_sets.end());
  g.winning_sets.erase(std::unique(g.winning_sets.begin(), g.winning_sets.end()),
                       g.winning_sets.end());
  return g;
}

inline HypergraphGame connectivity_game(int n, int bias = 1) {
  // Minimal winning sets: spanning trees.
  std::vector<Edge> edges = complete_edges(n);
  int m = static_cast<int>(edges.size());
  HypergraphGame g;
  g.num_elements = m;
  g.bias = bias;
  std::vector<int> comb(n - 1);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n - 1) {
      std::vector<int> parent(n);
      for (int i = 0; i < n; ++i) parent[i] = i;
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      std::uint32_t mask = 0;
      for (int ei : comb) {
        int ru = find(edges[ei].u), rv = find(edges[ei].v);
        if (ru == rv) return;
        parent[ru] = rv;
        mask |= 1u << ei;
      }
      g.winning_sets.push_back(mask);
      return;
    }
    for (int i = start; i <= m - (n - 1 - depth); ++i) {
      comb[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  return g;
}

inline HypergraphGame clique_game(int board_n, int clique_t, int bias = 1) {
  std::vector<Edge> edges = complete_edges(board_n);
  HypergraphGame g;
  g.num_elements = static_cast<int>(edges.size());
  g.bias = bias;
  std::vector<int> comb(clique_t);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == clique_t) {
      std::uint32_t mask = 0;
      for (int i = 0; i < clique_t; ++i)
        for (int j = i + 1; j < clique_t; ++j)
          mask |= 1u << edge_id(board_n, Edge(comb[i], comb[j]));
      g.winning_sets.push_back(mask);
      return;
    }
    for (int v = start; v <= board_n - (clique_t - depth); ++v) {
      comb[depth] = v;
      rec(v + 1, depth + 1);
    }
  };
  rec(0, 0);
  return g;
}

}  // namespace tiny
}  // namespace wcg
