#pragma once

// Generic adversarial Client pool. The paper's Client is worst-case; these
// policies exercise strategies from several directions. All are deterministic
// given seed and history.

#include <cstdint>
#include <memory>
#include <random>

#include "wcg/graph.hpp"
#include "wcg/strategy.hpp"

namespace wcg {

class UniformRandomClient : public ClientPolicy {
 public:
  explicit UniformRandomClient(std::uint64_t seed) : seed_(seed), rng_(seed) {}

  std::string id() const override { return "uniform-random"; }

  int choose(const GameState&, const Offer& offer) override {
    // rng() % size keeps choices reproducible across standard libraries.
    return static_cast<int>(rng_() % offer.size());
  }

  std::unique_ptr<ClientPolicy> clone() const override {
    auto c = std::make_unique<UniformRandomClient>(seed_);
    c->rng_ = rng_;
    return c;
  }

 private:
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

// Picks the offered edge whose endpoints carry the least Waiter degree,
// starving the balancing arguments the strategies rely on.
class MinWaiterDegreeClient : public ClientPolicy {
 public:
  std::string id() const override { return "min-waiter-degree"; }

  int choose(const GameState& g, const Offer& offer) override {
    int best = 0;
    int best_score = 1 << 30;
    for (int i = 0; i < static_cast<int>(offer.size()); ++i) {
      const Edge& e = offer.edges[i];
      int score = g.waiter_degree(e.u) + g.waiter_degree(e.v);
      if (score < best_score) {
        best_score = score;
        best = i;
      }
    }
    return best;
  }

  std::unique_ptr<ClientPolicy> clone() const override {
    return std::make_unique<MinWaiterDegreeClient>(*this);
  }
};

enum class StructureTarget { kPerfectMatching, kHamiltonCycle, kSpanningTree };

// The last-edge-avoiding adversary behind the lower-bound arguments: never
// pick an edge that completes the target structure while an alternative
// exists; among non-completing edges, maximize conflict with the structure
// (prefer endpoints already busy in Client's graph).
class AntiStructureClient : public ClientPolicy {
 public:
  explicit AntiStructureClient(StructureTarget target,
                               std::vector<std::vector<int>> tree_adj = {})
      : target_(target), tree_adj_(std::move(tree_adj)) {}

  std::string id() const override { return "anti-structure"; }

  bool completes(const GameState& g, const Edge& e) const {
    std::vector<Edge> c = g.edges_owned_by(Owner::kClient);
    c.push_back(e);
    int nv = g.vertex_count();
    switch (target_) {
      case StructureTarget::kPerfectMatching:
        if (static_cast<int>(c.size()) < nv / 2) return false;
        return has_perfect_matching(nv, c);
      case StructureTarget::kHamiltonCycle:
        if (static_cast<int>(c.size()) < nv) return false;
        return contains_hamilton_cycle(nv, c);
      case StructureTarget::kSpanningTree:
        if (static_cast<int>(c.size()) < nv - 1) return false;
        return contains_spanning_tree_copy(nv, c, tree_adj_);
    }
    return false;
  }

  int choose(const GameState& g, const Offer& offer) override {
    int best = -1, best_score = -1;
    for (int i = 0; i < static_cast<int>(offer.size()); ++i) {
      const Edge& e = offer.edges[i];
      if (completes(g, e)) continue;
      int score = g.client_degree(e.u) + g.client_degree(e.v);
      if (score > best_score) {
        best_score = score;
        best = i;
      }
    }
    return best >= 0 ? best : 0;  // all offered edges complete: forced
  }

  std::unique_ptr<ClientPolicy> clone() const override {
    return std::make_unique<AntiStructureClient>(*this);
  }

 private:
  StructureTarget target_;
  std::vector<std::vector<int>> tree_adj_;
};

}  // namespace wcg
