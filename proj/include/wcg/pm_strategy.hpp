#pragma once

// Waiter strategies for the unbiased perfect matching game: the bipartite
// strategy with an obstacle set (greedy Stage I shrinking e_{W∪H}(R), then a
// five-round endgame script on the leftover quadruples), and its reduction to
// K_n by playing on a fixed balanced bipartition.

#include <algorithm>
#include <memory>
#include <vector>

#include "wcg/strategy.hpp"

namespace wcg {

class PmBipartiteStrategy : public WaiterStrategy {
 public:
  // Plays on the A x B sub-board of `g`. Pairs already claimed or excluded at
  // construction act as the obstacle set H; Client must own none of A x B.
  PmBipartiteStrategy(const GameState& g, std::vector<int> side_a, std::vector<int> side_b)
      : side_a_(std::move(side_a)), side_b_(std::move(side_b)) {
    m_ = static_cast<int>(side_a_.size());
    if (m_ != static_cast<int>(side_b_.size())) throw EngineError("pm sides must have equal size");
    if (m_ < 8) throw EngineError("pm strategy needs side size >= 8");
    std::sort(side_a_.begin(), side_a_.end());
    std::sort(side_b_.begin(), side_b_.end());
    a_in_r_.assign(m_, 1);
    b_in_r_.assign(m_, 1);
    long long h = 0;
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) {
        Owner o = g.owner(side_a_[i], side_b_[j]);
        if (o == Owner::kClient) throw EngineError("pm sub-board already has Client edges");
        h += o != Owner::kFree;
      }
    initial_obstacles_ = h;
  }

  std::string id() const override { return "pm-bipartite"; }

  StrategyMove next_move(const GameState& g) override {
    if (round_ < m_ - 4) return stage1_offer(g);
    if (script_pos_ < 5) return stage2_offer(g);
    return StrategyMove::done();
  }

  void on_pick(const GameState& g) override {
    const RoundRecord& rec = g.history().back();
    const Edge picked = rec.offer.edges[rec.pick];
    int a = on_side_a(picked), b = on_side_b(picked);
    if (round_ < m_ - 4) {
      matching_.push_back(picked);
      a_in_r_[a] = 0;
      b_in_r_[b] = 0;
      ++round_;
      return;
    }
    // Stage II relabelling: fold Client's actual pick into the script labels.
    switch (script_pos_) {
      case 0:
        if (t_[0] != side_b_[b]) std::swap(t_[0], t_[1]);
        break;
      case 1:
        // picked partner becomes t2, the two rejects slide into t3/t4
        if (t_[2] == side_b_[b])
          std::swap(t_[1], t_[2]);
        else
          std::swap(t_[1], t_[3]);
        break;
      case 2:
        if (t_[2] != side_b_[b]) std::swap(t_[2], t_[3]);
        break;
      case 3:
        if (s_[2] != side_a_[a]) std::swap(s_[2], s_[3]);
        break;
      case 4: {
        int tj = t_[0] == side_b_[b] ? 0 : 1;
        matching_.push_back(Edge(s_[3], t_[tj]));
        matching_.push_back(Edge(s_[0], t_[1 - tj]));
        matching_.push_back(Edge(s_[1], t_[2]));
        matching_.push_back(Edge(s_[2], t_[3]));
        break;
      }
    }
    ++script_pos_;
    ++round_;
  }

  bool finished(const GameState&) const override { return script_pos_ >= 5; }

  Certificate certificate(const GameState&) const override {
    Certificate c;
    c.kind = Certificate::Kind::kMatching;
    c.matching = matching_;
    return c;
  }

  // Inequality (1): e_{W∪H}(R) <= max{0, (|R| - n) / 2}, maintained through
  // every Stage I round; at Stage I end it also certifies e_{W∪H}(S,T) = 0.
  bool check_eqpm(const GameState& g) const {
    long long e = obstacle_edges_inside_r(g);
    long long r = r_size();
    return 2 * e <= std::max<long long>(0, r - m_);
  }

  ProbeReport probe(const GameState& g) const override {
    ProbeReport rep;
    if (round_ <= m_ - 4)
      rep.expect(check_eqpm(g), "pm.eq1",
                 "e_{W∪H}(R) exceeds max{0,(|R|-n)/2} after round " + std::to_string(round_),
                 round_);
    return rep;
  }

  ProbeReport final_probe(const GameState&) const override {
    ProbeReport rep;
    rep.expect(round_ == m_ + 1, "pm.rounds", "total rounds " + std::to_string(round_));
    rep.expect(stage2_entry_clean_, "pm.stage2-clean",
               "e_{W∪H}(S,T) != 0 when entering Stage II");
    return rep;
  }

  std::unique_ptr<WaiterStrategy> clone() const override {
    return std::make_unique<PmBipartiteStrategy>(*this);
  }

  int rounds_played() const { return round_; }
  long long initial_obstacles() const { return initial_obstacles_; }
  const std::vector<Edge>& matching() const { return matching_; }

  // Availability bound behind Stage I: |B∩R| - d_{W∪H}(u, B∩R) is at least
  // min{|R|/2, n/2} >= 2 for the chosen u.
  long long stage1_availability(const GameState& g, int u_board) const {
    long long cnt = 0;
    for (int j = 0; j < m_; ++j)
      if (b_in_r_[j] && g.is_free(u_board, side_b_[j])) ++cnt;
    return cnt;
  }

 private:
  StrategyMove stage1_offer(const GameState& g) {
    int best_a = -1;
    long long best_d = -1;
    for (int i = 0; i < m_; ++i) {
      if (!a_in_r_[i]) continue;
      long long d = 0;
      for (int j = 0; j < m_; ++j)
        if (b_in_r_[j] && g.owner(side_a_[i], side_b_[j]) != Owner::kFree) ++d;
      if (d > best_d) {
        best_d = d;
        best_a = i;
      }
    }
    if (best_a < 0) throw ForfeitError("pm stage I: R empty on side A");
    int u = side_a_[best_a];
    std::vector<Edge> picks;
    for (int j = 0; j < m_ && picks.size() < 2; ++j)
      if (b_in_r_[j] && g.is_free(u, side_b_[j])) picks.push_back(Edge(u, side_b_[j]));
    if (picks.size() < 2) throw ForfeitError("pm stage I: fewer than two free partners");
    return StrategyMove::make_offer(Offer{picks[0], picks[1]});
  }

  StrategyMove stage2_offer(const GameState& g) {
    if (script_pos_ == 0 && s_[0] < 0) {
      int si = 0, ti = 0;
      for (int i = 0; i < m_; ++i) {
        if (a_in_r_[i]) s_[si++] = side_a_[i];
        if (b_in_r_[i]) t_[ti++] = side_b_[i];
      }
      if (si != 4 || ti != 4) throw ForfeitError("pm stage II: leftover sets not quadruples");
      stage2_entry_clean_ = true;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (!g.is_free(s_[i], t_[j])) stage2_entry_clean_ = false;
    }
    Edge e1, e2;
    switch (script_pos_) {
      case 0: e1 = Edge(s_[0], t_[0]); e2 = Edge(s_[0], t_[1]); break;
      case 1: e1 = Edge(s_[0], t_[2]); e2 = Edge(s_[0], t_[3]); break;
      case 2: e1 = Edge(s_[1], t_[2]); e2 = Edge(s_[1], t_[3]); break;
      case 3: e1 = Edge(s_[2], t_[3]); e2 = Edge(s_[3], t_[3]); break;
      default: e1 = Edge(s_[3], t_[0]); e2 = Edge(s_[3], t_[1]); break;
    }
    if (!g.is_free(e1) || !g.is_free(e2)) throw ForfeitError("pm stage II: script edge claimed");
    return StrategyMove::make_offer(Offer{e1, e2});
  }

  long long obstacle_edges_inside_r(const GameState& g) const {
    long long e = 0;
    for (int i = 0; i < m_; ++i) {
      if (!a_in_r_[i]) continue;
      for (int j = 0; j < m_; ++j) {
        if (!b_in_r_[j]) continue;
        Owner o = g.owner(side_a_[i], side_b_[j]);
        e += (o == Owner::kWaiter || o == Owner::kExcluded);
      }
    }
    return e;
  }

  long long r_size() const {
    long long r = 0;
    for (int i = 0; i < m_; ++i) r += a_in_r_[i] + b_in_r_[i];
    return r;
  }

  int on_side_a(const Edge& e) const {
    auto it = std::lower_bound(side_a_.begin(), side_a_.end(), e.u);
    if (it != side_a_.end() && *it == e.u) return static_cast<int>(it - side_a_.begin());
    it = std::lower_bound(side_a_.begin(), side_a_.end(), e.v);
    if (it != side_a_.end() && *it == e.v) return static_cast<int>(it - side_a_.begin());
    throw EngineError("edge endpoint not on side A");
  }

  int on_side_b(const Edge& e) const {
    auto it = std::lower_bound(side_b_.begin(), side_b_.end(), e.u);
    if (it != side_b_.end() && *it == e.u) return static_cast<int>(it - side_b_.begin());
    it = std::lower_bound(side_b_.begin(), side_b_.end(), e.v);
    if (it != side_b_.end() && *it == e.v) return static_cast<int>(it - side_b_.begin());
    throw EngineError("edge endpoint not on side B");
  }

  std::vector<int> side_a_, side_b_;
  int m_ = 0;
  std::vector<char> a_in_r_, b_in_r_;  // Client-isolated vertices, by side index
  std::vector<Edge> matching_;
  long long initial_obstacles_ = 0;
  int round_ = 0;
  int script_pos_ = 0;
  bool stage2_entry_clean_ = false;
  int s_[4] = {-1, -1, -1, -1};
  int t_[4] = {-1, -1, -1, -1};
};

// Theorem-level reduction: on K_n (n even), fix the bipartition {0..n/2-1}
// versus {n/2..n-1} and run the bipartite strategy with an empty obstacle
// set; a perfect matching of K_n appears within n/2 + 1 rounds.
class PmCompleteStrategy : public WaiterStrategy {
 public:
  explicit PmCompleteStrategy(const GameState& g) {
    int n = g.vertex_count();
    if (n % 2 != 0) throw EngineError("pm-complete needs even n");
    if (n < 16) throw EngineError("pm-complete needs n >= 16");
    std::vector<int> a(n / 2), b(n / 2);
    for (int i = 0; i < n / 2; ++i) {
      a[i] = i;
      b[i] = n / 2 + i;
    }
    inner_ = std::make_unique<PmBipartiteStrategy>(g, std::move(a), std::move(b));
  }

  PmCompleteStrategy(const PmCompleteStrategy& o)
      : inner_(std::make_unique<PmBipartiteStrategy>(*o.inner_)) {}

  std::string id() const override { return "pm-complete"; }
  StrategyMove next_move(const GameState& g) override { return inner_->next_move(g); }
  void on_pick(const GameState& g) override { inner_->on_pick(g); }
  bool finished(const GameState& g) const override { return inner_->finished(g); }
  Certificate certificate(const GameState& g) const override { return inner_->certificate(g); }
  ProbeReport probe(const GameState& g) const override { return inner_->probe(g); }
  ProbeReport final_probe(const GameState& g) const override { return inner_->final_probe(g); }

  std::unique_ptr<WaiterStrategy> clone() const override {
    return std::make_unique<PmCompleteStrategy>(*this);
  }

  const PmBipartiteStrategy& inner() const { return *inner_; }

 private:
  std::unique_ptr<PmBipartiteStrategy> inner_;
};

}  // namespace wcg
