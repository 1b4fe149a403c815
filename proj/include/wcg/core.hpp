#pragma once

// Board representation and turn mechanics for Waiter-Client positional games
// played on edge sets of complete or complete-bipartite graphs.
//
// A round: Waiter offers min(bias+1, #free) distinct free edges, Client keeps
// exactly one, the rest go to Waiter. The engine enforces offer legality; a
// strategy that cannot produce a legal offer forfeits.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wcg {

struct Edge {
  int u = -1;
  int v = -1;

  Edge() = default;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend bool operator==(const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; }
  friend bool operator!=(const Edge& a, const Edge& b) { return !(a == b); }
  friend bool operator<(const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

enum class Owner : std::uint8_t { kFree, kWaiter, kClient, kExcluded };

enum class BoardKind { kComplete, kBipartite, kCompleteMinus };

// Thrown when an offer or configuration violates the rules of the game.
class EngineError : public std::runtime_error {
 public:
  explicit EngineError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by a Waiter strategy that cannot follow its own script. The proofs
// guarantee this never fires; any occurrence is a bug surfaced to tests.
class ForfeitError : public std::runtime_error {
 public:
  explicit ForfeitError(const std::string& what) : std::runtime_error(what) {}
};

struct BoardSpec {
  BoardKind kind = BoardKind::kComplete;
  int n = 0;  // vertex count for complete boards, per-side count for bipartite
  int bias = 1;
  std::vector<Edge> forbidden;  // only for kCompleteMinus

  static BoardSpec complete(int n, int bias = 1) {
    BoardSpec s;
    s.kind = BoardKind::kComplete;
    s.n = n;
    s.bias = bias;
    return s;
  }

  // Sides are A = {0..n-1}, B = {n..2n-1}.
  static BoardSpec bipartite(int n, int bias = 1) {
    BoardSpec s;
    s.kind = BoardKind::kBipartite;
    s.n = n;
    s.bias = bias;
    return s;
  }

  static BoardSpec complete_minus(int n, std::vector<Edge> forbidden, int bias = 1) {
    BoardSpec s;
    s.kind = BoardKind::kCompleteMinus;
    s.n = n;
    s.bias = bias;
    s.forbidden = std::move(forbidden);
    return s;
  }

  int vertex_count() const { return kind == BoardKind::kBipartite ? 2 * n : n; }

  void validate() const {
    if (n < 2) throw EngineError("board needs n >= 2");
    if (bias < 1) throw EngineError("bias must be >= 1");
    if (kind != BoardKind::kCompleteMinus && !forbidden.empty())
      throw EngineError("forbidden set only valid for complete-minus boards");
    std::vector<Edge> sorted = forbidden;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw EngineError("duplicate edges in forbidden set");
    for (const Edge& e : forbidden) {
      if (e.u < 0 || e.v >= n || e.u == e.v)
        throw EngineError("forbidden edge outside the complete board");
    }
  }
};

struct Offer {
  std::vector<Edge> edges;

  Offer() = default;
  explicit Offer(std::vector<Edge> e) : edges(std::move(e)) {}
  Offer(std::initializer_list<Edge> e) : edges(e) {}

  std::size_t size() const { return edges.size(); }
};

struct RoundRecord {
  bool fake = false;
  Offer offer;   // empty for fake rounds
  int pick = -1; // index into offer.edges, -1 for fake rounds
};

class GameState {
 public:
  explicit GameState(BoardSpec spec) : spec_(std::move(spec)) {
    spec_.validate();
    nv_ = spec_.vertex_count();
    owner_.assign(static_cast<std::size_t>(nv_) * (nv_ - 1) / 2, Owner::kFree);
    wdeg_.assign(nv_, 0);
    cdeg_.assign(nv_, 0);
    wadj_.assign(nv_, {});
    cadj_.assign(nv_, {});
    free_count_ = static_cast<long long>(owner_.size());
    if (spec_.kind == BoardKind::kBipartite) {
      for (int side = 0; side < 2; ++side) {
        int lo = side * spec_.n, hi = lo + spec_.n;
        for (int u = lo; u < hi; ++u)
          for (int v = u + 1; v < hi; ++v) exclude(u, v);
      }
    }
    for (const Edge& e : spec_.forbidden) exclude(e.u, e.v);
  }

  const BoardSpec& spec() const { return spec_; }
  int vertex_count() const { return nv_; }
  int bias() const { return spec_.bias; }
  long long free_count() const { return free_count_; }
  int real_rounds() const { return real_rounds_; }
  int fake_rounds() const { return fake_rounds_; }
  int total_rounds() const { return real_rounds_ + fake_rounds_; }
  bool short_offer_used() const { return short_offer_used_; }
  const std::vector<RoundRecord>& history() const { return history_; }

  Owner owner(int u, int v) const { return owner_[index(u, v)]; }
  Owner owner(const Edge& e) const { return owner(e.u, e.v); }
  bool is_free(int u, int v) const { return owner(u, v) == Owner::kFree; }
  bool is_free(const Edge& e) const { return is_free(e.u, e.v); }
  bool client_has(int u, int v) const { return owner(u, v) == Owner::kClient; }
  bool client_has(const Edge& e) const { return client_has(e.u, e.v); }

  int waiter_degree(int v) const { return wdeg_[v]; }
  int client_degree(int v) const { return cdeg_[v]; }
  // Claimed-edge adjacency; grows by one entry per claimed edge.
  const std::vector<int>& waiter_neighbours(int v) const { return wadj_[v]; }
  const std::vector<int>& client_neighbours(int v) const { return cadj_[v]; }

  std::vector<Edge> edges_owned_by(Owner who) const {
    std::vector<Edge> out;
    for (int u = 0; u < nv_; ++u)
      for (int v = u + 1; v < nv_; ++v)
        if (owner(u, v) == who) out.push_back(Edge(u, v));
    return out;
  }

  long long count_owned(Owner who) const {
    long long c = 0;
    for (Owner o : owner_) c += (o == who);
    return c;
  }

  // Validates the offer against the current position and applies the round:
  // the chosen edge goes to Client, the rest to Waiter.
  void apply_round(const Offer& offer, int pick) {
    validate_offer(offer);
    if (pick < 0 || pick >= static_cast<int>(offer.size()))
      throw EngineError("pick index out of range");
    if (static_cast<long long>(offer.size()) < spec_.bias + 1) short_offer_used_ = true;
    for (int i = 0; i < static_cast<int>(offer.size()); ++i) {
      const Edge& e = offer.edges[i];
      claim(e.u, e.v, i == pick ? Owner::kClient : Owner::kWaiter);
    }
    ++real_rounds_;
    RoundRecord rec;
    rec.fake = false;
    rec.offer = offer;
    rec.pick = pick;
    history_.push_back(std::move(rec));
  }

  // A round the strategy accounts for but does not play on the real board
  // (phantom vertex, move-faking). Ownership is unchanged.
  void apply_fake_round() {
    ++fake_rounds_;
    RoundRecord rec;
    rec.fake = true;
    history_.push_back(std::move(rec));
  }

  // Grants edges to Client outside normal play. Used by the pre-seeded clique
  // oracle and by tests constructing positions; never by strategies mid-game.
  void seed_client_edges(const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      if (!is_free(e)) throw EngineError("seed edge not free");
      claim(e.u, e.v, Owner::kClient);
    }
  }

  void seed_waiter_edges(const std::vector<Edge>& edges) {
    for (const Edge& e : edges) {
      if (!is_free(e)) throw EngineError("seed edge not free");
      claim(e.u, e.v, Owner::kWaiter);
    }
  }

  void validate_offer(const Offer& offer) const {
    if (offer.size() == 0) throw EngineError("empty offer");
    long long want = std::min<long long>(spec_.bias + 1, free_count_);
    if (static_cast<long long>(offer.size()) != want)
      throw EngineError("offer must contain min(bias+1, #free) edges, got " +
                        std::to_string(offer.size()) + " want " + std::to_string(want));
    for (std::size_t i = 0; i < offer.size(); ++i) {
      const Edge& e = offer.edges[i];
      if (e.u < 0 || e.v >= nv_ || e.u == e.v) throw EngineError("offer edge out of range");
      if (!is_free(e)) throw EngineError("offered edge not free");
      for (std::size_t j = i + 1; j < offer.size(); ++j)
        if (e == offer.edges[j]) throw EngineError("duplicate edge in offer");
    }
  }

  bool operator==(const GameState& other) const {
    return owner_ == other.owner_ && real_rounds_ == other.real_rounds_ &&
           fake_rounds_ == other.fake_rounds_;
  }

 private:
  std::size_t index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= nv_ || u == v) throw EngineError("vertex out of range");
    return static_cast<std::size_t>(u) * (2 * nv_ - u - 1) / 2 + (v - u - 1);
  }

  void exclude(int u, int v) {
    Owner& o = owner_[index(u, v)];
    if (o == Owner::kFree) {
      o = Owner::kExcluded;
      --free_count_;
    }
  }

  void claim(int u, int v, Owner who) {
    Owner& o = owner_[index(u, v)];
    if (o != Owner::kFree) throw EngineError("edge not free");
    o = who;
    --free_count_;
    if (who == Owner::kWaiter) {
      ++wdeg_[u];
      ++wdeg_[v];
      wadj_[u].push_back(v);
      wadj_[v].push_back(u);
    } else {
      ++cdeg_[u];
      ++cdeg_[v];
      cadj_[u].push_back(v);
      cadj_[v].push_back(u);
    }
  }

  BoardSpec spec_;
  int nv_ = 0;
  std::vector<Owner> owner_;
  long long free_count_ = 0;
  int real_rounds_ = 0;
  int fake_rounds_ = 0;
  bool short_offer_used_ = false;
  std::vector<RoundRecord> history_;
  std::vector<int> wdeg_, cdeg_;
  std::vector<std::vector<int>> wadj_, cadj_;
};

inline GameState create_game(const BoardSpec& spec) { return GameState(spec); }

}  // namespace wcg
