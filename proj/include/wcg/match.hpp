#pragma once

// Drives a Waiter strategy against a Client policy, collecting the
// certificate, probe findings and round counts. Also provides the exhaustive
// driver that walks every Client reply sequence of a deterministic strategy.

#include <functional>
#include <memory>
#include <string>

#include "wcg/certificate.hpp"
#include "wcg/strategy.hpp"

namespace wcg {

enum class ProbeLevel { kOff, kFinal, kPerRound };

struct MatchResult {
  int real_rounds = 0;
  int fake_rounds = 0;
  bool forfeited = false;
  std::string forfeit_reason;
  Certificate certificate;
  bool certificate_valid = false;
  std::string certificate_reason;
  ProbeReport probes;

  bool clean() const { return !forfeited && certificate_valid && probes.clean(); }
};

struct MatchOptions {
  ProbeLevel probe_level = ProbeLevel::kFinal;
  int max_rounds = -1;  // safety stop; defaults to the board size
};

inline MatchResult run_match(GameState& game, WaiterStrategy& strategy, ClientPolicy& client,
                             const MatchOptions& opts = {}) {
  MatchResult result;
  long long max_rounds =
      opts.max_rounds > 0 ? opts.max_rounds
                          : static_cast<long long>(game.vertex_count()) * game.vertex_count() + 64;
  try {
    while (!strategy.finished(game)) {
      if (game.total_rounds() > max_rounds) throw EngineError("round safety limit exceeded");
      StrategyMove mv = strategy.next_move(game);
      if (mv.kind == StrategyMove::Kind::kDone) break;
      if (mv.kind == StrategyMove::Kind::kFake) {
        game.apply_fake_round();
      } else {
        int pick = client.choose(game, mv.offer);
        game.apply_round(mv.offer, pick);
      }
      strategy.on_pick(game);
      if (opts.probe_level == ProbeLevel::kPerRound) result.probes.merge(strategy.probe(game));
    }
  } catch (const ForfeitError& e) {
    result.forfeited = true;
    result.forfeit_reason = e.what();
  }
  result.real_rounds = game.real_rounds();
  result.fake_rounds = game.fake_rounds();
  if (!result.forfeited) {
    if (opts.probe_level != ProbeLevel::kOff) result.probes.merge(strategy.final_probe(game));
    result.certificate = strategy.certificate(game);
    ValidationResult v = validate_certificate(game, result.certificate);
    result.certificate_valid = v.ok;
    result.certificate_reason = v.reason;
  }
  return result;
}

inline MatchResult run_match(const BoardSpec& board, WaiterStrategy& strategy,
                             ClientPolicy& client, const MatchOptions& opts = {}) {
  GameState game(board);
  return run_match(game, strategy, client, opts);
}

struct ExhaustiveStats {
  long long leaves = 0;
  int max_rounds = 0;
  int min_rounds = 1 << 30;
  long long failures = 0;
};

// Walks the full Client reply tree of a deterministic strategy. leaf_check is
// called with (game, strategy) at each leaf and returns true when that branch
// is acceptable. States and strategies are cloned at branch points, so this is
// only intended for small boards.
inline ExhaustiveStats enumerate_replies(
    const GameState& game, const WaiterStrategy& strategy,
    const std::function<bool(const GameState&, const WaiterStrategy&)>& leaf_check,
    ProbeLevel probe_level = ProbeLevel::kOff, ProbeReport* probes = nullptr) {
  ExhaustiveStats stats;
  std::function<void(const GameState&, const WaiterStrategy&)> walk =
      [&](const GameState& g, const WaiterStrategy& s) {
        std::unique_ptr<WaiterStrategy> strat = s.clone();
        GameState cur = g;
        while (!strat->finished(cur)) {
          StrategyMove mv = strat->next_move(cur);
          if (mv.kind == StrategyMove::Kind::kDone) break;
          if (mv.kind == StrategyMove::Kind::kFake) {
            cur.apply_fake_round();
            strat->on_pick(cur);
            if (probe_level == ProbeLevel::kPerRound && probes) probes->merge(strat->probe(cur));
            continue;
          }
          if (mv.offer.size() > 1) {
            // branch on every pick but the last, continue in-place on index 0
            for (int pick = 1; pick < static_cast<int>(mv.offer.size()); ++pick) {
              GameState child = cur;
              std::unique_ptr<WaiterStrategy> child_strat = strat->clone();
              child.apply_round(mv.offer, pick);
              child_strat->on_pick(child);
              if (probe_level == ProbeLevel::kPerRound && probes)
                probes->merge(child_strat->probe(child));
              walk(child, *child_strat);
              // walk() clones again; acceptable for the tiny boards involved
            }
          }
          cur.apply_round(mv.offer, 0);
          strat->on_pick(cur);
          if (probe_level == ProbeLevel::kPerRound && probes) probes->merge(strat->probe(cur));
        }
        ++stats.leaves;
        stats.max_rounds = std::max(stats.max_rounds, cur.real_rounds());
        stats.min_rounds = std::min(stats.min_rounds, cur.real_rounds());
        if (probe_level != ProbeLevel::kOff && probes) probes->merge(strat->final_probe(cur));
        if (!leaf_check(cur, *strat)) ++stats.failures;
      };
  walk(game, strategy);
  return stats;
}

}  // namespace wcg
