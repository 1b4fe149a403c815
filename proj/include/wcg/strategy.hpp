#pragma once

// Strategy and client-policy interfaces. A Waiter strategy exposes next_move
// (an offer, a fake round, or done) and on_pick; it owns all its bookkeeping
// and emits its certificate incrementally. A Client policy exposes choose.
//
// Probes check the per-round invariants the proofs maintain. Findings with
// ok == false are strategy bugs, not game outcomes.

#include <memory>
#include <string>
#include <vector>

#include "wcg/certificate.hpp"
#include "wcg/core.hpp"

namespace wcg {

struct StrategyMove {
  enum class Kind { kOffer, kFake, kDone };
  Kind kind = Kind::kDone;
  Offer offer;

  static StrategyMove make_offer(Offer o) { return {Kind::kOffer, std::move(o)}; }
  static StrategyMove fake() { return {Kind::kFake, {}}; }
  static StrategyMove done() { return {Kind::kDone, {}}; }
};

struct ProbeFinding {
  std::string clause;
  bool ok = true;
  std::string detail;
  int round = -1;
};

struct ProbeReport {
  std::vector<ProbeFinding> findings;
  int checks = 0;

  void expect(bool ok, const std::string& clause, const std::string& detail = "", int round = -1) {
    ++checks;
    if (!ok) findings.push_back({clause, false, detail, round});
  }
  void merge(const ProbeReport& other) {
    checks += other.checks;
    findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  }
  bool clean() const { return findings.empty(); }
  std::size_t failures() const { return findings.size(); }
};

class WaiterStrategy {
 public:
  virtual ~WaiterStrategy() = default;

  virtual std::string id() const = 0;
  virtual StrategyMove next_move(const GameState& g) = 0;
  // Called after the engine applied the round; game.history().back() holds it.
  virtual void on_pick(const GameState& g) = 0;
  virtual bool finished(const GameState& g) const = 0;
  virtual Certificate certificate(const GameState& g) const = 0;

  // Per-round invariant checks; default none.
  virtual ProbeReport probe(const GameState&) const { return {}; }
  // Checks run once when the game is over.
  virtual ProbeReport final_probe(const GameState&) const { return {}; }

  virtual std::unique_ptr<WaiterStrategy> clone() const = 0;
};

class ClientPolicy {
 public:
  virtual ~ClientPolicy() = default;
  virtual std::string id() const = 0;
  virtual int choose(const GameState& g, const Offer& offer) = 0;
  virtual std::unique_ptr<ClientPolicy> clone() const = 0;
};

}  // namespace wcg
