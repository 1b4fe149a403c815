#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wcg/clients.hpp"
#include "wcg/match.hpp"
#include "wcg/pm_strategy.hpp"

using namespace wcg;

namespace {

std::vector<Edge> random_bipartite_obstacles(int n, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> all;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) all.push_back(Edge(a, n + b));
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(count);
  return all;
}

}  // namespace

TEST_CASE("pm stage I symmetric start offers two B vertices") {
  GameState g(BoardSpec::bipartite(8));
  PmBipartiteStrategy s(g, {0, 1, 2, 3, 4, 5, 6, 7}, {8, 9, 10, 11, 12, 13, 14, 15});
  StrategyMove mv = s.next_move(g);
  REQUIRE(mv.kind == StrategyMove::Kind::kOffer);
  REQUIRE(mv.offer.size() == 2);
  // all of A ties at obstacle degree 0; lowest-index u with two lowest B partners
  CHECK(mv.offer.edges[0] == Edge(0, 8));
  CHECK(mv.offer.edges[1] == Edge(0, 9));
}

TEST_CASE("pm bipartite beats the client pool within n+1 rounds") {
  for (int n : {8, 12, 20}) {
    std::vector<std::unique_ptr<ClientPolicy>> pool;
    pool.push_back(std::make_unique<UniformRandomClient>(n));
    pool.push_back(std::make_unique<MinWaiterDegreeClient>());
    pool.push_back(std::make_unique<AntiStructureClient>(StructureTarget::kPerfectMatching));
    for (auto& client : pool) {
      GameState g(BoardSpec::bipartite(n));
      std::vector<int> a(n), b(n);
      for (int i = 0; i < n; ++i) {
        a[i] = i;
        b[i] = n + i;
      }
      PmBipartiteStrategy s(g, a, b);
      MatchResult r = run_match(g, s, *client, {ProbeLevel::kPerRound});
      INFO("n=" << n << " client=" << client->id());
      CHECK_FALSE(r.forfeited);
      CHECK(r.certificate_valid);
      CHECK(r.real_rounds <= n + 1);
      CHECK(r.probes.clean());
    }
  }
}

TEST_CASE("pm with obstacle set H") {
  int n = 16;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    std::vector<Edge> h = random_bipartite_obstacles(n, n / 2, seed);
    GameState g(BoardSpec(BoardSpec::complete_minus(2 * n, h)));
    // exclude the A-A and B-B pairs by restricting play to the bipartition
    std::vector<int> a(n), b(n);
    for (int i = 0; i < n; ++i) {
      a[i] = i;
      b[i] = n + i;
    }
    PmBipartiteStrategy s(g, a, b);
    UniformRandomClient client(seed * 99 + 5);
    MatchResult r = run_match(g, s, client, {ProbeLevel::kPerRound});
    CHECK_FALSE(r.forfeited);
    CHECK(r.certificate_valid);
    CHECK(r.real_rounds <= n + 1);
    CHECK(r.probes.clean());
  }
}

TEST_CASE("eq(1) holds at the start and fails on a planted violation") {
  int n = 8;
  GameState g(BoardSpec::bipartite(n));
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = i;
    b[i] = n + i;
  }
  PmBipartiteStrategy s(g, a, b);
  CHECK(s.check_eqpm(g));  // |R| = 2n, no obstacles
  // plant obstacle edges inside R beyond the allowed budget: with |R| = 2n the
  // bound allows n/2; plant n/2+1
  GameState g2(BoardSpec::bipartite(n));
  std::vector<Edge> planted;
  for (int i = 0; i <= n / 2; ++i) planted.push_back(Edge(i % n, n + (i * 3) % n));
  g2.seed_waiter_edges(planted);
  PmBipartiteStrategy s2(g2, a, b);
  CHECK_FALSE(s2.check_eqpm(g2));
}

TEST_CASE("pm exhaustive client tree at n=12 with random obstacles") {
  int n = 12;
  std::vector<Edge> h = random_bipartite_obstacles(n, n / 2, 4242);
  GameState g(BoardSpec::complete_minus(2 * n, h));
  std::vector<int> a(n), b(n);
  for (int i = 0; i < n; ++i) {
    a[i] = i;
    b[i] = n + i;
  }
  PmBipartiteStrategy s(g, a, b);
  ProbeReport probes;
  ExhaustiveStats stats = enumerate_replies(
      g, s,
      [&](const GameState& leaf, const WaiterStrategy& strat) {
        Certificate c = strat.certificate(leaf);
        return validate_certificate(leaf, c).ok && leaf.real_rounds() <= n + 1;
      },
      ProbeLevel::kPerRound, &probes);
  CHECK(stats.leaves == (1LL << (n + 1)));
  CHECK(stats.failures == 0);
  CHECK(stats.max_rounds <= n + 1);
  CHECK(probes.clean());
}

TEST_CASE("pm-complete wins K_n in n/2+1 rounds") {
  int n = 24;
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    GameState g(BoardSpec::complete(n));
    PmCompleteStrategy s(g);
    UniformRandomClient client(seed);
    MatchResult r = run_match(g, s, client, {ProbeLevel::kPerRound});
    CHECK_FALSE(r.forfeited);
    CHECK(r.certificate_valid);
    CHECK(r.real_rounds <= n / 2 + 1);
    CHECK(r.probes.clean());
  }
}

TEST_CASE("pm-complete never beats the avoider before round n/2+1") {
  int n = 24;
  GameState g(BoardSpec::complete(n));
  PmCompleteStrategy s(g);
  AntiStructureClient client(StructureTarget::kPerfectMatching);
  MatchResult r = run_match(g, s, client, {ProbeLevel::kFinal});
  CHECK_FALSE(r.forfeited);
  CHECK(r.certificate_valid);
  CHECK(r.real_rounds == n / 2 + 1);
}

TEST_CASE("pm-complete rejects odd n") {
  GameState g(BoardSpec::complete(17));
  CHECK_THROWS_AS(PmCompleteStrategy(g), EngineError);
}
