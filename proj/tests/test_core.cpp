#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "wcg/certificate.hpp"
#include "wcg/core.hpp"

using namespace wcg;

TEST_CASE("create_game edge counts") {
  GameState k4(BoardSpec::complete(4));
  CHECK(k4.free_count() == 6);
  CHECK(k4.real_rounds() == 0);
  CHECK(k4.history().empty());

  GameState b33(BoardSpec::bipartite(3));
  CHECK(b33.free_count() == 9);
  CHECK(b33.vertex_count() == 6);
  CHECK(b33.owner(0, 1) == Owner::kExcluded);
  CHECK(b33.owner(0, 3) == Owner::kFree);

  GameState km(BoardSpec::complete_minus(4, {Edge(0, 1)}));
  CHECK(km.free_count() == 5);
  CHECK(km.owner(0, 1) == Owner::kExcluded);
}

TEST_CASE("invalid specs rejected") {
  CHECK_THROWS_AS(GameState(BoardSpec::complete(1)), EngineError);
  CHECK_THROWS_AS(GameState(BoardSpec::complete(4, 0)), EngineError);
  CHECK_THROWS_AS(GameState(BoardSpec::complete_minus(4, {Edge(0, 5)})), EngineError);
  CHECK_THROWS_AS(GameState(BoardSpec::complete_minus(4, {Edge(0, 1), Edge(0, 1)})), EngineError);
}

TEST_CASE("apply_round semantics") {
  GameState g(BoardSpec::complete(4));
  g.apply_round(Offer{Edge(0, 1), Edge(0, 2)}, 0);
  CHECK(g.owner(0, 1) == Owner::kClient);
  CHECK(g.owner(0, 2) == Owner::kWaiter);
  CHECK(g.real_rounds() == 1);
  CHECK(g.waiter_degree(0) == 1);
  CHECK(g.client_degree(0) == 1);

  SECTION("bias 2 offer") {
    GameState h(BoardSpec::complete(4, 2));
    h.apply_round(Offer{Edge(0, 1), Edge(0, 2), Edge(0, 3)}, 2);
    CHECK(h.owner(0, 3) == Owner::kClient);
    CHECK(h.owner(0, 1) == Owner::kWaiter);
    CHECK(h.owner(0, 2) == Owner::kWaiter);
  }

  SECTION("errors") {
    CHECK_THROWS_AS(g.apply_round(Offer{Edge(0, 1), Edge(1, 2)}, 0), EngineError);  // not free
    CHECK_THROWS_AS(g.apply_round(Offer{Edge(1, 2), Edge(1, 2)}, 0), EngineError);  // duplicate
    CHECK_THROWS_AS(g.apply_round(Offer{Edge(1, 2), Edge(1, 3)}, 5), EngineError);  // bad pick
    CHECK_THROWS_AS(g.apply_round(Offer{Edge(1, 2)}, 0), EngineError);  // short while free>=2
  }
}

TEST_CASE("short offer only when the board runs dry") {
  GameState g(BoardSpec::complete(3));  // 3 edges
  g.apply_round(Offer{Edge(0, 1), Edge(0, 2)}, 0);
  CHECK(g.free_count() == 1);
  CHECK_FALSE(g.short_offer_used());
  g.apply_round(Offer{Edge(1, 2)}, 0);
  CHECK(g.short_offer_used());
  CHECK(g.owner(1, 2) == Owner::kClient);
  CHECK(g.count_owned(Owner::kWaiter) == 1);
}

TEST_CASE("fake rounds leave ownership untouched") {
  GameState g(BoardSpec::complete(4));
  g.apply_fake_round();
  CHECK(g.fake_rounds() == 1);
  CHECK(g.count_owned(Owner::kClient) == 0);
  g.apply_fake_round();
  CHECK(g.fake_rounds() == 2);
  CHECK(g.count_owned(Owner::kClient) == 0);
  CHECK(g.total_rounds() == 2);
  CHECK(g.history().size() == 2);
  CHECK(g.history()[0].fake);
}

TEST_CASE("partition invariant under random play") {
  std::mt19937_64 rng(12345);
  GameState g(BoardSpec::complete(9, 2));
  long long total = g.free_count();
  while (g.free_count() > 0) {
    std::vector<Edge> free;
    for (int u = 0; u < 9; ++u)
      for (int v = u + 1; v < 9; ++v)
        if (g.is_free(u, v)) free.push_back(Edge(u, v));
    std::shuffle(free.begin(), free.end(), rng);
    int k = std::min<int>(3, static_cast<int>(free.size()));
    Offer offer(std::vector<Edge>(free.begin(), free.begin() + k));
    g.apply_round(offer, static_cast<int>(rng() % k));
    REQUIRE(g.count_owned(Owner::kFree) + g.count_owned(Owner::kWaiter) +
                g.count_owned(Owner::kClient) ==
            total);
    REQUIRE(g.count_owned(Owner::kClient) == g.real_rounds());
  }
  CHECK(g.count_owned(Owner::kWaiter) <= 2LL * g.real_rounds());
}

TEST_CASE("certificate validation") {
  SECTION("matching true case") {
    GameState g(BoardSpec::complete(4));
    g.seed_client_edges({Edge(0, 1), Edge(2, 3)});
    Certificate c;
    c.kind = Certificate::Kind::kMatching;
    c.matching = {Edge(0, 1), Edge(2, 3)};
    CHECK(validate_certificate(g, c).ok);
  }
  SECTION("hamilton with a Waiter edge") {
    GameState g(BoardSpec::complete(4));
    g.seed_client_edges({Edge(0, 1), Edge(1, 2), Edge(2, 3)});
    g.seed_waiter_edges({Edge(0, 3)});
    Certificate c;
    c.kind = Certificate::Kind::kHamiltonCycle;
    c.cycle = {0, 1, 2, 3};
    ValidationResult r = validate_certificate(g, c);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("not Client") != std::string::npos);
  }
  SECTION("pancyclic length gap") {
    GameState g(BoardSpec::complete(8));
    std::vector<Edge> cyc;
    for (int i = 0; i < 8; ++i) cyc.push_back(Edge(i, (i + 1) % 8));
    g.seed_client_edges(cyc);
    Certificate c;
    c.kind = Certificate::Kind::kPancyclicFamily;
    c.cycles[8] = {0, 1, 2, 3, 4, 5, 6, 7};  // only the Hamilton cycle present
    ValidationResult r = validate_certificate(g, c);
    CHECK_FALSE(r.ok);
    CHECK(r.reason.find("length gap") != std::string::npos);
  }
  SECTION("triangle factor") {
    GameState g(BoardSpec::complete(6));
    g.seed_client_edges({Edge(0, 1), Edge(1, 2), Edge(0, 2), Edge(3, 4), Edge(4, 5), Edge(3, 5)});
    Certificate c;
    c.kind = Certificate::Kind::kTriangleFactor;
    c.triangles = {{0, 1, 2}, {3, 4, 5}};
    CHECK(validate_certificate(g, c).ok);
    c.triangles = {{0, 1, 2}, {3, 4, 5}, {0, 3, 4}};
    CHECK_FALSE(validate_certificate(g, c).ok);
  }
}

TEST_CASE("replay reproduces the final state") {
  std::mt19937_64 rng(777);
  GameState g(BoardSpec::complete(8));
  for (int r = 0; r < 10; ++r) {
    std::vector<Edge> free;
    for (int u = 0; u < 8; ++u)
      for (int v = u + 1; v < 8; ++v)
        if (g.is_free(u, v)) free.push_back(Edge(u, v));
    Offer offer{free[rng() % free.size()], Edge()};
    do {
      offer.edges[1] = free[rng() % free.size()];
    } while (offer.edges[1] == offer.edges[0]);
    g.apply_round(offer, static_cast<int>(rng() % 2));
    if (r == 4) g.apply_fake_round();
  }
  GameState replay(g.spec());
  for (const RoundRecord& rec : g.history()) {
    if (rec.fake)
      replay.apply_fake_round();
    else
      replay.apply_round(rec.offer, rec.pick);
  }
  CHECK(replay == g);
}
