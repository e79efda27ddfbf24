#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expdom/circulant.hpp"
#include "oracles.hpp"

using namespace expdom;

TEST_CASE("graph construction and adjacency") {
  const CirculantGraph g(8, 2);
  CHECK(g.neighbors(0) == std::vector<Vertex>{1, 2, 6, 7});
  // n = 2l collapses the duplicated generator
  CHECK(CirculantGraph(4, 2).neighbors(0) == std::vector<Vertex>{1, 2, 3});
  CHECK(CirculantGraph(3, 1).neighbors(0) == std::vector<Vertex>{1, 2});

  CHECK_THROWS_AS(CirculantGraph(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(CirculantGraph(8, 0), std::invalid_argument);
  CHECK_THROWS_AS(CirculantGraph(8, 5), std::invalid_argument);
}

TEST_CASE("vertex set parsing") {
  CHECK(VertexSet::parse("0,7") == VertexSet{0, 7});
  CHECK(VertexSet::parse("7, 0 ,3") == VertexSet{0, 3, 7});
  CHECK_THROWS_AS(VertexSet::parse("0,0"), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet::parse("0,x"), std::invalid_argument);
  CHECK_THROWS_AS(VertexSet::parse(""), std::invalid_argument);
}

TEST_CASE("hamiltonian distance") {
  const CirculantGraph g(8, 2);
  CHECK(hamiltonian_distance(g, 0, 3) == 3);
  CHECK(hamiltonian_distance(g, 1, 7) == 2);
  const CirculantGraph g14(14, 2);
  CHECK(hamiltonian_distance(g14, 7, 3) == 4);
  // the arc distance is the plain cycle's graph distance
  CHECK(hamiltonian_distance(g14, 7, 3) == distance_bfs(CirculantGraph(14, 1), 7, 3));
}

TEST_CASE("distance formula vs search") {
  const CirculantGraph g(8, 2);
  CHECK(distance(g, 0, 3) == 2);
  CHECK(distance(g, 0, 3) == distance_bfs(g, 0, 3));
  CHECK(distance(g, 5, 5) == 0);
  const CirculantGraph g14(14, 2);
  CHECK(distance(g14, 7, 1) == 3);
  CHECK(distance_bfs(g14, 7, 1) == 3);

  CHECK(distance_bfs(g, 0, 4) == 2);
  CHECK(distance_bfs(CirculantGraph(5, 1), 0, 2) == 2);
  CHECK(distance_bfs(g, 2, 2) == 0);

  // every pair, every radius, small orders; the acceptance suite pushes to 60
  for (int n = 3; n <= 24; ++n) {
    for (int ell = 1; ell <= n / 2; ++ell) {
      const CirculantGraph h(n, ell);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v) REQUIRE(distance(h, u, v) == distance_bfs(h, u, v));
    }
  }
}

TEST_CASE("distance axioms") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 18);
    const int ell = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    const CirculantGraph g(n, ell);
    for (int probe = 0; probe < 30; ++probe) {
      const Vertex u = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
      const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
      const Vertex w = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
      CHECK(hamiltonian_distance(g, u, v) == hamiltonian_distance(g, v, u));
      CHECK(distance(g, u, v) == distance(g, v, u));
      CHECK((distance(g, u, v) == 0) == (u == v));
      CHECK(distance(g, u, w) <= distance(g, u, v) + distance(g, v, w));
      CHECK(hamiltonian_distance(g, u, w) <=
            hamiltonian_distance(g, u, v) + hamiltonian_distance(g, v, w));
    }
  }
}

TEST_CASE("constrained distance") {
  const CirculantGraph g9(9, 1);
  const VertexSet blockers{0, 2};
  CHECK(constrained_distance(g9, 0, 4, blockers) == 5);  // around the blocked arc
  CHECK(oracles::constrained_path_enumeration(g9, 0, 4, blockers) == 5);
  CHECK(constrained_distance(g9, 0, 1, blockers) == 1);
  const CirculantGraph g14(14, 2);
  CHECK(constrained_distance(g14, 0, 3, VertexSet{0, 7}) == 2);
  CHECK(oracles::constrained_path_enumeration(g14, 0, 3, VertexSet{0, 7}) == 2);

  // sealed off: every internal vertex blocked
  std::vector<Vertex> everything;
  for (Vertex v = 0; v < 9; ++v) everything.push_back(v);
  CHECK(constrained_distance(g9, 0, 4, VertexSet(everything)) == std::nullopt);
}

TEST_CASE("constrained distance properties") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const int ell = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    const CirculantGraph g(n, ell);
    const Vertex d = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    CHECK(constrained_distance(g, d, v, VertexSet()) == distance_bfs(g, d, v));

    std::vector<Vertex> pool;
    for (Vertex x = 0; x < n; ++x)
      if (rng() % 3 == 0) pool.push_back(x);
    const VertexSet some(pool);
    std::vector<Vertex> more_pool = pool;
    for (Vertex x = 0; x < n; ++x)
      if (rng() % 3 == 0 && !some.contains(x)) more_pool.push_back(x);
    const VertexSet more(more_pool);
    const auto base = constrained_distance(g, d, v, some);
    const auto restricted = constrained_distance(g, d, v, more);
    if (!base)
      CHECK(!restricted);  // adding blockers cannot reconnect
    else if (restricted)
      CHECK(*restricted >= *base);
  }
}

TEST_CASE("intervals") {
  const CirculantGraph g14(14, 2);
  CHECK(interval(g14, 12, 2) == VertexSet{0, 1, 2, 12, 13});
  CHECK(interval(g14, 0, 6) == VertexSet{0, 1, 2, 3, 4, 5, 6});
  CHECK(interval(g14, 3, 3) == VertexSet{3});
  const CirculantGraph g8(8, 2);
  CHECK(interval(g8, 0, 7).size() == 8);
  CHECK(interval_contains(g14, 12, 2, 13));
  CHECK(interval_contains(g14, 12, 2, 0));
  CHECK(!interval_contains(g14, 12, 2, 3));
}

TEST_CASE("reflection") {
  CHECK(reflect(CirculantGraph(14, 2), VertexSet{0, 7}, 0) == VertexSet{0, 7});
  CHECK(reflect(CirculantGraph(8, 2), VertexSet{1, 2}, 0) == VertexSet{6, 7});
  CHECK(reflect(CirculantGraph(28, 1), VertexSet{4, 5, 6}, 2) == VertexSet{0, 26, 27});

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 20);
    const CirculantGraph g(n, 1);
    std::vector<Vertex> pool;
    for (Vertex x = 0; x < n; ++x)
      if (rng() % 2) pool.push_back(x);
    if (pool.empty()) pool.push_back(0);
    const VertexSet s(pool);
    const Vertex axis = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    CHECK(reflect(g, reflect(g, s, axis), axis) == s);
  }
}
