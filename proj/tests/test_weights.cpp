#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "expdom/weights.hpp"

using namespace expdom;

namespace {
const DyadicRational kHalf = DyadicRational::pow2(-1);
const DyadicRational kQuarter = DyadicRational::pow2(-2);
}  // namespace

TEST_CASE("porous weight") {
  const CirculantGraph g(14, 2);
  CHECK(porous_weight(g, 0, 1) == DyadicRational(1));
  CHECK(porous_weight(g, 0, 3) == kHalf);
  CHECK(porous_weight(g, 7, 1) == kQuarter);
  CHECK(porous_weight(g, 5, 5) == DyadicRational(2));  // self-weight convention
}

TEST_CASE("non-porous weight") {
  const CirculantGraph g9(9, 1);
  const VertexSet d02{0, 2};
  CHECK(nonporous_weight(g9, 0, 4, d02) == DyadicRational::pow2(-4));
  CHECK(nonporous_weight(g9, 0, 1, d02) == DyadicRational(1));
  const CirculantGraph g14(14, 2);
  const VertexSet d07{0, 7};
  CHECK(nonporous_weight(g14, 0, 4, d07) == kHalf);
  CHECK(nonporous_weight(g14, 0, 4, d07) == porous_weight(g14, 0, 4));
  CHECK_THROWS_AS(nonporous_weight(g14, 1, 4, d07), std::invalid_argument);
}

TEST_CASE("set weights") {
  const CirculantGraph g14(14, 2);
  const VertexSet d07{0, 7};
  CHECK(set_weight_porous(g14, d07, 3) == DyadicRational(1));
  CHECK(set_weight_porous(g14, d07, 1) == DyadicRational(BigInt(5), 2));
  CHECK(set_weight_porous(g14, VertexSet{0}, 0) == DyadicRational(2));
  CHECK(set_weight_nonporous(g14, d07, 3) == DyadicRational(1));
  CHECK(set_weight_nonporous(CirculantGraph(9, 1), VertexSet{0, 2}, 4) ==
        DyadicRational(BigInt(9), 4));
  CHECK(set_weight_nonporous(g14, VertexSet{5}, 5) == DyadicRational(2));
  CHECK_THROWS_AS(set_weight_porous(g14, VertexSet(), 0), std::invalid_argument);
  CHECK_THROWS_AS(set_weight_nonporous(g14, VertexSet(), 0), std::invalid_argument);
}

TEST_CASE("domination verdicts with witnesses") {
  CHECK(is_porous_eds(CirculantGraph(14, 2), VertexSet{0, 7}).dominated);

  const DominationVerdict v72 = is_porous_eds(CirculantGraph(7, 2), VertexSet{0});
  CHECK(!v72.dominated);
  CHECK(v72.witness == 3);
  CHECK(v72.witness_weight == kHalf);

  const DominationVerdict v41 = is_porous_eds(CirculantGraph(4, 1), VertexSet{0});
  CHECK(!v41.dominated);
  CHECK(v41.witness == 2);
  CHECK(v41.witness_weight == kHalf);

  CHECK(is_nonporous_eds(CirculantGraph(14, 2), VertexSet{0, 7}).dominated);
  CHECK(is_nonporous_eds(CirculantGraph(8, 1), VertexSet{0, 4}).dominated);
  const DominationVerdict n72 = is_nonporous_eds(CirculantGraph(7, 2), VertexSet{0});
  CHECK(!n72.dominated);
  CHECK(n72.witness == 3);
}

TEST_CASE("weight profiles") {
  const CirculantGraph g14(14, 2);
  const WeightProfile profile = weight_profile(g14, VertexSet{0, 7}, WeightMode::porous);
  const DyadicRational minimum = *std::min_element(profile.begin(), profile.end());
  CHECK(minimum == DyadicRational(1));
  for (Vertex v = 0; v < 14; ++v) {
    const bool at_min = v == 3 || v == 4 || v == 10 || v == 11;
    CHECK((profile[static_cast<std::size_t>(v)] == minimum) == at_min);
  }

  const WeightProfile c4 = weight_profile(CirculantGraph(4, 1), VertexSet{0, 2}, WeightMode::porous);
  for (const DyadicRational& w : c4) CHECK(w >= DyadicRational(1));

  const CirculantGraph g6(6, 1);
  const WeightProfile full = weight_profile(g6, VertexSet{0, 1, 2, 3, 4, 5}, WeightMode::porous);
  for (const DyadicRational& w : full) CHECK(w >= DyadicRational(2));
}

TEST_CASE("non-porous never exceeds porous") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 12);
    const int ell = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    const CirculantGraph g(n, ell);
    std::vector<Vertex> pool;
    for (Vertex x = 0; x < n; ++x)
      if (rng() % 3 == 0) pool.push_back(x);
    if (pool.empty()) pool.push_back(static_cast<Vertex>(rng() % static_cast<unsigned>(n)));
    const VertexSet D(pool);
    for (Vertex v = 0; v < n; ++v)
      CHECK(set_weight_nonporous(g, D, v) <= set_weight_porous(g, D, v));
  }
}

TEST_CASE("singleton verdicts coincide") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 14);
    const int ell = 1 + static_cast<int>(rng() % static_cast<unsigned>(n / 2));
    const CirculantGraph g(n, ell);
    const VertexSet single{static_cast<Vertex>(rng() % static_cast<unsigned>(n))};
    const DominationVerdict porous = is_porous_eds(g, single);
    const DominationVerdict nonporous = is_nonporous_eds(g, single);
    CHECK(porous.dominated == nonporous.dominated);
    CHECK(porous.witness == nonporous.witness);
  }
}

TEST_CASE("porous set weight is additive over disjoint unions") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 12);
    const CirculantGraph g(n, 1 + static_cast<int>(rng() % 2));
    std::vector<Vertex> left, right;
    for (Vertex x = 0; x < n; ++x) {
      const auto roll = rng() % 4;
      if (roll == 0) left.push_back(x);
      if (roll == 1) right.push_back(x);
    }
    if (left.empty()) left.push_back(0);
    if (right.empty()) right.push_back(left.front() == 1 ? 2 : 1);
    const VertexSet a(left);
    const VertexSet b = set_difference(VertexSet(right), a);
    if (b.empty()) continue;
    const VertexSet both = set_union(a, b);
    const Vertex v = static_cast<Vertex>(rng() % static_cast<unsigned>(n));
    CHECK(set_weight_porous(g, both, v) ==
          set_weight_porous(g, a, v) + set_weight_porous(g, b, v));
  }
}
