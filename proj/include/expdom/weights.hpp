#pragma once

#include <vector>

#include "expdom/circulant.hpp"
#include "expdom/dyadic.hpp"

namespace expdom {

enum class WeightMode { porous, nonporous };

// Porous weight (1/2)^(dist(u,v) - 1). Equal endpoints give 2: the
// definition quantifies over every vertex with no self-exemption, and any
// convention >= 1 leaves members trivially dominated.
DyadicRational porous_weight(const CirculantGraph& g, Vertex u, Vertex v);

// Non-porous weight (1/2)^(cdist - 1) where cdist is the shortest d-v path
// with no internal vertex in `dominating_set`. Unreachable contributes 0.
// d must be a member of the set.
DyadicRational nonporous_weight(const CirculantGraph& g, Vertex d, Vertex v,
                                const VertexSet& dominating_set);

DyadicRational set_weight_porous(const CirculantGraph& g, const VertexSet& D, Vertex v);
DyadicRational set_weight_nonporous(const CirculantGraph& g, const VertexSet& D, Vertex v);

struct DominationVerdict {
  bool dominated = false;
  Vertex witness = -1;  // smallest-index deficient vertex when !dominated
  DyadicRational witness_weight;
};

DominationVerdict is_porous_eds(const CirculantGraph& g, const VertexSet& D);
DominationVerdict is_nonporous_eds(const CirculantGraph& g, const VertexSet& D);

using WeightProfile = std::vector<DyadicRational>;

// Per-vertex exact weights; entry v is the set weight at v under `mode`.
WeightProfile weight_profile(const CirculantGraph& g, const VertexSet& D, WeightMode mode);

}  // namespace expdom
