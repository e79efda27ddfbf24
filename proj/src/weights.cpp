#include "expdom/weights.hpp"

#include <stdexcept>

namespace expdom {

namespace {

void require_nonempty(const VertexSet& D) {
  if (D.empty()) throw std::invalid_argument("dominating set must be non-empty");
}

}  // namespace

DyadicRational porous_weight(const CirculantGraph& g, Vertex u, Vertex v) {
  return DyadicRational::pow2(1 - distance(g, u, v));
}

DyadicRational nonporous_weight(const CirculantGraph& g, Vertex d, Vertex v,
                                const VertexSet& dominating_set) {
  if (!dominating_set.contains(d))
    throw std::invalid_argument("non-porous weight source must be a set member");
  const std::optional<int> cdist = constrained_distance(g, d, v, dominating_set);
  if (!cdist) return DyadicRational(0);
  return DyadicRational::pow2(1 - *cdist);
}

DyadicRational set_weight_porous(const CirculantGraph& g, const VertexSet& D, Vertex v) {
  require_nonempty(D);
  require_vertices(g, D);
  DyadicRational sum;
  for (Vertex d : D) sum += porous_weight(g, d, v);
  return sum;
}

DyadicRational set_weight_nonporous(const CirculantGraph& g, const VertexSet& D, Vertex v) {
  require_nonempty(D);
  require_vertices(g, D);
  DyadicRational sum;
  for (Vertex d : D) sum += nonporous_weight(g, d, v, D);
  return sum;
}

namespace {

DominationVerdict verdict_for(const CirculantGraph& g, const VertexSet& D, WeightMode mode) {
  require_nonempty(D);
  require_vertices(g, D);
  for (Vertex v = 0; v < g.order(); ++v) {
    const DyadicRational w = mode == WeightMode::porous ? set_weight_porous(g, D, v)
                                                        : set_weight_nonporous(g, D, v);
    if (w < 1) return {false, v, w};
  }
  return {true, -1, DyadicRational()};
}

}  // namespace

DominationVerdict is_porous_eds(const CirculantGraph& g, const VertexSet& D) {
  return verdict_for(g, D, WeightMode::porous);
}

DominationVerdict is_nonporous_eds(const CirculantGraph& g, const VertexSet& D) {
  return verdict_for(g, D, WeightMode::nonporous);
}

WeightProfile weight_profile(const CirculantGraph& g, const VertexSet& D, WeightMode mode) {
  require_nonempty(D);
  require_vertices(g, D);
  WeightProfile profile(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    profile[static_cast<std::size_t>(v)] = mode == WeightMode::porous
                                               ? set_weight_porous(g, D, v)
                                               : set_weight_nonporous(g, D, v);
  return profile;
}

}  // namespace expdom
