// Test-only reference computations, kept independent of the library search
// and distance-formula paths they are used to check.
#pragma once

#include <climits>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "expdom/circulant.hpp"

namespace oracles {

// Shortest d-v path with no internal vertex in `blockers`, by exhaustive
// simple-path enumeration. Small instances only.
inline std::optional<int> constrained_path_enumeration(const expdom::CirculantGraph& g,
                                                       expdom::Vertex from, expdom::Vertex to,
                                                       const expdom::VertexSet& blockers) {
  if (from == to) return 0;
  int best = INT_MAX;
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  std::function<void(expdom::Vertex, int)> walk = [&](expdom::Vertex at, int length) {
    if (length >= best) return;
    for (expdom::Vertex y : g.neighbors(at)) {
      if (y == to) {
        best = std::min(best, length + 1);
        continue;
      }
      if (used[static_cast<std::size_t>(y)] || blockers.contains(y)) continue;
      used[static_cast<std::size_t>(y)] = 1;
      walk(y, length + 1);
      used[static_cast<std::size_t>(y)] = 0;
    }
  };
  used[static_cast<std::size_t>(from)] = 1;
  walk(from, 0);
  if (best == INT_MAX) return std::nullopt;
  return best;
}

// Minimum size of a set passing `dominates`, by unfiltered subset
// enumeration in ascending cardinality. No symmetry reduction, no pruning.
inline int brute_force_minimum(const expdom::CirculantGraph& g,
                               const std::function<bool(const expdom::VertexSet&)>& dominates) {
  const int n = g.order();
  for (int k = 1; k <= n; ++k) {
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (dominates(expdom::VertexSet(std::vector<expdom::Vertex>(idx.begin(), idx.end()))))
        return k;
      int i = k - 1;
      while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
      if (i < 0) break;
      ++idx[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j)
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return n;
}

}  // namespace oracles
