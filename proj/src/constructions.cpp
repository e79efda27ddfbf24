#include "expdom/constructions.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

namespace expdom {

VertexSet canonical_set(const CirculantGraph& g, Vertex start) {
  require_vertex(g, start);
  const int period = 3 * g.radius() + 1;
  if (g.order() % period != 0)
    throw std::invalid_argument("canonical set requires (3l+1) to divide n");
  std::vector<Vertex> members;
  const int m = g.order() / period;
  members.reserve(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t)
    members.push_back(g.reduce(static_cast<long long>(start) + static_cast<long long>(period) * t));
  return VertexSet(std::move(members));
}

namespace {

struct ArcChoice {
  int z = -1;  // absolute index of the leading empty block
  int b = 0;   // arc length in blocks (far empty block at arc position b)
  int a = 0;   // arc position of the crowded block, forward orientation
};

// First (z, next-empty) pair with a crowded block strictly between. With a
// remainder block present, pairs whose arc wraps past block m-1 are skipped
// since the blocks are then not consecutive on the cycle.
ArcChoice choose_arc(const PartitionStats& st, int m, bool has_remainder) {
  for (int z : st.zero_blocks) {
    int gap = 0;
    for (int t = 1; t < m; ++t) {
      if (st.counts[static_cast<std::size_t>((z + t) % m)] == 0) {
        gap = t;
        break;
      }
    }
    if (gap < 2) continue;
    if (has_remainder && z + gap >= m) continue;
    for (int t = 1; t < gap; ++t) {
      if (st.counts[static_cast<std::size_t>((z + t) % m)] >= 3)
        return {z, gap, t};
    }
  }
  return {};
}

}  // namespace

ShiftOutcome shift_algorithm(const CirculantGraph& g, const IntervalPartition& partition,
                             const VertexSet& D) {
  require_vertices(g, D);
  const int ell = g.radius();
  const int L = partition.block_length();
  const int m = partition.block_count();
  const PartitionStats st = stats(partition, D);

  if (st.f_star < 3 || st.f_star > L)
    throw HypothesisError("f* out of range: f* = " + std::to_string(st.f_star) +
                          ", hypothesis needs 3 <= f* <= " + std::to_string(L));
  if (st.zero_count() < 2)
    throw HypothesisError("needs at least two empty blocks, found Z = " +
                          std::to_string(st.zero_count()));
  const ArcChoice arc = choose_arc(st, m, partition.remainder() > 0);
  if (arc.z < 0)
    throw HypothesisError("no block with f >= 3 strictly between two consecutive empty blocks");

  const int b = arc.b;
  const bool mirrored = arc.a > b - arc.a;
  int a = arc.a;
  if (mirrored) {
    for (int t = 1; t < b; ++t) {
      if (st.counts[static_cast<std::size_t>((arc.z + b - t) % m)] >= 3) {
        a = t;
        break;
      }
    }
  }

  const Vertex arc_start =
      g.reduce(static_cast<long long>(partition.offset()) + static_cast<long long>(L) * arc.z);
  const Vertex arc_end = g.reduce(static_cast<long long>(arc_start) +
                                  static_cast<long long>(L) * (b + 1) - 1);
  const auto to_abs = [&](int u) {
    return mirrored ? g.reduce(static_cast<long long>(arc_end) - u)
                    : g.reduce(static_cast<long long>(arc_start) + u);
  };
  const auto to_arc = [&](Vertex x) {
    return mirrored ? g.reduce(static_cast<long long>(arc_end) - x)
                    : g.reduce(static_cast<long long>(x) - arc_start);
  };
  const auto abs_block = [&](int t) { return (arc.z + (mirrored ? b - t : t)) % m; };

  std::vector<Vertex> removed;
  for (int t = 1; t < b; ++t) {
    const int block = abs_block(t);
    const int anchor = L * t + 2 * ell;
    std::vector<std::pair<int, Vertex>> candidates;  // (distance to anchor, label)
    for (Vertex x : D) {
      if (partition.block_index_of(x) != block) continue;
      candidates.emplace_back(std::abs(to_arc(x) - anchor), x);
    }
    std::sort(candidates.begin(), candidates.end());
    const std::size_t take = t == a ? 3 : 1;
    for (std::size_t k = 0; k < take; ++k) removed.push_back(candidates[k].second);
  }

  std::vector<Vertex> inserted;
  inserted.reserve(static_cast<std::size_t>(b) + 1);
  for (int t = 0; t <= b; ++t) inserted.push_back(to_abs(L * t + 2 * ell));

  ShiftOutcome out;
  out.removed = VertexSet(std::move(removed));
  out.inserted = VertexSet(std::move(inserted));
  out.output = set_union(set_difference(D, out.removed), out.inserted);
  out.a = a;
  out.b = b;
  out.mirrored = mirrored;
  out.zero_block = abs_block(0);
  const Vertex low_anchor = to_abs(mirrored ? L * b + 2 * ell : 2 * ell);
  const Vertex high_anchor = to_abs(mirrored ? 2 * ell : L * b + 2 * ell);
  out.covered_from = low_anchor;
  out.covered_to = high_anchor;
  return out;
}

PairShiftDetail pair_shift_detailed(const CirculantGraph& g, const VertexSet& D, Vertex i,
                                    Vertex j) {
  require_vertices(g, D);
  require_vertex(g, i);
  require_vertex(g, j);
  if (i == j) throw std::invalid_argument("pair shift needs two distinct members");
  if (!D.contains(i) || !D.contains(j))
    throw std::invalid_argument("pair shift endpoints must be set members");

  const int ell = g.radius();
  const int dh = hamiltonian_distance(g, i, j);
  if (dh > ell + 1)
    throw HypothesisError("dist_H(i,j) = " + std::to_string(dh) + " exceeds l+1 = " +
                          std::to_string(ell + 1));
  if (dh + 2 * ell + 1 > g.order())
    throw HypothesisError("arc [i-l, j+l] wraps the whole cycle, so [j+l, i-l] has no ends");
  if (g.reduce(static_cast<long long>(j) - i) != dh) std::swap(i, j);

  const Vertex lo = g.reduce(static_cast<long long>(j) + ell);
  const Vertex hi = g.reduce(static_cast<long long>(i) - ell);
  const int len = g.reduce(static_cast<long long>(hi) - lo) + 1;

  Vertex a0 = -1;
  for (int t = 0; t < len; ++t) {
    const Vertex x = g.reduce(static_cast<long long>(hi) - t);
    if (!D.contains(x)) {
      a0 = x;
      break;
    }
  }
  Vertex b0 = -1;
  for (int t = 0; t < len; ++t) {
    const Vertex x = g.reduce(static_cast<long long>(lo) + t);
    if (!D.contains(x)) {
      b0 = x;
      break;
    }
  }
  if (a0 < 0 || b0 < 0 || a0 == b0)
    throw HypothesisError("cannot select distinct replacements in [j+l, i-l]");

  PairShiftDetail out;
  out.a0 = a0;
  out.b0 = b0;
  out.output = set_union(set_difference(D, VertexSet{i, j}), VertexSet{a0, b0});
  return out;
}

VertexSet pair_shift(const CirculantGraph& g, const VertexSet& D, Vertex i, Vertex j) {
  return pair_shift_detailed(g, D, i, j).output;
}

}  // namespace expdom
