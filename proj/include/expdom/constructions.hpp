#pragma once

#include <stdexcept>

#include "expdom/circulant.hpp"
#include "expdom/partition.hpp"

namespace expdom {

// A construction's stated hypothesis does not hold for the given input.
// The message names the failed hypothesis.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The arithmetic progression {start + (3l+1)t mod n : 0 <= t <= m-1}.
// Requires (3l+1) | n. For m == 1 the set is constructible but is not
// always an exponential dominating set; callers decide whether that matters.
VertexSet canonical_set(const CirculantGraph& g, Vertex start);

struct ShiftOutcome {
  VertexSet output;    // (D \ removed) | inserted
  VertexSet removed;   // P
  VertexSet inserted;  // S, one vertex per block anchor of the rearranged arc
  int a = 0;           // arc-relative index of the block contributing three members
  int b = 0;           // arc-relative index of the far empty block
  bool mirrored = false;  // arc processed in reflected orientation (a > b-a case)
  int zero_block = 0;  // absolute index of the block playing arc position 0
  Vertex covered_from = 0;  // ascending interval [covered_from, covered_to]
  Vertex covered_to = 0;    // spanned by the inserted anchors
};

// Rearranges D between two empty blocks: removes the member nearest each
// intervening block's anchor (three from the crowded block) and inserts one
// vertex at each anchor position. Accepted inputs satisfy
// 3 <= f* <= 3l+1 and have an empty-block pair with a crowded block between;
// violations raise HypothesisError naming the failed hypothesis.
ShiftOutcome shift_algorithm(const CirculantGraph& g, const IntervalPartition& partition,
                             const VertexSet& D);

struct PairShiftDetail {
  VertexSet output;
  Vertex a0 = 0;  // replacement nearest i-l inside [j+l, i-l]
  Vertex b0 = 0;  // replacement nearest j+l inside [j+l, i-l]
};

// Replaces two close members i, j (dist_H <= l+1) by the free vertices
// nearest the ends of the complementary interval [j+l, i-l].
PairShiftDetail pair_shift_detailed(const CirculantGraph& g, const VertexSet& D, Vertex i,
                                    Vertex j);
VertexSet pair_shift(const CirculantGraph& g, const VertexSet& D, Vertex i, Vertex j);

}  // namespace expdom
