#pragma once

#include <vector>

#include "expdom/circulant.hpp"

namespace expdom {

// Consecutive partition of the Hamiltonian cycle into m = floor(n/(3l+1))
// blocks of length 3l+1 starting at `offset`, plus a remainder block of
// length r = n mod (3l+1) when r > 0. Full blocks are indexed 0..m-1; the
// remainder block, when present, is index m and is excluded from f* and the
// empty-block list.
class IntervalPartition {
 public:
  IntervalPartition(const CirculantGraph& g, Vertex offset);

  const CirculantGraph& graph() const { return g_; }
  Vertex offset() const { return offset_; }
  int block_length() const { return 3 * g_.radius() + 1; }
  int block_count() const { return m_; }
  int remainder() const { return r_; }

  // start of block i; i == block_count() addresses the remainder block.
  Vertex block_start(int i) const;
  // 0..m-1 for full blocks, m for the remainder block.
  int block_index_of(Vertex v) const;
  VertexSet block_vertices(int i) const;

 private:
  CirculantGraph g_;
  Vertex offset_;
  int m_;
  int r_;
};

struct PartitionStats {
  std::vector<int> counts;  // f_k over full blocks 0..m-1
  int remainder_count = 0;  // members falling in the remainder block
  int f_star = 0;           // max over counts
  std::vector<int> zero_blocks;

  int zero_count() const { return static_cast<int>(zero_blocks.size()); }
};

IntervalPartition make_partition(const CirculantGraph& g, Vertex offset);

PartitionStats stats(const IntervalPartition& partition, const VertexSet& D);

// Stats for the 3l+1 distinct offsets 0..3l. Requires (3l+1) | n.
std::vector<PartitionStats> all_offsets_stats(const CirculantGraph& g, const VertexSet& D);

}  // namespace expdom
