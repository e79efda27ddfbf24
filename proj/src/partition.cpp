#include "expdom/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace expdom {

IntervalPartition::IntervalPartition(const CirculantGraph& g, Vertex offset)
    : g_(g), offset_(offset) {
  require_vertex(g, offset);
  m_ = g.order() / block_length();
  r_ = g.order() % block_length();
}

Vertex IntervalPartition::block_start(int i) const {
  if (i < 0 || i > m_ || (i == m_ && r_ == 0))
    throw std::invalid_argument("block index out of range");
  return g_.reduce(static_cast<long long>(offset_) + static_cast<long long>(block_length()) * i);
}

int IntervalPartition::block_index_of(Vertex v) const {
  require_vertex(g_, v);
  const int rel = g_.reduce(static_cast<long long>(v) - offset_);
  return std::min(rel / block_length(), m_);
}

VertexSet IntervalPartition::block_vertices(int i) const {
  const Vertex start = block_start(i);
  const int len = i == m_ ? r_ : block_length();
  return interval(g_, start, g_.reduce(static_cast<long long>(start) + len - 1));
}

IntervalPartition make_partition(const CirculantGraph& g, Vertex offset) {
  return IntervalPartition(g, offset);
}

PartitionStats stats(const IntervalPartition& partition, const VertexSet& D) {
  require_vertices(partition.graph(), D);
  PartitionStats s;
  s.counts.assign(static_cast<std::size_t>(partition.block_count()), 0);
  for (Vertex v : D) {
    const int block = partition.block_index_of(v);
    if (block == partition.block_count())
      ++s.remainder_count;
    else
      ++s.counts[static_cast<std::size_t>(block)];
  }
  for (int i = 0; i < partition.block_count(); ++i) {
    const int f = s.counts[static_cast<std::size_t>(i)];
    s.f_star = std::max(s.f_star, f);
    if (f == 0) s.zero_blocks.push_back(i);
  }
  return s;
}

std::vector<PartitionStats> all_offsets_stats(const CirculantGraph& g, const VertexSet& D) {
  const int period = 3 * g.radius() + 1;
  if (g.order() % period != 0)
    throw std::invalid_argument("offset sweep requires (3l+1) to divide n");
  std::vector<PartitionStats> out;
  out.reserve(static_cast<std::size_t>(period));
  for (Vertex offset = 0; offset < period; ++offset)
    out.push_back(stats(make_partition(g, offset), D));
  return out;
}

}  // namespace expdom
