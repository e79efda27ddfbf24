#pragma once

#include <cstdint>
#include <vector>

#include "expdom/circulant.hpp"

namespace expdom::gen {

// Configurations with exactly one member in every nonempty block and at
// least one empty block (f* = 1, Z >= 1). Requires (3l+1) | n with m >= 2.
struct Fstar1Config {
  VertexSet set;
  Vertex offset;
};
std::vector<Fstar1Config> fstar1_configs(const CirculantGraph& g, int count, std::uint64_t seed);

// Inputs accepted by the shift algorithm: an empty-block pair with one
// crowded block (3 <= f <= 3l+1) strictly between, the other intervening
// blocks nonempty, everything laid out relative to a random-offset
// partition. Requires (3l+1) | n with m >= 4.
struct ShiftInstance {
  VertexSet set;
  Vertex offset;
};
ShiftInstance shift_instance(const CirculantGraph& g, std::uint64_t seed);

// Placements matching the two-empty/one-triple/rest-single block pattern at
// the given offset, exhaustive up to `cap`, then a seeded sample. When
// adjacent_only is set the empty blocks flank the triple block directly.
std::vector<VertexSet> f3_pattern_sets(const CirculantGraph& g, Vertex offset, std::size_t cap,
                                       std::uint64_t seed, bool adjacent_only = false);

}  // namespace expdom::gen
