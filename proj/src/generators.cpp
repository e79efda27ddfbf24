#include "expdom/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "expdom/partition.hpp"

namespace expdom::gen {

namespace {

int pick(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

// `count` distinct in-block positions 0..block_len-1.
std::vector<int> pick_positions(std::mt19937_64& rng, int block_len, int count) {
  std::vector<int> all(static_cast<std::size_t>(block_len));
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(static_cast<std::size_t>(count));
  return all;
}

}  // namespace

std::vector<Fstar1Config> fstar1_configs(const CirculantGraph& g, int count, std::uint64_t seed) {
  const int period = 3 * g.radius() + 1;
  if (g.order() % period != 0)
    throw std::invalid_argument("generator requires (3l+1) to divide n");
  const int m = g.order() / period;
  if (m < 2) throw std::invalid_argument("generator requires at least two blocks");

  std::mt19937_64 rng(seed);
  std::vector<Fstar1Config> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> blocks(static_cast<std::size_t>(m));
  std::iota(blocks.begin(), blocks.end(), 0);
  for (int i = 0; i < count; ++i) {
    const Vertex offset = pick(rng, period);
    const int empty = 1 + pick(rng, m - 1);  // 1..m-1 empty blocks
    std::shuffle(blocks.begin(), blocks.end(), rng);
    std::vector<Vertex> members;
    for (int bi = empty; bi < m; ++bi) {
      const long long start = offset + static_cast<long long>(period) * blocks[static_cast<std::size_t>(bi)];
      members.push_back(g.reduce(start + pick(rng, period)));
    }
    out.push_back({VertexSet(std::move(members)), offset});
  }
  return out;
}

ShiftInstance shift_instance(const CirculantGraph& g, std::uint64_t seed) {
  const int period = 3 * g.radius() + 1;
  if (g.order() % period != 0)
    throw std::invalid_argument("generator requires (3l+1) to divide n");
  const int m = g.order() / period;
  if (m < 4) throw std::invalid_argument("generator requires at least four blocks");

  std::mt19937_64 rng(seed);
  const Vertex offset = pick(rng, g.order());
  const int z1 = pick(rng, m);
  const int gap = 2 + pick(rng, m - 2);  // far empty block at z1 + gap
  const int z2 = (z1 + gap) % m;
  const int crowded = (z1 + 1 + pick(rng, gap - 1)) % m;

  std::vector<int> fill(static_cast<std::size_t>(m), 0);
  for (int t = 1; t < gap; ++t) {
    const int block = (z1 + t) % m;
    fill[static_cast<std::size_t>(block)] = block == crowded ? 3 + pick(rng, period - 2) : 1 + pick(rng, 2);
  }
  for (int block = 0; block < m; ++block) {
    if (block == z1 || block == z2) continue;
    const int t = (block - z1 + m) % m;
    if (t > 0 && t < gap) continue;  // already assigned
    fill[static_cast<std::size_t>(block)] = pick(rng, 3);
  }

  std::vector<Vertex> members;
  for (int block = 0; block < m; ++block) {
    const int f = fill[static_cast<std::size_t>(block)];
    if (f == 0) continue;
    const long long start = offset + static_cast<long long>(period) * block;
    for (int pos : pick_positions(rng, period, f)) members.push_back(g.reduce(start + pos));
  }
  return {VertexSet(std::move(members)), offset};
}

std::vector<VertexSet> f3_pattern_sets(const CirculantGraph& g, Vertex offset, std::size_t cap,
                                       std::uint64_t seed, bool adjacent_only) {
  const IntervalPartition part = make_partition(g, offset);
  const int m = part.block_count();
  const int L = part.block_length();
  if (m < 3) throw std::invalid_argument("pattern needs at least three blocks");

  struct Pattern {
    int zero_a, zero_b, triple;
  };
  std::vector<Pattern> patterns;
  if (adjacent_only) {
    for (int i = 0; i < m; ++i) patterns.push_back({i, (i + 2) % m, (i + 1) % m});
  } else {
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        for (int k = 0; k < m; ++k)
          if (k != i && k != j) patterns.push_back({i, j, k});
  }

  std::vector<int> singles_template;
  for (int block = 0; block < m; ++block) singles_template.push_back(block);

  // total = |patterns| * C(L,3) * L^(m-3), computed with saturation at cap+1
  std::size_t total = patterns.size();
  const std::size_t combos3 = static_cast<std::size_t>(L) * (L - 1) * (L - 2) / 6;
  const auto saturating_mul = [&](std::size_t a, std::size_t b) {
    return (b != 0 && a > (cap + 1) / b) ? cap + 1 : a * b;
  };
  total = saturating_mul(total, combos3);
  for (int i = 0; i < m - 3; ++i) total = saturating_mul(total, static_cast<std::size_t>(L));

  const auto build = [&](const Pattern& p, int t1, int t2, int t3,
                         const std::vector<int>& single_pos) {
    std::vector<Vertex> members;
    const long long triple_start = part.block_start(p.triple);
    members.push_back(g.reduce(triple_start + t1));
    members.push_back(g.reduce(triple_start + t2));
    members.push_back(g.reduce(triple_start + t3));
    std::size_t si = 0;
    for (int block = 0; block < m; ++block) {
      if (block == p.zero_a || block == p.zero_b || block == p.triple) continue;
      members.push_back(g.reduce(static_cast<long long>(part.block_start(block)) + single_pos[si++]));
    }
    return VertexSet(std::move(members));
  };

  std::vector<VertexSet> out;
  std::mt19937_64 rng(seed);
  if (total <= cap) {
    std::vector<int> single_pos(static_cast<std::size_t>(m - 3), 0);
    for (const Pattern& p : patterns) {
      for (int t1 = 0; t1 < L; ++t1)
        for (int t2 = t1 + 1; t2 < L; ++t2)
          for (int t3 = t2 + 1; t3 < L; ++t3) {
            std::fill(single_pos.begin(), single_pos.end(), 0);
            while (true) {
              out.push_back(build(p, t1, t2, t3, single_pos));
              std::size_t i = 0;
              for (; i < single_pos.size(); ++i) {
                if (++single_pos[i] < L) break;
                single_pos[i] = 0;
              }
              if (i == single_pos.size()) break;
            }
          }
    }
  } else {
    out.reserve(cap);
    for (std::size_t s = 0; s < cap; ++s) {
      const Pattern& p = patterns[static_cast<std::size_t>(pick(rng, static_cast<int>(patterns.size())))];
      const std::vector<int> triple = pick_positions(rng, L, 3);
      std::vector<int> single_pos(static_cast<std::size_t>(m - 3));
      for (auto& pos : single_pos) pos = pick(rng, L);
      auto t = triple;
      std::sort(t.begin(), t.end());
      out.push_back(build(p, t[0], t[1], t[2], single_pos));
    }
  }
  return out;
}

}  // namespace expdom::gen
