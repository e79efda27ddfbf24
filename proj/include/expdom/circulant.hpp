#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace expdom {

using Vertex = int;

// Consecutive circulant C(n,[l]): residues 0..n-1 in Hamiltonian order,
// with v adjacent to v +- i mod n for i in 1..l. Neighbor sets collapse the
// duplicated generator when n == 2l, so l == floor(n/2) is the complete
// graph with no special casing.
class CirculantGraph {
 public:
  CirculantGraph(int n, int ell);

  int order() const { return n_; }
  int radius() const { return ell_; }
  bool contains(Vertex v) const { return v >= 0 && v < n_; }
  Vertex reduce(long long x) const;
  std::vector<Vertex> neighbors(Vertex v) const;

 private:
  int n_;
  int ell_;
};

// Strictly increasing vertex residues. Duplicates are rejected at
// construction; membership is a binary search.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::vector<Vertex> members);
  VertexSet(std::initializer_list<Vertex> members);

  // Parses "0,7,12". Throws std::invalid_argument on malformed input or
  // duplicates.
  static VertexSet parse(const std::string& csv);

  const std::vector<Vertex>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;
  bool operator<(const VertexSet& o) const { return members_ < o.members_; }

  std::string to_string() const;  // "{0,7}"

 private:
  std::vector<Vertex> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

void require_vertex(const CirculantGraph& g, Vertex v);
void require_vertices(const CirculantGraph& g, const VertexSet& s);

// Arc distance on the Hamiltonian cycle: min(|u-v|, n-|u-v|).
int hamiltonian_distance(const CirculantGraph& g, Vertex u, Vertex v);

// Graph distance, ceil(hamiltonian_distance / l). Agrees with
// distance_bfs on every pair; the law and acceptance suites machine-check
// the equality.
int distance(const CirculantGraph& g, Vertex u, Vertex v);

// Independent oracle: breadth-first search over the adjacency rule.
int distance_bfs(const CirculantGraph& g, Vertex u, Vertex v);

// Shortest d-v path whose internal vertices avoid `blockers`; endpoints are
// exempt. std::nullopt when every route is blocked.
std::optional<int> constrained_distance(const CirculantGraph& g, Vertex d,
                                        Vertex v, const VertexSet& blockers);

// The increasing interval {a, a+1, ..., b} mod n; interval(a,a) = {a}.
VertexSet interval(const CirculantGraph& g, Vertex a, Vertex b);
bool interval_contains(const CirculantGraph& g, Vertex a, Vertex b, Vertex x);

// {2*axis - s mod n : s in S}; an automorphism image of S.
VertexSet reflect(const CirculantGraph& g, const VertexSet& s, Vertex axis);

// {s + shift mod n : s in S}.
VertexSet rotated(const CirculantGraph& g, const VertexSet& s, int shift);

}  // namespace expdom
