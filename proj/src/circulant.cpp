#include "expdom/circulant.hpp"

#include <algorithm>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace expdom {

CirculantGraph::CirculantGraph(int n, int ell) : n_(n), ell_(ell) {
  if (n < 3) throw std::invalid_argument("circulant graph needs n >= 3");
  if (ell < 1 || ell > n / 2)
    throw std::invalid_argument("generator radius must satisfy 1 <= l <= floor(n/2)");
}

Vertex CirculantGraph::reduce(long long x) const {
  long long r = x % n_;
  if (r < 0) r += n_;
  return static_cast<Vertex>(r);
}

std::vector<Vertex> CirculantGraph::neighbors(Vertex v) const {
  require_vertex(*this, v);
  std::vector<Vertex> out;
  out.reserve(2 * static_cast<std::size_t>(ell_));
  for (int i = 1; i <= ell_; ++i) {
    out.push_back(reduce(static_cast<long long>(v) + i));
    out.push_back(reduce(static_cast<long long>(v) - i));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet::VertexSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
    throw std::invalid_argument("vertex set contains a duplicate");
}

VertexSet::VertexSet(std::initializer_list<Vertex> members)
    : VertexSet(std::vector<Vertex>(members)) {}

VertexSet VertexSet::parse(const std::string& csv) {
  std::vector<Vertex> values;
  std::stringstream in(csv);
  std::string token;
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int v;
    try {
      v = std::stoi(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("cannot parse vertex '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("cannot parse vertex '" + token + "'");
    values.push_back(v);
  }
  if (values.empty()) throw std::invalid_argument("empty vertex set literal");
  return VertexSet(std::move(values));
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(members_[i]);
  }
  out += "}";
  return out;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  std::vector<Vertex> out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return VertexSet(std::move(out));
}

void require_vertex(const CirculantGraph& g, Vertex v) {
  if (!g.contains(v))
    throw std::invalid_argument("vertex " + std::to_string(v) + " is out of range 0.." +
                                std::to_string(g.order() - 1));
}

void require_vertices(const CirculantGraph& g, const VertexSet& s) {
  for (Vertex v : s) require_vertex(g, v);
}

int hamiltonian_distance(const CirculantGraph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  const int d = std::abs(u - v);
  return std::min(d, g.order() - d);
}

int distance(const CirculantGraph& g, Vertex u, Vertex v) {
  const int dh = hamiltonian_distance(g, u, v);
  return (dh + g.radius() - 1) / g.radius();
}

int distance_bfs(const CirculantGraph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  if (u == v) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(u)] = 0;
  queue.push(u);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (dist[static_cast<std::size_t>(y)] != -1) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      if (y == v) return dist[static_cast<std::size_t>(y)];
      queue.push(y);
    }
  }
  return dist[static_cast<std::size_t>(v)];  // unreachable cannot happen, the graph is connected
}

std::optional<int> constrained_distance(const CirculantGraph& g, Vertex d, Vertex v,
                                        const VertexSet& blockers) {
  require_vertex(g, d);
  require_vertex(g, v);
  require_vertices(g, blockers);
  if (d == v) return 0;
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> queue;
  dist[static_cast<std::size_t>(d)] = 0;
  queue.push(d);
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop();
    for (Vertex y : g.neighbors(x)) {
      if (y == v) return dist[static_cast<std::size_t>(x)] + 1;
      if (dist[static_cast<std::size_t>(y)] != -1 || blockers.contains(y)) continue;
      dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
      queue.push(y);
    }
  }
  return std::nullopt;
}

VertexSet interval(const CirculantGraph& g, Vertex a, Vertex b) {
  require_vertex(g, a);
  require_vertex(g, b);
  const int len = g.reduce(static_cast<long long>(b) - a) + 1;
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(len));
  for (int i = 0; i < len; ++i) out.push_back(g.reduce(static_cast<long long>(a) + i));
  return VertexSet(std::move(out));
}

bool interval_contains(const CirculantGraph& g, Vertex a, Vertex b, Vertex x) {
  require_vertex(g, a);
  require_vertex(g, b);
  require_vertex(g, x);
  return g.reduce(static_cast<long long>(x) - a) <= g.reduce(static_cast<long long>(b) - a);
}

VertexSet reflect(const CirculantGraph& g, const VertexSet& s, Vertex axis) {
  require_vertex(g, axis);
  require_vertices(g, s);
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(g.reduce(2LL * axis - v));
  return VertexSet(std::move(out));
}

VertexSet rotated(const CirculantGraph& g, const VertexSet& s, int shift) {
  require_vertices(g, s);
  std::vector<Vertex> out;
  out.reserve(s.size());
  for (Vertex v : s) out.push_back(g.reduce(static_cast<long long>(v) + shift));
  return VertexSet(std::move(out));
}

}  // namespace expdom
