#include "lapspread/graph.hpp"

#include <algorithm>
#include <string>

#include "lapspread/error.hpp"

namespace lapspread {

namespace {

// BFS layers from `source`; returns the eccentricity, kInfinite if some
// vertex is unreachable. If `out` is non-null the layer index of every
// reached vertex is written into the corresponding row.
int bfs_from(const SimpleGraph& g, int source, DistanceTable* out) {
  const VertexSet all = g.vertex_mask();
  VertexSet reached = VertexSet{1} << source;
  VertexSet frontier = reached;
  int depth = 0;
  if (out) out->set(source, source, 0);
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= ~reached;
    if (!next) break;
    ++depth;
    if (out)
      for (VertexSet f = next; f; f &= f - 1) out->set(source, std::countr_zero(f), depth);
    reached |= next;
    frontier = next;
  }
  return reached == all ? depth : kInfinite;
}

}  // namespace

SimpleGraph::SimpleGraph(int n) : n_(n) {
  if (n < 2 || n > kMaxVertices)
    throw DomainError("SimpleGraph: vertex count must be in [2, 64], got " + std::to_string(n));
}

SimpleGraph SimpleGraph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::check_pair(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw DomainError("SimpleGraph: invalid vertex pair (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
}

void SimpleGraph::add_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] |= std::uint64_t{1} << v;
  rows_[v] |= std::uint64_t{1} << u;
}

void SimpleGraph::remove_edge(int u, int v) {
  check_pair(u, v);
  rows_[u] &= ~(std::uint64_t{1} << v);
  rows_[v] &= ~(std::uint64_t{1} << u);
}

int SimpleGraph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
  return twice / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

WeightedGraph::WeightedGraph(int n) : n_(n) {
  if (n < 2) throw DomainError("WeightedGraph: vertex count must be >= 2");
  w_.assign(static_cast<std::size_t>(n) * n, 0.0);
}

void WeightedGraph::set_weight(int u, int v, double w) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
    throw DomainError("WeightedGraph: invalid vertex pair");
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("WeightedGraph: weight outside [0,1]");
  w_[static_cast<std::size_t>(u) * n_ + v] = w;
  w_[static_cast<std::size_t>(v) * n_ + u] = w;
}

WeightedGraph WeightedGraph::from_simple(const SimpleGraph& g) {
  WeightedGraph w(g.n());
  for (auto [u, v] : g.edges()) w.set_weight(u, v, 1.0);
  return w;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c(g.n());
  const VertexSet all = g.vertex_mask();
  for (int v = 0; v < g.n(); ++v)
    for (VertexSet r = ~g.row(v) & all & ~(VertexSet{1} << v); r; r &= r - 1) {
      int u = std::countr_zero(r);
      if (u > v) c.add_edge(v, u);
    }
  return c;
}

WeightedGraph complement(const WeightedGraph& g) {
  WeightedGraph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) c.set_weight(u, v, 1.0 - g.weight(u, v));
  return c;
}

DistanceTable distances(const SimpleGraph& g) {
  DistanceTable t(g.n());
  for (int s = 0; s < g.n(); ++s) bfs_from(g, s, &t);
  return t;
}

std::vector<int> eccentricities(const SimpleGraph& g) {
  std::vector<int> ecc(g.n());
  for (int v = 0; v < g.n(); ++v) ecc[v] = bfs_from(g, v, nullptr);
  return ecc;
}

VertexSet high_ecc_set(const SimpleGraph& g) {
  VertexSet d = 0;
  for (int v = 0; v < g.n(); ++v)
    if (bfs_from(g, v, nullptr) >= 3) d |= VertexSet{1} << v;
  return d;
}

int diameter(const SimpleGraph& g) {
  int best = 0;
  for (int v = 0; v < g.n(); ++v) {
    int e = bfs_from(g, v, nullptr);
    if (e == kInfinite) return kInfinite;
    best = std::max(best, e);
  }
  return best;
}

bool is_connected(const SimpleGraph& g) { return bfs_from(g, 0, nullptr) != kInfinite; }

Matrix laplacian(const SimpleGraph& g) {
  Matrix l(g.n());
  for (int u = 0; u < g.n(); ++u) {
    l(u, u) = g.degree(u);
    for (VertexSet r = g.row(u); r; r &= r - 1) l(u, std::countr_zero(r)) = -1.0;
  }
  return l;
}

Matrix laplacian(const WeightedGraph& g) {
  Matrix l(g.n());
  for (int u = 0; u < g.n(); ++u) {
    double deg = 0.0;
    for (int v = 0; v < g.n(); ++v) {
      if (v == u) continue;
      l(u, v) = -g.weight(u, v);
      deg += g.weight(u, v);
    }
    l(u, u) = deg;
  }
  return l;
}

SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.n()) throw DomainError("relabel: permutation size mismatch");
  SimpleGraph out(g.n());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

}  // namespace lapspread
