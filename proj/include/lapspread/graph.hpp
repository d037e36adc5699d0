#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapspread/matrix.hpp"

namespace lapspread {

inline constexpr int kMaxVertices = 64;

/// Distance / eccentricity value used for unreachable vertices.
inline constexpr int kInfinite = std::numeric_limits<int>::max();

/// Vertex subset; bit v set iff vertex v is a member.
using VertexSet = std::uint64_t;

inline int set_size(VertexSet s) { return std::popcount(s); }

/// Undirected simple graph on 2..64 vertices, one adjacency word per vertex.
class SimpleGraph {
 public:
  explicit SimpleGraph(int n);

  static SimpleGraph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int n() const { return n_; }
  std::uint64_t row(int v) const { return rows_[v]; }
  bool has_edge(int u, int v) const { return (rows_[u] >> v) & 1U; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  int edge_count() const;

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  /// All vertices as a bitset.
  VertexSet vertex_mask() const {
    return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.rows_[v] != b.rows_[v]) return false;
    return true;
  }

 private:
  void check_pair(int u, int v) const;

  int n_;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

/// Complete graph on [0,1]-weighted edges, stored densely.
class WeightedGraph {
 public:
  explicit WeightedGraph(int n);

  int n() const { return n_; }
  double weight(int u, int v) const { return w_[static_cast<std::size_t>(u) * n_ + v]; }
  void set_weight(int u, int v, double w);

  static WeightedGraph from_simple(const SimpleGraph& g);

 private:
  int n_;
  std::vector<double> w_;
};

/// All-pairs hop distances; kInfinite marks unreachable pairs.
class DistanceTable {
 public:
  explicit DistanceTable(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, kInfinite) {}

  int n() const { return n_; }
  int at(int u, int v) const { return d_[static_cast<std::size_t>(u) * n_ + v]; }
  void set(int u, int v, int d) { d_[static_cast<std::size_t>(u) * n_ + v] = d; }

 private:
  int n_;
  std::vector<int> d_;
};

SimpleGraph complement(const SimpleGraph& g);
WeightedGraph complement(const WeightedGraph& g);

DistanceTable distances(const SimpleGraph& g);
std::vector<int> eccentricities(const SimpleGraph& g);

/// Vertices of eccentricity >= 3. In a disconnected graph every vertex
/// has infinite eccentricity and therefore belongs to the set.
VertexSet high_ecc_set(const SimpleGraph& g);

int diameter(const SimpleGraph& g);
bool is_connected(const SimpleGraph& g);

Matrix laplacian(const SimpleGraph& g);
Matrix laplacian(const WeightedGraph& g);

/// graph6, short form only (n <= 62).
SimpleGraph parse_graph6(std::string_view text);
std::string emit_graph6(const SimpleGraph& g);

/// Apply a vertex relabeling: vertex v of `g` becomes perm[v].
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

}  // namespace lapspread
