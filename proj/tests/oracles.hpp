#pragma once

// Independent reference implementations. None of these share code with
// the library beyond the SimpleGraph container: they are deliberately
// slow and simple.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "lapspread/graph.hpp"
#include "lapspread/matrix.hpp"

namespace oracle {

using Dense = std::vector<std::vector<double>>;

inline Dense laplacian(const lapspread::SimpleGraph& g) {
  const int n = g.n();
  Dense l(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) {
        l[u][v] = -1.0;
        l[u][u] += 1.0;
      }
  return l;
}

inline Dense laplacian(const lapspread::WeightedGraph& g) {
  const int n = g.n();
  Dense l(n, std::vector<double>(n, 0.0));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) {
        l[u][v] = -g.weight(u, v);
        l[u][u] += g.weight(u, v);
      }
  return l;
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
inline std::vector<double> jacobi_eigenvalues(Dense a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> e(n);
  for (int k = 0; k < n; ++k) e[k] = a[k][k];
  std::sort(e.begin(), e.end());
  return e;
}

inline std::vector<double> spectrum(const lapspread::SimpleGraph& g) { return jacobi_eigenvalues(oracle::laplacian(g)); }
inline std::vector<double> spectrum(const lapspread::WeightedGraph& g) { return jacobi_eigenvalues(oracle::laplacian(g)); }

constexpr int kInf = 1 << 20;

/// All-pairs shortest paths, kInf when unreachable.
inline std::vector<std::vector<int>> floyd_warshall(const lapspread::SimpleGraph& g) {
  const int n = g.n();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (int v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) d[u][v] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

inline std::vector<int> eccentricities(const lapspread::SimpleGraph& g) {
  const auto d = floyd_warshall(g);
  std::vector<int> e(g.n(), 0);
  for (int u = 0; u < g.n(); ++u) e[u] = *std::max_element(d[u].begin(), d[u].end());
  return e;
}

/// Number of unlabeled graphs on n vertices via Burnside's lemma over S_n
/// acting on vertex pairs.
inline std::uint64_t burnside_class_count(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::map<std::pair<int, int>, int> index;
  for (int e = 0; e < static_cast<int>(pairs.size()); ++e) index[pairs[e]] = e;

  std::uint64_t total = 0, group = 0;
  do {
    std::vector<bool> seen(pairs.size(), false);
    int cycles = 0;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      if (seen[e]) continue;
      ++cycles;
      std::size_t f = e;
      while (!seen[f]) {
        seen[f] = true;
        int a = perm[pairs[f].first], b = perm[pairs[f].second];
        if (a > b) std::swap(a, b);
        f = index[{a, b}];
      }
    }
    total += std::uint64_t{1} << cycles;
    ++group;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total / group;
}

/// Upper-triangle string (column-major, x(0,1) first) as a bit vector.
inline std::vector<bool> triangle_string(const lapspread::SimpleGraph& g, const std::vector<int>& label_of_position) {
  std::vector<bool> s;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) s.push_back(g.has_edge(label_of_position[i], label_of_position[j]));
  return s;
}

/// Minimum upper-triangle string over all n! orderings, packed MSB first.
inline std::uint64_t brute_force_canonical(const lapspread::SimpleGraph& g) {
  std::vector<int> order(g.n());
  std::iota(order.begin(), order.end(), 0);
  std::vector<bool> best;
  bool first = true;
  do {
    auto s = triangle_string(g, order);
    if (first || s < best) best = s, first = false;
  } while (std::next_permutation(order.begin(), order.end()));
  std::uint64_t bits = 0;
  for (bool b : best) bits = (bits << 1) | (b ? 1U : 0U);
  return bits;
}

/// Degree-respecting backtracking isomorphism test.
inline bool isomorphic(const lapspread::SimpleGraph& a, const lapspread::SimpleGraph& b) {
  const int n = a.n();
  if (b.n() != n || a.edge_count() != b.edge_count()) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, int u) -> bool {
    if (u == n) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v] || a.degree(u) != b.degree(v)) continue;
      bool ok = true;
      for (int w = 0; w < u && ok; ++w) ok = a.has_edge(u, w) == b.has_edge(v, map[w]);
      if (!ok) continue;
      map[u] = v;
      used[v] = true;
      if (self(self, u + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

/// Invariant that isomorphic graphs share: sorted (degree, sorted
/// neighbour degrees) profiles.
inline std::vector<std::vector<int>> degree_profile(const lapspread::SimpleGraph& g) {
  std::vector<std::vector<int>> prof;
  for (int v = 0; v < g.n(); ++v) {
    std::vector<int> p{g.degree(v)};
    std::vector<int> nb;
    for (int w = 0; w < g.n(); ++w)
      if (w != v && g.has_edge(v, w)) nb.push_back(g.degree(w));
    std::sort(nb.begin(), nb.end());
    p.insert(p.end(), nb.begin(), nb.end());
    prof.push_back(p);
  }
  std::sort(prof.begin(), prof.end());
  return prof;
}

/// Isomorphism classes among `graphs`: bucket by degree profile, then
/// compare against each bucket's representatives.
inline std::size_t count_classes(const std::vector<lapspread::SimpleGraph>& graphs) {
  std::map<std::vector<std::vector<int>>, std::vector<lapspread::SimpleGraph>> buckets;
  std::size_t classes = 0;
  for (const auto& g : graphs) {
    auto& reps = buckets[degree_profile(g)];
    bool found = false;
    for (const auto& r : reps)
      if (isomorphic(g, r)) {
        found = true;
        break;
      }
    if (!found) {
      reps.push_back(g);
      ++classes;
    }
  }
  return classes;
}

/// Every labeled graph on n vertices.
inline std::vector<lapspread::SimpleGraph> all_labeled(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  std::vector<lapspread::SimpleGraph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs.size()); ++m) {
    lapspread::SimpleGraph g(n);
    for (std::size_t e = 0; e < pairs.size(); ++e)
      if ((m >> e) & 1U) g.add_edge(pairs[e].first, pairs[e].second);
    out.push_back(g);
  }
  return out;
}

}  // namespace oracle
