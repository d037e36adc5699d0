#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "lapspread/graph.hpp"

namespace testing_support {

inline lapspread::SimpleGraph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  lapspread::SimpleGraph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

inline lapspread::WeightedGraph random_weighted(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  lapspread::WeightedGraph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.set_weight(u, v, unif(rng));
  return g;
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return INFINITY;
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

inline lapspread::SimpleGraph path(int n) {
  lapspread::SimpleGraph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

inline lapspread::SimpleGraph cycle(int n) {
  lapspread::SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

inline lapspread::SimpleGraph complete(int n) {
  lapspread::SimpleGraph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) g.add_edge(u, v);
  return g;
}

}  // namespace testing_support
