#include <limits>
#include <string>

#include "lapspread/enumerate.hpp"
#include "lapspread/error.hpp"

namespace lapspread {

namespace {

// Depth-first search over relabelings, position by position. Position j
// fixes column j of the upper triangle, which is exactly the next block
// of the bit string, so a column larger than the best one seen under the
// same prefix prunes the whole subtree.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SimpleGraph& g) : n_(g.n()) {
    for (int v = 0; v < n_; ++v) rows_[v] = static_cast<std::uint32_t>(g.row(v));
    best_.fill(kUnset);
  }

  std::uint64_t run() {
    for (int v = 0; v < n_; ++v) {
      perm_[0] = v;
      descend(1, 1U << v);
    }
    std::uint64_t bits = 0;
    for (int j = 1; j < n_; ++j) bits = (bits << j) | best_[j];
    return bits;
  }

 private:
  static constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

  void descend(int j, std::uint32_t used) {
    if (j == n_) return;
    for (int v = 0; v < n_; ++v) {
      if (used & (1U << v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | ((rows_[perm_[i]] >> v) & 1U);
      if (col > best_[j]) continue;
      if (col < best_[j]) {
        best_[j] = col;
        for (int t = j + 1; t < kMaxEnumerateN; ++t) best_[t] = kUnset;
      }
      perm_[j] = v;
      descend(j + 1, used | (1U << v));
    }
  }

  int n_;
  std::array<std::uint32_t, kMaxEnumerateN> rows_{};
  std::array<int, kMaxEnumerateN> perm_{};
  std::array<std::uint32_t, kMaxEnumerateN> best_{};
};

// Same search, but against the identity labeling only: succeeds as soon as
// some relabeling beats it, which for most labeled graphs happens early.
class MinimalityTest {
 public:
  explicit MinimalityTest(const SimpleGraph& g) : n_(g.n()) {
    for (int v = 0; v < n_; ++v) rows_[v] = static_cast<std::uint32_t>(g.row(v));
    for (int j = 1; j < n_; ++j) {
      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | ((rows_[i] >> j) & 1U);
      own_[j] = col;
    }
  }

  bool minimal() {
    for (int v = 0; v < n_; ++v) {
      perm_[0] = v;
      if (beaten(1, 1U << v)) return false;
    }
    return true;
  }

 private:
  bool beaten(int j, std::uint32_t used) {
    if (j == n_) return false;
    for (int v = 0; v < n_; ++v) {
      if (used & (1U << v)) continue;
      std::uint32_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | ((rows_[perm_[i]] >> v) & 1U);
      if (col > own_[j]) continue;
      if (col < own_[j]) return true;
      perm_[j] = v;
      if (beaten(j + 1, used | (1U << v))) return true;
    }
    return false;
  }

  int n_;
  std::array<std::uint32_t, kMaxEnumerateN> rows_{};
  std::array<int, kMaxEnumerateN> perm_{};
  std::array<std::uint32_t, kMaxEnumerateN> own_{};
};

void require_small(const SimpleGraph& g, const char* fn) {
  if (g.n() > kMaxEnumerateN)
    throw DomainError(std::string(fn) + ": n = " + std::to_string(g.n()) + " exceeds 8");
}

}  // namespace

Certificate labeling_string(const SimpleGraph& g) {
  require_small(g, "labeling_string");
  std::uint64_t bits = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i) bits = (bits << 1) | (g.has_edge(i, j) ? 1U : 0U);
  return {g.n(), bits};
}

bool is_canonical_labeling(const SimpleGraph& g) {
  require_small(g, "is_canonical_labeling");
  return MinimalityTest(g).minimal();
}

Certificate canonical_form(const SimpleGraph& g) {
  require_small(g, "canonical_form");
  return {g.n(), CanonicalSearch(g).run()};
}

SimpleGraph certificate_graph(const Certificate& c) {
  SimpleGraph g(c.n);
  const int m = c.n * (c.n - 1) / 2;
  int pos = 0;
  for (int j = 1; j < c.n; ++j)
    for (int i = 0; i < j; ++i, ++pos)
      if ((c.bits >> (m - 1 - pos)) & 1U) g.add_edge(i, j);
  return g;
}

std::uint64_t edge_mask(const SimpleGraph& g) {
  std::uint64_t mask = 0;
  int e = 0;
  for (int j = 1; j < g.n(); ++j)
    for (int i = 0; i < j; ++i, ++e)
      if (g.has_edge(i, j)) mask |= std::uint64_t{1} << e;
  return mask;
}

SimpleGraph graph_from_mask(int n, std::uint64_t mask) {
  SimpleGraph g(n);
  int e = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++e)
      if ((mask >> e) & 1U) g.add_edge(i, j);
  return g;
}

}  // namespace lapspread
