#pragma once

#include <cstddef>
#include <vector>

namespace lapspread {

/// Dense square row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int n() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  const std::vector<double>& data() const { return a_; }

  bool is_symmetric(double tol) const;
  double trace() const;
  /// Max absolute row sum; an upper bound on the spectral radius.
  double inf_norm() const;

 private:
  int n_ = 0;
  std::vector<double> a_;
};

}  // namespace lapspread
