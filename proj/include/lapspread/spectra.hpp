#pragma once

#include <span>
#include <vector>

#include "lapspread/graph.hpp"
#include "lapspread/matrix.hpp"

namespace lapspread {

/// Ascending eigenvalues of a real symmetric matrix, with the absolute
/// accuracy bound the solver guarantees for them.
struct Spectrum {
  std::vector<double> eigs;
  double tol = 0.0;

  int size() const { return static_cast<int>(eigs.size()); }
  double front() const { return eigs.front(); }
  double back() const { return eigs.back(); }
};

/// Householder tridiagonalisation followed by implicit QL. Throws
/// DomainError if `m` is not symmetric within 1e-12 entrywise.
Spectrum sym_eigs(const Matrix& m);

Spectrum laplacian_spectrum(const SimpleGraph& g);
Spectrum laplacian_spectrum(const WeightedGraph& g);

double lambda2(const SimpleGraph& g);
double lambda_max(const SimpleGraph& g);
double spread(const SimpleGraph& g);

double lambda2(const WeightedGraph& g);
double lambda_max(const WeightedGraph& g);
double spread(const WeightedGraph& g);

/// Number of eigenvalues within `radius` of `value`.
int multiplicity_near(const Spectrum& s, double value, double radius);

}  // namespace lapspread
