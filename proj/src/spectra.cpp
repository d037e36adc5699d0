#include "lapspread/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lapspread/error.hpp"
#include "lapspread/tolerances.hpp"

namespace lapspread {

bool Matrix::is_symmetric(double tol) const {
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
  return true;
}

double Matrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double Matrix::inf_norm() const {
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    double row = 0.0;
    for (int j = 0; j < n_; ++j) row += std::abs((*this)(i, j));
    best = std::max(best, row);
  }
  return best;
}

namespace {

// Reduces the symmetric matrix held in `a` (row-major, lower triangle
// used) to tridiagonal form: diagonal in d, subdiagonal in e[1..n-1].
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d, std::vector<double>& e) {
  auto A = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = n - 1; i > 0; --i) {
    const int l = i - 1;
    double h = 0.0;
    if (l > 0) {
      double scale = 0.0;
      for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
      if (scale == 0.0) {
        e[i] = A(i, l);
      } else {
        for (int k = 0; k <= l; ++k) {
          A(i, k) /= scale;
          h += A(i, k) * A(i, k);
        }
        double f = A(i, l);
        double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = scale * g;
        h -= f * g;
        A(i, l) = f - g;
        f = 0.0;
        for (int j = 0; j <= l; ++j) {
          g = 0.0;
          for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
          for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
          e[j] = g / h;
          f += e[j] * A(i, j);
        }
        const double hh = f / (h + h);
        for (int j = 0; j <= l; ++j) {
          f = A(i, j);
          e[j] = g = e[j] - hh * f;
          for (int k = 0; k <= j; ++k) A(j, k) -= f * e[k] + g * A(i, k);
        }
      }
    } else {
      e[i] = A(i, l);
    }
  }
  e[0] = 0.0;
  for (int i = 0; i < n; ++i) d[i] = A(i, i);
}

// Implicit QL with Wilkinson shifts on a symmetric tridiagonal matrix.
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e, int n) {
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= kEps * dd) break;
      }
      if (m != l) {
        if (++iter > 60) throw DomainError("sym_eigs: QL iteration failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          e[i + 1] = r = std::hypot(f, g);
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          d[i + 1] = g + (p = s * r);
          g = c * r - b;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

}  // namespace

Spectrum sym_eigs(const Matrix& m) {
  if (!m.is_symmetric(tol::kSymmetry)) throw DomainError("sym_eigs: matrix is not symmetric");
  const int n = m.n();
  Spectrum out;
  out.tol = tol::kEigen * std::max(1.0, m.inf_norm());
  if (n == 0) return out;
  std::vector<double> a = m.data();
  std::vector<double> d(n), e(n);
  tridiagonalize(a, n, d, e);
  tridiagonal_ql(d, e, n);
  std::sort(d.begin(), d.end());
  out.eigs = std::move(d);
  return out;
}

Spectrum laplacian_spectrum(const SimpleGraph& g) { return sym_eigs(laplacian(g)); }
Spectrum laplacian_spectrum(const WeightedGraph& g) { return sym_eigs(laplacian(g)); }

double lambda2(const SimpleGraph& g) { return laplacian_spectrum(g).eigs[1]; }
double lambda_max(const SimpleGraph& g) { return laplacian_spectrum(g).back(); }
double spread(const SimpleGraph& g) {
  auto s = laplacian_spectrum(g);
  return s.back() - s.eigs[1];
}

double lambda2(const WeightedGraph& g) { return laplacian_spectrum(g).eigs[1]; }
double lambda_max(const WeightedGraph& g) { return laplacian_spectrum(g).back(); }
double spread(const WeightedGraph& g) {
  auto s = laplacian_spectrum(g);
  return s.back() - s.eigs[1];
}

int multiplicity_near(const Spectrum& s, double value, double radius) {
  return static_cast<int>(std::count_if(s.eigs.begin(), s.eigs.end(),
                                        [&](double x) { return std::abs(x - value) <= radius; }));
}

}  // namespace lapspread
