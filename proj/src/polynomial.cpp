#include "lapspread/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lapspread/error.hpp"

namespace lapspread {

Polynomial::Polynomial(std::vector<double> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

Polynomial Polynomial::from_roots(std::span<const double> roots) {
  Polynomial p{1.0};
  for (double r : roots) p = p * Polynomial{-r, 1.0};
  return p;
}

double Polynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<double> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = static_cast<double>(k) * c_[k];
  return Polynomial(std::move(d));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<double> c(a.c_.size() + b.c_.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::deflate(double root, double tol) const {
  if (degree() < 1) throw DomainError("Polynomial::deflate: degree must be >= 1");
  std::vector<double> q(c_.size() - 1);
  double carry = 0.0;
  for (int k = degree(); k >= 1; --k) {
    carry = carry * root + c_[k];
    q[k - 1] = carry;
  }
  const double remainder = carry * root + c_[0];
  if (std::abs(remainder) > tol)
    throw DomainError("Polynomial::deflate: " + std::to_string(root) + " is not a root");
  return Polynomial(std::move(q));
}

double poly_eval(const Polynomial& p, double x) { return p(x); }

namespace {

double bisect(const Polynomial& p, double lo, double hi) {
  double flo = p(lo);
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = p(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::vector<double> isolate_roots(const Polynomial& p, std::span<const Bracket> brackets) {
  std::vector<double> roots;
  roots.reserve(brackets.size());
  for (const Bracket& b : brackets) {
    const double flo = p(b.lo), fhi = p(b.hi);
    if (flo == 0.0) {
      roots.push_back(b.lo);
      continue;
    }
    if (fhi == 0.0) {
      roots.push_back(b.hi);
      continue;
    }
    if (sign_of(flo) == sign_of(fhi))
      throw DomainError("isolate_roots: bracket [" + std::to_string(b.lo) + ", " +
                        std::to_string(b.hi) + "] has no sign change");
    roots.push_back(bisect(p, b.lo, b.hi));
  }
  return roots;
}

RootScan sign_change_brackets(const Polynomial& p, double lo, double hi) {
  RootScan scan;
  if (p.degree() < 1) return scan;

  std::vector<double> critical;
  if (p.degree() >= 2) critical = real_roots(p.derivative(), lo, hi);
  critical.erase(std::unique(critical.begin(), critical.end()), critical.end());

  auto scale_at = [&](double x) {
    double s = 0.0, xp = 1.0;
    for (double c : p.coeffs()) {
      s += std::abs(c) * xp;
      xp *= std::max(1.0, std::abs(x));
    }
    return s;
  };

  std::vector<double> points{lo};
  std::vector<int> signs{sign_of(p(lo))};
  for (double c : critical) {
    const double v = p(c);
    if (std::abs(v) <= 1e-9 * scale_at(c)) {
      scan.touching.push_back(c);
      points.push_back(c);
      signs.push_back(0);
    } else {
      points.push_back(c);
      signs.push_back(sign_of(v));
    }
  }
  points.push_back(hi);
  signs.push_back(sign_of(p(hi)));

  for (std::size_t k = 0; k + 1 < points.size(); ++k)
    if (signs[k] != 0 && signs[k + 1] != 0 && signs[k] != signs[k + 1])
      scan.brackets.push_back({points[k], points[k + 1]});
  return scan;
}

std::vector<double> real_roots(const Polynomial& p, double lo, double hi) {
  RootScan scan = sign_change_brackets(p, lo, hi);
  std::vector<double> roots = isolate_roots(p, scan.brackets);
  for (double t : scan.touching) {
    roots.push_back(t);
    roots.push_back(t);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Polynomial characteristic_polynomial(const Matrix& m) {
  const int n = m.n();
  // c[k] is the coefficient of x^k in det(xI - m).
  std::vector<double> c(n + 1, 0.0);
  c[n] = 1.0;
  Matrix mk(n);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    Matrix next(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int t = 0; t < n; ++t) s += m(i, t) * mk(t, j);
        next(i, j) = s + (i == j ? c[n - k + 1] : 0.0);
      }
    double tr = 0.0;
    for (int i = 0; i < n; ++i)
      for (int t = 0; t < n; ++t) tr += m(i, t) * next(t, i);
    c[n - k] = -tr / k;
    mk = std::move(next);
  }
  return Polynomial(std::move(c));
}

}  // namespace lapspread
