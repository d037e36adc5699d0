#pragma once

#include <span>
#include <vector>

#include "lapspread/matrix.hpp"

namespace lapspread {

/// Real polynomial, coefficients in ascending degree. Trailing zero
/// coefficients are trimmed on construction.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<double> ascending);
  Polynomial(std::initializer_list<double> ascending)
      : Polynomial(std::vector<double>(ascending)) {}

  /// (x - r0)(x - r1)...
  static Polynomial from_roots(std::span<const double> roots);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<double>& coeffs() const { return c_; }
  double coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[k] : 0.0; }

  double operator()(double x) const;
  Polynomial derivative() const;

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Divides by (x - root) with synthetic division. The remainder must
  /// vanish to within `tol`, otherwise DomainError.
  Polynomial deflate(double root, double tol = 0.0) const;

 private:
  std::vector<double> c_;
};

/// Horner evaluation.
double poly_eval(const Polynomial& p, double x);

struct Bracket {
  double lo;
  double hi;
};

/// Bisection inside each bracket (at most 200 halvings). Every bracket
/// must straddle a sign change, otherwise DomainError.
std::vector<double> isolate_roots(const Polynomial& p, std::span<const Bracket> brackets);

/// Brackets for the real roots of `p` in (lo, hi), derived from the sign
/// of `p` between consecutive critical points. Critical points where `p`
/// vanishes (even-multiplicity roots) are returned in `touching`.
struct RootScan {
  std::vector<Bracket> brackets;
  std::vector<double> touching;
};
RootScan sign_change_brackets(const Polynomial& p, double lo, double hi);

/// All real roots in (lo, hi), ascending, touching roots counted twice.
std::vector<double> real_roots(const Polynomial& p, double lo, double hi);

/// det(xI - m), by the Faddeev-LeVerrier recurrence. Intended for the
/// small quotient matrices (n <= 8).
Polynomial characteristic_polynomial(const Matrix& m);

}  // namespace lapspread
