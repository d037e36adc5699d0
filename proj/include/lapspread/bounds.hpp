#pragma once

#include <string_view>
#include <vector>

// Closed-form bounds and curves on (lambda2(G), lambda2(G^c)). All of
// them take real arguments; k = |D(G)|/2 may be a half-integer. Each
// throws DomainError outside its domain rather than clamping.

namespace lapspread {

enum class BoundId { FN, Weak, Mohar, Lu, Gn, Green, SeHyperbola, Rn, MaxBound };

std::string_view bound_name(BoundId id);

struct BoundValue {
  BoundId id;
  double value;
  std::vector<double> params;
};

/// Eccentricity bound: (n-k+1 - sqrt((n-k+1)^2 - 4(n-2k)))/2 for k in [0, n/2].
double f_n(double n, double k);

/// 1 - (k+1)/(n-k+1); never exceeds f_n on the shared domain.
double f_weak(double n, double k);

/// 4/(n d)
double mohar_bound(double n, double d);

/// 2n / (2 + d (n(n-1) - 2m))
double lu_bound(double n, double d, double m);

/// Sign of this polynomial decides f_n(k) >= lu_bound(n, 3, m).
double lu_comparison_polynomial(double n, double k, double m);

/// g_n(k) = f_n(k) + f_n((n-2k)/2) - 1, written in its two-radical form.
double g_n(double n, double k);

/// Closed-form second derivative of g_n in k.
double g_n_second_derivative(double n, double k);

/// Lower bound on lambda2(G)+lambda2(G^c) when G and G^c both have diameter 3.
struct Diam3Strengthening {
  double bound;  // 1 + (2n-8)/(n(n+4))
  double exact;  // f_n(1) + f_n(n/2 - 1)
};
Diam3Strengthening diam3_strengthening(double n);

/// max{f_n(k), f_n((n-2k)/2)} minimised over k, i.e. f_n(n/4).
double balanced_max_bound(double n);

/// xy(2-xy) - n(1-x)(1-y)(n-2-x-y); zero on the green curve.
double green_residual(double n, double x, double y);

/// The cubic whose roots are the quotient eigenvalues of a thick-stemmed
/// dandelion with cluster fraction s.
double w_n(double n, double x, double s);

/// Solves w_n(x, s) = 0 for s.
double r_n(double n, double x);

/// x + y - 2xy/n - 1; zero on the SE hyperbola.
double se_residual(double n, double x, double y);
double se_recover_s(double x, double y);
double se_recover_t(double x, double y);

/// (n - sqrt((n-2)^2 + 4))/2
double maxbound_closed(double n);

}  // namespace lapspread
