#include "lapspread/bounds.hpp"

#include <cmath>
#include <string>

#include "lapspread/error.hpp"

namespace lapspread {

namespace {

void require_k_domain(const char* fn, double n, double k) {
  if (!(n >= 2.0)) throw DomainError(std::string(fn) + ": n must be >= 2");
  const double slack = 1e-12 * n;
  if (!(k >= -slack && k <= n / 2.0 + slack))
    throw DomainError(std::string(fn) + ": k=" + std::to_string(k) + " outside [0, n/2]");
}

}  // namespace

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::FN: return "F_N";
    case BoundId::Weak: return "WEAK";
    case BoundId::Mohar: return "MOHAR";
    case BoundId::Lu: return "LU";
    case BoundId::Gn: return "GN";
    case BoundId::Green: return "GREEN";
    case BoundId::SeHyperbola: return "SE_HYPERBOLA";
    case BoundId::Rn: return "R_N";
    case BoundId::MaxBound: return "MAXBOUND";
  }
  return "?";
}

double f_n(double n, double k) {
  require_k_domain("f_n", n, k);
  // (n-k+1)^2 - 4(n-2k) rewritten as a sum of nonnegative terms; the
  // rationalised form avoids cancellation as k -> n/2.
  const double disc = (n - k - 3) * (n - k - 3) + 4.0 * (n - 2.0);
  return 2.0 * (n - 2.0 * k) / (n - k + 1.0 + std::sqrt(disc));
}

double f_weak(double n, double k) {
  require_k_domain("f_weak", n, k);
  return 1.0 - (k + 1.0) / (n - k + 1.0);
}

double mohar_bound(double n, double d) {
  if (!(n >= 1.0) || !(d >= 1.0) || !std::isfinite(d))
    throw DomainError("mohar_bound: need n >= 1 and finite d >= 1");
  return 4.0 / (n * d);
}

double lu_bound(double n, double d, double m) {
  if (!(n >= 1.0) || !(d >= 1.0) || !std::isfinite(d))
    throw DomainError("lu_bound: need n >= 1 and finite d >= 1");
  if (!(m >= 0.0 && m <= n * (n - 1.0) / 2.0)) throw DomainError("lu_bound: m outside [0, n(n-1)/2]");
  return 2.0 * n / (2.0 + d * (n * (n - 1.0) - 2.0 * m));
}

double lu_comparison_polynomial(double n, double k, double m) {
  const double n2 = n * n, n3 = n2 * n, n4 = n3 * n, n5 = n4 * n;
  return 36 * n5 - 72 * k * n4 - 144 * m * n3 + 288 * k * m * n2 - 96 * n4 + 168 * k * n3 +
         84 * n3 + 192 * m * n2 - 192 * k * n2 - 24 * n2 + 144 * m * m * n - 336 * k * m * n -
         48 * m * n + 112 * k * n - 288 * k * m * m + 192 * k * m - 32 * k;
}

double g_n(double n, double k) {
  require_k_domain("g_n", n, k);
  const double a = (n - k + 1) * (n - k + 1) - 4 * (n - 2 * k);
  const double half = (n + 2 * k + 2) / 2;
  const double b = half * half - 8 * k;
  return (1.5 * n - std::sqrt(a) - std::sqrt(b)) / 2;
}

double g_n_second_derivative(double n, double k) {
  require_k_domain("g_n_second_derivative", n, k);
  const double a = (n - k - 1) * (n - k - 1) + 4 * k;
  const double b = (k + n / 2 + 1) * (k + n / 2 + 1) - 8 * k;
  const double a32 = std::pow(a, 1.5), b32 = std::pow(b, 1.5);
  return -(2 * n - 4) * (a32 + b32) / (a32 * b32);
}

Diam3Strengthening diam3_strengthening(double n) {
  if (!(n >= 4.0)) throw DomainError("diam3_strengthening: n must be >= 4");
  return {1.0 + (2 * n - 8) / (n * (n + 4)), f_n(n, 1.0) + f_n(n, n / 2 - 1)};
}

double balanced_max_bound(double n) {
  if (!(n >= 2.0)) throw DomainError("balanced_max_bound: n must be >= 2");
  const double b = 0.75 * n + 1;
  return (b - std::sqrt(b * b - 2 * n)) / 2;
}

double green_residual(double n, double x, double y) {
  return x * y * (2 - x * y) - n * (1 - x) * (1 - y) * (n - 2 - x - y);
}

double w_n(double n, double x, double s) {
  return ((x + (-s * n - n + 2 * s - 1)) * x + (n * n * s - 2 * n * s + 2 * n - 2)) * x - n * n * s +
         2 * n * s;
}

double r_n(double n, double x) {
  const double num = x * x * x - n * x * x - x * x + 2 * n * x - 2 * x;
  const double den = n * x * x - 2 * x * x - n * n * x + 2 * n * x + n * n - 2 * n;
  const double scale = std::abs(n * x * x) + std::abs(n * n * x) + n * n;
  if (std::abs(den) <= 1e-14 * scale) throw DomainError("r_n: pole at x=" + std::to_string(x));
  return num / den;
}

double se_residual(double n, double x, double y) { return x + y - 2 * x * y / n - 1; }
double se_recover_s(double x, double y) { return (x - y + 1) / 2; }
double se_recover_t(double x, double y) { return (y - x + 1) / 2; }

double maxbound_closed(double n) {
  if (!(n >= 2.0)) throw DomainError("maxbound_closed: n must be >= 2");
  return (n - std::sqrt((n - 2) * (n - 2) + 4)) / 2;
}

}  // namespace lapspread
