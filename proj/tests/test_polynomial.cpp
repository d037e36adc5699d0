#include <cmath>
#include <random>

#include "doctest.h"
#include "lapspread/error.hpp"
#include "lapspread/families.hpp"
#include "lapspread/polynomial.hpp"
#include "lapspread/spectra.hpp"
#include "oracles.hpp"

using namespace lapspread;

namespace {
const double kPhi = (1 + std::sqrt(5.0)) / 2;
}

TEST_CASE("construction trims and evaluates") {
  const Polynomial p{1.0, 2.0, 0.0, 0.0};
  CHECK(p.degree() == 1);
  CHECK(p(3.0) == 7.0);
  CHECK(Polynomial{}.is_zero());
  const Polynomial q{-7.0, 19.0, -9.0, 1.0};
  CHECK(poly_eval(q, 0.0) == -7.0);
}

TEST_CASE("dandelion cubic at the golden-ratio point and at n-1") {
  const Polynomial p7{-7.0, 19.0, -9.0, 1.0};
  CHECK(std::abs(poly_eval(p7, 2 - kPhi) + 1) <= 1e-9);
  CHECK(std::abs(poly_eval(p7, 6.0) + 1) <= 1e-12);
  const Polynomial d = dandelion_cubic(7);
  for (int k = 0; k <= 3; ++k) CHECK(d.coeff(k) == p7.coeff(k));
}

TEST_CASE("arithmetic") {
  const std::vector<double> roots{1.0, -2.0, 3.5};
  const Polynomial p = Polynomial::from_roots(roots);
  CHECK(p.degree() == 3);
  for (double r : roots) CHECK(std::abs(p(r)) <= 1e-12);
  const Polynomial dp = p.derivative();
  for (double x : {-1.0, 0.3, 2.0}) {
    const double h = 1e-6;
    CHECK(dp(x) == doctest::Approx((p(x + h) - p(x - h)) / (2 * h)).epsilon(1e-6));
  }
  const Polynomial a{1.0, 1.0}, b{-1.0, 1.0};
  const Polynomial ab = a * b;
  CHECK(ab.coeff(0) == -1.0);
  CHECK(ab.coeff(1) == 0.0);
  CHECK(ab.coeff(2) == 1.0);
  const Polynomial q = p.deflate(3.5, 1e-12);
  CHECK(q.degree() == 2);
  CHECK(std::abs(q(1.0)) <= 1e-12);
  CHECK_THROWS_AS(p.deflate(0.0, 1e-12), DomainError);
}

TEST_CASE("bracketed roots") {
  const double n = 7;
  const Polynomial quad{n - 2, -n, 1.0};
  const std::vector<Bracket> b{{0.0, 1.0}};
  const auto r = isolate_roots(quad, b);
  REQUIRE(r.size() == 1);
  CHECK(std::abs(r[0] - (7 - std::sqrt(29.0)) / 2) <= 1e-12);

  const std::vector<Bracket> b2{{1.0, 2.0}};
  CHECK(std::abs(isolate_roots(Polynomial{-2.0, 0.0, 1.0}, b2)[0] - std::sqrt(2.0)) <= 1e-12);

  const std::vector<Bracket> bad{{2.0, 3.0}};
  CHECK_THROWS_AS(isolate_roots(quad, bad), DomainError);
}

TEST_CASE("G(2,3,4) quartic root in (0,1) is lambda2 of the graph") {
  const Polynomial quartic{44.0, -127.0, 87.0, -17.0, 1.0};
  const Polynomial printed = rij_quartic(2, 3, 4, false);
  for (int k = 0; k <= 4; ++k) CHECK(printed.coeff(k) == quartic.coeff(k));
  const std::vector<Bracket> b{{0.0, 1.0}};
  const auto r = isolate_roots(quartic, b);
  REQUIRE(r.size() == 1);
  const SimpleGraph g = make_simple(FamilySpec::g_rij(2, 3, 4));
  CHECK(std::abs(r[0] - oracle::spectrum(g)[1]) <= 1e-8);
  // The scan-based finder sees exactly one root there as well.
  CHECK(real_roots(quartic, 0.0, 1.0).size() == 1);
}

TEST_CASE("real_roots counts touching roots twice") {
  const std::vector<double> roots{0.5, 2.0, 2.0, 3.0};
  const auto found = real_roots(Polynomial::from_roots(roots), 0.0, 4.0);
  REQUIRE(found.size() == 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(found[k] - roots[k]) <= 1e-6);
}

TEST_CASE("characteristic polynomial roots are the eigenvalues") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unif(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 5;
    Matrix m(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) m(i, j) = m(j, i) = unif(rng);
    const Polynomial p = characteristic_polynomial(m);
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == 1.0);
    for (double e : sym_eigs(m).eigs) CHECK(std::abs(p(e)) <= 1e-8 * std::pow(1 + m.inf_norm(), n));
  }
}
