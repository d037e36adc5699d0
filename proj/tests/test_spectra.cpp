#include <cmath>

#include "doctest.h"
#include "lapspread/enumerate.hpp"
#include "lapspread/error.hpp"
#include "lapspread/spectra.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lapspread;
using namespace testing_support;

TEST_CASE("P4 spectrum") {
  const Spectrum s = laplacian_spectrum(path(4));
  const std::vector<double> want{0.0, 2 - std::sqrt(2.0), 2.0, 2 + std::sqrt(2.0)};
  CHECK(max_abs_diff(s.eigs, want) <= 1e-9);
  CHECK(lambda2(path(4)) == doctest::Approx(0.5857864376269049).epsilon(1e-12));
}

TEST_CASE("zero matrix") {
  const Spectrum s = sym_eigs(Matrix(3));
  CHECK(max_abs_diff(s.eigs, {0.0, 0.0, 0.0}) == 0.0);
}

TEST_CASE("complete and cycle graphs") {
  for (int n = 2; n <= 20; ++n) {
    const Spectrum s = laplacian_spectrum(complete(n));
    CHECK(std::abs(s.front()) <= 1e-9);
    CHECK(multiplicity_near(s, n, 1e-9) == n - 1);
  }
  for (int n = 3; n <= 20; ++n) {
    std::vector<double> want;
    for (int k = 0; k < n; ++k) want.push_back(2 - 2 * std::cos(2 * M_PI * k / n));
    std::sort(want.begin(), want.end());
    CHECK(max_abs_diff(laplacian_spectrum(cycle(n)).eigs, want) <= 1e-9);
  }
}

TEST_CASE("spread of K2") {
  // lambda2 and lambda_n coincide for n = 2, so the spread lambda_n - lambda2 is 0.
  CHECK(std::abs(spread(complete(2))) <= 1e-12);
  CHECK(std::abs(lambda_max(complete(2)) - 2) <= 1e-12);
}

TEST_CASE("disconnected graphs have lambda2 = 0") {
  SimpleGraph g(6);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  CHECK(std::abs(lambda2(g)) <= 1e-9);
}

TEST_CASE("agrees with Jacobi on random graphs") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const SimpleGraph g = random_graph(2 + t % 40, 0.1 + 0.8 * (t % 7) / 7.0, rng);
    const Spectrum s = laplacian_spectrum(g);
    CHECK(max_abs_diff(s.eigs, oracle::spectrum(g)) <= std::max(s.tol, 1e-9 * g.n()));
  }
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph w = random_weighted(2 + t % 30, rng);
    CHECK(max_abs_diff(laplacian_spectrum(w).eigs, oracle::spectrum(w)) <= 1e-9 * w.n());
  }
}

TEST_CASE("reported eigenvalues make M - lambda I singular") {
  // Checked through the smallest singular value: for symmetric M the
  // distance from lambda to the oracle spectrum bounds it.
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int t = 0; t < 500; ++t) {
    const int n = 2 + t % 12;
    Matrix m(n);
    oracle::Dense d(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) {
        const double v = unif(rng);
        m(i, j) = m(j, i) = v;
        d[i][j] = d[j][i] = v;
      }
    const Spectrum s = sym_eigs(m);
    const auto want = oracle::jacobi_eigenvalues(d);
    REQUIRE(max_abs_diff(s.eigs, want) <= 1e-9 * std::max(1.0, m.inf_norm()));
  }
}

TEST_CASE("asymmetric input is rejected") {
  Matrix m(3);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(sym_eigs(m), DomainError);
}

TEST_CASE("complement identity: lambda2(G) + lambda_max(G^c) = n for all n <= 7 classes") {
  for (int n = 2; n <= 7; ++n) {
    const ClassList all = enumerate_classes({n, {}, true, false});
    for (std::size_t k = 0; k < all.size(); ++k) {
      const SimpleGraph g = all.graph(k);
      REQUIRE(std::abs(lambda2(g) + lambda_max(complement(g)) - n) <= 1e-8);
    }
  }
}

TEST_CASE("weighted complement identity") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 100; ++t) {
    const WeightedGraph w = random_weighted(3 + t % 20, rng);
    CHECK(std::abs(lambda2(complement(w)) - (w.n() - lambda_max(w))) <= 1e-8);
  }
}
