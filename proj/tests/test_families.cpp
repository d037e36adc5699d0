#include <cmath>
#include <set>

#include "doctest.h"
#include "lapspread/bounds.hpp"
#include "lapspread/enumerate.hpp"
#include "lapspread/error.hpp"
#include "lapspread/families.hpp"
#include "lapspread/spectra.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lapspread;
using namespace testing_support;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

double distance_to(const std::vector<double>& spectrum, double v) {
  double d = INFINITY;
  for (double e : spectrum) d = std::min(d, std::abs(e - v));
  return d;
}

void check_quotient_inside(const FamilySpec& spec) {
  const QuotientMatrix q = quotient(spec);
  double row_sum_err = 0;
  for (int i = 0; i < q.q.n(); ++i) {
    double s = 0;
    for (int j = 0; j < q.q.n(); ++j) s += q.q(i, j);
    row_sum_err = std::max(row_sum_err, std::abs(s));
  }
  CHECK(row_sum_err <= 1e-12);
  const auto full = spec.is_weighted() ? oracle::spectrum(make_weighted(spec)) : oracle::spectrum(make_simple(spec));
  const Polynomial p = characteristic_polynomial(q.q);
  const auto roots = real_roots(p, -0.5, spec.vertex_count() + 0.5);
  CHECK(static_cast<int>(roots.size()) == q.q.n());
  for (double r : roots) CHECK(distance_to(full, r) <= 1e-7);
}

std::set<Certificate> certificates(const std::vector<SimpleGraph>& gs, bool complemented) {
  std::set<Certificate> out;
  for (const auto& g : gs) out.insert(canonical_form(complemented ? complement(g) : g));
  return out;
}

}  // namespace

TEST_CASE("G(2,3,4)") {
  const SimpleGraph g = make_simple(FamilySpec::g_rij(2, 3, 4));
  CHECK(g.n() == 11);
  CHECK(g.degree(0) == 6);
  CHECK(g.degree(1) == 7);
  CHECK(diameter(g) == 3);
  const QuotientMatrix q = quotient(FamilySpec::g_rij(2, 3, 4));
  const std::vector<double> row{6, -1, -2, -3, 0};
  for (int c = 0; c < 5; ++c) CHECK(q.q(0, c) == row[c]);
}

TEST_CASE("dandelion has n-2 vertices of eccentricity 3") {
  for (int n = 4; n <= 30; ++n) {
    const SimpleGraph g = make_simple(FamilySpec::dandelion(n));
    CHECK(set_size(high_ecc_set(g)) == n - 2);
    CHECK(diameter(g) == 3);
  }
}

TEST_CASE("predicted spectra match an independent eigensolve") {
  for (int r = 0; r <= 6; ++r)
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; j <= 6; ++j) {
        const auto spec = FamilySpec::g_rij(r, i, j);
        REQUIRE(max_abs_diff(predicted_spectrum(spec), oracle::spectrum(make_simple(spec))) <= 1e-7);
        if (r >= 1) {
          const auto hat = FamilySpec::ghat_rij(r, i, j);
          REQUIRE(max_abs_diff(predicted_spectrum(hat), oracle::spectrum(make_simple(hat))) <= 1e-7);
        }
      }
  for (int n = 4; n <= 40; ++n) {
    const auto spec = FamilySpec::dandelion(n);
    REQUIRE(max_abs_diff(predicted_spectrum(spec), oracle::spectrum(make_simple(spec))) <= 1e-7);
  }
}

TEST_CASE("twin multiplicities of G(2,3,4)") {
  const Spectrum s = laplacian_spectrum(make_simple(FamilySpec::g_rij(2, 3, 4)));
  CHECK(multiplicity_near(s, 1.0, 1e-6) == 5);
  CHECK(multiplicity_near(s, 2.0, 1e-6) == 1);
}

TEST_CASE("twin vertices: eigenvalue 2 has multiplicity at least r-1") {
  for (int r = 2; r <= 6; ++r)
    for (int i = 0; i <= 4; ++i) {
      const Spectrum s = laplacian_spectrum(make_simple(FamilySpec::g_rij(r, i, 2)));
      CHECK(multiplicity_near(s, 2.0, 1e-6) >= r - 1);
    }
}

TEST_CASE("dandelion n=7 spectrum") {
  const auto want = oracle::spectrum(make_simple(FamilySpec::dandelion(7)));
  const auto cubic_roots = real_roots(Polynomial{-7.0, 19.0, -9.0, 1.0}, 0.0, 7.0);
  REQUIRE(cubic_roots.size() == 3);
  std::vector<double> pred{0.0, 1.0, 1.0, 1.0};
  pred.insert(pred.end(), cubic_roots.begin(), cubic_roots.end());
  std::sort(pred.begin(), pred.end());
  CHECK(max_abs_diff(pred, want) <= 1e-9);
  const double x = want[1];
  CHECK(x > 2 - kPhi);
  CHECK(x < 2 - kPhi + 1.0 / 7);
}

TEST_CASE("closed-form lambda2") {
  for (int r = 0; r <= 6; ++r)
    for (int k = 1; k <= 6; ++k) {
      const int n = r + 2 * k + 2;
      const double g = oracle::spectrum(make_simple(FamilySpec::g_rij(r, k, k)))[1];
      CHECK(std::abs(g - f_n(n, k)) <= 1e-8);
      if (r >= 1) {
        const double h = oracle::spectrum(make_simple(FamilySpec::ghat_rij(r, k, k)))[1];
        const double m = n - k - 1;
        CHECK(std::abs(h - (m - std::sqrt(m * m - 4.0 * (n - 2 * k - 2))) / 2) <= 1e-8);
        CHECK(std::abs(family_lambda2_closed(FamilySpec::ghat_rij(r, k, k)) - h) <= 1e-9);
      }
      CHECK(std::abs(family_lambda2_closed(FamilySpec::g_rij(r, k, k)) - g) <= 1e-9);
    }
  CHECK(std::abs(oracle::spectrum(make_simple(FamilySpec::bull(7)))[1] - (7 - std::sqrt(29.0)) / 2) <= 1e-9);
}

TEST_CASE("quotient eigenvalues lie in the full spectrum") {
  for (int r = 0; r <= 6; ++r)
    for (int i = 0; i <= 6; ++i)
      for (int j = 0; j <= 6; ++j) {
        check_quotient_inside(FamilySpec::g_rij(r, i, j));
        if (r >= 1) check_quotient_inside(FamilySpec::ghat_rij(r, i, j));
      }
  for (int n = 5; n <= 10; ++n) {
    check_quotient_inside(FamilySpec::dandelion(n));
    check_quotient_inside(FamilySpec::bull(n));
    check_quotient_inside(FamilySpec::bull(n, FillRule::Random, 3));
    for (int c = 1; c <= n - 3; ++c) {
      check_quotient_inside(FamilySpec::thick1(n, c));
      check_quotient_inside(FamilySpec::thick1(n, c, FillRule::Random, 9));
    }
    check_quotient_inside(FamilySpec::se(n, 0.3));
    check_quotient_inside(FamilySpec::se(n, 0.7, FillRule::Random, 4));
  }
  CHECK_THROWS_AS(quotient(FamilySpec::thick2(8, 3)), DomainError);
}

TEST_CASE("THICK1 and BULL characteristic polynomials") {
  for (int n = 5; n <= 12; ++n) {
    for (double s : {0.1, 0.25, 0.5, 0.8}) {
      const Polynomial p = characteristic_polynomial(thick1_quotient(n, s).q);
      for (double x : {-1.0, 0.3, 1.7, 4.0, 9.0}) CHECK(p(x) == doctest::Approx(x * w_n(n, x, s)).epsilon(1e-9));
    }
    const Polynomial b = characteristic_polynomial(quotient(FamilySpec::bull(n)).q);
    for (double x : {-1.0, 0.3, 1.7, 4.0, 9.0}) {
      const double want = x * (x * x - n * x + n) * (x * x - n * x + n - 2);
      CHECK(b(x) == doctest::Approx(want).epsilon(1e-9));
    }
  }
}

TEST_CASE("complement of THICK1 is THICK2 with the clusters swapped") {
  for (int n = 5; n <= 8; ++n)
    for (int c = 1; c <= n - 3; ++c) {
      const auto one = certificates(all_cluster_fills(FamilySpec::thick1(n, c)), true);
      const auto two = certificates(all_cluster_fills(FamilySpec::thick2(n, n - 2 - c)), false);
      CHECK(one == two);
    }
}

TEST_CASE("complement of a bull is a bull") {
  for (int n = 5; n <= 8; ++n) {
    const auto fills = all_cluster_fills(FamilySpec::bull(n));
    CHECK(certificates(fills, true) == certificates(fills, false));
  }
}

TEST_CASE("SE graphs") {
  const double want = (5 - std::sqrt(15.0)) / 2;
  const WeightedGraph zero = make_weighted(FamilySpec::se(5, 0.5));
  const WeightedGraph one = make_weighted(FamilySpec::se(5, 0.5, FillRule::One));
  CHECK(std::abs(oracle::spectrum(zero)[1] - want) <= 1e-9);
  CHECK(std::abs(oracle::spectrum(one)[1] - want) <= 1e-9);
  for (int n = 5; n <= 12; ++n)
    for (double s = 0.1; s < 0.95; s += 0.2) {
      const auto base = oracle::spectrum(make_weighted(FamilySpec::se(n, s)));
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto spec = FamilySpec::se(n, s, FillRule::Random, seed);
        const auto e = oracle::spectrum(make_weighted(spec));
        CHECK(std::abs(e[1] - base[1]) <= 1e-8);
        CHECK(std::abs(e.back() - base.back()) <= 1e-8);
        const double x = e[1], y = n - e.back();
        CHECK(std::abs(se_residual(n, x, y)) <= 1e-8);
        CHECK(std::abs(se_recover_s(x, y) - s) <= 1e-8);
      }
    }
}

TEST_CASE("text form round trip") {
  for (const char* text : {"G:2,3,4", "Ghat:1,2,2", "dandelion:10", "thick1:n=9,C=3", "thick2:n=9,A=3", "bull:n=7",
                           "se:n=8,s=0.3,fill=random,seed=42"}) {
    const FamilySpec spec = FamilySpec::parse(text);
    CHECK(FamilySpec::parse(spec.to_string()).to_string() == spec.to_string());
  }
  CHECK(FamilySpec::parse("G:0,1,1").vertex_count() == 4);
  CHECK(canonical_form(make_simple(FamilySpec::parse("G:0,1,1"))) == canonical_form(path(4)));
  CHECK(FamilySpec::parse("thick1:n=9,C=3").cluster == 3);
  for (const char* bad : {"G:1,2", "Ghat:0,1,1", "thick1:n=9,C=7", "bull:n=4", "se:n=8,s=1.5", "nope:3", ""})
    CHECK_THROWS(FamilySpec::parse(bad));
}

TEST_CASE("inserting eccentricity-preserving edges") {
  const SimpleGraph g = make_simple(FamilySpec::g_rij(2, 3, 4));
  const double before = lambda2(g);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SimpleGraph h = insert_edges_preserving_ecc(g, seed);
    CHECK(eccentricities(h) == eccentricities(g));
    for (auto [u, v] : g.edges()) CHECK(h.has_edge(u, v));
    CHECK(lambda2(h) >= before - 1e-9);
  }
  // K_n has no non-edges to add.
  CHECK(insert_edges_preserving_ecc(complete(5), 1) == complete(5));
}
