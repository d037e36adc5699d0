#include <cmath>
#include <sstream>

#include "doctest.h"
#include "lapspread/enumerate.hpp"
#include "lapspread/error.hpp"
#include "lapspread/families.hpp"
#include "oracles.hpp"

using namespace lapspread;

namespace {
bool same(const WeightedPoint& a, const WeightedPoint& b) {
  return a.sample == b.sample && a.n == b.n && a.x == b.x && a.y == b.y && a.conj5_margin == b.conj5_margin &&
         a.conj6_margin == b.conj6_margin;
}
}  // namespace

TEST_CASE("samples are reproducible from (n, seed, index)") {
  for (FuzzMode mode : {FuzzMode::Uniform, FuzzMode::SePerturbed}) {
    const WeightedGraph a = fuzz_sample(8, 5, 123, mode), b = fuzz_sample(8, 5, 123, mode);
    const WeightedGraph c = fuzz_sample(8, 5, 124, mode), d = fuzz_sample(8, 6, 123, mode);
    bool differs_c = false, differs_d = false;
    for (int u = 0; u < 8; ++u)
      for (int v = 0; v < 8; ++v) {
        REQUIRE(a.weight(u, v) == b.weight(u, v));
        REQUIRE(a.weight(u, v) >= 0.0);
        REQUIRE(a.weight(u, v) <= 1.0);
        differs_c |= a.weight(u, v) != c.weight(u, v);
        differs_d |= a.weight(u, v) != d.weight(u, v);
      }
    CHECK(differs_c);
    CHECK(differs_d);
  }
}

TEST_CASE("parallel fuzz equals the serial reference") {
  for (FuzzMode mode : {FuzzMode::Uniform, FuzzMode::SePerturbed}) {
    const FuzzResult ref = fuzz_weighted_serial(7, 3000, 11, mode, true);
    for (int threads : {1, 2, 5}) {
      const FuzzResult par = fuzz_weighted(7, 3000, 11, mode, true, threads);
      REQUIRE(par.points.size() == ref.points.size());
      for (std::size_t k = 0; k < ref.points.size(); ++k) REQUIRE(same(par.points[k], ref.points[k]));
      CHECK(same(par.worst_conj5, ref.worst_conj5));
      CHECK(same(par.worst_conj6, ref.worst_conj6));
    }
  }
}

TEST_CASE("worst records are the minima over the kept points") {
  const FuzzResult r = fuzz_weighted(6, 2000, 3, FuzzMode::Uniform, true);
  double m5 = INFINITY, m6 = INFINITY;
  for (const auto& p : r.points) {
    m5 = std::min(m5, p.conj5_margin);
    m6 = std::min(m6, p.conj6_margin);
  }
  CHECK(r.worst_conj5.conj5_margin == m5);
  CHECK(r.worst_conj6.conj6_margin == m6);
  const auto again = evaluate_weighted(fuzz_sample(6, 3, r.worst_conj6.sample, FuzzMode::Uniform), r.worst_conj6.sample);
  CHECK(same(again, r.worst_conj6));
}

TEST_CASE("evaluate_weighted matches an independent eigensolve") {
  for (std::uint64_t k = 0; k < 50; ++k) {
    const WeightedGraph g = fuzz_sample(8, 1, k, FuzzMode::Uniform);
    const WeightedPoint p = evaluate_weighted(g, k);
    const auto e = oracle::spectrum(g);
    const auto ec = oracle::spectrum(complement(g));
    CHECK(std::abs(p.x - e[1]) <= 1e-9);
    CHECK(std::abs(p.y - ec[1]) <= 1e-8);
    CHECK(p.conj5_margin == doctest::Approx(p.x + p.y - 1));
    CHECK(p.conj6_margin == doctest::Approx(p.x + p.y - 2 * p.x * p.y / 8 - 1));
  }
}

TEST_CASE("SE graphs sit on the conjecture 6 boundary") {
  for (int n = 5; n <= 12; ++n)
    for (double s : {0.1, 0.4, 0.75})
      for (FillRule fill : {FillRule::Zero, FillRule::One, FillRule::Random}) {
        const WeightedPoint p = evaluate_weighted(make_weighted(FamilySpec::se(n, s, fill, 17)), 0);
        CHECK(std::abs(p.conj6_margin) <= 1e-8);
      }
}

TEST_CASE("all-one-half weighting is self-complementary") {
  for (int n = 3; n <= 10; ++n) {
    WeightedGraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) g.set_weight(u, v, 0.5);
    const WeightedPoint p = evaluate_weighted(g, 0);
    CHECK(std::abs(p.x - p.y) <= 1e-9);
    CHECK(std::abs(p.x - n / 2.0) <= 1e-9);
    CHECK(p.conj5_margin == doctest::Approx(2 * p.x - 1));
  }
}

TEST_CASE("no conjecture 5 violation in a small uniform run") {
  const FuzzResult r = fuzz_weighted(8, 20000, 1, FuzzMode::Uniform);
  CHECK(r.worst_conj5.conj5_margin >= -1e-7);
  CHECK(r.worst_conj6.conj6_margin >= -1e-7);
}

TEST_CASE("mode names and CSV") {
  CHECK(parse_fuzz_mode("uniform") == FuzzMode::Uniform);
  CHECK(parse_fuzz_mode("se-perturbed") == FuzzMode::SePerturbed);
  CHECK(fuzz_mode_name(FuzzMode::SePerturbed) == "se-perturbed");
  CHECK_THROWS_AS(parse_fuzz_mode("gaussian"), ParseError);
  std::ostringstream out;
  write_weighted_csv_header(out);
  write_weighted_csv_row(out, evaluate_weighted(fuzz_sample(5, 1, 0, FuzzMode::Uniform), 0));
  CHECK(out.str().rfind("sample,n,x,y,conj5_margin,conj6_margin\n0,5,", 0) == 0);
}
