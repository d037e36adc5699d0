#include <omp.h>

#include <algorithm>
#include <ostream>
#include <string>

#include "lapspread/enumerate.hpp"
#include "lapspread/error.hpp"
#include "lapspread/families.hpp"
#include "lapspread/rng.hpp"
#include "lapspread/spectra.hpp"

namespace lapspread {

std::string_view fuzz_mode_name(FuzzMode m) { return m == FuzzMode::Uniform ? "uniform" : "se-perturbed"; }

FuzzMode parse_fuzz_mode(std::string_view text) {
  if (text == "uniform") return FuzzMode::Uniform;
  if (text == "se-perturbed") return FuzzMode::SePerturbed;
  throw ParseError("fuzz: unknown mode '" + std::string(text) + "'");
}

WeightedGraph fuzz_sample(int n, std::uint64_t seed, std::uint64_t index, FuzzMode mode) {
  Rng rng = Rng::stream(seed, index);
  if (mode == FuzzMode::Uniform) {
    WeightedGraph g(n);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) g.set_weight(u, v, rng.uniform());
    return g;
  }
  // An SE graph with random inner weights, then every weight nudged by up
  // to 0.05 and clipped back into [0, 1].
  const double s = 0.005 + 0.99 * rng.uniform();
  WeightedGraph g = make_weighted(FamilySpec::se(n, s, FillRule::Random, rng.next_u64()));
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) {
      const double w = g.weight(u, v) + 0.1 * (rng.uniform() - 0.5);
      g.set_weight(u, v, std::clamp(w, 0.0, 1.0));
    }
  return g;
}

WeightedPoint evaluate_weighted(const WeightedGraph& g, std::uint64_t sample) {
  // The complement (weights 1-w) has lambda2 = n - lambda_n, so one solve
  // gives both coordinates.
  const Spectrum s = laplacian_spectrum(g);
  const double n = g.n();
  WeightedPoint p;
  p.sample = sample;
  p.n = g.n();
  p.x = s.eigs[1];
  p.y = n - s.back();
  p.conj5_margin = p.x + p.y - 1.0;
  p.conj6_margin = p.x + p.y - 2.0 * p.x * p.y / n - 1.0;
  return p;
}

namespace {

void validate_fuzz(int n) {
  if (n < 2 || n > kMaxVertices) throw DomainError("fuzz: n = " + std::to_string(n) + " outside [2, 64]");
}

// Smaller margin wins; ties go to the earlier sample.
bool worse(double m, std::uint64_t i, double best_m, std::uint64_t best_i) {
  return m < best_m || (m == best_m && i < best_i);
}

struct Worst {
  WeightedPoint c5, c6;
  bool any = false;

  void offer(const WeightedPoint& p) {
    if (!any || worse(p.conj5_margin, p.sample, c5.conj5_margin, c5.sample)) c5 = p;
    if (!any || worse(p.conj6_margin, p.sample, c6.conj6_margin, c6.sample)) c6 = p;
    any = true;
  }
  void merge(const Worst& o) {
    if (!o.any) return;
    offer(o.c5);
    offer(o.c6);
  }
};

FuzzResult finish(int n, std::uint64_t samples, std::uint64_t seed, FuzzMode mode, const Worst& w) {
  FuzzResult r;
  r.n = n;
  r.samples = samples;
  r.seed = seed;
  r.mode = mode;
  r.worst_conj5 = w.c5;
  r.worst_conj6 = w.c6;
  return r;
}

}  // namespace

FuzzResult fuzz_weighted(int n, std::uint64_t samples, std::uint64_t seed, FuzzMode mode, bool keep_points,
                         int threads) {
  validate_fuzz(n);
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  std::vector<Worst> local(static_cast<std::size_t>(workers));
  std::vector<WeightedPoint> points(keep_points ? samples : 0);
  const auto count = static_cast<std::int64_t>(samples);

#pragma omp parallel num_threads(workers)
  {
    Worst& mine = local[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      const auto idx = static_cast<std::uint64_t>(k);
      const WeightedPoint p = evaluate_weighted(fuzz_sample(n, seed, idx, mode), idx);
      mine.offer(p);
      if (keep_points) points[idx] = p;
    }
  }
  Worst all;
  for (const auto& w : local) all.merge(w);
  FuzzResult r = finish(n, samples, seed, mode, all);
  r.points = std::move(points);
  return r;
}

FuzzResult fuzz_weighted_serial(int n, std::uint64_t samples, std::uint64_t seed, FuzzMode mode, bool keep_points) {
  validate_fuzz(n);
  Worst all;
  std::vector<WeightedPoint> points;
  for (std::uint64_t k = 0; k < samples; ++k) {
    const WeightedPoint p = evaluate_weighted(fuzz_sample(n, seed, k, mode), k);
    all.offer(p);
    if (keep_points) points.push_back(p);
  }
  FuzzResult r = finish(n, samples, seed, mode, all);
  r.points = std::move(points);
  return r;
}

void write_weighted_csv_header(std::ostream& out) { out << "sample,n,x,y,conj5_margin,conj6_margin\n"; }

void write_weighted_csv_row(std::ostream& out, const WeightedPoint& p) {
  out << p.sample << ',' << p.n << ',' << format_real(p.x) << ',' << format_real(p.y) << ','
      << format_real(p.conj5_margin) << ',' << format_real(p.conj6_margin) << '\n';
}

}  // namespace lapspread
