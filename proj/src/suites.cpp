#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "lapspread/bounds.hpp"
#include "lapspread/error.hpp"
#include "lapspread/families.hpp"
#include "lapspread/polynomial.hpp"
#include "lapspread/rng.hpp"
#include "lapspread/spectra.hpp"
#include "lapspread/tolerances.hpp"
#include "suite_support.hpp"

namespace lapspread::detail {

namespace {

constexpr double kPhi = std::numbers::phi;
const double kTwoMinusRoot2 = 2.0 - std::numbers::sqrt2;

std::string kv(std::string_view key, double v) { return std::string(key) + "=" + format_real(v); }

std::string grid_point(int n, std::string_view key, double v) {
  return "n=" + std::to_string(n) + "," + kv(key, v);
}

CheckReport start(std::string_view id, std::initializer_list<std::pair<const std::string, double>> tols) {
  CheckReport r;
  r.suite_id = std::string(id);
  r.tolerances = tols;
  return r;
}

bool both_diam3(const PointRecord& p) { return p.diam == 3 && p.diam_c == 3; }

double max_xy(const PointRecord& p) { return std::max(p.x, p.y); }

/// Sum x + y for the dandelion on n vertices, from eigensolves.
double dandelion_sum(int n) {
  const SimpleGraph d = make_simple(FamilySpec::dandelion(n));
  return lambda2(d) + lambda2(complement(d));
}

// Certificates of every cluster-family graph on n vertices (all splits,
// all intra-cluster fills). Conjecture emp says tight points come only
// from these.
const std::set<std::uint64_t>& cluster_family_certificates(int n) {
  static std::map<int, std::set<std::uint64_t>> cache;
  auto [it, fresh] = cache.try_emplace(n);
  if (!fresh || n < 4) return it->second;
  auto add_all = [&](const FamilySpec& spec) {
    for (const SimpleGraph& g : all_cluster_fills(spec)) it->second.insert(canonical_form(g).bits);
  };
  for (int c = 1; c <= n - 3; ++c) {
    add_all(FamilySpec::thick1(n, c));
    add_all(FamilySpec::thick2(n, c));
  }
  if (n >= 5) add_all(FamilySpec::bull(n));
  return it->second;
}

bool in_cluster_family(const SimpleGraph& g) {
  return cluster_family_certificates(g.n()).contains(canonical_form(g).bits);
}

// A per-graph rule shared by the census sweep and witness replay.
struct GraphRule {
  double tol = tol::kMargin;
  double band = tol::kMargin;
  std::function<std::optional<double>(const PointRecord&, const SimpleGraph&)> margin;
  /// Extra requirement on TIGHT cases.
  std::function<bool(const SimpleGraph&)> tight_ok;
};

int eigen_count_open(const Spectrum& s, double lo, double hi) {
  return static_cast<int>(std::count_if(s.eigs.begin(), s.eigs.end(), [&](double v) {
    return v > lo + tol::kEigen && v < hi - tol::kEigen;
  }));
}

GraphRule graph_rule(std::string_view id) {
  GraphRule r;
  if (id == "conjecture1") {
    r.margin = [](const PointRecord& p, const SimpleGraph&) { return std::optional(p.conj1_margin()); };
  } else if (id == "prop_comp") {
    // Integer margin; tight means exactly n.
    r.tol = 0.0;
    r.band = 0.5;
    r.margin = [](const PointRecord& p, const SimpleGraph&) {
      return std::optional<double>(p.n - p.dsize - p.dsize_c);
    };
  } else if (id == "emp") {
    // "Strictly below 1" up to solver accuracy: P3 has x = 1 exactly but
    // can come back as 1 - 2e-16, which would put it on the curve.
    r.margin = [](const PointRecord& p, const SimpleGraph&) -> std::optional<double> {
      if (p.x < 1.0 - tol::kEigen && p.y < 1.0 - tol::kEigen) return p.green_residual;
      return std::nullopt;
    };
    r.tight_ok = in_cluster_family;
  } else if (id == "one_root") {
    r.tol = 0.0;
    r.band = -1.0;
    r.margin = [](const PointRecord& p, const SimpleGraph& g) -> std::optional<double> {
      if (!both_diam3(p)) return std::nullopt;
      const Spectrum s = laplacian_spectrum(g);
      const int low = eigen_count_open(s, 0.0, 1.0);
      const int high = eigen_count_open(s, p.n - 1.0, p.n);
      return 1.0 - std::max(low, high);
    };
  } else if (id == "max_floor") {
    r.tol = tol::kEigen;
    r.band = tol::kEigen;
    r.margin = [](const PointRecord& p, const SimpleGraph&) { return std::optional(max_xy(p) - kTwoMinusRoot2); };
  } else if (id == "max_bound") {
    r.margin = [](const PointRecord& p, const SimpleGraph&) {
      return std::optional(max_xy(p) - maxbound_closed(p.n));
    };
  } else if (id == "dandelion_min") {
    r.margin = [](const PointRecord& p, const SimpleGraph&) -> std::optional<double> {
      if (!both_diam3(p) || p.n < 4) return std::nullopt;
      return p.x + p.y - dandelion_sum(p.n);
    };
  } else {
    throw ParseError("no graph rule for suite '" + std::string(id) + "'");
  }
  return r;
}

void apply_rule(Tally& t, const GraphRule& rule, const PointRecord& p, const SimpleGraph& g) {
  const auto m = rule.margin(p, g);
  if (!m) return;
  const std::string w = p.graph6;
  auto witness = [w] { return w; };
  t.check_tight(*m, rule.tol, rule.band, witness);
  if (rule.tight_ok && std::abs(*m) <= rule.band) t.require(rule.tight_ok(g), witness);
}

/// Runs `rule` over the census for n in [n_min, n_max].
void sweep_census(CheckReport& r, Tally& t, const GraphRule& rule, const SuiteParams& p) {
  std::uint64_t classes = 0;
  for (int n = std::max(p.n_min, 2); n <= p.n_max; ++n) {
    const Census& c = census(n, p.threads);
    classes += c.points.size();
    for (std::size_t k = 0; k < c.points.size(); ++k) apply_rule(t, rule, c.points[k], c.classes.graph(k));
  }
  r.counts["classes"] = classes;
}

CheckReport census_suite(std::string_view id, const SuiteParams& p) {
  Stopwatch w;
  const GraphRule rule = graph_rule(id);
  CheckReport r = start(id, {{"margin", rule.tol}, {"tight_band", rule.band}});
  Tally t(r);
  sweep_census(r, t, rule, p);
  finish(r, t, w);
  return r;
}

std::optional<std::size_t> find_class(const Census& c, const SimpleGraph& g) {
  const std::uint64_t bits = canonical_form(g).bits;
  auto it = std::lower_bound(c.classes.codes.begin(), c.classes.codes.end(), bits);
  if (it == c.classes.codes.end() || *it != bits) return std::nullopt;
  return static_cast<std::size_t>(it - c.classes.codes.begin());
}

/// Max |a_k - b_k| over two ascending lists; infinity on a size mismatch.
double multiset_distance(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double d = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

auto spec_witness(const FamilySpec& s) {
  return [s] { return s.to_string(); };
}

}  // namespace

CheckReport replay_graph_suite(std::string_view id, std::string_view graph6) {
  Stopwatch w;
  const GraphRule rule = graph_rule(id);
  CheckReport r = start(id, {{"margin", rule.tol}, {"tight_band", rule.band}});
  Tally t(r);
  const SimpleGraph g = parse_graph6(graph6);
  apply_rule(t, rule, evaluate_point(g), g);
  if (r.cases_run == 0) r.notes.push_back("witness outside the suite's domain");
  finish(r, t, w);
  return r;
}

CheckReport suite_conjecture1(const SuiteParams& p) {
  Stopwatch w;
  const GraphRule rule = graph_rule("conjecture1");
  CheckReport r = start("conjecture1", {{"margin", tol::kMargin}, {"tight_band", tol::kMargin}});
  Tally t(r);
  sweep_census(r, t, rule, p);

  // The weak bound never exceeds f_n, so it must hold too.
  for (int n = std::max(p.n_min, 2); n <= p.n_max; ++n)
    for (const PointRecord& q : census(n, p.threads).points) {
      const std::string g6 = q.graph6;
      t.check(q.x - q.weak_bound, tol::kMargin, [g6] { return g6; });
    }

  // Equality at every G(r,k,k) that fits in the census.
  std::uint64_t equalities = 0;
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) {
    const Census& c = census(n, p.threads);
    for (int k = 1; 2 * k + 2 <= n; ++k) {
      const FamilySpec spec = FamilySpec::g_rij(n - 2 * k - 2, k, k);
      const auto idx = find_class(c, make_simple(spec));
      if (!t.require(idx.has_value(), spec_witness(spec))) continue;
      t.check(-std::abs(c.points[*idx].conj1_margin()), tol::kMargin, spec_witness(spec));
      ++equalities;
    }
  }
  r.counts["grkk_equalities"] = equalities;
  finish(r, t, w);
  return r;
}

CheckReport suite_prop_comp(const SuiteParams& p) { return census_suite("prop_comp", p); }

CheckReport suite_emp(const SuiteParams& p) {
  CheckReport r = census_suite("emp", p);
  r.notes.push_back("tight cases must be canonically equal to a thick-stemmed dandelion or generalized bull");
  return r;
}

CheckReport suite_one_root(const SuiteParams& p) { return census_suite("one_root", p); }

CheckReport suite_max_floor(const SuiteParams& p) {
  Stopwatch w;
  const GraphRule rule = graph_rule("max_floor");
  CheckReport r = start("max_floor", {{"margin", rule.tol}});
  Tally t(r);
  sweep_census(r, t, rule, p);
  if (p.n_min <= 4 && p.n_max >= 4) {
    // The floor is attained, and by P4.
    const SimpleGraph p4 = make_simple(FamilySpec::g_rij(0, 1, 1));
    const std::string want = emit_graph6(certificate_graph(canonical_form(p4)));
    double best = std::numeric_limits<double>::infinity();
    std::string arg;
    for (int n = std::max(p.n_min, 2); n <= p.n_max; ++n)
      for (const PointRecord& q : census(n, p.threads).points)
        if (max_xy(q) < best) best = max_xy(q), arg = q.graph6;
    t.check(-std::abs(best - kTwoMinusRoot2), tol::kEigen, [arg] { return arg; });
    t.require(arg == want, [arg] { return arg; });
  }
  finish(r, t, w);
  return r;
}

CheckReport suite_max_bound(const SuiteParams& p) { return census_suite("max_bound", p); }

CheckReport suite_dandelion_min(const SuiteParams& p) {
  Stopwatch w;
  const GraphRule rule = graph_rule("dandelion_min");
  CheckReport r = start("dandelion_min", {{"margin", rule.tol}, {"tight_band", rule.band}});
  Tally t(r);
  sweep_census(r, t, rule, p);
  // The dandelion itself must be in the both-diameter-3 census.
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) {
    const FamilySpec spec = FamilySpec::dandelion(n);
    const auto idx = find_class(census(n, p.threads), make_simple(spec));
    t.require(idx && both_diam3(census(n, p.threads).points[*idx]), spec_witness(spec));
  }
  finish(r, t, w);
  return r;
}

CheckReport suite_diam3_minimizer(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("diam3_minimizer", {{"margin", tol::kMargin}, {"tight_band", tol::kMargin}});
  Tally t(r);
  // Among diameter-3 graphs with |D| = l, G(n-l-2, floor(l/2), ceil(l/2))
  // is expected to have the smallest lambda2. Observed, not assumed.
  std::uint64_t groups = 0;
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) {
    const Census& c = census(n, p.threads);
    for (int l = 2; l <= n - 2; ++l) {
      const FamilySpec spec = FamilySpec::g_rij(n - l - 2, l / 2, l - l / 2);
      const auto idx = find_class(c, make_simple(spec));
      if (!t.require(idx.has_value(), spec_witness(spec))) continue;
      const PointRecord& fam = c.points[*idx];
      if (!t.require(fam.diam == 3 && fam.dsize == l, spec_witness(spec))) continue;
      ++groups;
      for (const PointRecord& q : c.points) {
        if (q.diam != 3 || q.dsize != l) continue;
        const std::string g6 = q.graph6;
        t.check_tight(q.x - fam.x, tol::kMargin, tol::kMargin, [g6] { return g6; });
      }
    }
  }
  r.counts["groups"] = groups;
  finish(r, t, w);
  return r;
}

CheckReport suite_thm_implications(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("thm_implications", {{"identity", tol::kIdentity}, {"g_floor", 1e-10}, {"endpoint", 1e-12}});
  Tally t(r);
  constexpr int kSteps = 400;
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) {
    const double nd = n, bal = balanced_max_bound(nd);
    for (int s = 0; s <= kSteps; ++s) {
      const double k = nd / 2 * s / kSteps;
      const double kc = std::max(0.0, (nd - 2 * k) / 2);
      const double fk = f_n(nd, k), fc = f_n(nd, kc), g = g_n(nd, k);
      auto wit = [n, k] { return grid_point(n, "k", k); };
      t.check(-std::abs(fk + fc - 1 - g), tol::kIdentity, wit);
      t.check(g, 1e-10, wit);
      // f_n is decreasing, so max{f(k), f((n-2k)/2)} is smallest at k = n/4.
      t.check(std::max(fk, fc) - bal, 1e-12, wit);
    }
    auto wit = [n] { return "n=" + std::to_string(n); };
    t.check(-std::abs(g_n(nd, 0)), 1e-12, wit);
    t.check(-std::abs(g_n(nd, nd / 2)), 1e-12, wit);
    t.check(-std::abs(f_n(nd, nd / 4) - bal), tol::kIdentity, wit);
    if (n < p.n_max) t.check_positive(balanced_max_bound(nd + 1) - bal, wit);

    const Diam3Strengthening d3 = diam3_strengthening(nd);
    t.check(d3.exact - d3.bound, 1e-12, wit);
    if (n > 4) t.check_positive(d3.bound - 1.0, wit);
  }
  if (p.n_min <= 4) t.check(-std::abs(balanced_max_bound(4) - kTwoMinusRoot2), 1e-12, [] { return std::string("n=4"); });
  finish(r, t, w);
  return r;
}

CheckReport suite_family_charpoly(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("family_charpoly", {{"spectrum", tol::kMargin}, {"cluster", tol::kCluster}});
  Tally t(r);
  constexpr int kMax = 6;
  auto compare = [&](const FamilySpec& spec) {
    const Spectrum s = laplacian_spectrum(make_simple(spec));
    t.check(-multiset_distance(predicted_spectrum(spec), s.eigs), tol::kMargin, spec_witness(spec));
    if (spec.kind != FamilyKind::Dandelion) {
      t.require(multiplicity_near(s, 2.0, tol::kCluster) >= spec.r - 1, spec_witness(spec));
      t.require(multiplicity_near(s, 1.0, tol::kCluster) >= spec.i + spec.j - 2, spec_witness(spec));
    } else {
      t.require(multiplicity_near(s, 1.0, tol::kCluster) >= spec.n - 4, spec_witness(spec));
    }
  };
  for (int rr = 0; rr <= kMax; ++rr)
    for (int i = 0; i <= kMax; ++i)
      for (int j = 0; j <= kMax; ++j) {
        compare(FamilySpec::g_rij(rr, i, j));
        if (rr >= 1) compare(FamilySpec::ghat_rij(rr, i, j));
      }
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) compare(FamilySpec::dandelion(n));
  finish(r, t, w);
  return r;
}

CheckReport suite_family_closed(const SuiteParams&) {
  Stopwatch w;
  CheckReport r = start("family_closed", {{"closed_form", tol::kIdentity}, {"margin", tol::kMargin}});
  Tally t(r);
  constexpr int kMax = 6;
  for (int rr = 0; rr <= kMax; ++rr)
    for (int k = 1; k <= kMax; ++k) {
      const FamilySpec g = FamilySpec::g_rij(rr, k, k);
      const SimpleGraph gg = make_simple(g);
      const double n = g.vertex_count();
      const double x = lambda2(gg);
      t.check(-std::abs(x - f_n(n, k)), tol::kIdentity, spec_witness(g));
      t.check(-std::abs(x - family_lambda2_closed(g)), tol::kIdentity, spec_witness(g));
      t.require(set_size(high_ecc_set(gg)) == 2 * k, spec_witness(g));
      if (rr == 0) continue;

      const FamilySpec h = FamilySpec::ghat_rij(rr, k, k);
      const SimpleGraph hg = make_simple(h);
      const double xh = lambda2(hg);
      const double b = n - k - 1;
      t.check(-std::abs(xh - (b - std::sqrt(b * b - 4 * (n - 2 * k - 2))) / 2), tol::kIdentity, spec_witness(h));
      t.check(-std::abs(xh - family_lambda2_closed(h)), tol::kIdentity, spec_witness(h));
      // |D| = 2k + 2 here, so the conjectured bound is f_n(k + 1).
      t.require(set_size(high_ecc_set(hg)) == 2 * k + 2, spec_witness(h));
      t.check(xh - f_n(n, k + 1), tol::kMargin, spec_witness(h));
    }
  finish(r, t, w);
  return r;
}

CheckReport suite_dandelion_intervals(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("dandelion_intervals", {{"identity", tol::kIdentity}});
  Tally t(r);
  for (int n = std::max(p.n_min, 5); n <= p.n_max; ++n) {
    const Polynomial pn = dandelion_cubic(n);
    const double nd = n, inv = 1.0 / nd;
    const FamilySpec spec = FamilySpec::dandelion(n);
    auto wit = spec_witness(spec);
    t.check(-std::abs(pn(2 - kPhi) + 1), tol::kIdentity, wit);
    t.check(-std::abs(pn(nd - 1) + 1), tol::kIdentity, wit);
    t.check_positive(pn(2 - kPhi + inv), wit);
    t.check_positive(pn(nd - 1 + inv), wit);

    const SimpleGraph g = make_simple(spec);
    const Spectrum s = laplacian_spectrum(g);
    const double x = s.eigs[1], top = s.back(), y = lambda2(complement(g));
    t.check_positive(std::min(x - (2 - kPhi), (2 - kPhi + inv) - x), wit);
    t.check_positive(std::min(top - (nd - 1), (nd - 1 + inv) - top), wit);
    t.check_positive(std::min(x + y - (3 - kPhi - inv), (3 - kPhi + inv) - (x + y)), wit);
  }
  // A few spot values of the cubic.
  if (p.n_min <= 5) {
    t.check(-std::abs(dandelion_cubic(5)(4.2) - 0.208), 1e-9, [] { return std::string("p_5(4.2)"); });
    t.check(-std::abs(dandelion_cubic(4)(3.25) + 0.546875), 1e-9, [] { return std::string("p_4(3.25)"); });
    t.check(-std::abs(dandelion_cubic(4)(2 - kPhi + 0.25) - (36 * kPhi - 47) / 64), 1e-12,
            [] { return std::string("p_4(2-phi+1/4)"); });
  }
  finish(r, t, w);
  return r;
}

CheckReport suite_greenpoints(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("greenpoints", {{"green", tol::kMargin}, {"closed_form", tol::kEigen}, {"sign", 0.0}});
  Tally t(r);
  constexpr std::size_t kExhaustiveFills = 64;
  std::uint64_t graphs = 0;

  auto fills_of = [&](const FamilySpec& base) {
    std::vector<std::pair<FamilySpec, SimpleGraph>> out;
    std::vector<SimpleGraph> all;
    try {
      all = all_cluster_fills(base, kExhaustiveFills);
    } catch (const DomainError&) {
    }
    if (!all.empty()) {
      for (auto& g : all) out.emplace_back(base, std::move(g));
      return out;
    }
    for (FillRule f : {FillRule::Zero, FillRule::One}) {
      FamilySpec s = base;
      s.fill = f;
      out.emplace_back(s, make_simple(s));
    }
    for (int k = 0; k < p.fills; ++k) {
      FamilySpec s = base;
      s.fill = FillRule::Random;
      s.seed = p.seed + static_cast<std::uint64_t>(k);
      out.emplace_back(s, make_simple(s));
    }
    return out;
  };

  for (int n = std::max(p.n_min, 5); n <= p.n_max; ++n) {
    const double nd = n;
    const double mb = maxbound_closed(nd);

    for (int c = 1; c <= n - 3; ++c)
      for (const FamilySpec& base : {FamilySpec::thick1(n, c), FamilySpec::thick2(n, c)}) {
        const double s = base.cluster_fraction();
        for (const auto& [spec, g] : fills_of(base)) {
          ++graphs;
          const double x = lambda2(g), y = lambda2(complement(g));
          auto wit = spec_witness(spec);
          t.check(-std::abs(green_residual(nd, x, y)), tol::kMargin, wit);
          t.check(-std::abs(r_n(nd, x) + r_n(nd, y) - 1), tol::kMargin, wit);
          t.check(-std::abs(r_n(nd, x) - s), tol::kMargin, wit);
          if (n % 2 == 0 && 2 * c == n - 2) t.check(-std::abs(std::max(x, y) - mb), tol::kEigen, wit);
        }
        if (base.kind == FamilyKind::Thick1) {
          // Quotient eigenvalues are Laplacian eigenvalues.
          const Spectrum full = laplacian_spectrum(make_simple(base));
          const auto roots = real_roots(characteristic_polynomial(quotient(base).q), -0.5, nd + 0.5);
          t.require(roots.size() == 4, spec_witness(base));
          for (double q : roots)
            t.require(multiplicity_near(full, q, tol::kMargin) >= 1, spec_witness(base));
        }
      }

    for (const auto& [spec, g] : fills_of(FamilySpec::bull(n))) {
      ++graphs;
      const double x = lambda2(g), y = lambda2(complement(g));
      auto wit = spec_witness(spec);
      t.check(-std::abs(green_residual(nd, x, y)), tol::kMargin, wit);
      t.check(-std::abs(x - mb), tol::kEigen, wit);
      t.check(-std::abs(y - mb), tol::kEigen, wit);
    }
    auto nwit = [n] { return "n=" + std::to_string(n); };
    t.check_positive(std::min(mb - (nd - 3) / (nd - 2), (nd - 2) / (nd - 1) - mb), nwit);
    t.check(-std::abs(family_lambda2_closed(FamilySpec::bull(n)) - mb), tol::kEigen, nwit);

    // Sign table and symmetry of w_n, and the six points r_n passes through.
    for (int k = 1; k < 100; ++k) {
      const double s = k / 100.0;
      auto wit = [n, s] { return grid_point(n, "s", s); };
      t.check_positive(-w_n(nd, 0, s), wit);
      t.check_positive(w_n(nd, 1, s), wit);
      t.check_positive(-w_n(nd, nd - 1, s), wit);
      t.check_positive(w_n(nd, nd, s), wit);
      const double scale = nd * nd * nd;
      t.check(-std::abs(w_n(nd, 0, s) - nd * s * (2 - nd)), 1e-12 * scale, wit);
      t.check(-std::abs(w_n(nd, 1, s) - (nd - 2) * (1 - s)), 1e-12 * scale, wit);
      t.check(-std::abs(w_n(nd, nd - 1, s) + (nd - 2) * s), 1e-12 * scale, wit);
      t.check(-std::abs(w_n(nd, nd, s) - nd * (nd - 2) * (1 - s)), 1e-12 * scale, wit);
      const double x = nd * k / 100.0;
      t.check(-std::abs(w_n(nd, nd - x, 1 - s) + w_n(nd, x, s)), 1e-12 * scale, wit);
    }
    const std::pair<double, double> through[] = {{0, 0}, {1, 1}, {2, 0}, {nd - 2, 1}, {nd - 1, 0}, {nd, 1}};
    for (auto [x, v] : through) t.check(-std::abs(r_n(nd, x) - v), 1e-12, [n, x] { return grid_point(n, "x", x); });
  }
  r.counts["family_graphs"] = graphs;
  finish(r, t, w);
  return r;
}

CheckReport suite_se(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("se", {{"identity", tol::kIdentity}, {"cluster", tol::kCluster}});
  Tally t(r);
  for (int n = std::max(p.n_min, 3); n <= p.n_max; ++n) {
    const double nd = n;
    for (int k = 1; k <= 9; ++k) {
      const double s = k / 10.0;
      const FamilySpec zero = FamilySpec::se(n, s);
      const Spectrum s0 = laplacian_spectrum(make_weighted(zero));

      // z (z-1)^(n-3) (z^2 - (2s+n-1) z + ns)
      const double b = 2 * s + nd - 1, disc = std::sqrt(b * b - 4 * nd * s);
      std::vector<double> predicted{0.0};
      predicted.insert(predicted.end(), n - 3, 1.0);
      predicted.push_back((b - disc) / 2);
      predicted.push_back((b + disc) / 2);
      std::sort(predicted.begin(), predicted.end());
      t.check(-multiset_distance(predicted, s0.eigs), tol::kIdentity, spec_witness(zero));
      t.require(multiplicity_near(s0, 1.0, tol::kCluster) == n - 3, spec_witness(zero));

      const double x0 = s0.eigs[1], top0 = s0.back();
      auto one = [&](const FamilySpec& spec) {
        const Spectrum sp = laplacian_spectrum(make_weighted(spec));
        const double x = sp.eigs[1], y = nd - sp.back();
        auto wit = spec_witness(spec);
        t.check(-std::abs(se_residual(nd, x, y)), tol::kIdentity, wit);
        t.check(-std::abs(se_recover_s(x, y) - s), tol::kIdentity, wit);
        t.check(-std::abs(se_recover_t(x, y) - (1 - s)), tol::kIdentity, wit);
        t.check(-std::abs(x - x0), tol::kIdentity, wit);
        t.check(-std::abs(sp.back() - top0), tol::kIdentity, wit);
      };
      one(zero);
      one(FamilySpec::se(n, s, FillRule::One));
      for (int f = 0; f < p.fills; ++f)
        one(FamilySpec::se(n, s, FillRule::Random, p.seed + static_cast<std::uint64_t>(f)));
    }
  }
  finish(r, t, w);
  return r;
}

CheckReport suite_insert_edges(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("insert_edges", {{"monotone", tol::kEigen}, {"margin", tol::kMargin}});
  Tally t(r);
  constexpr int kMax = 3;
  std::vector<FamilySpec> specs{FamilySpec::g_rij(2, 3, 4)};
  for (int rr = 0; rr <= kMax; ++rr)
    for (int i = 1; i <= kMax; ++i)
      for (int j = 1; j <= kMax; ++j) {
        specs.push_back(FamilySpec::g_rij(rr, i, j));
        if (rr >= 1) specs.push_back(FamilySpec::ghat_rij(rr, i, j));
      }
  for (const FamilySpec& spec : specs) {
    const SimpleGraph g = make_simple(spec);
    const double x = lambda2(g);
    const std::vector<int> ecc = eccentricities(g);
    for (int k = 0; k < p.fills; ++k) {
      const std::uint64_t seed = p.seed + static_cast<std::uint64_t>(k);
      const SimpleGraph h = insert_edges_preserving_ecc(g, seed);
      const std::string name = spec.to_string() + ",insert_seed=" + std::to_string(seed);
      auto wit = [name] { return name; };
      t.require(eccentricities(h) == ecc, wit);
      const double xh = lambda2(h);
      t.check(xh - x, tol::kEigen, wit);
      t.check(xh - f_n(h.n(), set_size(high_ecc_set(h)) / 2.0), tol::kMargin, wit);
    }
  }
  finish(r, t, w);
  return r;
}

CheckReport suite_appendix(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("appendix", {{"grid", 1e-10}, {"endpoint", 1e-12}, {"second_derivative", 1e-6}});
  Tally t(r);
  constexpr double h = 1e-3;
  std::vector<double> f, g;
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) {
    const double nd = n;
    const auto steps = static_cast<std::size_t>(std::llround(nd / 2 / h));
    f.resize(steps + 1);
    g.resize(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) {
      const double kk = std::min(nd / 2, k * h);
      f[k] = f_n(nd, kk);
      g[k] = g_n(nd, kk);
    }
    auto at = [n, h](std::size_t k) { return [n, k, h] { return grid_point(n, "k", k * h); }; };
    for (std::size_t k = 0; k < steps; ++k) t.check(f[k] - f[k + 1], 1e-10, at(k));
    for (std::size_t k = 1; k < steps; ++k) t.check(2 * g[k] - g[k - 1] - g[k + 1], 1e-10, at(k));
    // The printed second derivative: negative, and in agreement with a
    // central difference.
    for (std::size_t k = 1; k < steps; k += 100) {
      const double d2 = g_n_second_derivative(nd, k * h);
      t.check_positive(-d2, at(k));
      t.check(-std::abs((g[k - 1] - 2 * g[k] + g[k + 1]) / (h * h) - d2), 1e-6, at(k));
    }
    auto wit = [n] { return "n=" + std::to_string(n); };
    t.check(-std::abs(g_n(nd, 0)), 1e-12, wit);
    t.check(-std::abs(g_n(nd, nd / 2)), 1e-12, wit);
    t.check(-std::abs(f_n(nd, 0) - 1), 1e-12, wit);
    t.check(-std::abs(f_n(nd, nd / 2)), 1e-12, wit);
  }
  finish(r, t, w);
  return r;
}

namespace {

std::string fuzz_witness(int n, std::uint64_t seed, FuzzMode mode, std::uint64_t sample) {
  return "n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ",mode=" + std::string(fuzz_mode_name(mode)) +
         ",sample=" + std::to_string(sample);
}

}  // namespace

CheckReport suite_fuzz(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("fuzz", {{"margin", tol::kMargin}});
  Tally t(r);
  for (int n = p.n_min; n <= p.n_max; ++n) {
    const FuzzResult f = fuzz_weighted(n, p.samples, p.seed, p.fuzz_mode, false, p.threads);
    const auto c5 = f.worst_conj5, c6 = f.worst_conj6;
    t.check(c5.conj5_margin, tol::kMargin, [=] { return fuzz_witness(n, p.seed, p.fuzz_mode, c5.sample); });
    t.check(c6.conj6_margin, tol::kMargin, [=] { return fuzz_witness(n, p.seed, p.fuzz_mode, c6.sample); });
    r.counts["samples"] += f.samples;
  }
  r.notes.push_back("rng " + std::string(Rng::kAlgorithm));
  r.notes.push_back("empirical gate over random samples, not a proof");
  finish(r, t, w);
  return r;
}

CheckReport replay_fuzz(std::string_view witness) {
  Stopwatch w;
  CheckReport r = start("fuzz", {{"margin", tol::kMargin}});
  Tally t(r);
  int n = 0;
  std::uint64_t seed = 0, sample = 0;
  FuzzMode mode = FuzzMode::Uniform;
  bool have_n = false, have_seed = false, have_sample = false;
  std::stringstream in{std::string(witness)};
  std::string item;
  auto number = [&](std::string_view v, auto& out) {
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) throw ParseError("fuzz witness: bad number '" + std::string(v) + "'");
  };
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("fuzz witness: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), val = item.substr(eq + 1);
    if (key == "n") number(val, n), have_n = true;
    else if (key == "seed") number(val, seed), have_seed = true;
    else if (key == "sample") number(val, sample), have_sample = true;
    else if (key == "mode") mode = parse_fuzz_mode(val);
    else throw ParseError("fuzz witness: unknown key '" + key + "'");
  }
  if (!have_n || !have_seed || !have_sample) throw ParseError("fuzz witness: need n, seed and sample");
  const WeightedPoint q = evaluate_weighted(fuzz_sample(n, seed, sample, mode), sample);
  const std::string ws(witness);
  t.check(std::min(q.conj5_margin, q.conj6_margin), tol::kMargin, [ws] { return ws; });
  finish(r, t, w);
  return r;
}

CheckReport suite_bound_comparison(const SuiteParams& p) {
  Stopwatch w;
  CheckReport r = start("bound_comparison", {{"valid_bound", tol::kEigen}});
  Tally t(r);
  std::uint64_t total = 0, f_gt_lu = 0, lu_gt_f = 0, lu_tie = 0, f_gt_mohar = 0, mohar_ge_f = 0;
  for (int n = std::max(p.n_min, 4); n <= p.n_max; ++n) {
    for (const PointRecord& q : census(n, p.threads).points) {
      if (q.diam != 3) continue;
      ++total;
      const std::string g6 = q.graph6;
      auto wit = [g6] { return g6; };
      const double mo = *q.mohar, lu = *q.lu;
      // Both published bounds are theorems; f_n is the conjecture.
      t.check(q.x - mo, tol::kEigen, wit);
      t.check(q.x - lu, tol::kEigen, wit);
      (q.f_bound > mo ? f_gt_mohar : mohar_ge_f)++;
      const double d = q.f_bound - lu;
      if (std::abs(d) <= 1e-12) {
        ++lu_tie;
      } else {
        (d > 0 ? f_gt_lu : lu_gt_f)++;
        const double poly = lu_comparison_polynomial(n, q.dsize / 2.0, q.edges);
        t.require((d > 0) == (poly >= 0), wit);
      }
      if (n >= 5 && q.dsize < n) t.check_positive(q.f_bound - mo, wit);
    }
  }
  t.require(f_gt_lu + lu_gt_f + lu_tie == total, [] { return std::string("lu columns"); });
  t.require(f_gt_mohar + mohar_ge_f == total, [] { return std::string("mohar columns"); });
  for (int n = 5; n <= 200; ++n)
    t.check_positive(f_n(n, (n - 1) / 2.0) - 4.0 / (3 * n), [n] { return "n=" + std::to_string(n); });
  r.counts = {{"diameter3_graphs", total}, {"f_beats_lu", f_gt_lu},       {"lu_beats_f", lu_gt_f},
              {"lu_ties", lu_tie},        {"f_beats_mohar", f_gt_mohar}, {"mohar_not_beaten", mohar_ge_f}};
  r.notes.push_back("counts are the report; PASS/FAIL covers only the consistency checks");
  finish(r, t, w);
  return r;
}

}  // namespace lapspread::detail
