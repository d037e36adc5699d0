#include "lapspread/verify.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "lapspread/error.hpp"
#include "suite_support.hpp"

namespace lapspread {

std::string_view status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED";
  }
  return "?";
}

nlohmann::json to_json(const CheckReport& r, bool with_timing) {
  nlohmann::json j;
  j["suite_id"] = r.suite_id;
  j["status"] = status_name(r.status);
  j["cases_run"] = r.cases_run;
  j["worst_margin"] = r.worst_margin;
  j["witness"] = r.witness ? nlohmann::json(*r.witness) : nlohmann::json(nullptr);
  j["tolerances"] = r.tolerances;
  if (with_timing) j["runtime_ms"] = r.runtime_ms;
  j["tight_count"] = r.tight_count;
  j["tight_witnesses"] = r.tight_witnesses;
  j["counts"] = r.counts;
  j["notes"] = r.notes;
  return j;
}

namespace detail {

void finish(CheckReport& r, Tally& t, const Stopwatch& w) {
  t.resolve();
  if (!std::isfinite(r.worst_margin)) r.worst_margin = 0.0;
  if (r.status != CheckStatus::Skipped) r.status = t.failed() ? CheckStatus::Fail : CheckStatus::Pass;
  r.runtime_ms = w.ms();
}

}  // namespace detail

SuiteParams default_params(std::string_view id) {
  SuiteParams p;
  if (id == "one_root" || id == "dandelion_min" || id == "diam3_minimizer") p.n_min = 4;
  if (id == "thm_implications") p.n_min = 4, p.n_max = 200;
  if (id == "appendix") p.n_min = 4, p.n_max = 100;
  if (id == "family_charpoly") p.n_min = 4, p.n_max = 60;
  if (id == "dandelion_intervals") p.n_min = 5, p.n_max = 60;
  if (id == "greenpoints") p.n_min = 5, p.n_max = 10, p.fills = 20;
  if (id == "se") p.n_min = 5, p.n_max = 40;
  if (id == "fuzz") p.n_min = p.n_max = 8;
  if (id == "bound_comparison") p.n_min = p.n_max = 7;
  if (id == "insert_edges") p.fills = 10;
  return p;
}

const std::vector<SuiteInfo>& suite_registry() {
  using namespace detail;
  auto graph_replay = [](std::string id) {
    return [id](std::string_view w) { return replay_graph_suite(id, w); };
  };
  static const std::vector<SuiteInfo> registry = {
      {"conjecture1", "lambda2 >= f_n(|D|/2) over every class, equality at G(r,k,k)", suite_conjecture1,
       graph_replay("conjecture1")},
      {"prop_comp", "|D(G)| + |D(G^c)| <= n over every class", suite_prop_comp, graph_replay("prop_comp")},
      {"emp", "green-curve inequality for x, y < 1; tight cases are cluster-family graphs", suite_emp,
       graph_replay("emp")},
      {"one_root", "at most one eigenvalue in (0,1) and in (n-1,n) when both diameters are 3", suite_one_root,
       graph_replay("one_root")},
      {"max_floor", "max{x, y} >= 2 - sqrt(2), attained by P4", suite_max_floor, graph_replay("max_floor")},
      {"max_bound", "max{x, y} >= (n - sqrt((n-2)^2 + 4))/2", suite_max_bound, graph_replay("max_bound")},
      {"dandelion_min", "the dandelion minimises x + y among both-diameter-3 graphs", suite_dandelion_min,
       graph_replay("dandelion_min")},
      {"diam3_minimizer", "G(n-l-2, floor(l/2), ceil(l/2)) minimises lambda2 among diameter-3 graphs with |D| = l",
       suite_diam3_minimizer, {}},
      {"thm_implications", "the bound implies the spread and 2 - sqrt(2) statements", suite_thm_implications, {}},
      {"family_charpoly", "factored characteristic polynomials vs eigensolves", suite_family_charpoly, {}},
      {"family_closed", "closed-form lambda2 of G(r,k,k) and Ghat(r,k,k)", suite_family_closed, {}},
      {"dandelion_intervals", "golden-ratio facts and dandelion eigenvalue intervals", suite_dandelion_intervals,
       {}},
      {"greenpoints", "cluster families lie on the green curve; bull maximum", suite_greenpoints, {}},
      {"se", "SE(s) spectrum, hyperbola identity and s recovery", suite_se, {}},
      {"insert_edges", "eccentricity-preserving edge insertion keeps the bound", suite_insert_edges, {}},
      {"appendix", "f_n decreasing and g_n concave on fine grids", suite_appendix, {}},
      {"fuzz", "weighted graphs: x + y >= 1 and x + y - 2xy/n >= 1", suite_fuzz, replay_fuzz},
      {"bound_comparison", "f-bound vs Mohar vs Lu over diameter-3 graphs", suite_bound_comparison, {}},
  };
  return registry;
}

const SuiteInfo* find_suite(std::string_view id) {
  for (const auto& s : suite_registry())
    if (s.id == id) return &s;
  return nullptr;
}

CheckReport run_suite(std::string_view id, const SuiteParams& params) {
  const SuiteInfo* s = find_suite(id);
  if (!s) throw ParseError("unknown suite '" + std::string(id) + "'");
  return s->run(params);
}

CheckReport run_suite(std::string_view id) { return run_suite(id, default_params(id)); }

CheckReport replay_witness(std::string_view id, std::string_view witness) {
  const SuiteInfo* s = find_suite(id);
  if (!s) throw ParseError("unknown suite '" + std::string(id) + "'");
  if (!s->replay) throw ParseError("suite '" + std::string(id) + "' has no witness replay");
  return s->replay(witness);
}

const Census& census(int n, int threads) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Census>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) {
    auto c = std::make_unique<Census>();
    c->n = n;
    GraphClassIter iter{n, {}, true, n == 8};
    c->classes = enumerate_classes(iter, threads);
    c->points = evaluate_points(c->classes, threads);
    slot = std::move(c);
  }
  return *slot;
}

}  // namespace lapspread
