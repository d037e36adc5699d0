#pragma once

#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "lapspread/verify.hpp"

namespace lapspread::detail {

inline constexpr std::size_t kMaxTightWitnesses = 64;

/// Accumulates signed margins into a report. A case fails when its margin
/// drops below -tol. The witness follows the worst case until something
/// fails and then stays on the first failure. Witness callables for the
/// running worst are kept unevaluated (so they must capture by value) and
/// rendered once in finish().
class Tally {
 public:
  explicit Tally(CheckReport& r) : r_(r) { r_.worst_margin = std::numeric_limits<double>::infinity(); }

  bool check(double margin, double tol, std::function<std::string()> witness) {
    ++r_.cases_run;
    const bool ok = std::isfinite(margin) && margin >= -tol;
    const double m = std::isfinite(margin) ? margin : std::numeric_limits<double>::lowest();
    if (!ok && !failed_) {
      r_.witness = witness();
      pending_ = nullptr;
      failed_ = true;
    } else if (!failed_ && m < r_.worst_margin) {
      pending_ = std::move(witness);
    }
    if (m < r_.worst_margin) r_.worst_margin = m;
    return ok;
  }

  /// Passes only for a strictly positive margin.
  bool check_positive(double margin, std::function<std::string()> witness) {
    return check(margin, -std::numeric_limits<double>::denorm_min(), std::move(witness));
  }

  /// Conjecture-style check that also sorts |margin| <= band into TIGHT.
  bool check_tight(double margin, double tol, double band, std::function<std::string()> witness) {
    if (std::abs(margin) <= band) {
      ++r_.tight_count;
      if (r_.tight_witnesses.size() < kMaxTightWitnesses) r_.tight_witnesses.push_back(witness());
    }
    return check(margin, tol, std::move(witness));
  }

  /// A yes/no fact: margin 0 when it holds, -1 when it does not.
  bool require(bool ok, std::function<std::string()> witness) {
    return check(ok ? 0.0 : -1.0, 0.0, std::move(witness));
  }

  bool failed() const { return failed_; }

  void resolve() {
    if (!failed_ && pending_) r_.witness = pending_();
    pending_ = nullptr;
  }

 private:
  CheckReport& r_;
  bool failed_ = false;
  std::function<std::string()> pending_;
};

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// Fills status and witness from the tally and stamps runtime.
void finish(CheckReport& r, Tally& t, const Stopwatch& w);

// Suite entry points, defined in suites.cpp.
CheckReport suite_conjecture1(const SuiteParams& p);
CheckReport suite_prop_comp(const SuiteParams& p);
CheckReport suite_emp(const SuiteParams& p);
CheckReport suite_one_root(const SuiteParams& p);
CheckReport suite_max_floor(const SuiteParams& p);
CheckReport suite_max_bound(const SuiteParams& p);
CheckReport suite_dandelion_min(const SuiteParams& p);
CheckReport suite_diam3_minimizer(const SuiteParams& p);
CheckReport suite_thm_implications(const SuiteParams& p);
CheckReport suite_family_charpoly(const SuiteParams& p);
CheckReport suite_family_closed(const SuiteParams& p);
CheckReport suite_dandelion_intervals(const SuiteParams& p);
CheckReport suite_greenpoints(const SuiteParams& p);
CheckReport suite_se(const SuiteParams& p);
CheckReport suite_insert_edges(const SuiteParams& p);
CheckReport suite_appendix(const SuiteParams& p);
CheckReport suite_fuzz(const SuiteParams& p);
CheckReport suite_bound_comparison(const SuiteParams& p);

CheckReport replay_graph_suite(std::string_view id, std::string_view graph6);
CheckReport replay_fuzz(std::string_view witness);

}  // namespace lapspread::detail
