#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "lapspread/enumerate.hpp"

namespace lapspread {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view status_name(CheckStatus s);

/// Outcome of one named suite. A FAIL always carries a witness: a graph6
/// string, a family text form, or a "key=value" description of a grid
/// point, depending on what the suite iterates over.
struct CheckReport {
  std::string suite_id;
  CheckStatus status = CheckStatus::Pass;
  std::uint64_t cases_run = 0;
  /// Smallest signed margin seen; negative beyond the tolerance means FAIL.
  double worst_margin = 0.0;
  std::optional<std::string> witness;
  std::map<std::string, double> tolerances;
  double runtime_ms = 0.0;
  /// Cases with |margin| inside the TIGHT band.
  std::uint64_t tight_count = 0;
  std::vector<std::string> tight_witnesses;
  /// Report-only tallies (bound comparison, census sizes).
  std::map<std::string, std::uint64_t> counts;
  std::vector<std::string> notes;

  bool passed() const { return status == CheckStatus::Pass; }
};

/// Stable schema; timing is left out when `with_timing` is false so that
/// reports can be compared byte for byte.
nlohmann::json to_json(const CheckReport& r, bool with_timing = true);

struct SuiteParams {
  int n_min = 2;
  int n_max = 7;
  std::uint64_t seed = 1;
  int threads = 0;
  /// Random fills per grid point (se, greenpoints).
  int fills = 100;
  /// Weighted fuzz sample count.
  std::uint64_t samples = 100000;
  FuzzMode fuzz_mode = FuzzMode::Uniform;
};

/// Defaults tuned per suite (e.g. se runs n = 5..40, fuzz n = 8).
SuiteParams default_params(std::string_view suite_id);

struct SuiteInfo {
  std::string id;
  std::string summary;
  std::function<CheckReport(const SuiteParams&)> run;
  /// Replays one witness of this suite; absent for grid-only suites.
  std::function<CheckReport(std::string_view)> replay;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo* find_suite(std::string_view id);

/// Throws ParseError for an unknown id.
CheckReport run_suite(std::string_view id, const SuiteParams& params);
CheckReport run_suite(std::string_view id);

/// Re-evaluates a single witness emitted by `id` and reports its margin.
CheckReport replay_witness(std::string_view id, std::string_view witness);

/// Per-n census of every isomorphism class, evaluated once and cached for
/// the lifetime of the process.
struct Census {
  int n = 0;
  ClassList classes;
  std::vector<PointRecord> points;
};

const Census& census(int n, int threads = 0);

}  // namespace lapspread
