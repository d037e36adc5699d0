#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "lapspread/graph.hpp"

namespace lapspread {

inline constexpr int kMaxEnumerateN = 8;

/// Canonical isomorphism certificate: the lexicographically smallest
/// upper-triangle bit string x(0,1) x(0,2) x(1,2) x(0,3) ... over all
/// vertex relabelings, packed with x(0,1) as the most significant bit so
/// that integer order equals string order.
struct Certificate {
  int n = 0;
  std::uint64_t bits = 0;

  friend auto operator<=>(const Certificate&, const Certificate&) = default;
};

/// Requires n <= 8.
Certificate canonical_form(const SimpleGraph& g);

/// The upper-triangle string of `g` as labeled, packed like a certificate.
Certificate labeling_string(const SimpleGraph& g);

/// True iff `g` as labeled is already its canonical form, i.e.
/// labeling_string(g) == canonical_form(g). Stops at the first smaller
/// relabeling, so it is much cheaper than canonical_form on most inputs.
bool is_canonical_labeling(const SimpleGraph& g);

/// The graph whose upper-triangle string is the certificate.
SimpleGraph certificate_graph(const Certificate& c);

/// Labeled edge mask: bit e is the e-th pair of the upper-triangle order.
std::uint64_t edge_mask(const SimpleGraph& g);
SimpleGraph graph_from_mask(int n, std::uint64_t mask);

enum class FilterKind { All, Connected, BothDiam3, Diam, Ecc3Count };

/// Text forms: "all", "connected", "both-diam3", "diam=<d>", "ecc3=<l>".
struct GraphFilter {
  FilterKind kind = FilterKind::All;
  int param = 0;

  static GraphFilter parse(std::string_view text);
  std::string to_string() const;
  bool accepts(const SimpleGraph& g) const;
};

struct GraphClassIter {
  int n = 4;
  GraphFilter filter;
  bool dedup = true;
  /// n = 8 walks 2^28 masks and must be requested explicitly.
  bool allow_n8 = false;

  void validate() const;
};

/// Enumeration result. With dedup, `codes` holds ascending certificate
/// bits (one per isomorphism class); otherwise ascending labeled masks.
struct ClassList {
  int n = 0;
  bool canonical = false;
  std::vector<std::uint64_t> codes;

  std::size_t size() const { return codes.size(); }
  SimpleGraph graph(std::size_t k) const;
};

/// Parallel sweep: the mask space is cut into contiguous chunks handled by
/// OpenMP workers and merged in chunk order, so the result does not depend
/// on the thread count. `threads` <= 0 uses the OpenMP default.
ClassList enumerate_classes(const GraphClassIter& iter, int threads = 0);

/// Single-threaded reference implementation of the same contract.
ClassList enumerate_classes_serial(const GraphClassIter& iter);

/// Per-graph measurements used by every downstream check.
struct PointRecord {
  std::string graph6;
  int n = 0;
  double x = 0.0;  // lambda2(G)
  double y = 0.0;  // lambda2(G^c)
  int dsize = 0;   // |D(G)|
  int dsize_c = 0; // |D(G^c)|, not part of the CSV
  int diam = 0;    // kInfinite when disconnected
  int diam_c = 0;
  int edges = 0;
  double f_bound = 0.0;  // f_n(|D|/2)
  double weak_bound = 0.0;
  std::optional<double> mohar;  // only for finite diameter
  std::optional<double> lu;
  double green_residual = 0.0;
  double se_residual = 0.0;
  double lambda_max = 0.0;    // lambda_n(G)
  double lambda_max_c = 0.0;  // lambda_n(G^c)

  double conj1_margin() const { return x - f_bound; }
};

PointRecord evaluate_point(const SimpleGraph& g);

/// Evaluates every graph of `list`, in parallel, preserving order.
std::vector<PointRecord> evaluate_points(const ClassList& list, int threads = 0);

/// Shortest-exact 17 significant digit rendering, locale independent.
std::string format_real(double v);

inline constexpr std::string_view kPointCsvHeader =
    "graph6,n,x,y,dsize,diam,diam_c,f_bound,weak_bound,mohar,lu,green_residual,se_residual";

void write_csv_header(std::ostream& out);
void write_csv_row(std::ostream& out, const PointRecord& p);
void write_jsonl_row(std::ostream& out, const PointRecord& p);

// Weighted-graph fuzzing.

enum class FuzzMode { Uniform, SePerturbed };

std::string_view fuzz_mode_name(FuzzMode m);
FuzzMode parse_fuzz_mode(std::string_view text);

struct WeightedPoint {
  std::uint64_t sample = 0;
  int n = 0;
  double x = 0.0;
  double y = 0.0;
  double conj5_margin = 0.0;  // x + y - 1
  double conj6_margin = 0.0;  // x + y - 2xy/n - 1
};

struct FuzzResult {
  int n = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  FuzzMode mode = FuzzMode::Uniform;
  WeightedPoint worst_conj5;
  WeightedPoint worst_conj6;
  std::vector<WeightedPoint> points;  // filled only when requested
};

/// Sample `index` of the stream (n, seed, mode); replayable on its own.
WeightedGraph fuzz_sample(int n, std::uint64_t seed, std::uint64_t index, FuzzMode mode);
WeightedPoint evaluate_weighted(const WeightedGraph& g, std::uint64_t sample);

FuzzResult fuzz_weighted(int n, std::uint64_t samples, std::uint64_t seed, FuzzMode mode,
                         bool keep_points = false, int threads = 0);
FuzzResult fuzz_weighted_serial(int n, std::uint64_t samples, std::uint64_t seed, FuzzMode mode,
                                bool keep_points = false);

void write_weighted_csv_header(std::ostream& out);
void write_weighted_csv_row(std::ostream& out, const WeightedPoint& p);

}  // namespace lapspread
