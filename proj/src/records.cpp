#include <omp.h>

#include <charconv>
#include <cmath>
#include <ostream>

#include "lapspread/bounds.hpp"
#include "lapspread/enumerate.hpp"
#include "lapspread/spectra.hpp"

namespace lapspread {

PointRecord evaluate_point(const SimpleGraph& g) {
  const SimpleGraph gc = complement(g);
  const Spectrum s = laplacian_spectrum(g);
  const Spectrum sc = laplacian_spectrum(gc);
  const double n = g.n();

  PointRecord p;
  p.graph6 = emit_graph6(g);
  p.n = g.n();
  p.x = s.eigs[1];
  p.y = sc.eigs[1];
  p.lambda_max = s.back();
  p.lambda_max_c = sc.back();
  p.dsize = set_size(high_ecc_set(g));
  p.dsize_c = set_size(high_ecc_set(gc));
  p.diam = diameter(g);
  p.diam_c = diameter(gc);
  p.edges = g.edge_count();

  const double k = p.dsize / 2.0;
  p.f_bound = f_n(n, k);
  p.weak_bound = f_weak(n, k);
  if (p.diam != kInfinite && p.diam > 0) {
    p.mohar = mohar_bound(n, p.diam);
    p.lu = lu_bound(n, p.diam, p.edges);
  }
  p.green_residual = green_residual(n, p.x, p.y);
  p.se_residual = se_residual(n, p.x, p.y);
  return p;
}

std::vector<PointRecord> evaluate_points(const ClassList& list, int threads) {
  std::vector<PointRecord> out(list.size());
  const int workers = threads > 0 ? threads : omp_get_max_threads();
  const auto count = static_cast<std::ptrdiff_t>(list.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
  for (std::ptrdiff_t k = 0; k < count; ++k) out[k] = evaluate_point(list.graph(k));
  return out;
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  (void)ec;
  return std::string(buf, end);
}

namespace {

std::string int_or_inf(int v) { return v == kInfinite ? "inf" : std::to_string(v); }
std::string int_or_null(int v) { return v == kInfinite ? "null" : std::to_string(v); }
std::string opt_real(const std::optional<double>& v, std::string_view missing) {
  return v ? format_real(*v) : std::string(missing);
}

// graph6 uses bytes 63..126, none of which needs escaping in JSON except
// the backslash.
std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '\\' || c == '"') out += '\\';
    out += c;
  }
  return out + '"';
}

}  // namespace

void write_csv_header(std::ostream& out) { out << kPointCsvHeader << '\n'; }

void write_csv_row(std::ostream& out, const PointRecord& p) {
  // A graph6 string can contain no comma, so no quoting is needed.
  out << p.graph6 << ',' << p.n << ',' << format_real(p.x) << ',' << format_real(p.y) << ',' << p.dsize << ','
      << int_or_inf(p.diam) << ',' << int_or_inf(p.diam_c) << ',' << format_real(p.f_bound) << ','
      << format_real(p.weak_bound) << ',' << opt_real(p.mohar, "") << ',' << opt_real(p.lu, "") << ','
      << format_real(p.green_residual) << ',' << format_real(p.se_residual) << '\n';
}

void write_jsonl_row(std::ostream& out, const PointRecord& p) {
  out << "{\"graph6\":" << json_string(p.graph6) << ",\"n\":" << p.n << ",\"x\":" << format_real(p.x)
      << ",\"y\":" << format_real(p.y) << ",\"dsize\":" << p.dsize << ",\"diam\":" << int_or_null(p.diam)
      << ",\"diam_c\":" << int_or_null(p.diam_c) << ",\"f_bound\":" << format_real(p.f_bound)
      << ",\"weak_bound\":" << format_real(p.weak_bound) << ",\"mohar\":" << opt_real(p.mohar, "null")
      << ",\"lu\":" << opt_real(p.lu, "null") << ",\"green_residual\":" << format_real(p.green_residual)
      << ",\"se_residual\":" << format_real(p.se_residual) << "}\n";
}

}  // namespace lapspread
