#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lapspread/enumerate.hpp"

namespace lapspread {

enum class CurveId { LineXPlusY1, RedFn, PurpleWeak, GreenEmp, BlueSe };

std::string_view curve_name(CurveId id);

inline constexpr int kCurveSamples = 512;
inline constexpr double kCurveResidualTol = 1e-10;

struct CurveSample {
  double param = 0.0;
  double x = 0.0;
  double y = 0.0;
};

struct Curve {
  CurveId id;
  std::vector<CurveSample> samples;
  double max_residual = 0.0;
};

/// Residual of the curve's defining equation at (x, y); for the
/// parametrised curves the parameter pins down which branch is meant.
double curve_residual(CurveId id, double n, double param, double x, double y);

/// 512 uniform samples of the parameter range, endpoints included. Every
/// sample is checked against curve_residual; throws if one misses.
///   LINE_X_PLUS_Y_1  t in [0,1]    (t, 1-t)
///   RED_FN           k in [0,n/2]  (f_n(k), f_n((n-2k)/2))
///   PURPLE_WEAK      k in [0,n/2]  same with the weak bound
///   GREEN_EMP        s in [0,1]    roots in [0,1] of w_n(., s), w_n(., 1-s)
///   BLUE_SE          s in [0,1]    the SE(s) pair: lower-left hyperbola branch
Curve sample_curve(CurveId id, int n);

/// One row of the bound-vs-truth scatter (figure 5).
struct BoundRow {
  std::string graph6;
  std::string bound_id;
  double bound = 0.0;
  double lambda2 = 0.0;
};

/// Everything one figure needs. Figure 9 stores r_n-mapped coordinates:
/// points keep their records and curves are mapped sample by sample, with
/// any sample sitting on a pole of r_n dropped.
struct FigureDataset {
  int figure_id = 1;
  int n = 7;
  std::vector<PointRecord> points;
  std::vector<Curve> curves;
  std::vector<BoundRow> bound_rows;
  bool reparameterized = false;
  /// Figure 9 only: (r_n(x), r_n(y)) for each entry of `points`.
  std::vector<std::pair<double, double>> mapped;
};

/// Figure ids 1, 3, 5, 9. n <= 0 picks the figure's own default (20 for
/// figure 3, 7 otherwise). Figures with points need n <= 7.
FigureDataset build_figure(int figure_id, int n = 0, int threads = 0);

/// Writes points.csv (or bounds.csv), one curve_<ID>.csv per curve and
/// manifest.json into `dir`, creating it if needed.
void write_figure(const FigureDataset& fig, const std::filesystem::path& dir);

}  // namespace lapspread
