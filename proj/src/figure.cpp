#include "lapspread/figure.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "json.hpp"
#include "lapspread/bounds.hpp"
#include "lapspread/error.hpp"
#include "lapspread/verify.hpp"

namespace lapspread {

std::string_view curve_name(CurveId id) {
  switch (id) {
    case CurveId::LineXPlusY1: return "LINE_X_PLUS_Y_1";
    case CurveId::RedFn: return "RED_FN";
    case CurveId::PurpleWeak: return "PURPLE_WEAK";
    case CurveId::GreenEmp: return "GREEN_EMP";
    case CurveId::BlueSe: return "BLUE_SE";
  }
  return "?";
}

namespace {

// f_n(k) is the smaller root of z^2 - (n-k+1) z + (n-2k).
double fn_quadratic(double n, double k, double z) { return z * z - (n - k + 1) * z + (n - 2 * k); }

// Root of w_n(., s) in [0, 1]; w_n(0) <= 0 <= w_n(1) for s in [0, 1].
double green_root(double n, double s) {
  double lo = 0.0, hi = 1.0;
  if (w_n(n, lo, s) == 0.0) return lo;
  if (w_n(n, hi, s) == 0.0) return hi;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (w_n(n, mid, s) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

CurveSample point_on(CurveId id, double n, double u) {
  switch (id) {
    case CurveId::LineXPlusY1: return {u, u, 1.0 - u};
    case CurveId::RedFn: {
      const double k = u * n / 2;
      return {k, f_n(n, k), f_n(n, std::max(0.0, (n - 2 * k) / 2))};
    }
    case CurveId::PurpleWeak: {
      const double k = u * n / 2;
      return {k, f_weak(n, k), f_weak(n, std::max(0.0, (n - 2 * k) / 2))};
    }
    case CurveId::GreenEmp: return {u, green_root(n, u), green_root(n, 1.0 - u)};
    case CurveId::BlueSe: {
      // SE(s): roots of z^2 - (2s+n-1) z + ns; y = n - larger root.
      const double b = 2 * u + n - 1, disc = std::sqrt(std::max(0.0, b * b - 4 * n * u));
      const double small = 2 * n * u / (b + disc);  // stable form of (b - disc)/2
      return {u, small, n - (b + disc) / 2};
    }
  }
  throw DomainError("unknown curve");
}

}  // namespace

double curve_residual(CurveId id, double n, double param, double x, double y) {
  switch (id) {
    case CurveId::LineXPlusY1: return x + y - 1;
    case CurveId::RedFn: {
      const double kc = std::max(0.0, (n - 2 * param) / 2);
      return std::max(std::abs(fn_quadratic(n, param, x)), std::abs(fn_quadratic(n, kc, y)));
    }
    case CurveId::PurpleWeak: {
      const double kc = std::max(0.0, (n - 2 * param) / 2);
      return std::max(std::abs((1 - x) * (n - param + 1) - (param + 1)), std::abs((1 - y) * (n - kc + 1) - (kc + 1)));
    }
    case CurveId::GreenEmp: return green_residual(n, x, y);
    case CurveId::BlueSe: return se_residual(n, x, y);
  }
  throw DomainError("unknown curve");
}

Curve sample_curve(CurveId id, int n) {
  if (n < 4) throw DomainError("sample_curve: n must be >= 4");
  Curve c{id, {}, 0.0};
  c.samples.reserve(kCurveSamples);
  for (int i = 0; i < kCurveSamples; ++i) {
    const double u = static_cast<double>(i) / (kCurveSamples - 1);
    const CurveSample s = point_on(id, n, u);
    const double res = std::abs(curve_residual(id, n, s.param, s.x, s.y));
    if (!(res <= kCurveResidualTol))
      throw DomainError("sample_curve: " + std::string(curve_name(id)) + " sample " + std::to_string(i) +
                        " misses its equation by " + format_real(res));
    c.max_residual = std::max(c.max_residual, res);
    c.samples.push_back(s);
  }
  return c;
}

namespace {

std::vector<PointRecord> both_diam3_points(int n, int threads) {
  if (n < 4 || n > 7) throw DomainError("figure: point figures need 4 <= n <= 7");
  std::vector<PointRecord> out;
  for (const PointRecord& p : census(n, threads).points)
    if (p.diam == 3 && p.diam_c == 3) out.push_back(p);
  return out;
}

std::optional<double> try_rn(double n, double x) {
  try {
    return r_n(n, x);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

}  // namespace

FigureDataset build_figure(int figure_id, int n, int threads) {
  FigureDataset fig;
  fig.figure_id = figure_id;
  fig.n = n > 0 ? n : (figure_id == 3 ? 20 : 7);
  switch (figure_id) {
    case 1:
      fig.points = both_diam3_points(fig.n, threads);
      fig.curves = {sample_curve(CurveId::LineXPlusY1, fig.n), sample_curve(CurveId::RedFn, fig.n)};
      break;
    case 3:
      fig.curves = {sample_curve(CurveId::RedFn, fig.n), sample_curve(CurveId::PurpleWeak, fig.n)};
      break;
    case 5:
      if (fig.n < 4 || fig.n > 7) throw DomainError("figure: point figures need 4 <= n <= 7");
      for (const PointRecord& p : census(fig.n, threads).points) {
        if (p.diam != 3) continue;
        fig.bound_rows.push_back({p.graph6, std::string(bound_name(BoundId::FN)), p.f_bound, p.x});
        fig.bound_rows.push_back({p.graph6, std::string(bound_name(BoundId::Lu)), *p.lu, p.x});
      }
      break;
    case 9: {
      fig.reparameterized = true;
      const double nd = fig.n;
      for (const PointRecord& p : both_diam3_points(fig.n, threads)) {
        const auto s = try_rn(nd, p.x), t = try_rn(nd, p.y);
        if (!s || !t) continue;
        fig.points.push_back(p);
        fig.mapped.emplace_back(*s, *t);
      }
      for (CurveId id : {CurveId::LineXPlusY1, CurveId::BlueSe, CurveId::RedFn, CurveId::GreenEmp}) {
        Curve c = sample_curve(id, fig.n);
        std::vector<CurveSample> mapped;
        for (const CurveSample& s : c.samples) {
          const auto u = try_rn(nd, s.x), v = try_rn(nd, s.y);
          if (u && v) mapped.push_back({s.param, *u, *v});
        }
        if (id == CurveId::GreenEmp) {
          // Under r_n the green curve is the segment s + t = 1.
          for (const CurveSample& s : mapped) {
            const double res = std::abs(s.x + s.y - 1);
            if (!(res <= kCurveResidualTol))
              throw DomainError("figure 9: mapped green sample off s + t = 1 by " + format_real(res));
          }
        }
        c.samples = std::move(mapped);
        fig.curves.push_back(std::move(c));
      }
      break;
    }
    default: throw DomainError("figure: id must be 1, 3, 5 or 9");
  }
  return fig;
}

void write_figure(const FigureDataset& fig, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const std::string& name) {
    std::ofstream out(dir / name, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + (dir / name).string());
    return out;
  };

  nlohmann::json m;
  m["figure_id"] = fig.figure_id;
  m["n"] = fig.n;
  m["coordinates"] = fig.reparameterized ? "r_n" : "lambda2";
  m["curve_samples"] = kCurveSamples;
  m["curve_residual_tolerance"] = kCurveResidualTol;

  if (fig.figure_id == 5) {
    auto out = open("bounds.csv");
    out << "graph6,bound_id,bound,lambda2\n";
    for (const BoundRow& b : fig.bound_rows)
      out << b.graph6 << ',' << b.bound_id << ',' << format_real(b.bound) << ',' << format_real(b.lambda2) << '\n';
    m["points"] = {{"file", "bounds.csv"}, {"count", fig.bound_rows.size()}, {"x_column", "bound"},
                   {"y_column", "lambda2"}, {"group_column", "bound_id"}};
  } else if (!fig.points.empty() || fig.figure_id == 1 || fig.figure_id == 9) {
    auto out = open("points.csv");
    if (fig.reparameterized) {
      out << "graph6,x,y,s,t\n";
      for (std::size_t k = 0; k < fig.points.size(); ++k) {
        const PointRecord& p = fig.points[k];
        out << p.graph6 << ',' << format_real(p.x) << ',' << format_real(p.y) << ',' << format_real(fig.mapped[k].first)
            << ',' << format_real(fig.mapped[k].second) << '\n';
      }
      m["points"] = {{"file", "points.csv"}, {"count", fig.points.size()}, {"x_column", "s"}, {"y_column", "t"}};
    } else {
      write_csv_header(out);
      for (const PointRecord& p : fig.points) write_csv_row(out, p);
      m["points"] = {{"file", "points.csv"}, {"count", fig.points.size()}, {"x_column", "x"}, {"y_column", "y"}};
    }
  } else {
    m["points"] = nullptr;
  }

  m["curves"] = nlohmann::json::array();
  for (const Curve& c : fig.curves) {
    const std::string name = "curve_" + std::string(curve_name(c.id)) + ".csv";
    auto out = open(name);
    out << "param,x,y\n";
    for (const CurveSample& s : c.samples)
      out << format_real(s.param) << ',' << format_real(s.x) << ',' << format_real(s.y) << '\n';
    m["curves"].push_back({{"id", curve_name(c.id)},
                           {"file", name},
                           {"samples", c.samples.size()},
                           {"max_residual", c.max_residual}});
  }
  open("manifest.json") << m.dump(2) << '\n';
}

}  // namespace lapspread
