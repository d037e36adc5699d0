// Command-line front end. Exit codes: 0 all checks pass, 1 a check
// failed (witness on stderr), 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "lapspread/enumerate.hpp"
#include "lapspread/error.hpp"
#include "lapspread/families.hpp"
#include "lapspread/figure.hpp"
#include "lapspread/spectra.hpp"
#include "lapspread/verify.hpp"

using namespace lapspread;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int resolve_threads(int flag) {
  if (const char* env = std::getenv("LAPSPREAD_THREADS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw ParseError(std::string("LAPSPREAD_THREADS is not an integer: ") + env);
    }
  }
  return flag;
}

void print_spectrum(const Spectrum& s) {
  std::cout << "spectrum:";
  for (double v : s.eigs) std::cout << ' ' << format_real(v);
  std::cout << '\n';
}

int cmd_spectrum(const std::string& input) {
  FamilyGraph g = input.find(':') != std::string::npos ? make(FamilySpec::parse(input))
                                                       : FamilyGraph(parse_graph6(input));
  if (auto* w = std::get_if<WeightedGraph>(&g)) {
    const Spectrum s = laplacian_spectrum(*w);
    print_spectrum(s);
    std::cout << "lambda2: " << format_real(s.eigs[1]) << '\n'
              << "lambda_n: " << format_real(s.back()) << '\n'
              << "spread: " << format_real(s.back() - s.eigs[1]) << '\n'
              << "lambda2_complement: " << format_real(w->n() - s.back()) << '\n';
    return 0;
  }
  const SimpleGraph& sg = std::get<SimpleGraph>(g);
  const Spectrum s = laplacian_spectrum(sg);
  print_spectrum(s);
  std::cout << "graph6: " << emit_graph6(sg) << '\n'
            << "lambda2: " << format_real(s.eigs[1]) << '\n'
            << "lambda_n: " << format_real(s.back()) << '\n'
            << "spread: " << format_real(s.back() - s.eigs[1]) << '\n'
            << "lambda2_complement: " << format_real(lambda2(complement(sg))) << '\n';
  const VertexSet d = high_ecc_set(sg);
  std::cout << "D:";
  for (int v = 0; v < sg.n(); ++v)
    if ((d >> v) & 1U) std::cout << ' ' << v;
  const int diam = diameter(sg);
  std::cout << "\n|D|: " << set_size(d) << "\ndiameter: " << (diam == kInfinite ? "inf" : std::to_string(diam))
            << '\n';
  return 0;
}

struct EnumerateOpts {
  int n = 7;
  std::string filter = "all";
  bool dedup = false;
  bool allow_n8 = false;
  std::vector<std::string> checks;
  std::string format = "csv";
  std::string output;
};

int cmd_enumerate(const EnumerateOpts& o, int threads) {
  for (const std::string& c : o.checks) {
    const SuiteInfo* s = find_suite(c);
    if (!s || !s->replay || c == "fuzz") throw ParseError("--check: '" + c + "' is not a per-graph check");
  }
  if (o.format != "csv" && o.format != "jsonl") throw ParseError("--out must be csv or jsonl");
  GraphClassIter iter{o.n, GraphFilter::parse(o.filter), o.dedup, o.allow_n8};
  const ClassList list = enumerate_classes(iter, threads);
  const std::vector<PointRecord> points = evaluate_points(list, threads);

  std::ofstream file;
  if (!o.output.empty()) {
    file.open(o.output, std::ios::binary);
    if (!file) throw std::runtime_error("cannot write " + o.output);
  }
  std::ostream& out = o.output.empty() ? std::cout : file;
  if (o.format == "csv") write_csv_header(out);
  for (const PointRecord& p : points) (o.format == "csv" ? write_csv_row : write_jsonl_row)(out, p);

  int status = 0;
  for (const std::string& c : o.checks) {
    std::uint64_t cases = 0, tight = 0;
    bool ok = true;
    for (const PointRecord& p : points) {
      const CheckReport r = replay_witness(c, p.graph6);
      cases += r.cases_run;
      tight += r.tight_count;
      if (!r.passed()) {
        std::cerr << "FAIL " << c << " witness " << p.graph6 << " margin " << format_real(r.worst_margin) << '\n';
        ok = false;
      }
    }
    std::cerr << (ok ? "PASS " : "FAIL ") << c << " cases=" << cases << " tight=" << tight << '\n';
    if (!ok) status = kExitFail;
  }
  std::cerr << "rows: " << points.size() << '\n';
  return status;
}

struct VerifyOpts {
  std::string suite = "all";
  std::optional<int> n_min, n_max, fills;
  std::optional<std::uint64_t> seed, samples;
  std::optional<std::string> mode;
  std::string json_out;
  bool no_timing = false;
  bool list = false;
};

int cmd_verify(const VerifyOpts& o, int threads) {
  if (o.list) {
    for (const SuiteInfo& s : suite_registry()) std::cout << s.id << "  " << s.summary << '\n';
    return 0;
  }
  std::vector<std::string> ids;
  if (o.suite == "all") {
    for (const SuiteInfo& s : suite_registry()) ids.push_back(s.id);
  } else {
    if (!find_suite(o.suite)) throw ParseError("unknown suite '" + o.suite + "'");
    ids.push_back(o.suite);
  }
  nlohmann::json all = nlohmann::json::array();
  int status = 0;
  for (const std::string& id : ids) {
    SuiteParams p = default_params(id);
    if (o.n_min) p.n_min = *o.n_min;
    if (o.n_max) p.n_max = *o.n_max;
    if (o.fills) p.fills = *o.fills;
    if (o.seed) p.seed = *o.seed;
    if (o.samples) p.samples = *o.samples;
    if (o.mode) p.fuzz_mode = parse_fuzz_mode(*o.mode);
    p.threads = threads;
    const CheckReport r = run_suite(id, p);
    std::cout << status_name(r.status) << ' ' << r.suite_id << " cases=" << r.cases_run
              << " worst_margin=" << format_real(r.worst_margin) << " tight=" << r.tight_count << '\n';
    if (!r.passed()) {
      std::cerr << r.suite_id << " witness: " << r.witness.value_or("<none>") << '\n';
      status = kExitFail;
    }
    all.push_back(to_json(r, !o.no_timing));
  }
  if (!o.json_out.empty()) {
    std::ofstream out(o.json_out, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + o.json_out);
    out << all.dump(2) << '\n';
  }
  return status;
}

int cmd_replay(const std::string& suite, const std::string& witness) {
  const CheckReport r = replay_witness(suite, witness);
  std::cout << to_json(r, false).dump(2) << '\n';
  if (!r.passed()) {
    std::cerr << suite << " witness: " << witness << '\n';
    return kExitFail;
  }
  return 0;
}

int cmd_figure(int id, int n, const std::string& dir, int threads) {
  const FigureDataset fig = build_figure(id, n, threads);
  write_figure(fig, dir);
  std::cout << "figure " << id << " n=" << fig.n << " points=" << (id == 5 ? fig.bound_rows.size() : fig.points.size())
            << " curves=" << fig.curves.size() << " -> " << dir << '\n';
  return 0;
}

int cmd_fuzz(int n, std::uint64_t samples, std::uint64_t seed, const std::string& mode, const std::string& output,
             int threads) {
  const FuzzResult f = fuzz_weighted(n, samples, seed, parse_fuzz_mode(mode), !output.empty(), threads);
  if (!output.empty()) {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + output);
    write_weighted_csv_header(out);
    for (const WeightedPoint& p : f.points) write_weighted_csv_row(out, p);
  }
  std::cout << "samples: " << f.samples << "\nworst x+y-1: " << format_real(f.worst_conj5.conj5_margin)
            << " (sample " << f.worst_conj5.sample << ")\nworst x+y-2xy/n-1: "
            << format_real(f.worst_conj6.conj6_margin) << " (sample " << f.worst_conj6.sample << ")\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Laplacian spread verification lab"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = all available; LAPSPREAD_THREADS overrides)");

  std::string spec_input;
  auto* spectrum = app.add_subcommand("spectrum", "spectrum, lambda2, lambda_n, spread and D(G) of one graph");
  spectrum->add_option("input", spec_input, "graph6 string or family text form such as G:2,3,4")->required();

  EnumerateOpts eo;
  auto* enumerate = app.add_subcommand("enumerate", "walk all graphs on n vertices and stream their points");
  enumerate->add_option("--n", eo.n, "vertex count")->required();
  enumerate->add_option("--filter", eo.filter, "all | connected | both-diam3 | diam=<d> | ecc3=<l>");
  enumerate->add_flag("--dedup", eo.dedup, "one representative per isomorphism class");
  enumerate->add_flag("--allow-n8", eo.allow_n8, "permit the 2^28-mask sweep at n = 8");
  enumerate->add_option("--check", eo.checks, "per-graph checks to run on every row");
  enumerate->add_option("--out", eo.format, "csv | jsonl");
  enumerate->add_option("--output", eo.output, "file to write instead of stdout");

  VerifyOpts vo;
  auto* verify = app.add_subcommand("verify", "run named check suites");
  verify->add_option("--suite", vo.suite, "suite id or 'all'");
  verify->add_option("--n-min", vo.n_min);
  verify->add_option("--n-max", vo.n_max);
  verify->add_option("--seed", vo.seed);
  verify->add_option("--fills", vo.fills, "random fills per grid point");
  verify->add_option("--samples", vo.samples, "fuzz sample count");
  verify->add_option("--mode", vo.mode, "fuzz mode: uniform | se-perturbed");
  verify->add_option("--json", vo.json_out, "write reports as JSON");
  verify->add_flag("--no-timing", vo.no_timing, "leave runtime_ms out of the JSON");
  verify->add_flag("--list", vo.list, "list suites and exit");

  std::string replay_suite, replay_witness_text;
  auto* replay = app.add_subcommand("replay", "re-evaluate one witness of a suite");
  replay->add_option("--suite", replay_suite)->required();
  replay->add_option("--witness", replay_witness_text)->required();

  int fig_id = 1, fig_n = 0;
  std::string fig_dir = "figure";
  auto* figure = app.add_subcommand("figure", "emit the CSVs and manifest behind a figure");
  figure->add_option("--id", fig_id, "1 | 3 | 5 | 9")->required();
  figure->add_option("--n", fig_n, "vertex count (default 7; 20 for figure 3)");
  figure->add_option("--out", fig_dir, "output directory");

  int fz_n = 8;
  std::uint64_t fz_samples = 100000, fz_seed = 1;
  std::string fz_mode = "uniform", fz_out;
  auto* fuzz = app.add_subcommand("fuzz", "random weighted graphs against the weighted conjectures");
  fuzz->add_option("--n", fz_n);
  fuzz->add_option("--samples", fz_samples);
  fuzz->add_option("--seed", fz_seed);
  fuzz->add_option("--mode", fz_mode, "uniform | se-perturbed");
  fuzz->add_option("--output", fz_out, "CSV of every sample");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    const int t = resolve_threads(threads);
    if (*spectrum) return cmd_spectrum(spec_input);
    if (*enumerate) return cmd_enumerate(eo, t);
    if (*verify) return cmd_verify(vo, t);
    if (*replay) return cmd_replay(replay_suite, replay_witness_text);
    if (*figure) return cmd_figure(fig_id, fig_n, fig_dir, t);
    if (*fuzz) return cmd_fuzz(fz_n, fz_samples, fz_seed, fz_mode, fz_out, t);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
