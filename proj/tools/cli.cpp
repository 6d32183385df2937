#include "cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "circdom/audit.hpp"
#include "circdom/baselines.hpp"
#include "circdom/construct.hpp"
#include "circdom/error.hpp"
#include "circdom/graph.hpp"
#include "circdom/report_json.hpp"
#include "circdom/timer.hpp"
#include "circdom/verify.hpp"

namespace circdom::cli {
namespace {

namespace fs = std::filesystem;

// Relative output paths resolve against $CIRCDOM_OUT_DIR when it is set.
fs::path resolve_out(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("CIRCDOM_OUT_DIR"); dir && *dir) return fs::path(dir) / p;
  }
  return p;
}

void write_text(const std::string& out_path, const std::string& text, std::ostream& out) {
  if (out_path.empty() || out_path == "-") {
    out << text;
    return;
  }
  const fs::path p = resolve_out(out_path);
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + p.string());
  f << text;
}

int exit_code_for(const Error& e) {
  return e.kind() == ErrorKind::HypothesisNotMet ? kExitHypothesisNotMet : kExitInputError;
}

struct ChordSource {
  std::string file;
  u64 random_k = 0;
  std::uint64_t seed = 0;
  bool symmetric = false;

  void add_options(CLI::App& app) {
    auto* f = app.add_option("--chords-file", file, "Chord file: one residue per line, '#' comments");
    auto* r = app.add_option("--random-chords", random_k, "Draw this many random chords");
    f->excludes(r);
    app.add_option("--seed", seed, "Seed for random chords and the random baseline");
    app.add_flag("--symmetric", symmetric, "Symmetrize the random chord set");
  }

  ChordSet load(u64 n) const {
    if (!file.empty()) return read_chord_file(fs::path(file), n);
    if (random_k == 0)
      throw Error(ErrorKind::InvalidArgument, "one of --chords-file or --random-chords is required");
    Rng rng = Rng::stream(seed, 0);
    return symmetric ? random_symmetric_chords(n, random_k, rng) : random_chords(n, random_k, rng);
  }
};

struct MethodOptions {
  Dom2Constants constants;
  double psi = 1.0;
};

struct Outcome {
  DominationReport report;
  Json extra;
};

// Builds and verifies one report; `r` of 0 selects the method default.
Outcome run_method(Method method, const CirculantSpec& spec, std::uint64_t seed, unsigned r,
                   const MethodOptions& opts) {
  Outcome o;
  switch (method) {
    case Method::paper:
      o.report = construct_dominating(spec);
      break;
    case Method::greedy:
      o.report = greedy_dominating(spec);
      break;
    case Method::random:
      o.report = random_dominating(spec, Rng::stream(seed, 1).next());
      break;
    case Method::universal2:
    case Method::almost_w: {
      Stopwatch clock;
      WSet W = method == Method::universal2 ? construct_universal_2dom(spec.n, spec.k(), opts.constants)
                                            : almost_dominating_W(spec.n, spec.k(), opts.psi);
      o.report.method = method;
      o.report.n = spec.n;
      o.report.k = spec.k();
      o.report.params = ConstructionParams{W.L(), W.window.size(), W.size(), 0, std::nullopt,
                                           W.card_hypothesis()};
      o.report.size = W.size();
      o.report.D = std::move(W.elements);
      o.report.wall_ms = clock.elapsed_ms();
      if (method == Method::universal2) {
        const Universal2Plan plan = plan_universal_2dom(spec.n, spec.k(), opts.constants);
        o.extra["c"] = opts.constants.c;
        o.extra["C"] = opts.constants.C;
        o.extra["c0"] = opts.constants.c0;
        o.extra["k_threshold"] = plan.k_threshold;
        o.extra["prime_threshold"] = plan.prime_threshold;
        o.extra["envelope"] = universal2_envelope(spec.n, spec.k());
      } else {
        o.extra["psi"] = opts.psi;
        o.extra["budget"] = almost_budget(spec.n, spec.k(), opts.psi);
      }
      break;
    }
  }
  o.report.r = r != 0 ? r : (method == Method::universal2 ? 2u : 1u);
  o.report.seed = seed;
  verify_report(spec, o.report);
  return o;
}

std::string dump_line(const Json& j) { return j.dump() + "\n"; }

void expsum_audit_guard(u64 n, u64 cap) {
  if (n > cap)
    throw Error(ErrorKind::AuditTooLarge,
                "n = " + std::to_string(n) + " exceeds the audit cap " + std::to_string(cap));
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  u64 n = 0;
  ChordSource chords;
  std::string method = "paper";
  unsigned r = 0;
  MethodOptions opts;
  std::string out;
  bool no_timing = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  const auto method = parse_method(a.method);
  if (!method) {
    err << "error: InvalidArgument: unknown method '" << a.method << "'\n";
    return kExitInputError;
  }
  const CirculantSpec spec(a.n, a.chords.load(a.n));
  Outcome o = run_method(*method, spec, a.chords.seed, a.r, a.opts);
  Json j = to_json(o.report, !a.no_timing);
  j["extra"] = o.extra.is_null() ? Json(nullptr) : o.extra;
  write_text(a.out, j.dump(2) + "\n", out);
  if (o.report.verified || *method == Method::almost_w) return kExitOk;
  err << "error: constructed set does not dominate (" << o.report.uncovered_count << " uncovered)\n";
  return kExitUnverified;
}

// -------------------------------------------------------------------- gamma

int cmd_gamma(u64 n, const ChordSource& chords, const std::string& out_path, std::ostream& out) {
  const CirculantSpec spec(n, chords.load(n));
  const u64 g = exact_gamma(spec);
  Json j;
  j["n"] = n;
  j["k"] = spec.k();
  j["gamma"] = g;
  j["lower_bound_n_over_k_minus_1"] = gamma_lower_bound(n, spec.k());
  j["lower_bound_n_over_k_plus_1"] = static_cast<double>(n) / static_cast<double>(spec.k() + 1);
  write_text(out_path, j.dump(2) + "\n", out);
  return kExitOk;
}

// -------------------------------------------------------------------- audit

struct AuditArgs {
  std::string check;
  std::vector<u64> n_list;
  std::vector<u64> l_list;
  std::vector<u64> k_list;
  u64 trials = 10;
  std::uint64_t seed = 0;
  Dom2Constants constants;
  u64 cap = kDefaultAuditCap;
  unsigned jobs = 0;
  std::string out;
};

int cmd_audit(const AuditArgs& a, std::ostream& out) {
  std::string text;
  bool all_pass = true;
  auto emit = [&](const Json& j) {
    all_pass = all_pass && j.value("pass", false);
    text += dump_line(j);
  };
  if (a.check == "card" || a.check == "expsum") {
    if (a.l_list.empty()) throw Error(ErrorKind::InvalidArgument, "--l-list is required");
    // The cap applies to the whole grid before any work starts.
    if (a.check == "expsum")
      for (u64 n : a.n_list) expsum_audit_guard(n, a.cap);
    for (u64 n : a.n_list)
      for (u64 L : a.l_list) emit(a.check == "card" ? audit_card(n, L) : audit_expsum(n, L, a.cap, a.jobs));
  } else if (a.check == "exceptional" || a.check == "nu") {
    if (a.k_list.empty()) throw Error(ErrorKind::InvalidArgument, "--k-list is required");
    for (u64 n : a.n_list)
      for (u64 k : a.k_list) {
        if (a.check == "nu") {
          emit(audit_nu(n, k, a.trials, a.seed, a.constants));
        } else {
          for (u64 t = 0; t < a.trials; ++t) emit(audit_exceptional(n, k, a.seed, t));
        }
      }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown check '" + a.check + "'");
  }
  write_text(a.out, text, out);
  return all_pass ? kExitOk : kExitAuditFailed;
}

// -------------------------------------------------------------------- bench

struct BenchArgs {
  std::vector<u64> n_list;
  std::vector<u64> k_list;
  std::vector<std::string> methods{"paper"};
  std::vector<std::uint64_t> seeds{0};
  MethodOptions opts;
  std::string out;
  unsigned jobs = 1;
  bool no_timing = false;
};

constexpr const char* kBenchHeader =
    "n,k,method,seed,size,wall_ms,verified,L,w_size,u_size,ratio_vs_envelope,status\n";

std::string format_double(double v, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

std::string bench_row(u64 n, u64 k, Method method, std::uint64_t seed, const MethodOptions& opts,
                      bool timing) {
  std::ostringstream row;
  row << n << ',' << k << ',' << to_string(method) << ',' << seed << ',';
  try {
    const CirculantSpec spec(n, trial_chords(n, k, seed, 0));
    const Outcome o = run_method(method, spec, seed, 0, opts);
    const DominationReport& r = o.report;
    row << r.size << ',' << format_double(timing ? r.wall_ms : 0.0, 3) << ','
        << (r.verified ? "true" : "false") << ',';
    if (r.params) {
      row << r.params->L << ',' << r.params->w_size << ',';
      if (method == Method::paper) row << r.params->u_size;
      row << ',';
    } else {
      row << ",,,";
    }
    if (n >= kMinConstructN) row << format_double(static_cast<double>(r.size) / dominating_envelope(n, k), 6);
    row << ",ok\n";
  } catch (const Error& e) {
    row << ",,,,,,," << to_string(e.kind()) << '\n';
  }
  return row.str();
}

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  struct Point {
    u64 n, k;
    Method method;
    std::uint64_t seed;
  };
  std::vector<Point> grid;
  for (u64 n : a.n_list)
    for (u64 k : a.k_list)
      for (const std::string& name : a.methods) {
        const auto m = parse_method(name);
        if (!m) throw Error(ErrorKind::InvalidArgument, "unknown method '" + name + "'");
        for (std::uint64_t seed : a.seeds) grid.push_back({n, k, *m, seed});
      }

  // Rows are written in grid order whatever order the workers finish in.
  std::vector<std::string> rows(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const Point& p = grid[i];
      rows[i] = bench_row(p.n, p.k, p.method, p.seed, a.opts, !a.no_timing);
    }
  };
  const unsigned jobs = std::max(1u, a.jobs);
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  std::string body;
  for (const auto& r : rows) body += r;
  if (a.out.empty() || a.out == "-") {
    out << kBenchHeader << body;
    return kExitOk;
  }
  const fs::path p = resolve_out(a.out);
  const bool exists = fs::exists(p) && fs::file_size(p) > 0;
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  std::ofstream f(p, std::ios::binary | std::ios::app);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot open output file " + p.string());
  if (!exists) f << kBenchHeader;
  f << body;
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dominating sets of circulant graphs from modular-ratio point sets"};
  app.require_subcommand(1);

  ConstructArgs construct;
  auto* c = app.add_subcommand("construct", "Build and verify a dominating set");
  c->add_option("--n", construct.n, "Number of vertices")->required();
  construct.chords.add_options(*c);
  c->add_option("--method", construct.method, "paper|greedy|random|universal2|almost-w");
  c->add_option("--r", construct.r, "Verification radius (default 1; 2 for universal2)");
  c->add_option("--c", construct.opts.constants.c, "Scale constant for L (universal2)");
  c->add_option("--C", construct.opts.constants.C, "Threshold constant on k (universal2)");
  c->add_option("--c0", construct.opts.constants.c0, "Prime-count check constant (universal2)");
  c->add_option("--psi", construct.opts.psi, "Size budget factor (almost-w)");
  c->add_option("--out", construct.out, "Output path (default stdout)");
  c->add_flag("--no-timing", construct.no_timing, "Write wall_ms as 0 for reproducible output");

  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Numerical audits of the construction's estimates");
  au->add_option("--check", audit.check, "card|expsum|exceptional|nu")->required();
  au->add_option("--n-list", audit.n_list, "Comma-separated n values")->delimiter(',')->required();
  au->add_option("--l-list", audit.l_list, "Comma-separated L values")->delimiter(',');
  au->add_option("--k-list", audit.k_list, "Comma-separated k values")->delimiter(',');
  au->add_option("--trials", audit.trials, "Random chord sets per grid point");
  au->add_option("--seed", audit.seed, "Root seed");
  au->add_option("--c", audit.constants.c, "Scale constant for L");
  au->add_option("--C", audit.constants.C, "Threshold constant on k");
  au->add_option("--c0", audit.constants.c0, "Prime-count check constant");
  au->add_option("--cap", audit.cap, "Largest n for the exponential-sum scan");
  au->add_option("--jobs", audit.jobs, "Threads for the exponential-sum scan (0 = all cores)");
  au->add_option("--out", audit.out, "Output path (default stdout)");

  BenchArgs bench;
  auto* b = app.add_subcommand("bench", "Timing and size sweep, CSV output");
  b->add_option("--n-list", bench.n_list, "Comma-separated n values")->delimiter(',')->required();
  b->add_option("--k-list", bench.k_list, "Comma-separated k values")->delimiter(',')->required();
  b->add_option("--methods", bench.methods, "Comma-separated methods")->delimiter(',');
  b->add_option("--seeds", bench.seeds, "Comma-separated seeds")->delimiter(',');
  b->add_option("--c", bench.opts.constants.c, "Scale constant for L (universal2)");
  b->add_option("--C", bench.opts.constants.C, "Threshold constant on k (universal2)");
  b->add_option("--c0", bench.opts.constants.c0, "Prime-count check constant (universal2)");
  b->add_option("--psi", bench.opts.psi, "Size budget factor (almost-w)");
  b->add_option("--jobs", bench.jobs, "Grid points run in parallel");
  b->add_option("--out", bench.out, "CSV path; rows are appended (default stdout)");
  b->add_flag("--no-timing", bench.no_timing, "Write wall_ms as 0 for reproducible output");

  u64 gamma_n = 0;
  ChordSource gamma_chords;
  std::string gamma_out;
  auto* g = app.add_subcommand("gamma", "Exact domination number for n <= 24");
  g->add_option("--n", gamma_n, "Number of vertices")->required();
  gamma_chords.add_options(*g);
  g->add_option("--out", gamma_out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (c->parsed()) return cmd_construct(construct, out, err);
    if (au->parsed()) return cmd_audit(audit, out);
    if (b->parsed()) return cmd_bench(bench, out);
    if (g->parsed()) return cmd_gamma(gamma_n, gamma_chords, gamma_out, out);
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace circdom::cli
