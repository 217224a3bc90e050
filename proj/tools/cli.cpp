#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <optional>
#include <random>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "bbinv/certificate.hpp"
#include "bbinv/error.hpp"
#include "bbinv/extremal.hpp"
#include "bbinv/hopf.hpp"
#include "bbinv/io.hpp"
#include "bbinv/optimize.hpp"
#include "bbinv/oracle.hpp"
#include "bbinv/parallel.hpp"
#include "bbinv/polygon.hpp"
#include "bbinv/selection.hpp"

namespace bbinv::cli {

namespace {

using io::json;

std::string sha256_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Io, "sha256 failed for " + path);
  }
  std::ostringstream os;
  for (unsigned int k = 0; k < len; ++k) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[k]);
  return os.str();
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

/// Provenance record embedded in every experiment output.
class Manifest {
 public:
  Manifest(std::string command, std::vector<std::string> argv)
      : command_(std::move(command)), argv_(std::move(argv)), started_(std::chrono::steady_clock::now()),
        started_at_(utc_now()) {}

  void input(const std::string& path) { inputs_[path] = sha256_file(path); }
  void output(const std::string& path) { outputs_.push_back(path); }
  void seed(const std::string& name, std::uint64_t value) { seeds_[name] = value; }
  void threads(int t) { threads_ = t; }

  json to_json() const {
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - started_).count();
    return json{{"command", command_},
                {"argv", argv_},
                {"seeds", seeds_},
                {"toolVersion", std::string(kToolVersion)},
                {"formatVersion", std::string(kFormatVersion)},
                {"inputDigests", inputs_},
                {"startedAt", started_at_},
                {"wallSeconds", wall},
                {"threads", threads_},
                {"outputs", outputs_}};
  }

 private:
  std::string command_;
  std::vector<std::string> argv_;
  std::chrono::steady_clock::time_point started_;
  std::string started_at_;
  std::map<std::string, std::string> inputs_;
  std::map<std::string, std::uint64_t> seeds_;
  std::vector<std::string> outputs_;
  int threads_ = 1;
};

struct Global {
  bool json = false;
  int threads = default_threads();
  std::vector<std::string> argv;
};

OrthoMatrix load_matrix(const std::string& path, Manifest& m) {
  m.input(path);
  return validate_ortho(io::matrix_from_json(io::read_json_file(path)));
}

void write_json(const std::string& path, const json& j, Manifest& m) {
  m.output(path);
  io::write_text_file(path, j.dump(2) + "\n");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

std::string fmt(double x) { return io::format_double(x); }

// ---------------------------------------------------------------- select

struct SelectArgs {
  std::string in;
  std::string out;
  bool trace = false;
};

int run_select(const SelectArgs& a, const Global& g, std::ostream& out) {
  Manifest m("select", g.argv);
  m.threads(g.threads);
  const OrthoMatrix u = load_matrix(a.in, m);
  const Selection sel = select_certified(u);
  const BoundReport rep = verify_bound(u, sel);
  json j = io::selection_to_json(sel);
  j["verified"] = rep.pass;
  if (!a.out.empty()) {
    json file = j;
    m.output(a.out);
    file["manifest"] = m.to_json();
    io::write_text_file(a.out, file.dump(2) + "\n");
  }
  if (g.json) {
    j["manifest"] = m.to_json();
    emit(out, j);
  } else {
    out << "selected rows (" << sel.i << ", " << sel.j << ") of n = " << sel.n << "\n"
        << "  sigma2  = " << fmt(sel.sigma2) << "\n"
        << "  invNorm = " << fmt(sel.inv_norm) << "\n"
        << "  bound   = " << fmt(sel.bound) << " (ratio " << fmt(sel.inv_norm / sel.bound) << ")\n";
    if (a.trace) {
      for (const auto& step : sel.path) {
        if (const auto* s = std::get_if<CaseAStep>(&step)) {
          out << "  deflate row " << s->removed_row << (s->zero_row ? " (zero row)" : "") << " v = " << fmt(s->v)
              << " t = " << fmt(s->t) << "\n";
        } else if (const auto* s = std::get_if<CaseBStep>(&step)) {
          out << "  certificate entry M_ij = " << fmt(s->m_ij) << "\n";
        } else {
          out << "  exhaustive scan at n = 3\n";
        }
      }
    }
    for (const auto& f : rep.failures) out << "  FAIL: " << f << "\n";
  }
  return rep.pass ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- oracle

struct OracleArgs {
  std::string in;
  std::string table;
};

int run_oracle(const OracleArgs& a, const Global& g, std::ostream& out) {
  Manifest m("oracle", g.argv);
  m.threads(g.threads);
  const OrthoMatrix u = load_matrix(a.in, m);
  const OracleResult res = brute_force_best_pair(u, !a.table.empty(), g.threads);
  if (!a.table.empty()) {
    m.output(a.table);
    io::write_text_file(a.table, io::oracle_table_csv(res));
  }
  const bool ok = res.lambda2_max >= lambda2_floor(u.n()) - 1e-12;
  if (g.json) {
    json j = io::oracle_to_json(res);
    j["manifest"] = m.to_json();
    emit(out, j);
  } else {
    out << "best pair (" << res.best_i << ", " << res.best_j << ") lambda2 = " << fmt(res.lambda2_max)
        << " invNorm = " << fmt(res.inv_norm_min) << " (alpha/n = " << fmt(lambda2_floor(u.n())) << ")\n";
    if (!ok) out << "FAIL: best lambda2 below alpha/n\n";
  }
  return ok ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- lemma-scan

struct ScanArgs {
  std::string in;
  std::string out;
  int n = 0;
  int n_max = 0;
  int trials = 1000;
  std::uint64_t seed = 0;
  int bins = 10;
};

int run_lemma_scan(const ScanArgs& a, const Global& g, std::ostream& out, std::ostream& err) {
  Manifest m("lemma-scan", g.argv);
  m.seed("seed", a.seed);
  std::vector<RowConfig> single;
  if (!a.in.empty()) {
    m.input(a.in);
    single.push_back(RowConfig::make(io::config_vectors_from_json(io::read_json_file(a.in))));
  } else if (a.n < 3 || a.trials < 1 || (a.n_max != 0 && a.n_max < a.n)) {
    err << "lemma-scan: need --n >= 3 and --trials >= 1 (or --in config.json)\n";
    return kUsage;
  }

  std::mt19937_64 rng(a.seed);
  const int trials = single.empty() ? a.trials : 1;
  int violations = 0, chain_violations = 0;
  std::vector<double> min_entries;
  std::optional<json> worst;
  double worst_value = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < trials; ++t) {
    int n = a.n;
    if (a.n_max > a.n) n = std::uniform_int_distribution<int>(a.n, a.n_max)(rng);
    const RowConfig cfg = single.empty() ? random_config(n, rng()) : single.front();
    const Certificate cert = build_certificate(cfg);
    const InequalityChain chain = inequality_chain(cert);
    if (cert.min_entry.value > kNonpositiveTol) ++violations;
    if (!chain.lower_raw_holds || !chain.r2_holds) ++chain_violations;
    min_entries.push_back(cert.min_entry.value);
    if (cert.min_entry.value > worst_value) {
      worst_value = cert.min_entry.value;
      worst = io::certificate_dump(cert, chain);
      (*worst)["n"] = cfg.n();
      (*worst)["trial"] = t;
    }
  }

  const auto [lo_it, hi_it] = std::minmax_element(min_entries.begin(), min_entries.end());
  const double lo = *lo_it, hi = *hi_it;
  std::vector<double> edges;
  std::vector<int> counts(static_cast<std::size_t>(a.bins), 0);
  for (int b = 0; b <= a.bins; ++b) edges.push_back(lo + (hi - lo) * b / a.bins);
  for (double v : min_entries) {
    int b = hi > lo ? static_cast<int>((v - lo) / (hi - lo) * a.bins) : 0;
    ++counts[static_cast<std::size_t>(std::clamp(b, 0, a.bins - 1))];
  }

  json j{{"trials", trials},
         {"violations", violations},
         {"chainViolations", chain_violations},
         {"minEntryMin", lo},
         {"minEntryMax", hi},
         {"histogram", {{"edges", edges}, {"counts", counts}}},
         {"worst", *worst}};
  if (a.in.empty()) {
    j["n"] = a.n;
    if (a.n_max > a.n) j["nMax"] = a.n_max;
    j["seed"] = a.seed;
  }
  if (!a.out.empty()) {
    json file = j;
    m.output(a.out);
    file["manifest"] = m.to_json();
    io::write_text_file(a.out, file.dump(2) + "\n");
  }
  if (g.json) {
    j["manifest"] = m.to_json();
    emit(out, j);
  } else {
    out << "lemma-scan: " << trials << " configurations, " << violations << " with a positive certificate, "
        << chain_violations << " violating the F / R2 bounds\n"
        << "  min entry of M ranges over [" << fmt(lo) << ", " << fmt(hi) << "]\n";
    for (int b = 0; b < a.bins; ++b) {
      out << "  [" << std::setw(14) << fmt(edges[static_cast<std::size_t>(b)]) << ", " << std::setw(14)
          << fmt(edges[static_cast<std::size_t>(b) + 1]) << ") " << counts[static_cast<std::size_t>(b)] << "\n";
    }
  }
  return violations == 0 && chain_violations == 0 ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- extremal

struct ExtremalArgs {
  int n = 0;
  std::optional<std::uint64_t> rotate_seed;
  std::string out;
  std::string config_out;
};

int run_extremal(const ExtremalArgs& a, const Global& g, std::ostream& out) {
  Manifest m("extremal", g.argv);
  if (a.rotate_seed) m.seed("rotateSeed", *a.rotate_seed);
  std::optional<Rotation3> rot;
  if (a.rotate_seed) rot = random_rotation(*a.rotate_seed);
  const RowConfig cfg = tetrahedron_config(a.n, rot);
  const OrthoMatrix u = matrix_from_config(cfg);
  const OracleResult res = brute_force_best_pair(u, false, g.threads);
  const EqualityReport eq = validate_equality_case(cfg);
  const bool ok = std::abs(res.lambda2_max - lambda2_floor(a.n)) <= 1e-10 && eq.verdict == Verdict::Equality;

  m.output(a.out);
  if (!a.config_out.empty()) m.output(a.config_out);
  json mj = io::matrix_to_json(u);
  mj["manifest"] = m.to_json();
  io::write_text_file(a.out, mj.dump(2) + "\n");
  if (!a.config_out.empty()) {
    json cj = io::config_to_json(cfg);
    cj["manifest"] = m.to_json();
    io::write_text_file(a.config_out, cj.dump(2) + "\n");
  }
  if (g.json) {
    emit(out, json{{"n", a.n},
                   {"lambda2Max", res.lambda2_max},
                   {"alphaOverN", lambda2_floor(a.n)},
                   {"invNormMin", res.inv_norm_min},
                   {"verdict", to_string(eq.verdict)},
                   {"manifest", m.to_json()}});
  } else {
    out << "extremal n = " << a.n << ": lambda2Max = " << fmt(res.lambda2_max) << " (alpha/n = " << fmt(lambda2_floor(a.n))
        << "), invNormMin = " << fmt(res.inv_norm_min) << ", verdict " << to_string(eq.verdict) << "\n";
  }
  return ok ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- estimate

struct EstimateArgs {
  int n = 0;
  int sweep = 0;
  EstimateOptions opt;
  std::string out;
};

int run_estimate(EstimateArgs a, const Global& g, std::ostream& out, std::ostream& err) {
  Manifest m("estimate", g.argv);
  m.seed("seed", a.opt.seed);
  m.threads(g.threads);
  a.opt.threads = g.threads;
  if (a.sweep > 0) {
    if (a.out.empty()) {
      err << "estimate --sweep needs --out table.csv\n";
      return kUsage;
    }
    const std::vector<SweepRow> rows = tightness_sweep(a.sweep, a.opt);
    m.output(a.out);
    io::write_text_file(a.out, io::sweep_csv(rows));
    const std::string manifest_path = a.out + ".manifest.json";
    m.output(manifest_path);
    io::write_text_file(manifest_path, m.to_json().dump(2) + "\n");
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.a_estimate >= lambda2_floor(r.n) - 1e-9;
    if (g.json) {
      json table = json::array();
      for (const auto& r : rows) {
        table.push_back({{"n", r.n}, {"a_est", r.a_estimate}, {"b_est", r.b_estimate}, {"bound", r.bound},
                         {"ratio", r.ratio}, {"nondecreasing", r.nondecreasing}});
      }
      emit(out, json{{"rows", table}, {"manifest", m.to_json()}});
    } else {
      out << "n,a_est,b_est,bound,ratio,nondecreasing\n";
      for (const auto& r : rows) {
        out << r.n << ',' << fmt(r.a_estimate) << ',' << fmt(r.b_estimate) << ',' << fmt(r.bound) << ','
            << fmt(r.ratio) << ',' << (r.nondecreasing ? "yes" : "no") << "\n";
      }
    }
    return ok ? kOk : kBoundViolation;
  }
  if (a.n < 3 || a.opt.restarts < 1 || a.opt.iters < 0) {
    err << "estimate: need --n >= 3, --restarts >= 1, --iters >= 0 (or --sweep NMAX)\n";
    return kUsage;
  }
  const TightnessEstimate est = estimate_a_n(a.n, a.opt);
  const bool ok = est.a_estimate >= lambda2_floor(a.n) - 1e-9;
  json j = io::estimate_to_json(est);
  if (!a.out.empty()) m.output(a.out);
  j["manifest"] = m.to_json();
  if (!a.out.empty()) io::write_text_file(a.out, j.dump(2) + "\n");
  if (g.json) {
    emit(out, json{{"n", est.n}, {"aEstimate", est.a_estimate}, {"bEstimate", est.b_estimate}, {"ratio", est.ratio},
                   {"alphaOverN", lambda2_floor(a.n)}, {"manifest", j["manifest"]}});
  } else {
    out << "n = " << est.n << ": a_est = " << fmt(est.a_estimate) << " (alpha/n = " << fmt(lambda2_floor(a.n))
        << "), b_est = " << fmt(est.b_estimate) << ", ratio sqrt(n/alpha)/b_est = " << fmt(est.ratio) << "\n";
  }
  return ok ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- polygon-check

struct PolygonArgs {
  std::string in;
  bool normalize = false;
};

int run_polygon(const PolygonArgs& a, const Global& g, std::ostream& out) {
  Manifest m("polygon-check", g.argv);
  m.input(a.in);
  const Polygon poly = io::polygon_from_json(io::read_json_file(a.in), a.normalize);
  const CorollaryReport rep = check_corollary(poly);
  if (g.json) {
    json j = io::corollary_to_json(rep);
    j["manifest"] = m.to_json();
    emit(out, j);
  } else {
    out << "polygon with " << rep.n << " edges: max gap " << fmt(rep.max_gap) << " at (" << rep.best_i << ", "
        << rep.best_j << "), bound 2 alpha/n = " << fmt(rep.bound) << ", ratio " << fmt(rep.ratio) << ", verdict "
        << to_string(rep.equality.verdict) << "\n";
    if (!rep.holds) out << "FAIL: max gap below 2 alpha/n\n";
  }
  return rep.holds ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string in;
  std::string selection;
};

int run_verify(const VerifyArgs& a, const Global& g, std::ostream& out) {
  Manifest m("verify", g.argv);
  const OrthoMatrix u = load_matrix(a.in, m);
  m.input(a.selection);
  const Selection sel = io::selection_from_json(io::read_json_file(a.selection));
  const BoundReport rep = verify_bound(u, sel);
  if (g.json) {
    json j = io::bound_report_to_json(rep);
    j["manifest"] = m.to_json();
    emit(out, j);
  } else {
    out << (rep.pass ? "PASS" : "FAIL") << ": sigma2 = " << fmt(rep.sigma2_recomputed)
        << ", invNorm/bound = " << fmt(rep.ratio) << "\n";
    for (const auto& f : rep.failures) out << "  " << f << "\n";
  }
  return rep.pass ? kOk : kBoundViolation;
}

// ---------------------------------------------------------------- roundtrip

struct RoundtripArgs {
  std::string in;
  std::string out;
  std::string config_out;
};

int run_roundtrip(const RoundtripArgs& a, const Global& g, std::ostream& out) {
  Manifest m("roundtrip", g.argv);
  const OrthoMatrix u = load_matrix(a.in, m);
  const RowConfig cfg = config_from_matrix(u);
  const OrthoMatrix lifted = matrix_from_config(cfg);
  const RowConfig again = config_from_matrix(lifted);

  double lambda_diff = 0.0, cfg_diff = 0.0;
  for (int i = 0; i < u.n(); ++i) {
    cfg_diff = std::max(cfg_diff, (cfg.w(i) - again.w(i)).cwiseAbs().maxCoeff());
    for (int j = i + 1; j < u.n(); ++j) {
      lambda_diff = std::max(lambda_diff, std::abs(pair_lambda2(u.row(i), u.row(j)) - pair_lambda2(lifted.row(i), lifted.row(j))));
    }
  }
  const double transfer = transfer_identity_check(u);
  const double gapres = gap_consistency(u);
  const bool ok = lambda_diff <= 1e-10 && cfg_diff <= 1e-10 && transfer < 1e-11 && gapres < 1e-11;

  if (!a.out.empty()) write_json(a.out, io::matrix_to_json(lifted), m);
  if (!a.config_out.empty()) write_json(a.config_out, io::config_to_json(cfg), m);
  json j{{"n", u.n()},
         {"lambda2MaxDiff", lambda_diff},
         {"configDiff", cfg_diff},
         {"transferResidual", transfer},
         {"gapResidual", gapres},
         {"pass", ok}};
  if (g.json) {
    j["manifest"] = m.to_json();
    emit(out, j);
  } else {
    out << "roundtrip n = " << u.n() << ": max pair lambda2 change " << fmt(lambda_diff) << ", config change "
        << fmt(cfg_diff) << ", transfer residual " << fmt(transfer) << ", gap residual " << fmt(gapres) << " -> "
        << (ok ? "PASS" : "FAIL") << "\n";
  }
  return ok ? kOk : kBoundViolation;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return kIoError;
    case ErrorCode::NoNonpositiveEntry:
    case ErrorCode::CaseBPreconditionViolated: return kBoundViolation;
    default: return kValidationFailure;
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Global g;
  g.argv = args;

  CLI::App app{"Certified 2x2 submatrix selection for n x 2 orthonormal-column matrices", "bbinv"};
  app.set_version_flag("--version", std::string("bbinv ") + std::string(kToolVersion) + " (format " +
                                        std::string(kFormatVersion) + ")");
  app.add_flag("--json", g.json, "Machine-readable JSON on standard output");
  app.add_option("--threads", g.threads, "Worker threads for pair scans and restarts (default $BBINV_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  app.require_subcommand(1);

  SelectArgs sel;
  auto* c_select = app.add_subcommand("select", "Certified pair with inverse norm <= sqrt(n/alpha)");
  c_select->add_option("--in", sel.in, "Matrix JSON")->required();
  c_select->add_option("--out", sel.out, "Write the selection JSON here");
  c_select->add_flag("--trace", sel.trace, "Print the deflation / certificate path");

  OracleArgs orc;
  auto* c_oracle = app.add_subcommand("oracle", "Exhaustive best pair");
  c_oracle->add_option("--in", orc.in, "Matrix JSON")->required();
  c_oracle->add_option("--table", orc.table, "CSV of all pairs (i,j,lambda2)");

  ScanArgs scan;
  auto* c_scan = app.add_subcommand("lemma-scan", "Random configurations: certificate matrix sign scan");
  c_scan->add_option("--n", scan.n, "Number of vectors");
  c_scan->add_option("--n-max", scan.n_max, "Draw n uniformly from [n, n-max] per trial");
  c_scan->add_option("--trials", scan.trials, "Number of configurations");
  c_scan->add_option("--seed", scan.seed, "Seed");
  c_scan->add_option("--bins", scan.bins, "Histogram bins")->check(CLI::PositiveNumber);
  c_scan->add_option("--in", scan.in, "Scan a single config JSON instead");
  c_scan->add_option("--out", scan.out, "Write the scan report JSON here");

  ExtremalArgs ext;
  auto* c_ext = app.add_subcommand("extremal", "Equality-case matrix for 4 | n");
  c_ext->add_option("--n", ext.n, "Rows (multiple of 4)")->required();
  c_ext->add_option("--rotate-seed", ext.rotate_seed, "Apply a seeded random rotation");
  c_ext->add_option("--out", ext.out, "Matrix JSON")->required();
  c_ext->add_option("--config-out", ext.config_out, "Config JSON");

  EstimateArgs est;
  auto* c_est = app.add_subcommand("estimate", "Estimate a_n = inf_U max_pair lambda_2");
  c_est->add_option("--n", est.n, "Rows");
  c_est->add_option("--sweep", est.sweep, "Estimate every n = 3..NMAX and write a CSV table");
  c_est->add_option("--restarts", est.opt.restarts, "Restarts");
  c_est->add_option("--iters", est.opt.iters, "Iterations per restart");
  c_est->add_option("--seed", est.opt.seed, "Seed");
  c_est->add_flag("--warm-extremal,!--no-warm-extremal", est.opt.warm_extremal,
                 "For 4 | n also run once from the equality matrix (default on)");
  c_est->add_option("--out", est.out, "Estimate JSON (or CSV with --sweep)");

  PolygonArgs poly;
  auto* c_poly = app.add_subcommand("polygon-check", "Pairwise gap bound for a closed polygon of perimeter 2");
  c_poly->add_option("--in", poly.in, "Polygon JSON (edges or vertices)")->required();
  c_poly->add_flag("--normalize", poly.normalize, "Rescale to perimeter 2 first");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Recheck a selection against its matrix");
  c_ver->add_option("--in", ver.in, "Matrix JSON")->required();
  c_ver->add_option("--selection", ver.selection, "Selection JSON")->required();

  RoundtripArgs rt;
  auto* c_rt = app.add_subcommand("roundtrip", "Matrix -> Hopf config -> matrix consistency");
  c_rt->add_option("--in", rt.in, "Matrix JSON")->required();
  c_rt->add_option("--out", rt.out, "Lifted matrix JSON");
  c_rt->add_option("--config-out", rt.config_out, "Config JSON");

  for (auto* sub : app.get_subcommands([](const CLI::App*) { return true; })) sub->fallthrough();

  std::vector<std::string> argv_store{"bbinv"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << app.version() << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (c_select->parsed()) return run_select(sel, g, out);
    if (c_oracle->parsed()) return run_oracle(orc, g, out);
    if (c_scan->parsed()) return run_lemma_scan(scan, g, out, err);
    if (c_ext->parsed()) return run_extremal(ext, g, out);
    if (c_est->parsed()) return run_estimate(est, g, out, err);
    if (c_poly->parsed()) return run_polygon(poly, g, out);
    if (c_ver->parsed()) return run_verify(ver, g, out);
    if (c_rt->parsed()) return run_roundtrip(rt, g, out);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kValidationFailure;
  }
  err << app.help();
  return kUsage;
}

}  // namespace bbinv::cli
