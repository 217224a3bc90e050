#include "bbinv/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>

#include "bbinv/error.hpp"
#include "bbinv/extremal.hpp"
#include "bbinv/oracle.hpp"
#include "bbinv/parallel.hpp"

namespace bbinv {

namespace {

constexpr double kIterateTol = 1e-9;

struct RestartResult {
  double value;
  OrthoMatrix matrix;
  std::vector<IterationRecord> log;
};

std::mt19937_64 restart_stream(std::uint64_t seed, int n, int restart) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(restart)};
  return std::mt19937_64(seq);
}

// Smoothed maximum T log sum exp(lambda_2 / T) over all pairs, together with
// the true maximum.
struct Objective {
  double smooth;
  double max;
};

Objective evaluate(const OrthoMatrix& u, double temperature) {
  const auto rows = u.rows();
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * (n - 1) / 2);
  double top = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      values.push_back(pair_lambda2(rows[i], rows[j]));
      top = std::max(top, values.back());
    }
  }
  double acc = 0.0;
  for (double v : values) acc += std::exp((v - top) / temperature);
  return {top + temperature * std::log(acc), top};
}

RestartResult run_restart(int n, const EstimateOptions& opt, int restart) {
  std::mt19937_64 rng = restart_stream(opt.seed, n, restart);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));

  const bool warm = restart == opt.restarts;
  OrthoMatrix cur = warm ? extremal_matrix(n) : random_ortho(n, rng());
  const double scale = kAlpha / n;
  const double t_hi = opt.smoothing_start * scale;
  const double t_lo = opt.smoothing_end * scale;
  auto temperature_at = [&](int it) {
    if (opt.iters <= 0 || t_hi <= 0.0) return t_lo;
    return t_hi * std::pow(t_lo / t_hi, static_cast<double>(it) / opt.iters);
  };
  const double initial_step = opt.initial_step > 0.0 ? opt.initial_step : 0.5 / std::sqrt(static_cast<double>(n));
  double step = initial_step;

  Objective obj = evaluate(cur, temperature_at(0));
  RestartResult out{obj.max, cur, {}};
  out.log.push_back({restart, 0, obj.max, step});
  int rejections = 0;
  for (int it = 1; it <= opt.iters; ++it) {
    const double temperature = temperature_at(it);
    obj = evaluate(cur, temperature);

    RawMatrix rows = cur.raw();
    // Alternate between moving every row and moving a single row.
    const bool single = (it & 1) == 0;
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, rows.size() - 1)(rng);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (single && k != pick) continue;
      for (auto& z : rows[k]) {
        const double re = normal(rng), im = normal(rng);
        z += step * Complex(re, im);
      }
    }
    std::optional<OrthoMatrix> cand;
    try {
      cand = validate_ortho(orthonormalize(std::move(rows)), kIterateTol);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateSample) throw;
    }
    const std::optional<Objective> cand_obj = cand ? std::optional(evaluate(*cand, temperature)) : std::nullopt;
    if (cand_obj && cand_obj->smooth < obj.smooth) {
      cur = std::move(*cand);
      rejections = 0;
      step = std::min(1.25 * step, initial_step);
      if (cand_obj->max < out.value) {
        out.value = cand_obj->max;
        out.matrix = cur;
        out.log.push_back({restart, it, out.value, step});
      }
    } else if (++rejections >= opt.patience) {
      step = std::max(0.5 * step, opt.step_floor);
      rejections = 0;
    }
  }
  return out;
}

}  // namespace

double max_pair_lambda2(const OrthoMatrix& u) { return best_pair(u.rows()).lambda2; }

TightnessEstimate estimate_a_n(int n, const EstimateOptions& options) {
  if (n < 3) throw Error(ErrorCode::TooFewRows, "need n >= 3");
  if (options.restarts < 1) throw Error(ErrorCode::PreconditionViolated, "restarts must be >= 1");

  const int runs = options.restarts + (options.warm_extremal && n % 4 == 0 ? 1 : 0);
  std::vector<std::optional<RestartResult>> results(static_cast<std::size_t>(runs));
  parallel_tasks(runs, options.threads,
                 [&](int r) { results[static_cast<std::size_t>(r)] = run_restart(n, options, r); });

  int best = 0;
  for (int r = 1; r < runs; ++r) {
    if (results[static_cast<std::size_t>(r)]->value < results[static_cast<std::size_t>(best)]->value) best = r;
  }
  const RestartResult& winner = *results[static_cast<std::size_t>(best)];
  const double a = winner.value;
  const double b = 1.0 / std::sqrt(a);
  TightnessEstimate est{.n = n,
                        .a_estimate = a,
                        .b_estimate = b,
                        .ratio = inverse_norm_bound(n) / b,
                        .restarts = options.restarts,
                        .best_restart = best,
                        .best_matrix = winner.matrix,
                        .log = {}};
  for (const auto& res : results) est.log.insert(est.log.end(), res->log.begin(), res->log.end());
  return est;
}

std::vector<SweepRow> tightness_sweep(int n_max, const EstimateOptions& options) {
  if (n_max < 4) throw Error(ErrorCode::PreconditionViolated, "sweep needs n_max >= 4");
  std::vector<SweepRow> rows;
  for (int n = 3; n <= n_max; ++n) {
    EstimateOptions opt = options;
    opt.seed = options.seed + static_cast<std::uint64_t>(n);
    const TightnessEstimate est = estimate_a_n(n, opt);
    SweepRow row{n, est.a_estimate, est.b_estimate, inverse_norm_bound(n), est.ratio, true};
    if (!rows.empty()) row.nondecreasing = row.b_estimate >= rows.back().b_estimate * (1.0 - 1e-3);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace bbinv
