#pragma once

// Numerical estimates of
//   a_n = inf over orthonormal-column U of max_{i != j} lambda_2(Gamma_ij),
//   b_n = 1 / sqrt(a_n),
// by derivative-free perturb-and-retract search on the Stiefel manifold.

#include <cstdint>
#include <vector>

#include "bbinv/linalg.hpp"

namespace bbinv {

struct EstimateOptions {
  int restarts = 8;
  int iters = 5000;
  std::uint64_t seed = 0;
  /// For 4 | n, one extra run (index `restarts`) starts from
  /// extremal_matrix(n) in addition to the random restarts.
  bool warm_extremal = true;
  int threads = 1;
  double initial_step = 0.0;  // 0 selects 0.5 / sqrt(n)
  int patience = 50;          // consecutive rejections before halving
  double step_floor = 1e-9;
  /// Moves are accepted when T log sum exp(lambda_2 / T) decreases; T falls
  /// geometrically from smoothing_start to smoothing_end (in units of
  /// alpha / n) over the run. The reported value is always the true maximum.
  double smoothing_start = 0.05;
  double smoothing_end = 1e-6;
};

struct IterationRecord {
  int restart = 0;
  int iter = 0;  // 0 is the starting point
  double value = 0.0;
  double step = 0.0;
};

struct TightnessEstimate {
  int n = 0;
  double a_estimate = 0.0;
  double b_estimate = 0.0;  // 1 / sqrt(a_estimate)
  double ratio = 0.0;       // sqrt(n / alpha) / b_estimate
  int restarts = 0;      // random restarts; the warm run is not counted
  int best_restart = 0;  // == restarts when the warm run won
  OrthoMatrix best_matrix;
  /// Starting value and every accepted move, grouped by restart.
  std::vector<IterationRecord> log;
};

/// Deterministic for fixed (n, options) regardless of options.threads.
TightnessEstimate estimate_a_n(int n, const EstimateOptions& options);

/// Objective max_{i<j} lambda_2 of a candidate.
double max_pair_lambda2(const OrthoMatrix& u);

struct SweepRow {
  int n = 0;
  double a_estimate = 0.0;
  double b_estimate = 0.0;
  double bound = 0.0;  // sqrt(n / alpha)
  double ratio = 0.0;
  /// b_n >= b_{n-1} (1 - 1e-3); reported, not enforced. True for n = 3.
  bool nondecreasing = true;
};

/// Rows for n = 3..n_max; each n uses seed options.seed + n.
std::vector<SweepRow> tightness_sweep(int n_max, const EstimateOptions& options);

}  // namespace bbinv
