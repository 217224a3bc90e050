#pragma once

// Certified choice of a 2 x 2 submatrix whose inverse has spectral norm at
// most sqrt(n / alpha).
//
// Small rows (||u_i||^2 <= alpha / n) are deflated: rotate the row onto the
// first axis, drop it, rescale the first column by t = 1 / sqrt(1 - v^2) and
// recurse. Each deflation loses at most a factor t^2 in lambda_2 while the
// bound for n - 1 rows is larger by enough to keep the result strictly above
// alpha / n. When every row is large the certificate matrix has a
// nonpositive off-diagonal entry, and that pair is returned. Three rows are
// solved by exhaustive scan.

#include <string>
#include <variant>
#include <vector>

#include "bbinv/linalg.hpp"

namespace bbinv {

/// Deflation of one small row. `removed_row` is an original row label.
struct CaseAStep {
  int removed_row = 0;
  double v = 0.0;
  double t = 1.0;
  bool zero_row = false;  // deleted without rotation
};

struct CaseBStep {
  double m_ij = 0.0;
};

struct BaseCaseStep {
  int n = 3;
};

using PathStep = std::variant<CaseAStep, CaseBStep, BaseCaseStep>;

struct Selection {
  int n = 0;
  int i = 0;  // original row labels, i < j
  int j = 1;
  double sigma2 = 0.0;
  double inv_norm = 0.0;
  double bound = 0.0;  // sqrt(n / alpha)
  std::vector<PathStep> path;

  int case_a_depth() const;
};

Selection select_certified(const OrthoMatrix& u);

struct CaseAResult {
  OrthoMatrix reduced;
  double v = 0.0;
  double t = 1.0;
  /// index_map[k] is the row of the input that became row k of `reduced`.
  std::vector<int> index_map;
  bool reorthonormalized = false;
};

/// Requires 0 < ||u_i||^2 <= alpha / n; throws PreconditionViolated otherwise.
CaseAResult case_a_step(const OrthoMatrix& u, int i);

struct BoundReport {
  bool pass = false;
  double sigma2_recomputed = 0.0;
  double sigma2_residual = 0.0;   // |recomputed - reported|
  double inv_norm_recomputed = 0.0;
  double bound = 0.0;
  double ratio = 0.0;             // inv_norm_recomputed / bound
  std::vector<std::string> failures;
};

/// Recomputes sigma_2 of the reported pair from scratch and checks every
/// Selection invariant. Never throws for a bad selection; the report carries
/// the failures.
BoundReport verify_bound(const OrthoMatrix& u, const Selection& sel);

}  // namespace bbinv
