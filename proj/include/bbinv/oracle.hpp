#pragma once

// Exhaustive scan of all row pairs for the largest Gram lambda_2, i.e. the
// 2 x 2 submatrix with the smallest inverse spectral norm.

#include <span>
#include <vector>

#include "bbinv/linalg.hpp"

namespace bbinv {

struct PairValue {
  int i = 0;
  int j = 0;
  double lambda2 = 0.0;
};

struct OracleResult {
  int best_i = 0;
  int best_j = 1;
  double lambda2_max = 0.0;
  double inv_norm_min = 0.0;  // 1 / sqrt(lambda2_max)
  std::vector<PairValue> table;  // filled only on request, order i < j
};

/// Pairs are visited with i < j in lexicographic order and the maximizer is
/// replaced only on a strictly larger value. With threads > 1 the scan is
/// split into row blocks whose winners are merged in block order, which
/// reproduces the sequential answer.
OracleResult brute_force_best_pair(const OrthoMatrix& u, bool keep_table = false, int threads = 1);

/// Same scan on unvalidated rows (n >= 2).
PairValue best_pair(std::span<const Row> rows, int threads = 1);

struct GapReport {
  double oracle_lambda2 = 0.0;
  double certified_lambda2 = 0.0;
  double ratio = 0.0;  // certified / oracle
  bool consistent = false;  // certified <= oracle + 1e-12
};

GapReport compare_with_certified(const OrthoMatrix& u);

}  // namespace bbinv
