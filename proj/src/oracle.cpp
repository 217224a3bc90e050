#include "bbinv/oracle.hpp"

#include <cmath>
#include <limits>

#include "bbinv/error.hpp"
#include "bbinv/parallel.hpp"
#include "bbinv/selection.hpp"

namespace bbinv {

namespace {

PairValue scan_rows(std::span<const Row> rows, int first, int last) {
  const int n = static_cast<int>(rows.size());
  PairValue best{-1, -1, -std::numeric_limits<double>::infinity()};
  for (int i = first; i < last; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double l2 = pair_lambda2(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
      if (l2 > best.lambda2) best = {i, j, l2};
    }
  }
  return best;
}

}  // namespace

PairValue best_pair(std::span<const Row> rows, int threads) {
  const int n = static_cast<int>(rows.size());
  if (n < 2) throw Error(ErrorCode::TooFewRows, "need at least two rows");
  if (threads <= 1) return scan_rows(rows, 0, n - 1);

  const int blocks = std::min(n - 1, 4 * threads);
  std::vector<PairValue> winners(static_cast<std::size_t>(blocks));
  parallel_tasks(blocks, threads, [&](int b) {
    const int first = static_cast<int>(static_cast<long long>(n - 1) * b / blocks);
    const int last = static_cast<int>(static_cast<long long>(n - 1) * (b + 1) / blocks);
    winners[static_cast<std::size_t>(b)] = scan_rows(rows, first, last);
  });
  PairValue best = winners.front();
  for (const auto& w : winners) {
    if (w.lambda2 > best.lambda2) best = w;
  }
  return best;
}

OracleResult brute_force_best_pair(const OrthoMatrix& u, bool keep_table, int threads) {
  const PairValue best = best_pair(u.rows(), threads);
  OracleResult out;
  out.best_i = best.i;
  out.best_j = best.j;
  out.lambda2_max = best.lambda2;
  out.inv_norm_min = best.lambda2 > 0.0 ? 1.0 / std::sqrt(best.lambda2) : std::numeric_limits<double>::infinity();
  if (keep_table) {
    const int n = u.n();
    out.table.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2);
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) out.table.push_back({i, j, pair_lambda2(u.row(i), u.row(j))});
    }
  }
  return out;
}

GapReport compare_with_certified(const OrthoMatrix& u) {
  const OracleResult oracle = brute_force_best_pair(u);
  const Selection sel = select_certified(u);
  GapReport g;
  g.oracle_lambda2 = oracle.lambda2_max;
  g.certified_lambda2 = sel.sigma2 * sel.sigma2;
  g.ratio = g.oracle_lambda2 > 0.0 ? g.certified_lambda2 / g.oracle_lambda2 : 0.0;
  g.consistent = g.certified_lambda2 <= g.oracle_lambda2 + 1e-12;
  return g;
}

}  // namespace bbinv
