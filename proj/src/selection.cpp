#include "bbinv/selection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "bbinv/certificate.hpp"
#include "bbinv/error.hpp"
#include "bbinv/hopf.hpp"
#include "bbinv/oracle.hpp"

namespace bbinv {

namespace {

constexpr double kReorthonormalizeAbove = 1e-11;
constexpr double kReducedTol = 1e-9;

RawMatrix without_row(const OrthoMatrix& u, int skip, std::vector<int>& index_map) {
  RawMatrix rows;
  rows.reserve(static_cast<std::size_t>(u.n() - 1));
  index_map.clear();
  for (int k = 0; k < u.n(); ++k) {
    if (k == skip) continue;
    rows.push_back(u.row(k));
    index_map.push_back(k);
  }
  return rows;
}

// Row with the smallest norm among those at or below alpha / n, or -1.
int smallest_small_row(const OrthoMatrix& u) {
  const double threshold = kAlpha / u.n();
  int pick = -1;
  double pick_norm = 0.0;
  for (int k = 0; k < u.n(); ++k) {
    const double nk = u.row_norm2(k);
    if (nk <= threshold && (pick < 0 || nk < pick_norm)) {
      pick = k;
      pick_norm = nk;
    }
  }
  return pick;
}

}  // namespace

int Selection::case_a_depth() const {
  return static_cast<int>(std::count_if(path.begin(), path.end(),
                                        [](const PathStep& s) { return std::holds_alternative<CaseAStep>(s); }));
}

CaseAResult case_a_step(const OrthoMatrix& u, int i) {
  if (i < 0 || i >= u.n()) throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i));
  const double norm2 = u.row_norm2(i);
  if (!(norm2 > 0.0)) throw Error(ErrorCode::PreconditionViolated, "row " + std::to_string(i) + " is zero");
  if (!(norm2 <= kAlpha / u.n())) {
    throw Error(ErrorCode::PreconditionViolated, "row " + std::to_string(i) + " has ||u||^2 = " + std::to_string(norm2) + " > alpha/n");
  }
  if (u.n() <= 3) throw Error(ErrorCode::PreconditionViolated, "cannot deflate below three rows");

  const RowRotation rot = rotate_row_to_axis(u, i);
  CaseAResult out{rot.v_matrix, rot.v, 1.0 / std::sqrt(1.0 - rot.v * rot.v), {}, false};
  RawMatrix rows = without_row(rot.v_matrix, i, out.index_map);
  for (auto& r : rows) r[0] *= out.t;
  if (ortho_deviation(rows) > kReorthonormalizeAbove) {
    rows = orthonormalize(std::move(rows));
    out.reorthonormalized = true;
  }
  out.reduced = validate_ortho(std::move(rows), kReducedTol);
  return out;
}

Selection select_certified(const OrthoMatrix& u) {
  Selection sel;
  sel.n = u.n();
  sel.bound = inverse_norm_bound(u.n());

  OrthoMatrix cur = u;
  std::vector<int> labels(static_cast<std::size_t>(u.n()));
  std::iota(labels.begin(), labels.end(), 0);
  int pi = 0, pj = 1;

  while (true) {
    if (cur.n() == 3) {
      const PairValue best = best_pair(cur.rows());
      pi = best.i;
      pj = best.j;
      sel.path.emplace_back(BaseCaseStep{3});
      break;
    }
    const int small = smallest_small_row(cur);
    if (small >= 0) {
      std::vector<int> map;
      const int removed = labels[static_cast<std::size_t>(small)];
      if (cur.row_norm2(small) == 0.0) {
        RawMatrix rows = without_row(cur, small, map);
        cur = validate_ortho(std::move(rows), std::max(kTolOrth, cur.deviation()));
        sel.path.emplace_back(CaseAStep{removed, 0.0, 1.0, true});
      } else {
        CaseAResult step = case_a_step(cur, small);
        map = std::move(step.index_map);
        cur = std::move(step.reduced);
        sel.path.emplace_back(CaseAStep{removed, step.v, step.t, false});
      }
      std::vector<int> next;
      next.reserve(map.size());
      for (int k : map) next.push_back(labels[static_cast<std::size_t>(k)]);
      labels = std::move(next);
      continue;
    }
    const RowConfig cfg = config_from_matrix(cur);
    const CaseBChoice choice = select_case_b(cfg);
    pi = choice.i;
    pj = choice.j;
    sel.path.emplace_back(CaseBStep{choice.m_ij});
    break;
  }

  sel.i = labels[static_cast<std::size_t>(pi)];
  sel.j = labels[static_cast<std::size_t>(pj)];
  if (sel.i > sel.j) std::swap(sel.i, sel.j);
  const PairGram g = pair_gram(u, sel.i, sel.j);
  sel.sigma2 = g.sigma2();
  sel.inv_norm = g.inv_norm();
  return sel;
}

BoundReport verify_bound(const OrthoMatrix& u, const Selection& sel) {
  BoundReport rep;
  rep.bound = inverse_norm_bound(u.n());
  if (sel.n != u.n()) rep.failures.push_back("selection was made for n = " + std::to_string(sel.n));
  if (sel.i < 0 || sel.j < 0 || sel.i >= u.n() || sel.j >= u.n() || sel.i == sel.j) {
    rep.failures.push_back("invalid row pair (" + std::to_string(sel.i) + ", " + std::to_string(sel.j) + ")");
    return rep;
  }
  const PairGram g = pair_gram(u, sel.i, sel.j);
  rep.sigma2_recomputed = g.sigma2();
  rep.inv_norm_recomputed = g.inv_norm();
  rep.sigma2_residual = std::abs(rep.sigma2_recomputed - sel.sigma2);
  rep.ratio = rep.inv_norm_recomputed / rep.bound;

  if (std::abs(sel.sigma2 * sel.sigma2 - g.lambda2) > 1e-12) {
    rep.failures.push_back("sigma2^2 = " + diag_num(sel.sigma2 * sel.sigma2) + " but recomputed lambda_2 = " +
                           diag_num(g.lambda2));
  }
  if (!(sel.sigma2 > 0.0) || std::abs(sel.inv_norm * sel.sigma2 - 1.0) > 1e-12) {
    rep.failures.push_back("invNorm is not 1 / sigma2");
  }
  if (std::abs(sel.bound - rep.bound) > 1e-12 * rep.bound) {
    rep.failures.push_back("reported bound differs from sqrt(n / alpha)");
  }
  if (!(rep.inv_norm_recomputed <= rep.bound * (1.0 + 1e-9))) {
    rep.failures.push_back("inverse norm " + diag_num(rep.inv_norm_recomputed) + " exceeds bound " +
                           diag_num(rep.bound));
  }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace bbinv
