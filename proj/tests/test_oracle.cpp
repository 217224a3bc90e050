#include <cmath>

#include "doctest.h"
#include "reference.hpp"

#include "bbinv/extremal.hpp"
#include "bbinv/oracle.hpp"
#include "bbinv/selection.hpp"

using namespace bbinv;

namespace {

const double a = ref::kAlpha;

OrthoMatrix identity3() {
  return validate_ortho({{Complex(1), Complex(0)}, {Complex(0), Complex(1)}, {Complex(0), Complex(0)}});
}

}  // namespace

TEST_CASE("identity embedding") {
  const OracleResult r = brute_force_best_pair(identity3());
  CHECK(r.best_i == 0);
  CHECK(r.best_j == 1);
  CHECK(r.lambda2_max == doctest::Approx(1.0));
  CHECK(r.inv_norm_min == doctest::Approx(1.0));
  CHECK(r.table.empty());
}

TEST_CASE("n=4 equality matrix: every pair sits at alpha/4 up to rounding") {
  const OracleResult r = brute_force_best_pair(extremal_matrix(4), true);
  CHECK(std::abs(r.lambda2_max - a / 4) < 1e-12);
  CHECK(std::abs(r.lambda2_max - 0.21132487) < 1e-8);
  REQUIRE(r.table.size() == 6);
  for (const auto& p : r.table) CHECK(std::abs(p.lambda2 - a / 4) < 1e-12);
  // The reported pair is the first one in (i, j) order reaching the maximum.
  for (const auto& p : r.table) {
    if (p.lambda2 == r.lambda2_max) {
      CHECK(p.i == r.best_i);
      CHECK(p.j == r.best_j);
      break;
    }
  }
}

TEST_CASE("exact ties go to the first pair") {
  // Dyadic entries: pairs (0,1) and (2,3) both have a double eigenvalue 1/2.
  const Complex h(0.5, 0.0), ih(0.0, 0.5);
  const RawMatrix rows{{h, h}, {h, -h}, {h, ih}, {h, -ih}};
  const OracleResult r = brute_force_best_pair(validate_ortho(rows), true);
  REQUIRE(r.table.front().lambda2 == r.table.back().lambda2);
  CHECK(r.lambda2_max == 0.5);
  CHECK(r.best_i == 0);
  CHECK(r.best_j == 1);
  const OracleResult swapped = brute_force_best_pair(validate_ortho({rows[2], rows[3], rows[0], rows[1]}));
  CHECK(swapped.best_i == 0);
  CHECK(swapped.best_j == 1);
}

TEST_CASE("n=8 equality matrix: collinear clusters and cross pairs") {
  const OrthoMatrix u = extremal_matrix(8);
  const OracleResult r = brute_force_best_pair(u, true);
  CHECK(std::abs(r.lambda2_max - a / 8) < 1e-12);
  for (const auto& p : r.table) {
    if (p.i / 2 == p.j / 2) {
      CHECK(p.lambda2 < 1e-14);
    } else {
      CHECK(std::abs(p.lambda2 - a / 8) < 1e-12);
    }
  }
}

TEST_CASE("oracle matches an SVD scan, table is complete and ordered") {
  for (int n : {3, 6, 17, 40}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const OrthoMatrix u = random_ortho(n, seed + 8);
      const OracleResult r = brute_force_best_pair(u, true);
      const ref::Best b = ref::best_pair_svd(u.raw());
      CHECK(std::abs(r.lambda2_max - b.lambda2) < 1e-13);
      CHECK(r.inv_norm_min == doctest::Approx(1.0 / std::sqrt(r.lambda2_max)));
      CHECK(r.table.size() == static_cast<std::size_t>(n * (n - 1) / 2));
      std::size_t k = 0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
          CHECK(r.table[k].i == i);
          CHECK(r.table[k].j == j);
        }
      }
      CHECK(r.lambda2_max >= a / n - 1e-12);
    }
  }
}

TEST_CASE("thread count does not change the answer") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const OrthoMatrix u = random_ortho(57, seed);
    const OracleResult one = brute_force_best_pair(u, true, 1);
    for (int t : {2, 3, 8}) {
      const OracleResult many = brute_force_best_pair(u, true, t);
      CHECK(many.best_i == one.best_i);
      CHECK(many.best_j == one.best_j);
      CHECK(many.lambda2_max == one.lambda2_max);
      CHECK(many.table.size() == one.table.size());
    }
  }
  // Ties: the equality matrix has many equal maxima.
  const OrthoMatrix e = extremal_matrix(16);
  const OracleResult e1 = brute_force_best_pair(e, false, 1);
  const OracleResult e4 = brute_force_best_pair(e, false, 4);
  CHECK(e1.best_i == e4.best_i);
  CHECK(e1.best_j == e4.best_j);
}

TEST_CASE("permuting rows permutes the maximizer and keeps the value") {
  const int n = 12;
  const OrthoMatrix u = random_ortho(n, 21);
  std::vector<int> perm(n);
  for (int k = 0; k < n; ++k) perm[static_cast<std::size_t>(k)] = (7 * k + 2) % n;
  const OracleResult r = brute_force_best_pair(u);
  const OracleResult p = brute_force_best_pair(u.permuted(perm));
  CHECK(p.lambda2_max == r.lambda2_max);
  const int pi = perm[static_cast<std::size_t>(p.best_i)], pj = perm[static_cast<std::size_t>(p.best_j)];
  CHECK(std::min(pi, pj) == r.best_i);
  CHECK(std::max(pi, pj) == r.best_j);
}

TEST_CASE("compare_with_certified") {
  const GapReport e = compare_with_certified(extremal_matrix(4));
  CHECK(e.ratio == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.consistent);
  const GapReport id = compare_with_certified(identity3());
  CHECK(id.ratio == doctest::Approx(1.0));
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const OrthoMatrix u = random_ortho(30, seed);
    const GapReport g = compare_with_certified(u);
    CHECK(g.consistent);
    CHECK(g.ratio <= 1.0 + 1e-12);
    const Selection s = select_certified(u);
    CHECK(1.0 / std::sqrt(g.oracle_lambda2) <= s.inv_norm + 1e-12);
  }
}

TEST_CASE("best_pair on raw rows agrees with the validated scan") {
  const OrthoMatrix u = random_ortho(10, 2);
  const PairValue p = best_pair(u.rows());
  const OracleResult r = brute_force_best_pair(u);
  CHECK(p.i == r.best_i);
  CHECK(p.j == r.best_j);
  CHECK(p.lambda2 == r.lambda2_max);
}
