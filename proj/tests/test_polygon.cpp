#include <cmath>

#include "doctest.h"
#include "reference.hpp"

#include "bbinv/error.hpp"
#include "bbinv/extremal.hpp"
#include "bbinv/polygon.hpp"

using namespace bbinv;

namespace {

const double a = ref::kAlpha;

double naive_gap(const Vec3& x, const Vec3& y) { return x.norm() + y.norm() - (x + y).norm(); }

/// Equilateral planar polygon with n edges, perimeter 2.
std::vector<Vec3> planar_regular(int n) {
  std::vector<Vec3> e;
  for (int k = 0; k < n; ++k) {
    const double phi = 2.0 * M_PI * k / n;
    e.emplace_back(std::cos(phi) * 2.0 / n, std::sin(phi) * 2.0 / n, 0.0);
  }
  return e;
}

}  // namespace

TEST_CASE("gap on simple pairs") {
  CHECK(gap(Vec3(0, 0, 0.3), Vec3(0, 0, 0.7)) == 0.0);
  CHECK(gap(Vec3(0, 0, 0.5), Vec3(0, 0, -0.5)) == doctest::Approx(1.0).epsilon(1e-15));
  const auto d = ref::tetra_dirs();
  CHECK(std::abs(gap(0.5 * d[0], 0.5 * d[1]) - (1 - 1 / std::sqrt(3.0))) < 1e-15);
  CHECK(std::abs(gap(0.5 * d[0], 0.5 * d[1]) - 2 * a / 4) < 1e-15);
  CHECK(gap(Vec3::Zero(), Vec3(1, 2, 3)) == 0.0);
}

TEST_CASE("gap of a vector with itself is exactly zero and gaps are never negative") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g(0.0, 1.0);
  for (int k = 0; k < 2000; ++k) {
    const Vec3 x(g(rng), g(rng), g(rng));
    CHECK(gap(x, x) == 0.0);
    const Vec3 y(g(rng), g(rng), g(rng));
    CHECK(gap(x, y) >= -1e-14);
    CHECK(gap(x, y) == doctest::Approx(naive_gap(x, y)).epsilon(1e-9).scale(1.0));
  }
}

TEST_CASE("gap keeps its digits for nearly parallel long edges") {
  // x and y = x + d with |d| tiny and orthogonal to x: exact gap is
  // |x| + sqrt(|x|^2 + |d|^2) - sqrt(4|x|^2 + |d|^2) ~ |d|^2 / (4|x|).
  const Vec3 x(10.0, 0.0, 0.0);
  for (double eps : {1e-4, 1e-6, 1e-7}) {
    const Vec3 y(10.0, eps, 0.0);
    const double expected = eps * eps / (4.0 * 10.0);
    CHECK(gap(x, y) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("tetrahedron polygon is an equality case") {
  const Polygon p = Polygon::from_edges(tetrahedron_config(4).w());
  const CorollaryReport r = check_corollary(p);
  CHECK(std::abs(r.max_gap - 2 * a / 4) < 1e-12);
  CHECK(r.holds);
  CHECK(r.equality.verdict == Verdict::Equality);
  CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("random polygons satisfy the bound, checked by an independent scan") {
  for (int n = 3; n <= 50; ++n) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const std::vector<Vec3> e = ref::random_edges(n, seed * 100 + static_cast<std::uint64_t>(n));
      const CorollaryReport r = check_corollary(Polygon::from_edges(e));
      double best = -1.0;
      for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
          best = std::max(best, naive_gap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]));
        }
      }
      CHECK(r.max_gap == doctest::Approx(best).epsilon(1e-10));
      CHECK(r.max_gap >= 2 * a / n - 1e-10);
      CHECK(r.holds);
      CHECK(r.bound == doctest::Approx(2 * a / n));
    }
  }
}

TEST_CASE("planar regular polygons stay strictly above the bound") {
  for (int n : {4, 6, 8, 10, 12, 20}) {
    const CorollaryReport r = check_corollary(Polygon::from_edges(planar_regular(n)));
    CHECK(r.max_gap > 2 * a / n + 1e-6);
    CHECK(r.equality.verdict == Verdict::NotEquality);
  }
}

TEST_CASE("edge order does not matter") {
  std::vector<Vec3> e = ref::random_edges(11, 5);
  const double before = check_corollary(Polygon::from_edges(e)).max_gap;
  std::reverse(e.begin(), e.end());
  std::rotate(e.begin(), e.begin() + 4, e.end());
  CHECK(check_corollary(Polygon::from_edges(e)).max_gap == before);
}

TEST_CASE("vertex input and normalization") {
  const std::vector<Vec3> verts{Vec3(0, 0, 0), Vec3(3, 0, 0), Vec3(3, 4, 0)};
  const Polygon p = Polygon::from_vertices(verts, true);
  CHECK(p.n() == 3);
  CHECK(p.edges().perimeter_residual() < 1e-15);
  // Edges 3-4-5 scaled by 2/12.
  CHECK(p.edges().r(0) == doctest::Approx(0.5));
  CHECK(p.edges().r(1) == doctest::Approx(4.0 / 6));
  CHECK(p.edges().r(2) == doctest::Approx(5.0 / 6));
  CHECK_THROWS_AS(Polygon::from_vertices(verts, false), Error);
  CHECK_THROWS_AS(Polygon::from_edges({Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 0)}, true), Error);
  try {
    Polygon::from_edges({Vec3(0, 0, 1), Vec3(0, 0, -1)});
    FAIL("expected PolygonInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PolygonInvalid);
  }
}

TEST_CASE("gap consistency with the matrix side") {
  const OrthoMatrix id = validate_ortho({{Complex(1), Complex(0)}, {Complex(0), Complex(1)}, {Complex(0), Complex(0)}});
  CHECK(gap_consistency(id) == 0.0);
  CHECK(gap_consistency(random_ortho(20, 6)) < 1e-12);
  CHECK(gap_consistency(extremal_matrix(4)) < 1e-14);
}

TEST_CASE("Hopf images of matrix rows are valid polygons meeting the bound") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const int n = 3 + static_cast<int>(seed % 20);
    const OrthoMatrix u = random_ortho(n, seed);
    std::vector<Vec3> w;
    for (int i = 0; i < n; ++i) w.push_back(ref::hopf(u.row(i)));
    CHECK(check_corollary(Polygon::from_edges(w)).max_gap >= 2 * a / n - 1e-10);
  }
}
