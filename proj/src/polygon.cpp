#include "bbinv/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bbinv/error.hpp"

namespace bbinv {

namespace {

RowConfig make_edges(std::vector<Vec3> edges, bool normalize) {
  if (edges.size() < 3) throw Error(ErrorCode::PolygonInvalid, "need at least three edges");
  for (const auto& e : edges) {
    if (!e.allFinite()) throw Error(ErrorCode::PolygonInvalid, "non-finite edge");
  }
  if (normalize) {
    double perimeter = 0.0;
    for (const auto& e : edges) perimeter += length(e);
    if (!(perimeter > 0.0)) throw Error(ErrorCode::PolygonInvalid, "zero perimeter");
    for (auto& e : edges) e *= 2.0 / perimeter;
  }
  try {
    return RowConfig::make(std::move(edges));
  } catch (const Error& e) {
    throw Error(ErrorCode::PolygonInvalid, e.what());
  }
}

}  // namespace

Polygon Polygon::from_edges(std::vector<Vec3> edges, bool normalize) {
  return Polygon(make_edges(std::move(edges), normalize));
}

Polygon Polygon::from_vertices(const std::vector<Vec3>& vertices, bool normalize) {
  std::vector<Vec3> edges;
  edges.reserve(vertices.size());
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    edges.push_back(vertices[(k + 1) % vertices.size()] - vertices[k]);
  }
  return Polygon(make_edges(std::move(edges), normalize));
}

double gap(const Vec3& a, const Vec3& b) {
  const double la = length(a);
  const double lb = length(b);
  const double lab = length(a + b);
  const double denom = la + lb + lab;
  if (!(denom > 0.0) || la == 0.0 || lb == 0.0) {
    // One edge vanishes: |a| + |b| - |a + b| = 0 exactly.
    return 0.0;
  }
  const Vec3 d = lb * a - la * b;
  const double p = d.squaredNorm() / (2.0 * la * lb);
  return 2.0 * p / denom;
}

CorollaryReport check_corollary(const Polygon& poly) {
  const auto& w = poly.edges().w();
  const int n = poly.n();
  CorollaryReport rep;
  rep.n = n;
  rep.max_gap = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double g = gap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(j)]);
      if (g > rep.max_gap) {
        rep.max_gap = g;
        rep.best_i = i;
        rep.best_j = j;
      }
    }
  }
  rep.bound = 2.0 * kAlpha / n;
  rep.ratio = rep.max_gap / rep.bound;
  rep.holds = rep.max_gap >= rep.bound - 1e-10;
  rep.equality = validate_equality_case(poly.edges());
  return rep;
}

double gap_consistency(const OrthoMatrix& u) {
  std::vector<Vec3> w;
  std::vector<double> r;
  for (const auto& row : u.rows()) {
    w.push_back(hopf_map(row));
    r.push_back(length(w.back()));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = 0; j < w.size(); ++j) {
      const double p = r[i] * r[j] - w[i].dot(w[j]);
      const double rs = r[i] + r[j];
      worst = std::max(worst, std::abs(2.0 * p - (rs * rs - (w[i] + w[j]).squaredNorm())));
    }
  }
  return worst;
}

}  // namespace bbinv
