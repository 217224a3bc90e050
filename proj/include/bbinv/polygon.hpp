#pragma once

// Closed polygons in R^3 with perimeter 2, viewed through their edge vectors.
// For any such polygon with n >= 3 edges,
//   max_{i != j} (|w_i| + |w_j| - |w_i + w_j|) >= 2 alpha / n,
// the same statement as the matrix bound read through the Hopf map.

#include <vector>

#include "bbinv/extremal.hpp"
#include "bbinv/hopf.hpp"

namespace bbinv {

class Polygon {
 public:
  /// Edge vectors must close and have total length 2 (within kTolConfig);
  /// with `normalize` they are first scaled to perimeter 2. Throws
  /// PolygonInvalid.
  static Polygon from_edges(std::vector<Vec3> edges, bool normalize = false);
  /// Vertex loop v_0 .. v_{n-1}; edges are v_{k+1} - v_k with wrap-around.
  static Polygon from_vertices(const std::vector<Vec3>& vertices, bool normalize = false);

  int n() const { return edges_.n(); }
  const RowConfig& edges() const { return edges_; }

 private:
  explicit Polygon(RowConfig edges) : edges_(std::move(edges)) {}
  RowConfig edges_;
};

/// |a| + |b| - |a + b|, evaluated as 2 P / (|a| + |b| + |a + b|) with
/// P = |a||b| - (a, b) taken from | |b| a - |a| b |^2 / (2 |a| |b|), so nearly
/// parallel edges keep their significant digits.
double gap(const Vec3& a, const Vec3& b);

struct CorollaryReport {
  int n = 0;
  double max_gap = 0.0;
  int best_i = 0;
  int best_j = 1;
  double bound = 0.0;  // 2 alpha / n
  double ratio = 0.0;  // max_gap / bound
  bool holds = false;  // max_gap >= bound - 1e-10
  EqualityReport equality;
};

CorollaryReport check_corollary(const Polygon& poly);

/// max over pairs of |2 P_ij - ((r_i + r_j)^2 - |w_i + w_j|^2)| for the Hopf
/// images of the rows of u.
double gap_consistency(const OrthoMatrix& u);

}  // namespace bbinv
