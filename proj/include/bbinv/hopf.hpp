#pragma once

// Hopf map between rows of an orthonormal-column matrix and vectors in R^3.
//
// A row u = (u1, u2) maps to
//   p(u) = (2 Re(conj(u1) u2), -2 Im(conj(u1) u2), |u1|^2 - |u2|^2),
// a vector of length ||u||^2. Orthonormal columns are equivalent to the
// images summing to zero with total length 2, and
//   |<u_i, u_j>|^2 = (|w_i| |w_j| + (w_i, w_j)) / 2.

#include <cstdint>
#include <vector>

#include "bbinv/constants.hpp"
#include "bbinv/linalg.hpp"

namespace bbinv {

/// Multiset of n vectors w_i in R^3 with sum w_i = 0 and sum |w_i| = 2.
class RowConfig {
 public:
  /// Throws ConfigInvalid if either invariant is off by more than tol, or
  /// NonFinite.
  static RowConfig make(std::vector<Vec3> w, double tol = kTolConfig);

  int n() const { return static_cast<int>(w_.size()); }
  const std::vector<Vec3>& w() const { return w_; }
  const Vec3& w(int i) const { return w_[static_cast<std::size_t>(i)]; }
  /// r_i = |w_i|.
  const std::vector<double>& r() const { return r_; }
  double r(int i) const { return r_[static_cast<std::size_t>(i)]; }

  /// |sum w_i|
  double closure_residual() const;
  /// |sum |w_i| - 2|
  double perimeter_residual() const;

 private:
  explicit RowConfig(std::vector<Vec3> w);
  std::vector<Vec3> w_;
  std::vector<double> r_;
};

double length(const Vec3& w);

Vec3 hopf_map(const Row& u);

/// Gauge-fixed preimage: first component real and nonnegative. The zero
/// vector lifts to (0, 0).
Row hopf_lift(const Vec3& w);

RowConfig config_from_matrix(const OrthoMatrix& u);

/// Row-wise lift. Throws ConfigInvalid through RowConfig construction paths;
/// the lifted matrix is validated at 10 * kTolConfig.
OrthoMatrix matrix_from_config(const RowConfig& cfg);

/// max over i, j of | |<u_i,u_j>|^2 - r_i r_j / 2 - (w_i, w_j) / 2 |.
double transfer_identity_check(const OrthoMatrix& u);

/// Shifts the vectors to zero mean and rescales them to total length 2.
/// Throws ConfigInvalid if every shifted vector vanishes.
RowConfig normalize_config(std::vector<Vec3> w);

/// Gaussian vectors, mean-subtracted and rescaled to total length 2.
RowConfig random_config(int n, std::uint64_t seed);

}  // namespace bbinv
