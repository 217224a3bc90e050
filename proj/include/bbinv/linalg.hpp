#pragma once

// Exact-shape complex linear algebra for n x 2 matrices with orthonormal
// columns, and the closed-form spectrum of 2 x 2 row-pair Gram matrices.

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "bbinv/constants.hpp"

namespace bbinv {

/// One row (u_i1, u_i2) of an n x 2 complex matrix.
using Row = std::array<Complex, 2>;
using RawMatrix = std::vector<Row>;

/// n x 2 complex matrix whose columns are orthonormal. Only obtainable through
/// validate_ortho (or the operations built on it), so holding one means the
/// invariants were checked.
class OrthoMatrix {
 public:
  int n() const { return static_cast<int>(rows_.size()); }
  const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }
  std::span<const Row> rows() const { return rows_; }
  const RawMatrix& raw() const { return rows_; }

  /// max |(U^H U - I)_kl| measured at validation time.
  double deviation() const { return deviation_; }

  /// Squared row norm ||u_i||^2.
  double row_norm2(int i) const;

  /// Copy with rows reordered: result row k is this row perm[k].
  OrthoMatrix permuted(std::span<const int> perm) const;

 private:
  friend OrthoMatrix validate_ortho(RawMatrix rows, double tol);
  OrthoMatrix(RawMatrix rows, double deviation) : rows_(std::move(rows)), deviation_(deviation) {}

  RawMatrix rows_;
  double deviation_ = 0.0;
};

/// max |(U^H U - I)_kl| over the four entries; no validation.
double ortho_deviation(std::span<const Row> rows);

/// Rejects with TooFewRows (n < 3), NonFinite, or NotOrthonormal
/// (deviation > tol).
OrthoMatrix validate_ortho(RawMatrix rows, double tol = kTolOrth);

/// Classical Gram-Schmidt on the two columns with one re-orthogonalization
/// pass. Throws DegenerateSample when a column collapses.
RawMatrix orthonormalize(RawMatrix rows);

/// Haar-distributed n x 2 orthonormal-column matrix, deterministic in seed.
OrthoMatrix random_ortho(int n, std::uint64_t seed);

/// Gram matrix Gamma_ij = U_ij U_ij^H of the 2 x 2 submatrix on rows i, j.
struct PairGram {
  int i = 0;
  int j = 0;
  double a = 0.0;  // ||u_i||^2
  double d = 0.0;  // ||u_j||^2
  Complex b;       // <u_i, u_j>
  double lambda1 = 0.0;
  double lambda2 = 0.0;

  double sigma2() const;
  /// 1 / sigma_2, +inf for a singular pair.
  double inv_norm() const;
};

PairGram pair_gram(const OrthoMatrix& u, int i, int j);

/// Smallest eigenvalue of the Gram matrix of two rows, without index checks.
double pair_lambda2(const Row& ui, const Row& uj);

/// Result of right-multiplying U by a unitary Z chosen so that row i becomes
/// (v, 0) with v = ||u_i|| >= 0.
struct RowRotation {
  OrthoMatrix v_matrix;
  double v = 0.0;
  std::array<Complex, 4> z{};  // row-major 2 x 2
};

/// Throws ZeroRow when row i vanishes and IndexOutOfRange for a bad index.
RowRotation rotate_row_to_axis(const OrthoMatrix& u, int i);

}  // namespace bbinv
