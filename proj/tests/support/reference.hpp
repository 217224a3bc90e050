#pragma once

// Reference computations for the tests. Everything here is written against
// Eigen's general-purpose routines or textbook formulas and deliberately
// avoids the library's own closed forms, so that agreement is meaningful.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "bbinv/constants.hpp"
#include "bbinv/linalg.hpp"

namespace ref {

using bbinv::Complex;
using bbinv::RawMatrix;
using bbinv::Row;
using bbinv::Vec3;

inline const double kAlpha = 2.0 - 2.0 / std::sqrt(3.0);

/// Squared smallest singular value of the 2 x 2 block on rows a, b (SVD).
inline double lambda2_svd(const Row& a, const Row& b) {
  Eigen::Matrix2cd m;
  m << a[0], a[1], b[0], b[1];
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  const double s = svd.singularValues()(1);
  return s * s;
}

inline double lambda1_svd(const Row& a, const Row& b) {
  Eigen::Matrix2cd m;
  m << a[0], a[1], b[0], b[1];
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(m);
  const double s = svd.singularValues()(0);
  return s * s;
}

struct Best {
  int i = 0;
  int j = 1;
  double lambda2 = -1.0;
};

/// Exhaustive scan with the SVD reference, lexicographic ties.
inline Best best_pair_svd(const RawMatrix& rows) {
  Best best;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double l = lambda2_svd(rows[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]);
      if (l > best.lambda2) best = {i, j, l};
    }
  }
  return best;
}

/// max |U^H U - I| via a dense product.
inline double gram_deviation(const RawMatrix& rows) {
  Eigen::MatrixX2cd u(static_cast<Eigen::Index>(rows.size()), 2);
  for (std::size_t k = 0; k < rows.size(); ++k) {
    u(static_cast<Eigen::Index>(k), 0) = rows[k][0];
    u(static_cast<Eigen::Index>(k), 1) = rows[k][1];
  }
  const Eigen::Matrix2cd g = u.adjoint() * u - Eigen::Matrix2cd::Identity();
  return g.cwiseAbs().maxCoeff();
}

/// Orthonormal columns from a Householder QR of a complex Gaussian n x 2.
inline RawMatrix qr_ortho(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::MatrixX2cd a(n, 2);
  for (int k = 0; k < n; ++k) {
    for (int c = 0; c < 2; ++c) a(k, c) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Eigen::MatrixX2cd> qr(a);
  const Eigen::MatrixX2cd q = qr.householderQ() * Eigen::MatrixX2cd::Identity(n, 2);
  RawMatrix rows(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rows[static_cast<std::size_t>(k)] = {q(k, 0), q(k, 1)};
  return rows;
}

/// Hopf image in the conjugate-sum form (u1* u2 + u1 u2*, i(u1* u2 - u1 u2*), |u1|^2 - |u2|^2).
inline Vec3 hopf(const Row& r) {
  const Complex u = r[0], v = r[1];
  const Complex x = std::conj(u) * v + u * std::conj(v);
  const Complex y = Complex(0, 1) * (std::conj(u) * v - u * std::conj(v));
  return Vec3(x.real(), y.real(), std::norm(u) - std::norm(v));
}

inline double inner_abs2(const Row& a, const Row& b) {
  return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

/// Certificate entry written straight from its definition.
inline double m_entry(const Vec3& wi, const Vec3& wj, int n) {
  const double tau = 2.0 * kAlpha / n;
  return wi.dot(wj) - (wi.norm() - tau) * (wj.norm() - tau) + 2.0 * kAlpha * kAlpha / (double(n) * n);
}

/// Random closed polygon with perimeter 2 from Gaussian edges.
inline std::vector<Vec3> random_edges(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Vec3> e(static_cast<std::size_t>(n));
  Vec3 mean = Vec3::Zero();
  for (auto& v : e) {
    v = Vec3(g(rng), g(rng), g(rng));
    mean += v;
  }
  mean /= n;
  double per = 0.0;
  for (auto& v : e) {
    v -= mean;
    per += v.norm();
  }
  for (auto& v : e) v *= 2.0 / per;
  return e;
}

/// The regular tetrahedron directions used throughout.
inline std::vector<Vec3> tetra_dirs() {
  const double s = 1.0 / std::sqrt(3.0);
  return {Vec3(s, s, s), Vec3(s, -s, -s), Vec3(-s, s, -s), Vec3(-s, -s, s)};
}

inline std::vector<double> sym_eigs(const Eigen::MatrixXd& a) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(a, false);
  std::vector<double> out;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k) out.push_back(es.eigenvalues()(k).real());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ref
