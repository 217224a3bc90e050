#pragma once

// Equality configurations: for 4 | n, four clusters of n/4 identical vectors
// of length 2/n pointing at the vertices of a regular tetrahedron. These are
// the only configurations where the best pair has lambda_2 exactly alpha/n.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bbinv/hopf.hpp"

namespace bbinv {

using Rotation3 = Eigen::Matrix3d;

struct ExtremalSpec {
  int n = 0;
  int cluster_size = 0;  // n / 4
  std::array<Vec3, 4> directions;  // unit vectors, pairwise dot -1/3
  Rotation3 rotation = Rotation3::Identity();
};

/// Throws NotDivisibleBy4 unless n >= 4 and 4 | n.
ExtremalSpec extremal_spec(int n, const Rotation3& rotation = Rotation3::Identity());

/// Rows are grouped: rows [k n/4, (k+1) n/4) carry direction k.
RowConfig tetrahedron_config(int n, const std::optional<Rotation3>& rotation = std::nullopt);

/// Proper rotation from the QR orthonormalization of a seeded Gaussian 3 x 3.
Rotation3 random_rotation(std::uint64_t seed);

OrthoMatrix extremal_matrix(int n, std::optional<std::uint64_t> rotate_seed = std::nullopt);

enum class Verdict { Equality, NotEquality };

struct EqualityCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

struct EqualityReport {
  Verdict verdict = Verdict::NotEquality;
  /// (a) equal lengths, (b) P spectrum, (c) M spectrum, (d) M nonnegative
  /// with a zero entry, (e) four equal all-ones blocks.
  std::vector<EqualityCheck> checks;
  std::vector<double> eig_p;
  std::vector<double> eig_m;
  std::vector<std::vector<int>> blocks;  // connected components of M > 1e-9

  std::vector<std::string> failed() const;
};

EqualityReport validate_equality_case(const RowConfig& cfg);

std::string to_string(Verdict v);

}  // namespace bbinv
