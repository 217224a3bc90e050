#pragma once

#include <cmath>
#include <complex>
#include <string_view>

#include <Eigen/Core>

namespace bbinv {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;

/// alpha = 2 - 2/sqrt(3), the smaller root of x^2 - 4x + 8/3 = 0.
inline const double kAlpha = 2.0 - 2.0 / std::sqrt(3.0);

/// Default tolerance on the deviation of U^H U from the identity.
inline constexpr double kTolOrth = 1e-10;
/// Default tolerance on the closure and perimeter of a row configuration.
inline constexpr double kTolConfig = 1e-9;
/// Entries of the certificate matrix at or below this count as nonpositive.
inline constexpr double kNonpositiveTol = 1e-12;

inline constexpr std::string_view kToolVersion = "1.0.0";
inline constexpr std::string_view kFormatVersion = "1";

/// Inverse-norm bound sqrt(n / alpha).
inline double inverse_norm_bound(int n) { return std::sqrt(n / kAlpha); }

/// Smallest guaranteed lambda_2 of the best pair, alpha / n.
inline double lambda2_floor(int n) { return kAlpha / n; }

}  // namespace bbinv
