#include "bbinv/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/LU>
#include <Eigen/QR>

#include "bbinv/certificate.hpp"
#include "bbinv/error.hpp"

namespace bbinv {

namespace {

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

std::vector<std::vector<int>> positive_components(const Eigen::MatrixXd& m, double threshold) {
  const int n = static_cast<int>(m.rows());
  std::vector<int> label(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> comps;
  for (int start = 0; start < n; ++start) {
    if (label[static_cast<std::size_t>(start)] >= 0) continue;
    const int id = static_cast<int>(comps.size());
    comps.emplace_back();
    std::vector<int> stack{start};
    label[static_cast<std::size_t>(start)] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      comps.back().push_back(v);
      for (int k = 0; k < n; ++k) {
        if (k != v && label[static_cast<std::size_t>(k)] < 0 && m(v, k) > threshold) {
          label[static_cast<std::size_t>(k)] = id;
          stack.push_back(k);
        }
      }
    }
    std::sort(comps.back().begin(), comps.back().end());
  }
  return comps;
}

}  // namespace

ExtremalSpec extremal_spec(int n, const Rotation3& rotation) {
  if (n < 4 || n % 4 != 0) throw Error(ErrorCode::NotDivisibleBy4, "n = " + std::to_string(n));
  ExtremalSpec spec;
  spec.n = n;
  spec.cluster_size = n / 4;
  spec.rotation = rotation;
  const double s = 1.0 / std::sqrt(3.0);
  const std::array<Vec3, 4> base{Vec3(1, 1, 1), Vec3(1, -1, -1), Vec3(-1, 1, -1), Vec3(-1, -1, 1)};
  for (std::size_t k = 0; k < 4; ++k) spec.directions[k] = rotation * (s * base[k]);
  return spec;
}

RowConfig tetrahedron_config(int n, const std::optional<Rotation3>& rotation) {
  const ExtremalSpec spec = extremal_spec(n, rotation.value_or(Rotation3::Identity()));
  const double len = 2.0 / n;
  std::vector<Vec3> w;
  w.reserve(static_cast<std::size_t>(n));
  for (const auto& d : spec.directions) {
    for (int k = 0; k < spec.cluster_size; ++k) w.push_back(len * d);
  }
  return RowConfig::make(std::move(w));
}

Rotation3 random_rotation(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Matrix3d g;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) g(r, c) = normal(rng);
  }
  const Eigen::HouseholderQR<Eigen::Matrix3d> qr(g);
  Rotation3 q = qr.householderQ();
  if (q.determinant() < 0.0) q.col(0) *= -1.0;
  return q;
}

OrthoMatrix extremal_matrix(int n, std::optional<std::uint64_t> rotate_seed) {
  std::optional<Rotation3> rot;
  if (rotate_seed) rot = random_rotation(*rotate_seed);
  return matrix_from_config(tetrahedron_config(n, rot));
}

std::vector<std::string> EqualityReport::failed() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

std::string to_string(Verdict v) { return v == Verdict::Equality ? "EQUALITY" : "NOT_EQUALITY"; }

EqualityReport validate_equality_case(const RowConfig& cfg) {
  const int n = cfg.n();
  const double nd = static_cast<double>(n);
  const Certificate cert = build_certificate(cfg);
  EqualityReport rep;
  rep.eig_p = symmetric_eigenvalues(cert.p);
  rep.eig_m = symmetric_eigenvalues(cert.m);

  {
    double worst = 0.0;
    for (double r : cfg.r()) worst = std::max(worst, std::abs(r - 2.0 / nd));
    rep.checks.push_back({"a_equal_lengths", worst <= 1e-10, worst, "max |r_i - 2/n|"});
  }
  {
    std::vector<double> expect_p, expect_m;
    if (n >= 4) {
      expect_p.assign(3, -4.0 / (3.0 * nd));
      expect_p.insert(expect_p.end(), static_cast<std::size_t>(n - 4), 0.0);
      expect_p.push_back(4.0 / nd);
      expect_m.assign(static_cast<std::size_t>(n - 4), 0.0);
      expect_m.insert(expect_m.end(), 4, 4.0 / (3.0 * nd));
    }
    const double dp = max_abs_diff(rep.eig_p, expect_p);
    const double dm = max_abs_diff(rep.eig_m, expect_m);
    rep.checks.push_back({"b_p_spectrum", dp <= 1e-9, dp, "{4/n, -4/(3n) x3, 0 x(n-4)}"});
    rep.checks.push_back({"c_m_spectrum", dm <= 1e-9, dm, "{4/(3n) x4, 0 x(n-4)}"});
  }
  {
    const double lo = cert.m.minCoeff();
    const bool ok = lo >= -1e-12 && lo <= 1e-12;
    rep.checks.push_back({"d_m_nonnegative_with_zero", ok, lo, "min M_ij"});
  }
  {
    rep.blocks = positive_components(cert.m, 1e-9);
    std::ostringstream why;
    bool ok = n % 4 == 0 && rep.blocks.size() == 4;
    double worst = 0.0;
    if (!ok) why << rep.blocks.size() << " blocks";
    const double entry = 16.0 / (3.0 * nd * nd);  // (4/(3n)) / (n/4)
    for (const auto& b : rep.blocks) {
      if (static_cast<int>(b.size()) * 4 != n) {
        ok = false;
        why << " block of size " << b.size();
      }
      for (int i : b) {
        for (int j : b) worst = std::max(worst, std::abs(cert.m(i, j) - entry));
      }
    }
    if (worst > 1e-9) {
      ok = false;
      why << " block entries off by " << worst;
    }
    rep.checks.push_back({"e_block_structure", ok, worst, ok ? "four n/4 blocks of 16/(3n^2)" : why.str()});
  }
  const bool all = std::all_of(rep.checks.begin(), rep.checks.end(), [](const EqualityCheck& c) { return c.passed; });
  rep.verdict = all ? Verdict::Equality : Verdict::NotEquality;
  return rep;
}

}  // namespace bbinv
