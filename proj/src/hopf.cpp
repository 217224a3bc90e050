#include "bbinv/hopf.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "bbinv/error.hpp"

namespace bbinv {

double length(const Vec3& w) { return std::hypot(w.x(), w.y(), w.z()); }

RowConfig::RowConfig(std::vector<Vec3> w) : w_(std::move(w)) {
  r_.reserve(w_.size());
  for (const auto& v : w_) r_.push_back(length(v));
}

RowConfig RowConfig::make(std::vector<Vec3> w, double tol) {
  if (w.empty()) throw Error(ErrorCode::ConfigInvalid, "empty configuration");
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!w[i].allFinite()) throw Error(ErrorCode::NonFinite, "vector " + std::to_string(i));
  }
  RowConfig cfg(std::move(w));
  const double closure = cfg.closure_residual();
  const double perimeter = cfg.perimeter_residual();
  if (!(closure <= tol) || !(perimeter <= tol)) {
    throw Error(ErrorCode::ConfigInvalid, "|sum w| = " + diag_num(closure) + ", |sum |w| - 2| = " + diag_num(perimeter) +
                                              ", tol " + diag_num(tol));
  }
  return cfg;
}

double RowConfig::closure_residual() const {
  Vec3 s = Vec3::Zero();
  for (const auto& v : w_) s += v;
  return length(s);
}

double RowConfig::perimeter_residual() const {
  double s = 0.0;
  for (double x : r_) s += x;
  return std::abs(s - 2.0);
}

Vec3 hopf_map(const Row& u) {
  if (!std::isfinite(u[0].real()) || !std::isfinite(u[0].imag()) || !std::isfinite(u[1].real()) ||
      !std::isfinite(u[1].imag())) {
    throw Error(ErrorCode::NonFinite, "hopf_map input");
  }
  const Complex c = std::conj(u[0]) * u[1];
  return Vec3(2.0 * c.real(), -2.0 * c.imag(), std::norm(u[0]) - std::norm(u[1]));
}

Row hopf_lift(const Vec3& w) {
  if (!w.allFinite()) throw Error(ErrorCode::NonFinite, "hopf_lift input");
  const double len = length(w);
  if (len == 0.0) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
  // conj(u1) u2 = q in both branches.
  const Complex q(0.5 * w.x(), -0.5 * w.y());
  if (w.z() >= 0.0) {
    const double u1 = std::sqrt(0.5 * (len + w.z()));
    return {Complex(u1, 0.0), q / u1};
  }
  // Southern hemisphere: take |u2| from len - w3 (no cancellation), then
  // rotate the common phase so u1 is real.
  const double s = std::sqrt(0.5 * (len - w.z()));
  const Complex u1 = std::conj(q) / s;
  const double m = std::abs(u1);
  if (m == 0.0) return {Complex(0.0, 0.0), Complex(s, 0.0)};
  return {Complex(m, 0.0), s * std::conj(u1) / m};
}

RowConfig config_from_matrix(const OrthoMatrix& u) {
  std::vector<Vec3> w;
  w.reserve(static_cast<std::size_t>(u.n()));
  for (const auto& row : u.rows()) w.push_back(hopf_map(row));
  return RowConfig::make(std::move(w), std::max(kTolConfig, 4.0 * u.deviation()));
}

OrthoMatrix matrix_from_config(const RowConfig& cfg) {
  RawMatrix rows;
  rows.reserve(static_cast<std::size_t>(cfg.n()));
  for (const auto& w : cfg.w()) rows.push_back(hopf_lift(w));
  try {
    return validate_ortho(std::move(rows), 10.0 * kTolConfig);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::NotOrthonormal) throw Error(ErrorCode::ConfigInvalid, e.what());
    throw;
  }
}

double transfer_identity_check(const OrthoMatrix& u) {
  const int n = u.n();
  std::vector<Vec3> w;
  std::vector<double> r;
  w.reserve(static_cast<std::size_t>(n));
  r.reserve(static_cast<std::size_t>(n));
  for (const auto& row : u.rows()) {
    w.push_back(hopf_map(row));
    r.push_back(length(w.back()));
  }
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const Row& ui = u.row(i);
    for (int j = 0; j < n; ++j) {
      const Row& uj = u.row(j);
      const double ip = std::norm(ui[0] * std::conj(uj[0]) + ui[1] * std::conj(uj[1]));
      const double rhs = 0.5 * r[static_cast<std::size_t>(i)] * r[static_cast<std::size_t>(j)] +
                         0.5 * w[static_cast<std::size_t>(i)].dot(w[static_cast<std::size_t>(j)]);
      worst = std::max(worst, std::abs(ip - rhs));
    }
  }
  return worst;
}

RowConfig normalize_config(std::vector<Vec3> w) {
  if (w.empty()) throw Error(ErrorCode::ConfigInvalid, "empty configuration");
  Vec3 mean = Vec3::Zero();
  for (const auto& v : w) mean += v;
  mean /= static_cast<double>(w.size());
  double total = 0.0;
  for (auto& v : w) {
    v -= mean;
    total += length(v);
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw Error(ErrorCode::ConfigInvalid, "all vectors coincide");
  }
  for (auto& v : w) v *= 2.0 / total;
  return RowConfig::make(std::move(w));
}

RowConfig random_config(int n, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::ConfigInvalid, "n must be positive");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Vec3> w(static_cast<std::size_t>(n));
  for (auto& v : w) {
    const double x = normal(rng), y = normal(rng), z = normal(rng);
    v = Vec3(x, y, z);
  }
  return normalize_config(std::move(w));
}

}  // namespace bbinv
