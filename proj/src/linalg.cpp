#include "bbinv/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "bbinv/error.hpp"

namespace bbinv {

namespace {

bool finite(const Complex& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void check_index(int n, int i) {
  if (i < 0 || i >= n) {
    throw Error(ErrorCode::IndexOutOfRange, "row " + std::to_string(i) + " not in [0, " + std::to_string(n) + ")");
  }
}

struct Columns {
  std::vector<Complex> c1, c2;
};

Columns split(const RawMatrix& rows) {
  Columns cols;
  cols.c1.reserve(rows.size());
  cols.c2.reserve(rows.size());
  for (const auto& r : rows) {
    cols.c1.push_back(r[0]);
    cols.c2.push_back(r[1]);
  }
  return cols;
}

// <x, y> = sum conj(x_k) y_k
Complex inner(const std::vector<Complex>& x, const std::vector<Complex>& y) {
  Complex s{0.0, 0.0};
  for (std::size_t k = 0; k < x.size(); ++k) s += std::conj(x[k]) * y[k];
  return s;
}

double norm(const std::vector<Complex>& x) {
  double s = 0.0;
  for (const auto& z : x) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

double OrthoMatrix::row_norm2(int i) const {
  const Row& r = row(i);
  return std::norm(r[0]) + std::norm(r[1]);
}

OrthoMatrix OrthoMatrix::permuted(std::span<const int> perm) const {
  RawMatrix out;
  out.reserve(perm.size());
  for (int k : perm) {
    check_index(n(), k);
    out.push_back(rows_[static_cast<std::size_t>(k)]);
  }
  return OrthoMatrix(std::move(out), deviation_);
}

double ortho_deviation(std::span<const Row> rows) {
  double n1 = 0.0, n2 = 0.0;
  Complex c{0.0, 0.0};
  for (const auto& r : rows) {
    n1 += std::norm(r[0]);
    n2 += std::norm(r[1]);
    c += std::conj(r[0]) * r[1];
  }
  return std::max({std::abs(n1 - 1.0), std::abs(n2 - 1.0), std::abs(c)});
}

OrthoMatrix validate_ortho(RawMatrix rows, double tol) {
  if (rows.size() < 3) {
    throw Error(ErrorCode::TooFewRows, "need n >= 3, got " + std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!finite(rows[i][0]) || !finite(rows[i][1])) {
      throw Error(ErrorCode::NonFinite, "row " + std::to_string(i));
    }
  }
  const double dev = ortho_deviation(rows);
  if (!(dev <= tol)) {
    throw Error(ErrorCode::NotOrthonormal, "max |U^H U - I| = " + diag_num(dev) + " exceeds " + diag_num(tol));
  }
  return OrthoMatrix(std::move(rows), dev);
}

RawMatrix orthonormalize(RawMatrix rows) {
  Columns cols = split(rows);
  const double norm1 = norm(cols.c1);
  const double norm2 = norm(cols.c2);
  if (!(norm1 > 0.0) || !(norm2 > 0.0) || !std::isfinite(norm1) || !std::isfinite(norm2)) {
    throw Error(ErrorCode::DegenerateSample, "zero or non-finite column");
  }
  for (auto& z : cols.c1) z /= norm1;
  // Two projection passes keep <c1, c2> at roundoff level.
  for (int pass = 0; pass < 2; ++pass) {
    const Complex proj = inner(cols.c1, cols.c2);
    for (std::size_t k = 0; k < cols.c2.size(); ++k) cols.c2[k] -= proj * cols.c1[k];
  }
  const double rest = norm(cols.c2);
  if (!(rest > 1e-8 * norm2)) {
    throw Error(ErrorCode::DegenerateSample, "columns nearly dependent");
  }
  for (auto& z : cols.c2) z /= rest;
  for (std::size_t k = 0; k < rows.size(); ++k) rows[k] = {cols.c1[k], cols.c2[k]};
  return rows;
}

OrthoMatrix random_ortho(int n, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::TooFewRows, "need n >= 3, got " + std::to_string(n));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
  constexpr int kMaxTries = 16;
  for (int attempt = 0; attempt < kMaxTries; ++attempt) {
    RawMatrix rows(static_cast<std::size_t>(n));
    for (auto& r : rows) {
      const double a = normal(rng), b = normal(rng), c = normal(rng), d = normal(rng);
      r = {Complex(a, b), Complex(c, d)};
    }
    try {
      return validate_ortho(orthonormalize(std::move(rows)), kTolOrth);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateSample) throw;
    }
  }
  throw Error(ErrorCode::DegenerateSample, "no usable sample after retries");
}

double pair_lambda2(const Row& ui, const Row& uj) {
  const double a = std::norm(ui[0]) + std::norm(ui[1]);
  const double d = std::norm(uj[0]) + std::norm(uj[1]);
  // det(Gamma) = |det U_ij|^2 is nonnegative by construction.
  const double det = std::norm(ui[0] * uj[1] - ui[1] * uj[0]);
  const double tr = a + d;
  const double disc = std::max(0.0, tr * tr - 4.0 * det);
  const double lambda1 = 0.5 * (tr + std::sqrt(disc));
  return lambda1 > 0.0 ? det / lambda1 : 0.0;
}

double PairGram::sigma2() const { return std::sqrt(lambda2); }

double PairGram::inv_norm() const {
  return lambda2 > 0.0 ? 1.0 / std::sqrt(lambda2) : std::numeric_limits<double>::infinity();
}

PairGram pair_gram(const OrthoMatrix& u, int i, int j) {
  check_index(u.n(), i);
  check_index(u.n(), j);
  if (i == j) throw Error(ErrorCode::SameIndex, "i = j = " + std::to_string(i));
  const Row& ui = u.row(i);
  const Row& uj = u.row(j);
  PairGram g;
  g.i = i;
  g.j = j;
  g.a = std::norm(ui[0]) + std::norm(ui[1]);
  g.d = std::norm(uj[0]) + std::norm(uj[1]);
  g.b = ui[0] * std::conj(uj[0]) + ui[1] * std::conj(uj[1]);
  g.lambda2 = pair_lambda2(ui, uj);
  const double det = std::norm(ui[0] * uj[1] - ui[1] * uj[0]);
  const double tr = g.a + g.d;
  g.lambda1 = 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
  return g;
}

RowRotation rotate_row_to_axis(const OrthoMatrix& u, int i) {
  check_index(u.n(), i);
  const Row& ui = u.row(i);
  const double v = std::sqrt(std::norm(ui[0]) + std::norm(ui[1]));
  if (v == 0.0) throw Error(ErrorCode::ZeroRow, "row " + std::to_string(i));
  const Complex a = ui[0] / v;
  const Complex b = ui[1] / v;
  // Z = [[conj(a), -b], [conj(b), a]] maps (a, b) to (1, 0).
  const std::array<Complex, 4> z{std::conj(a), -b, std::conj(b), a};
  RawMatrix out;
  out.reserve(u.raw().size());
  for (const auto& r : u.rows()) {
    out.push_back({r[0] * z[0] + r[1] * z[2], r[0] * z[1] + r[1] * z[3]});
  }
  out[static_cast<std::size_t>(i)] = {Complex(v, 0.0), Complex(0.0, 0.0)};
  const double tol = std::max(kTolOrth, 2.0 * u.deviation() + 1e-13);
  return RowRotation{validate_ortho(std::move(out), tol), v, z};
}

}  // namespace bbinv
