#include "bbinv/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "bbinv/error.hpp"

namespace bbinv {

Certificate build_certificate(const RowConfig& cfg) {
  const int n = cfg.n();
  const double nd = static_cast<double>(n);
  const double tau = 2.0 * kAlpha / nd;
  const double shift = 2.0 * kAlpha * kAlpha / (nd * nd);
  const auto& w = cfg.w();
  const auto& r = cfg.r();

  Certificate c;
  c.n = n;
  c.tau = tau;
  c.m.resize(n, n);
  c.p.resize(n, n);
  c.r = r;
  c.rho.resize(static_cast<std::size_t>(n));
  c.min_entry = {std::numeric_limits<double>::infinity(), 0, 0};

  for (int i = 0; i < n; ++i) {
    const auto si = static_cast<std::size_t>(i);
    c.rho[si] = r[si] - tau / 4.0;
    c.r2 += r[si] * r[si];
    for (int j = i; j < n; ++j) {
      const auto sj = static_cast<std::size_t>(j);
      const double dot = w[si].dot(w[sj]);
      const double mij = dot - (r[si] - tau) * (r[sj] - tau) + shift;
      const double pij = r[si] * r[sj] - dot;
      c.m(i, j) = c.m(j, i) = mij;
      c.p(i, j) = c.p(j, i) = pij;
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      c.f += c.p(i, j) * c.p(i, j);
      if (c.m(i, j) < c.min_entry.value) c.min_entry = {c.m(i, j), i, j};
    }
  }
  c.s = 4.0 / nd;
  c.t_diag = 4.0 * c.r2 / nd;
  return c;
}

CertificateChecks check_certificate(const Certificate& c) {
  CertificateChecks k;
  k.p_min = std::numeric_limits<double>::infinity();
  std::vector<double> row_sum(static_cast<std::size_t>(c.n), 0.0);
  for (int i = 0; i < c.n; ++i) {
    for (int j = 0; j < c.n; ++j) {
      const double model = c.tau * (c.rho[static_cast<std::size_t>(i)] + c.rho[static_cast<std::size_t>(j)]) - c.p(i, j);
      k.m_rho_p_residual = std::max(k.m_rho_p_residual, std::abs(c.m(i, j) - model));
      k.p_min = std::min(k.p_min, c.p(i, j));
      row_sum[static_cast<std::size_t>(i)] += c.p(i, j);
    }
    k.p_diag_max = std::max(k.p_diag_max, std::abs(c.p(i, i)));
  }
  for (std::size_t i = 0; i < row_sum.size(); ++i) {
    k.row_sum_residual = std::max(k.row_sum_residual, std::abs(row_sum[i] - 2.0 * c.r[i]));
  }
  k.lemma_violated = c.min_entry.value > kNonpositiveTol;
  return k;
}

CaseBChoice select_case_b(const RowConfig& cfg) {
  const double floor = kAlpha / cfg.n();
  for (int i = 0; i < cfg.n(); ++i) {
    if (!(cfg.r(i) > floor)) {
      throw Error(ErrorCode::CaseBPreconditionViolated,
                  "r_" + std::to_string(i) + " = " + std::to_string(cfg.r(i)) + " <= alpha/n");
    }
  }
  return select_case_b(cfg, build_certificate(cfg));
}

CaseBChoice select_case_b(const RowConfig& cfg, const Certificate& cert) {
  const int n = cfg.n();
  if (n < 2) throw Error(ErrorCode::NoNonpositiveEntry, "fewer than two rows");
  CaseBChoice best{0, 1, cert.m(0, 1)};
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (cert.m(i, j) < best.m_ij) best = {i, j, cert.m(i, j)};
    }
  }
  if (best.m_ij > kNonpositiveTol) {
    throw Error(ErrorCode::NoNonpositiveEntry, "smallest off-diagonal entry " + diag_num(best.m_ij));
  }
  return best;
}

InequalityChain inequality_chain(const Certificate& c) {
  const double nd = static_cast<double>(c.n);
  InequalityChain q;
  q.f = c.f;
  q.r2 = c.r2;
  q.r2_floor = 4.0 / nd;
  q.lower_raw = 8.0 * c.r2 / nd - 32.0 / (3.0 * nd * nd);
  q.upper = (8.0 * kAlpha / nd) * (c.r2 - kAlpha / nd);

  const Eigen::VectorXd e = Eigen::VectorXd::Constant(c.n, 1.0 / std::sqrt(nd));
  const Eigen::VectorXd pe = c.p * e;
  q.s_measured = e.dot(pe);
  q.t_measured = pe.squaredNorm();
  q.trace_c2 = q.f - 2.0 * q.t_measured + q.s_measured * q.s_measured;

  q.lower_raw_holds = q.f >= q.lower_raw - 1e-10;
  q.r2_holds = q.r2 >= q.r2_floor - 1e-12;
  q.lower_final_holds = q.f >= q.upper - 1e-10;
  q.trinity_holds = q.trace_c2 >= q.s_measured * q.s_measured / 3.0 - 1e-10;
  q.upper_strict_holds = q.f < q.upper;

  const double rewritten = (8.0 * kAlpha / nd) * (c.r2 - kAlpha / nd) + (8.0 * (1.0 - kAlpha) / nd) * (c.r2 - 4.0 / nd);
  q.fsum_residual = std::abs(q.lower_raw - rewritten);
  q.alpha_quadratic_residual = std::abs(kAlpha * kAlpha - 4.0 * kAlpha + 8.0 / 3.0);
  return q;
}

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() == Eigen::Success) {
    const Eigen::VectorXd& ev = solver.eigenvalues();
    return {ev.data(), ev.data() + ev.size()};
  }
  // The tridiagonal QR sweep can stall on large, highly degenerate spectra
  // (the rank-4 equality matrices at some n). Shifting by the largest
  // absolute row sum makes the matrix positive semidefinite, so its
  // singular values are its eigenvalues.
  const double shift = a.cwiseAbs().rowwise().sum().maxCoeff();
  const Eigen::MatrixXd b = a + shift * Eigen::MatrixXd::Identity(a.rows(), a.cols());
  Eigen::BDCSVD<Eigen::MatrixXd> svd(b);
  if (svd.info() != Eigen::Success) throw Error(ErrorCode::ConfigInvalid, "eigenvalue iteration failed");
  std::vector<double> ev;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k) ev.push_back(svd.singularValues()(k) - shift);
  std::sort(ev.begin(), ev.end());
  return ev;
}

SpectralDiagnostics spectral_diagnostics(const Certificate& c) {
  SpectralDiagnostics d;
  d.eig_p = symmetric_eigenvalues(c.p);
  d.eig_m = symmetric_eigenvalues(c.m);
  d.neg_count_p = static_cast<int>(std::count_if(d.eig_p.begin(), d.eig_p.end(), [](double x) { return x < -1e-9; }));
  d.trace_p = c.p.trace();
  const double nd = static_cast<double>(c.n);
  const Eigen::VectorXd pe = c.p * Eigen::VectorXd::Constant(c.n, 1.0 / std::sqrt(nd));
  for (int i = 0; i < c.n; ++i) {
    d.pe_residual = std::max(d.pe_residual, std::abs(pe(i) - 2.0 / std::sqrt(nd) * c.r[static_cast<std::size_t>(i)]));
  }
  return d;
}

LemmaDiagnostics lemma_diagnostics(const RowConfig& cfg) {
  LemmaDiagnostics out;
  out.certificate = build_certificate(cfg);
  out.checks = check_certificate(out.certificate);
  out.chain = inequality_chain(out.certificate);
  out.spectra = spectral_diagnostics(out.certificate);
  return out;
}

}  // namespace bbinv
