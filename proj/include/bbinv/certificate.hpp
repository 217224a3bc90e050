#pragma once

// Certificate matrix for row configurations.
//
// With r_i = |w_i| and tau = 2 alpha / n,
//   M_ij = (w_i, w_j) - (r_i - tau)(r_j - tau) + 2 alpha^2 / n^2,
//   P_ij = r_i r_j - (w_i, w_j) >= 0,
// and M_ij = tau (rho_i + rho_j) - P_ij with rho_i = r_i - tau / 4.
// For every configuration with sum w_i = 0 and sum |w_i| = 2, M has an entry
// <= 0. An off-diagonal nonpositive entry M_ij is equivalent to
// |<u_i,u_j>|^2 <= (||u_i||^2 - alpha/n)(||u_j||^2 - alpha/n), which forces
// lambda_2 of the (i, j) Gram matrix to be at least alpha / n.

#include <vector>

#include <Eigen/Core>

#include "bbinv/hopf.hpp"

namespace bbinv {

struct MatrixEntry {
  double value = 0.0;
  int i = 0;
  int j = 0;
};

struct Certificate {
  int n = 0;
  double tau = 0.0;
  Eigen::MatrixXd m;
  Eigen::MatrixXd p;
  std::vector<double> r;    // |w_i|
  std::vector<double> rho;  // r_i - tau / 4
  double r2 = 0.0;      // sum r_i^2
  double f = 0.0;       // sum P_ij^2
  double s = 0.0;       // e^T P e = 4 / n
  double t_diag = 0.0;  // e^T P^2 e = 4 R2 / n
  /// Minimum over all entries including the diagonal; ties go to the
  /// smallest (i, j) in lexicographic order.
  MatrixEntry min_entry;
};

Certificate build_certificate(const RowConfig& cfg);

/// Residuals of the algebraic identities the certificate must satisfy.
struct CertificateChecks {
  double m_rho_p_residual = 0.0;  // max |M_ij - tau(rho_i + rho_j) + P_ij|
  double p_min = 0.0;             // min P_ij (should be >= -1e-12)
  double p_diag_max = 0.0;        // max |P_ii|
  double row_sum_residual = 0.0;  // max_i |sum_j P_ij - 2 r_i|
  /// min entry of M above +1e-12 contradicts the nonpositivity result and
  /// marks an implementation defect.
  bool lemma_violated = false;
};

CertificateChecks check_certificate(const Certificate& cert);

struct CaseBChoice {
  int i = 0;
  int j = 0;
  double m_ij = 0.0;
};

/// Most negative off-diagonal entry of M (lexicographic ties).
/// Throws CaseBPreconditionViolated if some r_i <= alpha / n and
/// NoNonpositiveEntry if every off-diagonal entry exceeds 1e-12.
CaseBChoice select_case_b(const RowConfig& cfg);
CaseBChoice select_case_b(const RowConfig& cfg, const Certificate& cert);

/// Scalars of the two-sided bound on F = sum P_ij^2.
struct InequalityChain {
  double f = 0.0;
  double lower_raw = 0.0;  // 8 R2 / n - 32 / (3 n^2)
  double upper = 0.0;      // (8 alpha / n)(R2 - alpha / n)
  double r2 = 0.0;
  double r2_floor = 0.0;   // 4 / n
  double s_measured = 0.0;  // e^T P e
  double t_measured = 0.0;  // |P e|^2
  double trace_c2 = 0.0;    // F - 2t + s^2, the Frobenius mass of P on e-perp
  bool lower_raw_holds = false;    // F >= lower_raw - 1e-10
  bool r2_holds = false;           // R2 >= 4/n - 1e-12
  bool lower_final_holds = false;  // F >= upper - 1e-10
  bool trinity_holds = false;      // tr(C^2) >= s^2 / 3 - 1e-10
  bool upper_strict_holds = false; // F < upper; never true for a valid config
  double fsum_residual = 0.0;      // both sides of the lower-bound rewrite
  double alpha_quadratic_residual = 0.0;  // alpha^2 - 4 alpha + 8/3
};

InequalityChain inequality_chain(const Certificate& cert);

struct SpectralDiagnostics {
  std::vector<double> eig_p;  // ascending
  std::vector<double> eig_m;  // ascending
  int neg_count_p = 0;        // eigenvalues of P below -1e-9
  double trace_p = 0.0;
  double pe_residual = 0.0;   // max |(P e)_i - (2 / sqrt n) r_i|
};

SpectralDiagnostics spectral_diagnostics(const Certificate& cert);

/// Ascending eigenvalues of a real symmetric matrix.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& a);

struct LemmaDiagnostics {
  Certificate certificate;
  CertificateChecks checks;
  InequalityChain chain;
  SpectralDiagnostics spectra;
};

LemmaDiagnostics lemma_diagnostics(const RowConfig& cfg);

}  // namespace bbinv
