#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace galqm {

/// Spin-j matrices J1, J2, J3 on the (2j+1)-dimensional carrier space.
/// Basis ordered m = j, j-1, ..., -j with Condon-Shortley phases, so j = 1/2
/// reproduces the Pauli matrices in their conventional layout.
struct SpinRepresentation {
  double j = 0.0;
  double hbar = 1.0;
  Eigen::MatrixXcd J1, J2, J3;

  Eigen::Index dim() const { return J3.rows(); }

  /// J^2 = J1^2 + J2^2 + J3^2.
  Eigen::MatrixXcd casimir() const { return J1 * J1 + J2 * J2 + J3 * J3; }
};

/// Builds the spin-j representation from the ladder operators
/// J+- = J1 +- i J2 with <m+1|J+|m> = hbar sqrt(j(j+1) - m(m+1)).
inline SpinRepresentation build_spin_rep(double j, double hbar = 1.0) {
  const double two_j = 2.0 * j;
  const long long tj = std::llround(two_j);
  if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  if (tj < 0 || static_cast<double>(tj) != two_j)
    throw std::invalid_argument("2j must be a nonnegative integer");

  const Eigen::Index d = static_cast<Eigen::Index>(tj) + 1;
  SpinRepresentation rep;
  rep.j = j;
  rep.hbar = hbar;

  Eigen::MatrixXcd j3 = Eigen::MatrixXcd::Zero(d, d);
  Eigen::MatrixXcd jplus = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    const double m = j - static_cast<double>(r);  // row r carries |j, m>
    j3(r, r) = hbar * m;
    if (r + 1 < d) {
      const double m_src = j - static_cast<double>(r + 1);
      jplus(r, r + 1) = hbar * std::sqrt(j * (j + 1.0) - m_src * (m_src + 1.0));
    }
  }
  const Eigen::MatrixXcd jminus = jplus.adjoint();
  rep.J3 = j3;
  rep.J1 = 0.5 * (jplus + jminus);
  rep.J2 = std::complex<double>(0.0, -0.5) * (jplus - jminus);
  return rep;
}

/// Max-abs entry of [J^2, J_i] over i; zero within rounding because J^2 is
/// the Casimir of the rotation subalgebra.
inline double casimir_check(const SpinRepresentation& rep) {
  const Eigen::MatrixXcd j2 = rep.casimir();
  double worst = 0.0;
  for (const Eigen::MatrixXcd* ji : {&rep.J1, &rep.J2, &rep.J3}) {
    const Eigen::MatrixXcd c = j2 * (*ji) - (*ji) * j2;
    worst = std::max(worst, c.cwiseAbs().maxCoeff());
  }
  return worst;
}

struct SpinSpectrumReport {
  double max_j3_deviation = 0.0;       // eigenvalues of J3 vs hbar*{-j..j}
  double max_casimir_deviation = 0.0;  // eigenvalues of J^2 vs hbar^2 j(j+1)
  bool pass = false;
  Eigen::VectorXd j3_eigenvalues;  // ascending
};

/// Verifies the angular momentum spectrum: J3 ~ hbar m with m = -j..j in
/// integer steps, and J^2 ~ hbar^2 j(j+1) with full multiplicity.
inline SpinSpectrumReport spectrum_check(const SpinRepresentation& rep, double tol = 1e-10) {
  SpinSpectrumReport out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es3(rep.J3);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es2(rep.casimir());
  if (es3.info() != Eigen::Success || es2.info() != Eigen::Success)
    throw std::runtime_error("eigendecomposition failed");
  out.j3_eigenvalues = es3.eigenvalues();
  const Eigen::Index d = rep.dim();
  for (Eigen::Index k = 0; k < d; ++k) {
    const double expected_m = -rep.j + static_cast<double>(k);  // ascending order
    out.max_j3_deviation = std::max(
        out.max_j3_deviation, std::abs(out.j3_eigenvalues(k) - rep.hbar * expected_m));
    out.max_casimir_deviation =
        std::max(out.max_casimir_deviation,
                 std::abs(es2.eigenvalues()(k) -
                          rep.hbar * rep.hbar * rep.j * (rep.j + 1.0)));
  }
  out.pass = out.max_j3_deviation <= tol && out.max_casimir_deviation <= tol;
  return out;
}

}  // namespace galqm
