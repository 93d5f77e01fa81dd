#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "galqm/sectors.hpp"

namespace galqm {

using Complex = std::complex<double>;

/// Dense spectral routines (eigendecompositions) are capped at this
/// dimension; beyond it operators must be used matrix-free.
inline constexpr Eigen::Index dense_spectral_limit = 512;

/// Representative of a physical state: complex amplitudes plus the
/// superselection sector the state lives in.
struct StateVector {
  Eigen::VectorXcd amplitudes;
  SectorLabel sector;

  double norm() const { return amplitudes.norm(); }

  StateVector normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero state");
    return {amplitudes / n, sector};
  }
};

inline bool is_normalized(const StateVector& s, double tolerance = 1e-9) {
  return std::abs(s.norm() - 1.0) <= tolerance;
}

/// Phase-blind equivalence class of unit vectors.
class Ray {
 public:
  explicit Ray(const StateVector& representative) : rep_(representative.normalized()) {}

  const StateVector& representative() const { return rep_; }

 private:
  StateVector rep_;
};

/// |<psi|phi>| of normalized representatives; independent of the chosen
/// phases. Distinct sectors are mutually orthogonal subspaces, so their
/// rays overlap in 0 regardless of amplitudes.
inline double ray_overlap(const Ray& a, const Ray& b) {
  if (!(a.representative().sector == b.representative().sector)) return 0.0;
  if (a.representative().amplitudes.size() != b.representative().amplitudes.size())
    throw std::invalid_argument("ray overlap requires equal dimensions");
  return std::abs(a.representative().amplitudes.dot(b.representative().amplitudes));
}

/// A Hermitian linear operator, either as a dense matrix or as an opaque
/// applicable map with declared dimension. Dense construction checks
/// Hermiticity; matrix-free maps are trusted and caught downstream by the
/// imaginary-residue assertions.
class Observable {
 public:
  using ApplyFn = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

  static Observable dense(Eigen::MatrixXcd a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("observable matrix must be square");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double defect = (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (defect > 1e-12 * scale)
      throw std::invalid_argument("observable must be Hermitian (A15)");
    Observable o;
    o.dim_ = a.rows();
    o.matrix_ = std::move(a);
    return o;
  }

  static Observable matrix_free(Eigen::Index dim, ApplyFn apply) {
    if (dim <= 0) throw std::invalid_argument("observable dimension must be positive");
    if (!apply) throw std::invalid_argument("observable apply function must be set");
    Observable o;
    o.dim_ = dim;
    o.apply_ = std::move(apply);
    return o;
  }

  Eigen::Index dim() const { return dim_; }
  bool is_dense() const { return matrix_.size() > 0; }

  const Eigen::MatrixXcd& matrix() const {
    if (!is_dense()) throw std::logic_error("observable has no dense matrix");
    return matrix_;
  }

  Eigen::VectorXcd operator()(const Eigen::VectorXcd& v) const {
    if (v.size() != dim_) throw std::invalid_argument("observable/vector dimension mismatch");
    if (is_dense()) return matrix_ * v;
    Eigen::VectorXcd out = apply_(v);
    if (out.size() != dim_) throw std::logic_error("observable apply changed the dimension");
    return out;
  }

 private:
  Observable() = default;
  Eigen::Index dim_ = 0;
  Eigen::MatrixXcd matrix_;
  ApplyFn apply_;
};

/// Closed interval of eigenvalues.
struct EigenvalueBand {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double a) const { return a >= lo && a <= hi; }
};

namespace detail {

// Groups sorted eigenvalues whose gap is below 1e-9 relative to the
// spectral scale; each cluster is one (possibly degenerate) eigenspace.
inline std::vector<std::pair<Eigen::Index, Eigen::Index>> cluster_eigenvalues(
    const Eigen::VectorXd& sorted) {
  const double scale = std::max({1.0, std::abs(sorted(0)), std::abs(sorted(sorted.size() - 1))});
  const double gap = 1e-9 * scale;
  std::vector<std::pair<Eigen::Index, Eigen::Index>> clusters;
  Eigen::Index begin = 0;
  for (Eigen::Index k = 1; k <= sorted.size(); ++k) {
    if (k == sorted.size() || sorted(k) - sorted(k - 1) > gap) {
      clusters.emplace_back(begin, k);
      begin = k;
    }
  }
  return clusters;
}

inline void require_dense_spectral(const Observable& obs, const char* what) {
  if (!obs.is_dense())
    throw std::invalid_argument(std::string(what) + " requires a dense observable");
  if (obs.dim() > dense_spectral_limit)
    throw std::invalid_argument(std::string(what) + " exceeds the dense spectral limit");
}

inline void require_normalized(const StateVector& s) {
  if (!is_normalized(s)) throw std::invalid_argument("state must be normalized");
}

}  // namespace detail

/// Probability that the property takes a value inside the band:
/// P = sum_{a_k in band} |c_k|^2 with c_k the components along the
/// eigenvectors. Degenerate eigenvalues are grouped into one eigenspace and
/// enter through the squared norm of the full eigenspace projection.
inline double probability(const StateVector& state, const Observable& obs,
                          const EigenvalueBand& band) {
  detail::require_dense_spectral(obs, "probability");
  detail::require_normalized(state);
  if (state.amplitudes.size() != obs.dim())
    throw std::invalid_argument("state/observable dimension mismatch");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(obs.matrix());
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::VectorXd eigs = es.eigenvalues();
  const Eigen::VectorXcd coeff = es.eigenvectors().adjoint() * state.amplitudes;
  double p = 0.0;
  for (const auto& [b, e] : detail::cluster_eigenvalues(eigs)) {
    const double representative = eigs.segment(b, e - b).mean();
    if (!band.contains(representative)) continue;
    p += coeff.segment(b, e - b).squaredNorm();
  }
  return p;
}

/// <A> = <psi|A|psi>; the imaginary residue must stay below 1e-10 of the
/// magnitude (it is asserted, then discarded).
inline double expectation(const StateVector& state, const Observable& obs) {
  detail::require_normalized(state);
  const Eigen::VectorXcd av = obs(state.amplitudes);
  const Complex e = state.amplitudes.dot(av);
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, std::abs(e)))
    throw std::invalid_argument("expectation has a non-real residue; observable not Hermitian");
  return e.real();
}

/// (Delta A)^2 = <A^2> - <A>^2, computed as ||A psi||^2 - <A>^2; tiny
/// negative rounding is clamped to zero.
inline double variance(const StateVector& state, const Observable& obs) {
  detail::require_normalized(state);
  const Eigen::VectorXcd av = obs(state.amplitudes);
  const double second = av.squaredNorm();
  const Complex first = state.amplitudes.dot(av);
  if (std::abs(first.imag()) > 1e-10 * std::max(1.0, std::abs(first)))
    throw std::invalid_argument("expectation has a non-real residue; observable not Hermitian");
  const double var = second - first.real() * first.real();
  return var < 0.0 ? 0.0 : var;
}

struct UncertaintyReport {
  double lhs = 0.0;    // (Delta A)^2 (Delta B)^2
  double rhs = 0.0;    // <C>^2 / 4 with [A,B] = i C
  double slack = 0.0;  // lhs - rhs
  bool satisfied = false;
};

/// Checks (Delta A)^2 (Delta B)^2 >= <C>^2/4 where C = -i[A,B] is the
/// Hermitian operator with [A,B] = iC.
inline UncertaintyReport uncertainty_bound_check(const StateVector& state,
                                                 const Observable& a, const Observable& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("observable dimension mismatch");
  const Complex minus_i(0.0, -1.0);
  const Observable c = Observable::matrix_free(a.dim(), [&a, &b, minus_i](const Eigen::VectorXcd& v) {
    return (minus_i * (a(b(v)) - b(a(v)))).eval();
  });
  UncertaintyReport rep;
  rep.lhs = variance(state, a) * variance(state, b);
  const double ec = expectation(state, c);
  rep.rhs = 0.25 * ec * ec;
  rep.slack = rep.lhs - rep.rhs;
  rep.satisfied = rep.slack >= -1e-10;
  return rep;
}

struct CommonEigenbasis {
  bool commuting = false;
  Eigen::MatrixXcd basis;      // columns: simultaneous eigenvectors (when commuting)
  Eigen::VectorXd eigenvalues_a;
  Eigen::VectorXd eigenvalues_b;
};

/// Two Hermitian matrices share a basis of eigenvectors iff they commute.
/// When they do, the basis is built by diagonalizing B inside each
/// eigenspace of A. Failure of that construction below the commutator
/// tolerance signals a numerically degenerate input and throws.
inline CommonEigenbasis common_eigenbasis_check(const Observable& a, const Observable& b) {
  detail::require_dense_spectral(a, "common_eigenbasis_check");
  detail::require_dense_spectral(b, "common_eigenbasis_check");
  if (a.dim() != b.dim()) throw std::invalid_argument("observable dimension mismatch");
  const Eigen::MatrixXcd& ma = a.matrix();
  const Eigen::MatrixXcd& mb = b.matrix();
  CommonEigenbasis out;
  const double na = ma.norm();
  const double nb = mb.norm();
  const double comm = (ma * mb - mb * ma).norm();
  out.commuting = comm <= 1e-10 * std::max(na * nb, 1e-300);
  if (!out.commuting) return out;

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(ma);
  if (es.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  Eigen::MatrixXcd basis = es.eigenvectors();
  const Eigen::VectorXd ea = es.eigenvalues();
  for (const auto& [begin, end] : detail::cluster_eigenvalues(ea)) {
    const Eigen::Index m = end - begin;
    if (m == 1) continue;
    const Eigen::MatrixXcd sub = basis.middleCols(begin, m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> esb(
        (sub.adjoint() * mb * sub).eval());
    if (esb.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
    basis.middleCols(begin, m) = sub * esb.eigenvectors();
  }
  const Eigen::MatrixXcd da = basis.adjoint() * ma * basis;
  const Eigen::MatrixXcd db = basis.adjoint() * mb * basis;
  auto offdiag = [](const Eigen::MatrixXcd& m) {
    return (m - m.diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff();
  };
  const double scale = std::max({1.0, na, nb});
  if (offdiag(da) > 1e-8 * scale || offdiag(db) > 1e-8 * scale)
    throw std::runtime_error(
        "simultaneous diagonalization failed below the commutator tolerance "
        "(numerically degenerate input)");
  out.basis = basis;
  out.eigenvalues_a = da.diagonal().real();
  out.eigenvalues_b = db.diagonal().real();
  return out;
}

}  // namespace galqm
