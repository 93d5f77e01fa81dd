#pragma once

#include <cmath>
#include <functional>
#include <numbers>
#include <optional>
#include <utility>

#include "galqm/fft.hpp"
#include "galqm/states.hpp"

namespace galqm {

/// Uniform periodic grid with n points (a power of two) on [-L/2, L/2).
/// The grid is the finite stand-in for the rigged-space construction:
/// position acts diagonally on samples, momentum diagonally in the discrete
/// Fourier basis, and edge artifacts of their mismatch are quarantined by
/// using interior-supported states.
struct GridConfig {
  Eigen::Index n = 1024;
  double length = 40.0;
  double mass = 1.0;
  double hbar = 1.0;

  double dx() const { return length / static_cast<double>(n); }
  double x(Eigen::Index i) const { return -0.5 * length + static_cast<double>(i) * dx(); }

  /// FFT-ordered wavenumber of bin j: 2 pi f / L with f = j (j < n/2) or
  /// j - n (j >= n/2).
  double wavenumber(Eigen::Index bin) const {
    const auto f = bin < n / 2 ? bin : bin - n;
    return 2.0 * std::numbers::pi * static_cast<double>(f) / length;
  }

  void validate() const {
    if (n < 16 || (n & (n - 1)) != 0)
      throw std::invalid_argument("grid size must be a power of two and at least 16");
    if (!(length > 0.0)) throw std::invalid_argument("box length must be positive");
    if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
    if (!(hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
  }

  friend bool operator==(const GridConfig&, const GridConfig&) = default;
};

/// Wavefunction samples on a grid, optionally tensored with a spin-1/2
/// factor. Spinor layout: [spin-up block | spin-down block], each of length
/// n. Norms carry the dx quadrature weight.
struct GridState {
  Eigen::VectorXcd amplitudes;
  GridConfig config;
  SectorLabel sector;

  int spin_dim() const {
    if (amplitudes.size() == config.n) return 1;
    if (amplitudes.size() == 2 * config.n) return 2;
    throw std::logic_error("grid state size is neither n nor 2n");
  }

  double norm() const { return std::sqrt(config.dx()) * amplitudes.norm(); }

  GridState normalized() const {
    const double n = norm();
    if (!(n > 0.0)) throw std::invalid_argument("cannot normalize a zero state");
    return {amplitudes / n, config, sector};
  }
};

/// <a|b> = dx * sum conj(a_i) b_i.
inline Complex grid_inner(const GridState& a, const GridState& b) {
  if (a.amplitudes.size() != b.amplitudes.size() || !(a.config == b.config))
    throw std::invalid_argument("grid states are not compatible");
  return a.config.dx() * a.amplitudes.dot(b.amplitudes);
}

inline double grid_expectation(const GridState& s, const Observable& op) {
  if (op.dim() != s.amplitudes.size())
    throw std::invalid_argument("operator/state dimension mismatch");
  const Eigen::VectorXcd av = op(s.amplitudes);
  const Complex e = s.config.dx() * s.amplitudes.dot(av);
  const double n2 = s.config.dx() * s.amplitudes.squaredNorm();
  if (std::abs(e.imag()) > 1e-10 * std::max(1.0, std::abs(e)))
    throw std::invalid_argument("expectation has a non-real residue; operator not Hermitian");
  return e.real() / n2;
}

inline double grid_variance(const GridState& s, const Observable& op) {
  if (op.dim() != s.amplitudes.size())
    throw std::invalid_argument("operator/state dimension mismatch");
  const Eigen::VectorXcd av = op(s.amplitudes);
  const double n2 = s.config.dx() * s.amplitudes.squaredNorm();
  const double second = s.config.dx() * av.squaredNorm() / n2;
  const Complex first = s.config.dx() * s.amplitudes.dot(av) / n2;
  const double var = second - first.real() * first.real();
  return var < 0.0 ? 0.0 : var;
}

/// X: multiplication by the grid coordinate.
inline Observable position_op(const GridConfig& cfg) {
  cfg.validate();
  return Observable::matrix_free(cfg.n, [cfg](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index i = 0; i < cfg.n; ++i) out(i) = cfg.x(i) * v(i);
    return out;
  });
}

/// P: transform, multiply by hbar k, transform back (spectral derivative).
inline Observable momentum_op(const GridConfig& cfg) {
  cfg.validate();
  return Observable::matrix_free(cfg.n, [cfg](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out = v;
    fft::forward(out.data(), static_cast<std::size_t>(cfg.n));
    for (Eigen::Index j = 0; j < cfg.n; ++j) out(j) *= cfg.hbar * cfg.wavenumber(j);
    fft::inverse(out.data(), static_cast<std::size_t>(cfg.n));
    return out;
  });
}

/// K = mu X, the boost generator in the position representation.
inline Observable boost_op(const GridConfig& cfg) {
  cfg.validate();
  return Observable::matrix_free(cfg.n, [cfg](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (Eigen::Index i = 0; i < cfg.n; ++i) out(i) = cfg.mass * cfg.x(i) * v(i);
    return out;
  });
}

/// base acting identically on each spin component: base (x) 1_spin.
inline Observable lift_to_spinor(const Observable& base, int spin_components = 2) {
  const Eigen::Index n = base.dim();
  return Observable::matrix_free(n * spin_components, [base, n, spin_components](
                                                          const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    for (int s = 0; s < spin_components; ++s)
      out.segment(s * n, n) = base(v.segment(s * n, n).eval());
    return out;
  });
}

/// 1_grid (x) s for a 2x2 spin matrix s.
inline Observable spin_operator(Eigen::Index grid_dim, const Eigen::Matrix2cd& s) {
  return Observable::matrix_free(2 * grid_dim, [grid_dim, s](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out(v.size());
    out.segment(0, grid_dim) =
        s(0, 0) * v.segment(0, grid_dim) + s(0, 1) * v.segment(grid_dim, grid_dim);
    out.segment(grid_dim, grid_dim) =
        s(1, 0) * v.segment(0, grid_dim) + s(1, 1) * v.segment(grid_dim, grid_dim);
    return out;
  });
}

/// Jz on a 1-D grid tensored with spin-1/2. A 1-D axis carries no orbital
/// angular momentum, so only the additive spin part (hbar/2) sigma3 remains;
/// the orbital contribution lives on the 2-D slice (see plane.hpp).
inline Observable total_angular_momentum_z(const GridConfig& cfg) {
  cfg.validate();
  Eigen::Matrix2cd sz;
  sz << 0.5 * cfg.hbar, 0.0, 0.0, -0.5 * cfg.hbar;
  return spin_operator(cfg.n, sz);
}

/// Hamiltonian: the operator plus, when H is a pure function of P, its
/// momentum-space symbol (energy per FFT bin of the spatial factor), which
/// enables exact exponentiation of the evolution.
struct Hamiltonian {
  Observable op;
  std::optional<Eigen::VectorXd> momentum_symbol;

  Hamiltonian(Observable o) : op(std::move(o)) {}
  Hamiltonian(Observable o, Eigen::VectorXd symbol)
      : op(std::move(o)), momentum_symbol(std::move(symbol)) {}
};

/// Free Hamiltonian H = P^2 / (2 mu), diagonal in the momentum basis.
inline Hamiltonian free_hamiltonian(const GridConfig& cfg) {
  cfg.validate();
  Eigen::VectorXd symbol(cfg.n);
  for (Eigen::Index j = 0; j < cfg.n; ++j) {
    const double p = cfg.hbar * cfg.wavenumber(j);
    symbol(j) = p * p / (2.0 * cfg.mass);
  }
  Observable op = Observable::matrix_free(cfg.n, [cfg, symbol](const Eigen::VectorXcd& v) {
    Eigen::VectorXcd out = v;
    fft::forward(out.data(), static_cast<std::size_t>(cfg.n));
    for (Eigen::Index j = 0; j < cfg.n; ++j) out(j) *= symbol(j);
    fft::inverse(out.data(), static_cast<std::size_t>(cfg.n));
    return out;
  });
  return {std::move(op), std::move(symbol)};
}

/// External electromagnetic coupling. Potentials are functions of x along
/// the grid axis; absent potentials mean identically zero. The magnetic
/// field is uniform and couples through the Pauli term, which requires the
/// spin factor.
struct EmParams {
  std::optional<std::function<double(double)>> scalar_potential;          // A0(x)
  std::optional<std::function<Eigen::Vector3d(double)>> vector_potential; // A(x)
  Eigen::Vector3d magnetic_field = Eigen::Vector3d::Zero();
  double charge = 1.0;         // e
  double gyromagnetic = 1.0;   // g_l
  double light_speed = 137.035999084;
  // The axioms print the scalar coupling as (e/c) A0 and the Pauli strength
  // as g_l hbar e / (mu c); set this flag to use the conventional e A0 and
  // g_l hbar e / (2 mu c) instead for comparison runs.
  bool conventional_coefficients = false;
};

/// H = (1/2mu)(P - (e/c)A)^2 + s A0 - p B.sigma acting on grid spinors,
/// with s and p as selected by EmParams::conventional_coefficients. On the
/// 1-D grid the transverse momenta vanish on the carrier space, so the y/z
/// components of A enter only through their squares.
inline Hamiltonian em_hamiltonian(const GridConfig& cfg, const EmParams& em,
                                  bool spin_factor) {
  cfg.validate();
  if (!(em.light_speed > 0.0)) throw std::invalid_argument("light speed must be positive");
  const bool has_b = em.magnetic_field.squaredNorm() > 0.0;
  if (has_b && !spin_factor)
    throw std::invalid_argument("magnetic coupling requires the spin-1/2 factor");

  const double a_coef = em.charge / em.light_speed;
  const double scalar_coef =
      em.conventional_coefficients ? em.charge : em.charge / em.light_speed;
  const double pauli_coef = em.gyromagnetic * cfg.hbar * em.charge /
                            (cfg.mass * em.light_speed) *
                            (em.conventional_coefficients ? 0.5 : 1.0);

  // precomputed diagonals
  Eigen::VectorXcd ax = Eigen::VectorXcd::Zero(cfg.n);       // (e/c) A_x
  Eigen::VectorXcd diag = Eigen::VectorXcd::Zero(cfg.n);     // (e/c)^2 (A_y^2+A_z^2)/2mu + s A0
  for (Eigen::Index i = 0; i < cfg.n; ++i) {
    const double xi = cfg.x(i);
    if (em.vector_potential) {
      const Eigen::Vector3d a = (*em.vector_potential)(xi);
      ax(i) = a_coef * a.x();
      diag(i) += a_coef * a_coef * (a.y() * a.y() + a.z() * a.z()) / (2.0 * cfg.mass);
    }
    if (em.scalar_potential) diag(i) += scalar_coef * (*em.scalar_potential)(xi);
  }

  const Eigen::Matrix2cd pauli_term = [&] {
    Eigen::Matrix2cd s1, s2, s3;
    s1 << 0, 1, 1, 0;
    s2 << 0, Complex(0, -1), Complex(0, 1), 0;
    s3 << 1, 0, 0, -1;
    return (-pauli_coef * (em.magnetic_field.x() * s1 + em.magnetic_field.y() * s2 +
                           em.magnetic_field.z() * s3))
        .eval();
  }();

  auto momentum_apply = [cfg](Eigen::VectorXcd v) {
    fft::forward(v.data(), static_cast<std::size_t>(cfg.n));
    for (Eigen::Index j = 0; j < cfg.n; ++j) v(j) *= cfg.hbar * cfg.wavenumber(j);
    fft::inverse(v.data(), static_cast<std::size_t>(cfg.n));
    return v;
  };

  // spatial part applied to one component
  auto component_apply = [cfg, ax, diag, momentum_apply](const Eigen::VectorXcd& u) {
    const Eigen::VectorXcd t1 = momentum_apply(u) - ax.cwiseProduct(u);
    Eigen::VectorXcd out = (momentum_apply(t1) - ax.cwiseProduct(t1)) / (2.0 * cfg.mass);
    out += diag.cwiseProduct(u);
    return out;
  };

  const Eigen::Index dim = spin_factor ? 2 * cfg.n : cfg.n;
  Observable op = Observable::matrix_free(
      dim, [cfg, component_apply, pauli_term, spin_factor](const Eigen::VectorXcd& v) {
        if (!spin_factor) return component_apply(v).eval();
        Eigen::VectorXcd out(v.size());
        const Eigen::Index n = cfg.n;
        const Eigen::VectorXcd up = v.segment(0, n);
        const Eigen::VectorXcd dn = v.segment(n, n);
        out.segment(0, n) = component_apply(up) + pauli_term(0, 0) * up + pauli_term(0, 1) * dn;
        out.segment(n, n) = component_apply(dn) + pauli_term(1, 0) * up + pauli_term(1, 1) * dn;
        return out;
      });

  const bool field_free = !em.scalar_potential && !em.vector_potential && !has_b;
  if (field_free) {
    Eigen::VectorXd symbol(cfg.n);
    for (Eigen::Index j = 0; j < cfg.n; ++j) {
      const double p = cfg.hbar * cfg.wavenumber(j);
      symbol(j) = p * p / (2.0 * cfg.mass);
    }
    return {std::move(op), std::move(symbol)};
  }
  return {std::move(op)};
}

/// Normalized Gaussian packet exp(-(x-x0)^2/(4 sigma^2) + i p0 x / hbar);
/// position spread sigma, momentum spread hbar/(2 sigma).
inline GridState gaussian_packet(const GridConfig& cfg, double center, double sigma,
                                 double momentum, SectorLabel sector = {}) {
  cfg.validate();
  validate(sector);
  if (!(sigma > 0.0)) throw std::invalid_argument("sigma must be positive");
  Eigen::VectorXcd amp(cfg.n);
  for (Eigen::Index i = 0; i < cfg.n; ++i) {
    const double d = cfg.x(i) - center;
    amp(i) = std::exp(Complex(-d * d / (4.0 * sigma * sigma), momentum * cfg.x(i) / cfg.hbar));
  }
  return GridState{std::move(amp), cfg, sector}.normalized();
}

/// Normalized plane wave exp(i k x) with k = 2 pi mode / L, an exact
/// eigenvector of the discrete momentum.
inline GridState plane_wave_state(const GridConfig& cfg, long mode, SectorLabel sector = {}) {
  cfg.validate();
  validate(sector);
  if (std::abs(mode) >= cfg.n / 2) throw std::invalid_argument("plane wave mode out of range");
  const double k = 2.0 * std::numbers::pi * static_cast<double>(mode) / cfg.length;
  Eigen::VectorXcd amp(cfg.n);
  const double scale = 1.0 / std::sqrt(cfg.length);
  for (Eigen::Index i = 0; i < cfg.n; ++i)
    amp(i) = scale * std::exp(Complex(0.0, k * cfg.x(i)));
  return {std::move(amp), cfg, sector};
}

/// Tensors a scalar grid state with a (normalized) spinor.
inline GridState with_spin(const GridState& spatial, const Eigen::Vector2cd& spinor) {
  if (spatial.spin_dim() != 1) throw std::invalid_argument("state already carries spin");
  const double n = spinor.norm();
  if (!(n > 0.0)) throw std::invalid_argument("spinor must be nonzero");
  GridState out;
  out.config = spatial.config;
  out.sector = spatial.sector;
  out.amplitudes.resize(2 * spatial.config.n);
  out.amplitudes.segment(0, spatial.config.n) = (spinor(0) / n) * spatial.amplitudes;
  out.amplitudes.segment(spatial.config.n, spatial.config.n) =
      (spinor(1) / n) * spatial.amplitudes;
  return out;
}

/// Gauge transformation of the first kind on grid states.
inline GridState gauge_transform(const GridState& s, double theta) {
  const double phase = theta * static_cast<double>(s.sector.charge);
  return {std::exp(Complex(0.0, phase)) * s.amplitudes, s.config, s.sector};
}

}  // namespace galqm
