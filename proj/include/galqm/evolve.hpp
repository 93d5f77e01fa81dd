#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

#include "galqm/grid.hpp"

namespace galqm {

enum class EvolveMethod {
  exact_momentum,   // momentum-space exponential; H must be a function of P
  crank_nicolson,   // unconditionally unitary Cayley stepping for general H
};

struct EvolveOptions {
  double dt = 1e-3;           // Crank-Nicolson step size
  double solver_tol = 1e-13;  // relative residual of the linear solve
  int max_solver_iterations = 400;
};

namespace detail {

// One Cayley step: (1 + i lam H) psi' = (1 - i lam H) psi with
// lam = dt/(2 hbar). Solved through the Hermitian positive definite normal
// form (1 + lam^2 H^2) psi' = (1 - 2 i lam H - lam^2 H^2) psi by conjugate
// gradients; the operator has spectrum in [1, 1 + (lam |H|)^2], so a handful
// of iterations reaches solver_tol for the step sizes in use.
inline Eigen::VectorXcd crank_nicolson_step(const Observable& h, const Eigen::VectorXcd& psi,
                                            double lam, const EvolveOptions& opts) {
  const Complex i_unit(0.0, 1.0);
  const Eigen::VectorXcd hpsi = h(psi);
  const Eigen::VectorXcd h2psi = h(hpsi);
  const Eigen::VectorXcd rhs = psi - 2.0 * i_unit * lam * hpsi - lam * lam * h2psi;
  auto normal_apply = [&](const Eigen::VectorXcd& v) {
    return (v + lam * lam * h(h(v))).eval();
  };

  Eigen::VectorXcd x = psi;
  Eigen::VectorXcd r = rhs - normal_apply(x);
  Eigen::VectorXcd p = r;
  double rr = r.squaredNorm();
  const double stop = opts.solver_tol * opts.solver_tol * rhs.squaredNorm();
  for (int it = 0; rr > stop && it < opts.max_solver_iterations; ++it) {
    const Eigen::VectorXcd ap = normal_apply(p);
    const double alpha = rr / p.dot(ap).real();
    x += alpha * p;
    r -= alpha * ap;
    const double rr_new = r.squaredNorm();
    p = r + (rr_new / rr) * p;
    rr = rr_new;
  }
  if (rr > stop) throw std::runtime_error("Crank-Nicolson linear solve did not converge");
  return x;
}

}  // namespace detail

/// U(t) psi for the time-independent Hamiltonian h. The exact method applies
/// exp(-i E_k t / hbar) per momentum bin and is available only when h
/// carries a momentum symbol; Crank-Nicolson handles the general case with
/// fixed step opts.dt. t = 0 returns the input unchanged. The sector label
/// is carried through untouched.
inline GridState evolve(const GridState& psi, const Hamiltonian& h, double t,
                        EvolveMethod method = EvolveMethod::exact_momentum,
                        const EvolveOptions& opts = {}) {
  psi.config.validate();
  const int spin = psi.spin_dim();
  if (h.op.dim() != psi.amplitudes.size())
    throw std::invalid_argument("hamiltonian/state dimension mismatch");
  if (!std::isfinite(t)) throw std::invalid_argument("evolution time must be finite");
  if (std::abs(psi.norm() - 1.0) > 1e-6)
    throw std::invalid_argument("evolve requires a normalized state");
  if (t == 0.0) return psi;

  GridState out = psi;
  const Eigen::Index n = psi.config.n;
  const double hbar = psi.config.hbar;

  if (method == EvolveMethod::exact_momentum) {
    if (!h.momentum_symbol)
      throw std::invalid_argument(
          "exact momentum-space evolution requires H diagonal in momentum");
    if (h.momentum_symbol->size() != n)
      throw std::invalid_argument("momentum symbol does not match the grid");
    for (int s = 0; s < spin; ++s) {
      Eigen::VectorXcd block = out.amplitudes.segment(s * n, n);
      fft::forward(block.data(), static_cast<std::size_t>(n));
      for (Eigen::Index j = 0; j < n; ++j)
        block(j) *= std::exp(Complex(0.0, -(*h.momentum_symbol)(j)*t / hbar));
      fft::inverse(block.data(), static_cast<std::size_t>(n));
      out.amplitudes.segment(s * n, n) = block;
    }
    return out;
  }

  if (!(opts.dt > 0.0)) throw std::invalid_argument("step size must be positive");
  const long steps = std::max(1L, std::lround(std::ceil(std::abs(t) / opts.dt - 1e-9)));
  const double lam = (t / static_cast<double>(steps)) / (2.0 * hbar);
  for (long k = 0; k < steps; ++k)
    out.amplitudes = detail::crank_nicolson_step(h.op, out.amplitudes, lam, opts);
  return out;
}

/// Propagator U(t, t0) with the four defining properties (unitarity,
/// composition, identity at t0, and the induced Heisenberg-picture map),
/// realized by evolving over t - t0.
class EvolutionOperator {
 public:
  EvolutionOperator(Hamiltonian h, double t0, double t,
                    EvolveMethod method = EvolveMethod::exact_momentum,
                    EvolveOptions opts = {})
      : h_(std::move(h)), t0_(t0), t_(t), method_(method), opts_(opts) {}

  double t0() const { return t0_; }
  double t() const { return t_; }

  GridState operator()(const GridState& psi) const {
    return evolve(psi, h_, t_ - t0_, method_, opts_);
  }

 private:
  Hamiltonian h_;
  double t0_, t_;
  EvolveMethod method_;
  EvolveOptions opts_;
};

namespace detail {

inline EvolveMethod preferred_method(const Hamiltonian& h) {
  return h.momentum_symbol ? EvolveMethod::exact_momentum : EvolveMethod::crank_nicolson;
}

}  // namespace detail

/// Residual of H psi = i hbar d psi / dt with the derivative replaced by the
/// symmetric difference over dt: || H psi - i hbar (psi(+dt) - psi(-dt)) /
/// (2 dt) || / || H psi ||. Decays as dt^2.
inline double schrodinger_residual(const GridState& psi, const Hamiltonian& h, double dt,
                                   const EvolveOptions& opts = {}) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  if (!(psi.norm() > 0.0)) throw std::invalid_argument("state must be nonzero");
  const EvolveMethod method = detail::preferred_method(h);
  const GridState fwd = evolve(psi, h, dt, method, opts);
  const GridState bwd = evolve(psi, h, -dt, method, opts);
  const Eigen::VectorXcd hpsi = h.op(psi.amplitudes);
  const double scale = hpsi.norm();
  if (!(scale > 0.0)) throw std::invalid_argument("state is annihilated by H");
  const Eigen::VectorXcd diff =
      hpsi - Complex(0.0, psi.config.hbar / (2.0 * dt)) * (fwd.amplitudes - bwd.amplitudes);
  return diff.norm() / scale;
}

struct HeisenbergReport {
  double numeric_rate = 0.0;    // d<A>/dt by symmetric difference along the flow
  double algebraic_rate = 0.0;  // (i/hbar) <[H, A]>
  double discrepancy = 0.0;
};

/// Heisenberg equation check at time t along the trajectory of psi.
inline HeisenbergReport heisenberg_check(const GridState& psi, const Hamiltonian& h,
                                         const Observable& a, double t, double dt,
                                         const EvolveOptions& opts = {}) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const EvolveMethod method = detail::preferred_method(h);
  const GridState mid = evolve(psi, h, t, method, opts);
  const GridState fwd = evolve(psi, h, t + dt, method, opts);
  const GridState bwd = evolve(psi, h, t - dt, method, opts);

  HeisenbergReport rep;
  rep.numeric_rate =
      (grid_expectation(fwd, a) - grid_expectation(bwd, a)) / (2.0 * dt);
  // <[H,A]> = z - conj(z) with z = <H psi | A psi>, so (i/hbar)<[H,A]> =
  // -(2/hbar) Im z.
  GridState hmid = mid;
  hmid.amplitudes = h.op(mid.amplitudes);
  GridState amid = mid;
  amid.amplitudes = a(mid.amplitudes);
  const Complex z = grid_inner(hmid, amid);
  rep.algebraic_rate = -2.0 * z.imag() / psi.config.hbar;
  rep.discrepancy = std::abs(rep.numeric_rate - rep.algebraic_rate);
  return rep;
}

struct TimeEnergyReport {
  double energy_spread = 0.0;       // Delta H
  double observable_spread = 0.0;   // Delta A
  double rate = 0.0;                // d<A>/dt
  double characteristic_time = 0.0; // tau_A = Delta A / |d<A>/dt| (inf if stationary)
  double slack = 0.0;               // Delta H * tau_A - hbar/2
  bool stationary = false;          // |d<A>/dt| below threshold; bound holds vacuously
  bool satisfied = false;
};

/// Time-energy relation Delta H * tau_A >= hbar/2 with tau_A the
/// characteristic evolution time of A.
inline TimeEnergyReport time_energy_check(const GridState& psi, const Hamiltonian& h,
                                          const Observable& a, double dt,
                                          const EvolveOptions& opts = {}) {
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  const EvolveMethod method = detail::preferred_method(h);
  const GridState fwd = evolve(psi, h, dt, method, opts);
  const GridState bwd = evolve(psi, h, -dt, method, opts);

  TimeEnergyReport rep;
  rep.energy_spread = std::sqrt(grid_variance(psi, h.op));
  rep.observable_spread = std::sqrt(grid_variance(psi, a));
  rep.rate = (grid_expectation(fwd, a) - grid_expectation(bwd, a)) / (2.0 * dt);
  if (std::abs(rep.rate) < 1e-12) {
    rep.stationary = true;
    rep.characteristic_time = std::numeric_limits<double>::infinity();
    rep.slack = std::numeric_limits<double>::infinity();
    rep.satisfied = true;
    return rep;
  }
  rep.characteristic_time = rep.observable_spread / std::abs(rep.rate);
  rep.slack = rep.energy_spread * rep.characteristic_time - 0.5 * psi.config.hbar;
  rep.satisfied = rep.slack >= -1e-8;
  return rep;
}

}  // namespace galqm
