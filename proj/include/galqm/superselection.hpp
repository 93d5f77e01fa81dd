#pragma once

#include <string>
#include <vector>

#include "galqm/states.hpp"

namespace galqm {

/// Coherent combination alpha*s1 + beta*s2, normalized. Defined only inside
/// a single superselection sector; mixing sectors throws SectorViolation.
inline StateVector superpose(const StateVector& s1, const StateVector& s2, Complex alpha,
                             Complex beta) {
  if (!(s1.sector == s2.sector)) throw SectorViolation(s1.sector, s2.sector);
  if (s1.amplitudes.size() != s2.amplitudes.size())
    throw std::invalid_argument("superpose requires equal dimensions");
  StateVector out{alpha * s1.amplitudes + beta * s2.amplitudes, s1.sector};
  return out.normalized();
}

/// Gauge transformation of the first kind: a global phase exp(i theta q)
/// generated by the charge, with q the sector charge in units of the
/// elementary charge. Leaves the ray (and every expectation value) fixed.
inline StateVector gauge_transform(const StateVector& s, double theta) {
  const double phase = theta * static_cast<double>(s.sector.charge);
  return {std::exp(Complex(0.0, phase)) * s.amplitudes, s.sector};
}

/// One contiguous sector block of an operator's carrier space.
struct SectorBlock {
  SectorLabel sector;
  Eigen::Index dim = 0;
};

/// Observable together with its declared sector block layout.
struct SectoredObservable {
  std::string name;
  Observable op;
  std::vector<SectorBlock> blocks;
};

struct ChargeAuditEntry {
  std::string name;
  double max_cross_sector = 0.0;  // largest matrix element between distinct charges
  bool pass = false;
};

struct ChargeAuditReport {
  std::vector<ChargeAuditEntry> entries;
  double tolerance = 0.0;
  bool all_pass = false;
};

/// Audits [Q,A] = 0 in its executable form: no observable may connect
/// blocks carrying different charge. Dense operators are scanned entry by
/// entry; matrix-free ones are probed column-wise per block.
inline ChargeAuditReport charge_commutation_audit(
    const std::vector<SectoredObservable>& observables, double tolerance = 1e-12) {
  ChargeAuditReport report;
  report.tolerance = tolerance;
  report.all_pass = true;
  for (const auto& so : observables) {
    Eigen::Index total = 0;
    for (const auto& blk : so.blocks) total += blk.dim;
    if (total != so.op.dim())
      throw std::invalid_argument("sector blocks do not cover the operator dimension");

    // charge label per coordinate
    std::vector<long long> charge_of(static_cast<std::size_t>(total));
    Eigen::Index at = 0;
    for (const auto& blk : so.blocks) {
      validate(blk.sector);
      for (Eigen::Index i = 0; i < blk.dim; ++i) charge_of[at + i] = blk.sector.charge;
      at += blk.dim;
    }

    double worst = 0.0;
    double scale = 0.0;
    if (so.op.is_dense()) {
      const Eigen::MatrixXcd& m = so.op.matrix();
      scale = std::max(1.0, m.cwiseAbs().maxCoeff());
      for (Eigen::Index i = 0; i < total; ++i)
        for (Eigen::Index j = 0; j < total; ++j)
          if (charge_of[i] != charge_of[j]) worst = std::max(worst, std::abs(m(i, j)));
    } else {
      // Apply to one ramp probe per block; any output mass landing on a
      // different charge is a violation.
      at = 0;
      for (const auto& blk : so.blocks) {
        Eigen::VectorXcd probe = Eigen::VectorXcd::Zero(total);
        for (Eigen::Index i = 0; i < blk.dim; ++i)
          probe(at + i) = Complex(1.0 + static_cast<double>(i) / (blk.dim + 1.0), 0.0);
        probe /= probe.norm();
        const Eigen::VectorXcd out = so.op(probe);
        scale = std::max({scale, 1.0, out.norm()});
        for (Eigen::Index i = 0; i < total; ++i)
          if (charge_of[i] != blk.sector.charge) worst = std::max(worst, std::abs(out(i)));
        at += blk.dim;
      }
    }
    ChargeAuditEntry entry{so.name, worst / scale, worst / scale <= tolerance};
    report.all_pass = report.all_pass && entry.pass;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace galqm
