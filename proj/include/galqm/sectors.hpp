#pragma once

#include <sstream>
#include <stdexcept>
#include <string>

namespace galqm {

/// Superselection sector label: the mass eigenvalue and the charge
/// eigenvalue in integer multiples of the unit charge. Labels compare
/// exactly — sectors are bookkeeping, not measurements.
struct SectorLabel {
  double mass = 1.0;
  long long charge = 0;  // units of the elementary charge

  friend bool operator==(const SectorLabel&, const SectorLabel&) = default;
};

inline void validate(const SectorLabel& s) {
  if (!(s.mass > 0.0)) throw std::invalid_argument("sector mass must be positive");
}

/// Raised on any attempt to coherently combine states from distinct
/// superselection sectors. There is no silent projection.
class SectorViolation : public std::runtime_error {
 public:
  SectorViolation(const SectorLabel& a, const SectorLabel& b)
      : std::runtime_error(message(a, b)) {}

 private:
  static std::string message(const SectorLabel& a, const SectorLabel& b) {
    std::ostringstream os;
    os << "superselection violation: sector (mass=" << a.mass << ", charge=" << a.charge
       << ") vs (mass=" << b.mass << ", charge=" << b.charge << ")";
    return os.str();
  }
};

}  // namespace galqm
