#pragma once

#include <stdexcept>

namespace galqm {

/// The single dimensional constant of the theory. Natural units (hbar = 1)
/// everywhere unless stated otherwise; dimensionally [hbar] = L M T^-1.
struct PhysicalConstants {
  double hbar = 1.0;
};

inline void validate(const PhysicalConstants& c) {
  if (!(c.hbar > 0.0)) throw std::invalid_argument("hbar must be positive");
}

namespace tol {

// Exact group identities accumulate ~10 flops, longer derived chains ~100.
inline constexpr double group_identity = 1e-12;
inline constexpr double accumulated = 1e-10;

}  // namespace tol

}  // namespace galqm
