#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "galqm/exact.hpp"

namespace galqm {

/// Basis of the centrally extended Galilei Lie algebra: time translation H,
/// space translations P_i, pure Galilei boosts K_i, rotations J_i, and the
/// central mass element M adjoined by the extension.
enum class Generator : int { H = 0, P1, P2, P3, K1, K2, K3, J1, J2, J3, M };

inline constexpr int generator_count = 11;

inline constexpr std::array<Generator, generator_count> all_generators = {
    Generator::H,  Generator::P1, Generator::P2, Generator::P3,
    Generator::K1, Generator::K2, Generator::K3, Generator::J1,
    Generator::J2, Generator::J3, Generator::M};

constexpr std::string_view generator_name(Generator g) {
  constexpr std::string_view names[generator_count] = {
      "H", "P1", "P2", "P3", "K1", "K2", "K3", "J1", "J2", "J3", "M"};
  return names[static_cast<int>(g)];
}

/// Exact linear combination of the 11 basis generators with HbarScalar
/// coefficients. Addition and scaling never touch floating point.
class AlgebraElement {
 public:
  AlgebraElement() = default;

  static AlgebraElement zero() { return {}; }

  static AlgebraElement basis(Generator g) {
    AlgebraElement e;
    e.coeff_[static_cast<std::size_t>(g)] = HbarScalar(Rational(1));
    return e;
  }

  const HbarScalar& coefficient(Generator g) const {
    return coeff_[static_cast<std::size_t>(g)];
  }
  HbarScalar& coefficient(Generator g) { return coeff_[static_cast<std::size_t>(g)]; }

  bool is_zero() const {
    for (const auto& c : coeff_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out;
    for (std::size_t i = 0; i < generator_count; ++i) out.coeff_[i] = a.coeff_[i] + b.coeff_[i];
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a) {
    AlgebraElement out;
    for (std::size_t i = 0; i < generator_count; ++i) out.coeff_[i] = -a.coeff_[i];
    return out;
  }

  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    return a + (-b);
  }

  friend AlgebraElement operator*(const HbarScalar& s, const AlgebraElement& a) {
    AlgebraElement out;
    for (std::size_t i = 0; i < generator_count; ++i) out.coeff_[i] = s * a.coeff_[i];
    return out;
  }

  friend AlgebraElement operator*(const Rational& s, const AlgebraElement& a) {
    return HbarScalar(s) * a;
  }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) = default;

  std::string str() const {
    std::string out;
    for (auto g : all_generators) {
      const auto& c = coefficient(g);
      if (c.is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "[" + c.str() + "]*" + std::string(generator_name(g));
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::array<HbarScalar, generator_count> coeff_;
};

/// Bracket table of the extended algebra:
///   [J_i,J_j] = i hbar eps_ijk J_k     [J_i,K_j] = i hbar eps_ijk K_k
///   [J_i,P_j] = i hbar eps_ijk P_k     [K_i,H]   = i hbar P_i
///   [K_i,P_j] = i hbar delta_ij M
/// with every other bracket zero; in particular M commutes with everything
/// (the extension is central) while appearing on the right of [K,P]
/// (the extension is nontrivial). Levi-Civita convention eps_123 = +1.
class StructureTable {
 public:
  StructureTable() {
    auto set = [this](Generator a, Generator b, const AlgebraElement& v) {
      table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
      table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -v;
    };
    auto vec = [](Generator base, int i) {
      return static_cast<Generator>(static_cast<int>(base) + i);
    };
    const HbarScalar ih = HbarScalar::i_hbar();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const int k = 3 - i - j;
        if (i == j || k < 0 || k > 2) continue;
        const Rational sign((i + 1) % 3 == j ? 1 : -1);
        const HbarScalar c = HbarScalar(sign) * ih;
        set(vec(Generator::J1, i), vec(Generator::J1, j),
            c * AlgebraElement::basis(vec(Generator::J1, k)));
        set(vec(Generator::J1, i), vec(Generator::K1, j),
            c * AlgebraElement::basis(vec(Generator::K1, k)));
        set(vec(Generator::J1, i), vec(Generator::P1, j),
            c * AlgebraElement::basis(vec(Generator::P1, k)));
      }
      set(vec(Generator::K1, i), Generator::H,
          ih * AlgebraElement::basis(vec(Generator::P1, i)));
      set(vec(Generator::K1, i), vec(Generator::P1, i),
          ih * AlgebraElement::basis(Generator::M));
    }
  }

  const AlgebraElement& bracket(Generator a, Generator b) const {
    return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  }

  /// Copy with [a,b] (and [b,a] = -[a,b]) replaced. Test hook for driving
  /// the consistency checks onto their failure paths.
  StructureTable with_bracket(Generator a, Generator b, const AlgebraElement& v) const {
    StructureTable out = *this;
    out.table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = v;
    out.table_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = -v;
    return out;
  }

 private:
  std::array<std::array<AlgebraElement, generator_count>, generator_count> table_;
};

/// The shared immutable table.
inline const StructureTable& structure_table() {
  static const StructureTable table;
  return table;
}

/// Bilinear extension of the bracket table; exact arithmetic throughout.
inline AlgebraElement commutator(const AlgebraElement& x, const AlgebraElement& y,
                                 const StructureTable& table = structure_table()) {
  AlgebraElement out;
  for (auto a : all_generators) {
    const HbarScalar& ca = x.coefficient(a);
    if (ca.is_zero()) continue;
    for (auto b : all_generators) {
      const HbarScalar& cb = y.coefficient(b);
      if (cb.is_zero()) continue;
      out = out + (ca * cb) * table.bracket(a, b);
    }
  }
  return out;
}

/// [x,[y,z]] + [y,[z,x]] + [z,[x,y]]; exactly zero for a consistent table.
inline AlgebraElement jacobi_defect(Generator x, Generator y, Generator z,
                                    const StructureTable& table = structure_table()) {
  const AlgebraElement bx = AlgebraElement::basis(x);
  const AlgebraElement by = AlgebraElement::basis(y);
  const AlgebraElement bz = AlgebraElement::basis(z);
  return commutator(bx, table.bracket(y, z), table) +
         commutator(by, table.bracket(z, x), table) +
         commutator(bz, table.bracket(x, y), table);
}

}  // namespace galqm
