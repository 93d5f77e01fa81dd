#pragma once

#include <complex>
#include <map>
#include <sstream>
#include <string>

#include <boost/rational.hpp>

namespace galqm {

using Rational = boost::rational<long long>;

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re{0};
  Rational im{0};

  static GaussianRational unit() { return {Rational(1), Rational(0)}; }
  static GaussianRational unit_i() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return re == Rational(0) && im == Rational(0); }

  std::complex<double> to_complex() const {
    return {boost::rational_cast<double>(re), boost::rational_cast<double>(im)};
  }

  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;
};

/// Exact scalar of the form sum_p c_p * hbar^p with Gaussian-rational
/// coefficients c_p. hbar stays symbolic so algebraic identities
/// (antisymmetry, Jacobi) are checked as exact statements, not as
/// floating-point residuals; numbers appear only via evaluate().
class HbarScalar {
 public:
  HbarScalar() = default;

  HbarScalar(const Rational& c) {
    if (c != Rational(0)) terms_[0] = {c, Rational(0)};
  }

  static HbarScalar term(const GaussianRational& c, int hbar_power = 0) {
    HbarScalar s;
    if (!c.is_zero()) s.terms_[hbar_power] = c;
    return s;
  }

  /// The coefficient i*hbar common to all nonzero brackets of the algebra.
  static HbarScalar i_hbar() { return term(GaussianRational::unit_i(), 1); }

  bool is_zero() const { return terms_.empty(); }

  const std::map<int, GaussianRational>& terms() const { return terms_; }

  std::complex<double> evaluate(double hbar) const {
    std::complex<double> out{0.0, 0.0};
    for (const auto& [p, c] : terms_) out += c.to_complex() * std::pow(hbar, p);
    return out;
  }

  friend HbarScalar operator+(const HbarScalar& a, const HbarScalar& b) {
    HbarScalar out = a;
    for (const auto& [p, c] : b.terms_) {
      auto it = out.terms_.find(p);
      if (it == out.terms_.end()) {
        out.terms_[p] = c;
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
    return out;
  }

  friend HbarScalar operator-(const HbarScalar& a) {
    HbarScalar out;
    for (const auto& [p, c] : a.terms_) out.terms_[p] = -c;
    return out;
  }

  friend HbarScalar operator-(const HbarScalar& a, const HbarScalar& b) { return a + (-b); }

  friend HbarScalar operator*(const HbarScalar& a, const HbarScalar& b) {
    HbarScalar out;
    for (const auto& [pa, ca] : a.terms_)
      for (const auto& [pb, cb] : b.terms_) out = out + term(ca * cb, pa + pb);
    return out;
  }

  friend bool operator==(const HbarScalar& a, const HbarScalar& b) = default;

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c.re << (c.im >= Rational(0) ? "+" : "") << c.im << "i)";
      if (p == 1)
        os << "*hbar";
      else if (p != 0)
        os << "*hbar^" << p;
    }
    return os.str();
  }

 private:
  // hbar power -> coefficient; zero coefficients are never stored.
  std::map<int, GaussianRational> terms_;
};

}  // namespace galqm
