#pragma once

#include <cmath>
#include <stdexcept>

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace galqm {

/// Spatial rotation stored as a unit quaternion, i.e. an element of the
/// SU(2) double cover of SO(3). The sign ambiguity (q and -q project to the
/// same rotation matrix) is resolved at construction: w >= 0, ties broken by
/// the first nonzero vector component being positive, so equality of
/// canonical forms is deterministic.
class Rotation {
 public:
  Rotation() : q_(1.0, 0.0, 0.0, 0.0) {}

  Rotation(double w, double x, double y, double z) : q_(w, x, y, z) {
    const double n = q_.norm();
    if (!(n > 0.0) || !std::isfinite(n))
      throw std::invalid_argument("rotation quaternion must have nonzero finite norm");
    q_.coeffs() /= n;
    canonicalize();
  }

  static Rotation identity() { return Rotation(); }

  static Rotation axis_angle(const Eigen::Vector3d& axis, double angle) {
    const double n = axis.norm();
    if (!(n > 0.0)) throw std::invalid_argument("rotation axis must be nonzero");
    const Eigen::Vector3d u = axis / n;
    const double h = 0.5 * angle;
    return Rotation(std::cos(h), std::sin(h) * u.x(), std::sin(h) * u.y(),
                    std::sin(h) * u.z());
  }

  double w() const { return q_.w(); }
  double x() const { return q_.x(); }
  double y() const { return q_.y(); }
  double z() const { return q_.z(); }

  Eigen::Matrix3d matrix() const { return q_.toRotationMatrix(); }

  Rotation operator*(const Rotation& other) const {
    Eigen::Quaterniond p = q_ * other.q_;
    return Rotation(p.w(), p.x(), p.y(), p.z());
  }

  Rotation inverse() const {
    Eigen::Quaterniond p = q_.conjugate();
    return Rotation(p.w(), p.x(), p.y(), p.z());
  }

  Eigen::Vector3d operator*(const Eigen::Vector3d& v) const { return q_ * v; }

  /// Max-abs distance between canonical quaternion components.
  double distance(const Rotation& other) const {
    return (q_.coeffs() - other.q_.coeffs()).cwiseAbs().maxCoeff();
  }

 private:
  void canonicalize() {
    double lead = q_.w();
    if (lead == 0.0) lead = q_.x();
    if (lead == 0.0) lead = q_.y();
    if (lead == 0.0) lead = q_.z();
    if (lead < 0.0) q_.coeffs() = -q_.coeffs();
  }

  Eigen::Quaterniond q_;
};

/// Element g = (tau, a, v, R) of the proper Galilei group: time translation
/// tau, space translation a, boost velocity v, rotation R.
struct GalileiElement {
  double tau = 0.0;
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Eigen::Vector3d velocity = Eigen::Vector3d::Zero();
  Rotation rotation;

  static GalileiElement identity() { return {}; }

  static GalileiElement time_shift(double tau) {
    GalileiElement g;
    g.tau = tau;
    return g;
  }

  static GalileiElement translation_by(const Eigen::Vector3d& a) {
    GalileiElement g;
    g.translation = a;
    return g;
  }

  static GalileiElement boost_by(const Eigen::Vector3d& v) {
    GalileiElement g;
    g.velocity = v;
    return g;
  }

  static GalileiElement rotation_by(const Rotation& r) {
    GalileiElement g;
    g.rotation = r;
    return g;
  }
};

/// Event (x, t) acted on by the group.
struct SpacetimeEvent {
  Eigen::Vector3d position = Eigen::Vector3d::Zero();
  double time = 0.0;
};

/// Group multiplication:
///   g1 g2 = (tau1 + tau2, a1 + R1 a2 + tau2 v1, v1 + R1 v2, R1 R2).
/// The covering elements multiply through the quaternions.
inline GalileiElement compose(const GalileiElement& g1, const GalileiElement& g2) {
  GalileiElement out;
  const Eigen::Matrix3d r1 = g1.rotation.matrix();
  out.tau = g1.tau + g2.tau;
  out.translation = g1.translation + r1 * g2.translation + g2.tau * g1.velocity;
  out.velocity = g1.velocity + r1 * g2.velocity;
  out.rotation = g1.rotation * g2.rotation;
  return out;
}

/// g^-1 = (-tau, -R^-1 (a - tau v), -R^-1 v, R^-1).
inline GalileiElement inverse(const GalileiElement& g) {
  GalileiElement out;
  const Rotation rinv = g.rotation.inverse();
  const Eigen::Matrix3d ri = rinv.matrix();
  out.tau = -g.tau;
  out.translation = -(ri * (g.translation - g.tau * g.velocity));
  out.velocity = -(ri * g.velocity);
  out.rotation = rinv;
  return out;
}

/// x' = R x + v t + a, t' = t + tau.
inline SpacetimeEvent act(const GalileiElement& g, const SpacetimeEvent& e) {
  SpacetimeEvent out;
  out.position = g.rotation.matrix() * e.position + g.velocity * e.time + g.translation;
  out.time = e.time + g.tau;
  return out;
}

/// Max-abs residual between two elements (quaternions compared in canonical
/// form, so g and h represent the same covering element iff this vanishes).
inline double distance(const GalileiElement& g, const GalileiElement& h) {
  double d = std::abs(g.tau - h.tau);
  d = std::max(d, (g.translation - h.translation).cwiseAbs().maxCoeff());
  d = std::max(d, (g.velocity - h.velocity).cwiseAbs().maxCoeff());
  d = std::max(d, g.rotation.distance(h.rotation));
  return d;
}

/// Exponent of the physical (projective) representations of the covering
/// group, scaled by the mass of the sector:
///   xi(g1, g2) = (m/2) { a1 . R1 v2 - v1 . R1 a2 + tau2 v1 . R1 v2 }.
/// The printed exponent is the unit-mass one; mass enters as an overall
/// factor so one exponent serves every mass sector.
inline double bargmann_exponent(const GalileiElement& g1, const GalileiElement& g2,
                                double mass) {
  if (!(mass > 0.0)) throw std::invalid_argument("mass must be positive");
  const Eigen::Matrix3d r1 = g1.rotation.matrix();
  const double s = g1.translation.dot(r1 * g2.velocity) -
                   g1.velocity.dot(r1 * g2.translation) +
                   g2.tau * g1.velocity.dot(r1 * g2.velocity);
  return 0.5 * mass * s;
}

/// Defect of the 2-cocycle identity,
///   xi(g1,g2) + xi(g1 g2, g3) - xi(g2,g3) - xi(g1, g2 g3),
/// which must vanish for the ray composition rule to be associative.
inline double cocycle_defect(const GalileiElement& g1, const GalileiElement& g2,
                             const GalileiElement& g3, double mass) {
  return bargmann_exponent(g1, g2, mass) +
         bargmann_exponent(compose(g1, g2), g3, mass) -
         bargmann_exponent(g2, g3, mass) -
         bargmann_exponent(g1, compose(g2, g3), mass);
}

}  // namespace galqm
