#include "symrig/isometry.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace symrig {

namespace {

unsigned field_order(unsigned rotation_order) {
  return std::lcm(4u, rotation_order);
}

// Reduce an angle to [0, 2*pi).
double wrap_angle(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  t = std::fmod(t, two_pi);
  if (t < 0) t += two_pi;
  return t;
}

// Distance of an angle from the nearest multiple of 2*pi.
double angle_defect(double t) {
  const double two_pi = 2.0 * std::numbers::pi;
  const double w = wrap_angle(t);
  return std::min(w, two_pi - w);
}

}  // namespace

Isometry Isometry::exact(unsigned rotation_order, long long rotation_exponent,
                         CycloRat translation) {
  if (rotation_order == 0)
    throw std::invalid_argument("rotation order must be positive");
  Isometry g;
  g.exact_ = true;
  g.m_ = rotation_order;
  long long k = rotation_exponent % static_cast<long long>(rotation_order);
  if (k < 0) k += rotation_order;
  g.k_ = static_cast<unsigned>(k);
  g.trans_ = translation.lifted(
      std::lcm(static_cast<unsigned>(field_order(rotation_order)), translation.order()));
  if (g.trans_.order() != field_order(rotation_order))
    throw std::invalid_argument(
        "translation lives in a field incompatible with the rotation order");
  return g;
}

Isometry Isometry::exact(unsigned rotation_order, long long rotation_exponent,
                         const Rational& tx, const Rational& ty) {
  return exact(rotation_order, rotation_exponent,
               embed_point(tx, ty, field_order(rotation_order)));
}

Isometry Isometry::identity(unsigned rotation_order) {
  return exact(rotation_order, 0, Rational(0), Rational(0));
}

Isometry Isometry::numeric(double angle, std::complex<double> translation) {
  Isometry g;
  g.exact_ = false;
  g.theta_ = wrap_angle(angle);
  g.ctrans_ = translation;
  return g;
}

unsigned Isometry::rotation_order() const {
  if (!exact_) throw std::logic_error("numeric isometry has no declared order");
  return m_;
}

unsigned Isometry::rotation_exponent() const {
  if (!exact_) throw std::logic_error("numeric isometry has no exponent");
  return k_;
}

double Isometry::angle() const {
  if (!exact_) return theta_;
  return 2.0 * std::numbers::pi * static_cast<double>(k_) / static_cast<double>(m_);
}

const CycloRat& Isometry::translation() const {
  if (!exact_) throw std::logic_error("numeric isometry has no exact translation");
  return trans_;
}

std::complex<double> Isometry::translation_numeric() const {
  return exact_ ? trans_.to_complex() : ctrans_;
}

CycloRat Isometry::rotation_unit() const {
  if (!exact_) throw std::logic_error("numeric isometry has no exact rotation unit");
  const unsigned M = field_order(m_);
  return CycloRat::zeta_pow(M, static_cast<long long>(k_) * (M / m_));
}

IsometryKind Isometry::classify(double tol) const {
  if (exact_) {
    if (k_ != 0) return IsometryKind::Rotation;
    return trans_.is_zero() ? IsometryKind::Identity : IsometryKind::Translation;
  }
  if (angle_defect(theta_) > tol) return IsometryKind::Rotation;
  return std::abs(ctrans_) <= tol ? IsometryKind::Identity
                                  : IsometryKind::Translation;
}

Isometry Isometry::inverse() const {
  if (exact_) {
    const unsigned M = field_order(m_);
    const CycloRat rot_inv =
        CycloRat::zeta_pow(M, -static_cast<long long>(k_) * (M / m_));
    return exact(m_, -static_cast<long long>(k_), -(rot_inv * trans_));
  }
  const std::complex<double> rot_inv = std::polar(1.0, -theta_);
  return numeric(-theta_, -(rot_inv * ctrans_));
}

bool operator==(const Isometry& a, const Isometry& b) {
  if (a.exact_ != b.exact_) return false;
  if (a.exact_)
    return a.m_ == b.m_ && a.k_ == b.k_ && a.trans_ == b.trans_;
  return a.theta_ == b.theta_ && a.ctrans_ == b.ctrans_;
}

bool Isometry::approx_equal(const Isometry& other, double tol) const {
  if (exact_ && other.exact_) return *this == other;
  return angle_defect(angle() - other.angle()) <= tol &&
         std::abs(translation_numeric() - other.translation_numeric()) <= tol;
}

Isometry compose(const Isometry& a, const Isometry& b) {
  if (a.is_exact() != b.is_exact())
    throw std::invalid_argument("cannot compose exact and numeric isometries");
  if (a.is_exact()) {
    if (a.rotation_order() != b.rotation_order())
      throw std::invalid_argument(
          "cannot compose isometries with different declared rotation orders");
    return Isometry::exact(
        a.rotation_order(),
        static_cast<long long>(a.rotation_exponent()) + b.rotation_exponent(),
        a.translation() + a.rotation_unit() * b.translation());
  }
  const std::complex<double> rot = std::polar(1.0, a.angle());
  return Isometry::numeric(a.angle() + b.angle(),
                           a.translation_numeric() + rot * b.translation_numeric());
}

bool commutes(const Isometry& a, const Isometry& b, double tol) {
  const Isometry ab = compose(a, b);
  const Isometry ba = compose(b, a);
  return ab.is_exact() ? ab == ba : ab.approx_equal(ba, tol);
}

}  // namespace symrig
