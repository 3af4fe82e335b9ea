#pragma once

#include <complex>

#include "symrig/cyclotomic.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Orientation-preserving isometries of the plane, written as pairs (c, A):
// first translate by c, after rotating by A about the origin, i.e. the map
// p -> A p + c.  Composition is (c1, A1)(c2, A2) = (c1 + A1 c2, A1 A2) and
// the inverse is (-A^{-1} c, A^{-1}).
//
// The plane is identified with C: a rotation by angle t acts as
// multiplication by exp(i t) and the translation component is a single
// complex number.  Exact elements restrict rotations to a declared finite
// order m (angle 2*pi*k/m) and store the translation as an element of
// Q(zeta_lcm(4,m)) — lcm with 4 so that i itself lies in the field and
// rational planar points embed exactly.  Numeric elements carry a raw angle
// in radians plus a complex translation and compare up to kEqTol.
// ---------------------------------------------------------------------------

inline constexpr double kEqTol = 1e-9;

enum class IsometryKind { Identity, Translation, Rotation };

class Isometry {
 public:
  static Isometry exact(unsigned rotation_order, long long rotation_exponent,
                        CycloRat translation);
  static Isometry exact(unsigned rotation_order, long long rotation_exponent,
                        const Rational& tx, const Rational& ty);
  static Isometry identity(unsigned rotation_order);
  static Isometry numeric(double angle, std::complex<double> translation);

  bool is_exact() const { return exact_; }
  // Declared rotation order (exact mode only).
  unsigned rotation_order() const;
  // Exponent k in [0, order): the rotation is by 2*pi*k/order.
  unsigned rotation_exponent() const;
  // Rotation angle in radians (both modes; exact values are converted).
  double angle() const;
  const CycloRat& translation() const;  // exact mode only
  std::complex<double> translation_numeric() const;

  // exp(i * angle) as an exact field element (exact mode only).
  CycloRat rotation_unit() const;

  // Identity / pure nonzero translation / nontrivial rotation component.
  IsometryKind classify(double tol = kEqTol) const;
  bool is_identity(double tol = kEqTol) const {
    return classify(tol) == IsometryKind::Identity;
  }

  Isometry inverse() const;

  // Exact elements compare exactly; numeric elements are never operator==
  // equal unless bitwise identical — use approx_equal for them.
  friend bool operator==(const Isometry& a, const Isometry& b);
  friend bool operator!=(const Isometry& a, const Isometry& b) {
    return !(a == b);
  }
  bool approx_equal(const Isometry& other, double tol = kEqTol) const;

 private:
  Isometry() = default;

  bool exact_ = true;
  // exact representation
  unsigned m_ = 1;  // declared rotation order
  unsigned k_ = 0;  // exponent mod m_
  CycloRat trans_;  // element of Q(zeta_lcm(4, m))
  // numeric representation
  double theta_ = 0.0;
  std::complex<double> ctrans_{0.0, 0.0};
};

// Both arguments must share a mode and (in exact mode) a rotation order;
// callers normalize first, a mismatch throws std::invalid_argument.
Isometry compose(const Isometry& a, const Isometry& b);

// compose(a, b) == compose(b, a), with numeric comparison at `tol`.
bool commutes(const Isometry& a, const Isometry& b, double tol = kEqTol);

}  // namespace symrig
