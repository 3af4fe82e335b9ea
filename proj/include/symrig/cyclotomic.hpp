#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "symrig/rational.hpp"

namespace symrig {

// ---------------------------------------------------------------------------
// Exact arithmetic in cyclotomic fields Q(zeta_M), zeta_M = exp(2*pi*i/M).
//
// An element is stored as a rational coefficient vector against the power
// basis 1, zeta, ..., zeta^(phi(M)-1), always reduced modulo the M-th
// cyclotomic polynomial Phi_M.  Since Phi_M is the minimal polynomial of
// zeta_M, the reduced form is canonical: two elements of the same order are
// field-equal iff their coefficient vectors coincide.  Elements of different
// orders are compared (and combined) after lifting both into Q(zeta_lcm).
//
// Orders are capped (default 24) so that basis degrees stay tiny; the cap is
// a guard against accidental blow-up, not a numerical limitation.
// ---------------------------------------------------------------------------

unsigned totient(unsigned m);

// Phi_M, computed by dividing x^M - 1 by the product of Phi_d over proper
// divisors d of M.  Coefficients ascending, integer, monic, degree phi(M).
std::vector<Integer> cyclotomic_polynomial(unsigned m);

// Process-wide order cap (default 24).  Exceeding it is an input error.
unsigned max_cyclotomic_order();
void set_max_cyclotomic_order(unsigned m);

class CycloRat {
 public:
  // Zero in Q = Q(zeta_1).
  CycloRat();
  // A rational constant viewed inside Q(zeta_order).
  explicit CycloRat(const Rational& value, unsigned order = 1);

  static CycloRat zeta(unsigned order);
  static CycloRat zeta_pow(unsigned order, long long exponent);
  // Coefficients against the power basis; reduced modulo Phi_order on entry.
  static CycloRat from_coeffs(unsigned order, std::vector<Rational> coeffs);

  unsigned order() const { return order_; }
  // Length phi(order()); entry j multiplies zeta^j.
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  // True when the element lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  // Image under the inclusion Q(zeta_order) -> Q(zeta_new_order); requires
  // order() | new_order.
  CycloRat lifted(unsigned new_order) const;

  // Complex conjugation, i.e. zeta -> zeta^(order-1).
  CycloRat conjugate() const;

  std::complex<double> to_complex() const;

  CycloRat operator-() const;
  friend CycloRat operator+(const CycloRat& a, const CycloRat& b);
  friend CycloRat operator-(const CycloRat& a, const CycloRat& b);
  friend CycloRat operator*(const CycloRat& a, const CycloRat& b);
  // Field division; throws std::domain_error on zero divisor.
  friend CycloRat operator/(const CycloRat& a, const CycloRat& b);
  friend bool operator==(const CycloRat& a, const CycloRat& b);
  friend bool operator!=(const CycloRat& a, const CycloRat& b) {
    return !(a == b);
  }

 private:
  unsigned order_;
  std::vector<Rational> c_;
};

// x + i*y as an element of Q(zeta_order), using i = zeta^(order/4).  The
// order must be divisible by 4; callers working in a smaller field should
// lift to lcm(4, order) first (the error message says as much).
CycloRat embed_point(const Rational& x, const Rational& y, unsigned order);

// Inverse of embed_point: recover (x, y) from x + i*y.  Throws
// std::domain_error when the element is not of that rational-coordinate form.
std::pair<Rational, Rational> decompose_point(const CycloRat& z);

}  // namespace symrig
