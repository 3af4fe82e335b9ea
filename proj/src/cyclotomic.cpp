#include "symrig/cyclotomic.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace symrig {

namespace {

// Dense polynomials over Q, coefficients ascending.  Everything here operates
// on degrees bounded by the order cap, so no attempt is made to be clever.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// Euclidean division; the divisor need not be monic.  Returns the quotient
// and leaves the remainder in `a`.
Poly divmod(Poly& a, const Poly& d) {
  Poly q;
  if (degree(a) >= degree(d)) q.assign(a.size() - d.size() + 1, Rational(0));
  while (degree(a) >= degree(d)) {
    const int shift = degree(a) - degree(d);
    const Rational factor = a.back() / d.back();
    q[shift] = factor;
    for (std::size_t i = 0; i < d.size(); ++i) a[shift + i] -= factor * d[i];
    trim(a);
  }
  return q;
}

Poly remainder(Poly a, const Poly& d) {
  divmod(a, d);
  return a;
}

// Extended Euclid over Q[x]: returns u with u*a == gcd(a, b) (mod b),
// gcd normalized to 1 (a must be coprime to b, which holds whenever b is
// irreducible and a is a nonzero element of Q[x]/(b)).
Poly inverse_mod(Poly a, Poly b) {
  Poly r0 = std::move(b), r1 = std::move(a);
  Poly s0 = {}, s1 = {Rational(1)};  // coefficients of `a` along the way
  while (!r1.empty()) {
    Poly r = r0;
    Poly q = divmod(r, r1);
    // r = r0 - q*r1 is the new remainder
    Poly s = s0;
    const Poly qs1 = mul(q, s1);
    s.resize(std::max(s.size(), qs1.size()), Rational(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s[i] -= qs1[i];
    trim(s);
    r0 = std::move(r1);
    s0 = std::move(s1);
    r1 = std::move(r);
    s1 = std::move(s);
  }
  if (degree(r0) != 0)
    throw std::domain_error("element not invertible in cyclotomic field");
  const Rational lead = r0[0];
  for (auto& c : s0) c /= lead;
  trim(s0);
  return s0;
}

std::vector<unsigned> divisors(unsigned m) {
  std::vector<unsigned> d;
  for (unsigned k = 1; k <= m; ++k)
    if (m % k == 0) d.push_back(k);
  return d;
}

// Phi_m as a rational polynomial, memoized (the cache only ever grows and
// stores immutable values).  Phi_e for every divisor e of m is filled in
// ascending order: x^e - 1 divided by the already-cached Phi_d, d | e, d < e.
const Poly& phi_poly(unsigned m) {
  static std::mutex mu;
  static std::map<unsigned, Poly> cache;
  std::scoped_lock lock(mu);
  for (unsigned e : divisors(m)) {
    if (cache.count(e)) continue;
    Poly num(e + 1, Rational(0));  // x^e - 1
    num[0] = Rational(-1);
    num[e] = Rational(1);
    for (unsigned d : divisors(e)) {
      if (d == e) continue;
      Poly q = divmod(num, cache.at(d));
      if (!num.empty())
        throw std::logic_error("cyclotomic division left a remainder");
      num = std::move(q);
    }
    cache.emplace(e, std::move(num));
  }
  return cache.at(m);
}

std::atomic<unsigned> g_max_order{24};

void check_order(unsigned m) {
  if (m == 0) throw std::invalid_argument("cyclotomic order must be positive");
  if (m > g_max_order.load())
    throw std::invalid_argument("cyclotomic order " + std::to_string(m) +
                                " exceeds the configured cap " +
                                std::to_string(g_max_order.load()));
}

}  // namespace

unsigned totient(unsigned m) {
  unsigned result = m, n = m;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result -= result / p;
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<Integer> cyclotomic_polynomial(unsigned m) {
  check_order(m);
  const Poly& p = phi_poly(m);
  std::vector<Integer> out;
  out.reserve(p.size());
  for (const auto& c : p) {
    if (boost::multiprecision::denominator(c) != 1)
      throw std::logic_error("cyclotomic polynomial not integral");
    out.push_back(boost::multiprecision::numerator(c));
  }
  return out;
}

unsigned max_cyclotomic_order() { return g_max_order.load(); }

void set_max_cyclotomic_order(unsigned m) {
  if (m == 0) throw std::invalid_argument("order cap must be positive");
  g_max_order.store(m);
}

// --- CycloRat --------------------------------------------------------------

namespace {

// Reduce an arbitrary-degree polynomial in zeta_order to the canonical basis.
std::vector<Rational> reduce(Poly p, unsigned order) {
  p = remainder(std::move(p), phi_poly(order));
  p.resize(totient(order), Rational(0));
  return p;
}

}  // namespace

CycloRat::CycloRat() : order_(1), c_(1, Rational(0)) {}

CycloRat::CycloRat(const Rational& value, unsigned order) : order_(order) {
  check_order(order);
  c_.assign(totient(order), Rational(0));
  c_[0] = value;
}

CycloRat CycloRat::zeta(unsigned order) { return zeta_pow(order, 1); }

CycloRat CycloRat::zeta_pow(unsigned order, long long exponent) {
  check_order(order);
  long long e = exponent % static_cast<long long>(order);
  if (e < 0) e += order;
  Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p.back() = Rational(1);
  CycloRat r;
  r.order_ = order;
  r.c_ = reduce(std::move(p), order);
  return r;
}

CycloRat CycloRat::from_coeffs(unsigned order, std::vector<Rational> coeffs) {
  check_order(order);
  CycloRat r;
  r.order_ = order;
  r.c_ = reduce(std::move(coeffs), order);
  return r;
}

bool CycloRat::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool CycloRat::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational CycloRat::rational_value() const {
  if (!is_rational())
    throw std::domain_error("cyclotomic element is not rational");
  return c_[0];
}

CycloRat CycloRat::lifted(unsigned new_order) const {
  check_order(new_order);
  if (new_order == order_) return *this;
  if (new_order % order_ != 0)
    throw std::invalid_argument("lift target order must be a multiple of the source order");
  const unsigned step = new_order / order_;
  Poly p(static_cast<std::size_t>(totient(order_) - 1) * step + 1, Rational(0));
  for (std::size_t j = 0; j < c_.size(); ++j) p[j * step] = c_[j];
  CycloRat r;
  r.order_ = new_order;
  r.c_ = reduce(std::move(p), new_order);
  return r;
}

CycloRat CycloRat::conjugate() const {
  // zeta^j -> zeta^(-j) = zeta^(order-j)
  Poly p(order_, Rational(0));
  p[0] = c_[0];
  for (std::size_t j = 1; j < c_.size(); ++j) p[order_ - j] += c_[j];
  CycloRat r;
  r.order_ = order_;
  r.c_ = reduce(std::move(p), order_);
  return r;
}

std::complex<double> CycloRat::to_complex() const {
  std::complex<double> acc(0.0, 0.0);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const double angle =
        2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(order_);
    acc += to_double(c_[j]) * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

CycloRat CycloRat::operator-() const {
  CycloRat r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

namespace {

// Bring both operands into the common field Q(zeta_lcm).
std::pair<CycloRat, CycloRat> aligned(const CycloRat& a, const CycloRat& b) {
  const unsigned l = std::lcm(a.order(), b.order());
  return {a.lifted(l), b.lifted(l)};
}

}  // namespace

CycloRat operator+(const CycloRat& a, const CycloRat& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rational> c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += y.coeffs()[i];
  return CycloRat::from_coeffs(x.order(), std::move(c));
}

CycloRat operator-(const CycloRat& a, const CycloRat& b) {
  auto [x, y] = aligned(a, b);
  std::vector<Rational> c = x.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= y.coeffs()[i];
  return CycloRat::from_coeffs(x.order(), std::move(c));
}

CycloRat operator*(const CycloRat& a, const CycloRat& b) {
  auto [x, y] = aligned(a, b);
  Poly p = mul(x.coeffs(), y.coeffs());
  return CycloRat::from_coeffs(x.order(), std::move(p));
}

CycloRat operator/(const CycloRat& a, const CycloRat& b) {
  if (b.is_zero()) throw std::domain_error("division by zero cyclotomic element");
  auto [x, y] = aligned(a, b);
  Poly yc = y.coeffs();
  trim(yc);
  Poly inv = inverse_mod(std::move(yc), phi_poly(x.order()));
  Poly p = mul(x.coeffs(), inv);
  return CycloRat::from_coeffs(x.order(), std::move(p));
}

bool operator==(const CycloRat& a, const CycloRat& b) {
  auto [x, y] = aligned(a, b);
  return x.coeffs() == y.coeffs();
}

CycloRat embed_point(const Rational& x, const Rational& y, unsigned order) {
  check_order(order);
  if (order % 4 != 0)
    throw std::invalid_argument(
        "embed_point needs 4 | order so that i lies in the field; lift to lcm(4, order)");
  return CycloRat(x, order) + CycloRat(y, order) * CycloRat::zeta_pow(order, order / 4);
}

std::pair<Rational, Rational> decompose_point(const CycloRat& z) {
  const unsigned order = std::lcm(4u, z.order());
  const CycloRat zl = z.lifted(order);
  const CycloRat conj = zl.conjugate();
  const CycloRat half(Rational(1, 2), 1);
  const CycloRat i = CycloRat::zeta_pow(order, order / 4);
  const CycloRat xe = (zl + conj) * half;
  const CycloRat ye = (zl - conj) / (i + i);
  if (!xe.is_rational() || !ye.is_rational()) {
    throw std::domain_error(
        "element is not x + i*y with rational coordinates");
  }
  return {xe.rational_value(), ye.rational_value()};
}

}  // namespace symrig
