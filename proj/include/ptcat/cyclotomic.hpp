#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ptcat {

using Integer  = mpz_class;
using Rational = mpq_class;

/// An element of the cyclotomic field Q(zeta_N), stored as a rational
/// polynomial in zeta_N reduced modulo the N-th cyclotomic polynomial.
/// Reduction mod Phi_N gives a unique normal form, so equality of phases
/// is decided by comparing coefficient vectors (after lifting both
/// operands to the lcm order).  Values are immutable once built.
class Cyc {
 public:
  /// Zero, represented in Q(zeta_1).
  Cyc() : order_(1) {}

  static Cyc zero() { return Cyc(); }
  static Cyc one() { return from_rational(1); }
  static Cyc from_rational(const Rational& q);

  /// zeta_N^k (k taken mod N).  Rejects N = 0.
  static Cyc root_of_unity(unsigned long n, long k);

  /// e^{i pi t} for rational t, i.e. zeta_{2q}^p for t = p/q in lowest terms.
  static Cyc half_turns(const Rational& t);

  /// Element of Q(zeta_n) from a coefficient vector over the zeta-power
  /// basis; the vector is reduced mod Phi_n.
  static Cyc from_coeffs(unsigned long n, std::vector<Rational> coeffs);

  unsigned long order() const { return order_; }

  /// Coefficients over the zeta-power basis 1, zeta, ..., zeta^{phi(N)-1},
  /// trailing zeros trimmed.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  bool is_rational() const;
  /// Value as a rational; requires is_rational().
  Rational rational_value() const;

  /// Complex conjugate (zeta_N -> zeta_N^{N-1}, extended linearly).
  Cyc conj() const;
  /// Multiplicative inverse; rejects zero.
  Cyc inv() const;
  Cyc pow(long e) const;

  /// Re-express in Q(zeta_M); M must be a multiple of order().
  Cyc lifted_to(unsigned long m) const;

  /// Numeric embedding zeta_N -> exp(2 pi i / N).  Display only.
  std::complex<double> approx() const;

  std::string str() const;

  friend Cyc operator+(const Cyc& x, const Cyc& y);
  friend Cyc operator-(const Cyc& x, const Cyc& y);
  friend Cyc operator-(const Cyc& x);
  friend Cyc operator*(const Cyc& x, const Cyc& y);
  friend bool operator==(const Cyc& x, const Cyc& y);
  friend bool operator!=(const Cyc& x, const Cyc& y) { return !(x == y); }

  Cyc& operator+=(const Cyc& y) { *this = *this + y; return *this; }
  Cyc& operator-=(const Cyc& y) { *this = *this - y; return *this; }
  Cyc& operator*=(const Cyc& y) { *this = *this * y; return *this; }

 private:
  Cyc(unsigned long order, std::vector<Rational> coeffs);

  void trim();

  unsigned long order_;
  std::vector<Rational> coeffs_;
};

/// Coefficients of the N-th cyclotomic polynomial (integers, monic).
std::vector<Integer> cyclotomic_polynomial(unsigned long n);

}  // namespace ptcat
