#pragma once

// Exact arithmetic in Q(zeta_k): polynomials in zeta reduced modulo the
// k-th cyclotomic polynomial. Rationals live in every field and mix freely.

#include <string>
#include <vector>

#include "g2inst/rational.hpp"

namespace g2inst {

/// Coefficients of the k-th cyclotomic polynomial, lowest degree first.
std::vector<Rational> cyclotomic_polynomial(int k);

class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational& r);  // NOLINT: implicit on purpose
  Cyclotomic(int n) : Cyclotomic(Rational(n)) {}  // NOLINT

  /// zeta_k^m.
  static Cyclotomic zeta(int k, int m);
  /// 2 cos(2 pi m / k) = zeta^m + zeta^-m.
  static Cyclotomic two_cos(int k, int m);

  int order() const { return k_; }
  bool is_rational() const;
  /// Throws std::domain_error unless is_rational().
  Rational rational() const;
  double to_double() const;
  std::string to_string() const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  /// Throws std::domain_error on division by zero.
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic inverse() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

 private:
  Cyclotomic(int k, std::vector<Rational> coeffs);
  void normalize();
  static void unify(Cyclotomic& a, Cyclotomic& b);

  int k_ = 1;
  std::vector<Rational> c_;  // reduced, no trailing zeros
};

}  // namespace g2inst
