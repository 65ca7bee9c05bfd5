#pragma once

#include "k3aut/polynomial.hpp"

#include <vector>

namespace k3aut {

long euler_phi(long n);

// n-th cyclotomic polynomial, computed by exact division in the recurrence
// x^n - 1 = prod_{d | n} Phi_d(x). Results are cached.
const Poly& cyclotomic_polynomial(long n);

// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^{phi(n)-1}.
// Elements of different conductors never mix; binary operations throw on a
// conductor mismatch instead of embedding into a common field.
class Cyclotomic {
 public:
  explicit Cyclotomic(long conductor);
  static Cyclotomic zero(long conductor) { return Cyclotomic(conductor); }
  static Cyclotomic from_rational(long conductor, const Rat& value);
  static Cyclotomic zeta(long conductor, long exponent = 1);
  static Cyclotomic from_coords(long conductor, std::vector<Rat> coords);

  long conductor() const { return conductor_; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;
  bool is_rational() const;
  Rat rational_value() const;  // throws unless is_rational()

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Rat& s, const Cyclotomic& a);
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  Cyclotomic inverse() const;  // throws std::domain_error on zero
  Cyclotomic pow(long exponent) const;

  // Galois substitution zeta -> zeta^k for gcd(k, n) = 1.
  Cyclotomic substitute(long k) const;
  // Complex conjugation, zeta -> zeta^{n-1}.
  Cyclotomic conjugate() const;
  // Trace to Q: sum over the Galois orbit.
  Rat trace_to_q() const;

  std::string to_string() const;

 private:
  static std::vector<Rat> reduce(long conductor, const std::vector<Rat>& raw);
  long conductor_;
  std::vector<Rat> coords_;
};

}  // namespace k3aut
