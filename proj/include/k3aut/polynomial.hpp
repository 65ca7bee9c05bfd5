#pragma once

#include "k3aut/numeric.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace k3aut {

// Dense univariate polynomial over Q. Coefficient i belongs to t^i; the
// representation is normalized so the leading coefficient is nonzero and the
// zero polynomial has an empty coefficient vector (degree -1).
class Poly {
 public:
  Poly() = default;
  Poly(const Rat& constant);
  Poly(std::vector<Rat> coeffs);
  Poly(std::initializer_list<Rat> coeffs);

  static Poly monomial(int degree, const Rat& coeff = Rat(1));
  static Poly variable() { return monomial(1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }
  Rat coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat leading() const;
  Rat constant_term() const { return coeff(0); }

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
  friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
  friend Poly operator*(const Poly& lhs, const Poly& rhs);
  friend Poly operator*(const Rat& scale, const Poly& p);
  friend Poly operator*(const Poly& p, const Rat& scale) { return scale * p; }
  friend bool operator==(const Poly& lhs, const Poly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }
  friend bool operator!=(const Poly& lhs, const Poly& rhs) { return !(lhs == rhs); }

  Poly pow(int exponent) const;
  Rat evaluate(const Rat& x) const;
  Poly derivative() const;
  Poly monic() const;

  // Least common denominator of the coefficients (1 for the zero polynomial).
  Int denominator_lcm() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

// Quotient and remainder with deg(r) < deg(divisor); throws on zero divisor.
std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor);

// Exact quotient; throws std::domain_error when the remainder is nonzero.
Poly exact_divide(const Poly& numerator, const Poly& divisor);

// Monic gcd (zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);

// g, u, v with u*a + v*b = g, g monic (or zero).
struct ExtendedGcd {
  Poly g, u, v;
};
ExtendedGcd poly_extended_gcd(const Poly& a, const Poly& b);

}  // namespace k3aut
