#include "k3aut/polynomial.hpp"

#include <sstream>

namespace k3aut {

Poly::Poly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::monomial(int degree, const Rat& coeff) {
  if (degree < 0) throw std::invalid_argument("negative monomial degree");
  if (coeff == 0) return Poly();
  std::vector<Rat> c(static_cast<size_t>(degree) + 1, Rat(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Rat Poly::coeff(int i) const {
  if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rat(0);
  return coeffs_[static_cast<size_t>(i)];
}

Rat Poly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  for (Rat& c : coeffs_) c.canonicalize();
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (Rat& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return Poly();
  std::vector<Rat> c(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) c[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return Poly(std::move(c));
}

Poly operator*(const Rat& scale, const Poly& p) {
  if (scale == 0) return Poly();
  Poly out = p;
  for (Rat& c : out.coeffs_) c *= scale;
  out.trim();
  return out;
}

Poly Poly::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial exponent");
  Poly result{Rat(1)};
  Poly base = *this;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rat Poly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly();
  std::vector<Rat> c(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = Rat(static_cast<long>(i)) * coeffs_[i];
  return Poly(std::move(c));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return (Rat(1) / leading()) * *this;
}

Int Poly::denominator_lcm() const {
  Int l = 1;
  for (const Rat& c : coeffs_) {
    Int den = c.get_den();
    Int g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
    l = l / g * den;
  }
  return l;
}

std::string Poly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeff(i);
    if (c == 0) continue;
    bool negative = c < 0;
    Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    bool unit = (mag == 1) && i > 0;
    if (!unit) out << format_rational(mag);
    if (i > 0) {
      if (!unit) out << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

std::pair<Poly, Poly> divmod(const Poly& numerator, const Poly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly remainder = numerator;
  int dd = divisor.degree();
  if (remainder.degree() < dd) return {Poly(), remainder};
  std::vector<Rat> q(static_cast<size_t>(remainder.degree() - dd) + 1, Rat(0));
  Rat inv_lead = Rat(1) / divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= dd) {
    int shift = remainder.degree() - dd;
    Rat factor = remainder.leading() * inv_lead;
    q[static_cast<size_t>(shift)] = factor;
    remainder -= Poly::monomial(shift, factor) * divisor;
  }
  return {Poly(std::move(q)), remainder};
}

Poly exact_divide(const Poly& numerator, const Poly& divisor) {
  auto [q, r] = divmod(numerator, divisor);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd poly_extended_gcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly u0{Rat(1)}, u1;
  Poly v0, v1{Rat(1)};
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    Poly u2 = u0 - q * u1;
    Poly v2 = v0 - q * v1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
    v0 = std::move(v1);
    v1 = std::move(v2);
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rat scale = Rat(1) / r0.leading();
  return {scale * r0, scale * u0, scale * v0};
}

}  // namespace k3aut
