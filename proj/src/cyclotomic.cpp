#include "k3aut/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace k3aut {

long euler_phi(long n) {
  if (n <= 0) throw std::invalid_argument("euler_phi needs n >= 1");
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const Poly& cyclotomic_polynomial(long n) {
  if (n <= 0) throw std::invalid_argument("cyclotomic polynomial needs n >= 1");
  static std::map<long, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  // x^n - 1 divided by the product of Phi_d over proper divisors d of n.
  std::vector<Rat> xn(static_cast<size_t>(n) + 1, Rat(0));
  xn[0] = -1;
  xn.back() = 1;
  Poly quotient{std::move(xn)};
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto found = cache.find(d);
    if (found == cache.end()) {
      // Fill the cache bottom-up so every proper divisor is present.
      std::vector<Rat> xd(static_cast<size_t>(d) + 1, Rat(0));
      xd[0] = -1;
      xd.back() = 1;
      Poly q = std::move(xd);
      for (long e = 1; e < d; ++e)
        if (d % e == 0) q = exact_divide(q, cache.at(e));
      found = cache.emplace(d, std::move(q)).first;
    }
    quotient = exact_divide(quotient, found->second);
  }
  return cache.emplace(n, std::move(quotient)).first->second;
}

namespace {

long normalize_exponent(long exponent, long n) {
  long e = exponent % n;
  return e < 0 ? e + n : e;
}

}  // namespace

std::vector<Rat> Cyclotomic::reduce(long conductor, const std::vector<Rat>& raw) {
  const Poly& phi = cyclotomic_polynomial(conductor);
  Poly reduced = divmod(Poly(raw), phi).second;
  std::vector<Rat> coords(static_cast<size_t>(euler_phi(conductor)), Rat(0));
  for (int i = 0; i <= reduced.degree(); ++i) coords[static_cast<size_t>(i)] = reduced.coeff(i);
  return coords;
}

Cyclotomic::Cyclotomic(long conductor) : conductor_(conductor) {
  if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
  coords_.assign(static_cast<size_t>(euler_phi(conductor)), Rat(0));
}

Cyclotomic Cyclotomic::from_rational(long conductor, const Rat& value) {
  Cyclotomic out(conductor);
  out.coords_[0] = value;
  out.coords_[0].canonicalize();
  return out;
}

Cyclotomic Cyclotomic::zeta(long conductor, long exponent) {
  Cyclotomic out(conductor);
  long e = normalize_exponent(exponent, conductor);
  std::vector<Rat> raw(static_cast<size_t>(e) + 1, Rat(0));
  raw.back() = 1;
  out.coords_ = reduce(conductor, raw);
  return out;
}

Cyclotomic Cyclotomic::from_coords(long conductor, std::vector<Rat> coords) {
  Cyclotomic out(conductor);
  if (coords.size() > out.coords_.size())
    throw std::invalid_argument("too many power-basis coordinates");
  for (size_t i = 0; i < coords.size(); ++i) {
    coords[i].canonicalize();
    out.coords_[i] = coords[i];
  }
  return out;
}

bool Cyclotomic::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coords_.size(); ++i)
    if (coords_[i] != 0) return false;
  return true;
}

Rat Cyclotomic::rational_value() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  return coords_[0];
}

namespace {

void require_same_field(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor() != b.conductor())
    throw std::domain_error("cyclotomic elements live in different fields");
}

}  // namespace

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (Rat& c : out.coords_) c = -c;
  return out;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  Cyclotomic out = a;
  for (size_t i = 0; i < out.coords_.size(); ++i) {
    out.coords_[i] += b.coords_[i];
    out.coords_[i].canonicalize();
  }
  return out;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  require_same_field(a, b);
  Poly product = Poly(a.coords_) * Poly(b.coords_);
  Cyclotomic out(a.conductor_);
  std::vector<Rat> raw = product.coeffs();
  out.coords_ = Cyclotomic::reduce(a.conductor_, raw);
  return out;
}

Cyclotomic operator*(const Rat& s, const Cyclotomic& a) {
  Cyclotomic out = a;
  for (Rat& c : out.coords_) {
    c *= s;
    c.canonicalize();
  }
  return out;
}

Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coords_ == b.coords_;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
  const Poly& phi = cyclotomic_polynomial(conductor_);
  ExtendedGcd bezout = poly_extended_gcd(Poly(coords_), phi);
  if (bezout.g.degree() != 0)
    throw std::logic_error("cyclotomic polynomial shares a factor with a field element");
  Rat scale = Rat(1) / bezout.g.coeff(0);
  Poly inv = scale * bezout.u;
  Cyclotomic out(conductor_);
  out.coords_ = reduce(conductor_, inv.coeffs());
  return out;
}

Cyclotomic Cyclotomic::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Cyclotomic result = from_rational(conductor_, Rat(1));
  Cyclotomic base = *this;
  long e = exponent;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Cyclotomic Cyclotomic::substitute(long k) const {
  long e = normalize_exponent(k, conductor_);
  if (std::gcd(e, conductor_) != 1)
    throw std::invalid_argument("substitution exponent must be coprime to the conductor");
  std::vector<Rat> raw(static_cast<size_t>(conductor_), Rat(0));
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    size_t target = static_cast<size_t>((static_cast<long>(i) * e) % conductor_);
    raw[target] += coords_[i];
  }
  Cyclotomic out(conductor_);
  out.coords_ = reduce(conductor_, raw);
  return out;
}

Cyclotomic Cyclotomic::conjugate() const { return substitute(conductor_ - 1); }

Rat Cyclotomic::trace_to_q() const {
  Cyclotomic sum(conductor_);
  for (long k = 1; k <= conductor_; ++k) {
    if (std::gcd(k, conductor_) != 1) continue;
    sum = sum + substitute(k);
  }
  return sum.rational_value();
}

std::string Cyclotomic::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i] == 0) continue;
    if (!first) out << " + ";
    out << format_rational(coords_[i]);
    if (i > 0) out << "*z^" << i;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace k3aut
