#include "k3aut/factor.hpp"

#include "k3aut/cyclotomic.hpp"

#include <algorithm>
#include <random>

namespace k3aut {

namespace {

// Dense integer polynomial; when a modulus is in play all coefficients are
// kept in [0, m).
using ZPoly = std::vector<Int>;

void z_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_degree(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

Int mod_pos(const Int& x, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZPoly z_reduce(const ZPoly& f, const Int& m) {
  ZPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = mod_pos(f[i], m);
  z_trim(out);
  return out;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return z_reduce(out, m);
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly out(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return z_reduce(out, m);
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return z_reduce(out, m);
}

Int z_invert(const Int& x, const Int& m) {
  Int inv;
  if (mpz_invert(inv.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::logic_error("non-invertible leading coefficient in modular division");
  return inv;
}

// Division with remainder; the divisor's leading coefficient must be
// invertible mod m (always true for the monic divisors used below).
std::pair<ZPoly, ZPoly> z_divmod(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (b.empty()) throw std::domain_error("modular polynomial division by zero");
  ZPoly rem = z_reduce(a, m);
  const int db = z_degree(b);
  if (z_degree(rem) < db) return {{}, rem};
  Int lead_inv = b.back() == 1 ? Int(1) : z_invert(b.back(), m);
  ZPoly quot(static_cast<size_t>(z_degree(rem) - db) + 1, Int(0));
  while (z_degree(rem) >= db) {
    int shift = z_degree(rem) - db;
    Int factor = mod_pos(rem.back() * lead_inv, m);
    quot[static_cast<size_t>(shift)] = factor;
    if (factor != 0)
      for (int i = 0; i <= db; ++i) {
        rem[static_cast<size_t>(shift + i)] =
            mod_pos(rem[static_cast<size_t>(shift + i)] - factor * b[static_cast<size_t>(i)], m);
      }
    rem.pop_back();
    z_trim(rem);
  }
  z_trim(quot);
  return {quot, rem};
}

ZPoly z_make_monic(const ZPoly& f, const Int& p) {
  if (f.empty()) return f;
  if (f.back() == 1) return f;
  Int inv = z_invert(f.back(), p);
  ZPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = mod_pos(f[i] * inv, p);
  return out;
}

ZPoly z_gcd(ZPoly a, ZPoly b, const Int& p) {
  a = z_reduce(a, p);
  b = z_reduce(b, p);
  while (!b.empty()) {
    ZPoly r = z_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return z_make_monic(a, p);
}

ZPoly z_powmod(const ZPoly& base, const Int& exponent, const ZPoly& modpoly, const Int& p) {
  ZPoly result = {Int(1)};
  ZPoly b = z_divmod(base, modpoly, p).second;
  Int e = exponent;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = z_divmod(z_mul(result, b, p), modpoly, p).second;
    b = z_divmod(z_mul(b, b, p), modpoly, p).second;
    e >>= 1;
  }
  return result;
}

ZPoly z_derivative(const ZPoly& f, const Int& m) {
  if (f.size() <= 1) return {};
  ZPoly out(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) out[i - 1] = f[i] * Int(static_cast<long>(i));
  return z_reduce(out, m);
}

struct ZXgcd {
  ZPoly g, s, t;  // s*a + t*b = g (monic) mod p
};

ZXgcd z_xgcd(const ZPoly& a, const ZPoly& b, const Int& p) {
  ZPoly r0 = z_reduce(a, p), r1 = z_reduce(b, p);
  ZPoly s0 = {Int(1)}, s1 = {};
  ZPoly t0 = {}, t1 = {Int(1)};
  while (!r1.empty()) {
    auto [q, r2] = z_divmod(r0, r1, p);
    ZPoly s2 = z_sub(s0, z_mul(q, s1, p), p);
    ZPoly t2 = z_sub(t0, z_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) throw std::logic_error("xgcd of zero polynomials");
  Int inv = z_invert(r0.back(), p);
  auto scale = [&](ZPoly f) {
    for (Int& c : f) c = mod_pos(c * inv, p);
    z_trim(f);
    return f;
  };
  return {scale(r0), scale(s0), scale(t0)};
}

// --- Cantor-Zassenhaus over F_p (p odd) ---

void equal_degree_split(const ZPoly& f, int d, const Int& p, std::mt19937_64& rng,
                        std::vector<ZPoly>& out) {
  const int n = z_degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  // p^d
  Int pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  Int exponent = (pd - 1) / 2;
  for (;;) {
    ZPoly r(static_cast<size_t>(n), Int(0));
    for (auto& c : r) c = Int(static_cast<unsigned long>(rng() % 1000000007ull));
    r = z_reduce(r, p);
    if (z_degree(r) < 1) continue;
    ZPoly g = z_gcd(r, f, p);
    if (z_degree(g) > 0 && z_degree(g) < n) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(z_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
    ZPoly b = z_powmod(r, exponent, f, p);
    if (b.empty()) continue;
    b = z_sub(b, {Int(1)}, p);
    g = z_gcd(b, f, p);
    if (z_degree(g) > 0 && z_degree(g) < n) {
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(z_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ZPoly> factor_mod_p(const ZPoly& f_in, const Int& p, std::mt19937_64& rng) {
  std::vector<ZPoly> out;
  ZPoly f = z_make_monic(z_reduce(f_in, p), p);
  ZPoly h = {Int(0), Int(1)};  // x
  int d = 0;
  while (z_degree(f) >= 2 * (d + 1)) {
    ++d;
    h = z_powmod(h, p, f, p);
    ZPoly g = z_gcd(z_sub(h, {Int(0), Int(1)}, p), f, p);
    if (z_degree(g) > 0) {
      equal_degree_split(g, d, p, rng, out);
      f = z_divmod(f, g, p).first;
      h = z_divmod(h, f, p).second;
    }
  }
  if (z_degree(f) > 0) out.push_back(f);
  return out;
}

// --- Hensel lifting ---

// One quadratic step: from f = g*h, s*g + t*h = 1 (mod m) to the same mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  Int m2 = m * m;
  ZPoly e = z_sub(f, z_mul(g, h, m2), m2);
  auto [q, r] = z_divmod(z_mul(s, e, m2), h, m2);
  g = z_add(g, z_add(z_mul(t, e, m2), z_mul(q, g, m2), m2), m2);
  h = z_add(h, r, m2);
  ZPoly b = z_sub(z_add(z_mul(s, g, m2), z_mul(t, h, m2), m2), {Int(1)}, m2);
  auto [c, d] = z_divmod(z_mul(s, b, m2), h, m2);
  s = z_sub(s, d, m2);
  t = z_sub(t, z_add(z_mul(t, b, m2), z_mul(c, g, m2), m2), m2);
}

// Lifts a pairwise factorization f = g*h from mod p to mod p^(2^j) >= target.
void hensel_lift_pair(const ZPoly& f, ZPoly& g, ZPoly& h, const Int& p, const Int& target,
                      Int& reached) {
  ZXgcd bezout = z_xgcd(g, h, p);
  if (z_degree(bezout.g) != 0)
    throw std::logic_error("modular factors are not coprime during lifting");
  ZPoly s = bezout.s, t = bezout.t;
  Int m = p;
  while (m < target) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  reached = m;
}

// Splits the modular factor list in two halves, lifts, recurses.
void hensel_lift_tree(const ZPoly& f, const std::vector<ZPoly>& modular, const Int& p,
                      const Int& target, std::vector<ZPoly>& out) {
  if (modular.size() == 1) {
    Int m = p;
    while (m < target) m *= m;
    out.push_back(z_reduce(f, m));
    return;
  }
  size_t half = modular.size() / 2;
  ZPoly g = {Int(1)}, h = {Int(1)};
  std::vector<ZPoly> left(modular.begin(), modular.begin() + static_cast<long>(half));
  std::vector<ZPoly> right(modular.begin() + static_cast<long>(half), modular.end());
  for (const ZPoly& f_i : left) g = z_mul(g, f_i, p);
  for (const ZPoly& f_i : right) h = z_mul(h, f_i, p);
  Int reached = p;
  hensel_lift_pair(f, g, h, p, target, reached);
  hensel_lift_tree(g, left, p, target, out);
  hensel_lift_tree(h, right, p, target, out);
}

// --- conversions ---

ZPoly to_zpoly(const Poly& f) {
  ZPoly out(static_cast<size_t>(f.degree()) + 1);
  for (int i = 0; i <= f.degree(); ++i) {
    Rat c = f.coeff(i);
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("expected integer polynomial");
    out[static_cast<size_t>(i)] = c.get_num();
  }
  return out;
}

Poly to_poly(const ZPoly& f) {
  std::vector<Rat> coeffs(f.size());
  for (size_t i = 0; i < f.size(); ++i) coeffs[i] = Rat(f[i]);
  return Poly(std::move(coeffs));
}

Int symmetric_rep(const Int& x, const Int& m) {
  Int r = mod_pos(x, m);
  if (r * 2 > m) r -= m;
  return r;
}

ZPoly symmetric_lift(const ZPoly& f, const Int& m) {
  ZPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = symmetric_rep(f[i], m);
  z_trim(out);
  return out;
}

Int max_abs_coeff(const ZPoly& f) {
  Int best = 0;
  for (const Int& c : f) {
    Int a = c < 0 ? Int(-c) : c;
    if (a > best) best = a;
  }
  return best;
}

std::vector<long> small_primes(long limit) {
  std::vector<bool> sieve(static_cast<size_t>(limit) + 1, true);
  std::vector<long> primes;
  for (long i = 2; i <= limit; ++i) {
    if (!sieve[static_cast<size_t>(i)]) continue;
    primes.push_back(i);
    for (long j = 2 * i; j <= limit; j += i) sieve[static_cast<size_t>(j)] = false;
  }
  return primes;
}

// Set of degrees over which a true factor could exist, from one modular
// degree multiset: all subset sums.
std::vector<bool> possible_degrees(const std::vector<ZPoly>& modular, int n) {
  std::vector<bool> sums(static_cast<size_t>(n) + 1, false);
  sums[0] = true;
  for (const ZPoly& f : modular) {
    int d = z_degree(f);
    for (int s = n; s >= d; --s)
      if (sums[static_cast<size_t>(s - d)]) sums[static_cast<size_t>(s)] = true;
  }
  return sums;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial of
// degree >= 2 with positive leading coefficient. Returns primitive
// irreducible integer factors.
std::vector<Poly> zassenhaus(const Poly& input) {
  const int n = input.degree();
  ZPoly h = to_zpoly(input);
  const Int lc = h.back();

  // Candidate primes: odd, not dividing lc, square-free reduction.
  std::mt19937_64 rng(0x5eedf00dULL);
  std::vector<ZPoly> best_factors;
  Int best_prime = 0;
  std::vector<bool> degree_filter(static_cast<size_t>(n) + 1, true);
  int tried = 0;
  for (long p_candidate : small_primes(2000)) {
    if (p_candidate == 2) continue;
    Int p(p_candidate);
    if (mod_pos(lc, p) == 0) continue;
    ZPoly fp = z_reduce(h, p);
    if (z_degree(z_gcd(fp, z_derivative(fp, p), p)) != 0) continue;
    std::vector<ZPoly> factors = factor_mod_p(h, p, rng);
    std::vector<bool> degrees = possible_degrees(factors, n);
    for (size_t i = 0; i < degree_filter.size(); ++i)
      degree_filter[i] = degree_filter[i] && degrees[i];
    if (best_prime == 0 || factors.size() < best_factors.size()) {
      best_factors = std::move(factors);
      best_prime = p;
    }
    ++tried;
    bool splittable = false;
    for (int d = 1; d < n; ++d) splittable = splittable || degree_filter[static_cast<size_t>(d)];
    if (!splittable) return {input};  // certified irreducible across primes
    if (tried >= 5 || best_factors.size() <= 2) break;
  }
  if (best_prime == 0) throw std::runtime_error("no usable prime found for factorization");
  if (best_factors.size() == 1) return {input};
  if (best_factors.size() > 26) throw std::runtime_error("too many modular factors to recombine");

  // Monicize: H(x) = lc^(n-1) * h(x/lc) is monic over Z; its monic integer
  // factors map back to primitive factors of h via x -> lc*x.
  ZPoly big(h.size());
  big[static_cast<size_t>(n)] = 1;
  Int scale = 1;  // lc^(n-1-i)
  for (int i = n - 1; i >= 0; --i) {
    big[static_cast<size_t>(i)] = h[static_cast<size_t>(i)] * scale;
    scale *= lc;
  }

  // Coefficient bound for monic factors of big (loose Mignotte variant).
  Int bound = max_abs_coeff(big);
  Int two_n = 1;
  two_n <<= static_cast<unsigned>(n);
  bound *= two_n * Int(n + 1);
  Int target = 2 * bound + 1;

  Int modulus = best_prime;
  while (modulus < target) modulus *= modulus;
  std::vector<ZPoly> modular = factor_mod_p(big, best_prime, rng);
  std::vector<ZPoly> lifted;
  hensel_lift_tree(big, modular, best_prime, target, lifted);

  std::vector<Poly> result;
  Poly remaining = to_poly(big);
  std::vector<size_t> pool(lifted.size());
  for (size_t i = 0; i < pool.size(); ++i) pool[i] = i;

  auto back_substitute = [&](const Poly& monic_factor) {
    // factor of big -> factor of input via x -> lc * x, then primitive part.
    std::vector<Rat> coeffs(static_cast<size_t>(monic_factor.degree()) + 1);
    Rat power(1);
    for (int i = 0; i <= monic_factor.degree(); ++i) {
      coeffs[static_cast<size_t>(i)] = monic_factor.coeff(i) * power;
      power *= Rat(lc);
    }
    return primitive_integer_part(Poly(std::move(coeffs)));
  };

  size_t cardinality = 1;
  while (2 * cardinality <= pool.size()) {
    // Odometer over index subsets of the pool of the given cardinality.
    std::vector<size_t> pick(cardinality);
    for (size_t i = 0; i < cardinality; ++i) pick[i] = i;
    bool removed = false;
    for (;;) {
      ZPoly cand = {Int(1)};
      for (size_t i : pick) cand = z_mul(cand, lifted[pool[i]], modulus);
      Poly candidate = to_poly(symmetric_lift(cand, modulus));
      auto [quotient, rem] = divmod(remaining, candidate);
      if (rem.is_zero()) {
        result.push_back(back_substitute(candidate));
        remaining = quotient;
        std::vector<size_t> next_pool;
        for (size_t i = 0; i < pool.size(); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) next_pool.push_back(pool[i]);
        pool = std::move(next_pool);
        removed = true;
        break;
      }
      // advance the odometer
      size_t k = cardinality;
      while (k > 0) {
        --k;
        if (pick[k] + (cardinality - k) < pool.size()) {
          ++pick[k];
          for (size_t j = k + 1; j < cardinality; ++j) pick[j] = pick[j - 1] + 1;
          break;
        }
        if (k == 0) {
          pick.clear();
          break;
        }
      }
      if (pick.empty()) break;
    }
    if (!removed) ++cardinality;
  }
  if (remaining.degree() >= 1) result.push_back(back_substitute(remaining));
  return result;
}

bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

Poly primitive_integer_part(const Poly& f, Rat* unit) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no primitive part");
  Int denom = f.denominator_lcm();
  Int content = 0;
  for (int i = 0; i <= f.degree(); ++i) {
    Rat c = f.coeff(i) * Rat(denom);
    c.canonicalize();
    Int g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
    content = g;
  }
  Rat scale = Rat(denom) / Rat(content);
  if (f.leading() < 0) scale = -scale;
  Poly out = scale * f;
  if (unit) {
    *unit = Rat(1) / scale;
    unit->canonicalize();
  }
  return out;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial");
  std::vector<std::pair<Poly, int>> parts;
  if (f.degree() == 0) return parts;
  Poly monic = f.monic();
  Poly g = poly_gcd(monic, monic.derivative());
  if (g.degree() == 0) {
    parts.push_back({monic, 1});
    return parts;
  }
  Poly b = exact_divide(monic, g);
  Poly c = exact_divide(monic.derivative(), g);
  Poly d = c - b.derivative();
  int i = 1;
  while (b.degree() > 0) {
    Poly a = poly_gcd(b, d);
    if (a.degree() > 0) parts.push_back({a, i});
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
    ++i;
  }
  return parts;
}

Factorization factor_over_q(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization result;
  result.unit = Rat(1);
  if (f.degree() == 0) {
    result.unit = f.coeff(0);
    return result;
  }

  for (auto& [part, multiplicity] : squarefree_decomposition(f)) {
    Poly work = primitive_integer_part(part);
    // strip powers of t
    int t_power = 0;
    while (work.degree() >= 1 && work.coeff(0) == 0) {
      work = exact_divide(work, Poly::variable());
      ++t_power;
    }
    if (t_power > 0) result.factors.push_back({Poly::variable(), multiplicity * t_power});

    // cyclotomic recognition
    if (work.degree() >= 1) {
      long limit = 2L * work.degree() * work.degree() + 2;
      for (long d = 1; d <= limit && work.degree() >= 1; ++d) {
        if (euler_phi(d) > work.degree()) continue;
        const Poly& phi = cyclotomic_polynomial(d);
        if (phi.degree() > work.degree()) continue;
        auto [quotient, rem] = divmod(work, phi);
        if (rem.is_zero()) {
          result.factors.push_back({phi, multiplicity});
          work = quotient;
        }
      }
    }

    if (work.degree() == 1) {
      result.factors.push_back({primitive_integer_part(work), multiplicity});
    } else if (work.degree() >= 2) {
      for (Poly& irreducible : zassenhaus(primitive_integer_part(work)))
        result.factors.push_back({std::move(irreducible), multiplicity});
    }
  }

  // unit = f / product(factor^multiplicity); both sides share every root, so
  // the ratio of leading coefficients is the exact constant.
  Rat lead_product(1);
  for (const IrreducibleFactor& factor : result.factors)
    for (int i = 0; i < factor.multiplicity; ++i) lead_product *= factor.polynomial.leading();
  result.unit = f.leading() / lead_product;
  result.unit.canonicalize();

  std::sort(result.factors.begin(), result.factors.end(),
            [](const IrreducibleFactor& x, const IrreducibleFactor& y) {
              return poly_less(x.polynomial, y.polynomial);
            });
  return result;
}

bool is_irreducible_over_q(const Poly& f) {
  if (f.degree() < 1) return false;
  Factorization factorization = factor_over_q(f);
  return factorization.factors.size() == 1 && factorization.factors[0].multiplicity == 1;
}

}  // namespace k3aut
