#include "k3aut/elliptic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace k3aut {

namespace {

long positive_mod(long k, long n) {
  long r = k % n;
  return r < 0 ? r + n : r;
}

std::string show_valuation(const std::optional<int>& v) {
  return v ? std::to_string(*v) : "inf";
}

// Valuation of f at an irreducible place; absent means f == 0 (infinite).
std::optional<int> place_valuation(const Poly& f, const Poly& place) {
  if (f.is_zero()) return std::nullopt;
  int count = 0;
  Poly current = f;
  for (;;) {
    auto [quotient, remainder] = divmod(current, place);
    if (!remainder.is_zero()) break;
    current = quotient;
    ++count;
  }
  return count;
}

bool at_least(const std::optional<int>& v, int bound) { return !v.has_value() || *v >= bound; }

void assign_type(FiberPlace& place) {
  try {
    KodairaType type = classify_kodaira(place.valuations);
    place.type = type;
    place.euler = kodaira_euler(type);
    place.components = kodaira_components(type);
    place.root_lattice = kodaira_root_lattice(type);
  } catch (const std::domain_error& error) {
    place.diagnostics.push_back(error.what());
  }
}

}  // namespace

RootOfUnity make_root_of_unity(long n, long k) {
  if (n <= 0) throw std::invalid_argument("root of unity needs a positive conductor");
  k = positive_mod(k, n);
  long g = std::gcd(k, n);  // gcd(0, n) == n, so 1 normalizes to (1, 0)
  return RootOfUnity{n / g, k / g};
}

RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
  long l = std::lcm(a.n, b.n);
  return make_root_of_unity(l, a.k * (l / a.n) + b.k * (l / b.n));
}

RootOfUnity root_inverse(const RootOfUnity& a) { return make_root_of_unity(a.n, -a.k); }

RootOfUnity root_power(const RootOfUnity& a, long e) {
  return make_root_of_unity(a.n, a.k * positive_mod(e, a.n));
}

bool operator==(const RootOfUnity& a, const RootOfUnity& b) {
  RootOfUnity na = make_root_of_unity(a.n, a.k);
  RootOfUnity nb = make_root_of_unity(b.n, b.k);
  return na.n == nb.n && na.k == nb.k;
}

std::string root_to_string(const RootOfUnity& a) {
  RootOfUnity r = make_root_of_unity(a.n, a.k);
  if (r.k == 0) return "1";
  if (r.n == 2) return "-1";
  std::string out = "zeta_" + std::to_string(r.n);
  if (r.k != 1) out += "^" + std::to_string(r.k);
  return out;
}

WeierstrassInvariants weierstrass_invariants(const WeierstrassModel& model) {
  WeierstrassInvariants inv;
  const Poly& a2 = model.a2;
  const Poly& a4 = model.a4;
  const Poly& a6 = model.a6;
  inv.c4 = Rat(16) * a2 * a2 - Rat(48) * a4;
  inv.c6 = Rat(-64) * a2.pow(3) + Rat(288) * a2 * a4 - Rat(864) * a6;
  inv.discriminant = Rat(1, 1728) * (inv.c4.pow(3) - inv.c6 * inv.c6);
  if (inv.discriminant.is_zero())
    throw std::domain_error("discriminant vanishes identically: the generic fiber is singular");
  Poly numerator = inv.c4.pow(3);
  Poly denominator = inv.discriminant;
  Poly g = poly_gcd(numerator, denominator);
  if (g.degree() > 0) {
    numerator = exact_divide(numerator, g);
    denominator = exact_divide(denominator, g);
  }
  Rat unit;
  inv.j_denominator = primitive_integer_part(denominator, &unit);
  inv.j_numerator = Rat(1) / unit * numerator;
  return inv;
}

std::string kodaira_name(const KodairaType& type) {
  switch (type.kind) {
    case KodairaKind::In:
      return "I" + std::to_string(type.n);
    case KodairaKind::II:
      return "II";
    case KodairaKind::III:
      return "III";
    case KodairaKind::IV:
      return "IV";
    case KodairaKind::InStar:
      return "I" + std::to_string(type.n) + "*";
    case KodairaKind::IVStar:
      return "IV*";
    case KodairaKind::IIIStar:
      return "III*";
    case KodairaKind::IIStar:
      return "II*";
  }
  throw std::logic_error("unknown Kodaira kind");
}

int kodaira_euler(const KodairaType& type) {
  switch (type.kind) {
    case KodairaKind::In:
      return type.n;
    case KodairaKind::II:
      return 2;
    case KodairaKind::III:
      return 3;
    case KodairaKind::IV:
      return 4;
    case KodairaKind::InStar:
      return type.n + 6;
    case KodairaKind::IVStar:
      return 8;
    case KodairaKind::IIIStar:
      return 9;
    case KodairaKind::IIStar:
      return 10;
  }
  throw std::logic_error("unknown Kodaira kind");
}

int kodaira_components(const KodairaType& type) {
  switch (type.kind) {
    case KodairaKind::In:
      return std::max(type.n, 1);
    case KodairaKind::II:
      return 1;
    case KodairaKind::III:
      return 2;
    case KodairaKind::IV:
      return 3;
    case KodairaKind::InStar:
      return type.n + 5;
    case KodairaKind::IVStar:
      return 7;
    case KodairaKind::IIIStar:
      return 8;
    case KodairaKind::IIStar:
      return 9;
  }
  throw std::logic_error("unknown Kodaira kind");
}

std::optional<std::string> kodaira_root_lattice(const KodairaType& type) {
  switch (type.kind) {
    case KodairaKind::In:
      if (type.n >= 2) return "A" + std::to_string(type.n - 1);
      return std::nullopt;
    case KodairaKind::II:
      return std::nullopt;
    case KodairaKind::III:
      return "A1";
    case KodairaKind::IV:
      return "A2";
    case KodairaKind::InStar:
      return "D" + std::to_string(type.n + 4);
    case KodairaKind::IVStar:
      return "E6";
    case KodairaKind::IIIStar:
      return "E7";
    case KodairaKind::IIStar:
      return "E8";
  }
  throw std::logic_error("unknown Kodaira kind");
}

int minimalize(ValuationTriple& v) {
  int steps = 0;
  while (at_least(v.c4, 4) && at_least(v.c6, 6) && v.delta >= 12) {
    if (v.c4) *v.c4 -= 4;
    if (v.c6) *v.c6 -= 6;
    v.delta -= 12;
    ++steps;
  }
  return steps;
}

KodairaType classify_kodaira(const ValuationTriple& v) {
  auto unclassifiable = [&v]() {
    std::ostringstream os;
    os << "unclassifiable valuation triple (v(c4), v(c6), v(delta)) = (" << show_valuation(v.c4)
       << ", " << show_valuation(v.c6) << ", " << v.delta << ")";
    return std::domain_error(os.str());
  };
  if (v.delta <= 0 || (v.c4 && *v.c4 < 0) || (v.c6 && *v.c6 < 0)) throw unclassifiable();
  if (v.c4 && *v.c4 == 0) return {KodairaKind::In, v.delta};
  if (v.delta == 2) return {KodairaKind::II};
  if (v.c4 && *v.c4 == 1 && v.delta == 3) return {KodairaKind::III};
  if (v.delta == 4) return {KodairaKind::IV};
  if (at_least(v.c4, 2) && at_least(v.c6, 3) && v.delta == 6) return {KodairaKind::InStar, 0};
  if (v.c4 && *v.c4 == 2 && v.c6 && *v.c6 == 3 && v.delta > 6)
    return {KodairaKind::InStar, v.delta - 6};
  if (v.delta == 8) return {KodairaKind::IVStar};
  if (v.c4 && *v.c4 == 3 && v.delta == 9) return {KodairaKind::IIIStar};
  if (v.delta == 10) return {KodairaKind::IIStar};
  throw unclassifiable();
}

FiberConfiguration analyze_fibers(const WeierstrassModel& model) {
  FiberConfiguration config;
  config.invariants = weierstrass_invariants(model);

  bool bounds_ok = true;
  const struct {
    const char* name;
    const Poly* p;
    int bound;
  } bounds[] = {{"a2", &model.a2, 4}, {"a4", &model.a4, 8}, {"a6", &model.a6, 12}};
  for (const auto& entry : bounds) {
    if (!entry.p->is_zero() && entry.p->degree() > entry.bound) {
      std::ostringstream os;
      os << "deg " << entry.name << " = " << entry.p->degree() << " exceeds the K3 degree bound "
         << entry.bound;
      config.diagnostics.push_back(os.str());
      bounds_ok = false;
    }
  }

  const WeierstrassInvariants& inv = config.invariants;
  for (const IrreducibleFactor& factor : factor_over_q(inv.discriminant).factors) {
    FiberPlace place;
    place.place = factor.polynomial;
    place.degree = factor.polynomial.degree();
    place.valuations.delta = factor.multiplicity;
    place.valuations.c4 = place_valuation(inv.c4, factor.polynomial);
    place.valuations.c6 = place_valuation(inv.c6, factor.polynomial);
    place.minimalization_steps = minimalize(place.valuations);
    if (place.valuations.delta == 0) continue;  // fiber smooth after rescaling
    assign_type(place);
    config.places.push_back(std::move(place));
  }

  FiberPlace infinity;
  infinity.at_infinity = true;
  infinity.degree = 1;
  infinity.valuations.c4 =
      inv.c4.is_zero() ? std::nullopt : std::optional<int>(8 - inv.c4.degree());
  infinity.valuations.c6 =
      inv.c6.is_zero() ? std::nullopt : std::optional<int>(12 - inv.c6.degree());
  infinity.valuations.delta = 24 - inv.discriminant.degree();
  infinity.minimalization_steps = minimalize(infinity.valuations);
  const struct {
    const char* name;
    std::optional<int> value;
  } infinity_valuations[] = {{"c4", infinity.valuations.c4},
                             {"c6", infinity.valuations.c6},
                             {"delta", infinity.valuations.delta}};
  bool infinity_negative = false;
  for (const auto& entry : infinity_valuations) {
    if (entry.value && *entry.value < 0) {
      std::ostringstream os;
      os << "v_infinity(" << entry.name << ") = " << *entry.value
         << " is negative: the model does not extend to a K3 over the projective line";
      infinity.diagnostics.push_back(os.str());
      infinity_negative = true;
    }
  }
  if (infinity_negative) {
    config.places.push_back(std::move(infinity));
  } else if (infinity.valuations.delta > 0) {
    assign_type(infinity);
    config.places.push_back(std::move(infinity));
  }

  bool all_typed = true;
  config.total_euler = 0;
  for (const FiberPlace& place : config.places) {
    if (place.type)
      config.total_euler += place.degree * place.euler;
    else
      all_typed = false;
  }
  if (config.total_euler != 24) {
    std::ostringstream os;
    os << "degree-weighted Euler sum " << config.total_euler << " differs from 24";
    config.diagnostics.push_back(os.str());
  }
  config.valid_k3 = bounds_ok && all_typed && config.total_euler == 24;
  return config;
}

ShiodaTateReport compute_shioda_tate(const FiberConfiguration& config,
                                     const std::string& claimed_expr) {
  ShiodaTateReport report;
  report.lattice_rank = build_lattice(claimed_expr).rank();
  for (const FiberPlace& place : config.places) {
    if (!place.type) continue;
    report.fiber_component_sum += place.degree * (place.components - 1);
    if (place.root_lattice)
      for (int i = 0; i < place.degree; ++i) report.fiber_root_lattices.push_back(*place.root_lattice);
  }
  report.mw_rank = report.lattice_rank - 2 - report.fiber_component_sum;

  for (const LatticeTerm& term : parse_lattice_expr(claimed_expr)) {
    if (term.family == 'U') continue;
    std::string name(1, term.family);
    name += std::to_string(term.index);
    if (term.scale != 1) name += "(" + std::to_string(term.scale) + ")";
    report.required_summands.push_back(name);
  }
  std::sort(report.required_summands.begin(), report.required_summands.end());
  std::sort(report.fiber_root_lattices.begin(), report.fiber_root_lattices.end());

  std::multiset<std::string> available(report.fiber_root_lattices.begin(),
                                       report.fiber_root_lattices.end());
  report.all_required_present = true;
  for (const std::string& summand : report.required_summands) {
    auto it = available.find(summand);
    if (it == available.end()) {
      report.all_required_present = false;
    } else {
      available.erase(it);
    }
  }
  report.exact_match = report.all_required_present && available.empty();
  return report;
}

ShiodaTateReport shioda_tate_check(const FiberConfiguration& config,
                                   const std::string& claimed_expr) {
  ShiodaTateReport report = compute_shioda_tate(config, claimed_expr);
  if (report.mw_rank < 0) {
    std::ostringstream os;
    os << "Mordell-Weil rank " << report.mw_rank << " is negative: " << claimed_expr
       << " is inconsistent with the fiber components";
    throw std::domain_error(os.str());
  }
  if (!report.all_required_present) {
    std::multiset<std::string> available(report.fiber_root_lattices.begin(),
                                         report.fiber_root_lattices.end());
    for (const std::string& summand : report.required_summands) {
      auto it = available.find(summand);
      if (it == available.end())
        throw std::domain_error("claimed summand " + summand + " has no matching fiber");
      available.erase(it);
    }
  }
  return report;
}

MultiplierResult automorphism_multiplier(const WeierstrassModel& model,
                                         const MonomialAutomorphism& phi) {
  RootOfUnity alpha = make_root_of_unity(phi.alpha.n, phi.alpha.k);
  RootOfUnity beta = make_root_of_unity(phi.beta.n, phi.beta.k);
  RootOfUnity gamma = make_root_of_unity(phi.gamma.n, phi.gamma.k);

  RootOfUnity target = root_power(beta, 2);  // every term must scale like y^2
  if (!(root_power(alpha, 3) == target))
    throw std::domain_error("x^3 scales by " + root_to_string(root_power(alpha, 3)) +
                            " while y^2 scales by " + root_to_string(target));
  const struct {
    const char* name;
    const Poly* p;
    long x_power;
  } terms[] = {{"a2", &model.a2, 2}, {"a4", &model.a4, 1}, {"a6", &model.a6, 0}};
  for (const auto& term : terms) {
    for (int i = 0; i <= term.p->degree(); ++i) {
      if (term.p->coeff(i) == 0) continue;
      RootOfUnity scale = root_power(gamma, i) * root_power(alpha, term.x_power);
      if (!(scale == target)) {
        std::ostringstream os;
        os << "monomial t^" << i << " of " << term.name << " scales by " << root_to_string(scale)
           << " while y^2 scales by " << root_to_string(target);
        throw std::domain_error(os.str());
      }
    }
  }
  MultiplierResult result;
  result.multiplier = alpha * gamma * root_inverse(beta);
  result.order = root_order(result.multiplier);
  return result;
}

namespace {

Poly tpow(int degree) { return Poly::monomial(degree); }

MonomialAutomorphism half_turn_involution() {
  // (x, y, t) -> (-x, zeta_4 y, -t)
  return {make_root_of_unity(2, 1), make_root_of_unity(4, 1), make_root_of_unity(2, 1)};
}

std::vector<RegistryEntry> build_registry() {
  std::vector<RegistryEntry> entries;

  {
    RegistryEntry e;
    e.id = "7.1";
    e.claimed_s = "U";
    e.model = {Poly(), Poly(Rat(1)), tpow(11)};
    e.automorphism = half_turn_involution();
    e.expect.fibers = {{"I1", 22}, {"II", 1}};
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 22;
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.2";
    e.kind = ExampleKind::note;
    e.claimed_s = "U(2)";
    e.note =
        "double cover of P1 x P1 branched along an anti-invariant bidegree-(4,4) curve; the "
        "invariant lattice is expected, not established, and there is no Weierstrass model to "
        "analyze";
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.3";
    e.claimed_s = "U+D4";
    e.model = {Poly(), tpow(2), tpow(11)};
    e.automorphism =
        MonomialAutomorphism{make_root_of_unity(16, 2), make_root_of_unity(16, 3),
                             make_root_of_unity(16, 2)};
    e.expect.fibers = {{"I0*", 1}, {"I1", 16}, {"II", 1}};
    e.expect.multiplier_order = 16;
    e.expect.delta_degree = 22;
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.4";
    e.kind = ExampleKind::note;
    e.claimed_s = "U(2)+D4";
    e.note =
        "minimal resolution of a double plane branched along a quintic with five ordinary double "
        "points; no Weierstrass model to analyze";
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.5";
    e.claimed_s = "U+D8";
    e.model = {tpow(7) - tpow(1), Poly(), tpow(7) - tpow(1)};
    e.automorphism = half_turn_involution();
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 28;
    e.expect.flagged = true;
    e.expect.diagnostic_fragments = {"deg a2 = 7", "v_infinity(delta) = -4"};
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.6";
    e.claimed_s = "U+D4+D4";
    e.model = {Poly(), Poly(), tpow(3) - tpow(9)};
    e.automorphism = half_turn_involution();
    e.expect.fibers = {{"I0*", 2}, {"II", 6}};
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 18;
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.7";
    e.claimed_s = "U+E8";
    e.model = {Poly(), Poly(), tpow(5) - tpow(11)};
    e.automorphism = half_turn_involution();
    e.expect.fibers = {{"II", 7}, {"II*", 1}};
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 22;
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.8";
    e.kind = ExampleKind::note;
    e.claimed_s = "U(2)+D4+D4";
    e.note =
        "double cover of P1 x P1 branched along a bidegree-(4,2) curve together with two rulings; "
        "no Weierstrass model to analyze";
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.9";
    e.claimed_s = "U+E8+D4";
    e.model = {Poly(), tpow(2), tpow(7)};
    e.automorphism =
        MonomialAutomorphism{make_root_of_unity(16, 10), make_root_of_unity(16, 7),
                             make_root_of_unity(16, 2)};
    e.expect.fibers = {{"I0*", 1}, {"I1", 8}, {"II*", 1}};
    e.expect.multiplier_order = 16;
    e.expect.delta_degree = 14;
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.10";
    e.claimed_s = "U+D8+D4";
    e.model = {tpow(5) - tpow(1), Poly(), tpow(7) - tpow(3)};
    e.automorphism = half_turn_involution();
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 22;
    e.expect.flagged = true;
    e.expect.diagnostic_fragments = {"deg a2 = 5", "v_infinity(c4) = -2"};
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.11";
    e.claimed_s = "U+E8+E8";
    e.model = {Poly(), Poly(), tpow(5) - tpow(7)};
    e.automorphism = half_turn_involution();
    e.expect.fibers = {{"II", 2}, {"II*", 2}};
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 14;
    entries.push_back(std::move(e));
  }
  {
    RegistryEntry e;
    e.id = "7.12";
    e.claimed_s = "U+E8+D8";
    e.model = {tpow(1), Poly(), tpow(7)};
    e.automorphism = half_turn_involution();
    e.expect.fibers = {{"I1", 4}, {"I4*", 1}, {"II*", 1}};
    e.expect.multiplier_order = 4;
    e.expect.delta_degree = 14;
    entries.push_back(std::move(e));
  }
  return entries;
}

std::string fibers_to_string(const std::map<std::string, int>& counts) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, count] : counts) {
    if (!first) os << " + ";
    first = false;
    if (count != 1) os << count << " x ";
    os << name;
  }
  return os.str();
}

std::string joined_diagnostics(const FiberConfiguration& config) {
  std::ostringstream os;
  for (const std::string& d : config.diagnostics) os << d << "; ";
  for (const FiberPlace& place : config.places)
    for (const std::string& d : place.diagnostics) os << d << "; ";
  return os.str();
}

}  // namespace

const std::vector<RegistryEntry>& example_registry() {
  static const std::vector<RegistryEntry> registry = build_registry();
  return registry;
}

std::vector<ExampleReport> verify_registry() {
  std::vector<ExampleReport> reports;
  for (const RegistryEntry& entry : example_registry()) {
    ExampleReport report;
    report.id = entry.id;
    if (entry.kind == ExampleKind::note) {
      report.status = ExampleReport::Status::note;
      report.details.push_back(entry.note);
      reports.push_back(std::move(report));
      continue;
    }

    std::vector<std::string> problems;
    std::vector<std::string> facts;
    FiberConfiguration config = analyze_fibers(entry.model);

    if (entry.expect.delta_degree != 0 &&
        config.invariants.discriminant.degree() != entry.expect.delta_degree) {
      problems.push_back("deg delta = " +
                         std::to_string(config.invariants.discriminant.degree()) +
                         ", registry records " + std::to_string(entry.expect.delta_degree));
    } else {
      facts.push_back("deg delta = " + std::to_string(config.invariants.discriminant.degree()));
    }

    if (entry.automorphism) {
      try {
        MultiplierResult m = automorphism_multiplier(entry.model, *entry.automorphism);
        if (m.order != entry.expect.multiplier_order) {
          problems.push_back("multiplier order " + std::to_string(m.order) + ", registry records " +
                             std::to_string(entry.expect.multiplier_order));
        } else {
          facts.push_back("multiplier " + root_to_string(m.multiplier) + " of order " +
                          std::to_string(m.order));
        }
      } catch (const std::domain_error& error) {
        problems.push_back(std::string("automorphism does not preserve the equation: ") +
                           error.what());
      }
    }

    if (entry.expect.flagged) {
      std::string joined = joined_diagnostics(config);
      if (config.valid_k3)
        problems.push_back("expected an invalid configuration, got a valid one");
      for (const std::string& fragment : entry.expect.diagnostic_fragments)
        if (joined.find(fragment) == std::string::npos)
          problems.push_back("recorded diagnostic not reproduced: " + fragment);
      for (const std::string& d : config.diagnostics) facts.push_back(d);
      for (const FiberPlace& place : config.places)
        for (const std::string& d : place.diagnostics) facts.push_back(d);
      report.status = problems.empty() ? ExampleReport::Status::known_discrepancy
                                       : ExampleReport::Status::fail;
    } else {
      if (!config.valid_k3)
        problems.push_back("configuration is not a valid K3: " + joined_diagnostics(config));
      std::map<std::string, int> computed;
      for (const FiberPlace& place : config.places)
        if (place.type) computed[kodaira_name(*place.type)] += place.degree;
      std::map<std::string, int> expected(entry.expect.fibers.begin(), entry.expect.fibers.end());
      if (computed != expected) {
        problems.push_back("fibers " + fibers_to_string(computed) + ", registry records " +
                           fibers_to_string(expected));
      } else {
        facts.push_back("fibers " + fibers_to_string(computed) + ", Euler " +
                        std::to_string(config.total_euler));
      }
      try {
        ShiodaTateReport st = shioda_tate_check(config, entry.claimed_s);
        if (st.mw_rank != entry.expect.mw_rank)
          problems.push_back("Mordell-Weil rank " + std::to_string(st.mw_rank) +
                             ", registry records " + std::to_string(entry.expect.mw_rank));
        else if (!st.exact_match)
          problems.push_back("fiber root lattices do not match the ADE summands of " +
                             entry.claimed_s);
        else
          facts.push_back("Shioda-Tate consistent with " + entry.claimed_s + " (mw = " +
                          std::to_string(st.mw_rank) + ")");
      } catch (const std::domain_error& error) {
        problems.push_back(error.what());
      }
      report.status =
          problems.empty() ? ExampleReport::Status::pass : ExampleReport::Status::fail;
    }
    report.details = problems.empty() ? std::move(facts) : std::move(problems);
    reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace k3aut
