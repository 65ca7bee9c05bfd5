#include "k3aut/classification.hpp"

#include "k3aut/cyclotomic.hpp"

#include <algorithm>

namespace k3aut {

namespace {

const std::vector<long> kPrimePowerOrders = {2, 4, 8, 16, 3, 9, 27, 5, 25, 7, 11, 13, 17, 19};

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct KeyedLattice {
  NikulinKey key;
  LatticeInvariants invariants;
};

KeyedLattice keyed_2_elementary(const GramLattice& lattice) {
  LatticeInvariants inv = lattice_invariants(lattice);
  if (!inv.delta) throw std::domain_error("lattice is not an even 2-elementary lattice");
  if (inv.t_plus != 1) throw std::domain_error("invariant lattice must have signature (1, rank-1)");
  return {NikulinKey{*inv.delta, inv.t_plus, inv.t_minus, inv.a}, inv};
}

bool key_in(const NikulinKey& key, const std::vector<std::string>& exprs) {
  for (const std::string& expr : exprs)
    if (nikulin_key(build_lattice(expr)) == key) return true;
  return false;
}

FixedLocusProfile prime_order_profile(long p, const GramLattice& lattice) {
  LatticeInvariants inv = lattice_invariants(lattice);
  if (inv.t_plus != 1) throw std::domain_error("invariant lattice must have signature (1, rank-1)");
  if (inv.a > 0 && (!inv.elementary_prime || *inv.elementary_prime != p))
    throw std::domain_error("lattice is not " + std::to_string(p) + "-elementary");
  const int r = inv.rank;
  const int a = inv.a;

  FixedLocusProfile profile;
  if (p == 2) {
    NikulinKey key = nikulin_key(lattice);
    if (key == NikulinKey{0, 1, 9, 10}) {
      profile.exists = true;
      profile.special = SpecialLocus::empty_locus;
      return profile;
    }
    if (key == NikulinKey{0, 1, 9, 8}) {
      profile.exists = true;
      profile.special = SpecialLocus::two_elliptic_curves;
      profile.curve_genus = 1;
      return profile;
    }
  }

  const long numerator = 22 - r - (p - 1) * a;
  const long step = 2 * (p - 1);
  if (numerator < 0 || numerator % step != 0) return profile;  // exists = false
  profile.exists = true;

  auto exact_quotient = [](long num, long den) {
    if (num % den != 0) throw std::logic_error("fixed locus count is not an integer");
    return static_cast<int>(num / den);
  };

  if (p == 2) {
    profile.points = 0;
    profile.rational_curves = exact_quotient(r - a, 2);
    profile.curve_genus = exact_quotient(numerator, step);
  } else if (p == 17 || p == 19) {
    // Points only: no distinguished curve for these two primes.
    profile.points = exact_quotient((p - 2) * r + 22, p - 1);
    profile.rational_curves = 0;
  } else {
    profile.points = exact_quotient((p - 2) * r - 2, p - 1);
    profile.rational_curves = exact_quotient(2 + r - (p - 1) * a, step);
    profile.curve_genus = exact_quotient(numerator, step);
  }
  if (profile.points < 0 || profile.rational_curves < 0)
    throw std::domain_error("lattice outside the classified families");
  return profile;
}

FixedLocusProfile two_power_profile(long order, const GramLattice& lattice) {
  KeyedLattice keyed = keyed_2_elementary(lattice);
  const NikulinKey& key = keyed.key;
  const int r = keyed.invariants.rank;

  bool in_table = false;
  for (const Table1Entry& entry : table1_entries())
    if (key == nikulin_key(build_lattice(entry.s_expr))) in_table = true;
  if (!in_table) throw std::domain_error("lattice outside the classified families");

  FixedLocusProfile profile;
  if (order == 4) {
    if (key_in(key, order4_excluded_lattices())) return profile;
    profile.exists = true;
    profile.points = (r + 6) / 2;
    profile.rational_curves = (r - 2) / 4;
    return profile;
  }
  const std::vector<std::string>& members = admissible_lattices(order);
  if (!key_in(key, members)) return profile;
  profile.exists = true;
  profile.points = (3 * r + 6) / 4;
  profile.rational_curves = (r + 2) / 8;
  return profile;
}

struct ThreeElementaryProfile {
  int t_minus;
  int a;
  const char* expr;
  int points;
  int curves;
};

const std::vector<ThreeElementaryProfile>& order9_profiles() {
  static const std::vector<ThreeElementaryProfile> rows = {
      {3, 1, "U+A2", 6, 0},
      {9, 0, "U+E8", 10, 1},
      {9, 2, "U+E6+A2", 10, 1},
      {15, 1, "U+E8+E6", 14, 2},
  };
  return rows;
}

const std::vector<ThreeElementaryProfile>& order27_profiles() {
  static const std::vector<ThreeElementaryProfile> rows = {
      {3, 1, "U+A2", 6, 0},
  };
  return rows;
}

FixedLocusProfile three_power_profile(long order, const GramLattice& lattice) {
  LatticeInvariants inv = lattice_invariants(lattice);
  if (inv.t_plus != 1) throw std::domain_error("invariant lattice must have signature (1, rank-1)");
  if (inv.a > 0 && (!inv.elementary_prime || *inv.elementary_prime != 3))
    throw std::domain_error("lattice is not 3-elementary");
  FixedLocusProfile profile;
  const auto& rows = order == 9 ? order9_profiles() : order27_profiles();
  for (const ThreeElementaryProfile& row : rows) {
    if (row.t_minus != inv.t_minus || row.a != inv.a) continue;
    profile.exists = true;
    profile.points = row.points;
    profile.rational_curves = row.curves;
    return profile;
  }
  return profile;
}

}  // namespace

OrderConstraintReport order_constraints(long order, const GramLattice& lattice) {
  if (order < 1) throw std::invalid_argument("order must be positive");
  if (lattice.rank() > 20) throw std::domain_error("invariant lattice rank exceeds 20");
  OrderConstraintReport report;
  report.order = order;
  report.rank = lattice.rank();
  report.prime_power_listed =
      std::find(kPrimePowerOrders.begin(), kPrimePowerOrders.end(), order) != kPrimePowerOrders.end();
  report.phi = euler_phi(order);
  report.phi_divides_corank = (22 - lattice.rank()) % report.phi == 0;

  LatticeInvariants inv = lattice_invariants(lattice);
  if (inv.a == 0 && inv.t_plus == 1 && is_even(lattice)) {
    std::vector<long> allowed;
    if (inv.rank == 2)
      allowed = {66, 44, 12};
    else if (inv.rank == 10)
      allowed = {42, 36, 28};
    else if (inv.rank == 18)
      allowed = {12};
    if (!allowed.empty()) {
      bool ok = false;
      for (long n : allowed) ok = ok || (n % order == 0);
      report.unimodular_rule = ok;
    }
  }
  return report;
}

FixedLocusProfile fixed_locus_profile(long order, const GramLattice& lattice) {
  if (is_prime(order)) {
    if (order > 19) throw std::invalid_argument("prime order out of classified range");
    return prime_order_profile(order, lattice);
  }
  if (order == 4 || order == 8 || order == 16) return two_power_profile(order, lattice);
  if (order == 9 || order == 27) return three_power_profile(order, lattice);
  throw std::invalid_argument("order " + std::to_string(order) + " is not classified here");
}

bool exists_automorphism(long order, const GramLattice& lattice) {
  return fixed_locus_profile(order, lattice).exists;
}

int profile_euler_characteristic(const FixedLocusProfile& profile) {
  if (!profile.exists) throw std::domain_error("no automorphism, no fixed locus");
  switch (profile.special) {
    case SpecialLocus::empty_locus:
      return 0;
    case SpecialLocus::two_elliptic_curves:
      return 0;
    case SpecialLocus::none:
      break;
  }
  int chi = profile.points + 2 * profile.rational_curves;
  if (profile.curve_genus) chi += 2 - 2 * *profile.curve_genus;
  return chi;
}

const std::vector<Table1Entry>& table1_entries() {
  static const std::vector<Table1Entry> rows = {
      {2, 0, "U", "U+U+E8+E8"},
      {2, 2, "U(2)", "U+U(2)+E8+E8"},
      {6, 2, "U+D4", "U+U+E8+D4"},
      {6, 4, "U(2)+D4", "U(2)+U(2)+E8+D4"},
      {10, 0, "U+E8", "U+U+E8"},
      {10, 2, "U+D8", "U+U+D8"},
      {10, 4, "U+D4+D4", "U+U+D4+D4"},
      {10, 6, "U(2)+D4+D4", "U+U(2)+D4+D4"},
      {10, 8, "U+E8(2)", "U+U+E8(2)"},
      {10, 10, "U(2)+E8(2)", "U+U(2)+E8(2)"},
      {14, 2, "U+E8+D4", "U+U+D4"},
      {14, 4, "U+D8+D4", "U+U(2)+D4"},
      {14, 6, "U+D4+D4+D4", "U(2)+U(2)+D4"},
      {18, 0, "U+E8+E8", "U+U"},
      {18, 2, "U+E8+D8", "U+U(2)"},
      {18, 4, "U+D8+D8", "U(2)+U(2)"},
  };
  return rows;
}

std::vector<Table1Row> verify_table1() {
  std::vector<Table1Row> rows;
  for (const Table1Entry& entry : table1_entries()) {
    Table1Row row;
    row.rank = entry.rank;
    row.a = entry.a;
    row.s_expr = entry.s_expr;
    row.t_expr = entry.t_expr;

    GramLattice s = build_lattice(entry.s_expr);
    LatticeInvariants si = lattice_invariants(s);
    row.computed_rank = si.rank;
    row.computed_a = si.a;
    row.computed_delta = si.delta.value_or(-1);
    row.s_matches = si.rank == entry.rank && si.a == entry.a && si.delta && *si.delta == 0;
    if (!row.s_matches) row.notes.push_back("stated invariants of " + row.s_expr + " do not recompute");

    GramLattice t = build_lattice(entry.t_expr);
    LatticeInvariants ti = lattice_invariants(t);
    row.complement_rank = ti.rank;
    row.complement_a = ti.a;
    row.complement_signature = {ti.t_plus, ti.t_minus};
    row.complement_ok = true;
    if (ti.rank != 22 - si.rank) {
      row.complement_ok = false;
      row.notes.push_back("rank(T) = " + std::to_string(ti.rank) + " != " + std::to_string(22 - si.rank));
    }
    if (ti.t_plus != 2 || ti.t_minus != 20 - si.rank) {
      row.complement_ok = false;
      row.notes.push_back("signature(T) = (" + std::to_string(ti.t_plus) + "," +
                          std::to_string(ti.t_minus) + ") != (2," + std::to_string(20 - si.rank) + ")");
    }
    if (ti.a != si.a) {
      row.complement_ok = false;
      row.notes.push_back("a(T) = " + std::to_string(ti.a) + " != a(S) = " + std::to_string(si.a));
    }
    row.consistent = row.s_matches && row.complement_ok;
    rows.push_back(std::move(row));
  }
  return rows;
}

const std::vector<std::string>& order4_excluded_lattices() {
  static const std::vector<std::string> excluded = {
      "U+E8(2)",
      "U(2)+E8(2)",
      "U+D4+D4+D4",
      "U+D8+D8",
  };
  return excluded;
}

std::vector<std::string> admissible_lattices(long order) {
  switch (order) {
    case 4: {
      std::vector<std::string> result;
      for (const Table1Entry& entry : table1_entries()) {
        bool excluded = false;
        for (const std::string& bad : order4_excluded_lattices())
          if (bad == entry.s_expr) excluded = true;
        if (!excluded) result.push_back(entry.s_expr);
      }
      return result;
    }
    case 8:
      return {"U+D4", "U(2)+D4", "U+D4+E8"};
    case 16:
      return {"U+D4", "U+D4+E8"};
    case 9: {
      std::vector<std::string> result;
      for (const ThreeElementaryProfile& row : order9_profiles()) result.push_back(row.expr);
      return result;
    }
    case 27: {
      std::vector<std::string> result;
      for (const ThreeElementaryProfile& row : order27_profiles()) result.push_back(row.expr);
      return result;
    }
    default:
      throw std::invalid_argument("no admissible-lattice table for order " + std::to_string(order));
  }
}

}  // namespace k3aut
