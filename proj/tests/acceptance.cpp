// Acceptance gate: one line per criterion, exit code = number of failures.
// Everything below runs in exact arithmetic; no tolerances anywhere.

#include "k3aut/classification.hpp"
#include "k3aut/cyclotomic.hpp"
#include "k3aut/elliptic.hpp"
#include "k3aut/isometry.hpp"
#include "k3aut/lattice.hpp"
#include "k3aut/lefschetz.hpp"
#include "k3aut/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace k3aut;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

Outcome pass(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

Rat multiplicity_of(const FixedPointCounts& counts, int i, int j) {
  for (size_t t = 0; t < counts.types.size(); ++t)
    if (counts.types[t].first == i && counts.types[t].second == j) return counts.multiplicities[t];
  throw std::logic_error("type not present in the solved system");
}

// 1. The sixteen stated rows recompute; exactly the (r=6, a=4) complement fails.
Outcome criterion_table_reproduction() {
  std::vector<Table1Row> rows = verify_table1();
  if (rows.size() != 16) return fail("expected 16 rows, found " + std::to_string(rows.size()));
  int consistent = 0;
  const Table1Row* mismatch = nullptr;
  for (const Table1Row& row : rows) {
    if (!row.s_matches)
      return fail("stated (rank, a, delta) of " + row.s_expr + " do not recompute");
    if (row.consistent)
      ++consistent;
    else
      mismatch = &row;
  }
  if (consistent != 15)
    return fail(std::to_string(consistent) + " of 16 complement cross-checks pass, expected 15");
  if (!mismatch || mismatch->rank != 6 || mismatch->a != 4 || mismatch->complement_ok)
    return fail("the failing row is not the (r=6, a=4) complement");
  bool noted = false;
  for (const std::string& note : mismatch->notes)
    noted = noted || note.find("a(T) = 6") != std::string::npos;
  if (!noted) return fail("the (r=6, a=4) row does not report a(T) = 6");
  return pass("16/16 invariant rows recompute with delta = 0; the single complement mismatch is "
              "(r=6, a=4) with a(T) = 6");
}

// 2. Order-4 point/curve ladder and the four exclusions.
Outcome criterion_order4_profiles() {
  const std::map<int, std::pair<int, int>> ladder = {
      {2, {4, 0}}, {6, {6, 1}}, {10, {8, 2}}, {14, {10, 3}}, {18, {12, 4}}};
  std::vector<std::string> members = admissible_lattices(4);
  if (members.size() != 12)
    return fail("expected 12 admissible lattices, found " + std::to_string(members.size()));
  for (const std::string& expr : members) {
    GramLattice lattice = build_lattice(expr);
    FixedLocusProfile profile = fixed_locus_profile(4, lattice);
    if (!profile.exists) return fail(expr + " unexpectedly admits no order-4 automorphism");
    auto [m, n] = ladder.at(lattice.rank());
    if (profile.points != m || profile.rational_curves != n) {
      std::ostringstream os;
      os << expr << ": (M, N) = (" << profile.points << ", " << profile.rational_curves
         << "), expected (" << m << ", " << n << ")";
      return fail(os.str());
    }
    FixedPointCounts counts = solve_fixed_point_counts(4, lattice.rank());
    if (!counts.admissible || counts.total_points != profile.points ||
        counts.c != 2 * profile.rational_curves)
      return fail("fixed point solver disagrees with the classification at " + expr);
  }
  const std::vector<std::string> expected_exclusions = {"U+E8(2)", "U(2)+E8(2)", "U+D4+D4+D4",
                                                        "U+D8+D8"};
  const std::vector<std::string>& excluded = order4_excluded_lattices();
  for (const std::string& expr : expected_exclusions) {
    if (std::find(excluded.begin(), excluded.end(), expr) == excluded.end())
      return fail(expr + " is missing from the exclusion list");
    if (exists_automorphism(4, build_lattice(expr)))
      return fail(expr + " should admit no order-4 automorphism");
  }
  return pass("all 12 admissible lattices hit the (M, N) ladder, solver agrees, 4 exclusions hold");
}

// 3. Order-8 solutions, order-16 closed forms and heredity.
Outcome criterion_order8_16_counts() {
  struct Expected {
    int rank;
    long m27, m36, m45, total, c;
  };
  for (const Expected& e : {Expected{6, 5, 1, 0, 6, 2}, Expected{14, 7, 3, 2, 12, 4}}) {
    FixedPointCounts counts = solve_fixed_point_counts(8, e.rank);
    if (!counts.unique || !counts.admissible)
      return fail("order 8, rank " + std::to_string(e.rank) + ": solution not unique/admissible");
    if (multiplicity_of(counts, 2, 7) != e.m27 || multiplicity_of(counts, 3, 6) != e.m36 ||
        multiplicity_of(counts, 4, 5) != e.m45 || counts.total_points != e.total ||
        counts.c != e.c)
      return fail("order 8, rank " + std::to_string(e.rank) + ": wrong multiplicities");
  }
  for (int rank : {6, 14}) {
    ClosedFormCounts closed = closed_form_counts(16, rank);
    const Rat r(rank);
    if (closed.m.at({2, 15}) != (r + 10) / 4 || closed.m.at({3, 14}) != (r + 2) / 8 ||
        closed.m.at({4, 13}) != (r - 6) / 8 || closed.m.at({5, 12}) != (r - 6) / 8 ||
        closed.m.at({6, 11}) != (r - 6) / 8 || closed.m.at({7, 10}) != 1 ||
        closed.m.at({8, 9}) != 0)
      return fail("order 16 closed forms have the wrong shape at rank " + std::to_string(rank));
    FixedPointCounts eight = solve_fixed_point_counts(8, rank);
    if (closed.m.at({2, 15}) + closed.m.at({7, 10}) != multiplicity_of(eight, 2, 7) ||
        closed.m.at({3, 14}) + closed.m.at({6, 11}) != multiplicity_of(eight, 3, 6) ||
        closed.m.at({4, 13}) + closed.m.at({5, 12}) != multiplicity_of(eight, 4, 5))
      return fail("heredity sums do not reproduce the order-8 counts at rank " +
                  std::to_string(rank));
  }
  if (!closed_form_satisfies_system(16, 6))
    return fail("order 16 closed forms violate an equation at rank 6");
  // The rank-14 clause is not satisfiable.  The closed forms match the Euler
  // and heredity rows there but leave a nonzero residual against the
  // cyclotomic component rows, and the full system's unique solution has
  // c = 3, odd, hence not a curve contribution.  An explicit rank-14 action
  // evades the system only by moving divisor classes (it swaps two leaves of
  // a fiber of type I0*, so the Euler row's hypothesis fails for it); its
  // observed fixed locus satisfies the component rows with chi = 14, not 16.
  if (!closed_form_satisfies_system(16, 14))
    return fail(
        "order-8 solutions (5,1,0) and (7,3,2) and the rank-6 closed forms check out, but at "
        "(16, rank 14) the closed forms violate the cyclotomic component rows (only the Euler "
        "and heredity rows hold), and the unique solution of the assembled system has c = 3, "
        "odd — no admissible count vector exists under the trivial-action hypotheses");
  return pass("order-8 solutions (5,1,0) and (7,3,2); order-16 closed forms satisfy the full "
              "system and square onto the order-8 counts");
}

// 4. Parity obstruction at order 8, ranks 2/10/18.
Outcome criterion_parity_obstruction() {
  for (int rank : {2, 10, 18}) {
    FixedPointCounts counts = solve_fixed_point_counts(8, rank);
    if (!counts.consistent)
      return fail("rank " + std::to_string(rank) + ": system unexpectedly inconsistent");
    if (counts.admissible)
      return fail("rank " + std::to_string(rank) + ": expected no admissible solution");
    if (counts.violations.empty())
      return fail("rank " + std::to_string(rank) + ": no violation reported");
  }
  return pass("order-8 counts are inadmissible at ranks 2, 10, 18 (negative or odd solutions)");
}

// 5. The Weierstrass registry: passes, the rank-14 reproduction, multiplier
// orders, and the two recorded discrepancies.
Outcome criterion_registry() {
  const std::map<std::string, ExampleReport::Status> expected = {
      {"7.1", ExampleReport::Status::pass},    {"7.2", ExampleReport::Status::note},
      {"7.3", ExampleReport::Status::pass},    {"7.4", ExampleReport::Status::note},
      {"7.5", ExampleReport::Status::known_discrepancy},
      {"7.6", ExampleReport::Status::pass},    {"7.7", ExampleReport::Status::pass},
      {"7.8", ExampleReport::Status::note},    {"7.9", ExampleReport::Status::pass},
      {"7.10", ExampleReport::Status::known_discrepancy},
      {"7.11", ExampleReport::Status::pass},   {"7.12", ExampleReport::Status::pass},
  };
  std::vector<ExampleReport> reports = verify_registry();
  if (reports.size() != expected.size()) return fail("registry size changed");
  for (const ExampleReport& report : reports) {
    auto it = expected.find(report.id);
    if (it == expected.end()) return fail("unexpected example " + report.id);
    if (report.status != it->second) {
      std::string detail = "example " + report.id + " has the wrong status";
      for (const std::string& line : report.details) detail += "; " + line;
      return fail(detail);
    }
  }

  const std::map<std::string, long> orders = {{"7.1", 4},  {"7.3", 16}, {"7.6", 4}, {"7.7", 4},
                                              {"7.9", 16}, {"7.11", 4}, {"7.12", 4}};
  for (const RegistryEntry& entry : example_registry()) {
    if (entry.kind != ExampleKind::weierstrass) continue;
    auto it = orders.find(entry.id);
    if (it == orders.end()) continue;  // flagged models are checked via their status
    FiberConfiguration config = analyze_fibers(entry.model);
    if (!config.valid_k3 || config.total_euler != 24)
      return fail("example " + entry.id + " does not give a K3 with Euler number 24");
    ShiodaTateReport report = shioda_tate_check(config, entry.claimed_s);
    if (report.mw_rank != 0 || !report.exact_match)
      return fail("example " + entry.id + " does not match " + entry.claimed_s + " exactly");
    MultiplierResult multiplier = automorphism_multiplier(entry.model, *entry.automorphism);
    if (multiplier.order != it->second)
      return fail("example " + entry.id + ": multiplier order " +
                  std::to_string(multiplier.order) + ", expected " + std::to_string(it->second));
    if (entry.id == "7.9") {
      // rk = 2 + mw + (9-1) + (5-1) = 14 from one II*, one I0* and 8 nodal fibers
      std::map<std::string, int> degree_sum;
      for (const FiberPlace& place : config.places)
        degree_sum[kodaira_name(*place.type)] += place.degree;
      if (degree_sum["II*"] != 1 || degree_sum["I0*"] != 1 || degree_sum["I1"] != 8)
        return fail("example 7.9 fiber configuration is not II* + I0* + 8 I1");
      if (2 + report.mw_rank + report.fiber_component_sum != 14)
        return fail("example 7.9 does not reproduce rank 14");
    }
  }

  for (const RegistryEntry& entry : example_registry()) {
    if (!entry.expect.flagged) continue;
    FiberConfiguration config = analyze_fibers(entry.model);
    if (config.valid_k3)
      return fail("flagged example " + entry.id + " unexpectedly satisfies the degree bounds");
    if (entry.expect.delta_degree != config.invariants.discriminant.degree())
      return fail("flagged example " + entry.id + " has an unexpected discriminant degree");
    std::string joined;
    for (const std::string& d : config.diagnostics) joined += d + "\n";
    for (const FiberPlace& place : config.places)
      for (const std::string& d : place.diagnostics) joined += d + "\n";
    for (const std::string& fragment : entry.expect.diagnostic_fragments)
      if (joined.find(fragment) == std::string::npos)
        return fail("example " + entry.id + " does not reproduce the diagnostic \"" + fragment +
                    "\"");
  }
  return pass("7 models verify exactly (Euler 24, Shioda-Tate match, mw = 0, multiplier orders "
              "4/16/4/4/16/4/4); 7.5 and 7.10 reproduce their degree-bound diagnostics");
}

// 6. Involution fixed-locus spot checks.
Outcome criterion_involution_spot_checks() {
  FixedLocusProfile curves = fixed_locus_profile(2, build_lattice("U+E8(2)"));
  if (!curves.exists || curves.special != SpecialLocus::two_elliptic_curves ||
      curves.curve_genus != 1)
    return fail("(p=2, U+E8(2)) is not two elliptic curves");
  FixedLocusProfile empty = fixed_locus_profile(2, build_lattice("U(2)+E8(2)"));
  if (!empty.exists || empty.special != SpecialLocus::empty_locus)
    return fail("(p=2, U(2)+E8(2)) is not the empty fixed locus");
  FixedLocusProfile plain = fixed_locus_profile(2, build_lattice("U+D8+D8"));
  if (!plain.exists || plain.points != 0 || plain.rational_curves != 7 || plain.curve_genus != 0 ||
      plain.special != SpecialLocus::none)
    return fail("(p=2, U+D8+D8) is not (M, N, g) = (0, 7, 0)");
  return pass("U+E8(2) -> two genus-1 curves, U(2)+E8(2) -> empty locus, U+D8+D8 -> (0, 7, 0)");
}

// 7. The bounded isometry searches behind the delta obstruction.
Outcome criterion_isometry_searches() {
  auto started = std::chrono::steady_clock::now();

  GramLattice lattice = lattice_a(1);
  for (int count = 1; count <= 4; ++count) {
    if (count > 1) lattice = direct_sum(lattice, lattice_a(1));
    IsometryConstraints strict;
    strict.order = 4;
    strict.entry_bound = 2;
    strict.require_f2_eq_minus_i = true;
    strict.require_trivial_discriminant_action = true;
    IsometrySearchResult result = search_isometries(lattice, strict);
    if (!result.candidates.empty())
      return fail("A1^" + std::to_string(count) + " has an unexpected strict order-4 isometry");
  }

  IsometryConstraints relaxed;
  relaxed.order = 4;
  relaxed.entry_bound = 2;
  relaxed.require_f2_eq_minus_i = true;
  IsometrySearchResult rotations =
      search_isometries(direct_sum(lattice_a(1), lattice_a(1)), relaxed);
  if (rotations.candidates.empty())
    return fail("A1+A1 without the discriminant condition should contain the rotation");
  IntMatrix rotation(2, 2);
  rotation << 0, -1, 1, 0;
  bool found = false;
  for (const IsometryCandidate& candidate : rotations.candidates)
    found = found || exact_equal(candidate.matrix, rotation);
  if (!found) return fail("the rotation matrix [[0,-1],[1,0]] is missing");

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - started);
  if (elapsed.count() >= 10000)
    return fail("searches took " + std::to_string(elapsed.count()) + " ms, budget is 10 s");
  std::ostringstream os;
  os << "A1..A1^4 strict searches empty at bound 2; the A1+A1 rotation appears once the "
        "discriminant condition is dropped ("
     << elapsed.count() << " ms)";
  return pass(os.str());
}

// 8. Exact-arithmetic property suites.
Outcome criterion_property_suites() {
  long violations = 0;

  // Smith decomposition transform identity over assorted shapes.
  std::vector<IntMatrix> samples;
  {
    IntMatrix m(2, 2);
    m << 2, 4, 6, 8;
    samples.push_back(m);
    samples.push_back(build_lattice("U+D4").gram);
    samples.push_back(lattice_e(8).gram);
    IntMatrix wide(2, 3);
    wide << 3, 0, 6, 0, 9, 12;
    samples.push_back(wide);
    samples.push_back(IntMatrix::Zero(2, 2));
  }
  for (const IntMatrix& sample : samples) {
    SmithDecomposition snf = smith_normal_form(sample);
    IntMatrix recomposed = snf.u * sample * snf.v;
    if (!exact_equal(recomposed, snf.d)) ++violations;
    if (abs(integer_determinant(snf.u)) != 1 || abs(integer_determinant(snf.v)) != 1) ++violations;
  }

  // Cyclotomic field laws, 1000 seeded random cases at n = 8 and 16.
  std::mt19937 rng(987654321u);
  std::uniform_int_distribution<int> numerator(-9, 9);
  std::uniform_int_distribution<int> denominator(1, 4);
  auto random_element = [&](long n) {
    std::vector<Rat> coords;
    for (long i = 0; i < euler_phi(n); ++i) {
      Rat c(numerator(rng), denominator(rng));
      c.canonicalize();
      coords.push_back(c);
    }
    return Cyclotomic::from_coords(n, coords);
  };
  for (long n : {8L, 16L}) {
    Cyclotomic one = Cyclotomic::from_rational(n, Rat(1));
    for (int i = 0; i < 500; ++i) {
      Cyclotomic a = random_element(n);
      Cyclotomic b = random_element(n);
      if (!a.is_zero() && a * a.inverse() != one) ++violations;
      if (a.conjugate().conjugate() != a) ++violations;
      if ((a * b).conjugate() != a.conjugate() * b.conjugate()) ++violations;
      if ((a + b).conjugate() != a.conjugate() + b.conjugate()) ++violations;
      if (!b.is_zero() && (a / b) * b != a) ++violations;
    }
  }

  // Kodaira cross-table: additive fibers have euler = components + 1, the
  // nodal chains have euler = components, and every root lattice has rank
  // components - 1.
  std::vector<KodairaType> types;
  for (int n = 1; n <= 9; ++n) types.push_back({KodairaKind::In, n});
  for (int n = 0; n <= 4; ++n) types.push_back({KodairaKind::InStar, n});
  types.push_back({KodairaKind::II, 0});
  types.push_back({KodairaKind::III, 0});
  types.push_back({KodairaKind::IV, 0});
  types.push_back({KodairaKind::IVStar, 0});
  types.push_back({KodairaKind::IIIStar, 0});
  types.push_back({KodairaKind::IIStar, 0});
  for (const KodairaType& type : types) {
    int expected_euler = type.kind == KodairaKind::In ? kodaira_components(type)
                                                      : kodaira_components(type) + 1;
    if (kodaira_euler(type) != expected_euler) ++violations;
    std::optional<std::string> name = kodaira_root_lattice(type);
    if (name && build_lattice(*name).rank() != kodaira_components(type) - 1) ++violations;
    if (!name && kodaira_components(type) != 1) ++violations;
  }

  // Minimalization is idempotent.
  const std::vector<ValuationTriple> triples = {
      {4, 6, 12}, {8, 12, 24}, {5, 7, 13}, {std::nullopt, 6, 12}, {4, std::nullopt, 25},
      {0, 0, 5},  {2, 3, 10},  {3, 5, 9},
  };
  for (ValuationTriple v : triples) {
    minimalize(v);
    if (minimalize(v) != 0) ++violations;
  }

  // Solver solutions satisfy their own systems.
  for (int order : {4, 8, 16}) {
    for (int rank : {2, 6, 10, 14, 18}) {
      FixedPointCounts counts = solve_fixed_point_counts(order, rank);
      if (!counts.consistent) {
        ++violations;
        continue;
      }
      AssembledSystem system = assemble_count_system(order, rank);
      RatVector x(system.a.cols());
      for (size_t t = 0; t < counts.multiplicities.size(); ++t)
        x(static_cast<Eigen::Index>(t)) = counts.multiplicities[t];
      x(system.a.cols() - 1) = counts.c;
      RatVector residual = system.a * x - system.b;
      if (!exact_is_zero(residual)) ++violations;
    }
  }

  if (violations > 0)
    return fail(std::to_string(violations) + " exact-arithmetic violations");
  return pass("SNF transforms, 1000 cyclotomic law cases, Kodaira cross-table, minimalization "
              "idempotence and solver re-substitution: zero violations");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"criterion 1", criterion_table_reproduction},
      {"criterion 2", criterion_order4_profiles},
      {"criterion 3", criterion_order8_16_counts},
      {"criterion 4", criterion_parity_obstruction},
      {"criterion 5", criterion_registry},
      {"criterion 6", criterion_involution_spot_checks},
      {"criterion 7", criterion_isometry_searches},
      {"criterion 8", criterion_property_suites},
  };

  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome outcome;
    try {
      outcome = check();
    } catch (const std::exception& error) {
      outcome = fail(std::string("unexpected exception: ") + error.what());
    }
    if (!outcome.ok) ++failures;
    std::cout << name << ": " << (outcome.ok ? "PASS" : "FAIL") << " — " << outcome.detail << '\n';
  }
  return failures;
}
