#pragma once

#include "k3aut/cyclotomic.hpp"
#include "k3aut/factor.hpp"
#include "k3aut/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3aut {

// zeta_n^k in lowest terms (conductor n, gcd(k, n) = 1; identity is (1, 0)).
struct RootOfUnity {
  long n = 1;
  long k = 0;
};

RootOfUnity make_root_of_unity(long n, long k);
RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b);
RootOfUnity root_inverse(const RootOfUnity& a);
RootOfUnity root_power(const RootOfUnity& a, long e);
bool operator==(const RootOfUnity& a, const RootOfUnity& b);
inline long root_order(const RootOfUnity& a) { return a.n; }
std::string root_to_string(const RootOfUnity& a);

// y^2 = x^3 + a2 x^2 + a4 x + a6 over Q[t] (a1 = a3 = 0).
struct WeierstrassModel {
  Poly a2, a4, a6;
};

struct WeierstrassInvariants {
  Poly c4, c6, discriminant;
  Poly j_numerator, j_denominator;  // j = c4^3 / discriminant in lowest terms
};

// Throws std::domain_error when the discriminant vanishes identically.
WeierstrassInvariants weierstrass_invariants(const WeierstrassModel& model);

enum class KodairaKind { In, II, III, IV, InStar, IVStar, IIIStar, IIStar };

struct KodairaType {
  KodairaKind kind;
  int n = 0;  // the index of I_n / I_n*
};

std::string kodaira_name(const KodairaType& type);
int kodaira_euler(const KodairaType& type);
int kodaira_components(const KodairaType& type);
// ADE lattice of the fiber: A_{n-1} for I_n (n>=2), A1/A2 for III/IV,
// D_{n+4} for I_n*, E6/E7/E8 for IV*/III*/II*; none otherwise.
std::optional<std::string> kodaira_root_lattice(const KodairaType& type);

// Valuation triple at a place; a missing entry means the polynomial is
// identically zero there (valuation +infinity). Entries may be negative at
// the place at infinity when the K3 degree bounds fail.
struct ValuationTriple {
  std::optional<int> c4, c6;
  int delta = 0;
};

// Subtracts (4, 6, 12) while all three valuations stay at or above those
// thresholds; returns the number of subtractions.
int minimalize(ValuationTriple& v);

// Char-0 Kodaira type from a minimal non-negative triple with delta >= 1.
// Throws std::domain_error on an unclassifiable triple.
KodairaType classify_kodaira(const ValuationTriple& v);

struct FiberPlace {
  bool at_infinity = false;
  Poly place;  // irreducible primitive integer polynomial; unused at infinity
  int degree = 1;
  ValuationTriple valuations;  // after minimalization
  int minimalization_steps = 0;
  std::optional<KodairaType> type;  // absent when the triple is invalid
  int euler = 0;
  int components = 0;
  std::optional<std::string> root_lattice;
  std::vector<std::string> diagnostics;
};

struct FiberConfiguration {
  WeierstrassInvariants invariants;
  std::vector<FiberPlace> places;
  int total_euler = 0;  // sum of degree * euler over classified places
  bool valid_k3 = false;
  std::vector<std::string> diagnostics;  // degree-bound and validity findings
};

FiberConfiguration analyze_fibers(const WeierstrassModel& model);

struct ShiodaTateReport {
  int lattice_rank = 0;
  int fiber_component_sum = 0;  // sum of degree * (components - 1)
  int mw_rank = 0;
  std::vector<std::string> required_summands;  // ADE summands of the claimed lattice
  std::vector<std::string> fiber_root_lattices;
  bool all_required_present = false;
  bool exact_match = false;
};

ShiodaTateReport compute_shioda_tate(const FiberConfiguration& config, const std::string& claimed_expr);

// Same, but throws std::domain_error when mw < 0 or a required ADE summand
// has no matching fiber.
ShiodaTateReport shioda_tate_check(const FiberConfiguration& config, const std::string& claimed_expr);

// (x, y, t) -> (alpha x, beta y, gamma t).
struct MonomialAutomorphism {
  RootOfUnity alpha, beta, gamma;
};

struct MultiplierResult {
  RootOfUnity multiplier;  // scaling of the 2-form dx^dt/y
  long order = 0;
};

// Throws std::domain_error naming the first offending monomial when the
// substitution does not scale the defining equation uniformly.
MultiplierResult automorphism_multiplier(const WeierstrassModel& model, const MonomialAutomorphism& phi);

enum class ExampleKind { weierstrass, note };

struct RegistryExpectation {
  std::vector<std::pair<std::string, int>> fibers;  // kodaira name -> degree-weighted count
  int mw_rank = 0;
  long multiplier_order = 0;
  int delta_degree = 0;  // checked when nonzero
  bool flagged = false;  // known discrepancy: diagnostics below must reproduce
  std::vector<std::string> diagnostic_fragments;
};

struct RegistryEntry {
  std::string id;
  ExampleKind kind = ExampleKind::weierstrass;
  std::string claimed_s;
  WeierstrassModel model;
  std::optional<MonomialAutomorphism> automorphism;
  RegistryExpectation expect;
  std::string note;
};

const std::vector<RegistryEntry>& example_registry();

struct ExampleReport {
  enum class Status { pass, known_discrepancy, note, fail };
  std::string id;
  Status status = Status::fail;
  std::vector<std::string> details;
};

std::vector<ExampleReport> verify_registry();

}  // namespace k3aut
