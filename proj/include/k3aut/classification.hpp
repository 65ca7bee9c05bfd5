#pragma once

#include "k3aut/lattice.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3aut {

// Feasibility facts about a candidate automorphism order for a given
// invariant lattice. The three checks are reported independently.
struct OrderConstraintReport {
  long order = 0;
  int rank = 0;
  bool prime_power_listed = false;  // order in {2,4,8,16, 3,9,27, 5,25, 7,11,13,17,19}
  long phi = 0;
  bool phi_divides_corank = false;  // phi(order) | 22 - rank
  // For the unimodular invariant lattices of ranks 2/10/18: order divides one
  // of 66/44/12, 42/36/28, 12 respectively. Absent otherwise.
  std::optional<bool> unimodular_rule;
};

OrderConstraintReport order_constraints(long order, const GramLattice& lattice);

enum class SpecialLocus { none, empty_locus, two_elliptic_curves };

struct FixedLocusProfile {
  bool exists = false;
  int points = 0;                     // M
  int rational_curves = 0;            // N
  std::optional<int> curve_genus;     // genus of the distinguished curve, when present
  SpecialLocus special = SpecialLocus::none;
};

// Fixed locus of a purely non-symplectic automorphism of the given order
// whose invariant lattice is the given one.
FixedLocusProfile fixed_locus_profile(long order, const GramLattice& lattice);

bool exists_automorphism(long order, const GramLattice& lattice);

// Euler characteristic of the fixed locus described by a profile.
int profile_euler_characteristic(const FixedLocusProfile& profile);

struct Table1Row {
  int rank = 0;
  int a = 0;
  std::string s_expr;
  std::string t_expr;
  // Recomputed data and the cross-checks behind `consistent`.
  int computed_rank = 0;
  int computed_a = 0;
  int computed_delta = -1;
  int complement_rank = 0;
  int complement_a = 0;
  std::pair<int, int> complement_signature{0, 0};
  bool s_matches = false;    // printed (rank, a) match and delta = 0
  bool complement_ok = false;
  bool consistent = false;
  std::vector<std::string> notes;
};

// The sixteen 2-elementary rows with their stated orthogonal complements.
struct Table1Entry {
  int rank;
  int a;
  const char* s_expr;
  const char* t_expr;
};
const std::vector<Table1Entry>& table1_entries();

std::vector<Table1Row> verify_table1();

// Invariant lattice expressions admitting an automorphism of the given order
// (orders 4, 8, 16, 9, 27).
std::vector<std::string> admissible_lattices(long order);

// Order-4 exclusion list inside the 2-elementary table.
const std::vector<std::string>& order4_excluded_lattices();

}  // namespace k3aut
