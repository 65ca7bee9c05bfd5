#pragma once

#include "k3aut/cyclotomic.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace k3aut {

// Local eigenvalue type (zeta^i, zeta^j) of an isolated fixed point, with
// i + j = order + 1 because the action scales the symplectic form by zeta.
struct LocalType {
  int order;
  int i;
  int j;
};

// All isolated types up to swapping the two eigenvalues: i = 2 .. order/2.
std::vector<LocalType> canonical_local_types(int order);

// Holomorphic fixed point contributions.
Cyclotomic isolated_point_term(const LocalType& type);  // 1/((1-z^i)(1-z^j))
Cyclotomic curve_coefficient(int order);                // (1+z)/(2(1-z)^2)
Cyclotomic lefschetz_number(int order);                 // 1 + z^{order-1}

// Linear system in the unknowns (m_t for each canonical type, then c):
// the phi(order) rational components of the holomorphic fixed point formula,
// the Euler characteristic equation sum m_t + c = rank + 2, and for orders 8
// and 16 the heredity equations pinning sums of counts to the counts of the
// square of the action at the same rank.
struct AssembledSystem {
  RatMatrix a;
  RatVector b;
  std::vector<std::pair<int, int>> unknown_types;  // column order; c is the last column
};

AssembledSystem assemble_count_system(int order, int rank);

struct FixedPointCounts {
  int order = 0;
  int rank = 0;
  std::vector<std::pair<int, int>> types;
  std::vector<Rat> multiplicities;  // parallel to types
  Rat c;                            // sum of 2 - 2*genus over fixed curves
  Rat total_points;                 // sum of multiplicities
  bool consistent = false;
  bool unique = false;
  int solution_space_dim = 0;
  bool admissible = false;          // integral m >= 0 and c a nonnegative even integer
  std::vector<std::string> violations;
};

FixedPointCounts solve_fixed_point_counts(int order, int rank);

struct ClosedFormCounts {
  std::map<std::pair<int, int>, Rat> m;
  Rat c;
};

// Closed forms for the multiplicities as affine functions of the rank.
ClosedFormCounts closed_form_counts(int order, int rank);

// True when every assembled equation is satisfied by the closed forms.
bool closed_form_satisfies_system(int order, int rank);

// True when relation . x = rhs holds for every solution x of the system.
bool relation_implied(const AssembledSystem& system, const RatVector& relation, const Rat& rhs);

// Trace of zeta_order^exponent from Q(zeta_order) down to Q.
Rat zeta_power_trace(int order, long exponent);

// Certificate behind the vanishing of the alternating sums: each odd power of
// zeta has trace 0 and the odd powers sum to 0 (order a power of two >= 4).
bool trace_certificate(int order);

}  // namespace k3aut
