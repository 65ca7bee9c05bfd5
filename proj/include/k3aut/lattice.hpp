#pragma once

#include "k3aut/linalg.hpp"
#include "k3aut/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3aut {

// Finitely generated even lattice given by an integer Gram matrix. The
// constructor enforces symmetry and nondegeneracy; evenness is checked where
// the invariants require it.
struct GramLattice {
  IntMatrix gram;
  std::string name;

  int rank() const { return static_cast<int>(gram.rows()); }
};

GramLattice make_lattice(IntMatrix gram, std::string name = {});

// Hyperbolic plane, scaled hyperbolic plane and negative definite root
// lattices; root lattices carry the negated Cartan matrices.
GramLattice lattice_u(int scale = 1);
GramLattice lattice_a(int k);
GramLattice lattice_d(int k);
GramLattice lattice_e(int k);

GramLattice direct_sum(const GramLattice& a, const GramLattice& b);
GramLattice twist(const GramLattice& lattice, int scale);

// One summand of a lattice expression: family 'U', 'A', 'D' or 'E', the
// subscript (0 for U) and the twist.
struct LatticeTerm {
  char family;
  int index;
  int scale;
};

std::vector<LatticeTerm> parse_lattice_expr(const std::string& expr);
GramLattice build_term(const LatticeTerm& term);
GramLattice build_lattice(const std::string& expr);
std::string render_lattice_expr(const std::vector<LatticeTerm>& terms);

bool is_even(const GramLattice& lattice);
Int lattice_determinant(const GramLattice& lattice);
std::pair<int, int> lattice_signature(const GramLattice& lattice);

// L*/L presented by the Smith normal form of the Gram matrix: cyclic factors
// of order d_i > 1 with generator lifts in dual coordinates (columns).
struct DiscriminantGroup {
  std::vector<Int> invariant_factors;
  RatMatrix generator_lifts;
  Int order = 1;
};

DiscriminantGroup discriminant_group(const GramLattice& lattice);

struct LatticeInvariants {
  int rank = 0;
  int t_plus = 0;
  int t_minus = 0;
  std::vector<Int> invariant_factors;
  int a = 0;                          // minimal generator count of L*/L
  std::optional<Int> elementary_prime;  // p when L*/L = (Z/p)^a, a > 0
  std::optional<int> delta;           // 0/1 for 2-elementary lattices (0 when unimodular)
};

LatticeInvariants lattice_invariants(const GramLattice& lattice);

// delta = 0 iff every dual class has integral square; enumerates all 2^a
// classes (error above 2^22).
int delta_invariant(const GramLattice& lattice, const DiscriminantGroup& group);

// Comparison key for even 2-elementary lattices; unimodular lattices get
// a = 0, delta = 0.
struct NikulinKey {
  int delta;
  int t_plus;
  int t_minus;
  int a;
  friend bool operator==(const NikulinKey&, const NikulinKey&) = default;
};

NikulinKey nikulin_key(const GramLattice& lattice);

}  // namespace k3aut
