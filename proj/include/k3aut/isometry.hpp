#pragma once

#include "k3aut/lattice.hpp"

#include <vector>

namespace k3aut {

struct IsometryConstraints {
  int order = 0;       // exact multiplicative order the isometry must have
  int entry_bound = 1;  // entries searched in [-entry_bound, entry_bound]
  bool require_f2_eq_minus_i = false;  // no eigenvalue 1 or -1, for order 4
  bool require_trivial_discriminant_action = false;
};

struct IsometryCandidate {
  IntMatrix matrix;
  int order = 0;
  bool discriminant_action_trivial = false;
};

struct IsometrySearchResult {
  std::vector<IsometryCandidate> candidates;  // sorted row-major lexicographically
  int entry_bound = 0;  // emptiness is only certified up to this bound
  // True when the f^2 = -I parity precondition (t+ and t- both even) already
  // rules everything out and the enumeration was skipped.
  bool parity_pruned = false;
  unsigned long long nodes_visited = 0;
};

// Depth-first enumeration of integer matrices with bounded entries satisfying
// f^T G f = G column by column, filtered by the requested order and the
// optional f^2 = -I / trivial-discriminant-action constraints. Guarded to
// rank <= 6 and entry bound <= 3; throws std::domain_error beyond that.
IsometrySearchResult search_isometries(const GramLattice& lattice,
                                       const IsometryConstraints& constraints);

bool is_isometry(const GramLattice& lattice, const IntMatrix& f);

struct DiscriminantAction {
  bool trivial = false;
  std::vector<bool> generator_fixed;  // one flag per invariant-factor generator
};

// Induced action of an isometry on L*/L: a generator is fixed when its image
// lift differs from the lift by an integer vector. Throws std::domain_error
// when f is not an isometry of the lattice.
DiscriminantAction discriminant_action(const IntMatrix& f, const GramLattice& lattice);

}  // namespace k3aut
