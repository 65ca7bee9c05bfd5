#pragma once

#include "k3aut/polynomial.hpp"

#include <vector>

namespace k3aut {

struct IrreducibleFactor {
  Poly polynomial;  // primitive integer polynomial with positive leading coefficient
  int multiplicity;
};

struct Factorization {
  Rat unit;
  std::vector<IrreducibleFactor> factors;  // sorted by (degree, coefficients)
};

// Complete factorization into irreducibles over Q. Pipeline: Yun squarefree
// decomposition, power-of-t stripping, cyclotomic recognition by trial
// division, then Zassenhaus (modular factorization, Hensel lifting, bounded
// recombination) for whatever remains. Deterministic (fixed RNG seed).
Factorization factor_over_q(const Poly& f);

// Squarefree parts with multiplicities, each monic; product of part^mult
// equals f up to a rational constant.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// f scaled to integer coefficients with content 1 and positive leading
// coefficient; the scalar relating them is returned through unit when given.
Poly primitive_integer_part(const Poly& f, Rat* unit = nullptr);

bool is_irreducible_over_q(const Poly& f);

}  // namespace k3aut
