#include "doctest.h"

#include "k3aut/lattice.hpp"

#include <stdexcept>

using namespace k3aut;

namespace {

// Independent determinant oracle: cofactor expansion along the first row.
Int cofactor_determinant(const IntMatrix& m) {
  int n = static_cast<int>(m.rows());
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (int j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (int r = 1; r < n; ++r) {
      int cc = 0;
      for (int c = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    }
    Int term = m(0, j) * cofactor_determinant(minor);
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

bool all_integral(const RatVector& v) {
  for (int i = 0; i < v.size(); ++i)
    if (!is_integer(v(i))) return false;
  return true;
}

}  // namespace

TEST_CASE("builder determinants against cofactor expansion") {
  for (const char* expr : {"U", "U(2)", "A1", "A2", "A3", "D4", "D8", "E6", "E7", "E8", "U+D4",
                           "U+E8+D4", "U(2)+E8(2)"}) {
    GramLattice lattice = build_lattice(expr);
    CHECK_MESSAGE(lattice_determinant(lattice) == cofactor_determinant(lattice.gram), expr);
  }
}

TEST_CASE("known determinants") {
  CHECK(lattice_determinant(build_lattice("U")) == -1);
  CHECK(lattice_determinant(build_lattice("A1")) == -2);
  CHECK(lattice_determinant(build_lattice("A2")) == 3);
  CHECK(lattice_determinant(build_lattice("D4")) == 4);
  CHECK(lattice_determinant(build_lattice("E6")) == 3);
  CHECK(lattice_determinant(build_lattice("E7")) == -2);
  CHECK(lattice_determinant(build_lattice("E8")) == 1);
  CHECK(lattice_determinant(build_lattice("U+D4")) == -4);
  CHECK(lattice_determinant(build_lattice("U(2)")) == -4);
}

TEST_CASE("signatures") {
  CHECK(lattice_signature(build_lattice("U")) == std::pair<int, int>(1, 1));
  CHECK(lattice_signature(build_lattice("E8")) == std::pair<int, int>(0, 8));
  CHECK(lattice_signature(build_lattice("U+E8+D4")) == std::pair<int, int>(1, 13));
  CHECK(lattice_signature(build_lattice("U+U+U+E8+E8")) == std::pair<int, int>(3, 19));
}

TEST_CASE("evenness") {
  for (const char* expr : {"U", "A5", "D6", "E8", "U(2)+D4"})
    CHECK(is_even(build_lattice(expr)));
  IntMatrix odd(1, 1);
  odd(0, 0) = 1;
  CHECK(!is_even(make_lattice(odd)));
}

TEST_CASE("discriminant groups with dual-generator verification") {
  struct Case {
    const char* expr;
    std::vector<int> factors;
  };
  for (const Case& c : {Case{"U", {}}, Case{"A1", {2}}, Case{"A3", {4}}, Case{"D4", {2, 2}},
                        Case{"E6", {3}}, Case{"E7", {2}}, Case{"U(2)", {2, 2}},
                        Case{"U+D4", {2, 2}}, Case{"E8(2)", {2, 2, 2, 2, 2, 2, 2, 2}}}) {
    GramLattice lattice = build_lattice(c.expr);
    DiscriminantGroup group = discriminant_group(lattice);
    REQUIRE_MESSAGE(group.invariant_factors.size() == c.factors.size(), c.expr);
    Int order = 1;
    for (size_t i = 0; i < c.factors.size(); ++i) {
      CHECK(group.invariant_factors[i] == c.factors[i]);
      order *= c.factors[i];
    }
    CHECK(group.order == order);
    CHECK(abs(lattice_determinant(lattice)) == order);

    RatMatrix gram = to_rational(lattice.gram);
    for (size_t g = 0; g < c.factors.size(); ++g) {
      RatVector lift = group.generator_lifts.col(g);
      // lift is in the dual lattice: all pairings with the basis are integral
      CHECK(all_integral(gram * lift));
      // its class has exact order d_g
      RatVector killed = Rat(c.factors[g]) * lift;
      CHECK(all_integral(killed));
      for (int p : {2, 3}) {
        if (c.factors[g] % p == 0) {
          RatVector partial = Rat(c.factors[g] / p) * lift;
          CHECK(!all_integral(partial));
        }
      }
    }
  }
}

TEST_CASE("delta invariant") {
  CHECK(lattice_invariants(build_lattice("A1")).delta == 1);
  CHECK(lattice_invariants(build_lattice("A1+A1")).delta == 1);
  CHECK(lattice_invariants(build_lattice("U(2)")).delta == 0);
  CHECK(lattice_invariants(build_lattice("D4")).delta == 0);
  CHECK(lattice_invariants(build_lattice("E8(2)")).delta == 0);
  CHECK(lattice_invariants(build_lattice("U+D4")).delta == 0);
  CHECK(lattice_invariants(build_lattice("E8")).delta == 0);  // unimodular
  CHECK(lattice_invariants(build_lattice("E7")).delta == 1);  // dual generator square -3/2
}

TEST_CASE("lattice invariants: elementary prime detection") {
  LatticeInvariants e6 = lattice_invariants(build_lattice("E6"));
  CHECK(e6.elementary_prime == Int(3));
  CHECK(e6.a == 1);
  CHECK(!e6.delta.has_value());  // 3-elementary, delta undefined

  LatticeInvariants a3 = lattice_invariants(build_lattice("A3"));
  CHECK(!a3.elementary_prime.has_value());  // Z/4 is not elementary

  LatticeInvariants u = lattice_invariants(build_lattice("U"));
  CHECK(u.a == 0);
  CHECK(u.delta == 0);
}

TEST_CASE("expression parser") {
  CHECK(build_lattice("U+D4(2)+E8").rank() == 14);
  CHECK(build_lattice("  U + D4 ").rank() == 6);
  CHECK(build_lattice("A13").rank() == 13);
  CHECK_THROWS_AS(build_lattice("Q5"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice("D3"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice("E9"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice("A0"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice("U+"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice(""), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice("U(0)"), std::invalid_argument);
  CHECK_THROWS_AS(build_lattice("U(2"), std::invalid_argument);

  std::vector<LatticeTerm> terms = parse_lattice_expr("U(2)+D4+E8(3)");
  CHECK(render_lattice_expr(terms) == "U(2)+D4+E8(3)");
}

TEST_CASE("make_lattice validation") {
  IntMatrix asym(2, 2);
  asym << 0, 1, 2, 0;
  CHECK_THROWS_AS(make_lattice(asym), std::invalid_argument);
  IntMatrix singular(2, 2);
  singular << 2, 2, 2, 2;
  CHECK_THROWS_AS(make_lattice(singular), std::invalid_argument);
}

TEST_CASE("nikulin keys") {
  NikulinKey key = nikulin_key(build_lattice("U+D4"));
  CHECK(key == NikulinKey{0, 1, 5, 2});
  NikulinKey e8_twist = nikulin_key(build_lattice("U+E8(2)"));
  CHECK(e8_twist == NikulinKey{0, 1, 9, 8});
  CHECK_THROWS_AS(nikulin_key(build_lattice("A2")), std::domain_error);
  CHECK_THROWS_AS(nikulin_key(build_lattice("A3")), std::domain_error);
}
