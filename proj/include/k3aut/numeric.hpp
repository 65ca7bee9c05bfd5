#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

namespace Eigen {

// Exact scalars for Eigen dense containers. Costs are rough relative weights;
// nothing here depends on them beyond expression-tree heuristics.
template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 30,
    MulCost = 50,
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace k3aut {

using Int = mpz_class;
using Rat = mpq_class;

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

// Parses "p", "-p", or "p/q" with q > 0 after canonicalization.
Rat parse_rational(const std::string& text);

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& value);

inline bool is_integer(const Rat& value) {
  if (value.get_den() == 1) return true;
  Rat canon = value;  // raw mpq_class construction may be non-canonical
  canon.canonicalize();
  return canon.get_den() == 1;
}

// Exact floor of p/q.
Int floor_rational(const Rat& value);

// Representative of value mod 2Z in [0, 2).
Rat mod_two(const Rat& value);

RatMatrix to_rational(const IntMatrix& m);

// Throws std::domain_error if any entry has a denominator.
IntMatrix to_integer(const RatMatrix& m);

template <typename Derived, typename Other>
bool exact_equal(const Eigen::MatrixBase<Derived>& a, const Eigen::MatrixBase<Other>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <typename Derived>
bool exact_is_zero(const Eigen::MatrixBase<Derived>& a) {
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) return false;
  return true;
}

}  // namespace k3aut
