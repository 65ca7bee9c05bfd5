#include "k3aut/numeric.hpp"

namespace k3aut {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rat value;
  try {
    value = Rat(text);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  }
  if (text.find('/') != std::string::npos && value.get_den() == 0)
    throw std::invalid_argument("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rat& value) {
  Rat canon = value;
  canon.canonicalize();
  if (canon.get_den() == 1) return canon.get_num().get_str();
  return canon.get_num().get_str() + "/" + canon.get_den().get_str();
}

Int floor_rational(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num().get_mpz_t(), value.get_den().get_mpz_t());
  return q;
}

Rat mod_two(const Rat& value) {
  Rat half = value / 2;
  Rat result = value - Rat(2) * Rat(floor_rational(half));
  result.canonicalize();
  return result;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = Rat(m(i, j));
  return out;
}

IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Rat canon = m(i, j);
      canon.canonicalize();
      if (canon.get_den() != 1) throw std::domain_error("matrix entry is not an integer");
      out(i, j) = canon.get_num();
    }
  return out;
}

}  // namespace k3aut
