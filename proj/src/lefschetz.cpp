#include "k3aut/lefschetz.hpp"

#include "k3aut/linalg.hpp"

namespace k3aut {

namespace {

void require_two_power_order(int order) {
  if (order != 4 && order != 8 && order != 16)
    throw std::invalid_argument("order must be 4, 8 or 16");
}

}  // namespace

std::vector<LocalType> canonical_local_types(int order) {
  require_two_power_order(order);
  std::vector<LocalType> types;
  for (int i = 2; i <= order / 2; ++i) types.push_back({order, i, order + 1 - i});
  return types;
}

Cyclotomic isolated_point_term(const LocalType& type) {
  require_two_power_order(type.order);
  if (type.i + type.j != type.order + 1 || type.i < 2 || type.i > type.j || type.j > type.order - 1)
    throw std::invalid_argument("invalid local type");
  Cyclotomic one = Cyclotomic::from_rational(type.order, Rat(1));
  Cyclotomic denom =
      (one - Cyclotomic::zeta(type.order, type.i)) * (one - Cyclotomic::zeta(type.order, type.j));
  return denom.inverse();
}

Cyclotomic curve_coefficient(int order) {
  require_two_power_order(order);
  Cyclotomic one = Cyclotomic::from_rational(order, Rat(1));
  Cyclotomic z = Cyclotomic::zeta(order);
  Cyclotomic denom = Rat(2) * ((one - z) * (one - z));
  return (one + z) / denom;
}

Cyclotomic lefschetz_number(int order) {
  require_two_power_order(order);
  return Cyclotomic::from_rational(order, Rat(1)) + Cyclotomic::zeta(order, order - 1);
}

AssembledSystem assemble_count_system(int order, int rank) {
  require_two_power_order(order);
  std::vector<LocalType> types = canonical_local_types(order);
  const int unknowns = static_cast<int>(types.size()) + 1;
  const int phi = static_cast<int>(euler_phi(order));

  std::vector<Cyclotomic> columns;
  for (const LocalType& type : types) columns.push_back(isolated_point_term(type));
  columns.push_back(curve_coefficient(order));
  Cyclotomic rhs = lefschetz_number(order);

  int heredity_rows = 0;
  FixedPointCounts half;
  if (order > 4) {
    half = solve_fixed_point_counts(order / 2, rank);
    if (!half.consistent || !half.unique)
      throw std::runtime_error("order " + std::to_string(order / 2) +
                               " counts are not uniquely determined");
    heredity_rows = static_cast<int>(half.types.size());
  }

  AssembledSystem system;
  system.a = RatMatrix::Zero(phi + 1 + heredity_rows, unknowns);
  system.b = RatVector::Zero(phi + 1 + heredity_rows);
  for (const LocalType& type : types) system.unknown_types.push_back({type.i, type.j});

  for (int row = 0; row < phi; ++row) {
    for (int col = 0; col < unknowns; ++col) system.a(row, col) = columns[col].coords()[row];
    system.b(row) = rhs.coords()[row];
  }
  for (int col = 0; col < unknowns; ++col) system.a(phi, col) = 1;
  system.b(phi) = rank + 2;

  // Squaring sends the pair of types (i, order+1-i), (order/2+1-i, ...) to the
  // same type of the half-order action; curves of the half-order action are
  // not isolated points, so the counts must agree exactly.
  for (int h = 0; h < heredity_rows; ++h) {
    int half_i = half.types[static_cast<size_t>(h)].first;
    int row = phi + 1 + h;
    for (size_t t = 0; t < types.size(); ++t) {
      int image = types[t].i % (order / 2);
      int canonical = std::min(image, (order / 2) + 1 - image);
      if (canonical == half_i) system.a(row, static_cast<int>(t)) = 1;
    }
    system.b(row) = half.multiplicities[static_cast<size_t>(h)];
  }
  return system;
}

FixedPointCounts solve_fixed_point_counts(int order, int rank) {
  AssembledSystem system = assemble_count_system(order, rank);
  LinearSolution solution = solve_linear_system(system.a, system.b);

  FixedPointCounts counts;
  counts.order = order;
  counts.rank = rank;
  counts.types = system.unknown_types;
  counts.consistent = solution.consistent;
  if (!solution.consistent) return counts;

  counts.unique = solution.nullspace.cols() == 0;
  counts.solution_space_dim = static_cast<int>(solution.nullspace.cols());
  const int unknowns = static_cast<int>(system.unknown_types.size());
  counts.total_points = 0;
  for (int t = 0; t < unknowns; ++t) {
    counts.multiplicities.push_back(solution.particular(t));
    counts.total_points += solution.particular(t);
  }
  counts.total_points.canonicalize();
  counts.c = solution.particular(unknowns);

  counts.admissible = true;
  auto flag = [&](const std::string& message) {
    counts.admissible = false;
    counts.violations.push_back(message);
  };
  for (int t = 0; t < unknowns; ++t) {
    const Rat& m = counts.multiplicities[static_cast<size_t>(t)];
    std::string label = "m(" + std::to_string(counts.types[static_cast<size_t>(t)].first) + "," +
                        std::to_string(counts.types[static_cast<size_t>(t)].second) + ")";
    if (!is_integer(m))
      flag(label + " = " + format_rational(m) + " is not an integer");
    else if (m < 0)
      flag(label + " = " + format_rational(m) + " is negative");
  }
  if (!is_integer(counts.c))
    flag("c = " + format_rational(counts.c) + " is not an integer");
  else if (counts.c < 0)
    flag("c = " + format_rational(counts.c) + " is negative");
  else if (mod_two(counts.c) != 0)
    flag("c = " + format_rational(counts.c) + " is odd");
  return counts;
}

ClosedFormCounts closed_form_counts(int order, int rank) {
  require_two_power_order(order);
  ClosedFormCounts closed;
  const Rat r(rank);
  switch (order) {
    case 4:
      closed.m[{2, 3}] = (r + 6) / 2;
      closed.c = (r - 2) / 2;
      break;
    case 8:
      closed.m[{2, 7}] = (r + 14) / 4;
      closed.m[{3, 6}] = (r - 2) / 4;
      closed.m[{4, 5}] = (r - 6) / 4;
      closed.c = (r + 2) / 4;
      break;
    case 16:
      closed.m[{2, 15}] = (r + 10) / 4;
      closed.m[{3, 14}] = (r + 2) / 8;
      closed.m[{4, 13}] = (r - 6) / 8;
      closed.m[{5, 12}] = (r - 6) / 8;
      closed.m[{6, 11}] = (r - 6) / 8;
      closed.m[{7, 10}] = 1;
      closed.m[{8, 9}] = 0;
      closed.c = (r + 2) / 4;
      break;
  }
  for (auto& [type, value] : closed.m) value.canonicalize();
  closed.c.canonicalize();
  return closed;
}

bool closed_form_satisfies_system(int order, int rank) {
  AssembledSystem system = assemble_count_system(order, rank);
  ClosedFormCounts closed = closed_form_counts(order, rank);
  RatVector x = RatVector::Zero(system.a.cols());
  for (Eigen::Index t = 0; t < static_cast<Eigen::Index>(system.unknown_types.size()); ++t)
    x(t) = closed.m.at(system.unknown_types[static_cast<size_t>(t)]);
  x(system.a.cols() - 1) = closed.c;
  RatVector residual = system.a * x - system.b;
  return exact_is_zero(residual);
}

bool relation_implied(const AssembledSystem& system, const RatVector& relation, const Rat& rhs) {
  LinearSolution combo = solve_linear_system(system.a.transpose(), relation);
  if (!combo.consistent) return false;
  Rat value = (system.b.transpose() * combo.particular)(0, 0);
  value.canonicalize();
  return value == rhs;
}

Rat zeta_power_trace(int order, long exponent) {
  return Cyclotomic::zeta(order, exponent).trace_to_q();
}

bool trace_certificate(int order) {
  require_two_power_order(order);
  Cyclotomic sum(order);
  for (long j = 1; j < order; j += 2) {
    if (zeta_power_trace(order, j) != 0) return false;
    sum = sum + Cyclotomic::zeta(order, j);
  }
  return sum.is_zero();
}

}  // namespace k3aut
