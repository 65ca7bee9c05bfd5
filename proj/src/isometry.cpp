#include "k3aut/isometry.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

namespace k3aut {

namespace {

struct ColumnCandidate {
  IntVector column;
  IntVector gram_times_column;
};

struct SearchContext {
  const IntMatrix& gram;
  IsometryConstraints constraints;
  std::vector<ColumnCandidate> candidates;
  std::vector<std::vector<int>> per_column;  // candidate indices allowed per column
  RatMatrix generator_lifts;                 // discriminant generators, as rational columns
};

std::optional<int> order_up_to(const IntMatrix& f, int cap) {
  IntMatrix power = f;
  IntMatrix identity = integer_identity(static_cast<int>(f.rows()));
  for (int e = 1; e <= cap; ++e) {
    if (exact_equal(power, identity)) return e;
    power = power * f;
  }
  return std::nullopt;
}

bool lift_action_trivial(const SearchContext& ctx, const IntMatrix& f) {
  RatMatrix f_rat = f.cast<Rat>();
  for (int g = 0; g < ctx.generator_lifts.cols(); ++g) {
    RatVector moved = f_rat * ctx.generator_lifts.col(g) - ctx.generator_lifts.col(g);
    for (int i = 0; i < moved.size(); ++i)
      if (!is_integer(moved(i))) return false;
  }
  return true;
}

void accept_if_valid(const SearchContext& ctx, const std::vector<int>& chosen,
                     std::vector<IsometryCandidate>& found) {
  int r = static_cast<int>(ctx.gram.rows());
  IntMatrix f(r, r);
  for (int j = 0; j < r; ++j) f.col(j) = ctx.candidates[chosen[j]].column;

  IntMatrix pulled_back = f.transpose() * ctx.gram * f;
  if (!exact_equal(pulled_back, ctx.gram)) return;  // post-hoc re-verification

  std::optional<int> order = order_up_to(f, ctx.constraints.order);
  if (!order || *order != ctx.constraints.order) return;

  if (ctx.constraints.require_f2_eq_minus_i) {
    IntMatrix minus_identity = -integer_identity(r);
    IntMatrix square = f * f;
    if (!exact_equal(square, minus_identity)) return;
  }

  IsometryCandidate candidate;
  candidate.matrix = f;
  candidate.order = *order;
  candidate.discriminant_action_trivial = lift_action_trivial(ctx, f);
  if (ctx.constraints.require_trivial_discriminant_action &&
      !candidate.discriminant_action_trivial)
    return;
  found.push_back(std::move(candidate));
}

void dfs(const SearchContext& ctx, int column, std::vector<int>& chosen,
         std::vector<IsometryCandidate>& found, unsigned long long& nodes) {
  int r = static_cast<int>(ctx.gram.rows());
  if (column == r) {
    accept_if_valid(ctx, chosen, found);
    return;
  }
  for (int idx : ctx.per_column[column]) {
    ++nodes;
    const ColumnCandidate& candidate = ctx.candidates[idx];
    bool compatible = true;
    for (int i = 0; i < column && compatible; ++i)
      compatible =
          ctx.candidates[chosen[i]].column.dot(candidate.gram_times_column) == ctx.gram(i, column);
    if (!compatible) continue;
    chosen.push_back(idx);
    dfs(ctx, column + 1, chosen, found, nodes);
    chosen.pop_back();
  }
}

bool matrix_less(const IntMatrix& a, const IntMatrix& b) {
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != b(i, j)) return a(i, j) < b(i, j);
    }
  return false;
}

}  // namespace

IsometrySearchResult search_isometries(const GramLattice& lattice,
                                       const IsometryConstraints& constraints) {
  if (constraints.order < 1)
    throw std::invalid_argument("isometry search needs a positive target order");
  if (lattice.rank() > 6)
    throw std::domain_error("rank " + std::to_string(lattice.rank()) +
                            " exceeds the certified search size 6");
  if (constraints.entry_bound < 1 || constraints.entry_bound > 3)
    throw std::domain_error("entry bound " + std::to_string(constraints.entry_bound) +
                            " outside the certified range 1..3");

  IsometrySearchResult result;
  result.entry_bound = constraints.entry_bound;

  if (constraints.require_f2_eq_minus_i) {
    auto [t_plus, t_minus] = lattice_signature(lattice);
    if (t_plus % 2 != 0 || t_minus % 2 != 0) {
      // f^2 = -I makes the real representation complex, so both signature
      // parts must be even; nothing bounded can exist.
      result.parity_pruned = true;
      return result;
    }
  }

  int r = lattice.rank();
  int bound = constraints.entry_bound;
  SearchContext ctx{lattice.gram, constraints, {}, {}, discriminant_group(lattice).generator_lifts};

  std::set<Int> wanted;
  for (int j = 0; j < r; ++j) wanted.insert(lattice.gram(j, j));

  std::vector<int> digits(r, -bound);
  for (;;) {
    IntVector v(r);
    for (int i = 0; i < r; ++i) v(i) = digits[i];
    IntVector gv = lattice.gram * v;
    if (wanted.count(v.dot(gv)) != 0) ctx.candidates.push_back({v, gv});

    int pos = 0;
    while (pos < r && ++digits[pos] > bound) digits[pos++] = -bound;
    if (pos == r) break;
  }

  ctx.per_column.resize(r);
  for (int j = 0; j < r; ++j)
    for (int idx = 0; idx < static_cast<int>(ctx.candidates.size()); ++idx)
      if (ctx.candidates[idx].column.dot(ctx.candidates[idx].gram_times_column) ==
          lattice.gram(j, j))
        ctx.per_column[j].push_back(idx);

  const std::vector<int>& first = ctx.per_column[0];
  unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  size_t chunk_count = std::min<size_t>(hardware, std::max<size_t>(first.size(), 1));
  size_t chunk_size = (first.size() + chunk_count - 1) / std::max<size_t>(chunk_count, 1);

  struct ChunkResult {
    std::vector<IsometryCandidate> found;
    unsigned long long nodes = 0;
  };
  std::vector<std::future<ChunkResult>> futures;
  for (size_t start = 0; start < first.size(); start += chunk_size) {
    size_t stop = std::min(first.size(), start + chunk_size);
    futures.push_back(std::async(std::launch::async, [&ctx, &first, start, stop]() {
      ChunkResult chunk;
      std::vector<int> chosen;
      for (size_t i = start; i < stop; ++i) {
        ++chunk.nodes;
        chosen.assign(1, first[i]);
        dfs(ctx, 1, chosen, chunk.found, chunk.nodes);
      }
      return chunk;
    }));
  }
  for (auto& future : futures) {
    ChunkResult chunk = future.get();
    result.nodes_visited += chunk.nodes;
    for (IsometryCandidate& candidate : chunk.found)
      result.candidates.push_back(std::move(candidate));
  }
  std::sort(result.candidates.begin(), result.candidates.end(),
            [](const IsometryCandidate& a, const IsometryCandidate& b) {
              return matrix_less(a.matrix, b.matrix);
            });
  return result;
}

bool is_isometry(const GramLattice& lattice, const IntMatrix& f) {
  if (f.rows() != lattice.rank() || f.cols() != lattice.rank()) return false;
  IntMatrix pulled_back = f.transpose() * lattice.gram * f;
  return exact_equal(pulled_back, lattice.gram);
}

DiscriminantAction discriminant_action(const IntMatrix& f, const GramLattice& lattice) {
  if (!is_isometry(lattice, f))
    throw std::domain_error("matrix is not an isometry of the lattice");
  DiscriminantAction action;
  DiscriminantGroup group = discriminant_group(lattice);
  RatMatrix f_rat = f.cast<Rat>();
  action.trivial = true;
  for (int g = 0; g < group.generator_lifts.cols(); ++g) {
    RatVector moved = f_rat * group.generator_lifts.col(g) - group.generator_lifts.col(g);
    bool fixed = true;
    for (int i = 0; i < moved.size(); ++i)
      if (!is_integer(moved(i))) fixed = false;
    action.generator_fixed.push_back(fixed);
    action.trivial = action.trivial && fixed;
  }
  return action;
}

}  // namespace k3aut
