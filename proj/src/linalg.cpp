#include "k3aut/linalg.hpp"

namespace k3aut {

IntMatrix integer_identity(Eigen::Index n) {
  IntMatrix id = IntMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) id(i, i) = 1;
  return id;
}

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Row/column operations applied simultaneously to the work matrix and the
// accumulated transform, keeping U * A * V = D true throughout.
struct SmithWork {
  IntMatrix d, u, v;

  void swap_rows(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.row(i).swap(d.row(j));
    u.row(i).swap(u.row(j));
  }
  void swap_cols(Eigen::Index i, Eigen::Index j) {
    if (i == j) return;
    d.col(i).swap(d.col(j));
    v.col(i).swap(v.col(j));
  }
  void add_row(Eigen::Index dst, Eigen::Index src, const Int& factor) {
    d.row(dst) += factor * d.row(src);
    u.row(dst) += factor * u.row(src);
  }
  void add_col(Eigen::Index dst, Eigen::Index src, const Int& factor) {
    d.col(dst) += factor * d.col(src);
    v.col(dst) += factor * v.col(src);
  }
  void negate_row(Eigen::Index i) {
    d.row(i) = -d.row(i);
    u.row(i) = -u.row(i);
  }
};

}  // namespace

SmithDecomposition smith_normal_form(const IntMatrix& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  SmithWork w{a, integer_identity(rows), integer_identity(cols)};
  const Eigen::Index steps = std::min(rows, cols);

  for (Eigen::Index k = 0; k < steps; ++k) {
    // Pick the nonzero entry of smallest magnitude as pivot.
    bool found = false;
    Eigen::Index pi = k, pj = k;
    Int best;
    for (Eigen::Index i = k; i < rows; ++i)
      for (Eigen::Index j = k; j < cols; ++j) {
        if (w.d(i, j) == 0) continue;
        Int mag = abs_int(w.d(i, j));
        if (!found || mag < best) {
          found = true;
          best = mag;
          pi = i;
          pj = j;
        }
      }
    if (!found) break;
    w.swap_rows(k, pi);
    w.swap_cols(k, pj);

    for (;;) {
      // Clear column k below the pivot, then row k right of it; a nonzero
      // remainder becomes the new, smaller pivot and we restart.
      bool reduced = true;
      for (Eigen::Index i = k + 1; i < rows && reduced; ++i) {
        if (w.d(i, k) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.d(i, k).get_mpz_t(), w.d(k, k).get_mpz_t());
        w.add_row(i, k, -q);
        if (w.d(i, k) != 0) {
          w.swap_rows(k, i);
          reduced = false;
        }
      }
      if (!reduced) continue;
      for (Eigen::Index j = k + 1; j < cols && reduced; ++j) {
        if (w.d(k, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), w.d(k, j).get_mpz_t(), w.d(k, k).get_mpz_t());
        w.add_col(j, k, -q);
        if (w.d(k, j) != 0) {
          w.swap_cols(k, j);
          reduced = false;
        }
      }
      if (!reduced) continue;

      // Enforce divisibility of the remaining block by the pivot.
      bool divisible = true;
      for (Eigen::Index i = k + 1; i < rows && divisible; ++i)
        for (Eigen::Index j = k + 1; j < cols && divisible; ++j)
          if (w.d(i, j) % w.d(k, k) != 0) {
            w.add_row(k, i, Int(1));
            divisible = false;
          }
      if (divisible) break;
    }
    if (w.d(k, k) < 0) w.negate_row(k);
  }
  return {w.d, w.u, w.v};
}

Inertia symmetric_inertia(const RatMatrix& symmetric) {
  const Eigen::Index n = symmetric.rows();
  if (symmetric.cols() != n) throw std::invalid_argument("inertia needs a square matrix");
  if (!exact_equal(symmetric, RatMatrix(symmetric.transpose())))
    throw std::invalid_argument("inertia needs a symmetric matrix");
  RatMatrix m = symmetric;
  Inertia result;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      // Bring a nonzero diagonal entry to position k, creating one from an
      // off-diagonal entry if the remaining diagonal vanishes entirely.
      Eigen::Index pivot = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (m(i, i) != 0) {
          pivot = i;
          break;
        }
      if (pivot >= 0) {
        m.row(k).swap(m.row(pivot));
        m.col(k).swap(m.col(pivot));
      } else {
        Eigen::Index oi = -1, oj = -1;
        for (Eigen::Index i = k; i < n && oi < 0; ++i)
          for (Eigen::Index j = i + 1; j < n; ++j)
            if (m(i, j) != 0) {
              oi = i;
              oj = j;
              break;
            }
        if (oi < 0) {
          result.zero += static_cast<int>(n - k);
          return result;
        }
        // (e_i + e_j) has square 2*m(i,j) != 0.
        m.row(oi) += m.row(oj);
        m.col(oi) += m.col(oj);
        m.row(k).swap(m.row(oi));
        m.col(k).swap(m.col(oi));
      }
    }
    const Rat pivot = m(k, k);
    if (pivot > 0)
      ++result.positive;
    else
      ++result.negative;
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat factor = m(i, k) / pivot;
      m.row(i) -= factor * m.row(k);
      m.col(i) -= factor * m.col(k);
    }
  }
  return result;
}

Rat rational_determinant(const RatMatrix& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("determinant needs a square matrix");
  RatMatrix m = a;
  Rat det(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i)
      if (m(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return Rat(0);
    if (pivot != k) {
      m.row(pivot).swap(m.row(k));
      det = -det;
    }
    det *= m(k, k);
    Rat inv = Rat(1) / m(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      Rat factor = m(i, k) * inv;
      for (Eigen::Index j = k; j < n; ++j) m(i, j) -= factor * m(k, j);
    }
  }
  det.canonicalize();
  return det;
}

Int integer_determinant(const IntMatrix& a) {
  Rat det = rational_determinant(to_rational(a));
  if (det.get_den() != 1) throw std::logic_error("integer determinant came out fractional");
  return det.get_num();
}

LinearSolution solve_linear_system(const RatMatrix& a, const RatVector& b) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  if (b.size() != rows) throw std::invalid_argument("right-hand side size mismatch");
  RatMatrix m(rows, cols + 1);
  m.leftCols(cols) = a;
  m.col(cols) = b;

  std::vector<Eigen::Index> pivot_col;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = row; i < rows; ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    m.row(pivot).swap(m.row(row));
    Rat inv = Rat(1) / m(row, col);
    for (Eigen::Index j = col; j <= cols; ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat factor = m(i, col);
      for (Eigen::Index j = col; j <= cols; ++j) m(i, j) -= factor * m(row, j);
    }
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolution sol;
  sol.rank = static_cast<int>(pivot_col.size());
  for (Eigen::Index i = row; i < rows; ++i)
    if (m(i, cols) != 0) {
      sol.consistent = false;
      return sol;
    }
  sol.consistent = true;

  sol.particular = RatVector::Zero(cols);
  for (size_t k = 0; k < pivot_col.size(); ++k) sol.particular(pivot_col[k]) = m(static_cast<Eigen::Index>(k), cols);

  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Eigen::Index c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
  const Eigen::Index free_count = cols - static_cast<Eigen::Index>(pivot_col.size());
  sol.nullspace = RatMatrix::Zero(cols, free_count);
  Eigen::Index out = 0;
  for (Eigen::Index col = 0; col < cols; ++col) {
    if (is_pivot[static_cast<size_t>(col)]) continue;
    sol.nullspace(col, out) = 1;
    for (size_t k = 0; k < pivot_col.size(); ++k)
      sol.nullspace(pivot_col[k], out) = -m(static_cast<Eigen::Index>(k), col);
    ++out;
  }
  return sol;
}

RatMatrix rational_inverse(const RatMatrix& a) {
  const Eigen::Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
  RatMatrix m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = RatMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, n + i) = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = col; i < n; ++i)
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    m.row(pivot).swap(m.row(col));
    Rat inv = Rat(1) / m(col, col);
    m.row(col) *= inv;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == col || m(i, col) == 0) continue;
      m.row(i) -= m(i, col) * m.row(col);
    }
  }
  return m.rightCols(n);
}

}  // namespace k3aut
