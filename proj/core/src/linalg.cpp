#include "chowtree/linalg.hpp"

#include <cstddef>
#include <utility>

#include "chowtree/errors.hpp"

namespace chowtree {

namespace {

// Reduces `m` (any shape) to row echelon form in place and returns its rank.
// Exact arithmetic, so any nonzero pivot works; no pivoting heuristics needed.
int echelonize(QMatrix& m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t found = pivot_row;
    while (found < rows && m[found][col].is_zero()) ++found;
    if (found == rows) continue;
    std::swap(m[pivot_row], m[found]);
    const Rational inv = m[pivot_row][col].reciprocal();
    for (size_t j = col; j < cols; ++j) m[pivot_row][j] *= inv;
    for (size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m[r][col].is_zero()) continue;
      const Rational factor = m[r][col];
      for (size_t j = col; j < cols; ++j) m[r][j] -= factor * m[pivot_row][j];
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

}  // namespace

LinearSolveResult solve_affine_linear(const QMatrix& a, const QVector& b) {
  const size_t k = a.size();
  if (b.size() != k) throw Error("solve_affine_linear: size mismatch");
  for (const auto& row : a) {
    if (row.size() != k) throw Error("solve_affine_linear: matrix not square");
  }

  // Work on the augmented matrix [A | b].
  QMatrix aug(k, QVector(k + 1));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) aug[i][j] = a[i][j];
    aug[i][k] = b[i];
  }
  echelonize(aug);

  int rank_a = 0;
  int rank_aug = 0;
  for (size_t i = 0; i < k; ++i) {
    bool coeff_nonzero = false;
    for (size_t j = 0; j < k; ++j) {
      if (!aug[i][j].is_zero()) { coeff_nonzero = true; break; }
    }
    if (coeff_nonzero) {
      ++rank_a;
      ++rank_aug;
    } else if (!aug[i][k].is_zero()) {
      ++rank_aug;
    }
  }

  if (rank_a < rank_aug) return {SolveVerdict::kNoSolution, {}};
  if (rank_a < static_cast<int>(k)) return {SolveVerdict::kInfinitelyMany, {}};

  // Full rank: the reduced augmented matrix is [I | x].
  QVector x(k);
  for (size_t i = 0; i < k; ++i) {
    size_t lead = 0;
    while (lead < k && aug[i][lead].is_zero()) ++lead;
    x[lead] = aug[i][k];
  }
  return {SolveVerdict::kUniqueSolution, std::move(x)};
}

Rational determinant(QMatrix a) {
  const size_t k = a.size();
  for (const auto& row : a) {
    if (row.size() != k) throw Error("determinant: matrix not square");
  }
  Rational det(1);
  for (size_t col = 0; col < k; ++col) {
    size_t found = col;
    while (found < k && a[found][col].is_zero()) ++found;
    if (found == k) return Rational(0);
    if (found != col) {
      std::swap(a[col], a[found]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = a[col][col].reciprocal();
    for (size_t r = col + 1; r < k; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational factor = a[r][col] * inv;
      for (size_t j = col; j < k; ++j) a[r][j] -= factor * a[col][j];
    }
  }
  return det;
}

int rank(QMatrix a) {
  return echelonize(a);
}

}  // namespace chowtree
