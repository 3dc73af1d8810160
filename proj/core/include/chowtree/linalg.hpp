#pragma once

#include <vector>

#include "chowtree/rational.hpp"

namespace chowtree {

using QVector = std::vector<Rational>;
using QMatrix = std::vector<QVector>;  // row major

enum class SolveVerdict { kUniqueSolution, kNoSolution, kInfinitelyMany };

struct LinearSolveResult {
  SolveVerdict verdict;
  QVector solution;  // populated iff verdict == kUniqueSolution
};

/// Exact verdict for the square system A x = b via Gaussian elimination.
/// UniqueSolution is returned exactly when det(A) != 0.
LinearSolveResult solve_affine_linear(const QMatrix& a, const QVector& b);

Rational determinant(QMatrix a);

/// Row rank of an arbitrary rectangular matrix.
int rank(QMatrix a);

}  // namespace chowtree
