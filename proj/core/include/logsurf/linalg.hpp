#pragma once

#include <optional>
#include <span>
#include <vector>

#include "logsurf/qmatrix.hpp"

namespace logsurf {

/// Exact solution of A x = b for square nonsingular A.
/// Throws Error(SingularMatrix) when A is singular.
QVector solve_linear(const QMatrix& a, const QVector& b);

/// Column-wise solution of A X = B for square nonsingular A.
QMatrix solve_linear(const QMatrix& a, const QMatrix& b);

/// Some solution of A x = b for arbitrary A (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<QVector> solve_consistent(const QMatrix& a, const QVector& b);

Rational determinant(const QMatrix& a);
std::size_t rank(const QMatrix& a);

/// Pivot columns of a row echelon form of A; the coordinates they index are
/// independent on the row space.
std::vector<std::size_t> pivot_columns(const QMatrix& a);

/// Leading principal minors det(A[0..k, 0..k]) for k = 1..n.
std::vector<Rational> leading_principal_minors(const QMatrix& a);

/// Sylvester's criterion on -A: the k-th leading minor of A has sign (-1)^k.
/// Throws Error(NotSymmetric) for asymmetric input. The empty matrix is
/// vacuously negative definite.
bool is_negative_definite(const QMatrix& a);

/// Solves sum_j lambda_j * columns[j] = target with lambda >= 0 using an exact
/// phase-one simplex (Bland's rule). Returns the multipliers when feasible.
std::optional<QVector> find_nonnegative_combination(std::span<const QVector> columns,
                                                    const QVector& target);

}  // namespace logsurf
