#pragma once

#include <optional>
#include <vector>

#include "dca/rational.hpp"

namespace dca {

/// Dense matrix over the Gaussian rationals, used for exact rank, kernel and
/// solve computations on small representation slices.
using QMatrix = std::vector<std::vector<GaussianRational>>;
using QVector = std::vector<GaussianRational>;

QMatrix q_identity(int n);
QMatrix q_mul(const QMatrix& a, const QMatrix& b);

/// Row-reduces in place; returns the pivot columns.
std::vector<int> rref(QMatrix& a);

int rank(QMatrix a);

/// Basis of the right kernel {x : a x = 0}.
std::vector<QVector> kernel_basis(const QMatrix& a);

/// Solves a x = b exactly; empty when inconsistent. With multiple solutions
/// the free variables are set to zero.
std::optional<QVector> solve(const QMatrix& a, const QVector& b);

}  // namespace dca
