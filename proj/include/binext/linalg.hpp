#pragma once

#include "binext/rational.hpp"

#include <optional>
#include <vector>

namespace binext::linalg {

using QMatrix = std::vector<QVector>;

struct Echelon
{
    QMatrix rows;                    ///< reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots; ///< pivot column of each row
};

/// Gauss-Jordan elimination over the rationals. `cols` is needed when `m` has no rows.
Echelon reduce(QMatrix m, std::size_t cols);

std::size_t rank(const QMatrix& m, std::size_t cols);

/// Basis of {z : m z = 0}, one vector per free column, in column order.
QMatrix nullspace(const QMatrix& m, std::size_t cols);

/// Some solution of a z = b (free variables set to zero), or nullopt when inconsistent.
std::optional<QVector> solve_any(const QMatrix& a, const QVector& b, std::size_t cols);

/// The solution of a z = b if it exists and is unique.
std::optional<QVector> solve_unique(const QMatrix& a, const QVector& b, std::size_t cols);

/// Dimension of the affine hull of the points; -1 for an empty set.
int affine_dimension(const std::vector<QVector>& points);

}  // namespace binext::linalg
