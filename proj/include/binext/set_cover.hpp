#pragma once

#include "binext/rational.hpp"

#include <cstddef>
#include <vector>

namespace binext {

/// 0/1 rows over the ground set {0, ..., d-1}; a cover hits every row.
struct SetCoverInstance
{
    std::size_t d = 0;
    std::vector<std::vector<int>> rows;
};

struct SetCoverResult
{
    long value = 0;
    std::vector<std::size_t> cover;  ///< sorted ground-set indices
};

/// Exact minimum cover by branch and bound (singleton-row propagation,
/// column dominance, disjoint-row lower bound). Throws InfeasibleRow on an
/// all-zero row; ground sets are limited to 64 elements.
SetCoverResult set_cover_min(const SetCoverInstance& instance);

bool is_cover(const SetCoverInstance& instance, const std::vector<std::size_t>& cover);

struct LiftProjectRank
{
    long value = 0;
    std::vector<std::size_t> cover;        ///< columns of the point space
    SetCoverInstance instance;             ///< one row per vertex with a fractional column
    std::vector<std::size_t> row_vertex;   ///< index into the vertex list for each row
};

/// Lift-and-project rank with respect to `columns`: minimum hitting set of
/// the fractional supports of the vertices.
LiftProjectRank lift_and_project_rank(const std::vector<QVector>& vertices, const std::vector<std::size_t>& columns);

}  // namespace binext
