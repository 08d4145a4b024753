#pragma once

#include "binext/linalg.hpp"

namespace binext::detail {

struct ConeRays
{
    std::vector<QVector> rays;    ///< extreme rays of the pointed part, primitive integer vectors
    linalg::QMatrix lineality;    ///< basis of the lineality space
};

/**
 * Extreme rays of {z : a·z <= 0 for a in ineqs, a·z = 0 for a in eqs}
 * intersected with the orthogonal complement of its lineality space.
 * Double description with exact integer rays and the combinatorial
 * adjacency test.
 */
ConeRays extreme_rays(const linalg::QMatrix& ineqs, const linalg::QMatrix& eqs, std::size_t dim);

}  // namespace binext::detail
