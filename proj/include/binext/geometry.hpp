#pragma once

#include "binext/polytope.hpp"

#include <vector>

namespace binext {

/// Irredundant, canonically sorted vertex set; empty iff h is empty.
/// Throws UnboundedPolyhedron when h has a recession direction.
VPolytope enumerate_vertices(const HPolytope& h);

/// True when h is empty or bounded.
bool is_bounded(const HPolytope& h);

/// Facets and affine-hull equations of conv(points). Input need not be irredundant.
HPolytope facet_hull(const VPolytope& v);
HPolytope facet_hull(std::size_t dim, const std::vector<QVector>& points);

/// Vertices of conv(points): the subset of points that are extreme.
VPolytope hull_vertices(std::size_t dim, const std::vector<QVector>& points);

/// Two vertices are adjacent iff no third vertex is tight on every
/// inequality tight at both.
SkeletonGraph skeleton(const HPolytope& h);
SkeletonGraph skeleton(const HPolytope& h, const VPolytope& vertices);

/// Vertices of h ∩ {x_var = value}.
VPolytope slice(const HPolytope& h, std::size_t var, const Rational& value);

/// Face of minimum dimension containing p. Throws PointNotInPolytope.
Face minimal_face(const HPolytope& h, const QVector& p);

/// One sequential-convexification step at vertex level: keep the
/// vertices whose coordinate var is 0 or 1.
VPolytope convexify_binary(const VPolytope& v, std::size_t var);

/// All nonempty faces of dimension <= max_dim (use -1 for all), ordered by
/// dimension and then by vertex set.
std::vector<Face> faces(const HPolytope& h, const VPolytope& vertices, int max_dim = -1);

/// Coordinates `coords` of every point, canonical and deduplicated.
std::vector<QVector> project_points(const std::vector<QVector>& points, const std::vector<std::size_t>& coords);

}  // namespace binext
