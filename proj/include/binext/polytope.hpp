#pragma once

#include "binext/rational.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace binext {

/// One row a·x (<= or =) b.
struct LinearRow
{
    QVector a;
    Rational b;

    friend bool operator==(const LinearRow&, const LinearRow&) = default;
};

/**
 * Polytope in inequality form: {x : a·x <= b for every inequality row,
 * a·x = b for every equation row}. Lower-dimensional sets carry their
 * affine hull as explicit equations. Boundedness is checked by the
 * operations that need it, not here.
 */
class HPolytope
{
public:
    HPolytope() = default;
    HPolytope(std::size_t dim, std::vector<LinearRow> ineqs, std::vector<LinearRow> eqs = {});

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<LinearRow>& ineqs() const noexcept { return ineqs_; }
    const std::vector<LinearRow>& eqs() const noexcept { return eqs_; }

    bool contains(const QVector& p) const;
    /// Indices of the inequality rows that hold with equality at p.
    std::vector<std::size_t> tight_set(const QVector& p) const;

    HPolytope with_equation(LinearRow row) const;
    /// Intersection with {x_var = value}.
    HPolytope fix(std::size_t var, const Rational& value) const;

private:
    std::size_t dim_ = 0;
    std::vector<LinearRow> ineqs_;
    std::vector<LinearRow> eqs_;
};

/// Vertex list kept in canonical order: sorted lexicographically, no duplicates.
class VPolytope
{
public:
    VPolytope() = default;
    VPolytope(std::size_t dim, std::vector<QVector> vertices);

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<QVector>& vertices() const& noexcept { return vertices_; }
    /// By value on temporaries, so range-for over a returned polytope is safe.
    std::vector<QVector> vertices() && noexcept { return std::move(vertices_); }
    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    bool contains_vertex(const QVector& v) const;

    friend bool operator==(const VPolytope&, const VPolytope&) = default;

private:
    std::size_t dim_ = 0;
    std::vector<QVector> vertices_;
};

struct Face
{
    std::vector<std::size_t> tight;   ///< inequality rows tight on the whole face
    std::vector<QVector> vertices;    ///< canonical order
    int dimension = -1;
};

struct SkeletonGraph
{
    std::vector<QVector> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  ///< i < j, sorted

    bool adjacent(std::size_t i, std::size_t j) const;
    std::size_t degree(std::size_t i) const;
};

/// Sort and deduplicate a point list.
std::vector<QVector> canonical_points(std::vector<QVector> points);

}  // namespace binext
