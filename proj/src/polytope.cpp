#include "binext/polytope.hpp"

#include "binext/errors.hpp"

#include <algorithm>

namespace binext {

namespace {

void check_rows(std::size_t dim, const std::vector<LinearRow>& rows, const char* what)
{
    for (std::size_t i = 0; i < rows.size(); ++i)
        if (rows[i].a.size() != dim)
            throw Error(ErrorKind::DimensionMismatch,
                        std::string(what) + " row " + std::to_string(i) + " has length " +
                            std::to_string(rows[i].a.size()) + ", expected " + std::to_string(dim));
}

}  // namespace

HPolytope::HPolytope(std::size_t dim, std::vector<LinearRow> ineqs, std::vector<LinearRow> eqs)
    : dim_(dim), ineqs_(std::move(ineqs)), eqs_(std::move(eqs))
{
    check_rows(dim_, ineqs_, "inequality");
    check_rows(dim_, eqs_, "equation");
}

bool HPolytope::contains(const QVector& p) const
{
    if (p.size() != dim_) throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
    for (const auto& r : eqs_)
        if (dot(r.a, p) != r.b) return false;
    for (const auto& r : ineqs_)
        if (dot(r.a, p) > r.b) return false;
    return true;
}

std::vector<std::size_t> HPolytope::tight_set(const QVector& p) const
{
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < ineqs_.size(); ++i)
        if (dot(ineqs_[i].a, p) == ineqs_[i].b) tight.push_back(i);
    return tight;
}

HPolytope HPolytope::with_equation(LinearRow row) const
{
    auto eqs = eqs_;
    eqs.push_back(std::move(row));
    return HPolytope(dim_, ineqs_, std::move(eqs));
}

HPolytope HPolytope::fix(std::size_t var, const Rational& value) const
{
    if (var >= dim_) throw Error(ErrorKind::DimensionMismatch, "variable index out of range");
    QVector a(dim_, Rational(0));
    a[var] = 1;
    return with_equation({std::move(a), value});
}

VPolytope::VPolytope(std::size_t dim, std::vector<QVector> vertices) : dim_(dim)
{
    for (const auto& v : vertices)
        if (v.size() != dim)
            throw Error(ErrorKind::DimensionMismatch, "vertex has length " + std::to_string(v.size()) +
                                                          ", expected " + std::to_string(dim));
    vertices_ = canonical_points(std::move(vertices));
}

bool VPolytope::contains_vertex(const QVector& v) const
{
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool SkeletonGraph::adjacent(std::size_t i, std::size_t j) const
{
    if (i > j) std::swap(i, j);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
}

std::size_t SkeletonGraph::degree(std::size_t i) const
{
    return static_cast<std::size_t>(
        std::count_if(edges.begin(), edges.end(), [i](const auto& e) { return e.first == i || e.second == i; }));
}

std::vector<QVector> canonical_points(std::vector<QVector> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    return points;
}

}  // namespace binext
