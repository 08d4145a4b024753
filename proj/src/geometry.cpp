#include "binext/geometry.hpp"

#include "binext/errors.hpp"
#include "binext/linalg.hpp"
#include "double_description.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace binext {

namespace {

struct HomogenizedRays
{
    std::vector<QVector> vertices;
    bool has_recession_ray = false;
    bool has_lineality = false;
};

HomogenizedRays homogenized_rays(const HPolytope& h)
{
    const std::size_t n = h.dim();
    linalg::QMatrix ineq, eq;
    for (const auto& r : h.ineqs()) {
        QVector row = r.a;
        row.push_back(-r.b);
        ineq.push_back(std::move(row));
    }
    QVector t_nonneg(n + 1, Rational(0));
    t_nonneg[n] = -1;
    ineq.push_back(std::move(t_nonneg));
    for (const auto& r : h.eqs()) {
        QVector row = r.a;
        row.push_back(-r.b);
        eq.push_back(std::move(row));
    }

    auto cone = detail::extreme_rays(ineq, eq, n + 1);
    HomogenizedRays out;
    out.has_lineality = !cone.lineality.empty();
    for (const auto& ray : cone.rays) {
        const Rational& t = ray[n];
        if (t > 0) {
            QVector x(ray.begin(), ray.begin() + static_cast<std::ptrdiff_t>(n));
            for (auto& c : x) c /= t;
            out.vertices.push_back(std::move(x));
        } else {
            out.has_recession_ray = true;
        }
    }
    return out;
}

std::vector<std::vector<bool>> incidence(const HPolytope& h, const std::vector<QVector>& verts)
{
    std::vector<std::vector<bool>> inc(verts.size(), std::vector<bool>(h.ineqs().size(), false));
    for (std::size_t v = 0; v < verts.size(); ++v)
        for (auto i : h.tight_set(verts[v])) inc[v][i] = true;
    return inc;
}

}  // namespace

VPolytope enumerate_vertices(const HPolytope& h)
{
    auto rays = homogenized_rays(h);
    if (rays.vertices.empty()) return VPolytope(h.dim(), {});
    if (rays.has_lineality || rays.has_recession_ray)
        throw Error(ErrorKind::UnboundedPolyhedron, "polyhedron has a recession direction");
    return VPolytope(h.dim(), std::move(rays.vertices));
}

bool is_bounded(const HPolytope& h)
{
    auto rays = homogenized_rays(h);
    return rays.vertices.empty() || !(rays.has_lineality || rays.has_recession_ray);
}

HPolytope facet_hull(const VPolytope& v) { return facet_hull(v.dim(), v.vertices()); }

HPolytope facet_hull(std::size_t dim, const std::vector<QVector>& input)
{
    auto points = canonical_points(input);
    for (const auto& p : points)
        if (p.size() != dim) throw Error(ErrorKind::DimensionMismatch, "point has wrong dimension");
    if (points.empty()) return HPolytope(dim, {LinearRow{QVector(dim, Rational(0)), Rational(-1)}});

    linalg::QMatrix rows;
    for (const auto& p : points) {
        QVector r = p;
        r.push_back(Rational(-1));
        rows.push_back(std::move(r));
    }
    auto cone = detail::extreme_rays(rows, {}, dim + 1);

    std::vector<LinearRow> eqs;
    for (const auto& r : linalg::reduce(cone.lineality, dim + 1).rows) {
        QVector z = primitive(r);
        Rational b = z.back();
        z.pop_back();
        eqs.push_back({std::move(z), std::move(b)});
    }

    std::vector<LinearRow> ineqs;
    for (const auto& z : cone.rays) {
        QVector a(z.begin(), z.end() - 1);
        const Rational& b = z.back();
        bool touches = std::any_of(points.begin(), points.end(), [&](const QVector& p) { return dot(a, p) == b; });
        if (touches) ineqs.push_back({std::move(a), b});
    }
    std::sort(ineqs.begin(), ineqs.end(), [](const LinearRow& x, const LinearRow& y) {
        return x.a != y.a ? x.a < y.a : x.b < y.b;
    });
    return HPolytope(dim, std::move(ineqs), std::move(eqs));
}

VPolytope hull_vertices(std::size_t dim, const std::vector<QVector>& input)
{
    auto points = canonical_points(input);
    if (points.size() <= 1) return VPolytope(dim, points);
    HPolytope h = facet_hull(dim, points);
    linalg::QMatrix eq_rows;
    for (const auto& e : h.eqs()) eq_rows.push_back(e.a);
    std::vector<QVector> out;
    for (const auto& p : points) {
        linalg::QMatrix rows = eq_rows;
        for (auto i : h.tight_set(p)) rows.push_back(h.ineqs()[i].a);
        if (linalg::rank(rows, dim) == dim) out.push_back(p);
    }
    return VPolytope(dim, std::move(out));
}

SkeletonGraph skeleton(const HPolytope& h) { return skeleton(h, enumerate_vertices(h)); }

SkeletonGraph skeleton(const HPolytope& h, const VPolytope& vertices)
{
    SkeletonGraph g;
    g.nodes = vertices.vertices();
    const std::size_t nv = g.nodes.size();
    const std::size_t m = h.ineqs().size();
    auto inc = incidence(h, g.nodes);
    std::vector<bool> common(m);
    for (std::size_t i = 0; i < nv; ++i) {
        for (std::size_t j = i + 1; j < nv; ++j) {
            for (std::size_t r = 0; r < m; ++r) common[r] = inc[i][r] && inc[j][r];
            bool adjacent = true;
            for (std::size_t k = 0; k < nv && adjacent; ++k) {
                if (k == i || k == j) continue;
                bool contains = true;
                for (std::size_t r = 0; r < m && contains; ++r)
                    if (common[r] && !inc[k][r]) contains = false;
                if (contains) adjacent = false;
            }
            if (adjacent) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

VPolytope slice(const HPolytope& h, std::size_t var, const Rational& value)
{
    return enumerate_vertices(h.fix(var, value));
}

Face minimal_face(const HPolytope& h, const QVector& p)
{
    if (!h.contains(p)) throw Error(ErrorKind::PointNotInPolytope, "point " + to_string(p) + " is not in the polytope");
    Face f;
    f.tight = h.tight_set(p);
    const VPolytope all = enumerate_vertices(h);
    for (const auto& v : all.vertices()) {
        bool on_face = std::all_of(f.tight.begin(), f.tight.end(),
                                   [&](std::size_t i) { return dot(h.ineqs()[i].a, v) == h.ineqs()[i].b; });
        if (on_face) f.vertices.push_back(v);
    }
    f.dimension = linalg::affine_dimension(f.vertices);
    return f;
}

VPolytope convexify_binary(const VPolytope& v, std::size_t var)
{
    std::vector<QVector> kept;
    for (const auto& x : v.vertices())
        if (is_binary(x.at(var))) kept.push_back(x);
    return VPolytope(v.dim(), std::move(kept));
}

std::vector<Face> faces(const HPolytope& h, const VPolytope& vertices, int max_dim)
{
    const auto& verts = vertices.vertices();
    if (verts.empty()) return {};
    const std::size_t m = h.ineqs().size();
    auto inc = incidence(h, verts);

    auto tight_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::size_t> t;
        for (std::size_t r = 0; r < m; ++r)
            if (std::all_of(idx.begin(), idx.end(), [&](std::size_t v) { return inc[v][r]; })) t.push_back(r);
        return t;
    };

    std::set<std::vector<std::size_t>> seen;
    std::vector<std::vector<std::size_t>> queue;
    std::vector<std::size_t> all(verts.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    seen.insert(all);
    queue.push_back(all);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        auto current = queue[head];
        auto tight = tight_of(current);
        for (std::size_t r = 0; r < m; ++r) {
            if (std::binary_search(tight.begin(), tight.end(), r)) continue;
            std::vector<std::size_t> sub;
            for (auto v : current)
                if (inc[v][r]) sub.push_back(v);
            if (sub.empty() || sub.size() == current.size()) continue;
            if (seen.insert(sub).second) queue.push_back(std::move(sub));
        }
    }

    std::vector<Face> out;
    for (const auto& idx : seen) {
        Face f;
        for (auto v : idx) f.vertices.push_back(verts[v]);
        f.dimension = linalg::affine_dimension(f.vertices);
        if (max_dim >= 0 && f.dimension > max_dim) continue;
        f.tight = tight_of(idx);
        out.push_back(std::move(f));
    }
    std::stable_sort(out.begin(), out.end(), [](const Face& a, const Face& b) {
        return a.dimension != b.dimension ? a.dimension < b.dimension : a.vertices < b.vertices;
    });
    return out;
}

std::vector<QVector> project_points(const std::vector<QVector>& points, const std::vector<std::size_t>& coords)
{
    std::vector<QVector> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        QVector q;
        q.reserve(coords.size());
        for (auto c : coords) q.push_back(p.at(c));
        out.push_back(std::move(q));
    }
    return canonical_points(std::move(out));
}

}  // namespace binext
