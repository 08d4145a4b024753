#include "binext/pyramid.hpp"

#include "binext/errors.hpp"
#include "binext/geometry.hpp"

#include <algorithm>

namespace binext {

HPolytope make_pyramid(const Rational& h)
{
    if (h <= 0) throw Error(ErrorKind::NonPositiveH, "h must be positive, got " + to_string(h));
    const Rational z(0), one(1), m1(-1);
    std::vector<LinearRow> rows = {
        {{m1, z, z}, z},
        {{one, z, z}, Rational(2)},
        {{z, m1, z}, z},
        {{z, one, z}, Rational(2)},
        {{h, h, one}, 2 * h},
        {{-2 * h, z, one}, z},
        {{z, -2 * h, one}, z},
        {{z, z, m1}, z},
    };
    return HPolytope(3, std::move(rows));
}

ExtendedFormulation pyramid_formulation(const Rational& h)
{
    return build(make_pyramid(h), {0, 1}, {make_unary(2), make_unary(2)});
}

Binarization make_non_natural_pair()
{
    const Rational z(0), one(1), m1(-1);
    std::vector<LinearRow> ineqs = {
        {{z, m1, z}, z}, {{z, one, z}, one}, {{z, z, m1}, z}, {{z, z, one}, one},
        {{z, one, Rational(-2)}, z},
    };
    std::vector<LinearRow> eqs = {{{one, m1, m1}, z}};
    return make_custom(HPolytope(3, std::move(ineqs), std::move(eqs)), 2);
}

PyramidExpected pyramid_expected(const Rational& h)
{
    auto q = [](long p, long r = 1) { return make_rational(p, r); };
    const Rational h23 = 2 * h / 3;
    PyramidExpected e;
    e.vp = {{q(0), q(0), q(0)}, {q(2), q(0), q(0)}, {q(0), q(2), q(0)}, {q(1, 2), q(1, 2), h}};
    e.vq = {
        {q(0), q(0), q(0), q(0), q(0), q(0), q(0)},
        {q(2), q(0), q(0), q(1), q(1), q(0), q(0)},
        {q(0), q(2), q(0), q(0), q(0), q(1), q(1)},
        {q(1, 2), q(1, 2), h, q(1, 2), q(0), q(1, 2), q(0)},
        {q(1, 2), q(1, 2), h, q(1, 2), q(0), q(1, 4), q(1, 4)},
        {q(1, 2), q(1, 2), h, q(1, 4), q(1, 4), q(1, 2), q(0)},
        {q(1, 2), q(1, 2), h, q(1, 4), q(1, 4), q(1, 4), q(1, 4)},
        {q(1), q(0), q(0), q(1), q(0), q(0), q(0)},
        {q(0), q(1), q(0), q(0), q(0), q(1), q(0)},
        {q(1), q(1), q(0), q(1), q(0), q(1), q(0)},
        {q(1), q(1), q(0), q(1, 2), q(1, 2), q(1), q(0)},
        {q(1), q(1), q(0), q(1), q(0), q(1, 2), q(1, 2)},
        {q(1), q(1, 3), h23, q(1), q(0), q(1, 3), q(0)},
        {q(1), q(1, 3), h23, q(1), q(0), q(1, 6), q(1, 6)},
        {q(1, 3), q(1), h23, q(1, 3), q(0), q(1), q(0)},
        {q(1, 3), q(1), h23, q(1, 6), q(1, 6), q(1), q(0)},
    };
    e.proj = {{q(0), q(0), q(0)}, {q(2), q(0), q(0)},    {q(0), q(2), q(0)},
              {q(1, 2), q(1, 2), h}, {q(1), q(0), q(0)}, {q(0), q(1), q(0)},
              {q(1), q(1), q(0)},    {q(1), q(1, 3), h23}, {q(1, 3), q(1), h23}};
    e.a_rows = {{1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}, {1, 1, 0, 0},
                {0, 0, 1, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}};
    e.lpr = 2;
    e.cover = {"y1_1", "y2_1"};
    e.after = {{q(0), q(0), q(0)}, {q(1), q(0), q(0)}, {q(2), q(0), q(0)},
               {q(0), q(1), q(0)}, {q(1), q(1), q(0)}, {q(0), q(2), q(0)}};
    return e;
}

bool PyramidReport::pass() const
{
    return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const ArtifactCheck& c) { return c.pass; });
}

namespace {

std::string count_detail(std::size_t got, std::size_t want)
{
    return std::to_string(got) + " computed, " + std::to_string(want) + " expected";
}

}  // namespace

PyramidReport reproduce_pyramid(const Rational& h)
{
    const PyramidExpected want = pyramid_expected(h);
    const ExtendedFormulation e = pyramid_formulation(h);

    PyramidReport r;
    r.h = h;
    r.vp = enumerate_vertices(e.P);
    r.vq = vertices_Q(e);
    r.proj = project_points(r.vq.vertices(), e.x_columns());
    const LprReport lp = lpr(e, r.vq);
    r.a_rows = lp.rank.instance.rows;
    r.lpr = lp.rank.value;
    for (auto c : lp.rank.cover) r.cover.push_back(e.column_name(c));
    r.after = project_points(lp.after.vertices(), e.x_columns());

    r.checks.push_back({"V(P)", r.vp.vertices() == canonical_points(want.vp),
                        count_detail(r.vp.size(), want.vp.size())});
    r.checks.push_back({"V(Q)", r.vq.vertices() == canonical_points(want.vq),
                        count_detail(r.vq.size(), want.vq.size())});
    r.checks.push_back({"projection of V(Q)", r.proj == canonical_points(want.proj),
                        count_detail(r.proj.size(), want.proj.size())});
    auto got_rows = r.a_rows, want_rows = want.a_rows;
    std::sort(got_rows.begin(), got_rows.end());
    std::sort(want_rows.begin(), want_rows.end());
    r.checks.push_back({"A_Q", got_rows == want_rows, count_detail(got_rows.size(), want_rows.size()) + " rows"});
    const bool cover_ok = is_cover(lp.rank.instance, [&] {
        std::vector<std::size_t> local;
        const auto ycols = e.y_columns();
        for (auto c : lp.rank.cover)
            local.push_back(static_cast<std::size_t>(std::find(ycols.begin(), ycols.end(), c) - ycols.begin()));
        return local;
    }());
    r.checks.push_back({"lpr", r.lpr == want.lpr && cover_ok && lp.certified && r.cover == want.cover,
                        "value " + std::to_string(r.lpr) + (cover_ok ? ", cover valid" : ", cover invalid")});
    r.checks.push_back({"projection after convexification", r.after == canonical_points(want.after),
                        count_detail(r.after.size(), want.after.size())});
    return r;
}

}  // namespace binext
