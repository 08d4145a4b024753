#include "fixtures.hpp"
#include "kind_of.hpp"
#include "oracles.hpp"

#include "binext/geometry.hpp"
#include "binext/pyramid.hpp"

#include <doctest.h>

using namespace binext;
using fixtures::q;

namespace {

HPolytope interval(long hi)
{
    return HPolytope(1, {{{q(-1)}, q(0)}, {{q(1)}, q(hi)}});
}

HPolytope point(const QVector& p)
{
    std::vector<LinearRow> eqs;
    for (std::size_t i = 0; i < p.size(); ++i) {
        QVector a(p.size(), q(0));
        a[i] = 1;
        eqs.push_back({a, p[i]});
    }
    return HPolytope(p.size(), {}, eqs);
}

}  // namespace

TEST_CASE("building the pyramid formulation")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    CHECK(e.total_dim() == 7);
    CHECK(e.index_map.at("y2_1") == 5);
    CHECK(e.column_name(4) == "y1_2");
    CHECK(e.y_columns() == std::vector<std::size_t>{3, 4, 5, 6});
    CHECK(kind_of([] { build(make_pyramid(q(3)), {0}, {make_unary(1)}); }) == ErrorKind::RangeMismatch);
    CHECK(kind_of([] { build(make_pyramid(q(3)), {0, 0}, {make_unary(2), make_unary(2)}); }) ==
          ErrorKind::DimensionMismatch);
}

TEST_CASE("vertices of Q")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    const VPolytope vq = vertices_Q(e);
    CHECK(vq.size() == 16);
    CHECK(vq.vertices() == canonical_points(pyramid_expected(q(3)).vq));
    CHECK(kind_of([&] { vertices_Q(e, 6); }) == ErrorKind::SizeLimitExceeded);

    SUBCASE("identity case")
    {
        const ExtendedFormulation id = build(interval(3), {0}, {make_log(2)});
        CHECK(vertices_Q(id) == make_log(2).vertices());
    }
    SUBCASE("integer point: the binary lifts")
    {
        const ExtendedFormulation pt = build(point({q(2), q(1)}), {0, 1}, {make_unary(2), make_log(1)});
        CHECK(vertices_Q(pt).vertices() == std::vector<QVector>{{q(2), q(1), q(1), q(1), q(1)}});
    }
    SUBCASE("random instances against the basis oracle")
    {
        Rng rng(2);
        for (int t = 0; t < 6; ++t) {
            const auto inst = fixtures::random_instance(rng, 7);
            CHECK(vertices_Q(inst.e).vertices() == oracle::basis_vertices(inst.e.Q));
        }
    }
}

TEST_CASE("projection characterization")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    const auto ch = characterize_projection(e);
    CHECK(ch == canonical_points(pyramid_expected(q(3)).proj));

    const ExtendedFormulation l = build(make_pyramid(q(3)), {0, 1}, {make_trunc_log(3, 2), make_log(2)});
    CHECK(characterize_projection(l) == ch);
    CHECK(project_points(vertices_Q(l).vertices(), l.x_columns()) == ch);

    const ExtendedFormulation nn = build(make_pyramid(q(3)), {0, 1}, {make_non_natural_pair(), make_non_natural_pair()});
    CHECK(kind_of([&] { characterize_projection(nn); }) == ErrorKind::NonNaturalBinarization);

    SUBCASE("projection contains V(P) and the integer points when every variable is binarized")
    {
        const auto proj = project_points(vertices_Q(e).vertices(), e.x_columns());
        for (const auto& v : enumerate_vertices(e.P).vertices())
            CHECK(std::binary_search(proj.begin(), proj.end(), v));
        const ExtendedFormulation box =
            build(fixtures::random_hpolytope(*std::make_unique<Rng>(4), 2, 5), {0, 1}, {make_unary(4), make_log(3)});
        const auto bproj = project_points(vertices_Q(box).vertices(), box.x_columns());
        for (long a = 0; a <= 4; ++a)
            for (long b = 0; b <= 4; ++b) {
                const QVector x{q(a), q(b)};
                if (box.P.contains(x)) CHECK(std::binary_search(bproj.begin(), bproj.end(), x));
            }
    }
}

TEST_CASE("vertex witnesses")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    const VertexWitness apex = verify_vertex_conditions(e, {q(1, 2), q(1, 2), q(3), q(1, 2), q(0), q(1, 2), q(0)});
    CHECK(apex.face.dimension == 0);
    CHECK(apex.fixing.I.empty());

    const VertexWitness w = verify_vertex_conditions(e, {q(1), q(1, 3), q(2), q(1), q(0), q(1, 3), q(0)});
    CHECK(w.face.dimension == 1);
    CHECK(w.fixing.I == std::vector<std::size_t>{0});
    CHECK(w.fixing.alpha == std::vector<long>{1});
    CHECK(w.face.vertices == std::vector<QVector>{{q(1, 2), q(1, 2), q(3)}, {q(2), q(0), q(0)}});

    for (const auto& v : vertices_Q(e).vertices()) CHECK_NOTHROW(verify_vertex_conditions(e, v));

    // a non-vertex of Q has no witness
    CHECK(kind_of([&] { verify_vertex_conditions(e, {q(1, 2), q(1, 2), q(3), q(3, 8), q(1, 8), q(1, 2), q(0)}); }) ==
          ErrorKind::NoWitness);

    Rng rng(6);
    for (int t = 0; t < 8; ++t) {
        const auto inst = fixtures::random_instance(rng, 8);
        for (const auto& v : vertices_Q(inst.e).vertices()) CHECK_NOTHROW(verify_vertex_conditions(inst.e, v));
    }
}

TEST_CASE("sequential convexification and lift-and-project rank")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    const VPolytope vq = vertices_Q(e);
    const VPolytope after = sequential_convexify(vq, {3, 5});
    for (const auto& v : after.vertices()) {
        CHECK(is_integer(v[0]));
        CHECK(is_integer(v[1]));
    }
    CHECK(sequential_convexify(vq, {5, 3}) == after);
    CHECK(sequential_convexify(after, {3}) == after);
    CHECK(sequential_convexify(vq, e.y_columns()).vertices() == oracle::binary_slice_vertices(e.Q, e.y_columns()));

    const LprReport r = lpr(e);
    CHECK(r.rank.value == 2);
    CHECK(r.rank.cover == std::vector<std::size_t>{3, 5});
    CHECK(r.certified);
    CHECK(r.rank.instance.rows.size() == 10);

    const ExtendedFormulation integral = build(interval(3), {0}, {make_log(2)});
    CHECK(lpr(integral).rank.value == 0);
    CHECK(lpr(integral).rank.instance.rows.empty());

    SUBCASE("value equals the exhaustive subset oracle")
    {
        Rng rng(12);
        for (int t = 0; t < 12; ++t) {
            const auto inst = fixtures::random_instance(rng, 9);
            const VPolytope v = vertices_Q(inst.e);
            const auto cols = inst.e.y_columns();
            if (cols.size() > 8) continue;
            const LprReport lr = lpr(inst.e, v);
            CHECK(lr.rank.value == oracle::exhaustive_lpr(v.vertices(), cols));
            CHECK(lr.certified);
            // convexification never creates vertices
            for (const auto& x : lr.after.vertices()) CHECK(v.contains_vertex(x));
        }
    }
}

TEST_CASE("persistency of hit intervals")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    const VPolytope vq = vertices_Q(e);
    const auto hits = hit_intervals(vq.vertices(), e.binarized);
    CHECK(hits.size() == 2);
    for (auto y : e.y_columns()) CHECK_NOTHROW(check_persistency(e, vq, y));
    CHECK_NOTHROW(check_persistency(e, convexify_binary(vq, 3), 5));
    const ExtendedFormulation integral = build(interval(3), {0}, {make_log(2)});
    CHECK_NOTHROW(check_persistency(integral, vertices_Q(integral), 1));
}
