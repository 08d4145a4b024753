#include "fixtures.hpp"
#include "kind_of.hpp"
#include "oracles.hpp"

#include "binext/geometry.hpp"
#include "binext/hypercube.hpp"
#include "binext/pyramid.hpp"

#include <doctest.h>

#include <numeric>

using namespace binext;
using fixtures::q;

namespace {

using Points = std::vector<QVector>;

Points pts(std::initializer_list<std::initializer_list<long>> rows)
{
    Points out;
    for (const auto& r : rows) {
        QVector v;
        for (long x : r) v.push_back(q(x));
        out.push_back(std::move(v));
    }
    return canonical_points(std::move(out));
}

}  // namespace

TEST_CASE("bit strings")
{
    CHECK(to_bits(6, 3) == BitString{0, 1, 1});
    CHECK(from_bits({1, 0, 1}) == 5);
}

TEST_CASE("unary")
{
    CHECK(make_unary(2).vertices().vertices() == pts({{0, 0, 0}, {1, 1, 0}, {2, 1, 1}}));
    CHECK(make_unary(1).vertices().vertices() == pts({{0, 0}, {1, 1}}));
    const Binarization u4 = make_unary(4);
    CHECK(u4.vertices().size() == 5);
    CHECK(skeleton(u4.body(), u4.vertices()).edges.size() == 10);
    CHECK(u4.k() == 4);
}

TEST_CASE("full")
{
    CHECK(make_full(3).vertices().vertices() == pts({{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 0, 1, 0}, {3, 0, 0, 1}}));
    CHECK(make_full(1).vertices() == make_unary(1).vertices());
    const Binarization f4 = make_full(4);
    CHECK(skeleton(f4.body(), f4.vertices()).edges.size() == 10);
}

TEST_CASE("logarithmic")
{
    CHECK(make_log(2).vertices().vertices() == pts({{0, 0, 0}, {1, 1, 0}, {2, 0, 1}, {3, 1, 1}}));
    const Binarization l3 = make_log(3);
    CHECK(l3.vertices().size() == 8);
    CHECK(skeleton(l3.body(), l3.vertices()).edges.size() == 12);
    const auto& c = l3.classification();
    REQUIRE(c.affine);
    CHECK(c.affine->coeffs == QVector{q(1), q(2), q(4)});
    CHECK(c.affine->offset == 0);
    CHECK(c.linear);
    CHECK(c.hypercube);
}

TEST_CASE("truncated logarithmic")
{
    CHECK(make_trunc_log(4, 2).vertices() == make_log(2).vertices());
    CHECK(make_trunc_log(3, 2).vertices().vertices() == pts({{0, 0, 0}, {1, 1, 0}, {2, 0, 1}}));
    const Binarization t = make_trunc_log(6, 3);
    CHECK(t.vertices().size() == 6);
    // every cube edge between surviving vertices stays an edge
    const SkeletonGraph g = skeleton(t.body(), t.vertices());
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j) {
            int diff = 0;
            for (std::size_t k = 1; k <= 3; ++k) diff += g.nodes[i][k] != g.nodes[j][k];
            if (diff == 1) CHECK(g.adjacent(i, j));
        }
    CHECK(kind_of([] { make_trunc_log(4, 3); }) == ErrorKind::RangeViolation);
    CHECK(kind_of([] { make_trunc_log(5, 2); }) == ErrorKind::RangeViolation);
}

TEST_CASE("hypercube binarizations")
{
    CHECK(make_hypercube(HypercubePerm::log_encoding(3)).vertices() == make_log(3).vertices());
    const Binarization b = make_hypercube(HypercubePerm(2, {0, 2, 1, 3}));
    CHECK(b.k() == 3);
    CHECK(b.classification().perfect);
    CHECK(kind_of([] { HypercubePerm(2, {0, 1, 1, 3}); }) == ErrorKind::NotBijective);
    CHECK(kind_of([] { HypercubePerm(2, {0, 1, 2}); }) == ErrorKind::NotBijective);

    SUBCASE("sampled d=3: perfect, affine only for log up to symmetry")
    {
        Rng rng(8);
        for (int t = 0; t < 15; ++t) {
            const HypercubePerm perm = random_perm(3, rng);
            const Binarization h = make_hypercube(perm);
            const auto& c = h.classification();
            CHECK(c.perfect);
            CHECK(c.hypercube);
            CHECK(c.affine.has_value() == oracle::log_up_to_symmetry(3, perm.table()));
        }
        // a symmetric image of the log encoding: swap bits and complement the first
        std::vector<unsigned> sigma(8);
        for (unsigned y = 0; y < 8; ++y) {
            const unsigned z = y ^ 1U;
            sigma[y] = ((z & 1U) << 1) | ((z >> 1) & 1U) | (z & 4U);
        }
        const Binarization s = make_hypercube(HypercubePerm(3, sigma));
        CHECK(s.classification().affine.has_value());
        CHECK(is_log_up_to_symmetry(HypercubePerm(3, sigma)));
        const auto normal = affine_normal_coefficients(s);
        REQUIRE(normal);
        CHECK(*normal == QVector{q(1), q(2), q(4)});
    }
}

TEST_CASE("custom binarizations")
{
    const Binarization tri = make_custom(VPolytope(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(2), q(0), q(1)}}), 2);
    const auto& c = tri.classification();
    CHECK(c.natural);
    CHECK(c.perfect);
    REQUIRE(c.affine);
    CHECK(c.affine->coeffs == QVector{q(-1), q(1)});
    CHECK(c.affine->offset == 1);
    CHECK_FALSE(c.linear);
    CHECK_FALSE(c.hypercube);

    const Binarization nn = make_non_natural_pair();
    CHECK(nn.k() == 2);
    CHECK(nn.vertices().size() == 4);
    CHECK(nn.vertices().contains_vertex({q(3, 2), q(1), q(1, 2)}));
    CHECK_FALSE(nn.classification().natural);
    CHECK_FALSE(nn.classification().integral);

    // x = 3 y1 reaches only {0, 3}
    const HPolytope stretch(2, {{{q(0), q(-1)}, q(0)}, {{q(0), q(1)}, q(1)}}, {{{q(1), q(-3)}, q(0)}});
    CHECK(kind_of([&] { make_custom(stretch, 3); }) == ErrorKind::NotABinarization);

    // k inferred from the binary-y vertices
    CHECK(make_custom(make_log(2).body()).k() == 3);
    CHECK(kind_of([] { make_custom(make_log(2).body(), 4); }) == ErrorKind::NotABinarization);

    // y outside the cube
    const HPolytope wide(2, {{{q(0), q(-1)}, q(0)}, {{q(0), q(1)}, q(2)}}, {{{q(1), q(-1)}, q(0)}});
    CHECK(kind_of([&] { make_custom(wide, 1); }) == ErrorKind::NotABinarization);
}

TEST_CASE("classical binarizations are perfect and affine")
{
    for (unsigned d = 1; d <= 4; ++d)
        for (const Binarization& b : {make_unary(d), make_full(d), make_log(d)}) {
            CHECK(b.classification().perfect);
            CHECK(b.classification().integral);
            CHECK(b.classification().exact);
            CHECK(b.classification().affine.has_value());
            CHECK_FALSE(b.classification().x_outside_range);
        }
    CHECK_FALSE(make_unary(3).classification().hypercube);
    CHECK(make_log(3).classification().hypercube);
}

TEST_CASE("perfect binarizations map x to one binary y")
{
    for (const Binarization& b : {make_unary(3), make_full(3), make_log(3), make_trunc_log(6, 3)}) {
        std::vector<QVector> ys;
        for (const auto& v : b.vertices().vertices()) ys.emplace_back(v.begin() + 1, v.end());
        CHECK(canonical_points(ys).size() == static_cast<std::size_t>(b.k() + 1));
    }
}

TEST_CASE("skeleton of the y-projection is a subgraph")
{
    for (const Binarization& b : {make_unary(3), make_full(3), make_log(3), make_trunc_log(5, 3)}) {
        const SkeletonGraph g = skeleton(b.body(), b.vertices());
        std::vector<QVector> ys;
        for (const auto& v : g.nodes) ys.emplace_back(v.begin() + 1, v.end());
        const std::size_t d = b.d();
        const HPolytope py = facet_hull(d, ys);
        const VPolytope pv = enumerate_vertices(py);
        const SkeletonGraph gy = skeleton(py, pv);
        std::size_t matched = 0;
        for (auto [i, j] : gy.edges) {
            const auto a = std::find(ys.begin(), ys.end(), gy.nodes[i]) - ys.begin();
            const auto c = std::find(ys.begin(), ys.end(), gy.nodes[j]) - ys.begin();
            CHECK(g.adjacent(static_cast<std::size_t>(std::min(a, c)), static_cast<std::size_t>(std::max(a, c))));
            ++matched;
        }
        // all four are affine, so the graphs coincide
        CHECK(matched == g.edges.size());
    }
}

TEST_CASE("linear binarizations onto a truncated cube")
{
    // the powers of two always work, and for d = 2 they are the only option
    for (unsigned d = 2; d <= 4; ++d)
        for (unsigned v = (1U << (d - 1)) + 1; v < (1U << d); ++v) {
            std::vector<long> powers(d);
            for (unsigned i = 0; i < d; ++i) powers[i] = 1L << i;
            const auto sols = linear_trunc_coefficients(v, d);
            CHECK(std::find(sols.begin(), sols.end(), powers) != sols.end());
            if (d == 2) CHECK(sols == std::vector<std::vector<long>>{{2, 1}, {1, 2}});
        }

    // From d = 3 on other coefficient vectors exist: x = y1 + 3 y2 + 2 y3 over the
    // first five cube vertices is a linear, perfect binarization of {0..4}.
    const auto sols = linear_trunc_coefficients(5, 3);
    CHECK(sols.size() == 4);
    CHECK(std::find(sols.begin(), sols.end(), std::vector<long>{1, 3, 2}) != sols.end());
    std::vector<QVector> pts;
    const Binarization t5 = make_trunc_log(5, 3);
    for (const auto& v : t5.vertices().vertices()) {
        QVector p = v;
        p[0] = p[1] + 3 * p[2] + 2 * p[3];
        pts.push_back(p);
    }
    const Binarization odd = make_custom(VPolytope(4, pts), 4);
    CHECK(odd.classification().perfect);
    CHECK(odd.classification().linear);
    CHECK(odd.classification().affine->coeffs == QVector{q(1), q(3), q(2)});
}
