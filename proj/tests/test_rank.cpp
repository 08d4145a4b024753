#include "fixtures.hpp"
#include "kind_of.hpp"
#include "oracles.hpp"

#include "binext/hypercube.hpp"
#include "binext/pyramid.hpp"
#include "binext/rank.hpp"
#include "binext/set_cover.hpp"

#include <doctest.h>

using namespace binext;
using fixtures::q;

TEST_CASE("alpha edges")
{
    const auto u = alpha_edges(make_unary(3), 1);
    CHECK(u.size() == 4);
    for (const auto& e : u) {
        CHECK(e.endpoints.first[0] <= 1);
        CHECK(e.endpoints.second[0] >= 2);
        CHECK(e.t[1] == 1);  // every interval contains position 2
        // consecutive ones
        const auto first = std::find(e.t.begin(), e.t.end(), 1);
        const auto last = std::find(e.t.rbegin(), e.t.rend(), 1).base();
        CHECK(std::all_of(first, last, [](int x) { return x == 1; }));
    }

    const auto f = alpha_edges(make_full(3), 0);
    CHECK(f.size() == 3);
    std::vector<std::vector<int>> ts;
    for (const auto& e : f) ts.push_back(e.t);
    std::sort(ts.begin(), ts.end());
    CHECK(ts == std::vector<std::vector<int>>{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});

    const auto l = alpha_edges(make_log(2), 0);
    CHECK(l.size() == 2);
    CHECK(set_cover_min(alpha_edge_instance(make_log(2), {0})).value == 2);

    CHECK(kind_of([] { alpha_edges(make_non_natural_pair(), 0); }) == ErrorKind::NonNaturalBinarization);
    CHECK(kind_of([] { alpha_edges(make_unary(2), 2); }) == ErrorKind::RangeViolation);
}

TEST_CASE("exact set cover")
{
    const SetCoverInstance pyramid_rows{4,
                                 {{1, 0, 1, 0}, {1, 0, 1, 1}, {1, 1, 1, 0}, {1, 1, 1, 1}, {1, 1, 0, 0},
                                  {0, 0, 1, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}}};
    const auto r = set_cover_min(pyramid_rows);
    CHECK(r.value == 2);
    CHECK(r.cover == std::vector<std::size_t>{0, 2});
    CHECK(is_cover(pyramid_rows, r.cover));

    SetCoverInstance id{5, {}};
    for (std::size_t i = 0; i < 5; ++i) {
        id.rows.emplace_back(5, 0);
        id.rows.back()[i] = 1;
    }
    CHECK(set_cover_min(id).value == 5);
    CHECK(set_cover_min({3, {}}).value == 0);
    CHECK(kind_of([] { set_cover_min({2, {{1, 0}, {0, 0}}}); }) == ErrorKind::InfeasibleRow);

    Rng rng(21);
    for (int t = 0; t < 200; ++t) {
        SetCoverInstance inst{6, {}};
        const auto rows = rng.between(1, 8);
        for (long i = 0; i < rows; ++i) {
            std::vector<int> row(6, 0);
            while (std::count(row.begin(), row.end(), 1) == 0)
                for (auto& x : row) x = rng.below(3) == 0;
            inst.rows.push_back(row);
        }
        const auto sc = set_cover_min(inst);
        CHECK(sc.value == oracle::exhaustive_cover(6, inst.rows));
        CHECK(is_cover(inst, sc.cover));
        CHECK(static_cast<long>(sc.cover.size()) == sc.value);
    }
}

TEST_CASE("skeleton and direct ranks")
{
    CHECK(rank_skeleton(make_unary(4), {1, 2}) == 2);
    CHECK(rank_skeleton(make_full(4), {1, 2}) == 3);
    const Binarization tri = make_custom(VPolytope(3, {{q(1), q(0), q(0)}, {q(0), q(1), q(0)}, {q(2), q(0), q(1)}}), 2);
    CHECK(rank_skeleton(tri, {0}) == 1);
    CHECK(rank_direct(make_log(3), {3}) == 1);
    CHECK(rank_direct(make_unary(2), {0}) == 1);

    for (const Binarization& b : {make_unary(3), make_full(3), make_log(3), make_trunc_log(6, 3), tri})
        for (long a = 0; a < b.k(); ++a) {
            CHECK(rank_direct(b, {a}) == rank_direct(b, {a}, q(1, 3)));
            CHECK(slice_rows(b, {a}) == slice_rows(b, {a}, q(1, 3)));
            CHECK(rank_direct(b, {a}) == rank_skeleton(b, {a}));
        }
    CHECK(kind_of([] { rank_direct(make_log(2), {0}, q(1)); }) == ErrorKind::RangeViolation);
    CHECK(kind_of([] { rank_skeleton(make_log(2), {}); }) == ErrorKind::RangeViolation);
}

TEST_CASE("rank formulas")
{
    CHECK(rank_unary_formula(4, {1, 2}) == 2);
    CHECK(rank_unary_formula(5, {3}) == 1);
    CHECK(rank_unary_formula(4, {1, 1, 2}) == 2);
    CHECK(rank_full_formula(4, {1, 2}) == 3);
    CHECK(rank_full_formula(3, {0}) == 3);
    CHECK(rank_full_formula(3, {2}) == 1);
    CHECK(kind_of([] { rank_unary_formula(3, {3}); }) == ErrorKind::RangeViolation);

    CHECK(f_log(3) == 2);
    CHECK(rank_log_formula(3, {3}) == 1);
    for (long a = 0; a <= 6; a += 2) CHECK(rank_log_formula(3, {a}) == 3);
    CHECK(rank_log_formula(3, {1, 5}) == 2);
    for (long a = 0; a < 1000; ++a) CHECK(f_log(a) == f_log_bits(a));
    CHECK(kind_of([] { rank_log_formula(3, {7}); }) == ErrorKind::RangeViolation);

    CHECK(rank_trunc(3, 2, 0) == 2);
    CHECK(rank_trunc(6, 3, 1) == 2);
    CHECK(rank_trunc(6, 3, 4) == 2);
    CHECK(kind_of([] { rank_trunc(6, 3, 5); }) == ErrorKind::RangeViolation);
    CHECK(kind_of([] { rank_trunc(4, 3, 0); }) == ErrorKind::RangeViolation);
}

TEST_CASE("truncated closed form against the recursion")
{
    const TruncClosedForm cf = rank_trunc_closed_form(6, 3, 4);
    CHECK(cf.j == 2);
    CHECK(cf.s == 1);
    CHECK(cf.alpha_tilde == 0);
    CHECK(cf.d_tilde == 1);
    CHECK(cf.value == 2);
    long disagreements = 0;
    for (unsigned d = 1; d <= 8; ++d)
        for (unsigned v = (1U << (d - 1)) + 1; v <= (1U << d); ++v)
            for (long a = 0; a + 2 <= static_cast<long>(v); ++a)
                disagreements += rank_trunc_closed_form(v, d, a).value != rank_trunc(v, d, a);
    CHECK(disagreements == 0);
}

TEST_CASE("combinatorial hypercube rank")
{
    CHECK(hypercube_rank(HypercubePerm::log_encoding(3), {3}) == 1);
    CHECK(hypercube_rank(HypercubePerm(2, {0, 2, 1, 3}), {0}) == 2);
    for (unsigned d = 1; d <= 4; ++d)
        for (long a = 0; a <= (1L << d) - 2; ++a)
            CHECK(hypercube_rank(HypercubePerm::log_encoding(d), {a}) == rank_log_formula(d, {a}));

    Rng rng(1);
    for (int t = 0; t < 20; ++t) {
        const CutFamily cf = cut_family(random_perm(3, rng), {2, 5});
        CHECK(type_cuts_partition(cf));
        CHECK(cf.alpha_cuts.size() == 2);
    }
    CHECK(kind_of([] { hypercube_rank(HypercubePerm::log_encoding(2), {3}); }) == ErrorKind::RangeViolation);
}

TEST_CASE("log encoding is best")
{
    const LogBestReport r2 = verify_logbest(2, {1}, LogBestMode::all());
    CHECK(r2.checked == 24);
    CHECK(r2.min_rank == 1);
    CHECK(r2.log_rank == 1);
    CHECK(r2.violations == 0);

    const LogBestReport r3 = verify_logbest(3, {3}, LogBestMode::all());
    CHECK(r3.checked == 40320);
    CHECK(r3.min_rank == 1);
    CHECK(r3.log_encoding_rank == 1);
    CHECK(r3.matching_violations == 0);

    const LogBestReport r4 = verify_logbest(4, {7}, LogBestMode::sample(10000, 9));
    CHECK(r4.checked == 10000);
    CHECK(r4.min_rank >= 1);
    CHECK(r4.violations == 0);
    const LogBestReport again = verify_logbest(4, {7}, LogBestMode::sample(10000, 9));
    CHECK(again.histogram == r4.histogram);
    CHECK(kind_of([] { verify_logbest(4, {1}, LogBestMode::all()); }) == ErrorKind::RangeViolation);
}

TEST_CASE("seeded permutations are reproducible")
{
    CHECK(random_perm(4, 123) == random_perm(4, 123));
    CHECK(random_perm(3, 5).table() == random_perm(3, 5).table());
    Rng a(1), b(1);
    for (int i = 0; i < 100; ++i) CHECK(a.below(7) == b.below(7));
}

TEST_CASE("property rank")
{
    const ExtendedFormulation e = pyramid_formulation(q(3));
    const VPolytope vq = vertices_Q(e);
    const PropertyRank r = property_rank(e, vq, 0, {0});
    CHECK(r.value == 1);
    CHECK(r.cover == std::vector<std::size_t>{3});
    CHECK(r.instance.rows.size() == 6);
    CHECK(r.dropped.empty());
    REQUIRE(r.skeleton);
    CHECK(r.agree);

    const PropertyRank two = property_rank(e, vq, 0, {0, 1});
    CHECK(two.value == 1);
    CHECK(two.dropped == std::vector<long>{1});
    CHECK_FALSE(two.skeleton);

    const ExtendedFormulation flat = build(HPolytope(1, {{{q(-1)}, q(0)}, {{q(1)}, q(3)}}), {0}, {make_log(2)});
    const PropertyRank none = property_rank(flat, vertices_Q(flat), 0, {1});
    CHECK(none.value == 0);

    Rng rng(44);
    for (int t = 0; t < 10; ++t) {
        const auto inst = fixtures::random_instance(rng, 8);
        const VPolytope v = vertices_Q(inst.e);
        for (std::size_t b = 0; b < inst.e.p(); ++b)
            for (long a = 0; a < inst.e.bins[b].k(); ++a) {
                const PropertyRank pr = property_rank(inst.e, v, b, {a});
                if (pr.skeleton) CHECK(pr.agree);
            }
    }
}
