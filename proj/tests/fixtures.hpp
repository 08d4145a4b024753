// Seeded generators shared by the unit and acceptance tests.
#pragma once

#include "binext/binarization.hpp"
#include "binext/extended_formulation.hpp"
#include "binext/hypercube.hpp"
#include "binext/random.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace binext;

inline Rational q(long p, long r = 1) { return make_rational(p, r); }

/// Box [0, hi]^dim cut by random rows through a neighbourhood of the centre,
/// optionally with one equation through the centre.
inline HPolytope random_hpolytope(Rng& rng, std::size_t dim, std::size_t rows, bool with_equation = false)
{
    std::vector<LinearRow> ineqs, eqs;
    const long hi = 4;
    for (std::size_t i = 0; i < dim; ++i) {
        QVector lo(dim, Rational(0)), up(dim, Rational(0));
        lo[i] = -1;
        up[i] = 1;
        ineqs.push_back({lo, Rational(0)});
        ineqs.push_back({up, Rational(hi)});
    }
    const QVector centre(dim, make_rational(hi, 2));
    auto random_row = [&] {
        QVector a(dim);
        bool nonzero = false;
        while (!nonzero)
            for (auto& x : a) {
                x = rng.between(-3, 3);
                nonzero = nonzero || x != 0;
            }
        return a;
    };
    while (ineqs.size() < rows) {
        QVector a = random_row();
        Rational b = 0;
        for (std::size_t i = 0; i < dim; ++i) b += a[i] * centre[i];
        b += make_rational(rng.between(0, 6), 2);
        ineqs.push_back({std::move(a), b});
    }
    if (with_equation) {
        QVector a = random_row();
        Rational b = 0;
        for (std::size_t i = 0; i < dim; ++i) b += a[i] * centre[i];
        eqs.push_back({std::move(a), b});
    }
    return HPolytope(dim, std::move(ineqs), std::move(eqs));
}

inline Binarization random_natural_binarization(Rng& rng, std::size_t max_d)
{
    while (true) {
        const long kind = rng.between(0, 4);
        const auto d = static_cast<unsigned>(rng.between(1, static_cast<long>(std::min<std::size_t>(max_d, 3))));
        switch (kind) {
        case 0: return make_unary(d);
        case 1: return make_full(d);
        case 2: return make_log(d);
        case 3:
            if (d < 2) continue;
            return make_trunc_log(static_cast<unsigned>(rng.between((1L << (d - 1)) + 1, (1L << d) - 1)), d);
        default:
            if (d < 2) continue;
            return make_hypercube(random_perm(d, rng));
        }
    }
}

struct Instance
{
    std::string name;
    ExtendedFormulation e;
};

/// n <= 3, p <= 2, total dimension <= max_total; binarized ranges fit each k.
inline Instance random_instance(Rng& rng, std::size_t max_total = 10)
{
    const auto n = static_cast<std::size_t>(rng.between(1, 3));
    const auto p = static_cast<std::size_t>(rng.between(1, static_cast<long>(std::min<std::size_t>(2, n))));
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(i);
    rng.shuffle(cols);
    cols.resize(p);
    std::vector<Binarization> bins;
    std::size_t total = n;
    for (std::size_t b = 0; b < p; ++b) {
        const std::size_t room = max_total - total - (p - b - 1);
        bins.push_back(random_natural_binarization(rng, room));
        total += bins.back().d();
    }
    std::vector<long> ub(n, 3);
    for (std::size_t b = 0; b < p; ++b) ub[cols[b]] = bins[b].k();

    std::vector<LinearRow> ineqs;
    QVector centre(n);
    for (std::size_t i = 0; i < n; ++i) {
        QVector lo(n, Rational(0)), up(n, Rational(0));
        lo[i] = -1;
        up[i] = 1;
        ineqs.push_back({lo, Rational(0)});
        ineqs.push_back({up, Rational(ub[i])});
        centre[i] = make_rational(ub[i], 2);
    }
    const long cuts = rng.between(1, 3);
    for (long c = 0; c < cuts; ++c) {
        QVector a(n);
        bool nonzero = false;
        while (!nonzero)
            for (auto& x : a) {
                x = rng.between(-3, 3);
                nonzero = nonzero || x != 0;
            }
        Rational b = 0;
        for (std::size_t i = 0; i < n; ++i) b += a[i] * centre[i];
        b += make_rational(rng.between(0, 4), 3);
        ineqs.push_back({std::move(a), b});
    }
    std::string name = "n=" + std::to_string(n);
    for (std::size_t b = 0; b < p; ++b)
        name += " x" + std::to_string(cols[b] + 1) + ":" + to_string(bins[b].kind()) + "(" + std::to_string(bins[b].d()) + ")";
    return {name, build(HPolytope(n, std::move(ineqs)), cols, std::move(bins))};
}

}  // namespace fixtures
