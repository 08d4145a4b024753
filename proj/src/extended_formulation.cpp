#include "binext/extended_formulation.hpp"

#include "binext/errors.hpp"
#include "binext/geometry.hpp"
#include "binext/linalg.hpp"

#include <algorithm>

namespace binext {

std::vector<std::size_t> ExtendedFormulation::y_columns() const
{
    std::vector<std::size_t> cols;
    for (std::size_t b = 0; b < bins.size(); ++b) {
        auto block = y_columns(b);
        cols.insert(cols.end(), block.begin(), block.end());
    }
    return cols;
}

std::vector<std::size_t> ExtendedFormulation::y_columns(std::size_t block) const
{
    std::vector<std::size_t> cols;
    for (std::size_t j = 0; j < bins.at(block).d(); ++j) cols.push_back(y_offset[block] + j);
    return cols;
}

std::vector<std::size_t> ExtendedFormulation::x_columns() const
{
    std::vector<std::size_t> cols(n());
    for (std::size_t i = 0; i < cols.size(); ++i) cols[i] = i;
    return cols;
}

std::string ExtendedFormulation::column_name(std::size_t col) const
{
    for (const auto& [name, c] : index_map)
        if (c == col) return name;
    return "?";
}

ExtendedFormulation build(const HPolytope& P, std::vector<std::size_t> binarized, std::vector<Binarization> bins)
{
    if (binarized.size() != bins.size())
        throw Error(ErrorKind::DimensionMismatch, "one binarization is needed per binarized variable");
    const std::size_t n = P.dim();
    auto pv = enumerate_vertices(P);
    for (std::size_t b = 0; b < bins.size(); ++b) {
        const std::size_t col = binarized[b];
        if (col >= n) throw Error(ErrorKind::DimensionMismatch, "binarized variable out of range");
        if (std::count(binarized.begin(), binarized.end(), col) > 1)
            throw Error(ErrorKind::DimensionMismatch, "variable binarized twice");
        for (const auto& v : pv.vertices())
            if (v[col] < 0 || v[col] > bins[b].k())
                throw Error(ErrorKind::RangeMismatch, "x" + std::to_string(col + 1) + " reaches " + to_string(v[col]) +
                                                          " outside [0, " + std::to_string(bins[b].k()) + "]");
    }

    ExtendedFormulation e;
    e.P = P;
    e.binarized = std::move(binarized);
    e.bins = std::move(bins);
    std::size_t total = n;
    for (const auto& b : e.bins) {
        e.y_offset.push_back(total);
        total += b.d();
    }
    for (std::size_t i = 0; i < n; ++i) e.index_map["x" + std::to_string(i + 1)] = i;
    for (std::size_t b = 0; b < e.bins.size(); ++b)
        for (std::size_t j = 0; j < e.bins[b].d(); ++j)
            e.index_map["y" + std::to_string(e.binarized[b] + 1) + "_" + std::to_string(j + 1)] = e.y_offset[b] + j;

    auto lift = [&](const QVector& a, std::size_t x_col, std::size_t offset) {
        QVector row(total, Rational(0));
        row[x_col] = a[0];
        for (std::size_t j = 1; j < a.size(); ++j) row[offset + j - 1] = a[j];
        return row;
    };
    std::vector<LinearRow> ineqs, eqs;
    for (const auto& r : P.ineqs()) {
        QVector a = r.a;
        a.resize(total, Rational(0));
        ineqs.push_back({std::move(a), r.b});
    }
    for (const auto& r : P.eqs()) {
        QVector a = r.a;
        a.resize(total, Rational(0));
        eqs.push_back({std::move(a), r.b});
    }
    for (std::size_t b = 0; b < e.bins.size(); ++b) {
        const auto& body = e.bins[b].body();
        for (const auto& r : body.ineqs()) ineqs.push_back({lift(r.a, e.binarized[b], e.y_offset[b]), r.b});
        for (const auto& r : body.eqs()) eqs.push_back({lift(r.a, e.binarized[b], e.y_offset[b]), r.b});
    }
    e.Q = HPolytope(total, std::move(ineqs), std::move(eqs));
    return e;
}

VPolytope vertices_Q(const ExtendedFormulation& e, std::size_t limit_dim)
{
    if (e.total_dim() > limit_dim)
        throw Error(ErrorKind::SizeLimitExceeded, "Q has " + std::to_string(e.total_dim()) + " columns, limit is " +
                                                      std::to_string(limit_dim));
    return enumerate_vertices(e.Q);
}

namespace {

void require_natural(const ExtendedFormulation& e)
{
    for (std::size_t b = 0; b < e.bins.size(); ++b)
        if (!e.bins[b].classification().natural)
            throw Error(ErrorKind::NonNaturalBinarization, "binarization of x" + std::to_string(e.binarized[b] + 1) +
                                                               " is not natural");
}

/// aff(F) ∩ G_{I,alpha} as a unique point lying in F, if it is one.
std::optional<QVector> singleton(const ExtendedFormulation& e, const Face& f, const Fixing& fix)
{
    const std::size_t n = e.n();
    linalg::QMatrix rows;
    QVector rhs;
    for (const auto& r : e.P.eqs()) {
        rows.push_back(r.a);
        rhs.push_back(r.b);
    }
    for (auto t : f.tight) {
        rows.push_back(e.P.ineqs()[t].a);
        rhs.push_back(e.P.ineqs()[t].b);
    }
    for (std::size_t j = 0; j < fix.I.size(); ++j) {
        QVector a(n, Rational(0));
        a[e.binarized[fix.I[j]]] = 1;
        rows.push_back(std::move(a));
        rhs.push_back(Rational(fix.alpha[j]));
    }
    auto x = linalg::solve_unique(rows, rhs, n);
    if (!x || !e.P.contains(*x)) return std::nullopt;
    return x;
}

/// Calls fn on every size-q subset of {0..p-1}, in lexicographic order; stops when fn returns true.
template <typename Fn>
bool for_each_subset(std::size_t p, std::size_t q, Fn&& fn)
{
    if (q > p) return false;
    std::vector<std::size_t> idx(q);
    for (std::size_t i = 0; i < q; ++i) idx[i] = i;
    while (true) {
        if (fn(idx)) return true;
        std::size_t i = q;
        while (i > 0 && idx[i - 1] == p - q + i - 1) --i;
        if (i == 0) return false;
        ++idx[i - 1];
        for (std::size_t j = i; j < q; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::vector<QVector> characterize_projection(const ExtendedFormulation& e, NaturalityCheck check)
{
    if (check == NaturalityCheck::Enforce) require_natural(e);
    const std::size_t p = e.p();
    auto pv = enumerate_vertices(e.P);
    std::vector<QVector> found;
    for (const auto& f : faces(e.P, pv, static_cast<int>(p))) {
        const auto q = static_cast<std::size_t>(f.dimension);
        for_each_subset(p, q, [&](const std::vector<std::size_t>& I) {
            // integer range of each fixed coordinate over F
            std::vector<long> lo(q), hi(q);
            for (std::size_t j = 0; j < q; ++j) {
                const std::size_t col = e.binarized[I[j]];
                Rational mn = f.vertices[0][col], mx = mn;
                for (const auto& v : f.vertices) {
                    mn = std::min(mn, v[col]);
                    mx = std::max(mx, v[col]);
                }
                lo[j] = std::max<long>(0, ceil_of(mn).get_si());
                hi[j] = std::min<long>(e.bins[I[j]].k(), floor_of(mx).get_si());
                if (lo[j] > hi[j]) return false;
            }
            Fixing fix{I, lo};
            while (true) {
                if (auto x = singleton(e, f, fix)) found.push_back(std::move(*x));
                std::size_t j = 0;
                while (j < q && ++fix.alpha[j] > hi[j]) fix.alpha[j] = lo[j], ++j;
                if (j == q) break;
            }
            return false;
        });
    }
    return canonical_points(std::move(found));
}

VertexWitness verify_vertex_conditions(const ExtendedFormulation& e, const QVector& vertex)
{
    require_natural(e);
    if (vertex.size() != e.total_dim()) throw Error(ErrorKind::DimensionMismatch, "vertex has wrong dimension");
    QVector x(vertex.begin(), vertex.begin() + static_cast<std::ptrdiff_t>(e.n()));
    Face f = minimal_face(e.P, x);
    const auto q = static_cast<std::size_t>(f.dimension);

    auto block_point = [&](std::size_t b) {
        QVector pt{x[e.binarized[b]]};
        for (auto c : e.y_columns(b)) pt.push_back(vertex[c]);
        return pt;
    };

    std::vector<std::size_t> integral;
    for (std::size_t b = 0; b < e.p(); ++b) {
        const Rational& xi = x[e.binarized[b]];
        if (is_integer(xi) && xi >= 0 && xi <= e.bins[b].k()) integral.push_back(b);
    }

    VertexWitness witness;
    bool ok = for_each_subset(integral.size(), q, [&](const std::vector<std::size_t>& pick) {
        Fixing fix;
        for (auto i : pick) {
            fix.I.push_back(integral[i]);
            fix.alpha.push_back(x[e.binarized[integral[i]]].get_num().get_si());
        }
        auto point = singleton(e, f, fix);
        if (!point || *point != x) return false;
        for (std::size_t b = 0; b < e.p(); ++b) {
            const bool fixed = std::find(fix.I.begin(), fix.I.end(), b) != fix.I.end();
            const QVector pt = block_point(b);
            const Binarization& bin = e.bins[b];
            if (fixed ? !bin.vertices().contains_vertex(pt) : !slice(bin.body(), 0, pt[0]).contains_vertex(pt))
                return false;
        }
        witness.face = f;
        witness.fixing = std::move(fix);
        return true;
    });
    if (!ok) throw Error(ErrorKind::NoWitness, "no face/fixing witness for vertex " + to_string(vertex));
    return witness;
}

VPolytope sequential_convexify(const VPolytope& vq, const std::vector<std::size_t>& yvars)
{
    VPolytope current = vq;
    for (auto y : yvars) current = convexify_binary(current, y);
    return current;
}

VPolytope sequential_convexify(const ExtendedFormulation& e, const std::vector<std::size_t>& yvars,
                               std::size_t limit_dim)
{
    for (auto y : yvars)
        if (y < e.n() || y >= e.total_dim()) throw Error(ErrorKind::DimensionMismatch, "not a y column");
    return sequential_convexify(vertices_Q(e, limit_dim), yvars);
}

LprReport lpr(const ExtendedFormulation& e, const VPolytope& vq)
{
    LprReport r;
    const auto ycols = e.y_columns();
    r.rank = lift_and_project_rank(vq.vertices(), ycols);
    r.after = sequential_convexify(vq, r.rank.cover);
    r.certified = std::all_of(r.after.vertices().begin(), r.after.vertices().end(), [&](const QVector& v) {
        return std::all_of(ycols.begin(), ycols.end(), [&](std::size_t c) { return is_binary(v[c]); });
    });
    return r;
}

LprReport lpr(const ExtendedFormulation& e, std::size_t limit_dim) { return lpr(e, vertices_Q(e, limit_dim)); }

std::set<std::pair<std::size_t, Integer>> hit_intervals(const std::vector<QVector>& vertices,
                                                        const std::vector<std::size_t>& x_cols)
{
    std::set<std::pair<std::size_t, Integer>> hits;
    for (const auto& v : vertices)
        for (auto c : x_cols)
            if (!is_integer(v[c])) hits.emplace(c, floor_of(v[c]));
    return hits;
}

void check_persistency(const ExtendedFormulation& e, const VPolytope& vq, std::size_t yvar)
{
    const auto before = hit_intervals(vq.vertices(), e.binarized);
    const auto after = hit_intervals(convexify_binary(vq, yvar).vertices(), e.binarized);
    for (const auto& h : after)
        if (!before.count(h))
            throw Error(ErrorKind::PersistencyViolation, "interval (" + h.second.get_str() + ", " +
                                                             Integer(h.second + 1).get_str() + ") of x" +
                                                             std::to_string(h.first + 1) + " opened by convexification");
}

}  // namespace binext
