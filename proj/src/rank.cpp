#include "binext/rank.hpp"

#include "binext/errors.hpp"
#include "binext/geometry.hpp"
#include "binext/hypercube.hpp"

#include <algorithm>
#include <set>

namespace binext {

namespace {

void require_natural(const Binarization& b)
{
    if (!b.classification().natural)
        throw Error(ErrorKind::NonNaturalBinarization, "binarization has a vertex with fractional x");
}

void check_alphas(const std::vector<long>& alphas, long hi, const char* what)
{
    if (alphas.empty()) throw Error(ErrorKind::RangeViolation, "at least one alpha is required");
    for (long a : alphas)
        if (a < 0 || a > hi)
            throw Error(ErrorKind::RangeViolation,
                        std::string(what) + ": alpha " + std::to_string(a) + " outside [0, " + std::to_string(hi) + "]");
}

std::vector<long> distinct(std::vector<long> alphas)
{
    std::sort(alphas.begin(), alphas.end());
    alphas.erase(std::unique(alphas.begin(), alphas.end()), alphas.end());
    return alphas;
}

unsigned ceil_log2(unsigned long v)
{
    unsigned t = 0;
    while ((1UL << t) < v) ++t;
    return t;
}

}  // namespace

std::vector<EdgeIndicator> alpha_edges(const Binarization& b, long alpha)
{
    require_natural(b);
    check_alphas({alpha}, b.k() - 1, "alpha_edges");
    const SkeletonGraph g = skeleton(b.body(), b.vertices());
    std::vector<EdgeIndicator> out;
    for (auto [i, j] : g.edges) {
        const QVector* lo = &g.nodes[i];
        const QVector* hi = &g.nodes[j];
        if ((*lo)[0] > (*hi)[0]) std::swap(lo, hi);
        if (!((*lo)[0] <= alpha && (*hi)[0] >= alpha + 1)) continue;
        EdgeIndicator e{{*lo, *hi}, std::vector<int>(b.d(), 1)};
        for (std::size_t k = 0; k < b.d(); ++k)
            if ((*lo)[k + 1] == (*hi)[k + 1] && is_binary((*lo)[k + 1])) e.t[k] = 0;
        out.push_back(std::move(e));
    }
    return out;
}

SetCoverInstance alpha_edge_instance(const Binarization& b, const std::vector<long>& alphas)
{
    require_natural(b);
    check_alphas(alphas, b.k() - 1, "rank");
    SetCoverInstance inst{b.d(), {}};
    for (long a : distinct(alphas))
        for (auto& e : alpha_edges(b, a)) inst.rows.push_back(std::move(e.t));
    return inst;
}

long rank_skeleton(const Binarization& b, const std::vector<long>& alphas)
{
    return set_cover_min(alpha_edge_instance(b, alphas)).value;
}

std::vector<std::vector<int>> slice_rows(const Binarization& b, const std::vector<long>& alphas, const Rational& offset)
{
    require_natural(b);
    check_alphas(alphas, b.k() - 1, "rank");
    if (offset <= 0 || offset >= 1) throw Error(ErrorKind::RangeViolation, "slice offset must lie in (0, 1)");
    std::vector<QVector> pts;
    for (long a : distinct(alphas)) {
        const VPolytope s = slice(b.body(), 0, Rational(a) + offset);
        pts.insert(pts.end(), s.vertices().begin(), s.vertices().end());
    }
    const VPolytope hull = hull_vertices(b.d() + 1, pts);
    std::vector<std::size_t> ycols(b.d());
    for (std::size_t k = 0; k < b.d(); ++k) ycols[k] = k + 1;
    auto lp = lift_and_project_rank(hull.vertices(), ycols);
    auto rows = lp.instance.rows;
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
    return rows;
}

long rank_direct(const Binarization& b, const std::vector<long>& alphas, const Rational& offset)
{
    return set_cover_min({b.d(), slice_rows(b, alphas, offset)}).value;
}

long rank_unary_formula(unsigned d, const std::vector<long>& alphas)
{
    check_alphas(alphas, static_cast<long>(d) - 1, "unary");
    return static_cast<long>(distinct(alphas).size());
}

long rank_full_formula(unsigned d, const std::vector<long>& alphas)
{
    check_alphas(alphas, static_cast<long>(d) - 1, "full");
    return static_cast<long>(d) - *std::min_element(alphas.begin(), alphas.end());
}

long f_log(long alpha)
{
    if (alpha < 0) throw Error(ErrorKind::RangeViolation, "alpha must be nonnegative");
    unsigned long a = static_cast<unsigned long>(alpha) + 1;
    long t = 0;
    while (a % 2 == 0) a /= 2, ++t;
    return t;
}

long f_log_bits(long alpha)
{
    if (alpha < 0) throw Error(ErrorKind::RangeViolation, "alpha must be nonnegative");
    long t = 0;
    while ((alpha >> t) & 1) ++t;
    return t;
}

long rank_log_formula(unsigned d, const std::vector<long>& alphas)
{
    if (d == 0 || d > 62) throw Error(ErrorKind::RangeViolation, "d must lie in [1, 62]");
    check_alphas(alphas, (1L << d) - 2, "log");
    long t = static_cast<long>(d);
    for (long a : alphas) {
        const long f = f_log(a);
        if (f != f_log_bits(a)) throw Error(ErrorKind::RangeViolation, "2-adic valuation and bit count disagree");
        t = std::min(t, f);
    }
    return static_cast<long>(d) - t;
}

namespace {

void check_trunc(unsigned v, unsigned d, long alpha)
{
    if (d == 0 || d > 62) throw Error(ErrorKind::RangeViolation, "d must lie in [1, 62]");
    if (!((1UL << (d - 1)) < v && v <= (1UL << d)))
        throw Error(ErrorKind::RangeViolation, "v must satisfy 2^(d-1) < v <= 2^d");
    if (alpha < 0 || alpha > static_cast<long>(v) - 2)
        throw Error(ErrorKind::RangeViolation, "alpha " + std::to_string(alpha) + " outside [0, v-2]");
}

}  // namespace

long rank_trunc(unsigned v, unsigned d, long alpha)
{
    check_trunc(v, d, alpha);
    const long half = 1L << (d - 1);
    if (alpha < half || v == (1UL << d)) return rank_log_formula(d, {alpha});
    const unsigned v2 = v - static_cast<unsigned>(half);
    return 1 + rank_trunc(v2, ceil_log2(v2), alpha - half);
}

TruncClosedForm rank_trunc_closed_form(unsigned v, unsigned d, long alpha)
{
    check_trunc(v, d, alpha);
    TruncClosedForm r;
    if (v == (1UL << d)) {
        r.j = d;
        r.alpha_tilde = alpha;
        r.d_tilde = d;
        r.value = rank_log_formula(d, {alpha});
        return r;
    }
    auto bit = [](unsigned long x, unsigned pos) { return (x >> (pos - 1)) & 1UL; };
    for (unsigned pos = d; pos >= 1; --pos)
        if (bit(v, pos) && !bit(static_cast<unsigned long>(alpha), pos)) {
            r.j = pos;
            break;
        }
    for (unsigned pos = r.j + 1; pos <= d; ++pos)
        if (bit(v, pos) && bit(static_cast<unsigned long>(alpha), pos)) ++r.s;
    const unsigned long mask = (1UL << r.j) - 1;
    r.alpha_tilde = static_cast<long>(static_cast<unsigned long>(alpha) & mask);
    r.d_tilde = ceil_log2(v & mask);
    r.value = r.s + rank_log_formula(r.d_tilde, {r.alpha_tilde});
    return r;
}

std::optional<long> rank_formula(const Binarization& b, const std::vector<long>& alphas)
{
    const auto d = static_cast<unsigned>(b.d());
    switch (b.kind()) {
    case BinarizationKind::Unary: return rank_unary_formula(d, alphas);
    case BinarizationKind::Full: return rank_full_formula(d, alphas);
    case BinarizationKind::Log: return rank_log_formula(d, alphas);
    case BinarizationKind::TruncLog:
        if (distinct(alphas).size() != 1) return std::nullopt;
        return rank_trunc(*b.trunc_v(), d, alphas.front());
    case BinarizationKind::Hypercube: return hypercube_rank(*b.perm(), alphas);
    case BinarizationKind::Custom: return std::nullopt;
    }
    return std::nullopt;
}

PropertyRank property_rank(const ExtendedFormulation& e, const VPolytope& vq, std::size_t block,
                           const std::vector<long>& alphas)
{
    if (block >= e.p()) throw Error(ErrorKind::DimensionMismatch, "no such binarized variable");
    const Binarization& b = e.bins[block];
    require_natural(b);
    check_alphas(alphas, b.k() - 1, "property rank");
    const std::size_t xcol = e.binarized[block];
    const auto ycols = e.y_columns(block);

    PropertyRank r;
    r.instance.d = ycols.size();
    std::set<long> hit;
    for (const auto& v : vq.vertices()) {
        bool violates = false;
        for (long a : alphas)
            if (v[xcol] > a && v[xcol] < a + 1) {
                violates = true;
                hit.insert(a);
            }
        if (!violates) continue;
        std::vector<int> row(ycols.size(), 0);
        for (std::size_t k = 0; k < ycols.size(); ++k) row[k] = is_binary(v[ycols[k]]) ? 0 : 1;
        r.instance.rows.push_back(std::move(row));
    }
    for (long a : distinct(alphas)) (hit.count(a) ? r.kept : r.dropped).push_back(a);
    auto sc = set_cover_min(r.instance);
    r.value = sc.value;
    for (auto k : sc.cover) r.cover.push_back(ycols[k]);
    if (r.dropped.empty()) {
        r.skeleton = rank_skeleton(b, r.kept);
        r.agree = *r.skeleton == r.value;
    }
    return r;
}

}  // namespace binext
