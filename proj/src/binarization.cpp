#include "binext/binarization.hpp"

#include "binext/errors.hpp"
#include "binext/geometry.hpp"
#include "binext/linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace binext {

BitString to_bits(unsigned long x, unsigned d)
{
    BitString bits(d);
    for (unsigned i = 0; i < d; ++i) bits[i] = static_cast<int>((x >> i) & 1UL);
    return bits;
}

unsigned long from_bits(const BitString& bits)
{
    unsigned long x = 0;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) x |= 1UL << i;
    return x;
}

HypercubePerm::HypercubePerm(unsigned d, std::vector<unsigned> sigma) : d_(d), sigma_(std::move(sigma))
{
    if (d_ == 0 || d_ > 20) throw Error(ErrorKind::RangeViolation, "hypercube dimension must be in 1..20");
    const std::size_t n = std::size_t{1} << d_;
    if (sigma_.size() != n)
        throw Error(ErrorKind::NotBijective, "sigma has " + std::to_string(sigma_.size()) + " entries, expected " +
                                                 std::to_string(n));
    inverse_.assign(n, static_cast<unsigned>(n));
    for (unsigned code = 0; code < n; ++code) {
        unsigned x = sigma_[code];
        if (x >= n) throw Error(ErrorKind::NotBijective, "sigma value " + std::to_string(x) + " out of range");
        if (inverse_[x] != n) throw Error(ErrorKind::NotBijective, "sigma value " + std::to_string(x) + " repeated");
        inverse_[x] = code;
    }
}

HypercubePerm HypercubePerm::log_encoding(unsigned d)
{
    std::vector<unsigned> id(std::size_t{1} << d);
    std::iota(id.begin(), id.end(), 0U);
    return HypercubePerm(d, std::move(id));
}

std::string to_string(BinarizationKind kind)
{
    switch (kind) {
    case BinarizationKind::Unary: return "unary";
    case BinarizationKind::Full: return "full";
    case BinarizationKind::Log: return "log";
    case BinarizationKind::TruncLog: return "trunc_log";
    case BinarizationKind::Hypercube: return "hypercube";
    case BinarizationKind::Custom: return "custom";
    }
    return "custom";
}

struct Binarization::Cache
{
    std::once_flag once;
    Classification value;
};

namespace {

bool binary_y(const QVector& v)
{
    return std::all_of(v.begin() + 1, v.end(), [](const Rational& q) { return is_binary(q); });
}

void validate(std::size_t d, long k, const VPolytope& verts)
{
    if (verts.empty()) throw Error(ErrorKind::NotABinarization, "body is empty");
    if (k < 1) throw Error(ErrorKind::NotABinarization, "range top k must be positive");
    for (const auto& v : verts.vertices())
        for (std::size_t i = 1; i <= d; ++i)
            if (v[i] < 0 || v[i] > 1)
                throw Error(ErrorKind::NotABinarization, "vertex " + to_string(v) + " leaves the unit cube in y");

    // A binary y fixes a face of the body; its endpoints are vertices, so
    // the vertices alone decide the x-values reached with binary y.
    std::map<QVector, Rational> x_of;
    std::set<Rational> reached;
    for (const auto& v : verts.vertices()) {
        if (!binary_y(v)) continue;
        QVector y(v.begin() + 1, v.end());
        auto [it, inserted] = x_of.emplace(y, v[0]);
        if (!inserted && it->second != v[0])
            throw Error(ErrorKind::NotABinarization, "binary y " + to_string(y) + " admits x = " + to_string(it->second) +
                                                         " and x = " + to_string(v[0]));
        reached.insert(v[0]);
    }
    for (const auto& x : reached)
        if (!is_integer(x) || x < 0 || x > k)
            throw Error(ErrorKind::NotABinarization, "extra x-value " + to_string(x) + " reached with binary y");
    for (long x = 0; x <= k; ++x)
        if (!reached.count(Rational(x)))
            throw Error(ErrorKind::NotABinarization, "missing x-value " + std::to_string(x));
}

LinearRow unit_row(std::size_t dim, std::size_t var, long coeff, long rhs)
{
    QVector a(dim, Rational(0));
    a[var] = coeff;
    return {std::move(a), Rational(rhs)};
}

/// 0 <= y_i <= 1 for every y coordinate.
std::vector<LinearRow> cube_rows(unsigned d)
{
    std::vector<LinearRow> rows;
    for (unsigned i = 1; i <= d; ++i) {
        rows.push_back(unit_row(d + 1, i, -1, 0));
        rows.push_back(unit_row(d + 1, i, 1, 1));
    }
    return rows;
}

void require_d(unsigned d)
{
    if (d < 1) throw Error(ErrorKind::RangeViolation, "d must be at least 1");
}

}  // namespace

Binarization make_binarization(BinarizationKind kind, HPolytope body, long k, std::optional<unsigned> trunc_v,
                               std::optional<HypercubePerm> perm)
{
    if (body.dim() < 2) throw Error(ErrorKind::DimensionMismatch, "binarization body needs x and at least one y");
    Binarization b;
    b.d_ = body.dim() - 1;
    b.k_ = k;
    b.kind_ = kind;
    b.vertices_ = enumerate_vertices(body);
    b.body_ = std::move(body);
    b.trunc_v_ = trunc_v;
    b.perm_ = std::move(perm);
    b.cache_ = std::make_shared<Binarization::Cache>();
    validate(b.d_, b.k_, b.vertices_);
    return b;
}

const Classification& Binarization::classification() const
{
    std::call_once(cache_->once, [this] { cache_->value = classify(*this); });
    return cache_->value;
}

Binarization make_unary(unsigned d)
{
    require_d(d);
    auto ineqs = cube_rows(d);
    // y_{i+1} - y_i <= 0
    for (unsigned i = 1; i < d; ++i) {
        QVector a(d + 1, Rational(0));
        a[i] = -1;
        a[i + 1] = 1;
        ineqs.push_back({std::move(a), Rational(0)});
    }
    QVector link(d + 1, Rational(-1));
    link[0] = 1;
    return make_binarization(BinarizationKind::Unary, HPolytope(d + 1, std::move(ineqs), {{std::move(link), Rational(0)}}), d);
}

Binarization make_full(unsigned d)
{
    require_d(d);
    auto ineqs = cube_rows(d);
    QVector sum(d + 1, Rational(1));
    sum[0] = 0;
    ineqs.push_back({std::move(sum), Rational(1)});
    QVector link(d + 1);
    link[0] = 1;
    for (unsigned i = 1; i <= d; ++i) link[i] = -static_cast<long>(i);
    return make_binarization(BinarizationKind::Full, HPolytope(d + 1, std::move(ineqs), {{std::move(link), Rational(0)}}), d);
}

Binarization make_log(unsigned d)
{
    require_d(d);
    if (d > 20) throw Error(ErrorKind::RangeViolation, "d too large for the logarithmic binarization");
    QVector link(d + 1);
    link[0] = 1;
    for (unsigned i = 1; i <= d; ++i) link[i] = -static_cast<long>(1L << (i - 1));
    return make_binarization(BinarizationKind::Log, HPolytope(d + 1, cube_rows(d), {{std::move(link), Rational(0)}}),
                             (1L << d) - 1);
}

Binarization make_trunc_log(unsigned v, unsigned d)
{
    require_d(d);
    if (d > 20 || v <= (1U << (d - 1)) || v > (1U << d))
        throw Error(ErrorKind::RangeViolation,
                    "v = " + std::to_string(v) + " outside (2^(d-1), 2^d] for d = " + std::to_string(d));
    std::vector<QVector> points;
    for (unsigned x = 0; x < v; ++x) {
        QVector p{Rational(x)};
        for (int bit : to_bits(x, d)) p.push_back(Rational(bit));
        points.push_back(std::move(p));
    }
    return make_binarization(BinarizationKind::TruncLog, facet_hull(d + 1, points), static_cast<long>(v) - 1, v);
}

Binarization make_hypercube(const HypercubePerm& perm)
{
    const unsigned d = perm.d();
    std::vector<QVector> points;
    for (unsigned code = 0; code < perm.size(); ++code) {
        QVector p{Rational(perm.value(code))};
        for (int bit : to_bits(code, d)) p.push_back(Rational(bit));
        points.push_back(std::move(p));
    }
    return make_binarization(BinarizationKind::Hypercube, facet_hull(d + 1, points),
                             static_cast<long>(perm.size()) - 1, std::nullopt, perm);
}

Binarization make_custom(const HPolytope& body, long k) { return make_binarization(BinarizationKind::Custom, body, k); }

Binarization make_custom(const VPolytope& body, long k)
{
    return make_binarization(BinarizationKind::Custom, facet_hull(body), k);
}

Binarization make_custom(const HPolytope& body)
{
    long k = 0;
    const VPolytope all = enumerate_vertices(body);
    for (const auto& v : all.vertices()) {
        if (!binary_y(v) || !is_integer(v[0])) continue;
        if (v[0].get_num().fits_slong_p()) k = std::max(k, v[0].get_num().get_si());
    }
    return make_custom(body, k);
}

Classification classify(const Binarization& b)
{
    Classification c;
    const auto& verts = b.vertices().vertices();
    const std::size_t d = b.d();

    c.natural = std::all_of(verts.begin(), verts.end(), [](const QVector& v) { return is_integer(v[0]); });
    c.integral = std::all_of(verts.begin(), verts.end(), binary_y);
    c.x_outside_range =
        std::any_of(verts.begin(), verts.end(), [&](const QVector& v) { return v[0] < 0 || v[0] > b.k(); });

    std::map<Rational, int> binary_count;
    for (const auto& v : verts)
        if (binary_y(v)) ++binary_count[v[0]];
    c.exact = true;
    for (long x = 0; x <= b.k(); ++x) {
        auto it = binary_count.find(Rational(x));
        if (it == binary_count.end() || it->second != 1) c.exact = false;
    }
    c.perfect = c.exact && c.natural;

    linalg::QMatrix affine_rows, linear_rows;
    QVector rhs;
    for (const auto& v : verts) {
        QVector row(v.begin() + 1, v.end());
        linear_rows.push_back(row);
        row.push_back(Rational(1));
        affine_rows.push_back(std::move(row));
        rhs.push_back(v[0]);
    }
    if (auto sol = linalg::solve_any(affine_rows, rhs, d + 1)) {
        AffineMap m;
        m.coeffs.assign(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(d));
        m.offset = (*sol)[d];
        c.affine = std::move(m);
    }
    c.linear = linalg::solve_any(linear_rows, rhs, d).has_value();

    const std::size_t corners = d < 21 ? (std::size_t{1} << d) : 0;
    if (corners != 0 && verts.size() == corners && c.integral) {
        std::set<QVector> ys;
        std::set<Rational> xs;
        for (const auto& v : verts) {
            ys.emplace(v.begin() + 1, v.end());
            xs.insert(v[0]);
        }
        bool x_cover = xs.size() == corners && *xs.begin() == 0 && *xs.rbegin() == Rational(static_cast<long>(corners) - 1) &&
                       std::all_of(xs.begin(), xs.end(), [](const Rational& x) { return is_integer(x); });
        c.hypercube = ys.size() == corners && x_cover;
    }
    return c;
}

bool is_log_up_to_symmetry(const HypercubePerm& perm)
{
    const unsigned d = perm.d();
    std::vector<unsigned> pi(d);
    std::iota(pi.begin(), pi.end(), 0U);
    do {
        for (unsigned mask = 0; mask < perm.size(); ++mask) {
            bool match = true;
            for (unsigned code = 0; code < perm.size() && match; ++code) {
                unsigned flipped = code ^ mask;
                unsigned x = 0;
                for (unsigned i = 0; i < d; ++i)
                    if ((flipped >> i) & 1U) x |= 1U << pi[i];
                match = perm.value(code) == x;
            }
            if (match) return true;
        }
    } while (std::next_permutation(pi.begin(), pi.end()));
    return false;
}

std::optional<QVector> affine_normal_coefficients(const Binarization& b)
{
    const auto& c = b.classification();
    if (!c.affine || !c.hypercube) return std::nullopt;
    const QVector* zero = nullptr;
    for (const auto& v : b.vertices().vertices())
        if (v[0] == 0) zero = &v;
    QVector coeffs = c.affine->coeffs;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if ((*zero)[i + 1] == 1) coeffs[i] = -coeffs[i];
    std::sort(coeffs.begin(), coeffs.end());
    return coeffs;
}

std::vector<std::vector<long>> linear_trunc_coefficients(unsigned v, unsigned d)
{
    if (d < 1 || d > 6 || v <= (1U << (d - 1)) || v > (1U << d))
        throw Error(ErrorKind::RangeViolation, "need 2^(d-1) < v <= 2^d and d <= 6");
    std::vector<std::vector<long>> found;
    std::vector<long> a(d, 0);
    std::vector<bool> hit(v);
    while (true) {
        std::fill(hit.begin(), hit.end(), false);
        bool ok = true;
        for (unsigned x = 0; x < v && ok; ++x) {
            long val = 0;
            for (unsigned i = 0; i < d; ++i)
                if ((x >> i) & 1U) val += a[i];
            if (val < 0 || val >= static_cast<long>(v) || hit[val]) ok = false;
            else hit[val] = true;
        }
        if (ok) found.push_back(a);
        unsigned i = 0;
        while (i < d && ++a[i] == static_cast<long>(v)) a[i++] = 0;
        if (i == d) break;
    }
    return found;
}

}  // namespace binext
