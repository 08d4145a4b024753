#include "double_description.hpp"

#include <bit>
#include <cstdint>

namespace binext::detail {

namespace {

using IVector = std::vector<Integer>;

class ZeroSet
{
public:
    explicit ZeroSet(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    ZeroSet intersect(const ZeroSet& o) const
    {
        ZeroSet r = *this;
        for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] &= o.words_[k];
        return r;
    }

    bool subset_of(const ZeroSet& o) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Ray
{
    IVector v;
    ZeroSet zero;
};

IVector to_integer_row(const QVector& row)
{
    QVector p = primitive(row);
    IVector out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out[i] = p[i].get_num();
    return out;
}

Integer idot(const IVector& a, const IVector& b)
{
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

void make_primitive(IVector& v)
{
    Integer g = 0;
    for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

/// Rays of a pointed cone {w : rows w <= 0}; rows has full column rank r.
std::vector<IVector> pointed_cone_rays(const std::vector<IVector>& rows, std::size_t r)
{
    const std::size_t m = rows.size();

    // Initial simplicial cone from r independent rows.
    std::vector<std::size_t> basis_rows;
    linalg::QMatrix selected;
    std::vector<bool> used(m, false);
    for (std::size_t i = 0; i < m && basis_rows.size() < r; ++i) {
        QVector q(rows[i].begin(), rows[i].end());
        selected.push_back(q);
        if (linalg::rank(selected, r) == selected.size()) {
            basis_rows.push_back(i);
            used[i] = true;
        } else {
            selected.pop_back();
        }
    }

    std::vector<Ray> rays;
    for (std::size_t k = 0; k < r; ++k) {
        QVector rhs(r, Rational(0));
        rhs[k] = -1;
        auto z = linalg::solve_unique(selected, rhs, r);
        QVector p = primitive(*z);
        Ray ray{IVector(r), ZeroSet(m)};
        for (std::size_t j = 0; j < r; ++j) ray.v[j] = p[j].get_num();
        for (std::size_t j = 0; j < r; ++j)
            if (j != k) ray.zero.set(basis_rows[j]);
        rays.push_back(std::move(ray));
    }

    for (std::size_t i = 0; i < m; ++i) {
        if (used[i]) continue;
        std::vector<Integer> s(rays.size());
        std::vector<std::size_t> pos, neg;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            s[j] = idot(rows[i], rays[j].v);
            if (s[j] > 0) pos.push_back(j);
            else if (s[j] < 0) neg.push_back(j);
        }

        std::vector<Ray> next;
        next.reserve(rays.size());
        for (std::size_t j = 0; j < rays.size(); ++j) {
            if (s[j] > 0) continue;
            Ray kept = rays[j];
            if (s[j] == 0) kept.zero.set(i);
            next.push_back(std::move(kept));
        }

        for (auto p : pos) {
            for (auto n : neg) {
                ZeroSet common = rays[p].zero.intersect(rays[n].zero);
                if (common.count() + 2 < r) continue;
                bool adjacent = true;
                for (std::size_t q = 0; q < rays.size() && adjacent; ++q)
                    if (q != p && q != n && common.subset_of(rays[q].zero)) adjacent = false;
                if (!adjacent) continue;
                Ray fresh{IVector(r), common};
                for (std::size_t c = 0; c < r; ++c) fresh.v[c] = s[p] * rays[n].v[c] - s[n] * rays[p].v[c];
                make_primitive(fresh.v);
                fresh.zero.set(i);
                next.push_back(std::move(fresh));
            }
        }
        used[i] = true;
        rays = std::move(next);
    }

    std::vector<IVector> out;
    out.reserve(rays.size());
    for (auto& ray : rays) out.push_back(std::move(ray.v));
    return out;
}

}  // namespace

ConeRays extreme_rays(const linalg::QMatrix& ineqs, const linalg::QMatrix& eqs, std::size_t dim)
{
    ConeRays out;
    linalg::QMatrix all = ineqs;
    all.insert(all.end(), eqs.begin(), eqs.end());
    out.lineality = linalg::nullspace(all, dim);

    linalg::QMatrix restrict = eqs;
    restrict.insert(restrict.end(), out.lineality.begin(), out.lineality.end());
    linalg::QMatrix basis = linalg::nullspace(restrict, dim);
    const std::size_t r = basis.size();
    if (r == 0) return out;

    std::vector<IVector> rows;
    rows.reserve(ineqs.size());
    for (const auto& a : ineqs) {
        QVector projected(r);
        for (std::size_t j = 0; j < r; ++j) projected[j] = dot(a, basis[j]);
        rows.push_back(to_integer_row(projected));
    }

    for (const auto& w : pointed_cone_rays(rows, r)) {
        QVector z(dim, Rational(0));
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t c = 0; c < dim; ++c) z[c] += w[j] * basis[j][c];
        out.rays.push_back(primitive(z));
    }
    return out;
}

}  // namespace binext::detail
