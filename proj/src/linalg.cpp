#include "binext/linalg.hpp"

namespace binext::linalg {

Echelon reduce(QMatrix m, std::size_t cols)
{
    Echelon out;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[row], m[pivot]);
        Rational inv = 1 / m[row][c];
        for (std::size_t j = c; j < cols; ++j) m[row][j] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[row][j];
        }
        out.pivots.push_back(c);
        ++row;
    }
    m.resize(row);
    out.rows = std::move(m);
    return out;
}

std::size_t rank(const QMatrix& m, std::size_t cols) { return reduce(m, cols).pivots.size(); }

QMatrix nullspace(const QMatrix& m, std::size_t cols)
{
    Echelon e = reduce(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    QMatrix basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        QVector z(cols, Rational(0));
        z[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) z[e.pivots[r]] = -e.rows[r][free];
        basis.push_back(std::move(z));
    }
    return basis;
}

namespace {

std::optional<Echelon> reduce_augmented(const QMatrix& a, const QVector& b, std::size_t cols)
{
    QMatrix aug;
    aug.reserve(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        QVector row = a[i];
        row.resize(cols, Rational(0));
        row.push_back(b[i]);
        aug.push_back(std::move(row));
    }
    Echelon e = reduce(std::move(aug), cols + 1);
    if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
    return e;
}

}  // namespace

std::optional<QVector> solve_any(const QMatrix& a, const QVector& b, std::size_t cols)
{
    auto e = reduce_augmented(a, b, cols);
    if (!e) return std::nullopt;
    QVector z(cols, Rational(0));
    for (std::size_t r = 0; r < e->pivots.size(); ++r) z[e->pivots[r]] = e->rows[r][cols];
    return z;
}

std::optional<QVector> solve_unique(const QMatrix& a, const QVector& b, std::size_t cols)
{
    auto e = reduce_augmented(a, b, cols);
    if (!e || e->pivots.size() != cols) return std::nullopt;
    QVector z(cols);
    for (std::size_t r = 0; r < cols; ++r) z[e->pivots[r]] = e->rows[r][cols];
    return z;
}

int affine_dimension(const std::vector<QVector>& points)
{
    if (points.empty()) return -1;
    const std::size_t n = points.front().size();
    QMatrix diffs;
    for (std::size_t i = 1; i < points.size(); ++i) {
        QVector d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return static_cast<int>(rank(diffs, n));
}

}  // namespace binext::linalg
