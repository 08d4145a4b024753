#include "binext/set_cover.hpp"

#include "binext/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace binext {

namespace {

using Mask = std::uint64_t;

int popcount(Mask m) { return std::popcount(m); }

int lower_bound(std::vector<Mask> rows)
{
    std::sort(rows.begin(), rows.end(), [](Mask a, Mask b) { return popcount(a) < popcount(b); });
    Mask used = 0;
    int bound = 0;
    for (Mask r : rows) {
        if (r & used) continue;
        used |= r;
        ++bound;
    }
    return bound;
}

std::vector<Mask> uncovered(const std::vector<Mask>& rows, Mask chosen)
{
    std::vector<Mask> out;
    for (Mask r : rows)
        if (!(r & chosen)) out.push_back(r);
    return out;
}

class BranchAndBound
{
public:
    explicit BranchAndBound(int best, Mask best_cover) : best_(best), best_cover_(best_cover) {}

    void search(std::vector<Mask> rows, Mask chosen)
    {
        // singleton rows force their column
        while (true) {
            Mask forced = 0;
            for (Mask r : rows)
                if (popcount(r) == 1) forced |= r;
            if (!forced) break;
            chosen |= forced;
            rows = uncovered(rows, chosen);
        }
        const int count = popcount(chosen);
        if (rows.empty()) {
            if (count < best_) {
                best_ = count;
                best_cover_ = chosen;
            }
            return;
        }
        if (count + lower_bound(rows) >= best_) return;

        // a column whose rows are a subset of another column's rows can be dropped
        Mask avail = 0;
        for (Mask r : rows) avail |= r;
        for (int j = 0; j < 64; ++j) {
            if (!((avail >> j) & 1U)) continue;
            for (int k = 0; k < 64; ++k) {
                if (k == j || !((avail >> k) & 1U)) continue;
                bool dominated = true;
                bool equal = true;
                for (Mask r : rows) {
                    bool hj = (r >> j) & 1U, hk = (r >> k) & 1U;
                    if (hj && !hk) dominated = false;
                    if (hj != hk) equal = false;
                }
                if (dominated && (!equal || k < j)) {
                    for (Mask& r : rows) r &= ~(Mask{1} << j);
                    avail &= ~(Mask{1} << j);
                    break;
                }
            }
        }

        auto pivot = std::min_element(rows.begin(), rows.end(),
                                      [](Mask a, Mask b) { return popcount(a) < popcount(b); });
        Mask branch = *pivot;
        std::vector<Mask> remaining = rows;
        for (int j = 0; j < 64; ++j) {
            if (!((branch >> j) & 1U)) continue;
            Mask bit = Mask{1} << j;
            search(uncovered(remaining, bit), chosen | bit);
            for (Mask& r : remaining) r &= ~bit;
            if (std::any_of(remaining.begin(), remaining.end(), [](Mask r) { return r == 0; })) break;
        }
    }

    int best() const { return best_; }
    Mask best_cover() const { return best_cover_; }

private:
    int best_;
    Mask best_cover_;
};

}  // namespace

SetCoverResult set_cover_min(const SetCoverInstance& instance)
{
    if (instance.d > 64) throw Error(ErrorKind::RangeViolation, "set cover ground set limited to 64 elements");
    std::vector<Mask> rows;
    for (std::size_t i = 0; i < instance.rows.size(); ++i) {
        const auto& row = instance.rows[i];
        if (row.size() != instance.d) throw Error(ErrorKind::DimensionMismatch, "set cover row has wrong length");
        Mask m = 0;
        for (std::size_t j = 0; j < row.size(); ++j)
            if (row[j]) m |= Mask{1} << j;
        if (m == 0) throw Error(ErrorKind::InfeasibleRow, "set cover row " + std::to_string(i) + " is all zero");
        rows.push_back(m);
    }
    std::sort(rows.begin(), rows.end());
    rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

    // greedy incumbent
    Mask greedy = 0;
    for (auto open = rows; !open.empty(); open = uncovered(open, greedy)) {
        int best_j = 0, best_hits = -1;
        for (int j = 0; j < static_cast<int>(instance.d); ++j) {
            int hits = static_cast<int>(std::count_if(open.begin(), open.end(), [j](Mask r) { return (r >> j) & 1U; }));
            if (hits > best_hits) {
                best_hits = hits;
                best_j = j;
            }
        }
        greedy |= Mask{1} << best_j;
    }

    BranchAndBound bb(popcount(greedy), greedy);
    bb.search(rows, 0);

    SetCoverResult result;
    result.value = bb.best();
    for (std::size_t j = 0; j < instance.d; ++j)
        if ((bb.best_cover() >> j) & 1U) result.cover.push_back(j);
    return result;
}

bool is_cover(const SetCoverInstance& instance, const std::vector<std::size_t>& cover)
{
    return std::all_of(instance.rows.begin(), instance.rows.end(), [&](const std::vector<int>& row) {
        return std::any_of(cover.begin(), cover.end(), [&](std::size_t j) { return j < row.size() && row[j]; });
    });
}

LiftProjectRank lift_and_project_rank(const std::vector<QVector>& vertices, const std::vector<std::size_t>& columns)
{
    LiftProjectRank out;
    out.instance.d = columns.size();
    for (std::size_t v = 0; v < vertices.size(); ++v) {
        std::vector<int> row(columns.size(), 0);
        bool fractional = false;
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (!is_binary(vertices[v].at(columns[j]))) {
                row[j] = 1;
                fractional = true;
            }
        }
        if (!fractional) continue;
        out.instance.rows.push_back(std::move(row));
        out.row_vertex.push_back(v);
    }
    auto sc = set_cover_min(out.instance);
    out.value = sc.value;
    for (auto j : sc.cover) out.cover.push_back(columns[j]);
    return out;
}

}  // namespace binext
