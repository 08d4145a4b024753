#include "binext/hypercube.hpp"

#include "binext/errors.hpp"

#include <algorithm>
#include <bit>
#include <future>
#include <numeric>

namespace binext {

namespace {

void check_alphas(unsigned d, const std::vector<long>& alphas)
{
    if (alphas.empty()) throw Error(ErrorKind::RangeViolation, "at least one alpha is required");
    const long hi = (1L << d) - 2;
    for (long a : alphas)
        if (a < 0 || a > hi)
            throw Error(ErrorKind::RangeViolation,
                        "alpha " + std::to_string(a) + " outside [0, " + std::to_string(hi) + "]");
}

/// Bit i is set in the result when some type-i edge crosses some delta(V_alpha).
unsigned crossing_types(const std::vector<unsigned>& sigma, unsigned d, const std::vector<long>& alphas)
{
    unsigned types = 0;
    const unsigned n = 1U << d;
    for (unsigned i = 0; i < d; ++i) {
        const unsigned bit = 1U << i;
        for (unsigned c = 0; c < n && !(types & bit); ++c) {
            if (c & bit) continue;
            const long lo = std::min(sigma[c], sigma[c | bit]);
            const long hi = std::max(sigma[c], sigma[c | bit]);
            for (long a : alphas)
                if (lo <= a && a < hi) {
                    types |= bit;
                    break;
                }
        }
    }
    return types;
}

long rank_of(const std::vector<unsigned>& sigma, unsigned d, const std::vector<long>& alphas)
{
    return std::popcount(crossing_types(sigma, d, alphas));
}

bool matchings_hold(unsigned d, long rank, const std::vector<long>& alphas)
{
    const long step = 1L << (static_cast<long>(d) - rank);
    return std::all_of(alphas.begin(), alphas.end(), [&](long a) { return (a + 1) % step == 0; });
}

constexpr std::size_t max_offending = 5;

void record(LogBestReport& r, const std::vector<unsigned>& sigma)
{
    const long rank = rank_of(sigma, r.d, r.alphas);
    ++r.checked;
    ++r.histogram[rank];
    bool bad = false;
    if (rank < r.log_rank) ++r.violations, bad = true;
    if (!matchings_hold(r.d, rank, r.alphas)) ++r.matching_violations, bad = true;
    if (bad && r.offending.size() < max_offending) r.offending.push_back(sigma);
}

void merge(LogBestReport& into, const LogBestReport& part)
{
    into.checked += part.checked;
    into.violations += part.violations;
    into.matching_violations += part.matching_violations;
    for (const auto& [rank, n] : part.histogram) into.histogram[rank] += n;
    for (const auto& s : part.offending)
        if (into.offending.size() < max_offending) into.offending.push_back(s);
}

}  // namespace

CutFamily cut_family(const HypercubePerm& perm, const std::vector<long>& alphas)
{
    const unsigned d = perm.d();
    check_alphas(d, alphas);
    CutFamily cf;
    cf.d = d;
    cf.alphas = alphas;
    cf.alpha_cuts.resize(alphas.size());
    cf.type_cuts.resize(d);
    const unsigned n = 1U << d;
    for (unsigned c = 0; c < n; ++c)
        for (unsigned i = 0; i < d; ++i) {
            const unsigned other = c ^ (1U << i);
            if (other < c) continue;
            cf.type_cuts[i].emplace_back(c, other);
            for (std::size_t j = 0; j < alphas.size(); ++j) {
                const bool in_c = perm.value(c) <= alphas[j];
                const bool in_o = perm.value(other) <= alphas[j];
                if (in_c != in_o) cf.alpha_cuts[j].emplace_back(c, other);
            }
        }
    return cf;
}

bool type_cuts_partition(const CutFamily& cf)
{
    const unsigned n = 1U << cf.d;
    std::vector<CubeEdge> all;
    for (const auto& cut : cf.type_cuts) {
        std::vector<int> covered(n, 0);
        for (auto [a, b] : cut) ++covered[a], ++covered[b];
        if (std::any_of(covered.begin(), covered.end(), [](int k) { return k != 1; })) return false;
        all.insert(all.end(), cut.begin(), cut.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
    return all.size() == static_cast<std::size_t>(cf.d) * n / 2;
}

long hypercube_rank(const HypercubePerm& perm, const std::vector<long>& alphas)
{
    check_alphas(perm.d(), alphas);
    return rank_of(perm.table(), perm.d(), alphas);
}

HypercubePerm random_perm(unsigned d, Rng& rng)
{
    std::vector<unsigned> sigma(1U << d);
    std::iota(sigma.begin(), sigma.end(), 0U);
    rng.shuffle(sigma);
    return HypercubePerm(d, std::move(sigma));
}

HypercubePerm random_perm(unsigned d, std::uint64_t seed)
{
    Rng rng(seed);
    return random_perm(d, rng);
}

LogBestReport verify_logbest(unsigned d, const std::vector<long>& alphas, LogBestMode mode)
{
    if (d == 0 || d > 20) throw Error(ErrorKind::RangeViolation, "d must lie in [1, 20]");
    check_alphas(d, alphas);
    if (mode.exhaustive && d > 3) throw Error(ErrorKind::RangeViolation, "exhaustive mode needs d <= 3");

    LogBestReport report;
    report.d = d;
    report.alphas = alphas;
    long t = d;
    for (long a : alphas) {
        long f = 0;
        while ((a + 1) % (1L << (f + 1)) == 0) ++f;
        t = std::min(t, f);
    }
    report.log_rank = static_cast<long>(d) - t;
    report.log_encoding_rank = hypercube_rank(HypercubePerm::log_encoding(d), alphas);

    const unsigned n = 1U << d;
    if (mode.exhaustive) {
        // one worker per value of sigma(0); merged in that order
        std::vector<std::future<LogBestReport>> parts;
        const LogBestReport empty = report;
        for (unsigned first = 0; first < n; ++first)
            parts.push_back(std::async(std::launch::async, [&empty, n, first] {
                LogBestReport part = empty;
                std::vector<unsigned> rest;
                for (unsigned x = 0; x < n; ++x)
                    if (x != first) rest.push_back(x);
                std::vector<unsigned> sigma(n);
                sigma[0] = first;
                do {
                    std::copy(rest.begin(), rest.end(), sigma.begin() + 1);
                    record(part, sigma);
                } while (std::next_permutation(rest.begin(), rest.end()));
                return part;
            }));
        for (auto& f : parts) merge(report, f.get());
    } else {
        Rng rng(mode.seed);
        for (std::uint64_t s = 0; s < mode.samples; ++s) record(report, random_perm(d, rng).table());
    }
    report.min_rank = report.histogram.empty() ? 0 : report.histogram.begin()->first;
    return report;
}

}  // namespace binext
