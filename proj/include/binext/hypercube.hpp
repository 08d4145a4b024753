#pragma once

#include "binext/binarization.hpp"
#include "binext/random.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace binext {

/// Hypercube edge as a pair of codes, lower code first.
using CubeEdge = std::pair<unsigned, unsigned>;

/// Cuts of the hypercube graph induced by a value assignment sigma.
struct CutFamily
{
    unsigned d = 0;
    std::vector<long> alphas;
    std::vector<std::vector<CubeEdge>> alpha_cuts;  ///< delta(V_alpha) per alpha, V_alpha = {y : sigma(y) <= alpha}
    std::vector<std::vector<CubeEdge>> type_cuts;   ///< per bit i, the edges flipping bit i
};

CutFamily cut_family(const HypercubePerm& perm, const std::vector<long>& alphas);

/// True when the type cuts partition the edge set into d perfect matchings.
bool type_cuts_partition(const CutFamily& cf);

/// Number of bit types with an edge in some delta(V_alpha_j).
long hypercube_rank(const HypercubePerm& perm, const std::vector<long>& alphas);

struct LogBestMode
{
    bool exhaustive = true;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;

    static LogBestMode all() { return {}; }
    static LogBestMode sample(std::uint64_t n, std::uint64_t seed) { return {false, n, seed}; }
};

struct LogBestReport
{
    unsigned d = 0;
    std::vector<long> alphas;
    long log_rank = 0;
    long log_encoding_rank = 0;
    std::uint64_t checked = 0;
    std::uint64_t violations = 0;           ///< rank below the log rank
    std::uint64_t matching_violations = 0;  ///< 2^(d - rank) not dividing some alpha + 1
    long min_rank = 0;
    std::map<long, std::uint64_t> histogram;
    std::vector<std::vector<unsigned>> offending;  ///< first few offending sigma tables
};

/// Compares every (or a seeded sample of) bijection against the logarithmic
/// encoding. Exhaustive mode needs d <= 3.
LogBestReport verify_logbest(unsigned d, const std::vector<long>& alphas, LogBestMode mode);

/// Seeded uniformly random bijection of {0, ..., 2^d - 1}.
HypercubePerm random_perm(unsigned d, Rng& rng);
HypercubePerm random_perm(unsigned d, std::uint64_t seed);

}  // namespace binext
