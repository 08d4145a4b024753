#pragma once

#include "binext/binarization.hpp"
#include "binext/extended_formulation.hpp"
#include "binext/set_cover.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace binext {

/// Skeleton edge of a binarization with its indicator vector: t[k] = 0
/// iff both endpoints carry the same binary value in y_k.
struct EdgeIndicator
{
    std::pair<QVector, QVector> endpoints;  ///< lower x first
    std::vector<int> t;
};

/// Edges of sk(B) with one endpoint at x <= alpha and the other at x >= alpha + 1.
std::vector<EdgeIndicator> alpha_edges(const Binarization& b, long alpha);

/// Set-cover instance over the indicator vectors of all alpha_j-edges.
SetCoverInstance alpha_edge_instance(const Binarization& b, const std::vector<long>& alphas);

/// Rank as a minimum cover of alpha-edge indicators.
long rank_skeleton(const Binarization& b, const std::vector<long>& alphas);

/// Rank as the lift-and-project rank of conv of the slices at alpha_j + offset
/// (offset strictly between 0 and 1).
long rank_direct(const Binarization& b, const std::vector<long>& alphas, const Rational& offset = Rational(1, 2));

/// Fractional-support rows of the vertices of conv of the slices, sorted and deduplicated.
std::vector<std::vector<int>> slice_rows(const Binarization& b, const std::vector<long>& alphas,
                                         const Rational& offset = Rational(1, 2));

long rank_unary_formula(unsigned d, const std::vector<long>& alphas);
long rank_full_formula(unsigned d, const std::vector<long>& alphas);

/// Largest t with 2^t dividing alpha + 1.
long f_log(long alpha);
/// Number of trailing 1-bits of alpha (ones not preceded by a zero); equals f_log.
long f_log_bits(long alpha);
long rank_log_formula(unsigned d, const std::vector<long>& alphas);

/// Rank of the truncated logarithmic binarization by the halving recursion.
long rank_trunc(unsigned v, unsigned d, long alpha);

struct TruncClosedForm
{
    long value = 0;
    unsigned j = 0;        ///< highest 1-based bit with v_j = 1 and alpha_j = 0
    long s = 0;            ///< bits above j set in both v and alpha
    long alpha_tilde = 0;
    unsigned d_tilde = 0;  ///< ceil(log2) of v restricted to bits <= j
};

/// Bit-pattern closed form of rank_trunc; used as a cross-check.
TruncClosedForm rank_trunc_closed_form(unsigned v, unsigned d, long alpha);

/// Rank of the binarization kind given by its formula, when one exists.
std::optional<long> rank_formula(const Binarization& b, const std::vector<long>& alphas);

struct PropertyRank
{
    long value = 0;
    std::vector<std::size_t> cover;    ///< Q columns
    SetCoverInstance instance;
    std::vector<long> kept;            ///< alphas with at least one violating vertex
    std::vector<long> dropped;         ///< alphas without one
    std::optional<long> skeleton;      ///< rank_skeleton on the kept alphas, when every alpha was kept
    bool agree = true;
};

/// Minimum number of y-variables of block i whose convexification removes
/// every vertex of Q with alpha_j < x < alpha_j + 1.
PropertyRank property_rank(const ExtendedFormulation& e, const VPolytope& vq, std::size_t block,
                           const std::vector<long>& alphas);

}  // namespace binext
