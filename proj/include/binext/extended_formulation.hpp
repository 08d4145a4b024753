#pragma once

#include "binext/binarization.hpp"
#include "binext/polytope.hpp"
#include "binext/set_cover.hpp"

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace binext {

/**
 * Binary extended formulation Q of a polytope P: the columns of Q are
 * x_1..x_n followed by one y-block per binarized variable, and Q is the
 * plain concatenation of the row systems of P and of each binarization
 * (with its x column mapped onto the binarized variable).
 */
struct ExtendedFormulation
{
    HPolytope P;
    std::vector<std::size_t> binarized;    ///< x column of each binarization
    std::vector<Binarization> bins;
    HPolytope Q;
    std::vector<std::size_t> y_offset;     ///< first Q column of each y-block
    std::map<std::string, std::size_t> index_map;

    std::size_t n() const noexcept { return P.dim(); }
    std::size_t p() const noexcept { return bins.size(); }
    std::size_t total_dim() const noexcept { return Q.dim(); }
    std::vector<std::size_t> y_columns() const;
    std::vector<std::size_t> y_columns(std::size_t block) const;
    std::vector<std::size_t> x_columns() const;
    std::string column_name(std::size_t col) const;
};

/// Subspace G_{I,alpha}: x_{binarized[I_j]} = alpha_j.
struct Fixing
{
    std::vector<std::size_t> I;  ///< indices into ExtendedFormulation::binarized
    std::vector<long> alpha;
};

struct VertexWitness
{
    Face face;
    Fixing fixing;
};

constexpr std::size_t default_limit_dim = 12;

/// Throws RangeMismatch when P leaves [0, k_i] in a binarized variable.
ExtendedFormulation build(const HPolytope& P, std::vector<std::size_t> binarized, std::vector<Binarization> bins);

/// Exact V(Q); throws SizeLimitExceeded when Q has more than limit_dim columns.
VPolytope vertices_Q(const ExtendedFormulation& e, std::size_t limit_dim = default_limit_dim);

enum class NaturalityCheck { Enforce, Skip };

/// Union over faces F of P (dim q <= p) and fixings with |I| = q of the
/// points x with F ∩ G_{I,alpha} = {x}. Throws NonNaturalBinarization
/// unless the check is skipped (to compare against non-natural formulations).
std::vector<QVector> characterize_projection(const ExtendedFormulation& e,
                                             NaturalityCheck check = NaturalityCheck::Enforce);

/// Finds (F, I, alpha) for a vertex of Q; throws NoWitness when none exists.
VertexWitness verify_vertex_conditions(const ExtendedFormulation& e, const QVector& vertex);

/// Vertex-level sequential convexification over the given y columns.
VPolytope sequential_convexify(const VPolytope& vq, const std::vector<std::size_t>& yvars);
VPolytope sequential_convexify(const ExtendedFormulation& e, const std::vector<std::size_t>& yvars,
                               std::size_t limit_dim = default_limit_dim);

struct LprReport
{
    LiftProjectRank rank;
    VPolytope after;   ///< V(Q) convexified over the cover
    bool certified = false;
};

LprReport lpr(const ExtendedFormulation& e, const VPolytope& vq);
LprReport lpr(const ExtendedFormulation& e, std::size_t limit_dim = default_limit_dim);

/// (x column, alpha) with alpha < x < alpha + 1 at some vertex.
std::set<std::pair<std::size_t, Integer>> hit_intervals(const std::vector<QVector>& vertices,
                                                        const std::vector<std::size_t>& x_cols);

/// Throws PersistencyViolation if convexifying yvar opens a new interval.
void check_persistency(const ExtendedFormulation& e, const VPolytope& vq, std::size_t yvar);

}  // namespace binext
