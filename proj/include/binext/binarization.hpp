#pragma once

#include "binext/polytope.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace binext {

/// Reversed base-2 digits: bits[i] is the coefficient of 2^i.
using BitString = std::vector<int>;

BitString to_bits(unsigned long x, unsigned d);
unsigned long from_bits(const BitString& bits);

/**
 * Bijection sigma from {0,1}^d to {0, ..., 2^d - 1}. A bit string y is
 * addressed by its code sum_i y_i 2^(i-1), so the identity table is the
 * logarithmic encoding.
 */
class HypercubePerm
{
public:
    /// Throws NotBijective unless sigma is a permutation of {0, ..., 2^d - 1}.
    HypercubePerm(unsigned d, std::vector<unsigned> sigma);

    static HypercubePerm log_encoding(unsigned d);

    unsigned d() const noexcept { return d_; }
    std::size_t size() const noexcept { return sigma_.size(); }
    unsigned value(unsigned code) const { return sigma_.at(code); }
    unsigned code_of(unsigned x) const { return inverse_.at(x); }
    const std::vector<unsigned>& table() const noexcept { return sigma_; }

    friend bool operator==(const HypercubePerm& a, const HypercubePerm& b) { return a.sigma_ == b.sigma_; }

private:
    unsigned d_;
    std::vector<unsigned> sigma_;
    std::vector<unsigned> inverse_;
};

enum class BinarizationKind { Unary, Full, Log, TruncLog, Hypercube, Custom };

std::string to_string(BinarizationKind kind);

struct AffineMap
{
    QVector coeffs;  ///< x = coeffs · y + offset
    Rational offset;
};

struct Classification
{
    bool natural = false;
    bool integral = false;
    bool exact = false;
    bool perfect = false;
    std::optional<AffineMap> affine;
    bool linear = false;
    bool hypercube = false;
    /// Some vertex has x outside [0, k]. Permitted (only binary-y vertices
    /// are constrained), but reported.
    bool x_outside_range = false;
};

/**
 * Polytope in (x, y_1, ..., y_d), x first, linking x in {0, ..., k} to
 * binary y. Construction validates that the x-values reached with binary
 * y are exactly {0, ..., k}; classification is computed on first use.
 */
class Binarization
{
public:
    std::size_t d() const noexcept { return d_; }
    long k() const noexcept { return k_; }
    BinarizationKind kind() const noexcept { return kind_; }
    const HPolytope& body() const noexcept { return body_; }
    const VPolytope& vertices() const noexcept { return vertices_; }
    /// v for truncated logarithmic binarizations.
    std::optional<unsigned> trunc_v() const noexcept { return trunc_v_; }
    const std::optional<HypercubePerm>& perm() const noexcept { return perm_; }

    const Classification& classification() const;

private:
    friend Binarization make_binarization(BinarizationKind, HPolytope, long, std::optional<unsigned>,
                                          std::optional<HypercubePerm>);

    struct Cache;

    std::size_t d_ = 0;
    long k_ = 0;
    BinarizationKind kind_ = BinarizationKind::Custom;
    HPolytope body_;
    VPolytope vertices_;
    std::optional<unsigned> trunc_v_;
    std::optional<HypercubePerm> perm_;
    std::shared_ptr<Cache> cache_;
};

/// Internal factory shared by the constructors below; validates the body.
Binarization make_binarization(BinarizationKind kind, HPolytope body, long k, std::optional<unsigned> trunc_v = {},
                               std::optional<HypercubePerm> perm = {});

Binarization make_unary(unsigned d);
Binarization make_full(unsigned d);
Binarization make_log(unsigned d);
/// conv{(x, (x)_2) : 0 <= x <= v - 1}; needs 2^(d-1) < v <= 2^d.
Binarization make_trunc_log(unsigned v, unsigned d);
Binarization make_hypercube(const HypercubePerm& perm);
Binarization make_custom(const HPolytope& body, long k);
Binarization make_custom(const VPolytope& body, long k);
/// k taken as the largest x reached with binary y.
Binarization make_custom(const HPolytope& body);

Classification classify(const Binarization& b);

/// sigma(y) = sum_i 2^pi(i) (y_i xor c_i) for some coordinate permutation pi and mask c.
bool is_log_up_to_symmetry(const HypercubePerm& perm);

/**
 * For an affine hypercube binarization: complement the coordinates so
 * that x = 0 sits at y = 0, and return the resulting coefficients sorted.
 * nullopt when b is not affine or not hypercube.
 */
std::optional<QVector> affine_normal_coefficients(const Binarization& b);

/// All integer a in {0, ..., v-1}^d with {a·(x)_2 : 0 <= x < v} = {0, ..., v-1}:
/// the linear binarizations projecting onto the truncated hypercube.
std::vector<std::vector<long>> linear_trunc_coefficients(unsigned v, unsigned d);

}  // namespace binext
