#pragma once

#include "binext/binarization.hpp"
#include "binext/extended_formulation.hpp"

#include <string>
#include <vector>

namespace binext {

/// {x in [0,2]^2 x R : h x1 + h x2 + x3 <= 2h, x3 <= 2h x1, x3 <= 2h x2, x3 >= 0}.
/// Throws NonPositiveH unless h > 0.
HPolytope make_pyramid(const Rational& h);

/// The pyramid with B^U(2) attached to x1 and x2.
ExtendedFormulation pyramid_formulation(const Rational& h);

/// {(x, y) in R x [0,1]^2 : x = y1 + y2, y1 <= 2 y2}: a binarization of
/// {0, 1, 2} with the fractional vertex (3/2, 1, 1/2).
Binarization make_non_natural_pair();

/// Expected artifacts of the pyramid formulation as functions of h.
struct PyramidExpected
{
    std::vector<QVector> vp;
    std::vector<QVector> vq;     ///< v1..v16 in table order
    std::vector<QVector> proj;
    std::vector<std::vector<int>> a_rows;  ///< rows for v4-v7, v11-v16
    long lpr = 2;
    std::vector<std::string> cover;
    std::vector<QVector> after;  ///< projection after convexifying the cover
};

PyramidExpected pyramid_expected(const Rational& h);

struct ArtifactCheck
{
    std::string name;
    bool pass = false;
    std::string detail;
};

struct PyramidReport
{
    Rational h;
    VPolytope vp;
    VPolytope vq;
    std::vector<QVector> proj;
    std::vector<std::vector<int>> a_rows;
    long lpr = 0;
    std::vector<std::string> cover;
    std::vector<QVector> after;
    std::vector<ArtifactCheck> checks;

    bool pass() const;
};

PyramidReport reproduce_pyramid(const Rational& h);

}  // namespace binext
