#pragma once

// Facet enumeration for full-dimensional point sets.

#include "polylab/integer.hpp"

#include <compare>
#include <span>
#include <vector>

namespace polylab {

/// <normal, x> <= offset with a primitive integer normal.
struct Facet {
    IntVector normal;
    Int offset;

    bool operator==(const Facet&) const = default;
    std::weak_ordering operator<=>(const Facet&) const = default;
};

/**
 * Facets of conv(points) for points spanning R^k affinely (k = point length).
 * Double description on the homogenized cone: each facet is an extreme ray of
 * { z : z . (p, 1) >= 0 for all p }. Output is sorted.
 */
std::vector<Facet> full_dimensional_facets(std::span<const IntVector> points);

/// Affine dimension of a point set (-1 when empty).
long affine_dimension(std::span<const IntVector> points);

}  // namespace polylab
