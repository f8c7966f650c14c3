#pragma once

#include "polylab/ehrhart.hpp"
#include "polylab/integer.hpp"
#include "polylab/polytope.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace polylab {

/// Linearly independent generators v_0..v_r spanning the parallelepiped over
/// the simplex <v_0, ..., v_r>.
class ParallelepipedSpec {
public:
    /// Throws std::invalid_argument naming the rank defect when the generators are dependent.
    explicit ParallelepipedSpec(std::vector<IntVector> generators);

    const std::vector<IntVector>& generators() const { return generators_; }
    /// r = dim of the simplex; the parallelepiped has dimension r + 1.
    long r() const { return static_cast<long>(generators_.size()) - 1; }
    std::size_t size() const { return generators_.size(); }
    std::size_t ambient_dim() const { return generators_.front().size(); }

    /// All 2^{r+1} subset sums, indexed by subset bitmask.
    std::vector<LatticePoint> vertex_sums() const;
    /// The closed parallelepiped as a lattice polytope.
    LatticePolytope polytope() const;

private:
    std::vector<IntVector> generators_;
};

enum class BoxMode { Open, HalfOpen };

struct BoxPoint {
    LatticePoint point;
    RatVector coeffs;  // lambda with point = sum lambda_i v_i
};

/**
 * Lattice points sum lambda_i v_i with lambda in (0,1)^k (Open) or [0,1)^k
 * (HalfOpen), sorted by point. Enumerated as cosets of the generator lattice
 * inside Z^m intersected with the span, via the Smith form of the generators.
 */
std::vector<BoxPoint> box_points(std::span<const IntVector> vectors, BoxMode mode);

/// Generator subsets are bitmasks: bit i set means v_i is in the subset.
using Subset = std::uint32_t;

struct BoxCensus {
    std::size_t generators = 0;
    /// b(G) = #bx(G), with b(empty) = 1.
    IntVector b;
    /// #Pi(G) = sum over G' subset of G of b(G').
    IntVector half_open;
    /// The open-box lattice points of each subset.
    std::vector<std::vector<LatticePoint>> open_points;

    const Int& b_of(Subset g) const { return b[g]; }
    Subset full() const { return static_cast<Subset>((Subset{1} << generators) - 1); }
};

/// One enumeration of Pi(full): every point lies in the open box of its coefficient support.
BoxCensus box_census(const ParallelepipedSpec& spec);

/// #(n * closed parallelepiped) = sum_F n^{|F|} #Pi(F).
Int closed_count(const ParallelepipedSpec& spec, unsigned long n);
Int closed_count(const BoxCensus& census, unsigned long n);

/// sum_G b(G) A(r, |G| - 1, t), as a window of length r + 2.
DeltaReport parallelepiped_delta(const ParallelepipedSpec& spec);
DeltaReport parallelepiped_delta(const BoxCensus& census);

/// b(full) = 1 and b(G) <= 1 for every G.
bool parallelepiped_is_reflexive_translate(const ParallelepipedSpec& spec);
bool parallelepiped_is_reflexive_translate(const BoxCensus& census);

}  // namespace polylab
