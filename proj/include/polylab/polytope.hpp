#pragma once

#include "polylab/hull.hpp"
#include "polylab/integer.hpp"
#include "polylab/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace polylab {

using LatticePoint = IntVector;

/**
 * Coordinate chart of the affine hull of a point set: projecting onto the
 * pivot coordinates is injective on the hull, and `lift` recovers the
 * remaining coordinates from the affine-hull equations.
 */
class AffineChart {
public:
    AffineChart() = default;
    explicit AffineChart(std::span<const LatticePoint> points);

    std::size_t ambient_dim() const { return ambient_; }
    long dim() const { return static_cast<long>(coords_.size()); }
    const std::vector<std::size_t>& coords() const { return coords_; }
    /// Equations <a, x> = b of the affine hull (m - d of them).
    const std::vector<Facet>& equations() const { return equations_; }

    LatticePoint project(std::span<const Int> x) const;
    /// Point of aff(dilation * points) with the given chart coordinates.
    RatVector lift(std::span<const Int> y, const Int& dilation = Int(1)) const;

private:
    std::size_t ambient_ = 0;
    std::vector<std::size_t> coords_;
    std::vector<std::size_t> other_;
    std::vector<Facet> equations_;
    std::optional<LinearSolver> other_solver_;
};

/// Facets of conv(points) inside its affine hull, as index sets of the points
/// lying on each facet. Empty for dimension <= 0.
std::vector<std::vector<std::size_t>> relative_facet_points(std::span<const LatticePoint> points);

struct HalfspaceRep {
    std::vector<Facet> facets;     // <a, x> <= b
    std::vector<Facet> equations;  // <a, x> = b, present when dim < ambient dim
};

class ScaleGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Candidate-point budget for bounding-box scans; POLYLAB_SCALE_GUARD overrides 1e8.
Int scan_budget();

class LatticePolytope {
public:
    /// Convex hull of the points. Non-extreme input points are kept in
    /// `non_vertex_points()` for use as triangulation configuration points.
    static LatticePolytope from_points(std::vector<LatticePoint> points);

    std::size_t ambient_dim() const { return chart_.ambient_dim(); }
    long dim() const { return chart_.dim(); }
    bool full_dimensional() const { return dim() == static_cast<long>(ambient_dim()); }

    const std::vector<LatticePoint>& vertices() const { return vertices_; }
    const std::vector<LatticePoint>& non_vertex_points() const { return others_; }
    const HalfspaceRep& halfspaces() const { return rep_; }
    /// Vertex indices on each facet, parallel to halfspaces().facets.
    const std::vector<std::vector<std::size_t>>& facet_vertices() const { return incidence_; }
    const AffineChart& chart() const { return chart_; }
    /// Facet inequalities in chart coordinates (same order as halfspaces()).
    const std::vector<Facet>& chart_facets() const { return chart_facets_; }

private:
    AffineChart chart_;
    std::vector<LatticePoint> vertices_;
    std::vector<LatticePoint> others_;
    HalfspaceRep rep_;
    std::vector<Facet> chart_facets_;
    std::vector<std::vector<std::size_t>> incidence_;
};

/// Facet list; rejects 0-dimensional polytopes.
const HalfspaceRep& facets(const LatticePolytope& p);

enum class Membership { Closed, Interior };

/// Interior means the full-dimensional interior, so it is always false when
/// the polytope is not full-dimensional.
bool contains(const LatticePolytope& p, std::span<const Rat> x, Membership mode);
bool contains(const LatticePolytope& p, std::span<const Int> x, Membership mode);

/// Lattice points of nP in lexicographic order. For n = 0 this is {0}.
std::vector<LatticePoint> lattice_points(const LatticePolytope& p, unsigned long n);
Int count_lattice_points(const LatticePolytope& p, unsigned long n);

/// Strictly interior lattice points of nP; requires a full-dimensional polytope.
Int interior_count(const LatticePolytope& p, unsigned long n);
std::vector<LatticePoint> interior_points(const LatticePolytope& p, unsigned long n);

/// Lattice points on the boundary, in lexicographic order.
std::vector<LatticePoint> boundary_points(const LatticePolytope& p);

bool is_reflexive(const LatticePolytope& p);

/**
 * Checks degrees 2..max_degree (default dim - 1) by building the Minkowski
 * sums S_n = S_{n-1} + S_1 and comparing with the lattice points of nP.
 * Returns a lattice point of some nP that is not a sum of n points of P.
 */
std::optional<LatticePoint> find_non_representable(const LatticePolytope& p,
                                                    std::optional<unsigned long> max_degree = {});
bool is_integrally_closed(const LatticePolytope& p, std::optional<unsigned long> max_degree = {});

/// P x [0, 1] as a lattice polytope in ambient dimension m + 1.
LatticePolytope prism(const LatticePolytope& p);

}  // namespace polylab
